use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite-dimensional vector space given by an ordered, labelled basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Space {
    labels: Vec<String>,
}

impl Space {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Space { labels })
    }

    /// Space with labels `{prefix}0 .. {prefix}{dim-1}`.
    pub fn numbered(prefix: &str, dim: usize) -> Self {
        Space { labels: (0..dim).map(|i| format!("{prefix}{i}")).collect() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Left-factor-major tensor product, labels `u⊗v`.
    pub fn tensor(&self, other: &Space) -> Space {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for u in &self.labels {
            for v in &other.labels {
                labels.push(format!("{u}⊗{v}"));
            }
        }
        Space { labels }
    }

    /// Direct sum in summand order. Duplicate labels are rejected.
    pub fn direct_sum(parts: &[&Space]) -> Result<Space> {
        Space::new(parts.iter().flat_map(|s| s.labels.iter().cloned()))
    }
}

/// Free function form of [`Space::tensor`].
pub fn tensor_space(u: &Space, v: &Space) -> Space {
    u.tensor(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_is_left_major() {
        let u = Space::new(["u1", "u2"]).unwrap();
        let v = Space::new(["v1", "v2", "v3"]).unwrap();
        let t = tensor_space(&u, &v);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.labels()[..4], ["u1⊗v1", "u1⊗v2", "u1⊗v3", "u2⊗v1"]);
    }

    #[test]
    fn tensor_with_zero_space() {
        let u = Space::new(Vec::<String>::new()).unwrap();
        assert_eq!(tensor_space(&u, &Space::numbered("v", 3)).dim(), 0);
    }

    #[test]
    fn sl_v_tensor_one_dim_jordan() {
        let sl = Space::new(["E", "H", "F"]).unwrap();
        let j = Space::new(["1"]).unwrap();
        assert_eq!(sl.tensor(&j).dim(), 3);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(Space::new(["a", "a"]), Err(Error::DuplicateLabel(_))));
    }
}
