//! Concrete algebras: the classical prototypical examples, composition and
//! structurable algebras, the Kantor construction and the exceptional series.

pub mod albert;
pub mod classical;
pub mod composition;
pub mod exceptional;
pub mod involutive;
pub mod kantor;
pub mod structurable;

pub use albert::{albert_data, verify_quadratic_factor, AlbertData};
pub use classical::{classical_example, gl_example, so_example, sp_example, ClassicalExample, ClassicalFamily};
pub use composition::{cayley_dickson, CompositionAlgebra};
pub use exceptional::{exceptional_series, ExceptionalModel};
pub use involutive::{
    check_prototypical_d, check_skew_form_symmetric, outer_derivations, prototypical, HermitianModule,
    InvolutiveAlgebra, OuterDerivations,
};
pub use kantor::{kantor, KantorAlgebra};
pub use structurable::{
    check_epsilon_convention, check_unit_of_s, epsilon, inverse_skew, jternary_from_structurable,
    tensor_structurable, Instrl, StructurableAlgebra,
};

use crate::linalg::{Space, SparseVec};

/// A readable label for a vector: the basis label when it is a single basis
/// vector, otherwise a signed combination such as `E12+E21'` or `2e1-e3`.
pub fn combo_label(space: &Space, v: &SparseVec) -> String {
    let entries = v.entries();
    if entries.len() == 1 && entries[0].1.is_one() {
        return space.label(entries[0].0).to_string();
    }
    let mut out = String::new();
    for (k, (i, c)) in entries.iter().enumerate() {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        if mag != "1" {
            out.push_str(&mag);
        }
        out.push_str(space.label(*i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
