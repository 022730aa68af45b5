//! Characteristic classes of `BSO(4)`: Stiefel–Whitney classes with Steenrod
//! squares, the integral ring `Z[ν, e, p]/(2ν)`, finitely generated abelian
//! groups and exactness of sequences of them.

mod exact;
mod groups;
mod steenrod;
mod torsion;

pub use exact::{bgo4_gysin_instance, check_exact, exactness_at, ExactSequenceInstance};
pub use groups::FGAbelianGroup;
pub use steenrod::{square_nonvanishing, steenrod_sq, sw_ring, total_square, w, SWPolynomial};
pub use torsion::{bso4_group, TorsionRingElement, MAX_TABLE_DEGREE};

use serde::Serialize;

/// Verdict of the squaring obstruction for a degree-3 torsion class `α`: if
/// `ᾱ² ≠ 0` mod 2, `α` is not of strong coniveau ≥ 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ObstructionVerdict {
    NotStrongConiveau,
    NoConclusion,
}

impl ObstructionVerdict {
    pub fn describe(&self) -> &'static str {
        match self {
            ObstructionVerdict::NotStrongConiveau => "not of strong coniveau ≥ 1",
            ObstructionVerdict::NoConclusion => "obstruction vanishes, no conclusion",
        }
    }
}

pub fn coniveau_obstruction(square_mod2_nonzero: bool) -> ObstructionVerdict {
    if square_mod2_nonzero {
        ObstructionVerdict::NotStrongConiveau
    } else {
        ObstructionVerdict::NoConclusion
    }
}

/// `Sq^{deg x}(x) = x²` for homogeneous `x`.
pub fn top_square_is_cup_square(x: &SWPolynomial) -> bool {
    match x.max_degree() {
        None => true,
        Some(d) => steenrod_sq(d, x) == x * x,
    }
}
