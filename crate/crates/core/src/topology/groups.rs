use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exact::{smith_normal_form, IntegerMatrix};

/// `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | d_2 | ... | d_k` and `d_1 ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FGAbelianGroup {
    free_rank: usize,
    #[serde(serialize_with = "serialize_orders")]
    torsion: Vec<BigInt>,
}

fn serialize_orders<S: serde::Serializer>(
    v: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

impl FGAbelianGroup {
    /// Any list of positive cyclic orders; the result is in canonical form.
    pub fn new(free_rank: usize, orders: &[BigInt]) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|d| !d.is_positive()) {
            return Err(invalid(format!("cyclic order {bad} must be positive")));
        }
        let n = orders.len();
        let m = IntegerMatrix::diagonal(n, n, orders);
        let torsion = smith_normal_form(&m)
            .diagonal
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        Ok(FGAbelianGroup { free_rank, torsion })
    }

    pub fn from_i64(free_rank: usize, orders: &[i64]) -> Result<Self> {
        let orders: Vec<BigInt> = orders.iter().map(|&d| BigInt::from(d)).collect();
        Self::new(free_rank, &orders)
    }

    pub fn trivial() -> Self {
        FGAbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: i64) -> Result<Self> {
        Self::from_i64(0, &[order])
    }

    /// Cokernel of an integer matrix, `Z^rows / im(m)`.
    pub fn cokernel(m: &IntegerMatrix) -> Self {
        let snf = smith_normal_form(m);
        let rank = snf.rank();
        let torsion = snf
            .diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .map(|d| d.abs())
            .collect();
        FGAbelianGroup {
            free_rank: m.rows() - rank,
            torsion,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Number of generators of the standard presentation: free ones first,
    /// then one per cyclic factor.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of each standard generator, `0` for free ones.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        std::iter::repeat_n(BigInt::zero(), self.free_rank)
            .chain(self.torsion.iter().cloned())
            .collect()
    }

    /// Square diagonal relation matrix of the standard presentation.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let n = self.generator_count();
        IntegerMatrix::diagonal(n, n, &self.generator_orders())
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
