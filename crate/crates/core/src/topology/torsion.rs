use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};
use crate::exact::Gf2;

use super::groups::FGAbelianGroup;
use super::steenrod::{w, SWPolynomial};

/// Largest degree of the `H*(BSO(4); Z)` table produced by [`bso4_group`].
pub const MAX_TABLE_DEGREE: u32 = 8;

/// Exponents of `ν^a e^b p^c`.
pub type TorsionMonomial = (u32, u32, u32);

/// An element of `Z[ν, e, p]/(2ν)` with `deg ν = 3`, `deg e = deg p = 4`.
/// Coefficients of monomials divisible by `ν` live in `Z/2` and are stored
/// as 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TorsionRingElement {
    terms: BTreeMap<TorsionMonomial, BigInt>,
}

fn normalize_coeff(m: &TorsionMonomial, c: BigInt) -> BigInt {
    if m.0 > 0 {
        c.mod_floor(&BigInt::from(2))
    } else {
        c
    }
}

impl TorsionRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: TorsionMonomial, c: impl Into<BigInt>) -> Self {
        Self::zero().with_term(m, c.into())
    }

    pub fn one() -> Self {
        Self::monomial((0, 0, 0), 1)
    }

    pub fn nu() -> Self {
        Self::monomial((1, 0, 0), 1)
    }

    pub fn e() -> Self {
        Self::monomial((0, 1, 0), 1)
    }

    pub fn p() -> Self {
        Self::monomial((0, 0, 1), 1)
    }

    fn with_term(mut self, m: TorsionMonomial, c: BigInt) -> Self {
        let sum = self.terms.remove(&m).unwrap_or_default() + c;
        let sum = normalize_coeff(&m, sum);
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
        self
    }

    pub fn terms(&self) -> &BTreeMap<TorsionMonomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(m: &TorsionMonomial) -> u32 {
        3 * m.0 + 4 * m.1 + 4 * m.2
    }

    pub fn add(&self, other: &Self) -> Self {
        other
            .terms
            .iter()
            .fold(self.clone(), |acc, (m, c)| acc.with_term(*m, c.clone()))
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        self.terms
            .iter()
            .fold(Self::zero(), |acc, (m, c)| acc.with_term(*m, c * &k))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                acc = acc.with_term((a.0 + b.0, a.1 + b.1, a.2 + b.2), x * y);
            }
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Smallest `k > 0` with `k x = 0`, or `None` if `x` has infinite order.
    pub fn additive_order(&self) -> Option<u32> {
        if self.is_zero() {
            return Some(1);
        }
        self.terms.keys().all(|m| m.0 > 0).then_some(2)
    }

    /// Reduction mod 2 along `ν ↦ w3`, `e ↦ w4`, `p ↦ w2²`.
    pub fn reduce_mod2(&self) -> SWPolynomial {
        let (nu, e, p) = (w(3), w(4), w(2).pow(2));
        let mut acc = w(0).scale(&Gf2(false));
        for ((a, b, c), k) in &self.terms {
            if k.is_odd() {
                let term = &(&nu.pow(*a) * &e.pow(*b)) * &p.pow(*c);
                acc = &acc + &term;
            }
        }
        acc
    }
}

impl fmt::Display for TorsionRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b, c), k)) in self.terms.iter().rev().enumerate() {
            let sign = match (i, k.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let k = k.abs();
            let mut factors = Vec::new();
            if !k.is_one() || (a, b, c) == (0, 0, 0) {
                factors.push(k.to_string());
            }
            for (name, e) in [("nu", a), ("e", b), ("p", c)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{sign}{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// `H^d(BSO(4); Z)` read off the monomial basis of `Z[ν, e, p]/(2ν)`.
pub fn bso4_group(degree: u32) -> Result<FGAbelianGroup> {
    if degree > MAX_TABLE_DEGREE {
        return Err(invalid(format!(
            "degree {degree} exceeds the supported table (≤ {MAX_TABLE_DEGREE})"
        )));
    }
    let (mut free, mut two_torsion) = (0usize, 0usize);
    for a in 0..=degree / 3 {
        for b in 0..=degree / 4 {
            for c in 0..=degree / 4 {
                if TorsionRingElement::degree(&(a, b, c)) == degree {
                    if a == 0 {
                        free += 1;
                    } else {
                        two_torsion += 1;
                    }
                }
            }
        }
    }
    FGAbelianGroup::from_i64(free, &vec![2; two_torsion])
}
