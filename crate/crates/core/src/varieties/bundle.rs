use std::fmt;

use num_rational::BigRational;

use crate::charclass::{inverse_series, ChernData};
use crate::error::{invalid, Result};
use crate::ring::IntersectionRing;

/// Chow ring of the projective bundle of lines `P(E) → B`.
///
/// With `ζ = c_1(O(1))` the ring is `A(B)[ζ] / (Σ c_i(E) ζ^{r-i})`. Elements
/// are stored as `Σ_{j<r} a_j ζ^j` with `a_j ∈ A(B)`, so the pushforward of an
/// element is its `ζ^{r-1}` coefficient.
#[derive(Clone)]
pub struct BundleRing<R: IntersectionRing> {
    base: R,
    rank: usize,
    chern: Vec<R::Elem>,
}

/// An element of a [`BundleRing`].
#[derive(Clone, PartialEq)]
pub struct BundleElem<E> {
    coeffs: Vec<E>,
}

impl<E> BundleElem<E> {
    /// Coefficient of `ζ^j` for `j < rank`.
    pub fn coefficient(&self, j: usize) -> &E {
        &self.coeffs[j]
    }
}

impl<E: fmt::Debug> fmt::Debug for BundleElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})*z^{j}")?;
        }
        Ok(())
    }
}

impl<R: IntersectionRing> BundleRing<R> {
    /// `e` must have rank at least 1.
    pub fn new(base: R, e: &ChernData<R::Elem>) -> Result<Self> {
        let rank = e.rank();
        if rank == 0 {
            return Err(invalid("projective bundle of a rank-0 bundle"));
        }
        let chern = (0..=rank)
            .map(|i| {
                e.components()
                    .get(i)
                    .cloned()
                    .unwrap_or_else(|| base.zero())
            })
            .collect();
        Ok(BundleRing { base, rank, chern })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `Σ_j raw[j] ζ^j` of any length via the Grothendieck relation.
    fn reduce(&self, mut raw: Vec<R::Elem>) -> BundleElem<R::Elem> {
        let r = self.rank;
        while raw.len() > r {
            let top = raw.pop().expect("nonempty");
            let m = raw.len();
            if self.base.is_zero(&top) {
                continue;
            }
            for i in 1..=r {
                if self.base.is_zero(&self.chern[i]) {
                    continue;
                }
                let t = self.base.mul(&self.chern[i], &top);
                raw[m - i] = self.base.sub(&raw[m - i], &t);
            }
        }
        raw.resize(r, self.base.zero());
        BundleElem { coeffs: raw }
    }

    pub fn pullback(&self, x: &R::Elem) -> BundleElem<R::Elem> {
        self.reduce(vec![x.clone()])
    }

    pub fn zeta(&self) -> BundleElem<R::Elem> {
        let mut raw = vec![self.base.zero(); 2];
        raw[1] = self.base.one();
        self.reduce(raw)
    }

    pub fn pushforward(&self, x: &BundleElem<R::Elem>) -> R::Elem {
        x.coeffs[self.rank - 1].clone()
    }

    /// Segre classes of `E` from the series inverse of `c(E)`, independent of
    /// the bundle ring's reduction.
    pub fn segre(&self) -> Result<Vec<R::Elem>> {
        inverse_series(&self.base, &self.chern)
    }
}

impl<R: IntersectionRing> IntersectionRing for BundleRing<R> {
    type Elem = BundleElem<R::Elem>;

    fn dim(&self) -> usize {
        self.base.dim() + self.rank - 1
    }

    fn zero(&self) -> Self::Elem {
        BundleElem {
            coeffs: vec![self.base.zero(); self.rank],
        }
    }

    fn one(&self) -> Self::Elem {
        self.pullback(&self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| self.base.add(x, y))
            .collect();
        BundleElem { coeffs }
    }

    fn scale(&self, a: &Self::Elem, c: &BigRational) -> Self::Elem {
        BundleElem {
            coeffs: a.coeffs.iter().map(|x| self.base.scale(x, c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut raw = vec![self.base.zero(); 2 * self.rank - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                raw[i + j] = self.base.add(&raw[i + j], &self.base.mul(x, y));
            }
        }
        self.reduce(raw)
    }

    fn homogeneous(&self, a: &Self::Elem, degree: usize) -> Self::Elem {
        let coeffs = a
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, x)| {
                if degree >= j {
                    self.base.homogeneous(x, degree - j)
                } else {
                    self.base.zero()
                }
            })
            .collect();
        BundleElem { coeffs }
    }

    fn integrate(&self, a: &Self::Elem) -> BigRational {
        self.base.integrate(&self.pushforward(a))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.iter().all(|x| self.base.is_zero(x))
    }

    fn is_integral(&self, a: &Self::Elem) -> bool {
        a.coeffs.iter().all(|x| self.base.is_integral(x))
    }

    fn unit_coefficient(&self, a: &Self::Elem) -> BigRational {
        self.base.unit_coefficient(&a.coeffs[0])
    }
}
