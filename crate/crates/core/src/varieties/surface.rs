use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{invalid, Error, Result};
use crate::ring::IntersectionRing;

use super::Variety;

/// Numerical invariants of a smooth projective surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SurfaceInvariants {
    pub k2: i64,
    pub chi_top: i64,
    pub chi_o: i64,
    pub q: i64,
    pub h20: i64,
    pub h11: i64,
}

impl SurfaceInvariants {
    pub fn satisfies_noether(&self) -> bool {
        12 * self.chi_o == self.k2 + self.chi_top
    }

    pub fn is_consistent(&self) -> bool {
        self.satisfies_noether()
            && self.h20 == self.chi_o - 1 + self.q
            && self.h11 == self.chi_top - 2 + 4 * self.q - 2 * self.h20
            && self.h11 >= 0
            && self.h20 >= 0
    }

    /// Reads `K²`, `χ_top` and `χ(O)` off a surface and checks Noether's
    /// formula against the independently computed `χ(O)`.
    pub fn from_variety<R: IntersectionRing>(v: &Variety<R>, q: i64) -> Result<Self> {
        if v.dim() != 2 {
            return Err(invalid(format!("{} has dimension {}", v.name(), v.dim())));
        }
        let k = v.canonical();
        let k2 = small(&v.integrate_integer("K²", &v.ring().mul(&k, &k))?)?;
        let chi_top = small(&v.chi_top()?)?;
        let chi_o = small(&v.chi_structure()?)?;
        let inv = surface_hodge(k2, chi_top, q)?;
        if inv.chi_o != chi_o {
            return Err(Error::Inconsistent(format!(
                "Noether gives χ(O) = {}, Riemann–Roch gives {chi_o}",
                inv.chi_o
            )));
        }
        Ok(inv)
    }
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::ScaleExceeded(format!("{x} does not fit in 64 bits")))
}

/// Hodge numbers from `K²`, `χ_top` and the irregularity.
pub fn surface_hodge(k2: i64, chi_top: i64, q: i64) -> Result<SurfaceInvariants> {
    if (k2 + chi_top) % 12 != 0 {
        return Err(Error::NonIntegral {
            what: "χ(O) = (K² + χ_top)/12".into(),
            value: format!("({k2} + {chi_top})/12"),
        });
    }
    let chi_o = (k2 + chi_top) / 12;
    let h20 = chi_o - 1 + q;
    let h11 = chi_top - 2 + 4 * q - 2 * h20;
    if h20 < 0 || h11 < 0 {
        return Err(invalid(format!(
            "negative Hodge numbers h20 = {h20}, h11 = {h11}"
        )));
    }
    Ok(SurfaceInvariants {
        k2,
        chi_top,
        chi_o,
        q,
        h20,
        h11,
    })
}

/// `K²` and `χ_top`, the two numbers multiplicative under étale covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverNumbers {
    pub k2: i64,
    pub chi_top: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverDirection {
    CoverToQuotient,
    QuotientToCover,
}

/// Étale double cover of surfaces: both numbers double going up and halve
/// going down.
pub fn etale_double_cover(n: CoverNumbers, direction: CoverDirection) -> Result<CoverNumbers> {
    match direction {
        CoverDirection::QuotientToCover => Ok(CoverNumbers {
            k2: 2 * n.k2,
            chi_top: 2 * n.chi_top,
        }),
        CoverDirection::CoverToQuotient => {
            if n.k2 % 2 != 0 || n.chi_top % 2 != 0 {
                return Err(invalid(format!(
                    "({}, {}) cannot be the invariants of an étale double cover",
                    n.k2, n.chi_top
                )));
            }
            Ok(CoverNumbers {
                k2: n.k2 / 2,
                chi_top: n.chi_top / 2,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverKind {
    Etale,
    /// Branched along a divisor of class `branch · H`.
    Ramified {
        branch: BigRational,
    },
}

/// A polarized variety known only numerically: dimension, `H^dim` and
/// `K = canonical · H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedModel {
    pub dim: usize,
    pub degree: BigInt,
    pub canonical: BigRational,
}

impl PolarizedModel {
    /// A degree-`d` hypersurface in `P^{n}`.
    pub fn hypersurface(n: usize, d: i64) -> Result<Self> {
        if n == 0 || d <= 0 {
            return Err(invalid("hypersurface needs n ≥ 1 and d ≥ 1"));
        }
        Ok(PolarizedModel {
            dim: n - 1,
            degree: BigInt::from(d),
            canonical: BigRational::from_integer(BigInt::from(d - n as i64 - 1)),
        })
    }

    /// Intersection with `c` general members of `|H|`.
    pub fn sections(&self, c: usize) -> Result<Self> {
        if c > self.dim {
            return Err(invalid(format!(
                "cannot cut a {}-fold by {c} hyperplanes",
                self.dim
            )));
        }
        Ok(PolarizedModel {
            dim: self.dim - c,
            degree: self.degree.clone(),
            canonical: &self.canonical + BigRational::from_integer(BigInt::from(c)),
        })
    }

    /// Double cover with `H` pulled back: the degree doubles and
    /// `K = π^*(K + branch/2)`.
    pub fn double_cover(&self, kind: &CoverKind) -> Self {
        let half_branch = match kind {
            CoverKind::Etale => BigRational::from_integer(BigInt::from(0)),
            CoverKind::Ramified { branch } => branch / BigRational::from_integer(BigInt::from(2)),
        };
        PolarizedModel {
            dim: self.dim,
            degree: &self.degree * 2,
            canonical: &self.canonical + half_branch,
        }
    }
}
