//! Symmetric determinantal loci `Z_{r,n}` of quadrics of rank `r` in `n`
//! variables, their double covers `W_{r,n}` and linear sections
//! `X = W_{r,n} ∩ H_1 ∩ ... ∩ H_c`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::charclass::{dual, sym2};
use crate::error::{invalid, Error, Result};
use crate::exact::{as_integer, binomial};
use crate::ring::IntersectionRing;
use crate::schubert::{tautological_chern, SchubertRing, Tautological};
use crate::varieties::BundleRing;

/// Largest Grassmannian dimension `k(n-k)` handled by the degree computation.
pub const MAX_GRASSMANNIAN_DIM: usize = 12;

fn check_range(r: i64, n: i64) -> Result<()> {
    if r < 1 || r > n {
        return Err(invalid(format!("need 1 ≤ r ≤ n, got r = {r}, n = {n}")));
    }
    Ok(())
}

/// `dim Z_{r,n} = rn - r²/2 + r/2 - 1` inside `P(Sym² V^∨)`.
pub fn dim_rank_locus(r: i64, n: i64) -> Result<i64> {
    check_range(r, n)?;
    Ok(r * n - r * (r - 1) / 2 - 1)
}

/// Degree of `Z̄_{r,n}`, computed as the pushforward of `ζ^{dim Z}` from the
/// resolution `P(Sym² Q^∨) → Gr(n-r, n)`.
pub fn degree_rank_locus(r: i64, n: i64) -> Result<BigInt> {
    check_range(r, n)?;
    if r == n {
        return Ok(BigInt::from(1));
    }
    let (k, r, n) = ((n - r) as usize, r as usize, n as usize);
    if k * r > MAX_GRASSMANNIAN_DIM {
        return Err(Error::ScaleExceeded(format!(
            "Gr({k},{n}) has dimension {} > {MAX_GRASSMANNIAN_DIM}",
            k * r
        )));
    }
    let gr = SchubertRing::grassmannian(k, n)?;
    let q_dual = dual(&gr, &tautological_chern(&gr, Tautological::Quotient));
    let e = sym2(&gr, &q_dual)?;
    let bundle = BundleRing::new(gr, &e)?;
    let dim = dim_rank_locus(r as i64, n as i64)? as usize;
    debug_assert_eq!(bundle.dim(), dim);
    let top = bundle.pow(&bundle.zeta(), dim);
    as_integer(&bundle.integrate(&top))
        .ok_or_else(|| Error::Inconsistent("non-integral degree".into()))
}

/// Closed-form product `∏_{i<n-r} C(n+i, n-r-i) / C(2i+1, i)`, used as an
/// independent cross-check of [`degree_rank_locus`].
pub fn degree_rank_locus_closed_form(r: i64, n: i64) -> Result<BigInt> {
    check_range(r, n)?;
    let q: BigRational = (0..n - r)
        .map(|i| BigRational::new(binomial(n + i, n - r - i), binomial(2 * i + 1, i)))
        .product();
    as_integer(&q).ok_or_else(|| Error::Inconsistent(format!("product formula gave {q}")))
}

/// `N = min(2n - 1, dim W - c)`: restriction from `W_{r,n}` to `X` is an
/// isomorphism on cohomology below degree `N`.
pub fn lefschetz_range(r: i64, n: i64, c: i64) -> Result<i64> {
    Ok((2 * n - 1).min(dim_rank_locus(r, n)? - c))
}

/// Local model of `W_{r,n}` along its singular locus:
/// `A^{w+}(1) ⊕ A^{w-}(-1) ⊕ A^M(0)` with quotient the affine cone over
/// `P^s × P^s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LunaSlice {
    pub weight_plus: i64,
    pub weight_minus: i64,
    /// `s` in the Segre product `P^s × P^s`.
    pub segre_factor: i64,
    pub cone_dim: i64,
    pub m: i64,
    pub dim_w: i64,
}

impl LunaSlice {
    pub fn cone_description(&self) -> String {
        format!(
            "affine cone over the Segre embedding of P{s} x P{s}",
            s = self.segre_factor
        )
    }
}

pub fn luna_slice(r: i64, n: i64) -> Result<LunaSlice> {
    check_range(r, n)?;
    if r < 4 || r % 2 != 0 {
        return Err(invalid(format!("Luna slice needs even r ≥ 4, got {r}")));
    }
    let w = n - r + 2;
    let s = n - r + 1;
    let cone_dim = 2 * s + 1;
    let dim_w = dim_rank_locus(r, n)?;
    Ok(LunaSlice {
        weight_plus: w,
        weight_minus: w,
        segre_factor: s,
        cone_dim,
        m: dim_w - cone_dim,
        dim_w,
    })
}

/// Linear section `X` of `W_{r,n}` by `c` hyperplanes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankLocusSpec {
    pub r: i64,
    pub n: i64,
    pub c: i64,
}

impl RankLocusSpec {
    pub fn new(r: i64, n: i64, c: i64) -> Result<Self> {
        check_range(r, n)?;
        if r % 2 != 0 {
            return Err(invalid(format!("r must be even, got {r}")));
        }
        let dim = dim_rank_locus(r, n)?;
        if c < 0 || c > dim {
            return Err(invalid(format!("need 0 ≤ c ≤ {dim}, got c = {c}")));
        }
        Ok(RankLocusSpec { r, n, c })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Smoothness {
    Smooth,
    IsolatedSingularities,
    Singular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CanonicalType {
    Fano,
    CalabiYau,
    GeneralType,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Fano,
    CalabiYau,
    GeneralType,
    Singular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConiveauVerdict {
    /// `Ñ¹H³(X, Z) = 0 ≠ N¹H³(X, Z)`.
    NotStrongConiveau,
    /// The squaring obstruction vanishes and nothing is concluded.
    ObstructionVanishes,
    NoClaim,
}

impl ConiveauVerdict {
    pub fn describe(&self) -> &'static str {
        match self {
            ConiveauVerdict::NotStrongConiveau => {
                "H^3 torsion class is of coniveau 1 but not of strong coniveau 1"
            }
            ConiveauVerdict::ObstructionVanishes => {
                "topological obstruction vanishes; strong coniveau undecided"
            }
            ConiveauVerdict::NoClaim => "no claim in this range",
        }
    }
}

/// A report field with its justification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cited<T> {
    pub value: T,
    pub citation: &'static str,
}

fn cited<T>(value: T, citation: &'static str) -> Cited<T> {
    Cited { value, citation }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlannerReport {
    pub spec: RankLocusSpec,
    pub dim_z: Cited<i64>,
    pub dim_w: Cited<i64>,
    pub dim_x: Cited<i64>,
    /// `None` beyond the supported Grassmannian scale.
    pub deg_z: Cited<Option<i64>>,
    /// `H^{dim X}` on `X`, twice the degree of `Z̄`.
    pub h_top: Cited<Option<i64>>,
    /// `K_X = k · H`.
    pub k_coefficient: Cited<i64>,
    pub canonical_type: Cited<CanonicalType>,
    pub classification: Cited<Classification>,
    /// `dim σ^{-1}(Z̄_{r-2,n}) ∩ X`, negative when empty.
    pub singular_locus_dim: Cited<i64>,
    pub smoothness: Cited<Smoothness>,
    pub singular_codim_in_w: Cited<i64>,
    pub equivariant_iso_bound: Cited<i64>,
    pub lefschetz_n: Cited<i64>,
    /// `r = 4` only: `H³(X, Z) = Z/2` predicted.
    pub torsion_window: Cited<Option<bool>>,
    /// `r = 4` only: the square of the torsion class survives.
    pub obstruction_window: Cited<Option<bool>>,
    pub coniveau: Cited<ConiveauVerdict>,
    pub luna: Cited<Option<LunaSlice>>,
    /// For `r ≥ 6`: the closed form `(n-r)(r-4)/2 + r/2 - 3` and the count
    /// `dim Z_{r-2,n} - rn/2 + 1`, which must agree.
    pub fano_singularity_bound: Cited<Option<(i64, i64)>>,
    pub notes: Vec<&'static str>,
}

pub fn plan(spec: RankLocusSpec) -> Result<PlannerReport> {
    let RankLocusSpec { r, n, c } = RankLocusSpec::new(spec.r, spec.n, spec.c)?;
    let dim_z = dim_rank_locus(r, n)?;
    let dim_x = dim_z - c;
    let deg_z = match degree_rank_locus(r, n) {
        Ok(d) => Some(
            d.to_i64()
                .ok_or_else(|| Error::ScaleExceeded(d.to_string()))?,
        ),
        Err(Error::ScaleExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    let k = c - r * n / 2;
    let canonical_type = match k.signum() {
        -1 => CanonicalType::Fano,
        0 => CanonicalType::CalabiYau,
        _ => CanonicalType::GeneralType,
    };
    let singular_locus_dim = if r >= 4 {
        dim_rank_locus(r - 2, n)? - c
    } else {
        -1
    };
    let smoothness = match singular_locus_dim {
        d if d < 0 => Smoothness::Smooth,
        0 => Smoothness::IsolatedSingularities,
        _ => Smoothness::Singular,
    };
    let classification = match (smoothness, canonical_type) {
        (Smoothness::Smooth, CanonicalType::Fano) => Classification::Fano,
        (Smoothness::Smooth, CanonicalType::CalabiYau) => Classification::CalabiYau,
        (Smoothness::Smooth, CanonicalType::GeneralType) => Classification::GeneralType,
        _ => Classification::Singular,
    };
    let lefschetz_n = lefschetz_range(r, n, c)?;
    let (torsion_window, obstruction_window) = if r == 4 {
        (Some(c <= 4 * n - 11), Some(c <= 4 * n - 13))
    } else {
        (None, None)
    };
    let coniveau = if r == 4 && c == 2 * n - 1 && smoothness == Smoothness::Smooth {
        if n >= 6 {
            ConiveauVerdict::NotStrongConiveau
        } else {
            ConiveauVerdict::ObstructionVanishes
        }
    } else {
        ConiveauVerdict::NoClaim
    };
    let luna = if r >= 4 {
        Some(luna_slice(r, n)?)
    } else {
        None
    };
    let fano_singularity_bound = if r >= 6 {
        let closed = (n - r) * (r - 4) / 2 + r / 2 - 3;
        let counted = dim_rank_locus(r - 2, n)? - r * n / 2 + 1;
        if closed != counted {
            return Err(Error::Inconsistent(format!(
                "singularity bound {closed} differs from dimension count {counted}"
            )));
        }
        Some((closed, counted))
    } else {
        None
    };
    let mut notes = Vec::new();
    if (r, n, c) == (4, 4, 6) {
        notes.push(
            "Artin–Mumford threefold: double cover of P3 branched along a quartic symmetroid",
        );
    }
    if r >= 6 && c < r * n / 2 {
        notes.push("Fano sections with r ≥ 6 meet the singular locus of W");
    }
    Ok(PlannerReport {
        spec: RankLocusSpec { r, n, c },
        dim_z: cited(dim_z, "dimension of the symmetric rank locus"),
        dim_w: cited(dim_z, "finite double cover of the rank locus closure"),
        dim_x: cited(dim_x, "general linear section of W"),
        deg_z: cited(
            deg_z,
            "pushforward from the resolution P(Sym² Q^∨) over Gr(n-r, n)",
        ),
        h_top: cited(
            deg_z.map(|d| 2 * d),
            "degree doubles under the double cover",
        ),
        k_coefficient: cited(k, "canonical class of W is -(rn/2) H; adjunction adds c H"),
        canonical_type: cited(canonical_type, "sign of the canonical coefficient"),
        classification: cited(
            classification,
            "smoothness verdict combined with the sign of K",
        ),
        singular_locus_dim: cited(
            singular_locus_dim,
            "singular locus of W is the preimage of the rank r-2 locus",
        ),
        smoothness: cited(
            smoothness,
            "Bertini: general sections avoid loci of dimension below c",
        ),
        singular_codim_in_w: cited(n - r + 2, "codimension of the singular locus in W"),
        equivariant_iso_bound: cited(
            2 * (n - r + 2) - 1,
            "removing a codimension-m locus preserves cohomology below 2m - 1",
        ),
        lefschetz_n: cited(lefschetz_n, "Lefschetz range min(2n - 1, dim W - c)"),
        torsion_window: cited(torsion_window, "H³(X, Z) = Z/2 when c ≤ 4n - 11"),
        obstruction_window: cited(
            obstruction_window,
            "square of the torsion class survives when c ≤ 4n - 13",
        ),
        coniveau: cited(
            coniveau,
            "squaring obstruction to strong coniveau for r = 4, c = 2n - 1",
        ),
        luna: cited(
            luna,
            "Luna slice weights n-r+2; M = dim W - dim C is derived",
        ),
        fano_singularity_bound: cited(
            fano_singularity_bound,
            "dimension of the singular part of a Fano section for r ≥ 6",
        ),
        notes,
    })
}

impl PlannerReport {
    pub fn k_display(&self) -> String {
        match self.k_coefficient.value {
            0 => "0".into(),
            1 => "H".into(),
            -1 => "-H".into(),
            k => format!("{k}H"),
        }
    }

    pub fn h3_prediction(&self) -> Option<&'static str> {
        match (self.torsion_window.value, self.smoothness.value) {
            (Some(true), Smoothness::Smooth) => Some("Z/2"),
            _ => None,
        }
    }
}
