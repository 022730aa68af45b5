//! Varieties as an intersection ring plus tangent data.
//!
//! Complete intersections are numerical: they live in the ambient ring with
//! a fundamental class `∏ D_i` multiplied into every integral, and tangent
//! class `c(T_ambient) / ∏ (1 + D_i)`.

mod bundle;
mod surface;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::charclass::{
    ch_line_bundle, ch_product, ch_scale, ch_sum, ch_to_chern, chern_to_ch, from_total,
    hrr_integrand, require_integer, tensor, trivial, whitney_quotient, whitney_sum, CharacterData,
    ChernData,
};
use crate::error::{invalid, Error, Result};
use crate::exact::rat;
use crate::ring::{IntersectionRing, TruncatedRing};
use crate::schubert::{tautological_chern, SchubertRing, Tautological};

pub use bundle::{BundleElem, BundleRing};
pub use surface::{
    etale_double_cover, surface_hodge, CoverDirection, CoverKind, CoverNumbers, PolarizedModel,
    SurfaceInvariants,
};

#[derive(Clone, Debug)]
pub struct Variety<R: IntersectionRing> {
    name: String,
    dim: usize,
    ring: R,
    tangent: ChernData<R::Elem>,
    fundamental: R::Elem,
    divisors: BTreeMap<String, R::Elem>,
}

impl<R: IntersectionRing> Variety<R> {
    /// A variety whose ring is its own Chow ring (fundamental class 1).
    pub fn new(name: impl Into<String>, ring: R, tangent: ChernData<R::Elem>) -> Result<Self> {
        if tangent.rank() != ring.dim() {
            return Err(invalid(format!(
                "tangent rank {} differs from ring dimension {}",
                tangent.rank(),
                ring.dim()
            )));
        }
        let fundamental = ring.one();
        Ok(Variety {
            name: name.into(),
            dim: ring.dim(),
            ring,
            tangent,
            fundamental,
            divisors: BTreeMap::new(),
        })
    }

    pub fn with_divisor(mut self, name: impl Into<String>, class: R::Elem) -> Self {
        self.divisors.insert(name.into(), class);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn tangent(&self) -> &ChernData<R::Elem> {
        &self.tangent
    }

    pub fn fundamental(&self) -> &R::Elem {
        &self.fundamental
    }

    pub fn divisor(&self, name: &str) -> Option<&R::Elem> {
        self.divisors.get(name)
    }

    pub fn divisors(&self) -> &BTreeMap<String, R::Elem> {
        &self.divisors
    }

    /// Degree of `x` against the fundamental class.
    pub fn integrate(&self, x: &R::Elem) -> BigRational {
        self.ring.integrate(&self.ring.mul(&self.fundamental, x))
    }

    pub fn integrate_integer(&self, what: &str, x: &R::Elem) -> Result<BigInt> {
        require_integer(what, &self.integrate(x))
    }

    /// `K = -c_1(T)`.
    pub fn canonical(&self) -> R::Elem {
        self.ring.neg(self.tangent.component(1))
    }

    /// Euler characteristic of a sheaf given by its Chern character.
    pub fn chi(&self, sheaf: &CharacterData<R::Elem>) -> Result<BigInt> {
        self.integrate_integer(
            "Euler characteristic",
            &hrr_integrand(&self.ring, sheaf, &self.tangent),
        )
    }

    pub fn chi_structure(&self) -> Result<BigInt> {
        self.chi(&chern_to_ch(&self.ring, &trivial(&self.ring, 1)))
    }

    /// `χ(O(D))` for a divisor class `D`.
    pub fn chi_line_bundle(&self, d: &R::Elem) -> Result<BigInt> {
        self.chi(&ch_line_bundle(&self.ring, d))
    }

    /// Gauss–Bonnet: `∫ c_dim(T)`.
    pub fn chi_top(&self) -> Result<BigInt> {
        let top = self
            .tangent
            .components()
            .get(self.dim)
            .cloned()
            .unwrap_or_else(|| self.ring.zero());
        self.integrate_integer("topological Euler characteristic", &top)
    }
}

/// Degree of a nonzero homogeneous element.
pub fn degree_of<R: IntersectionRing>(ring: &R, x: &R::Elem) -> Option<usize> {
    if ring.is_zero(x) {
        return None;
    }
    (0..=ring.dim()).find(|&d| ring.homogeneous(x, d) == *x)
}

pub fn projective_space(n: u32) -> Variety<TruncatedRing> {
    projective_product(&[n]).with_name(format!("P{n}"))
}

/// `P^{n_1} × ... × P^{n_m}` with hyperplane classes `h1, ..., hm`.
pub fn projective_product(dims: &[u32]) -> Variety<TruncatedRing> {
    let ring = TruncatedRing::projective_product(dims);
    let total = dims.iter().enumerate().fold(ring.one(), |acc, (i, &n)| {
        let f = ring.add(&ring.one(), &ring.var_at(i));
        ring.mul(&acc, &ring.pow(&f, n as usize + 1))
    });
    let rank = dims.iter().map(|&n| n as usize).sum();
    let tangent = from_total(&ring, rank, &total);
    let name = dims
        .iter()
        .map(|n| format!("P{n}"))
        .collect::<Vec<_>>()
        .join(" x ");
    let mut v = Variety::new(name, ring.clone(), tangent).expect("tangent rank is the dimension");
    for i in 0..dims.len() {
        v = v.with_divisor(format!("h{}", i + 1), ring.var_at(i));
    }
    v
}

impl<R: IntersectionRing> Variety<R> {
    fn with_name(mut self, name: String) -> Self {
        self.name = name;
        self
    }
}

/// `Gr(k, n)` with tangent bundle `S^∨ ⊗ Q`.
pub fn grassmannian(k: usize, n: usize) -> Result<Variety<SchubertRing>> {
    let ring = SchubertRing::grassmannian(k, n)?;
    let s_dual = tautological_chern(&ring, Tautological::DualSub);
    let q = tautological_chern(&ring, Tautological::Quotient);
    let tangent = tensor(&ring, &s_dual, &q)?;
    let sigma1 = ring.special(1);
    Ok(Variety::new(format!("Gr({k},{n})"), ring, tangent)?.with_divisor("sigma1", sigma1))
}

/// Pulls Chern data back along `P(E) → B`.
fn pull_chern<R: IntersectionRing>(
    ring: &BundleRing<R>,
    c: &ChernData<R::Elem>,
) -> ChernData<BundleElem<R::Elem>> {
    let mut comps: Vec<_> = c.components().iter().map(|x| ring.pullback(x)).collect();
    comps.resize(ring.dim() + 1, ring.zero());
    ChernData::new(c.rank(), comps)
}

/// `P(E)`, the bundle of lines in `E`, with `ζ = c_1(O(1))` registered as
/// divisor `"zeta"`. The relative tangent bundle is `π^*E ⊗ O(1) - O`.
pub fn projective_bundle<R: IntersectionRing + Clone>(
    base: &Variety<R>,
    e: &ChernData<R::Elem>,
) -> Result<Variety<BundleRing<R>>> {
    let ring = BundleRing::new(base.ring.clone(), e)?;
    let zeta = ring.zeta();
    let pulled_e = pull_chern(&ring, e);
    let twisted = ch_product(
        &ring,
        &chern_to_ch(&ring, &pulled_e),
        &ch_line_bundle(&ring, &zeta),
    );
    let minus_one = ch_scale(&ring, &chern_to_ch(&ring, &trivial(&ring, 1)), &rat(-1));
    let relative = ch_to_chern(&ring, &ch_sum(&ring, &twisted, &minus_one))?;
    let tangent = whitney_sum(&ring, &pull_chern(&ring, &base.tangent), &relative);
    let mut divisors: BTreeMap<String, _> = base
        .divisors
        .iter()
        .map(|(k, v)| (k.clone(), ring.pullback(v)))
        .collect();
    divisors.insert("zeta".into(), zeta);
    Ok(Variety {
        name: format!("P(E) over {}", base.name),
        dim: ring.dim(),
        fundamental: ring.pullback(&base.fundamental),
        tangent,
        ring,
        divisors,
    })
}

/// Numerical complete intersection of divisor classes in `ambient`.
pub fn complete_intersection<R: IntersectionRing + Clone>(
    ambient: &Variety<R>,
    name: impl Into<String>,
    divisors: &[R::Elem],
) -> Result<Variety<R>> {
    if divisors.len() > ambient.dim {
        return Err(invalid("more divisors than the ambient dimension"));
    }
    let ring = &ambient.ring;
    for d in divisors {
        if degree_of(ring, d) != Some(1) {
            return Err(invalid(format!("{d:?} is not a nonzero divisor class")));
        }
    }
    let dim = ambient.dim - divisors.len();
    let mut tangent = ambient.tangent.clone();
    for d in divisors {
        let normal = from_total(ring, 1, &ring.add(&ring.one(), d));
        tangent = whitney_quotient(ring, &tangent, &normal)?;
    }
    debug_assert_eq!(tangent.rank(), dim);
    let fundamental = divisors
        .iter()
        .fold(ambient.fundamental.clone(), |acc, d| ring.mul(&acc, d));
    Ok(Variety {
        name: name.into(),
        dim,
        ring: ring.clone(),
        tangent,
        fundamental,
        divisors: ambient.divisors.clone(),
    })
}

/// `∫ ∏ ci_divisors · ∏ classes` on the ambient variety; the degrees must add
/// up to its dimension.
pub fn intersection_number_ci<R: IntersectionRing>(
    ambient: &Variety<R>,
    ci_divisors: &[R::Elem],
    classes: &[R::Elem],
) -> Result<BigInt> {
    let ring = &ambient.ring;
    let mut total = 0;
    for x in ci_divisors.iter().chain(classes) {
        match degree_of(ring, x) {
            Some(d) => total += d,
            None if ring.is_zero(x) => return Ok(BigInt::from(0)),
            None => return Err(invalid(format!("{x:?} is not homogeneous"))),
        }
    }
    if total != ambient.dim {
        return Err(Error::DegreeMismatch {
            expected: ambient.dim,
            actual: total,
        });
    }
    let product = ring.product(ci_divisors.iter().chain(classes));
    ambient.integrate_integer("intersection number", &product)
}

/// Adjunction: `K_ambient + Σ D_i`, as an ambient class.
pub fn adjunction_canonical<R: IntersectionRing>(
    ambient: &Variety<R>,
    ci_divisors: &[R::Elem],
) -> R::Elem {
    let ring = &ambient.ring;
    ring.add(&ambient.canonical(), &ring.sum(ci_divisors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn projective_space_invariants() {
        for n in 1..=8 {
            let p = projective_space(n);
            assert_eq!(p.chi_top().unwrap(), BigInt::from(n + 1));
            assert_eq!(p.chi_structure().unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn conic_in_plane() {
        let p2 = projective_space(2);
        let h = p2.divisor("h1").unwrap().clone();
        let two_h = p2.ring().scale(&h, &rat(2));
        assert_eq!(
            intersection_number_ci(&p2, std::slice::from_ref(&two_h), std::slice::from_ref(&h))
                .unwrap(),
            2.into()
        );
        assert_eq!(
            adjunction_canonical(&p2, std::slice::from_ref(&two_h)),
            p2.ring().neg(&h)
        );
        let conic = complete_intersection(&p2, "conic", &[two_h]).unwrap();
        assert_eq!(conic.dim(), 1);
        assert_eq!(conic.chi_top().unwrap(), 2.into());
        assert_eq!(conic.chi_structure().unwrap(), 1.into());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let p2 = projective_space(2);
        let h = p2.divisor("h1").unwrap().clone();
        assert!(matches!(
            intersection_number_ci(&p2, &[], &[h]),
            Err(Error::DegreeMismatch {
                expected: 2,
                actual: 1
            })
        ));
    }

    #[test]
    fn quintic_surface() {
        let p3 = projective_space(3);
        let h = p3.divisor("h1").unwrap().clone();
        let five_h = p3.ring().scale(&h, &rat(5));
        assert_eq!(adjunction_canonical(&p3, std::slice::from_ref(&five_h)), h);
        let s = complete_intersection(&p3, "quintic", &[five_h]).unwrap();
        assert_eq!(s.chi_top().unwrap(), 55.into());
        assert_eq!(s.chi_structure().unwrap(), 5.into());
    }

    #[test]
    fn grassmannian_invariants() {
        let g = grassmannian(2, 4).unwrap();
        assert_eq!(g.chi_top().unwrap(), 6.into());
        assert_eq!(g.chi_structure().unwrap(), 1.into());
        let s1 = g.divisor("sigma1").unwrap();
        assert_eq!(g.canonical(), g.ring().scale(s1, &rat(-4)));
        let g35 = grassmannian(3, 5).unwrap();
        assert_eq!(g35.chi_top().unwrap(), 10.into());
    }

    #[test]
    fn bundle_over_line_is_hirzebruch() {
        let p1 = projective_space(1);
        let f = p1.divisor("h1").unwrap().clone();
        let ring = p1.ring();
        let e = whitney_sum(
            ring,
            &trivial(ring, 1),
            &from_total(ring, 1, &ring.sub(&ring.one(), &f)),
        );
        let f1 = projective_bundle(&p1, &e).unwrap();
        assert_eq!(f1.dim(), 2);
        assert_eq!(f1.chi_top().unwrap(), 4.into());
        assert_eq!(f1.chi_structure().unwrap(), 1.into());
        let k = f1.canonical();
        assert_eq!(f1.integrate(&f1.ring().mul(&k, &k)), rat(8));
    }
}
