//! Characteristic classes over any [`IntersectionRing`].
//!
//! Chern data is stored as homogeneous components `c_0 = 1, c_1, ..., c_dim`.
//! Chern characters pass through power sums of Chern roots (Newton's
//! identities). `Sym²` uses `ch(Sym² E) = (ch(E)² + ψ² ch(E)) / 2`. The Todd
//! class is `exp(Σ l_k p_k)` with `Σ l_k x^k = log(x / (1 - e^{-x}))`; the
//! `l_k` are generated exactly by series recursion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exact::{as_integer, factorial, rat};
use crate::ring::IntersectionRing;

/// Rank and total Chern class of a (virtual) bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernData<E> {
    rank: usize,
    components: Vec<E>,
}

impl<E: Clone> ChernData<E> {
    /// `components[i]` must be homogeneous of degree `i`, one per degree
    /// `0..=dim`.
    pub fn new(rank: usize, components: Vec<E>) -> Self {
        ChernData { rank, components }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn component(&self, i: usize) -> &E {
        &self.components[i]
    }

    pub fn components(&self) -> &[E] {
        &self.components
    }
}

/// Chern character: rational rank plus components `ch_0, ..., ch_dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterData<E> {
    rank: BigRational,
    components: Vec<E>,
}

impl<E: Clone> CharacterData<E> {
    pub fn new<R: IntersectionRing<Elem = E>>(ring: &R, components: Vec<E>) -> Self {
        assert_eq!(components.len(), ring.dim() + 1, "one component per degree");
        let rank = ring.unit_coefficient(&components[0]);
        CharacterData { rank, components }
    }

    pub fn rank(&self) -> &BigRational {
        &self.rank
    }

    pub fn component(&self, i: usize) -> &E {
        &self.components[i]
    }

    pub fn components(&self) -> &[E] {
        &self.components
    }
}

/// Splits a class into homogeneous components `0..=dim`.
pub fn components_of<R: IntersectionRing>(ring: &R, x: &R::Elem) -> Vec<R::Elem> {
    (0..=ring.dim()).map(|d| ring.homogeneous(x, d)).collect()
}

pub fn from_total<R: IntersectionRing>(
    ring: &R,
    rank: usize,
    total: &R::Elem,
) -> ChernData<R::Elem> {
    ChernData::new(rank, components_of(ring, total))
}

pub fn total<R: IntersectionRing>(ring: &R, c: &ChernData<R::Elem>) -> R::Elem {
    ring.sum(c.components())
}

pub fn trivial<R: IntersectionRing>(ring: &R, rank: usize) -> ChernData<R::Elem> {
    from_total(ring, rank, &ring.one())
}

/// Line bundle with first Chern class `c1`.
pub fn line_bundle<R: IntersectionRing>(ring: &R, c1: &R::Elem) -> ChernData<R::Elem> {
    from_total(ring, 1, &ring.add(&ring.one(), c1))
}

pub fn whitney_sum<R: IntersectionRing>(
    ring: &R,
    a: &ChernData<R::Elem>,
    b: &ChernData<R::Elem>,
) -> ChernData<R::Elem> {
    let t = ring.mul(&total(ring, a), &total(ring, b));
    from_total(ring, a.rank() + b.rank(), &t)
}

/// Formal inverse of a total class with unit constant term, truncated at the
/// ring's dimension.
pub fn inverse_series<R: IntersectionRing>(ring: &R, c: &[R::Elem]) -> Result<Vec<R::Elem>> {
    if c.first() != Some(&ring.one()) {
        return Err(invalid("degree-0 component must be 1 to invert"));
    }
    let dim = ring.dim();
    let mut s: Vec<R::Elem> = vec![ring.one()];
    for j in 1..=dim {
        let mut acc = ring.zero();
        for i in 1..=j.min(c.len() - 1) {
            acc = ring.add(&acc, &ring.mul(&c[i], &s[j - i]));
        }
        s.push(ring.neg(&acc));
    }
    Ok(s)
}

/// Segre classes `s(E)` with `s(E) c(E) = 1`.
pub fn segre<R: IntersectionRing>(ring: &R, c: &ChernData<R::Elem>) -> Result<Vec<R::Elem>> {
    inverse_series(ring, c.components())
}

/// The class `q` with `sub * q = total`, of rank `total.rank - sub.rank`.
pub fn whitney_quotient<R: IntersectionRing>(
    ring: &R,
    total_class: &ChernData<R::Elem>,
    sub: &ChernData<R::Elem>,
) -> Result<ChernData<R::Elem>> {
    let rank = total_class
        .rank()
        .checked_sub(sub.rank())
        .ok_or_else(|| invalid("subbundle rank exceeds total rank"))?;
    let inv = ring.sum(&inverse_series(ring, sub.components())?);
    let q = ring.mul(&total(ring, total_class), &inv);
    Ok(from_total(ring, rank, &q))
}

pub fn dual<R: IntersectionRing>(ring: &R, c: &ChernData<R::Elem>) -> ChernData<R::Elem> {
    let comps = c
        .components()
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 1 { ring.neg(x) } else { x.clone() })
        .collect();
    ChernData::new(c.rank(), comps)
}

/// Power sums `p_0 = rank, p_1, ..., p_dim` of the Chern roots.
fn power_sums<R: IntersectionRing>(ring: &R, c: &ChernData<R::Elem>) -> Vec<R::Elem> {
    let dim = ring.dim();
    let e = |i: usize| -> R::Elem {
        c.components()
            .get(i)
            .cloned()
            .unwrap_or_else(|| ring.zero())
    };
    let mut p = vec![ring.constant(&rat(c.rank() as i64))];
    for k in 1..=dim {
        let mut acc = ring.scale(&e(k), &rat(k as i64));
        if k % 2 == 0 {
            acc = ring.neg(&acc);
        }
        for i in 1..k {
            let term = ring.mul(&e(i), &p[k - i]);
            acc = if i % 2 == 1 {
                ring.add(&acc, &term)
            } else {
                ring.sub(&acc, &term)
            };
        }
        p.push(acc);
    }
    p
}

pub fn chern_to_ch<R: IntersectionRing>(
    ring: &R,
    c: &ChernData<R::Elem>,
) -> CharacterData<R::Elem> {
    let comps = power_sums(ring, c)
        .into_iter()
        .enumerate()
        .map(|(k, p)| ring.scale(&p, &BigRational::new(BigInt::one(), factorial(k))))
        .collect();
    CharacterData::new(ring, comps)
}

/// Inverse of [`chern_to_ch`]; the rank must be a nonnegative integer.
pub fn ch_to_chern<R: IntersectionRing>(
    ring: &R,
    ch: &CharacterData<R::Elem>,
) -> Result<ChernData<R::Elem>> {
    let rank = as_integer(ch.rank())
        .and_then(|r| usize::try_from(r).ok())
        .ok_or_else(|| invalid(format!("rank {} is not a nonnegative integer", ch.rank())))?;
    let dim = ring.dim();
    let p: Vec<R::Elem> = (0..=dim)
        .map(|k| ring.scale(ch.component(k), &BigRational::from_integer(factorial(k))))
        .collect();
    let mut e = vec![ring.one()];
    for k in 1..=dim {
        let mut acc = ring.zero();
        for i in 1..=k {
            let term = ring.mul(&e[k - i], &p[i]);
            acc = if i % 2 == 1 {
                ring.add(&acc, &term)
            } else {
                ring.sub(&acc, &term)
            };
        }
        e.push(ring.scale(&acc, &BigRational::new(BigInt::one(), BigInt::from(k))));
    }
    Ok(ChernData::new(rank, e))
}

/// Adams operation: scales the degree-`i` component by `k^i`.
pub fn adams<R: IntersectionRing>(
    ring: &R,
    k: u32,
    ch: &CharacterData<R::Elem>,
) -> CharacterData<R::Elem> {
    let kk = BigInt::from(k);
    let comps = ch
        .components()
        .iter()
        .enumerate()
        .map(|(i, x)| ring.scale(x, &BigRational::from_integer(kk.pow(i as u32))))
        .collect();
    CharacterData::new(ring, comps)
}

pub fn ch_product<R: IntersectionRing>(
    ring: &R,
    a: &CharacterData<R::Elem>,
    b: &CharacterData<R::Elem>,
) -> CharacterData<R::Elem> {
    let t = ring.mul(&ring.sum(a.components()), &ring.sum(b.components()));
    CharacterData::new(ring, components_of(ring, &t))
}

pub fn ch_sum<R: IntersectionRing>(
    ring: &R,
    a: &CharacterData<R::Elem>,
    b: &CharacterData<R::Elem>,
) -> CharacterData<R::Elem> {
    let comps = a
        .components()
        .iter()
        .zip(b.components())
        .map(|(x, y)| ring.add(x, y))
        .collect();
    CharacterData::new(ring, comps)
}

pub fn ch_scale<R: IntersectionRing>(
    ring: &R,
    a: &CharacterData<R::Elem>,
    c: &BigRational,
) -> CharacterData<R::Elem> {
    let comps = a.components().iter().map(|x| ring.scale(x, c)).collect();
    CharacterData::new(ring, comps)
}

/// `ch(L) = exp(c1)` for a line bundle.
pub fn ch_line_bundle<R: IntersectionRing>(ring: &R, c1: &R::Elem) -> CharacterData<R::Elem> {
    CharacterData::new(ring, components_of(ring, &exp_nilpotent(ring, c1)))
}

/// Chern classes of `a ⊗ b`.
pub fn tensor<R: IntersectionRing>(
    ring: &R,
    a: &ChernData<R::Elem>,
    b: &ChernData<R::Elem>,
) -> Result<ChernData<R::Elem>> {
    let ch = ch_product(ring, &chern_to_ch(ring, a), &chern_to_ch(ring, b));
    ch_to_chern(ring, &ch)
}

/// Chern classes of the symmetric square; errors if the result is not
/// integral.
pub fn sym2<R: IntersectionRing>(ring: &R, c: &ChernData<R::Elem>) -> Result<ChernData<R::Elem>> {
    let ch = chern_to_ch(ring, c);
    let square = ch_product(ring, &ch, &ch);
    let psi = adams(ring, 2, &ch);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let sym = ch_scale(ring, &ch_sum(ring, &square, &psi), &half);
    let out = ch_to_chern(ring, &sym)?;
    let r = c.rank();
    debug_assert_eq!(out.rank(), r * (r + 1) / 2);
    if let Some(bad) = out.components().iter().find(|x| !ring.is_integral(x)) {
        return Err(Error::NonIntegral {
            what: "Chern class of Sym²".into(),
            value: format!("{bad:?}"),
        });
    }
    Ok(out)
}

/// `exp(y)` for `y` without a degree-zero part.
pub fn exp_nilpotent<R: IntersectionRing>(ring: &R, y: &R::Elem) -> R::Elem {
    let mut acc = ring.one();
    let mut term = ring.one();
    for m in 1..=ring.dim() {
        term = ring.scale(
            &ring.mul(&term, y),
            &BigRational::new(BigInt::one(), BigInt::from(m)),
        );
        if ring.is_zero(&term) {
            break;
        }
        acc = ring.add(&acc, &term);
    }
    acc
}

/// Coefficients `l_1, ..., l_n` of `log(x / (1 - e^{-x}))`.
pub fn todd_log_coefficients(n: usize) -> Vec<BigRational> {
    // g = (1 - e^{-x}) / x, b = 1 / g, l = log b.
    let g: Vec<BigRational> = (0..=n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            BigRational::new(BigInt::from(sign), factorial(j + 1))
        })
        .collect();
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let acc: BigRational = (1..=m).map(|j| &g[j] * &b[m - j]).sum();
        b.push(-acc);
    }
    let mut l = vec![BigRational::zero()];
    for k in 1..=n {
        let acc: BigRational = (1..k).map(|j| rat(j as i64) * &l[j] * &b[k - j]).sum();
        l.push(&b[k] - acc / rat(k as i64));
    }
    l
}

/// Todd class of a bundle, truncated at the ring's dimension.
pub fn todd<R: IntersectionRing>(ring: &R, tangent: &ChernData<R::Elem>) -> R::Elem {
    let p = power_sums(ring, tangent);
    let l = todd_log_coefficients(ring.dim());
    let mut log_td = ring.zero();
    for k in 1..=ring.dim() {
        log_td = ring.add(&log_td, &ring.scale(&p[k], &l[k]));
    }
    exp_nilpotent(ring, &log_td)
}

/// `ch(F) td(T)` before integration.
pub fn hrr_integrand<R: IntersectionRing>(
    ring: &R,
    sheaf: &CharacterData<R::Elem>,
    tangent: &ChernData<R::Elem>,
) -> R::Elem {
    ring.mul(&ring.sum(sheaf.components()), &todd(ring, tangent))
}

/// Asserts that a rational is an integer and returns it.
pub fn require_integer(what: &str, q: &BigRational) -> Result<BigInt> {
    as_integer(q).ok_or_else(|| Error::NonIntegral {
        what: what.into(),
        value: q.to_string(),
    })
}

/// Euler characteristic `∫ ch(F) td(T)` on a ring whose dimension is that
/// of the variety.
pub fn hrr_chi<R: IntersectionRing>(
    ring: &R,
    sheaf: &CharacterData<R::Elem>,
    tangent: &ChernData<R::Elem>,
) -> Result<BigInt> {
    if tangent.rank() != ring.dim() {
        return Err(invalid(format!(
            "tangent rank {} differs from dimension {}",
            tangent.rank(),
            ring.dim()
        )));
    }
    require_integer(
        "Euler characteristic",
        &ring.integrate(&hrr_integrand(ring, sheaf, tangent)),
    )
}

/// Topological Euler characteristic `∫ c_dim(T)`.
pub fn chi_top<R: IntersectionRing>(
    ring: &R,
    tangent: &ChernData<R::Elem>,
    dim: usize,
) -> Result<BigInt> {
    let top = tangent
        .components()
        .get(dim)
        .cloned()
        .unwrap_or_else(|| ring.zero());
    require_integer("topological Euler characteristic", &ring.integrate(&top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_frac;
    use crate::ring::TruncatedRing;
    use crate::schubert::{tautological_chern, SchubertRing, Tautological};

    fn projective_tangent(
        ring: &TruncatedRing,
        n: u32,
    ) -> ChernData<<TruncatedRing as IntersectionRing>::Elem> {
        let h = ring.var("h");
        let t = ring.pow(&ring.add(&ring.one(), &h), n as usize + 1);
        from_total(ring, n as usize, &t)
    }

    #[test]
    fn trivial_quotient() {
        let ring = TruncatedRing::projective_space(3);
        let q = whitney_quotient(&ring, &trivial(&ring, 3), &trivial(&ring, 1)).unwrap();
        assert_eq!(q, trivial(&ring, 2));
    }

    #[test]
    fn geometric_series() {
        let ring = TruncatedRing::projective_space(4);
        let h = ring.var("h");
        let sub = line_bundle(&ring, &ring.neg(&h));
        let q = whitney_quotient(&ring, &trivial(&ring, 5), &sub).unwrap();
        let expected: Vec<_> = (0..=4).map(|i| ring.pow(&h, i)).collect();
        assert_eq!(q.components(), expected.as_slice());
    }

    #[test]
    fn quotient_bundle_on_projective_space_matches_schubert() {
        // Gr(1, 5) = P^4: c(V)/c(O(-1)) agrees with the tautological quotient.
        let gr = SchubertRing::grassmannian(1, 5).unwrap();
        let sub = tautological_chern(&gr, Tautological::Sub);
        let q = whitney_quotient(&gr, &trivial(&gr, 5), &sub).unwrap();
        assert_eq!(q, tautological_chern(&gr, Tautological::Quotient));
    }

    #[test]
    fn non_unit_constant_term_is_rejected() {
        let ring = TruncatedRing::projective_space(2);
        let bad = ChernData::new(1, vec![ring.constant(&rat(2)), ring.zero(), ring.zero()]);
        assert!(whitney_quotient(&ring, &trivial(&ring, 2), &bad).is_err());
    }

    #[test]
    fn line_bundle_character_is_exponential() {
        let ring = TruncatedRing::projective_space(3);
        let h = ring.var("h");
        let ch = chern_to_ch(&ring, &line_bundle(&ring, &h));
        assert_eq!(
            ch.component(2),
            &ring.scale(&ring.pow(&h, 2), &rat_frac(1, 2))
        );
        assert_eq!(
            ch.component(3),
            &ring.scale(&ring.pow(&h, 3), &rat_frac(1, 6))
        );
    }

    #[test]
    fn rank_two_second_character() {
        let ring = TruncatedRing::projective_product(&[2, 2]);
        let (a, b) = (ring.var("h1"), ring.var("h2"));
        // c1 = a + b, c2 = a*b: ch_2 = (c1² - 2 c2)/2 = (a² + b²)/2
        let c = whitney_sum(&ring, &line_bundle(&ring, &a), &line_bundle(&ring, &b));
        let ch = chern_to_ch(&ring, &c);
        let c1 = c.component(1);
        let expected = ring.scale(
            &ring.sub(&ring.mul(c1, c1), &ring.scale(c.component(2), &rat(2))),
            &rat_frac(1, 2),
        );
        assert_eq!(ch.component(2), &expected);
        assert_eq!(ch_to_chern(&ring, &ch).unwrap(), c);
    }

    #[test]
    fn adams_scaling() {
        let ring = TruncatedRing::projective_space(3);
        let h = ring.var("h");
        let ch = chern_to_ch(&ring, &line_bundle(&ring, &h));
        assert_eq!(adams(&ring, 1, &ch), ch);
        let doubled = chern_to_ch(&ring, &line_bundle(&ring, &ring.scale(&h, &rat(2))));
        let psi2 = adams(&ring, 2, &ch);
        assert_eq!(psi2, doubled);
        assert_eq!(psi2.component(3), &ring.scale(ch.component(3), &rat(8)));
    }

    #[test]
    fn sym2_of_line_and_rank_two() {
        let ring = TruncatedRing::projective_product(&[3, 3]);
        let (a, b) = (ring.var("h1"), ring.var("h2"));
        let l = line_bundle(&ring, &a);
        assert_eq!(
            sym2(&ring, &l).unwrap(),
            line_bundle(&ring, &ring.scale(&a, &rat(2)))
        );

        let e = whitney_sum(&ring, &l, &line_bundle(&ring, &b));
        let s = sym2(&ring, &e).unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.component(1), &ring.scale(e.component(1), &rat(3)));
        // roots 2a, a+b, 2b
        let roots = [
            ring.scale(&a, &rat(2)),
            ring.add(&a, &b),
            ring.scale(&b, &rat(2)),
        ];
        let expected = roots.iter().fold(trivial(&ring, 0), |acc, r| {
            whitney_sum(&ring, &acc, &line_bundle(&ring, r))
        });
        assert_eq!(s, expected);
    }

    #[test]
    fn sym2_rank_three() {
        let gr = SchubertRing::grassmannian(3, 5).unwrap();
        let u = tautological_chern(&gr, Tautological::DualSub);
        assert_eq!(sym2(&gr, &u).unwrap().rank(), 6);
    }

    #[test]
    fn todd_series_low_terms() {
        let l = todd_log_coefficients(3);
        assert_eq!(l[1], rat_frac(1, 2));
        assert_eq!(l[2], rat_frac(-1, 24));
        assert_eq!(l[3], rat(0));
    }

    #[test]
    fn riemann_roch_on_projective_spaces() {
        let p2 = TruncatedRing::projective_space(2);
        let o = chern_to_ch(&p2, &trivial(&p2, 1));
        assert_eq!(
            hrr_chi(&p2, &o, &projective_tangent(&p2, 2)).unwrap(),
            1.into()
        );

        let p3 = TruncatedRing::projective_space(3);
        let o2 = ch_line_bundle(&p3, &p3.scale(&p3.var("h"), &rat(2)));
        assert_eq!(
            hrr_chi(&p3, &o2, &projective_tangent(&p3, 3)).unwrap(),
            10.into()
        );
    }

    #[test]
    fn gauss_bonnet_on_plane() {
        let p2 = TruncatedRing::projective_space(2);
        assert_eq!(
            chi_top(&p2, &projective_tangent(&p2, 2), 2).unwrap(),
            3.into()
        );
    }

    #[test]
    fn wrong_tangent_rank_is_rejected() {
        let p2 = TruncatedRing::projective_space(2);
        let o = chern_to_ch(&p2, &trivial(&p2, 1));
        assert!(hrr_chi(&p2, &o, &trivial(&p2, 1)).is_err());
    }
}
