//! Independent oracles and property checks shared by the integration tests
//! and the acceptance runner.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use chowkit::charclass::{
    ch_sum, ch_to_chern, chern_to_ch, from_total, line_bundle, segre, total, trivial,
    whitney_quotient, whitney_sum, ChernData,
};
use chowkit::exact::{
    binomial, factorial, rat, smith_normal_form, BigInt, BigRational, Gf2, GradedElement,
    IntegerMatrix, Monomial,
};
use chowkit::schubert::{multiply, Partition, SchubertClass, SchubertRing};
use chowkit::topology::{check_exact, steenrod_sq, sw_ring, ExactSequenceInstance, FGAbelianGroup};
use chowkit::varieties::{
    complete_intersection, projective_bundle, projective_product, projective_space,
    SurfaceInvariants,
};
use chowkit::{Error, IntersectionRing, TruncatedRing};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

// ---------------------------------------------------------------- Schubert

pub const GRASSMANNIANS: [(usize, usize); 6] = [(1, 4), (2, 4), (2, 5), (3, 5), (2, 6), (3, 6)];

#[derive(Clone, Debug)]
pub struct SchubertPair {
    pub k: usize,
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

pub fn schubert_pair(
    grassmannians: &'static [(usize, usize)],
) -> impl Strategy<Value = SchubertPair> {
    (0..grassmannians.len(), any::<usize>(), any::<usize>()).prop_map(move |(g, i, j)| {
        let (k, n) = grassmannians[g];
        SchubertPair { k, n, i, j }
    })
}

fn pick(p: &SchubertPair) -> (SchubertRing, Partition, Partition) {
    let ring = SchubertRing::grassmannian(p.k, p.n).unwrap();
    let basis = Partition::all_in_box(p.k, p.n - p.k);
    let a = basis[p.i % basis.len()].clone();
    let b = basis[p.j % basis.len()].clone();
    (ring, a, b)
}

/// `∫ σ_λ σ_μ = 1` iff `μ` is the complement of `λ`, else 0.
pub fn check_duality(p: &SchubertPair) -> Check {
    let (ring, a, b) = pick(p);
    let prod = ring.mul(
        &ring.basis_class(a.clone()).unwrap(),
        &ring.basis_class(b.clone()).unwrap(),
    );
    let expected = if b == a.complement(p.k, p.n - p.k) {
        1
    } else {
        0
    };
    prop_assert_eq!(ring.integrate(&prod), rat(expected));
    Ok(())
}

/// Structure constants are nonnegative integers.
pub fn check_lr_positivity(p: &SchubertPair) -> Check {
    let (ring, a, b) = pick(p);
    let prod = ring.mul(&ring.basis_class(a).unwrap(), &ring.basis_class(b).unwrap());
    for c in prod.terms().values() {
        prop_assert!(c.is_integer() && !c.is_negative(), "coefficient {}", c);
    }
    Ok(())
}

type Poly = BTreeMap<Vec<u32>, BigInt>;

/// Semistandard tableaux of shape `shape` with entries `< vars`, as
/// exponent vectors.
fn ssyt_monomials(shape: &[usize], vars: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        vars: usize,
        filling: &mut BTreeMap<(usize, usize), usize>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == cells.len() {
            let mut e = vec![0u32; vars];
            for v in filling.values() {
                e[*v] += 1;
            }
            out.push(e);
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { filling[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 { filling[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..vars {
            filling.insert((r, c), v);
            go(idx + 1, cells, vars, filling, out);
            filling.remove(&(r, c));
        }
    }
    go(0, &cells, vars, &mut filling, &mut out);
    out
}

fn schur_poly(shape: &[usize], vars: usize) -> Poly {
    let mut p = Poly::new();
    for e in ssyt_monomials(shape, vars) {
        *p.entry(e).or_default() += 1;
    }
    p
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expands a symmetric polynomial in `vars` variables in Schur functions by
/// peeling off lex-leading monomials.
fn schur_expand(mut p: Poly, vars: usize) -> BTreeMap<Vec<usize>, BigInt> {
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = p.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let shape: Vec<usize> = lead
            .iter()
            .map(|&x| x as usize)
            .filter(|&x| x > 0)
            .collect();
        for (e, d) in schur_poly(&shape, vars) {
            *p.entry(e).or_default() -= &c * d;
        }
        p.retain(|_, c| !c.is_zero());
        out.insert(shape, c);
    }
    out
}

/// Product of two Schubert classes from Schur polynomials in `k` variables,
/// discarding shapes wider than `n - k`.
pub fn schur_oracle_product(
    k: usize,
    n: usize,
    a: &Partition,
    b: &Partition,
) -> BTreeMap<Vec<usize>, BigInt> {
    let prod = poly_mul(&schur_poly(a.parts(), k), &schur_poly(b.parts(), k));
    let mut out = schur_expand(prod, k);
    out.retain(|shape, _| shape.first().copied().unwrap_or(0) <= n - k);
    out
}

pub const ORACLE_GRASSMANNIANS: [(usize, usize); 2] = [(2, 4), (2, 5)];

/// The engine's Pieri/Giambelli product against the Schur oracle.
pub fn check_schur_oracle(p: &SchubertPair) -> Check {
    let (ring, a, b) = pick(p);
    let spec = ring.spec();
    let x = SchubertClass::<BigInt>::basis(spec, a.clone()).unwrap();
    let y = SchubertClass::<BigInt>::basis(spec, b.clone()).unwrap();
    let got: BTreeMap<Vec<usize>, BigInt> = multiply(&x, &y)
        .unwrap()
        .terms()
        .iter()
        .map(|(p, c)| (p.parts().to_vec(), c.clone()))
        .collect();
    prop_assert_eq!(got, schur_oracle_product(p.k, p.n, &a, &b));
    Ok(())
}

/// Number of standard Young tableaux by the hook length formula.
pub fn hook_length_count(shape: &[usize]) -> BigInt {
    let size: usize = shape.iter().sum();
    let conj: Vec<usize> = (0..shape.first().copied().unwrap_or(0))
        .map(|c| shape.iter().filter(|&&r| r > c).count())
        .collect();
    let hooks: BigInt = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| {
            let conj = &conj;
            (0..len).map(move |c| BigInt::from(len - c - 1 + conj[c] - r - 1 + 1))
        })
        .product();
    factorial(size) / hooks
}

// --------------------------------------------------------- characteristic

/// A bundle on `P2 × P2` as a sum of line bundles with the given bidegrees.
#[derive(Clone, Debug)]
pub struct SplitBundles {
    pub first: Vec<(i64, i64)>,
    pub second: Vec<(i64, i64)>,
}

pub fn split_bundles() -> impl Strategy<Value = SplitBundles> {
    let line = (-3i64..=3, -3i64..=3);
    (
        prop::collection::vec(line.clone(), 1..=3),
        prop::collection::vec(line, 1..=3),
    )
        .prop_map(|(first, second)| SplitBundles { first, second })
}

fn split(ring: &TruncatedRing, degrees: &[(i64, i64)]) -> ChernData<GradedElement<BigRational>> {
    degrees.iter().fold(trivial(ring, 0), |acc, &(a, b)| {
        whitney_sum(ring, &acc, &line_bundle(ring, &ring.linear(&[a, b])))
    })
}

pub fn check_whitney_segre(input: &SplitBundles) -> Check {
    let ring = TruncatedRing::projective_product(&[2, 2]);
    let e = split(&ring, &input.first);
    let f = split(&ring, &input.second);
    let s = ring.sum(&segre(&ring, &e).unwrap());
    prop_assert_eq!(ring.mul(&s, &total(&ring, &e)), ring.one());
    let sum = whitney_sum(&ring, &e, &f);
    prop_assert_eq!(whitney_quotient(&ring, &sum, &e).unwrap(), f);
    Ok(())
}

pub fn check_ch_roundtrip(input: &SplitBundles) -> Check {
    let ring = TruncatedRing::projective_product(&[2, 2]);
    let e = split(&ring, &input.first);
    let f = split(&ring, &input.second);
    let ch_e = chern_to_ch(&ring, &e);
    prop_assert_eq!(&ch_to_chern(&ring, &ch_e).unwrap(), &e);
    let ch_sum_direct = chern_to_ch(&ring, &whitney_sum(&ring, &e, &f));
    prop_assert_eq!(ch_sum_direct, ch_sum(&ring, &ch_e, &chern_to_ch(&ring, &f)));
    Ok(())
}

/// `χ(P^n, O(d)) = (d+1)(d+2)...(d+n)/n!` for every integer `d`.
pub fn binomial_oracle(n: i64, d: i64) -> BigInt {
    let num: BigInt = (1..=n).map(|i| BigInt::from(d + i)).product();
    num / factorial(n as usize)
}

pub fn hrr_cases() -> impl Strategy<Value = (u32, i64)> {
    (1u32..=5).prop_flat_map(|n| (Just(n), -(n as i64)..=5))
}

pub fn check_hrr_projective(&(n, d): &(u32, i64)) -> Check {
    let p = projective_space(n);
    let h = p.divisor("h1").unwrap().clone();
    let chi = p.chi_line_bundle(&p.ring().scale(&h, &rat(d))).unwrap();
    prop_assert_eq!(chi, binomial_oracle(n as i64, d));
    Ok(())
}

// ---------------------------------------------------------------- surfaces

#[derive(Clone, Debug)]
pub enum SurfaceCase {
    Hypersurface(i64),
    CompleteIntersection(i64, i64),
    Bidegree(i64, i64),
    Hirzebruch(i64),
    QuadricProduct,
    Plane,
    SixFold11,
}

pub fn surface_cases() -> impl Strategy<Value = SurfaceCase> {
    prop_oneof![
        (1i64..=6).prop_map(SurfaceCase::Hypersurface),
        (1i64..=3, 1i64..=3).prop_map(|(a, b)| SurfaceCase::CompleteIntersection(a, b)),
        (1i64..=3, 1i64..=3).prop_map(|(a, b)| SurfaceCase::Bidegree(a, b)),
        (0i64..=4).prop_map(SurfaceCase::Hirzebruch),
        Just(SurfaceCase::QuadricProduct),
        Just(SurfaceCase::Plane),
        Just(SurfaceCase::SixFold11),
    ]
}

/// Builds the surface and reads its invariants; `from_variety` fails unless
/// Noether's formula agrees with Riemann–Roch.
pub fn surface_invariants(case: &SurfaceCase) -> Result<SurfaceInvariants, Error> {
    match *case {
        SurfaceCase::Hypersurface(d) => {
            let p3 = projective_space(3);
            let dh = p3.ring().linear(&[d]);
            SurfaceInvariants::from_variety(&complete_intersection(&p3, "S", &[dh])?, 0)
        }
        SurfaceCase::CompleteIntersection(a, b) => {
            let p4 = projective_space(4);
            let ds = [p4.ring().linear(&[a]), p4.ring().linear(&[b])];
            SurfaceInvariants::from_variety(&complete_intersection(&p4, "S", &ds)?, 0)
        }
        SurfaceCase::Bidegree(a, b) => {
            let amb = projective_product(&[1, 2]);
            let d = amb.ring().linear(&[a, b]);
            SurfaceInvariants::from_variety(&complete_intersection(&amb, "S", &[d])?, 0)
        }
        SurfaceCase::Hirzebruch(a) => {
            let p1 = projective_space(1);
            let r = p1.ring();
            let twist = from_total(r, 1, &r.sub(&r.one(), &r.linear(&[a])));
            let e = whitney_sum(r, &trivial(r, 1), &twist);
            SurfaceInvariants::from_variety(&projective_bundle(&p1, &e)?, 0)
        }
        SurfaceCase::QuadricProduct => {
            SurfaceInvariants::from_variety(&projective_product(&[1, 1]), 0)
        }
        SurfaceCase::Plane => SurfaceInvariants::from_variety(&projective_space(2), 0),
        SurfaceCase::SixFold11 => {
            let amb = projective_product(&[4, 4]);
            let d = amb.ring().linear(&[1, 1]);
            SurfaceInvariants::from_variety(&complete_intersection(&amb, "T", &vec![d; 6])?, 0)
        }
    }
}

pub fn check_noether(case: &SurfaceCase) -> Check {
    let inv = surface_invariants(case).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(inv.satisfies_noether());
    prop_assert!(inv.is_consistent(), "{:?}", inv);
    Ok(())
}

// ---------------------------------------------------------------- topology

/// Exponents `(a, b, c)` of `w2^a w3^b w4^c`.
pub type SwTerms = Vec<(u32, u32, u32)>;

fn sw_terms(max_degree: u32) -> impl Strategy<Value = SwTerms> {
    prop::collection::vec((0u32..=5, 0u32..=3, 0u32..=2), 0..=4).prop_map(move |v| {
        v.into_iter()
            .filter(|(a, b, c)| 2 * a + 3 * b + 4 * c <= max_degree)
            .collect()
    })
}

pub fn sw_poly(terms: &SwTerms) -> GradedElement<Gf2> {
    GradedElement::from_terms(
        sw_ring(),
        terms
            .iter()
            .map(|&(a, b, c)| (Monomial::from_dense(&[a, b, c]), Gf2(true))),
    )
}

pub fn cartan_cases() -> impl Strategy<Value = (SwTerms, SwTerms, u32)> {
    (sw_terms(10), sw_terms(10), 0u32..=12)
}

pub fn check_cartan((x, y, i): &(SwTerms, SwTerms, u32)) -> Check {
    let (x, y) = (sw_poly(x), sw_poly(y));
    let lhs = steenrod_sq(*i, &(&x * &y));
    let rhs = (0..=*i).fold(GradedElement::zero(sw_ring()), |acc, j| {
        &acc + &(&steenrod_sq(j, &x) * &steenrod_sq(i - j, &y))
    });
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn small_matrices() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-20i64..=20, r * c)))
}

pub fn check_snf(&(r, c, ref entries): &(usize, usize, Vec<i64>)) -> Check {
    let m = IntegerMatrix::from_i64(r, c, entries).unwrap();
    let s = smith_normal_form(&m);
    prop_assert_eq!(&s.u.mul(&m).unwrap().mul(&s.v).unwrap(), &s.d);
    prop_assert_eq!(&s.u.mul(&s.u_inv).unwrap(), &IntegerMatrix::identity(r));
    prop_assert_eq!(&s.v.mul(&s.v_inv).unwrap(), &IntegerMatrix::identity(c));
    prop_assert_eq!(&s.u_inv.mul(&s.d).unwrap().mul(&s.v_inv).unwrap(), &m);
    for i in 0..r {
        for j in 0..c {
            let expected = if i == j {
                s.diagonal[i].clone()
            } else {
                BigInt::zero()
            };
            prop_assert_eq!(&s.d[(i, j)], &expected);
        }
    }
    for w in s.diagonal.windows(2) {
        prop_assert!(!w[0].is_negative());
        let divides = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            w[1].is_multiple_of(&w[0])
        };
        prop_assert!(divides, "{} does not divide {}", w[0], w[1]);
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ThreeTerm {
    pub orders: [Vec<i64>; 3],
    pub f: [[i64; 2]; 2],
    pub g: [[i64; 2]; 2],
    pub zero_map: u8,
}

pub fn three_term_sequences() -> impl Strategy<Value = ThreeTerm> {
    let orders = prop::collection::vec(prop::sample::select(vec![2i64, 3, 4, 6, 8]), 0..=2);
    let entries = [[0i64..8, 0i64..8], [0i64..8, 0i64..8]];
    (
        [orders.clone(), orders.clone(), orders],
        entries.clone(),
        entries,
        0u8..4,
    )
        .prop_map(|(orders, f, g, zero_map)| ThreeTerm {
            orders,
            f,
            g,
            zero_map,
        })
}

/// Integer matrix of a map between canonical finite groups, adjusted so that
/// it is well defined.
fn finite_map(src: &[BigInt], dst: &[BigInt], raw: &[[i64; 2]; 2]) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(dst.len(), src.len());
    for i in 0..dst.len() {
        for j in 0..src.len() {
            let step = &dst[i] / dst[i].gcd(&src[j]);
            m[(i, j)] = (BigInt::from(raw[i][j]) * step).mod_floor(&dst[i]);
        }
    }
    m
}

fn elements(orders: &[BigInt]) -> Vec<Vec<BigInt>> {
    orders.iter().fold(vec![Vec::new()], |acc, d| {
        let d = d.to_i64().unwrap();
        acc.into_iter()
            .flat_map(|v| {
                (0..d).map(move |x| {
                    let mut v = v.clone();
                    v.push(BigInt::from(x));
                    v
                })
            })
            .collect()
    })
}

fn apply_mod(m: &IntegerMatrix, x: &[BigInt], orders: &[BigInt]) -> Vec<BigInt> {
    m.apply(x)
        .iter()
        .zip(orders)
        .map(|(y, d)| y.mod_floor(d))
        .collect()
}

/// Enumerates the finite groups to decide composition and exactness at the
/// middle node, then compares with the Smith-form checker.
pub fn check_exact_brute_force(t: &ThreeTerm) -> Check {
    let groups: Vec<FGAbelianGroup> = t
        .orders
        .iter()
        .map(|o| FGAbelianGroup::from_i64(0, o).unwrap())
        .collect();
    let ords: Vec<Vec<BigInt>> = groups.iter().map(|g| g.generator_orders()).collect();
    let mut f = finite_map(&ords[0], &ords[1], &t.f);
    let mut g = finite_map(&ords[1], &ords[2], &t.g);
    match t.zero_map {
        1 => f = IntegerMatrix::zeros(f.rows(), f.cols()),
        2 => g = IntegerMatrix::zeros(g.rows(), g.cols()),
        _ => {}
    }
    let image: BTreeSet<Vec<BigInt>> = elements(&ords[0])
        .iter()
        .map(|a| apply_mod(&f, a, &ords[1]))
        .collect();
    let zero_c = vec![BigInt::zero(); ords[2].len()];
    let kernel: BTreeSet<Vec<BigInt>> = elements(&ords[1])
        .into_iter()
        .filter(|b| apply_mod(&g, b, &ords[2]) == zero_c)
        .collect();
    let composes = image.is_subset(&kernel);
    match ExactSequenceInstance::new(groups, vec![f, g]) {
        Err(Error::NotComposable(_)) => prop_assert!(!composes),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
        Ok(seq) => {
            prop_assert!(composes);
            prop_assert_eq!(check_exact(&seq).unwrap(), image == kernel);
        }
    }
    Ok(())
}

/// Sanity check of the oracle helpers themselves.
pub fn oracle_self_test() -> bool {
    binomial_oracle(3, 2) == binomial(5, 3)
        && binomial_oracle(2, -3) == BigInt::from(1)
        && hook_length_count(&[2, 2]) == BigInt::from(2)
}
