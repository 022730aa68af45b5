//! Schubert calculus on the Grassmannian `Gr(k, n)` of `k`-dimensional
//! subspaces.
//!
//! Classes are indexed by partitions in the box with at most `k` rows and
//! parts at most `n - k`; `σ_λ` has codimension `|λ|` and `σ_1` is the
//! Plücker hyperplane class. Products go through the Giambelli determinant
//! of one factor followed by iterated Pieri.

mod partition;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

pub use partition::Partition;

use crate::charclass::ChernData;
use crate::error::{invalid, Error, Result};
use crate::exact::Coeff;
use crate::ring::IntersectionRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GrassmannianSpec {
    k: usize,
    n: usize,
}

impl GrassmannianSpec {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(invalid(format!("Gr({k}, {n}) needs 0 < k < n")));
        }
        Ok(GrassmannianSpec { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rows of the indexing box.
    pub fn rows(&self) -> usize {
        self.k
    }

    /// Columns of the indexing box.
    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.fits_in_box(self.rows(), self.cols())
    }

    pub fn full_box(&self) -> Partition {
        Partition::rectangle(self.rows(), self.cols())
    }
}

impl fmt::Display for GrassmannianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({}, {})", self.k, self.n)
    }
}

/// A linear combination of Schubert classes.
#[derive(Clone, PartialEq, Eq)]
pub struct SchubertClass<C: Coeff = BigInt> {
    spec: GrassmannianSpec,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SchubertClass<C> {
    pub fn zero(spec: GrassmannianSpec) -> Self {
        SchubertClass {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: GrassmannianSpec) -> Self {
        Self::basis(spec, Partition::empty()).expect("empty partition fits")
    }

    pub fn basis(spec: GrassmannianSpec, p: Partition) -> Result<Self> {
        if !spec.fits(&p) {
            return Err(invalid(format!("{p} does not fit in the box of {spec}")));
        }
        let mut terms = BTreeMap::new();
        terms.insert(p, C::one());
        Ok(SchubertClass { spec, terms })
    }

    /// The special class `σ_p`; zero if `p` exceeds the box width.
    pub fn special(spec: GrassmannianSpec, p: usize) -> Self {
        Self::basis(spec, Partition::row(p)).unwrap_or_else(|_| Self::zero(spec))
    }

    /// Builds a class from terms, dropping zero coefficients. Out-of-box
    /// partitions are an error.
    pub fn from_terms(
        spec: GrassmannianSpec,
        terms: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self> {
        let mut out = Self::zero(spec);
        for (p, c) in terms {
            if !spec.fits(&p) {
                return Err(invalid(format!("{p} does not fit in the box of {spec}")));
            }
            out.accumulate(p, c);
        }
        Ok(out)
    }

    pub fn spec(&self) -> GrassmannianSpec {
        self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Partition) -> C {
        self.terms.get(p).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, p: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = self.coefficient(&p) + c;
        if sum.is_zero() {
            self.terms.remove(&p);
        } else {
            self.terms.insert(p, sum);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.accumulate(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.spec);
        for (p, a) in &self.terms {
            out.accumulate(p.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn homogeneous(&self, degree: usize) -> Self {
        SchubertClass {
            spec: self.spec,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplication by the special class `σ_p`.
    pub fn pieri_mul(&self, p: usize) -> Self {
        let mut out = Self::zero(self.spec);
        for (lambda, c) in &self.terms {
            for mu in horizontal_strips(lambda, p, self.spec) {
                out.accumulate(mu, c.clone());
            }
        }
        out
    }

    /// The same class on `Gr(n-k, n)` under `σ_λ ↦ σ_{λ'}`.
    pub fn conjugate(&self) -> Self {
        let spec = GrassmannianSpec::new(self.spec.n() - self.spec.k(), self.spec.n())
            .expect("complementary Grassmannian");
        let mut out = Self::zero(spec);
        for (p, c) in &self.terms {
            out.accumulate(p.conjugate(), c.clone());
        }
        out
    }

    /// Multiplication by `σ_λ`, expanding `σ_λ = det(σ_{λ_i + j - i})`. Tall
    /// partitions are handled on the complementary Grassmannian, where the
    /// determinant is smaller.
    pub fn mul_basis(&self, lambda: &Partition) -> Self {
        if lambda.len() > lambda.part(0) {
            return self.conjugate().mul_basis(&lambda.conjugate()).conjugate();
        }
        let mut out = Self::zero(self.spec);
        for (sign, specials) in giambelli_terms(lambda) {
            let mut acc = self.clone();
            for p in specials {
                acc = acc.pieri_mul(p);
                if acc.is_zero() {
                    break;
                }
            }
            let acc = if sign < 0 { acc.scale(&-C::one()) } else { acc };
            out = out.try_add(&acc).expect("same spec");
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.spec);
        for (lambda, c) in &self.terms {
            let prod = other.mul_basis(lambda).scale(c);
            out = out.try_add(&prod)?;
        }
        Ok(out)
    }

    /// Coefficient of the full-box class.
    pub fn integrate(&self) -> C {
        self.coefficient(&self.spec.full_box())
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SchubertClass<D> {
        let mut out = SchubertClass::zero(self.spec);
        for (p, c) in &self.terms {
            out.accumulate(p.clone(), f(c));
        }
        out
    }
}

impl SchubertClass<BigInt> {
    pub fn to_rational(&self) -> SchubertClass<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl SchubertClass<BigRational> {
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

/// Sum over partitions `μ ⊃ λ` with `μ/λ` a horizontal strip of size `p`
/// inside the box of `spec`.
fn horizontal_strips(lambda: &Partition, p: usize, spec: GrassmannianSpec) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        row: usize,
        remaining: usize,
        rows: usize,
        cols: usize,
        mu: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if remaining == 0 {
                out.push(Partition::new(mu.clone()).expect("strip of a partition"));
            }
            return;
        }
        let base = lambda.part(row);
        let upper = if row == 0 { cols } else { lambda.part(row - 1) };
        let upper = upper.min(base + remaining);
        for v in base..=upper {
            mu.push(v);
            rec(lambda, row + 1, remaining - (v - base), rows, cols, mu, out);
            mu.pop();
        }
    }
    if !spec.fits(lambda) {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(
        lambda,
        0,
        p,
        spec.rows(),
        spec.cols(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Nonvanishing terms of the Giambelli determinant of `λ`, each as a sign and
/// the list of special-class indices to multiply (zeros omitted). Rows are
/// assigned columns one at a time, pruning negative indices early.
fn giambelli_terms(lambda: &Partition) -> Vec<(i32, Vec<usize>)> {
    fn rec(
        lambda: &Partition,
        row: usize,
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        out: &mut Vec<(i32, Vec<usize>)>,
    ) {
        let l = used.len();
        if row == l {
            let specials = perm
                .iter()
                .enumerate()
                .map(|(i, &j)| lambda.part(i) + j - i)
                .filter(|&idx| idx > 0)
                .collect();
            out.push((permutation_sign(perm), specials));
            return;
        }
        for j in 0..l {
            if used[j] || lambda.part(row) + j < row {
                continue;
            }
            used[j] = true;
            perm.push(j);
            rec(lambda, row + 1, used, perm, out);
            perm.pop();
            used[j] = false;
        }
    }
    let mut out = Vec::new();
    rec(
        lambda,
        0,
        &mut vec![false; lambda.len()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `σ_λ · σ_p` by the Pieri rule.
pub fn pieri(lambda: &Partition, p: usize, spec: GrassmannianSpec) -> Result<SchubertClass> {
    Ok(SchubertClass::<BigInt>::basis(spec, lambda.clone())?.pieri_mul(p))
}

pub fn multiply(a: &SchubertClass, b: &SchubertClass) -> Result<SchubertClass> {
    a.try_mul(b)
}

pub fn integrate_gr(a: &SchubertClass) -> BigInt {
    a.integrate()
}

fn sorted_terms<C: Coeff>(class: &SchubertClass<C>) -> Vec<(&Partition, &C)> {
    let mut v: Vec<_> = class.terms.iter().collect();
    v.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| b.0.cmp(a.0)));
    v
}

/// Text form such as `s[2] + s[1,1]`.
impl<C: Coeff> fmt::Display for SchubertClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in sorted_terms(self).into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for SchubertClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.spec, self)
    }
}

/// The rational Chow ring of a Grassmannian, with a precomputed table of
/// products of basis classes.
#[derive(Clone)]
pub struct SchubertRing {
    spec: GrassmannianSpec,
    basis: Arc<Vec<Partition>>,
    index: Arc<BTreeMap<Partition, usize>>,
    table: Arc<Vec<Vec<(usize, BigInt)>>>,
}

impl fmt::Debug for SchubertRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchubertRing({})", self.spec)
    }
}

impl SchubertRing {
    pub fn new(spec: GrassmannianSpec) -> Self {
        let basis = Partition::all_in_box(spec.rows(), spec.cols());
        let index: BTreeMap<Partition, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let n = basis.len();
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            let left = SchubertClass::<BigInt>::basis(spec, basis[i].clone()).expect("boxed");
            for j in i..n {
                if basis[i].size() + basis[j].size() > spec.dim() {
                    continue;
                }
                let prod: Vec<(usize, BigInt)> = left
                    .mul_basis(&basis[j])
                    .terms()
                    .iter()
                    .map(|(p, c)| (index[p], c.clone()))
                    .collect();
                table[j * n + i] = prod.clone();
                table[i * n + j] = prod;
            }
        }
        SchubertRing {
            spec,
            basis: Arc::new(basis),
            index: Arc::new(index),
            table: Arc::new(table),
        }
    }

    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        Ok(Self::new(GrassmannianSpec::new(k, n)?))
    }

    pub fn spec(&self) -> GrassmannianSpec {
        self.spec
    }

    pub fn basis_class(&self, p: Partition) -> Result<SchubertClass<BigRational>> {
        SchubertClass::basis(self.spec, p)
    }

    pub fn special(&self, p: usize) -> SchubertClass<BigRational> {
        SchubertClass::special(self.spec, p)
    }

    pub fn sigma(&self, parts: &[usize]) -> Result<SchubertClass<BigRational>> {
        self.basis_class(Partition::new(parts.to_vec())?)
    }
}

impl IntersectionRing for SchubertRing {
    type Elem = SchubertClass<BigRational>;

    fn dim(&self) -> usize {
        self.spec.dim()
    }

    fn zero(&self) -> Self::Elem {
        SchubertClass::zero(self.spec)
    }

    fn one(&self) -> Self::Elem {
        SchubertClass::one(self.spec)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.try_add(b)
            .expect("Schubert classes from different Grassmannians")
    }

    fn scale(&self, a: &Self::Elem, c: &BigRational) -> Self::Elem {
        a.scale(c)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        assert_eq!(a.spec, self.spec, "class from a different Grassmannian");
        assert_eq!(b.spec, self.spec, "class from a different Grassmannian");
        let n = self.basis.len();
        let mut out = SchubertClass::zero(self.spec);
        for (pa, ca) in &a.terms {
            let i = self.index[pa];
            for (pb, cb) in &b.terms {
                let j = self.index[pb];
                let c = ca * cb;
                for (k, m) in &self.table[i * n + j] {
                    out.accumulate(
                        self.basis[*k].clone(),
                        &c * BigRational::from_integer(m.clone()),
                    );
                }
            }
        }
        out
    }

    fn homogeneous(&self, a: &Self::Elem, degree: usize) -> Self::Elem {
        a.homogeneous(degree)
    }

    fn integrate(&self, a: &Self::Elem) -> BigRational {
        a.integrate()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn is_integral(&self, a: &Self::Elem) -> bool {
        a.is_integral()
    }

    fn unit_coefficient(&self, a: &Self::Elem) -> BigRational {
        a.coefficient(&Partition::empty())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tautological {
    /// The universal subbundle `S` of rank `k`.
    Sub,
    /// Its dual `S^∨`.
    DualSub,
    /// The universal quotient `Q = V/S` of rank `n - k`.
    Quotient,
}

/// Total Chern class of a tautological bundle in the Schubert basis:
/// `c_i(Q) = σ_i`, `c_i(S^∨) = σ_{1^i}`, `c_i(S) = (-1)^i σ_{1^i}`.
pub fn tautological_chern(
    ring: &SchubertRing,
    which: Tautological,
) -> ChernData<SchubertClass<BigRational>> {
    let spec = ring.spec();
    let (rank, class_of): (usize, Box<dyn Fn(usize) -> SchubertClass<BigRational>>) = match which {
        Tautological::Quotient => (spec.cols(), Box::new(|i| ring.special(i))),
        Tautological::DualSub => (
            spec.rows(),
            Box::new(|i| ring.basis_class(Partition::column(i)).expect("column fits")),
        ),
        Tautological::Sub => (
            spec.rows(),
            Box::new(|i| {
                let c = ring.basis_class(Partition::column(i)).expect("column fits");
                if i % 2 == 1 {
                    c.scale(&-BigRational::one())
                } else {
                    c
                }
            }),
        ),
    };
    let components = (0..=ring.dim())
        .map(|i| if i <= rank { class_of(i) } else { ring.zero() })
        .collect();
    ChernData::new(rank, components)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(k: usize, n: usize) -> GrassmannianSpec {
        GrassmannianSpec::new(k, n).unwrap()
    }

    fn s(spec: GrassmannianSpec, parts: &[usize]) -> SchubertClass {
        SchubertClass::basis(spec, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn sigma1_squared_in_gr24() {
        let g = gr(2, 4);
        let sq = pieri(&Partition::row(1), 1, g).unwrap();
        assert_eq!(sq.to_string(), "s[2] + s[1,1]");
    }

    #[test]
    fn pieri_with_zero_is_identity() {
        let g = gr(2, 5);
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(pieri(&lam, 0, g).unwrap(), s(g, &[2, 1]));
    }

    #[test]
    fn sigma2_squared_in_gr24() {
        let g = gr(2, 4);
        assert_eq!(multiply(&s(g, &[2]), &s(g, &[2])).unwrap(), s(g, &[2, 2]));
    }

    #[test]
    fn out_of_box_is_an_error() {
        let g = gr(2, 4);
        assert!(pieri(&Partition::new(vec![3]).unwrap(), 1, g).is_err());
        assert!(pieri(&Partition::new(vec![1, 1, 1]).unwrap(), 1, g).is_err());
    }

    #[test]
    fn sigma1_powers() {
        let g = gr(2, 4);
        let s1 = s(g, &[1]);
        let p4 = (0..3).fold(s1.clone(), |acc, _| multiply(&acc, &s1).unwrap());
        assert_eq!(p4, s(g, &[2, 2]).scale(&BigInt::from(2)));
        assert_eq!(integrate_gr(&p4), BigInt::from(2));

        let g = gr(3, 5);
        let s1 = s(g, &[1]);
        let p6 = (0..5).fold(s1.clone(), |acc, _| multiply(&acc, &s1).unwrap());
        assert_eq!(p6, s(g, &[2, 2, 2]).scale(&BigInt::from(5)));
    }

    #[test]
    fn unit_and_integration() {
        let g = gr(2, 4);
        let x = s(g, &[2, 1]);
        assert_eq!(multiply(&SchubertClass::one(g), &x).unwrap(), x);
        assert_eq!(integrate_gr(&s(g, &[2, 2])), BigInt::from(1));
        assert_eq!(integrate_gr(&s(g, &[1])), BigInt::from(0));
    }

    #[test]
    fn giambelli_of_two_row_partition() {
        // σ_{1,1} = σ_1^2 - σ_2
        let g = gr(2, 4);
        let s1 = s(g, &[1]);
        let lhs = s(g, &[1, 1]).try_mul(&s1).unwrap();
        let rhs = s1
            .pieri_mul(1)
            .pieri_mul(1)
            .try_add(&s1.pieri_mul(2).scale(&BigInt::from(-1)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_table_matches_direct_product() {
        let ring = SchubertRing::grassmannian(2, 5).unwrap();
        let a = ring.sigma(&[2, 1]).unwrap();
        let b = ring.sigma(&[1]).unwrap();
        let direct = a.try_mul(&b).unwrap();
        assert_eq!(ring.mul(&a, &b), direct);
    }

    #[test]
    fn chern_classes_of_tautological_bundles() {
        let ring = SchubertRing::grassmannian(2, 4).unwrap();
        let q = tautological_chern(&ring, Tautological::Quotient);
        let d = tautological_chern(&ring, Tautological::DualSub);
        assert_eq!(q.component(1), &ring.special(1));
        assert_eq!(d.component(2), &ring.sigma(&[1, 1]).unwrap());
    }

    #[test]
    fn display() {
        let g = gr(2, 4);
        let x = s(g, &[1])
            .scale(&BigInt::from(-2))
            .try_add(&s(g, &[2, 1]))
            .unwrap();
        assert_eq!(x.to_string(), "s[2,1] - 2*s[1]");
        assert_eq!(SchubertClass::<BigInt>::zero(g).to_string(), "0");
    }
}
