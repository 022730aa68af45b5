use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::coeff::{as_integer, Coeff, Gf2};
use super::monomial::Monomial;
use super::spec::TruncatedRingSpec;
use crate::error::{invalid, Error, Result};

/// An element of a [`TruncatedRingSpec`] ring, kept in normal form: no zero
/// coefficients and every monomial admitted by the truncation relations.
#[derive(Clone)]
pub struct GradedElement<C: Coeff> {
    spec: Arc<TruncatedRingSpec>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> PartialEq for GradedElement<C> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.spec, &other.spec) && self.terms == other.terms
    }
}

impl<C: Coeff> Eq for GradedElement<C> {}

fn same_ring(a: &Arc<TruncatedRingSpec>, b: &Arc<TruncatedRingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<C: Coeff> GradedElement<C> {
    pub fn zero(spec: &Arc<TruncatedRingSpec>) -> Self {
        GradedElement {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &Arc<TruncatedRingSpec>) -> Self {
        Self::constant(spec, C::one())
    }

    pub fn constant(spec: &Arc<TruncatedRingSpec>, c: C) -> Self {
        Self::from_terms(spec, [(Monomial::one(), c)])
    }

    pub fn var(spec: &Arc<TruncatedRingSpec>, name: &str) -> Result<Self> {
        let i = spec
            .index_of(name)
            .ok_or_else(|| invalid(format!("unknown variable {name}")))?;
        Ok(Self::from_terms(spec, [(Monomial::var(i, 1), C::one())]))
    }

    pub fn var_at(spec: &Arc<TruncatedRingSpec>, index: usize) -> Self {
        assert!(
            index < spec.variables().len(),
            "variable index out of range"
        );
        Self::from_terms(spec, [(Monomial::var(index, 1), C::one())])
    }

    /// Collects terms, summing duplicates and dropping everything outside the
    /// normal form.
    pub fn from_terms(
        spec: &Arc<TruncatedRingSpec>,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Self {
        let mut out: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() || !spec.admits(&m) {
                continue;
            }
            accumulate(&mut out, m, c);
        }
        GradedElement {
            spec: spec.clone(),
            terms: out,
        }
    }

    pub fn spec(&self) -> &Arc<TruncatedRingSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-applies the truncation relations. Elements are always stored in
    /// normal form, so this is the identity on well-formed values.
    pub fn normalize(&self) -> Self {
        Self::from_terms(&self.spec, self.terms.clone())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out, m.clone(), c.clone());
        }
        Ok(GradedElement {
            spec: self.spec.clone(),
            terms: out,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    /// Ring multiplication; terms outside the normal form are dropped.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if self.spec.admits(&m) {
                    accumulate(&mut out, m, ca.clone() * cb.clone());
                }
            }
        }
        Ok(GradedElement {
            spec: self.spec.clone(),
            terms: out,
        })
    }

    pub fn neg_ref(&self) -> Self {
        GradedElement {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            &self.spec,
            self.terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone())),
        )
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.spec);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The degree-`d` homogeneous component.
    pub fn homogeneous(&self, d: u32) -> Self {
        let w = self.spec.weights();
        GradedElement {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(w) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let w = self.spec.weights();
        let mut degrees = self.terms.keys().map(|m| m.degree(w));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Highest degree carrying a nonzero term.
    pub fn max_degree(&self) -> Option<u32> {
        let w = self.spec.weights();
        self.terms.keys().map(|m| m.degree(w)).max()
    }

    /// Coefficient of the fundamental-class monomial; zero when absent or
    /// when the ring has no fundamental class.
    pub fn integrate(&self) -> C {
        self.spec
            .fundamental()
            .map(|f| self.coefficient(f))
            .unwrap_or_else(C::zero)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> GradedElement<D> {
        GradedElement::from_terms(
            &self.spec,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Terms sorted in descending graded-lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let w = self.spec.weights();
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0, w));
        v
    }
}

impl GradedElement<BigInt> {
    pub fn to_rational(&self) -> GradedElement<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    pub fn to_gf2(&self) -> GradedElement<Gf2> {
        self.map_coeffs(Gf2::from_bigint)
    }
}

impl GradedElement<BigRational> {
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn to_integer(&self) -> Result<GradedElement<BigInt>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let n = as_integer(c).ok_or_else(|| Error::NonIntegral {
                what: "graded element".into(),
                value: self.to_string(),
            })?;
            terms.push((m.clone(), n));
        }
        Ok(GradedElement::from_terms(&self.spec, terms))
    }
}

fn accumulate<C: Coeff>(map: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().clone() + c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Ring multiplication with an explicit ring-membership check.
pub fn poly_mul<C: Coeff>(a: &GradedElement<C>, b: &GradedElement<C>) -> Result<GradedElement<C>> {
    a.try_mul(b)
}

impl<C: Coeff> Add for &GradedElement<C> {
    type Output = GradedElement<C>;
    fn add(self, rhs: Self) -> GradedElement<C> {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl<C: Coeff> Sub for &GradedElement<C> {
    type Output = GradedElement<C>;
    fn sub(self, rhs: Self) -> GradedElement<C> {
        self.try_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<C: Coeff> Mul for &GradedElement<C> {
    type Output = GradedElement<C>;
    fn mul(self, rhs: Self) -> GradedElement<C> {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl<C: Coeff> Neg for &GradedElement<C> {
    type Output = GradedElement<C>;
    fn neg(self) -> GradedElement<C> {
        self.neg_ref()
    }
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    spec: &TruncatedRingSpec,
) -> fmt::Result {
    let mut first = true;
    for (i, e) in m.iter() {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&spec.variables()[i].name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text form, e.g. `3*h1^2*h2 - 2*h2^3`.
impl<C: Coeff> fmt::Display for GradedElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, m, &self.spec)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for GradedElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn square_of_hyperplane() {
        let p4 = TruncatedRingSpec::projective_space(4);
        let h = GradedElement::<BigInt>::var(&p4, "h").unwrap();
        assert_eq!((&h * &h).to_string(), "h^2");
        assert!(h.pow(5).is_zero());
        assert_eq!(h.pow(4).integrate(), int(1));
    }

    #[test]
    fn binomial_square_on_product() {
        let spec = TruncatedRingSpec::projective_product(&[4, 4]);
        let h1 = GradedElement::<BigInt>::var(&spec, "h1").unwrap();
        let h2 = GradedElement::<BigInt>::var(&spec, "h2").unwrap();
        let s = &h1 + &h2;
        assert_eq!((&s * &s).to_string(), "h1^2 + 2*h1*h2 + h2^2");
        assert_eq!(s.pow(8).integrate(), int(70));
    }

    #[test]
    fn bidegree_intersection_on_p4_p5() {
        let spec = TruncatedRingSpec::projective_product(&[4, 5]);
        let h4 = GradedElement::<BigInt>::var(&spec, "h1").unwrap();
        let h5 = GradedElement::<BigInt>::var(&spec, "h2").unwrap();
        let e5 = &h4.scale(&int(-2)) + &h5.scale(&int(4));
        let x = &(&h4.pow(3) * &e5) * &(&h4 + &h5).pow(5);
        assert_eq!(x.integrate(), int(18));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = GradedElement::<BigInt>::one(&TruncatedRingSpec::projective_space(2));
        let b = GradedElement::<BigInt>::one(&TruncatedRingSpec::projective_space(3));
        assert_eq!(poly_mul(&a, &b), Err(Error::RingMismatch));
    }

    #[test]
    fn display_orders_by_grlex() {
        let spec = TruncatedRingSpec::projective_product(&[4, 4]);
        let h1 = GradedElement::<BigInt>::var(&spec, "h1").unwrap();
        let h2 = GradedElement::<BigInt>::var(&spec, "h2").unwrap();
        let x = &(&(&h1 * &h1) * &h2).scale(&int(3)) - &h2.pow(3).scale(&int(2));
        assert_eq!(x.to_string(), "3*h1^2*h2 - 2*h2^3");
        let y = &h2.neg_ref() + &GradedElement::constant(&spec, int(5));
        assert_eq!(y.to_string(), "-h2 + 5");
    }

    #[test]
    fn non_top_degree_integrates_to_zero() {
        let p4 = TruncatedRingSpec::projective_space(4);
        let h = GradedElement::<BigInt>::var(&p4, "h").unwrap();
        assert_eq!(h.pow(3).integrate(), int(0));
    }
}
