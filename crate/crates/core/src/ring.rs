use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{GradedElement, TruncatedRingSpec};

/// A graded intersection ring with rational coefficients and a degree
/// functional on its top-degree part.
///
/// Characteristic-class computations are written once against this trait and
/// run on products of projective spaces, Grassmannians and projective bundles.
pub trait IntersectionRing {
    type Elem: Clone + PartialEq + fmt::Debug;

    /// Top degree; classes of higher degree vanish.
    fn dim(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &BigRational) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn homogeneous(&self, a: &Self::Elem, degree: usize) -> Self::Elem;
    fn integrate(&self, a: &Self::Elem) -> BigRational;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_integral(&self, a: &Self::Elem) -> bool;
    /// The scalar `c` with `homogeneous(a, 0) = c * 1`.
    fn unit_coefficient(&self, a: &Self::Elem) -> BigRational;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.scale(a, &-BigRational::one())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn constant(&self, c: &BigRational) -> Self::Elem {
        self.scale(&self.one(), c)
    }

    fn pow(&self, a: &Self::Elem, exp: usize) -> Self::Elem {
        (0..exp).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Self::Elem>) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn product<'a>(&self, items: impl IntoIterator<Item = &'a Self::Elem>) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }
}

/// Rational intersection ring of a [`TruncatedRingSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedRing {
    spec: Arc<TruncatedRingSpec>,
}

impl TruncatedRing {
    /// Panics if the spec has no degree cap; only capped rings are
    /// intersection rings.
    pub fn new(spec: Arc<TruncatedRingSpec>) -> Self {
        assert!(spec.cap().is_some(), "intersection rings need a degree cap");
        TruncatedRing { spec }
    }

    pub fn projective_product(dims: &[u32]) -> Self {
        Self::new(TruncatedRingSpec::projective_product(dims))
    }

    pub fn projective_space(n: u32) -> Self {
        Self::new(TruncatedRingSpec::projective_space(n))
    }

    pub fn spec(&self) -> &Arc<TruncatedRingSpec> {
        &self.spec
    }

    pub fn var(&self, name: &str) -> GradedElement<BigRational> {
        GradedElement::var(&self.spec, name).expect("unknown variable")
    }

    pub fn var_at(&self, index: usize) -> GradedElement<BigRational> {
        GradedElement::var_at(&self.spec, index)
    }

    /// Linear form `Σ coeffs[i] * x_i`.
    pub fn linear(&self, coeffs: &[i64]) -> GradedElement<BigRational> {
        coeffs.iter().enumerate().fold(self.zero(), |acc, (i, &c)| {
            &acc + &self.var_at(i).scale(&crate::exact::rat(c))
        })
    }
}

impl IntersectionRing for TruncatedRing {
    type Elem = GradedElement<BigRational>;

    fn dim(&self) -> usize {
        self.spec.cap().unwrap_or(0) as usize
    }

    fn zero(&self) -> Self::Elem {
        GradedElement::zero(&self.spec)
    }

    fn one(&self) -> Self::Elem {
        GradedElement::one(&self.spec)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a + b
    }

    fn scale(&self, a: &Self::Elem, c: &BigRational) -> Self::Elem {
        if c.is_zero() {
            return self.zero();
        }
        a.scale(c)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a * b
    }

    fn homogeneous(&self, a: &Self::Elem, degree: usize) -> Self::Elem {
        a.homogeneous(degree as u32)
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
        a.coefficient(&crate::exact::Monomial::one())
    }
}
