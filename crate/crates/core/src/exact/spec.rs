use std::sync::Arc;

use super::monomial::Monomial;
use crate::error::{invalid, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
    /// `Some(k)` imposes the relation `x^k = 0`.
    pub nilpotency: Option<u32>,
}

/// A graded polynomial ring modulo pure monomial relations: per-variable
/// nilpotency orders and an optional global degree cap.
///
/// With a cap, the ring is the intersection ring of a fixed-dimensional
/// space and carries a fundamental-class monomial of degree equal to the cap.
/// Without one it is a free polynomial ring (used for mod-2 cohomology).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedRingSpec {
    variables: Vec<Variable>,
    weights: Vec<u32>,
    cap: Option<u32>,
    fundamental: Option<Monomial>,
}

impl TruncatedRingSpec {
    pub fn new(
        variables: Vec<Variable>,
        cap: Option<u32>,
        fundamental: Option<Monomial>,
    ) -> Result<Arc<Self>> {
        if variables.iter().any(|v| v.weight == 0) {
            return Err(invalid("variable weights must be positive"));
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].iter().any(|w| w.name == v.name) {
                return Err(invalid(format!("duplicate variable name {}", v.name)));
            }
        }
        let weights: Vec<u32> = variables.iter().map(|v| v.weight).collect();
        if let Some(f) = &fundamental {
            if f.iter().any(|(i, _)| i >= variables.len()) {
                return Err(invalid("fundamental class uses an unknown variable"));
            }
            if Some(f.degree(&weights)) != cap {
                return Err(invalid(
                    "fundamental-class monomial must have degree equal to the cap",
                ));
            }
        }
        let spec = TruncatedRingSpec {
            variables,
            weights,
            cap,
            fundamental,
        };
        if let Some(f) = &spec.fundamental {
            if !spec.admits(f) {
                return Err(invalid("fundamental class violates a nilpotency relation"));
            }
        }
        Ok(Arc::new(spec))
    }

    /// The Chow ring of `P^{n_1} x ... x P^{n_m}` with hyperplane classes
    /// named `h1, ..., hm`.
    pub fn projective_product(dims: &[u32]) -> Arc<Self> {
        let names: Vec<String> = (1..=dims.len()).map(|i| format!("h{i}")).collect();
        Self::projective_product_named(dims, &names)
    }

    /// The Chow ring of `P^n` with hyperplane class `h`.
    pub fn projective_space(n: u32) -> Arc<Self> {
        Self::projective_product_named(&[n], &["h".to_string()])
    }

    pub fn projective_product_named(dims: &[u32], names: &[String]) -> Arc<Self> {
        assert_eq!(dims.len(), names.len(), "one name per factor");
        let variables = dims
            .iter()
            .zip(names)
            .map(|(&n, name)| Variable {
                name: name.clone(),
                weight: 1,
                nilpotency: Some(n + 1),
            })
            .collect();
        let fundamental = Monomial::from_dense(dims);
        Self::new(variables, Some(dims.iter().sum()), Some(fundamental))
            .expect("projective products are well-formed")
    }

    /// A free graded polynomial ring with the given `(name, weight)` generators.
    pub fn free(generators: &[(&str, u32)]) -> Arc<Self> {
        let variables = generators
            .iter()
            .map(|&(name, weight)| Variable {
                name: name.to_string(),
                weight,
                nilpotency: None,
            })
            .collect();
        Self::new(variables, None, None).expect("free rings are well-formed")
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn fundamental(&self) -> Option<&Monomial> {
        self.fundamental.as_ref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    /// Whether the monomial survives the truncation relations.
    pub fn admits(&self, m: &Monomial) -> bool {
        let within_cap = self.cap.is_none_or(|cap| m.degree(&self.weights) <= cap);
        within_cap
            && m.iter()
                .all(|(i, e)| self.variables[i].nilpotency.is_none_or(|k| e < k))
    }
}
