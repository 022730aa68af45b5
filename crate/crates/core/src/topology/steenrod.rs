use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::exact::{binomial, Gf2, GradedElement, Monomial, TruncatedRingSpec};

/// Polynomials in `w2, w3, w4` over `Z/2`.
pub type SWPolynomial = GradedElement<Gf2>;

/// `H*(BSO(4); Z/2) = Z/2[w2, w3, w4]`.
pub fn sw_ring() -> &'static Arc<TruncatedRingSpec> {
    static RING: OnceLock<Arc<TruncatedRingSpec>> = OnceLock::new();
    RING.get_or_init(|| TruncatedRingSpec::free(&[("w2", 2), ("w3", 3), ("w4", 4)]))
}

/// `w_j` with `w0 = 1`, `w1 = 0` and `w_j = 0` for `j > 4`.
pub fn w(j: u32) -> SWPolynomial {
    let spec = sw_ring();
    match j {
        0 => GradedElement::one(spec),
        2..=4 => GradedElement::var_at(spec, (j - 2) as usize),
        _ => GradedElement::zero(spec),
    }
}

/// Wu's formula with `w1 = 0`:
/// `Sq^i(w_j) = Σ_{t=0}^{i} C(j-i+t-1, t) w_{i-t} w_{j+t}` for `i < j`.
fn sq_generator(i: u32, j: u32) -> SWPolynomial {
    if i == 0 {
        return w(j);
    }
    if i > j {
        return w(0).scale(&Gf2(false));
    }
    if i == j {
        return &w(j) * &w(j);
    }
    let mut acc = GradedElement::zero(sw_ring());
    for t in 0..=i {
        let c = binomial((j - i + t) as i64 - 1, t as i64);
        if (c % 2u8).is_zero() {
            continue;
        }
        acc = &acc + &(&w(i - t) * &w(j + t));
    }
    acc
}

/// Total square `Sq = Σ_i Sq^i` of a generator `w_j`.
fn total_generator(j: u32) -> SWPolynomial {
    (0..=j).fold(GradedElement::zero(sw_ring()), |acc, i| {
        &acc + &sq_generator(i, j)
    })
}

/// The total square, a ring endomorphism determined on generators by Wu's
/// formula (Cartan formula).
pub fn total_square(x: &SWPolynomial) -> SWPolynomial {
    let spec = sw_ring();
    let gens: Vec<SWPolynomial> = (2..=4).map(total_generator).collect();
    let mut cache: BTreeMap<Monomial, SWPolynomial> = BTreeMap::new();
    let mut acc = GradedElement::zero(spec);
    for (m, c) in x.terms() {
        if !c.is_one() {
            continue;
        }
        let image = cache.entry(m.clone()).or_insert_with(|| {
            m.iter().fold(GradedElement::one(spec), |acc, (i, e)| {
                &acc * &gens[i].pow(e)
            })
        });
        acc = &acc + image;
    }
    acc
}

/// `Sq^i(x)`: the degree `d + i` part of the total square of each degree-`d`
/// part of `x`.
pub fn steenrod_sq(i: u32, x: &SWPolynomial) -> SWPolynomial {
    let spec = sw_ring();
    let weights = spec.weights();
    let mut by_degree: BTreeMap<u32, Vec<(Monomial, Gf2)>> = BTreeMap::new();
    for (m, c) in x.terms() {
        by_degree
            .entry(m.degree(weights))
            .or_default()
            .push((m.clone(), *c));
    }
    by_degree
        .into_iter()
        .fold(GradedElement::zero(spec), |acc, (d, terms)| {
            let part = GradedElement::from_terms(spec, terms);
            &acc + &total_square(&part).homogeneous(d + i)
        })
}

/// Whether `x² ≠ 0`, computed rather than assumed.
pub fn square_nonvanishing(x: &SWPolynomial) -> bool {
    !(x * x).is_zero()
}
