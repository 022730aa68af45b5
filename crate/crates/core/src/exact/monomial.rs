use std::cmp::Ordering;

/// A monomial stored sparsely as `(variable index, exponent)` pairs sorted by
/// index, with no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(index: usize, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial {
                exps: vec![(index, exp)],
            }
        }
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_dense(exps: &[u32]) -> Self {
        Monomial {
            exps: exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut m = Monomial::one();
        for (i, e) in pairs {
            m = m.mul(&Monomial::var(i, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|pos| self.exps[pos].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        out.push((i, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((j, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((i, e + f));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps: out }
    }

    pub fn degree(&self, weights: &[u32]) -> u32 {
        self.exps.iter().map(|&(i, e)| weights[i] * e).sum()
    }

    /// Graded lexicographic comparison: weighted degree first, then the
    /// exponent of the lowest-indexed variable that differs.
    pub fn grlex_cmp(&self, other: &Monomial, weights: &[u32]) -> Ordering {
        self.degree(weights)
            .cmp(&other.degree(weights))
            .then_with(|| {
                let n = weights.len();
                (0..n)
                    .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }
}
