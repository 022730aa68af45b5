use std::fmt;

use crate::error::{invalid, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; any other violation is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(p)`.
    pub fn row(p: usize) -> Self {
        Partition {
            parts: if p == 0 { vec![] } else { vec![p] },
        }
    }

    /// The one-column partition `(1^p)`.
    pub fn column(p: usize) -> Self {
        Partition { parts: vec![1; p] }
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i`, or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the Young diagram fits in `rows` rows of length at most `cols`.
    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.parts.len() <= rows && self.part(0) <= cols
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.part(0))
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Complement inside the `rows x cols` box, read backwards.
    pub fn complement(&self, rows: usize, cols: usize) -> Partition {
        let parts = (0..rows).rev().map(|i| cols - self.part(i)).collect();
        Partition::new(parts).expect("complement of a boxed partition")
    }

    /// All partitions inside the `rows x cols` box, by increasing size.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()).expect("decreasing by construction"));
            if prefix.len() == rows {
                return;
            }
            for p in 1..=bound {
                prefix.push(p);
                rec(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        out
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn standard_tableaux(&self) -> num_bigint::BigInt {
        let conj = self.conjugate();
        let mut hooks = num_bigint::BigInt::from(1);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.part(j) - i - 1;
                hooks *= arm + leg + 1;
            }
        }
        crate::exact::factorial(self.size()) / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap().parts(), &[2, 1]);
    }

    #[test]
    fn box_enumeration_counts() {
        // C(rows + cols, rows)
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(Partition::all_in_box(3, 2).len(), 10);
        assert_eq!(Partition::all_in_box(3, 4).len(), 35);
    }

    #[test]
    fn complement_and_conjugate() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.complement(2, 3), Partition::new(vec![2, 1]).unwrap());
        assert_eq!(p.complement(3, 2), Partition::new(vec![2, 1]).unwrap());
        assert_eq!(
            Partition::new(vec![3, 1]).unwrap().conjugate().parts(),
            &[2, 1, 1]
        );
    }

    #[test]
    fn hook_length() {
        assert_eq!(Partition::rectangle(3, 2).standard_tableaux(), 5.into());
        assert_eq!(Partition::rectangle(2, 2).standard_tableaux(), 2.into());
        assert_eq!(
            Partition::new(vec![3, 2, 1]).unwrap().standard_tableaux(),
            16.into()
        );
    }
}
