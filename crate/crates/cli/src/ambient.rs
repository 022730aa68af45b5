//! Ambient declarations `P4 x P5`.

use std::sync::Arc;

use chowkit::exact::TruncatedRingSpec;
use chowkit::TruncatedRing;

use crate::expr::ParseError;

/// A product of projective spaces, binding `h1, ..., hm` to its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    pub dims: Vec<u32>,
}

impl Ambient {
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let chars: Vec<char> = input.chars().collect();
        let mut i = 0;
        let mut dims = Vec::new();
        let skip_ws = |i: &mut usize| {
            while *i < chars.len() && chars[*i].is_whitespace() {
                *i += 1;
            }
        };
        loop {
            skip_ws(&mut i);
            if i >= chars.len() || !matches!(chars[i], 'P' | 'p') {
                return Err(ParseError {
                    position: i,
                    message: "expected a factor P<n>".into(),
                });
            }
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            match digits.parse::<u32>() {
                Ok(n) if n >= 1 => dims.push(n),
                _ => {
                    return Err(ParseError {
                        position: start,
                        message: "expected a positive dimension".into(),
                    })
                }
            }
            skip_ws(&mut i);
            if i == chars.len() {
                return Ok(Ambient { dims });
            }
            if !matches!(chars[i], 'x' | 'X' | '×') {
                return Err(ParseError {
                    position: i,
                    message: "expected 'x' between factors".into(),
                });
            }
            i += 1;
        }
    }

    pub fn dim(&self) -> u32 {
        self.dims.iter().sum()
    }

    pub fn spec(&self) -> Arc<TruncatedRingSpec> {
        TruncatedRingSpec::projective_product(&self.dims)
    }

    pub fn ring(&self) -> TruncatedRing {
        TruncatedRing::new(self.spec())
    }
}

impl std::fmt::Display for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|n| format!("P{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        assert_eq!(Ambient::parse("P4 x P5").unwrap().dims, vec![4, 5]);
        assert_eq!(Ambient::parse(" P1 ").unwrap().dims, vec![1]);
        assert_eq!(
            Ambient::parse("P2xP2xP3").unwrap().to_string(),
            "P2 x P2 x P3"
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(Ambient::parse("P4 x Q5").unwrap_err().position, 5);
        assert_eq!(Ambient::parse("P0").unwrap_err().position, 1);
        assert_eq!(Ambient::parse("P4 P5").unwrap_err().position, 3);
        assert!(Ambient::parse("").is_err());
    }
}
