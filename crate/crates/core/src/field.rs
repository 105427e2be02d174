//! Coefficient field selection for homology computations.

use std::fmt;
use std::str::FromStr;

/// Field over which boundary ranks are computed: exact rationals or a prime
/// field GF(p). The default prime for cross-checks is 32003.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
#[derive(Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u32),
}

pub const DEFAULT_CHECK_PRIME: u32 = 32003;

impl FieldSpec {
    pub fn is_rationals(self) -> bool {
        matches!(self, FieldSpec::Rationals)
    }
}


impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid field `{0}`: expected `q` or a prime below 2^31")]
pub struct FieldParseError(String);

impl FromStr for FieldSpec {
    type Err = FieldParseError;

    fn from_str(s: &str) -> Result<Self, FieldParseError> {
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let p: u32 = s.parse().map_err(|_| FieldParseError(s.to_string()))?;
        if p < (1 << 31) as u32 && is_prime(p as u64) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(FieldParseError(s.to_string()))
        }
    }
}

impl serde::Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fields() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("32003".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(32003));
        assert!("4".parse::<FieldSpec>().is_err());
        assert!("0".parse::<FieldSpec>().is_err());
    }
}
