//! Helpers around [`BigRational`], the crate's exact rational type.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// `n / d` in lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Parses `"p"` or `"p/q"` (optional leading sign).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid integer {n:?}")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid integer {d:?}")))?;
    if d == BigInt::from(0) {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

/// Decimal `"p/q"` rendering, `"/1"` omitted.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_text() {
        for s in ["0", "-3", "7/2", "-1/6"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
