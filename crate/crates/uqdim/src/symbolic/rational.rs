//! Exact rational scalars shared by every module.
//!
//! All exact arithmetic in this crate goes through [`Rat`], an
//! arbitrary-precision reduced fraction with positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rat = BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer shorthand.
pub fn int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `"p"` or `"p/q"`. Whitespace is not accepted.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.parse::<BigInt>()
            .map_err(|_| format!("invalid integer `{t}`"))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Renders integers bare (`"24500"`, `"-1"`) and proper fractions as `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for numeric evaluation paths.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "5/2", "-11/4"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // reduction and sign normalization
        assert_eq!(format_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(format_rat(&parse_rat("1/-2").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1.5").is_err());
    }
}
