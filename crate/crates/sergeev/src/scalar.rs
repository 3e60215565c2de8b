//! Exact rational coefficients.
//!
//! All arithmetic in this crate is exact. Coefficients are arbitrary-precision
//! rationals; every structure constant of the algebras is an integer, so
//! products of integral elements stay integral (useful for watching integer
//! phenomena such as the factor `l` in the overlap product of two h-polynomials).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn from_int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Parses "p" or "p/q" into an exact rational.
pub fn parse(s: &str) -> Result<Scalar, String> {
    s.parse::<Scalar>().map_err(|e| format!("bad rational {s:?}: {e}"))
}

/// Renders as "p" or "p/q"; `parse` round-trips this exactly.
pub fn render(x: &Scalar) -> String {
    x.to_string()
}

pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one() || (-x.denom()).is_one()
}

pub fn sign_scalar(s: i32) -> Scalar {
    if s >= 0 {
        one()
    } else {
        -one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_parse_roundtrip() {
        for s in ["0", "1", "-1", "3/2", "-7/5", "10"] {
            let x = parse(s).unwrap();
            assert_eq!(render(&x), s);
        }
    }

    #[test]
    fn integrality() {
        assert!(is_integer(&from_int(-4)));
        assert!(!is_integer(&parse("1/2").unwrap()));
    }
}
