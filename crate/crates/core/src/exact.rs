//! Exact scalar helpers: big-rational construction, parsing and printing in
//! the `p/q` convention, integer square-root over-approximation for shell
//! bounds, and a rational complex type for exact (τ, h) bookkeeping.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The rational `n`.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `num/den`.
///
/// # Panics
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q`, a plain integer, or a decimal such as `-0.75`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("cannot read `{s}` as a rational"))    ;
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let int: BigInt = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = frac.parse().map_err(|_| bad())?;
        let den = BigInt::from(10u8).pow(frac.len() as u32);
        let frac_part = BigRational::new(num * sign, den);
        return Ok(BigRational::from_integer(int) + frac_part);
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Prints `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a comma-separated vector of rationals, e.g. `1/2,0,-3`.
pub fn parse_rational_vector(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(parse_rational).collect()
}

/// An integer `t ≥ 0` with `t ≥ √x`; exact filtering downstream makes the
/// slack harmless. Returns 0 for negative `x`.
pub fn sqrt_upper(x: &BigRational) -> BigInt {
    if x.is_negative() || x.is_zero() {
        return BigInt::zero();
    }
    let floor = x.to_integer();
    floor.sqrt() + 1
}

/// A complex number with exact rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl RationalComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        RationalComplex { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        RationalComplex {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        RationalComplex {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalComplex::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalComplex::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalComplex::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    pub fn neg(&self) -> Self {
        RationalComplex::new(-self.re.clone(), -self.im.clone())
    }

    /// Scales by a rational.
    pub fn scale(&self, c: &BigRational) -> Self {
        RationalComplex::new(&self.re * c, &self.im * c)
    }

    pub fn to_f64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            rational_to_f64(&self.re),
            rational_to_f64(&self.im),
        )
    }
}

/// Rounds a rational to the nearest `f64` (numerator/denominator division).
pub fn rational_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Fast path for small values; fall back to string parsing for huge ones.
    if let (Some(n), Some(d)) = (to_i128(num), to_i128(den)) {
        return n as f64 / d as f64;
    }
    let digits = 30usize;
    let scale = BigInt::from(10u8).pow(digits as u32);
    let scaled = (num * &scale).div_floor(den);
    let s: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
    s / 10f64.powi(digits as i32)
}

fn to_i128(n: &BigInt) -> Option<i128> {
    i128::try_from(n.clone()).ok()
}

/// Parses `a+bi` style complex numbers: accepts `2`, `-1.5`, `i`, `-i`,
/// `2i`, `1+2i`, `0.5-0.25i`, with optional exponent notation in each part.
pub fn parse_complex(s: &str) -> Result<num_complex::Complex64> {
    let raw = s.trim().replace(' ', "");
    let bad = || Error::Parse(format!("cannot read `{s}` as a complex number"));
    if raw.is_empty() {
        return Err(bad());
    }
    if !raw.ends_with('i') && !raw.ends_with('I') {
        let re: f64 = raw.parse().map_err(|_| bad())?;
        return Ok(num_complex::Complex64::new(re, 0.0));
    }
    let body = &raw[..raw.len() - 1];
    // Split at the last top-level sign (not leading, not part of an exponent).
    let mut split = None;
    for (idx, ch) in body.char_indices().skip(1) {
        if ch == '+' || ch == '-' {
            let prev = body.as_bytes()[idx - 1];
            if prev != b'e' && prev != b'E' {
                split = Some(idx);
            }
        }
    }
    let (re_str, im_str) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("0", body),
    };
    let re: f64 = if re_str.is_empty() {
        0.0
    } else {
        re_str.parse().map_err(|_| bad())?
    };
    let im: f64 = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse().map_err(|_| bad())?,
    };
    Ok(num_complex::Complex64::new(re, im))
}

/// Prints a complex number in the `a+bi` convention used by the CLI.
pub fn format_complex(z: num_complex::Complex64) -> String {
    if z.im >= 0.0 || z.im.is_nan() {
        format!("{}+{}i", z.re, z.im)
    } else {
        format!("{}-{}i", z.re, -z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("3/-4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-0.75").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational(" 1/2 ").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn format_round_trip() {
        for s in ["-7/3", "5", "0", "1/2"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn rational_vector_parsing() {
        let v = parse_rational_vector("1/2,0,-3").unwrap();
        assert_eq!(v, vec![rat(1, 2), rat_int(0), rat_int(-3)]);
    }

    #[test]
    fn sqrt_upper_bounds() {
        for (num, den) in [(0i64, 1i64), (1, 1), (2, 1), (49, 4), (97, 3)] {
            let x = rat(num, den);
            let t = sqrt_upper(&x);
            let t = BigRational::from_integer(t);
            assert!(&t * &t >= x, "bound too small for {num}/{den}");
        }
    }

    #[test]
    fn complex_parsing() {
        let cases = [
            ("2", 2.0, 0.0),
            ("-1.5", -1.5, 0.0),
            ("i", 0.0, 1.0),
            ("-i", 0.0, -1.0),
            ("2i", 0.0, 2.0),
            ("1+2i", 1.0, 2.0),
            ("0.5-0.25i", 0.5, -0.25),
            ("1e-2+3i", 0.01, 3.0),
            ("-1.5e1-2e-1i", -15.0, -0.2),
        ];
        for (s, re, im) in cases {
            let z = parse_complex(s).unwrap();
            assert_eq!((z.re, z.im), (re, im), "parsing {s}");
        }
        assert!(parse_complex("foo").is_err());
        assert!(parse_complex("1+2j").is_err());
    }

    #[test]
    fn rational_complex_arithmetic() {
        let a = RationalComplex::new(rat(1, 2), rat_int(1));
        let b = RationalComplex::new(rat_int(2), rat(-1, 3));
        let prod = a.mul(&b);
        // (1/2 + i)(2 − i/3) = 1 + 1/3 + (2 − 1/6) i
        assert_eq!(prod.re, rat(4, 3));
        assert_eq!(prod.im, rat(11, 6));
        assert_eq!(a.add(&b).sub(&b), a);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn rational_to_f64_matches() {
        assert_eq!(rational_to_f64(&rat(1, 2)), 0.5);
        assert!((rational_to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
