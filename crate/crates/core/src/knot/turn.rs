use std::fmt;
use std::str::FromStr;

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::numerics::CertifiedReal;

/// A point `e^{2πi·turn}` of the unit circle.
#[derive(Clone, Debug)]
pub enum Turn {
    Exact(Rational),
    Approx(CertifiedReal),
}

impl Turn {
    pub fn new(num: i64, den: i64) -> Turn {
        assert!(den != 0);
        Turn::Exact(Rational::from((num, den)))
    }

    /// From an angle in radians.
    pub fn from_angle(angle: &CertifiedReal) -> Turn {
        let prec = angle.prec().max(64);
        let two_pi = CertifiedReal::pi(prec).mul_i64(2);
        Turn::Approx(angle.div(&two_pi).unwrap())
    }

    /// Representative in `[0, 1/2]` of the class of `±turn mod 1`; the
    /// signature function is invariant under conjugation.
    pub fn folded(&self) -> Turn {
        match self {
            Turn::Exact(r) => {
                let floor = r.clone().floor();
                let mut f = Rational::from(r - &floor);
                if f > (1, 2) {
                    f = Rational::from(1) - f;
                }
                Turn::Exact(f)
            }
            Turn::Approx(b) => {
                let m = b.midpoint().floor();
                let shifted = b - &CertifiedReal::from_float(m);
                if shifted.mid_f64() > 0.5 {
                    Turn::Approx(&CertifiedReal::from_i64(1, shifted.prec()) - &shifted)
                } else {
                    Turn::Approx(shifted)
                }
            }
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Turn::Exact(r) => Some(r),
            Turn::Approx(_) => None,
        }
    }

    pub fn to_ball(&self, prec: u32) -> CertifiedReal {
        match self {
            Turn::Exact(r) => CertifiedReal::from_rational(r, prec),
            Turn::Approx(b) => b.clone(),
        }
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Turn::Exact(r) => write!(f, "{r}"),
            Turn::Approx(b) => write!(f, "{b}"),
        }
    }
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"0.0887"` into an
/// exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational or decimal number: '{s}'"));
    if let Some((n, d)) = s.split_once('/') {
        let n = Integer::from_str(n.trim()).map_err(|_| bad())?;
        let d = Integer::from_str(d.trim()).map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::from((n, d)));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let num = Integer::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    let den = Integer::from(Integer::u_pow_u(10, frac_part.len() as u32));
    let r = Rational::from((num, den));
    Ok(if neg { -r } else { r })
}

impl FromStr for Turn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Turn> {
        parse_rational(s).map(Turn::Exact)
    }
}
