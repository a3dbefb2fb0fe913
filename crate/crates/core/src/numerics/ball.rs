use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::{Float, Integer, Rational};

/// Default certified radius for logs, angles and the invariants built on them.
pub const DEFAULT_RADIUS: f64 = 1e-12;

/// Working precision never exceeds this many bits unless the caller raises it.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

pub(crate) const MIN_PREC: u32 = 64;

/// A real number known to lie in `[lower, upper]`.
///
/// Endpoints are MPFR floats produced with outward rounding, so every
/// operation returns an enclosure of the exact result. The midpoint/radius
/// view is derived from the endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct CertifiedReal {
    lo: Float,
    hi: Float,
}

macro_rules! rounded {
    ($prec:expr, $val:expr, $round:expr) => {
        Float::with_val_round($prec, $val, $round).0
    };
}

impl CertifiedReal {
    pub fn from_bounds(lo: Float, hi: Float) -> Self {
        assert!(!lo.is_nan() && !hi.is_nan(), "NaN endpoint");
        assert!(lo <= hi, "inverted interval");
        CertifiedReal { lo, hi }
    }

    pub fn exact_zero() -> Self {
        Self::from_f64(0.0)
    }

    pub fn from_f64(v: f64) -> Self {
        let f = Float::with_val(53, v);
        CertifiedReal { lo: f.clone(), hi: f }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_int(&Integer::from(v), prec)
    }

    pub fn from_int(v: &Integer, prec: u32) -> Self {
        CertifiedReal {
            lo: rounded!(prec, v, Round::Down),
            hi: rounded!(prec, v, Round::Up),
        }
    }

    pub fn from_rational(v: &Rational, prec: u32) -> Self {
        CertifiedReal {
            lo: rounded!(prec, v, Round::Down),
            hi: rounded!(prec, v, Round::Up),
        }
    }

    /// Exact value of a float (no rounding).
    pub fn from_float(v: Float) -> Self {
        CertifiedReal { lo: v.clone(), hi: v }
    }

    pub fn pi(prec: u32) -> Self {
        CertifiedReal {
            lo: rounded!(prec, Constant::Pi, Round::Down),
            hi: rounded!(prec, Constant::Pi, Round::Up),
        }
    }

    pub fn lower(&self) -> &Float {
        &self.lo
    }

    pub fn upper(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn midpoint(&self) -> Float {
        let p = self.prec() + 1;
        rounded!(p, &self.lo + &self.hi, Round::Nearest) / 2u32
    }

    /// Radius about [`midpoint`](Self::midpoint), rounded up.
    pub fn radius(&self) -> Float {
        let m = self.midpoint();
        let p = self.prec();
        let a = rounded!(p, &self.hi - &m, Round::Up);
        let b = rounded!(p, &m - &self.lo, Round::Up);
        if a > b { a } else { b }
    }

    pub fn mid_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }

    pub fn radius_f64(&self) -> f64 {
        self.radius().to_f64_round(Round::Up)
    }

    /// `(m, r)` in double precision with `[lower, upper] ⊆ [m - r, m + r]`.
    pub fn f64_ball(&self) -> (f64, f64) {
        let m = self.mid_f64();
        let mf = Float::with_val(64, m);
        let p = self.prec().max(64);
        let a = rounded!(p, &self.hi - &mf, Round::Up);
        let b = rounded!(p, &mf - &self.lo, Round::Up);
        let r = if a > b { a } else { b };
        (m, r.to_f64_round(Round::Up).max(0.0))
    }

    pub fn width(&self) -> Float {
        rounded!(self.prec(), &self.hi - &self.lo, Round::Up)
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64_round(Round::Up)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_exact_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.cmp0() != Some(Ordering::Greater) && self.hi.cmp0() != Some(Ordering::Less)
    }

    pub fn excludes_zero(&self) -> bool {
        !self.contains_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.cmp0() == Some(Ordering::Greater)
    }

    pub fn is_negative(&self) -> bool {
        self.hi.cmp0() == Some(Ordering::Less)
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && self.hi >= x
    }

    pub fn contains(&self, other: &CertifiedReal) -> bool {
        self.lo <= other.lo && self.hi >= other.hi
    }

    pub fn overlaps(&self, other: &CertifiedReal) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Integers inside the enclosure, if there are at most a few.
    pub fn integers_inside(&self) -> Vec<Integer> {
        let lo = self.lo.clone().ceil();
        let hi = self.hi.clone().floor();
        let (Some(lo), Some(hi)) = (lo.to_integer(), hi.to_integer()) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut k = lo;
        while k <= hi && out.len() < 16 {
            out.push(k.clone());
            k += 1;
        }
        out
    }

    pub fn contains_integer(&self) -> bool {
        !self.integers_inside().is_empty()
    }

    /// Smallest enclosure of both operands.
    pub fn hull(&self, other: &CertifiedReal) -> CertifiedReal {
        let lo = if self.lo <= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi >= other.hi { &self.hi } else { &other.hi };
        CertifiedReal { lo: lo.clone(), hi: hi.clone() }
    }

    /// Widens both ends by `r` (rounded outward).
    pub fn inflate(&self, r: &Float) -> CertifiedReal {
        let p = self.prec();
        CertifiedReal {
            lo: rounded!(p, &self.lo - r, Round::Down),
            hi: rounded!(p, &self.hi + r, Round::Up),
        }
    }

    pub fn abs(&self) -> CertifiedReal {
        if self.lo.cmp0() != Some(Ordering::Less) {
            self.clone()
        } else if self.hi.cmp0() != Some(Ordering::Greater) {
            -self
        } else {
            let a = Float::with_val(self.prec(), -&self.lo);
            let hi = if a > self.hi { a } else { self.hi.clone() };
            CertifiedReal { lo: Float::with_val(self.prec(), 0), hi }
        }
    }

    pub fn mul_int(&self, k: &Integer) -> CertifiedReal {
        self * &CertifiedReal::from_int(k, self.prec().max(k.significant_bits() + 8))
    }

    pub fn mul_i64(&self, k: i64) -> CertifiedReal {
        self.mul_int(&Integer::from(k))
    }

    pub fn div(&self, other: &CertifiedReal) -> Option<CertifiedReal> {
        if other.contains_zero() {
            return None;
        }
        let p = self.prec().max(other.prec());
        let cands = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = cands
            .iter()
            .map(|(a, b)| rounded!(p, *a / *b, Round::Down))
            .reduce(|x, y| if y < x { y } else { x })
            .unwrap();
        let hi = cands
            .iter()
            .map(|(a, b)| rounded!(p, *a / *b, Round::Up))
            .reduce(|x, y| if y > x { y } else { x })
            .unwrap();
        Some(CertifiedReal { lo, hi })
    }

    pub fn ln(&self) -> Option<CertifiedReal> {
        if !self.is_positive() {
            return None;
        }
        let p = self.prec();
        Some(CertifiedReal {
            lo: rounded!(p, self.lo.ln_ref(), Round::Down),
            hi: rounded!(p, self.hi.ln_ref(), Round::Up),
        })
    }

    pub fn exp(&self) -> CertifiedReal {
        let p = self.prec();
        CertifiedReal {
            lo: rounded!(p, self.lo.exp_ref(), Round::Down),
            hi: rounded!(p, self.hi.exp_ref(), Round::Up),
        }
    }

    pub fn sqrt(&self) -> Option<CertifiedReal> {
        if self.is_negative() {
            return None;
        }
        let p = self.prec();
        let lo = if self.lo.cmp0() == Some(Ordering::Less) {
            Float::with_val(p, 0)
        } else {
            rounded!(p, self.lo.sqrt_ref(), Round::Down)
        };
        Some(CertifiedReal { lo, hi: rounded!(p, self.hi.sqrt_ref(), Round::Up) })
    }

    /// `arccos` of the part of the enclosure inside `[-1, 1]`.
    pub fn acos(&self) -> Option<CertifiedReal> {
        if self.lo > 1 || self.hi < -1 {
            return None;
        }
        let p = self.prec();
        let top = if self.hi > 1 { Float::with_val(p, 1) } else { self.hi.clone() };
        let bot = if self.lo < -1 { Float::with_val(p, -1) } else { self.lo.clone() };
        Some(CertifiedReal {
            lo: rounded!(p, top.acos_ref(), Round::Down),
            hi: rounded!(p, bot.acos_ref(), Round::Up),
        })
    }

    /// `cos` and `sin` are 1-Lipschitz, so the image of the enclosure lies
    /// within the midpoint value widened by the radius.
    pub fn cos(&self) -> CertifiedReal {
        self.lipschitz_image(|m, r| rounded!(self.prec(), m.cos_ref(), r))
    }

    pub fn sin(&self) -> CertifiedReal {
        self.lipschitz_image(|m, r| rounded!(self.prec(), m.sin_ref(), r))
    }

    fn lipschitz_image(&self, f: impl Fn(&Float, Round) -> Float) -> CertifiedReal {
        let m = self.midpoint();
        let r = self.radius();
        let p = self.prec();
        let mut lo = rounded!(p, &f(&m, Round::Down) - &r, Round::Down);
        let mut hi = rounded!(p, &f(&m, Round::Up) + &r, Round::Up);
        if lo < -1 {
            lo = Float::with_val(p, -1);
        }
        if hi > 1 {
            hi = Float::with_val(p, 1);
        }
        CertifiedReal { lo, hi }
    }

    /// Certified strict comparison: `Some(Less)` if every point of `self` is
    /// below every point of `other`, `None` if the enclosures overlap.
    pub fn certified_cmp(&self, other: &CertifiedReal) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.is_exact() && other.is_exact() && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            return write!(f, "{} (exact)", self.mid_f64());
        }
        let digits = f.precision().unwrap_or(12);
        write!(f, "{:.*} ± {:.1e}", digits, self.mid_f64(), self.radius_f64())
    }
}

impl Add for &CertifiedReal {
    type Output = CertifiedReal;
    fn add(self, rhs: &CertifiedReal) -> CertifiedReal {
        let p = self.prec().max(rhs.prec());
        CertifiedReal {
            lo: rounded!(p, &self.lo + &rhs.lo, Round::Down),
            hi: rounded!(p, &self.hi + &rhs.hi, Round::Up),
        }
    }
}

impl Sub for &CertifiedReal {
    type Output = CertifiedReal;
    fn sub(self, rhs: &CertifiedReal) -> CertifiedReal {
        let p = self.prec().max(rhs.prec());
        CertifiedReal {
            lo: rounded!(p, &self.lo - &rhs.hi, Round::Down),
            hi: rounded!(p, &self.hi - &rhs.lo, Round::Up),
        }
    }
}

impl Mul for &CertifiedReal {
    type Output = CertifiedReal;
    fn mul(self, rhs: &CertifiedReal) -> CertifiedReal {
        let p = self.prec().max(rhs.prec());
        let cands = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let lo = cands
            .iter()
            .map(|(a, b)| rounded!(p, *a * *b, Round::Down))
            .reduce(|x, y| if y < x { y } else { x })
            .unwrap();
        let hi = cands
            .iter()
            .map(|(a, b)| rounded!(p, *a * *b, Round::Up))
            .reduce(|x, y| if y > x { y } else { x })
            .unwrap();
        CertifiedReal { lo, hi }
    }
}

impl Neg for &CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        CertifiedReal {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }
}

impl Neg for CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CertifiedReal {
            type Output = CertifiedReal;
            fn $m(self, rhs: CertifiedReal) -> CertifiedReal {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for CertifiedReal {
    fn sum<I: Iterator<Item = CertifiedReal>>(iter: I) -> CertifiedReal {
        iter.fold(CertifiedReal::exact_zero(), |a, b| &a + &b)
    }
}
