use std::cmp::Ordering;

use rug::float::Round;
use rug::{Float, Integer};

use super::ball::CertifiedReal;

/// Rectangular complex enclosure.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexBall {
    pub re: CertifiedReal,
    pub im: CertifiedReal,
}

impl ComplexBall {
    pub fn new(re: CertifiedReal, im: CertifiedReal) -> Self {
        ComplexBall { re, im }
    }

    pub fn from_point(z: &Cx) -> Self {
        ComplexBall {
            re: CertifiedReal::from_float(z.re.clone()),
            im: CertifiedReal::from_float(z.im.clone()),
        }
    }

    pub fn from_int(v: &Integer, prec: u32) -> Self {
        ComplexBall {
            re: CertifiedReal::from_int(v, prec),
            im: CertifiedReal::from_f64(0.0),
        }
    }

    pub fn add(&self, o: &ComplexBall) -> ComplexBall {
        ComplexBall { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &ComplexBall) -> ComplexBall {
        ComplexBall { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &ComplexBall) -> ComplexBall {
        ComplexBall {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    fn max_abs(x: &CertifiedReal) -> Float {
        let a = Float::with_val(x.prec(), x.lower().abs_ref());
        let b = Float::with_val(x.prec(), x.upper().abs_ref());
        if a > b { a } else { b }
    }

    fn min_abs(x: &CertifiedReal) -> Float {
        if x.contains_zero() {
            return Float::with_val(x.prec(), 0);
        }
        let a = Float::with_val(x.prec(), x.lower().abs_ref());
        let b = Float::with_val(x.prec(), x.upper().abs_ref());
        if a < b { a } else { b }
    }

    /// Upper bound for `|z|` over the enclosure.
    pub fn abs_upper(&self) -> Float {
        let p = self.re.prec().max(self.im.prec());
        let a = Self::max_abs(&self.re);
        let b = Self::max_abs(&self.im);
        Float::with_val_round(p, a.hypot_ref(&b), Round::Up).0
    }

    /// Lower bound for `|z|` over the enclosure.
    pub fn abs_lower(&self) -> Float {
        let p = self.re.prec().max(self.im.prec());
        let a = Self::min_abs(&self.re);
        let b = Self::min_abs(&self.im);
        Float::with_val_round(p, a.hypot_ref(&b), Round::Down).0
    }

    pub fn abs(&self) -> CertifiedReal {
        CertifiedReal::from_bounds(self.abs_lower(), self.abs_upper())
    }

    /// Evaluates an integer polynomial (constant-first) by Horner's rule.
    pub fn eval_poly(coeffs: &[Integer], z: &ComplexBall, prec: u32) -> ComplexBall {
        let mut acc = ComplexBall::from_int(&Integer::new(), prec);
        for c in coeffs.iter().rev() {
            acc = acc.mul(z).add(&ComplexBall::from_int(c, prec));
        }
        acc
    }
}

/// Approximate complex number at a fixed precision, round-to-nearest.
#[derive(Clone, Debug, PartialEq)]
pub struct Cx {
    pub re: Float,
    pub im: Float,
}

impl Cx {
    pub fn new(re: Float, im: Float) -> Self {
        Cx { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Cx { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn from_int(v: &Integer, prec: u32) -> Self {
        Cx { re: Float::with_val(prec, v), im: Float::new(prec) }
    }

    pub fn polar(r: f64, angle: f64, prec: u32) -> Self {
        let a = Float::with_val(prec, angle);
        let r = Float::with_val(prec, r);
        Cx {
            re: Float::with_val(prec, a.cos_ref()) * &r,
            im: Float::with_val(prec, a.sin_ref()) * &r,
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn set_prec(&mut self, prec: u32) {
        self.re.set_prec(prec);
        self.im.set_prec(prec);
    }

    pub fn add(&self, o: &Cx) -> Cx {
        let p = self.prec();
        Cx {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        let p = self.prec();
        Cx {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Cx { re, im }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn recip(&self) -> Option<Cx> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        let p = self.prec();
        Some(Cx {
            re: Float::with_val(p, &self.re / &n),
            im: Float::with_val(p, -Float::with_val(p, &self.im / &n)),
        })
    }

    pub fn div(&self, o: &Cx) -> Option<Cx> {
        o.recip().map(|r| self.mul(&r))
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// `(p(z), p'(z))` by Horner's rule.
    pub fn eval_with_derivative(coeffs: &[Integer], z: &Cx) -> (Cx, Cx) {
        let p = z.prec();
        let mut val = Cx::zero(p);
        let mut der = Cx::zero(p);
        for c in coeffs.iter().rev() {
            der = der.mul(z).add(&val);
            val = val.mul(z).add(&Cx::from_int(c, p));
        }
        (val, der)
    }

    /// Deterministic ordering: real part, then imaginary part.
    pub fn cmp_lex(&self, o: &Cx) -> Ordering {
        self.re
            .partial_cmp(&o.re)
            .unwrap_or(Ordering::Equal)
            .then(self.im.partial_cmp(&o.im).unwrap_or(Ordering::Equal))
    }
}
