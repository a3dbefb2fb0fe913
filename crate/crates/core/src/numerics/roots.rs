//! Certified isolation of complex roots.
//!
//! Approximations come from Aberth iteration in MPFR arithmetic. Each
//! approximation `z` is then certified with a contraction test: with
//! `y ≈ 1/f'(z)` and Taylor coefficients `T_j` of `f` at `z`, the Newton-type
//! map `w ↦ w - y f(w)` sends the disc `D(z, r)` into itself and is a
//! contraction there whenever
//!
//! ```text
//! q = |1 - y T_1| + |y| Σ_{j≥2} j |T_j| r^(j-1) < 1   and   |y T_0| ≤ (1 - q) r,
//! ```
//!
//! so the disc holds exactly one simple root. Square-free factors are handled
//! separately and every disc must be disjoint from every other one, which
//! pins down all roots with their multiplicities.

use std::cmp::Ordering;

use rug::float::Round;
use rug::{Float, Integer};

use super::ball::{CertifiedReal, DEFAULT_PRECISION_CAP, MIN_PREC};
use super::complex::{ComplexBall, Cx};
use crate::algebra::IntPoly;
use crate::error::{Error, Result};

/// A certified root: the box `re × im` contains exactly one distinct root,
/// of the given multiplicity.
#[derive(Clone, Debug)]
pub struct CertifiedComplexBox {
    pub re: CertifiedReal,
    pub im: CertifiedReal,
    pub multiplicity: u32,
    center: Cx,
    radius: Float,
}

impl CertifiedComplexBox {
    fn new(center: Cx, radius: Float, multiplicity: u32) -> Self {
        let c = ComplexBall::from_point(&center);
        CertifiedComplexBox {
            re: c.re.inflate(&radius),
            im: c.im.inflate(&radius),
            multiplicity,
            center,
            radius,
        }
    }

    pub fn center(&self) -> (f64, f64) {
        (self.center.re.to_f64(), self.center.im.to_f64())
    }

    /// Radius of the certified disc around the center.
    pub fn radius(&self) -> f64 {
        self.radius.to_f64_round(Round::Up)
    }

    /// Enclosure of `|root|`.
    pub fn modulus(&self) -> CertifiedReal {
        let m = ComplexBall::from_point(&self.center).abs();
        let p = m.prec();
        let lo = Float::with_val_round(p, m.lower() - &self.radius, Round::Down).0;
        let lo = if lo.is_sign_negative() { Float::with_val(p, 0) } else { lo };
        let hi = Float::with_val_round(p, m.upper() + &self.radius, Round::Up).0;
        CertifiedReal::from_bounds(lo, hi)
    }

    /// `Less` if certainly inside the unit circle, `Greater` if certainly
    /// outside, `None` otherwise.
    pub fn unit_position(&self) -> Option<Ordering> {
        let m = self.modulus();
        if *m.upper() < 1 {
            Some(Ordering::Less)
        } else if *m.lower() > 1 {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

/// Isolates every root of `p` in a disc of radius at most `target_radius`.
///
/// Boxes are ordered by real part, then imaginary part.
pub fn isolate_roots(p: &IntPoly, target_radius: f64) -> Result<Vec<CertifiedComplexBox>> {
    isolate_roots_with_cap(p, target_radius, DEFAULT_PRECISION_CAP)
}

pub fn isolate_roots_with_cap(
    p: &IntPoly,
    target_radius: f64,
    cap: u32,
) -> Result<Vec<CertifiedComplexBox>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    refine_until(p, cap, |boxes| {
        boxes
            .iter()
            .all(|b| b.radius <= target_radius)
            .then(|| boxes.to_vec())
    })
}

struct Factor {
    coeffs: Vec<Integer>,
    multiplicity: u32,
    approx: Vec<Cx>,
}

/// Raises precision until the certified boxes satisfy `accept`.
pub(crate) fn refine_until<T>(
    p: &IntPoly,
    cap: u32,
    mut accept: impl FnMut(&[CertifiedComplexBox]) -> Option<T>,
) -> Result<T> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors: Vec<Factor> = p
        .squarefree_decomposition()
        .into_iter()
        .filter(|(f, _)| f.deg() > 0)
        .map(|(f, m)| Factor { coeffs: f.coeffs().to_vec(), multiplicity: m, approx: Vec::new() })
        .collect();
    let mut prec = MIN_PREC;
    loop {
        if let Some(boxes) = certify_all(&mut factors, prec) {
            if let Some(out) = accept(&boxes) {
                return Ok(out);
            }
        }
        if prec >= cap {
            return Err(Error::PrecisionExhausted { cap });
        }
        prec = (prec * 2).min(cap);
    }
}

fn certify_all(factors: &mut [Factor], prec: u32) -> Option<Vec<CertifiedComplexBox>> {
    let mut boxes = Vec::new();
    for f in factors.iter_mut() {
        aberth(&f.coeffs, &mut f.approx, prec);
        for z in &f.approx {
            let r = certify(&f.coeffs, z, prec)?;
            boxes.push(CertifiedComplexBox::new(z.clone(), r, f.multiplicity));
        }
    }
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            let d = ComplexBall::from_point(&boxes[i].center)
                .sub(&ComplexBall::from_point(&boxes[j].center))
                .abs_lower();
            let rs = Float::with_val_round(prec, &boxes[i].radius + &boxes[j].radius, Round::Up).0;
            if d <= rs {
                return None;
            }
        }
    }
    boxes.sort_by(|a, b| a.center.cmp_lex(&b.center));
    Some(boxes)
}

fn initial_guesses(coeffs: &[Integer], prec: u32) -> Vec<Cx> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d].to_f64().abs();
    // Fujiwara-style scale: max |c_k / c_d|^(1/(d-k))
    let scale = (0..d)
        .map(|k| (coeffs[k].to_f64().abs() / lead).powf(1.0 / (d - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    (0..d)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Cx::polar(scale, angle, prec)
        })
        .collect()
}

fn aberth(coeffs: &[Integer], approx: &mut Vec<Cx>, prec: u32) {
    let d = coeffs.len() - 1;
    if d == 1 {
        let num = -Float::with_val(prec, &coeffs[0]);
        *approx = vec![Cx::new(num / &coeffs[1], Float::new(prec))];
        return;
    }
    if approx.len() != d {
        *approx = initial_guesses(coeffs, prec);
    } else {
        for z in approx.iter_mut() {
            z.set_prec(prec);
        }
    }
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) + 8));
    let max_iter = 200 + prec as usize / 4;
    for _ in 0..max_iter {
        let mut worst = Float::new(prec);
        for i in 0..d {
            let (v, dv) = Cx::eval_with_derivative(coeffs, &approx[i]);
            if v.re.is_zero() && v.im.is_zero() {
                continue;
            }
            let Some(ratio) = v.div(&dv) else {
                let bump = Cx::polar(1e-3, i as f64 + 1.0, prec);
                approx[i] = approx[i].add(&bump);
                worst = Float::with_val(prec, 1);
                continue;
            };
            let mut s = Cx::zero(prec);
            for j in 0..d {
                if j != i {
                    if let Some(inv) = approx[i].sub(&approx[j]).recip() {
                        s = s.add(&inv);
                    }
                }
            }
            let one = Cx::from_int(&Integer::from(1), prec);
            let denom = one.sub(&ratio.mul(&s));
            let w = ratio.div(&denom).unwrap_or(ratio);
            if !w.is_finite() {
                continue;
            }
            approx[i] = approx[i].sub(&w);
            let size = approx[i].abs().max(&Float::with_val(prec, 1));
            let rel = w.abs() / size;
            if rel > worst {
                worst = rel;
            }
        }
        if worst <= tol {
            break;
        }
    }
}

fn up<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Up).0
}

/// Radius of a disc around `z` holding exactly one root of the square-free
/// `coeffs`, or `None` if the contraction test fails at this precision.
fn certify(coeffs: &[Integer], z: &Cx, prec: u32) -> Option<Float> {
    let zb = ComplexBall::from_point(z);
    let mut b: Vec<ComplexBall> = coeffs.iter().map(|c| ComplexBall::from_int(c, prec)).collect();
    let mut taylor = Vec::with_capacity(b.len());
    while !b.is_empty() {
        let n = b.len();
        let mut acc = b[n - 1].clone();
        let mut q = Vec::with_capacity(n - 1);
        for k in (0..n - 1).rev() {
            q.push(acc.clone());
            acc = b[k].add(&acc.mul(&zb));
        }
        q.reverse();
        taylor.push(acc);
        b = q;
    }
    let t1_mid = Cx::new(taylor[1].re.midpoint(), taylor[1].im.midpoint());
    let y = t1_mid.recip()?;
    let yb = ComplexBall::from_point(&y);
    let a0 = yb.mul(&taylor[0]).abs_upper();
    let one = ComplexBall::from_int(&Integer::from(1), prec);
    let c1 = one.sub(&yb.mul(&taylor[1])).abs_upper();
    let ya = yb.abs_upper();
    let tj: Vec<Float> = taylor.iter().skip(2).map(|t| t.abs_upper()).collect();

    let zabs = z.abs().max(&Float::with_val(prec, 1));
    let tiny = up(prec, &zabs * &Float::with_val(prec, Float::i_exp(1, -(prec as i32))));
    let mut r = up(prec, &a0 * 2u32);
    if r < tiny {
        r = tiny;
    }
    // E = Σ_{j≥2} j |T_j| r^(j-1)
    let mut e = Float::new(prec);
    let mut rpow = r.clone();
    for (k, t) in tj.iter().enumerate() {
        let j = (k + 2) as u32;
        let term = up(prec, &up(prec, t * &rpow) * j);
        e = up(prec, &e + &term);
        rpow = up(prec, &rpow * &r);
    }
    let q = up(prec, &c1 + &up(prec, &ya * &e));
    if q >= 1 {
        return None;
    }
    let lhs = up(prec, &a0 + &up(prec, &q * &r));
    (lhs <= r).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn quadratic_with_real_roots() {
        let boxes = isolate_roots(&p(&[1, -3, 1]), 1e-12).unwrap();
        assert_eq!(boxes.len(), 2);
        let s5 = 5f64.sqrt();
        assert!(boxes[0].re.contains_f64((3.0 - s5) / 2.0) || boxes[0].radius() > 0.0);
        assert!((boxes[0].re.mid_f64() - (3.0 - s5) / 2.0).abs() < 1e-14);
        assert!((boxes[1].re.mid_f64() - (3.0 + s5) / 2.0).abs() < 1e-14);
        for b in &boxes {
            assert!(b.radius() <= 1e-12);
            assert!(b.im.contains_f64(0.0));
            assert_eq!(b.multiplicity, 1);
        }
    }

    #[test]
    fn sixth_roots_of_unity() {
        let boxes = isolate_roots(&p(&[1, -1, 1]), 1e-12).unwrap();
        assert_eq!(boxes.len(), 2);
        let h = 3f64.sqrt() / 2.0;
        assert!((boxes[0].im.mid_f64() + h).abs() < 1e-14);
        assert!((boxes[1].im.mid_f64() - h).abs() < 1e-14);
        for b in &boxes {
            assert!((b.re.mid_f64() - 0.5).abs() < 1e-14);
            assert!(b.modulus().contains_f64(1.0));
            assert_eq!(b.unit_position(), None);
        }
    }

    #[test]
    fn largest_root_of_9_48() {
        let boxes = isolate_roots(&p(&[1, -7, 11, -7, 1]), 1e-12).unwrap();
        assert_eq!(boxes.len(), 4);
        let max = boxes
            .iter()
            .map(|b| b.modulus().mid_f64())
            .fold(0.0f64, f64::max);
        assert!((max - 5.106964607734756).abs() < 1e-12);
    }

    #[test]
    fn multiplicities_from_repeated_factors() {
        let f = p(&[-2, 0, 1]);
        let q = &(&f * &f) * &p(&[1, 1]);
        let boxes = isolate_roots(&q, 1e-20).unwrap();
        let mults: Vec<u32> = boxes.iter().map(|b| b.multiplicity).collect();
        assert_eq!(mults, [2, 1, 2]);
        assert!((boxes[2].re.mid_f64() - 2f64.sqrt()).abs() < 1e-15);
        assert!(boxes.iter().all(|b| b.radius() <= 1e-20));
    }

    #[test]
    fn exact_rational_roots_and_zero() {
        let boxes = isolate_roots(&p(&[0, -1, 2]), 1e-12).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes[0].re.contains_f64(0.0));
        assert!(boxes[1].re.contains_f64(0.5));
        assert!(isolate_roots(&p(&[7]), 1e-12).unwrap().is_empty());
        assert!(matches!(isolate_roots(&IntPoly::zero(), 1e-12), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn precision_cap_is_reported() {
        let r = isolate_roots_with_cap(&p(&[1, -3, 1]), 1e-300, 128);
        assert!(matches!(r, Err(Error::PrecisionExhausted { cap: 128 })));
    }

    #[test]
    fn higher_degree_catalog_polynomials() {
        let ds = p(&[25, -250, 1035, -2300, 2981, -2300, 1035, -250, 25]);
        let boxes = isolate_roots(&ds, 1e-15).unwrap();
        assert_eq!(boxes.iter().map(|b| b.multiplicity as usize).sum::<usize>(), 8);
        let df = p(&[-1, 29, -254, 1035, -2304, 2991, -2304, 1035, -254, 29, -1]);
        let boxes = isolate_roots(&df, 1e-15).unwrap();
        assert_eq!(boxes.len(), 10);
        // product of roots equals c0 / c_d = 1
        let prod: f64 = boxes.iter().map(|b| b.modulus().mid_f64()).product();
        assert!((prod - 1.0).abs() < 1e-10);
    }
}
