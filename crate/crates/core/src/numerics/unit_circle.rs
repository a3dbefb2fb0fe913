//! Exact location of roots on the unit circle.
//!
//! A reciprocal `p` of degree `2g` is `t^g Q(t + 1/t)`; unit-circle roots
//! `e^{±iθ}` correspond to real roots `x = 2cos θ` of `Q` in `[-2, 2]`, which
//! Sturm sequences count and isolate exactly.

use std::cmp::Ordering;

use rug::Rational;

use super::ball::{CertifiedReal, MIN_PREC};
use crate::algebra::cyclotomic::cyclotomic_poly;
use crate::algebra::{reciprocal_decompose, sturm_count, IntPoly, IsolatingInterval};
use crate::error::{Error, Result};

/// A real algebraic number: the unique root of `poly` in `interval`.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    poly: IntPoly,
    interval: IsolatingInterval,
}

impl RealAlgebraic {
    pub fn polynomial(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    pub fn refine_to(&mut self, width: &Rational) {
        self.interval.refine_to(&self.poly, width);
    }

    pub fn enclosure(&self, prec: u32) -> CertifiedReal {
        let lo = CertifiedReal::from_rational(&self.interval.lo, prec);
        let hi = CertifiedReal::from_rational(&self.interval.hi, prec);
        lo.hull(&hi)
    }

    /// Sign of `self - q`, decided exactly.
    pub fn cmp_rational(&mut self, q: &Rational) -> Ordering {
        loop {
            if self.interval.is_exact() {
                return self.interval.lo.cmp(q);
            }
            if *q <= self.interval.lo {
                return Ordering::Greater;
            }
            if *q > self.interval.hi {
                return Ordering::Less;
            }
            if *q == self.interval.hi {
                // the root lies in (lo, hi]
                if self.poly.sign_at(q) == Ordering::Equal {
                    return Ordering::Equal;
                }
                return Ordering::Less;
            }
            self.interval.bisect(&self.poly);
        }
    }
}

/// A root `e^{iθ}` with `θ ∈ (0, π]`; its conjugate is also a root.
#[derive(Clone, Debug)]
pub struct UnitCircleRoot {
    /// `2 cos θ`
    pub x: RealAlgebraic,
    /// Multiplicity of `e^{iθ}` as a root of `p`.
    pub multiplicity: u32,
    /// `θ` in radians.
    pub angle: CertifiedReal,
}

impl UnitCircleRoot {
    /// `θ / 2π`, in `(0, 1/2]`.
    pub fn turn(&self) -> CertifiedReal {
        let prec = self.angle.prec();
        let two_pi = CertifiedReal::pi(prec).mul_i64(2);
        self.angle.div(&two_pi).expect("2π is nonzero")
    }

    /// Re-certifies the angle to within `radius`.
    pub fn refine_angle(&mut self, radius: f64) {
        self.angle = angle_of(&mut self.x, radius);
    }

    pub fn is_minus_one(&self) -> bool {
        self.x.interval.is_exact() && self.x.interval.lo == -2
    }
}

fn bits_for(radius: f64) -> u32 {
    let bits = (-radius.log2()).ceil().max(0.0) as u32 + 24;
    bits.max(MIN_PREC)
}

/// `arccos(x / 2)` with radius at most `radius`.
fn angle_of(x: &mut RealAlgebraic, radius: f64) -> CertifiedReal {
    let mut prec = bits_for(radius);
    let mut width = Rational::from((1, 1u64 << 20));
    loop {
        x.refine_to(&width);
        let half = x.enclosure(prec).div(&CertifiedReal::from_i64(2, prec)).unwrap();
        let a = half.acos().expect("|x| ≤ 2 on the unit circle");
        if a.radius_f64() <= radius {
            return a;
        }
        // acos is steep near ±1: shrink the interval quadratically
        width = Rational::from(&width * &width);
        if width < (1, 1u64 << 62) {
            prec += 32;
        }
    }
}

/// Roots of a reciprocal polynomial on the unit circle with angle in
/// `(0, π]`, sorted by angle, each angle certified to within `radius`.
///
/// A root at `t = 1` has angle 0 and is not listed.
pub fn unit_circle_roots(p: &IntPoly, radius: f64) -> Result<Vec<UnitCircleRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = reciprocal_decompose(p)?;
    let two = Rational::from(2);
    let minus_two = Rational::from(-2);
    let mut out = Vec::new();
    for (f, m) in q.squarefree_decomposition() {
        if f.deg() == 0 {
            continue;
        }
        // (-2, 2] minus a possible root at 2
        let iso = sturm_count(&f, &minus_two, &two);
        for iv in iso.intervals {
            if iv.is_exact() && iv.lo == two {
                continue;
            }
            let mut x = RealAlgebraic { poly: f.clone(), interval: iv };
            let angle = angle_of(&mut x, radius);
            out.push(UnitCircleRoot { x, multiplicity: m, angle });
        }
        if f.sign_at(&minus_two) == Ordering::Equal {
            // t = -1 is a double root of (t + 1)^2 = t (x + 2)
            let x = RealAlgebraic {
                poly: f.clone(),
                interval: IsolatingInterval { lo: minus_two.clone(), hi: minus_two.clone() },
            };
            let angle = CertifiedReal::pi(bits_for(radius));
            out.push(UnitCircleRoot { x, multiplicity: 2 * m, angle });
        }
    }
    out.sort_by(|a, b| {
        a.angle
            .certified_cmp(&b.angle)
            .unwrap_or_else(|| a.angle.mid_f64().total_cmp(&b.angle.mid_f64()))
    });
    Ok(out)
}

/// Number of roots of `p` on the unit circle, with multiplicity.
///
/// Works for any `p`: the unit-circle roots are shared with the reversal, so
/// they are roots of `g = gcd(p, rev p)`. Stripping `t ∓ 1` from `g` leaves a
/// reciprocal polynomial of even degree.
pub fn unit_circle_root_count(p: &IntPoly) -> Result<u64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = p.gcd(&p.reversal());
    let mut count = 0u64;
    for n in [1u64, 2] {
        let phi = cyclotomic_poly(n);
        while let Some(h) = g.div_exact(&phi) {
            count += 1;
            g = h;
        }
    }
    if g.deg() == 0 {
        return Ok(count);
    }
    let g = if g.is_reciprocal() { g } else { -&g };
    let q = reciprocal_decompose(&g)?;
    let two = Rational::from(2);
    for (f, m) in q.squarefree_decomposition() {
        if f.deg() == 0 {
            continue;
        }
        let n = sturm_count(&f, &Rational::from(-2), &two).count as u64;
        count += 2 * n * m as u64;
    }
    // multiplicities in g match those in p at unit-circle roots
    Ok(count)
}
