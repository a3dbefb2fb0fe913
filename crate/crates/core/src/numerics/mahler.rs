use std::cmp::Ordering;

use rug::Integer;

use super::ball::{CertifiedReal, DEFAULT_PRECISION_CAP};
use super::complex::ComplexBall;
use super::roots::refine_until;
use super::unit_circle::unit_circle_root_count;
use crate::algebra::IntPoly;
use crate::error::{Error, Result};

/// Logarithmic Mahler measure `ln|c| + Σ max(ln|r|, 0)` of `p = c Π (t - r)`,
/// certified to within `radius`.
///
/// Roots on the unit circle contribute nothing; they are counted exactly,
/// so the numerics only need to separate the remaining roots from the circle.
/// The value is an exact zero when `|c| = 1` and every root lies on the circle.
pub fn log_mahler(p: &IntPoly, radius: f64) -> Result<CertifiedReal> {
    log_mahler_with_cap(p, radius, DEFAULT_PRECISION_CAP)
}

pub fn log_mahler_with_cap(p: &IntPoly, radius: f64, cap: u32) -> Result<CertifiedReal> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = Integer::from(p.lead().unwrap().abs_ref());
    let on_circle = unit_circle_root_count(p)?;
    if lead == 1 && on_circle == p.deg() as u64 {
        return Ok(CertifiedReal::exact_zero());
    }
    let lead_log = |prec: u32| {
        if lead == 1 {
            CertifiedReal::exact_zero()
        } else {
            CertifiedReal::from_int(&lead, prec).ln().unwrap()
        }
    };
    if p.deg() == 0 {
        let mut prec = 64;
        loop {
            let v = lead_log(prec);
            if v.radius_f64() <= radius {
                return Ok(v);
            }
            if prec >= cap {
                return Err(Error::PrecisionExhausted { cap });
            }
            prec = (prec * 2).min(cap);
        }
    }
    refine_until(p, cap, |boxes| {
        let prec = boxes.iter().map(|b| b.re.prec()).max().unwrap_or(64);
        let mut ambiguous = 0u64;
        let mut sum = lead_log(prec);
        for b in boxes {
            match b.unit_position() {
                Some(Ordering::Less) => {}
                Some(Ordering::Greater) => {
                    let l = b.modulus().ln()?;
                    sum = &sum + &l.mul_i64(b.multiplicity as i64);
                }
                _ => ambiguous += b.multiplicity as u64,
            }
        }
        (ambiguous == on_circle && sum.radius_f64() <= radius).then_some(sum)
    })
}

/// `Π_{k=0}^{n-1} |p(e^{2πik/n})|` in ball arithmetic at `prec` bits.
pub fn cyclic_norm(p: &IntPoly, n: u64, prec: u32) -> CertifiedReal {
    assert!(n > 0);
    let two_pi = CertifiedReal::pi(prec).mul_i64(2);
    let mut acc = CertifiedReal::from_i64(1, prec);
    for k in 0..n {
        let theta = two_pi
            .mul_int(&Integer::from(k))
            .div(&CertifiedReal::from_int(&Integer::from(n), prec))
            .unwrap();
        let z = ComplexBall::new(theta.cos(), theta.sin());
        let v = ComplexBall::eval_poly(p.coeffs(), &z, prec);
        acc = &acc * &v.abs();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::power_transform;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Jensen's formula by the trapezoidal rule on the unit circle.
    fn jensen(q: &IntPoly, samples: usize) -> f64 {
        let c: Vec<f64> = q.coeffs().iter().map(|v| v.to_f64()).collect();
        let mut acc = 0.0;
        for k in 0..samples {
            let th = std::f64::consts::TAU * (k as f64 + 0.5) / samples as f64;
            let (mut re, mut im) = (0.0, 0.0);
            for a in c.iter().rev() {
                let nr = re * th.cos() - im * th.sin() + a;
                im = re * th.sin() + im * th.cos();
                re = nr;
            }
            acc += (re * re + im * im).sqrt().ln();
        }
        acc / samples as f64
    }

    #[test]
    fn worked_examples() {
        let golden = log_mahler(&p(&[1, -3, 1]), 1e-12).unwrap();
        let expected = ((3.0 + 5f64.sqrt()) / 2.0).ln();
        assert!((golden.mid_f64() - expected).abs() < 1e-14);
        assert!(golden.radius_f64() <= 1e-12);

        let t948 = log_mahler(&p(&[1, -7, 11, -7, 1]), 1e-12).unwrap();
        assert!((t948.mid_f64() - 1.6306052174936092).abs() < 1e-12);
        let t12 = log_mahler(&p(&[1, 7, -15, 7, 1]), 1e-12).unwrap();
        assert!((t12.mid_f64() - 2.1741402899914783).abs() < 1e-12);
    }

    #[test]
    fn exact_zero_for_products_of_cyclotomics() {
        assert!(log_mahler(&p(&[1, -1, 1]), 1e-12).unwrap().is_exact_zero());
        assert!(log_mahler(&p(&[1]), 1e-12).unwrap().is_exact_zero());
        assert!(log_mahler(&p(&[-1, 0, 0, 0, 1]), 1e-12).unwrap().is_exact_zero());
        // 2(t^2 - t + 1): ln 2, not zero
        let v = log_mahler(&p(&[2, -2, 2]), 1e-12).unwrap();
        assert!((v.mid_f64() - std::f64::consts::LN_2).abs() < 1e-14);
        assert!(v.excludes_zero());
    }

    #[test]
    fn agrees_with_jensen_quadrature() {
        let polys = [
            p(&[1, -3, 1]),
            p(&[1, -7, 11, -7, 1]),
            p(&[1, 7, -15, 7, 1]),
            p(&[25, -250, 1035, -2300, 2981, -2300, 1035, -250, 25]),
            p(&[-1, 29, -254, 1035, -2304, 2991, -2304, 1035, -254, 29, -1]),
            p(&[3, 1, 4, 1, 5]),
        ];
        for q in &polys {
            let m = log_mahler(q, 1e-12).unwrap();
            let j = jensen(q, 1 << 16);
            assert!((m.mid_f64() - j).abs() < 1e-4, "{q}: {} vs {j}", m.mid_f64());
        }
    }

    #[test]
    fn cyclic_norm_matches_torsion() {
        let fig8 = p(&[1, -3, 1]);
        for (n, expected) in [(1, 1.0), (2, 5.0), (3, 16.0), (4, 45.0), (5, 121.0)] {
            let v = cyclic_norm(&fig8, n, 128);
            assert!(v.contains_f64(expected) || (v.mid_f64() - expected).abs() < 1e-20);
        }
        let tref = p(&[1, -1, 1]);
        assert!(cyclic_norm(&tref, 6, 128).contains_zero());
        assert!(cyclic_norm(&tref, 2, 128).contains_f64(3.0) || cyclic_norm(&tref, 2, 128).radius_f64() < 1e-30);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-6i64..=6, 2..=6)
                .prop_map(|c| IntPoly::from_i64s(&c))
                .prop_filter("degree ≥ 1", |q| !q.is_zero() && q.deg() >= 1)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn multiplicative(a in poly(), b in poly()) {
                let ma = log_mahler(&a, 1e-12).unwrap();
                let mb = log_mahler(&b, 1e-12).unwrap();
                let mab = log_mahler(&(&a * &b), 1e-12).unwrap();
                prop_assert!(((&ma + &mb).mid_f64() - mab.mid_f64()).abs() < 1e-10);
            }

            #[test]
            fn power_transform_scales(a in poly(), n in 2u32..=8) {
                let m = log_mahler(&a, 1e-12).unwrap();
                let mn = log_mahler(&power_transform(&a, n), 1e-12).unwrap();
                prop_assert!((m.mid_f64() * n as f64 - mn.mid_f64()).abs() < 1e-9);
            }
        }
    }
}
