//! Root-power transform and the `x = t + 1/t` reduction of reciprocal
//! polynomials.

use rug::{Integer, Rational};

use super::poly::IntPoly;
use super::resultant::resultant;
use crate::error::{Error, Result};

/// `C^n Π (s - r_i^n)` for `p = C Π (t - r_i)`, with exact integer
/// coefficients in `s`.
///
/// This is `Res_t(p(t), s - t^n)`; the resultant is evaluated at the integer
/// points `s = 0..=deg p` and the degree-`deg p` polynomial is recovered by
/// exact interpolation.
pub fn power_transform(p: &IntPoly, n: u32) -> IntPoly {
    assert!(!p.is_zero(), "power transform of zero polynomial");
    assert!(n >= 1, "power must be positive");
    if n == 1 {
        return p.clone();
    }
    let m = p.deg();
    let t_pow = IntPoly::monomial(Integer::from(1), n as usize);
    let values: Vec<Integer> = (0..=m as i64)
        .map(|s| {
            let q = &IntPoly::constant(Integer::from(s)) - &t_pow;
            resultant(p, &q)
        })
        .collect();
    interpolate_integer_points(&values)
}

/// The unique polynomial of degree < `values.len()` taking `values[i]` at
/// `s = i`; its coefficients must be integers.
pub(crate) fn interpolate_integer_points(values: &[Integer]) -> IntPoly {
    // Newton forward differences: f(s) = Σ Δ^k f(0) * C(s, k).
    let mut diffs: Vec<Integer> = values.to_vec();
    let mut newton = Vec::with_capacity(values.len());
    while !diffs.is_empty() {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| Integer::from(&w[1] - &w[0])).collect();
    }
    let mut acc = vec![Rational::new(); values.len()];
    // falling factorial basis s(s-1)...(s-k+1) / k!
    let mut basis = vec![Rational::from(1)];
    for (k, coef) in newton.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            acc[i] += Rational::from(b * coef);
        }
        // basis *= (s - k) / (k + 1)
        let mut next = vec![Rational::new(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= Rational::from(b * k as i64);
        }
        let denom = Rational::from(k as i64 + 1);
        basis = next.into_iter().map(|c| c / &denom).collect();
    }
    IntPoly::new(
        acc.into_iter()
            .map(|c| {
                assert_eq!(*c.denom(), 1, "interpolated coefficient is not integral");
                c.into_numer_denom().0
            })
            .collect(),
    )
}

/// `Q` with `p(t) = t^g Q(t + 1/t)` for a reciprocal `p` of degree `2g`.
pub fn reciprocal_decompose(p: &IntPoly) -> Result<IntPoly> {
    if !p.is_reciprocal() || p.deg() % 2 == 1 {
        return Err(Error::NotReciprocal(p.to_string()));
    }
    let g = p.deg() / 2;
    // t^k + t^-k = T_k(x) with T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}.
    let x = IntPoly::from_i64s(&[0, 1]);
    let mut t_prev = IntPoly::from_i64s(&[2]);
    let mut t_cur = x.clone();
    let mut q = IntPoly::constant(p.coeff(g));
    for k in 1..=g {
        q = &q + &t_cur.scale(&p.coeff(g + k));
        let next = &(&x * &t_cur) - &t_prev;
        t_prev = t_cur;
        t_cur = next;
    }
    Ok(q)
}

/// Re-expands `t^g Q(t + 1/t)`.
pub fn reciprocal_expand(q: &IntPoly, g: usize) -> IntPoly {
    // (t + 1/t)^k t^g = t^(g-k) (t^2 + 1)^k
    let base = IntPoly::from_i64s(&[1, 0, 1]);
    let mut acc = IntPoly::zero();
    for (k, c) in q.coeffs().iter().enumerate() {
        assert!(k <= g, "degree of Q exceeds g");
        let term = &base.pow(k as u32) * &IntPoly::monomial(c.clone(), g - k);
        acc = &acc + &term;
    }
    acc
}
