//! Resultants over `Z[t]` by the subresultant remainder sequence.

use rug::Integer;

use super::poly::{ipow, IntPoly};

/// `Res(p, q) = lead(p)^deg(q) Π q(α)` over the roots `α` of `p`.
///
/// Uses the subresultant PRS, so intermediate coefficients stay polynomial in
/// the input size. Returns 0 when either argument is zero or the two share a
/// root.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Integer {
    if p.is_zero() || q.is_zero() {
        return Integer::new();
    }
    if p.deg() == 0 {
        return ipow(p.lead().unwrap(), q.deg() as u32);
    }
    if q.deg() == 0 {
        return ipow(q.lead().unwrap(), p.deg() as u32);
    }

    let ca = p.content();
    let cb = q.content();
    let mut a = p.div_exact_scalar(&ca);
    let mut b = q.div_exact_scalar(&cb);
    let mut t = ipow(&ca, q.deg() as u32) * ipow(&cb, p.deg() as u32);

    let mut sign_negative = false;
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign_negative = true;
        }
        std::mem::swap(&mut a, &mut b);
    }

    let mut g = Integer::from(1);
    let mut h = Integer::from(1);
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Integer::new();
        }
        a = b;
        let divisor = &g * ipow(&h, delta);
        b = r.div_exact_scalar(&divisor);
        g = a.lead().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            let num = ipow(&g, delta);
            let den = ipow(&h, delta - 1);
            num.div_exact(&den)
        };
        if b.deg() == 0 {
            let da = a.deg() as u32;
            let lb = b.lead().unwrap();
            // h <- lead(b)^deg(a) / h^(deg(a) - 1)
            let num = ipow(lb, da);
            let last = if da == 0 {
                num * &h
            } else {
                num.div_exact(&ipow(&h, da - 1))
            };
            t *= last;
            if sign_negative {
                t = -t;
            }
            return t;
        }
    }
}

/// `Res(p, t^n - 1)`, which is `± Π p(ζ)` over the n-th roots of unity.
pub fn resultant_with_cyclic(p: &IntPoly, n: usize) -> Integer {
    resultant(p, &IntPoly::t_pow_minus_one(n))
}
