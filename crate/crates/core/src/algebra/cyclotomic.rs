//! Roots of unity among the zeros of an integer polynomial.
//!
//! A primitive n-th root of unity has minimal polynomial Φ_n of degree φ(n),
//! so only the finitely many n with φ(n) ≤ deg p can contribute.

use rug::Integer;

use super::poly::IntPoly;

pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let mut result = n;
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All n ≥ 1 with φ(n) ≤ bound, ascending.
///
/// φ(n) ≥ sqrt(n / 2), so the search stops at 2·bound².
pub fn orders_with_phi_at_most(bound: u64) -> Vec<u64> {
    let limit = (2 * bound * bound).max(2);
    (1..=limit).filter(|&n| euler_phi(n) <= bound).collect()
}

fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// The n-th cyclotomic polynomial Φ_n = Π_{d | n} (t^d - 1)^μ(n/d).
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    assert!(n > 0);
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = &num * &IntPoly::t_pow_minus_one(d as usize),
            -1 => den = &den * &IntPoly::t_pow_minus_one(d as usize),
            _ => {}
        }
    }
    num.div_exact(&den).expect("Möbius product is exact")
}

/// Cyclotomic factors of `p` as `(n, multiplicity of Φ_n)`, ascending in n.
pub fn cyclotomic_factors(p: &IntPoly) -> Vec<(u64, u32)> {
    if p.is_zero() || p.deg() == 0 {
        return Vec::new();
    }
    let d = p.deg() as u64;
    orders_with_phi_at_most(d)
        .into_iter()
        .filter_map(|n| {
            let m = p.multiplicity_of(&cyclotomic_poly(n));
            (m > 0).then_some((n, m))
        })
        .collect()
}

/// True iff some root of unity is a zero of `p`.
pub fn cyclotomic_zero_exists(p: &IntPoly) -> bool {
    assert!(!p.is_zero(), "zero polynomial");
    if p.deg() == 0 {
        return false;
    }
    orders_with_phi_at_most(p.deg() as u64)
        .into_iter()
        .any(|n| p.div_exact(&cyclotomic_poly(n)).is_some())
}

/// Number of zeros of `p` among the n-th roots of unity, with multiplicity.
pub fn roots_of_unity_zero_count(p: &IntPoly, n: u64) -> u64 {
    cyclotomic_factors(p)
        .into_iter()
        .filter(|(d, _)| n.is_multiple_of(*d))
        .map(|(d, m)| euler_phi(d) * m as u64)
        .sum()
}

/// True iff `Φ_n` divides `p`, i.e. the primitive n-th roots of unity are zeros.
pub fn vanishes_at_primitive_root(p: &IntPoly, n: u64) -> bool {
    if p.is_zero() {
        return true;
    }
    if euler_phi(n) > p.deg() as u64 {
        return false;
    }
    let phi = cyclotomic_poly(n);
    p.deg() >= phi.deg() && p.div_exact(&phi).is_some()
}

/// Product Φ_{n_1} ⋯ Φ_{n_k} (helper for constructing test inputs).
pub fn cyclotomic_product(orders: &[u64]) -> IntPoly {
    orders
        .iter()
        .fold(IntPoly::constant(Integer::from(1)), |acc, &n| &acc * &cyclotomic_poly(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Independent route: gcd with t^n - 1 over every n allowed by the degree bound.
    fn gcd_route(q: &IntPoly) -> bool {
        orders_with_phi_at_most(q.deg() as u64)
            .into_iter()
            .any(|n| q.gcd(&IntPoly::t_pow_minus_one(n as usize)).deg() > 0)
    }

    #[test]
    fn phi_values() {
        let phis: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(phis, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(orders_with_phi_at_most(2), [1, 2, 3, 4, 6]);
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_poly(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(15).deg(), 8);
    }

    #[test]
    fn worked_examples() {
        assert!(cyclotomic_zero_exists(&p(&[1, -1, 1])));
        assert!(!cyclotomic_zero_exists(&p(&[1, -7, 11, -7, 1])));
        assert!(!cyclotomic_zero_exists(&p(&[1])));
    }

    #[test]
    fn multiplicities_and_counts() {
        let tref = p(&[1, -1, 1]);
        let sq = &tref * &tref;
        assert_eq!(cyclotomic_factors(&sq), [(6, 2)]);
        assert_eq!(roots_of_unity_zero_count(&tref, 6), 2);
        assert_eq!(roots_of_unity_zero_count(&tref, 12), 2);
        assert_eq!(roots_of_unity_zero_count(&tref, 4), 0);
        assert!(vanishes_at_primitive_root(&tref, 6));
        assert!(!vanishes_at_primitive_root(&tref, 3));
    }

    #[test]
    fn catalog_times_cyclotomic_detected() {
        let catalog = [
            p(&[1, -7, 11, -7, 1]),
            p(&[1, 7, -15, 7, 1]),
            p(&[1, -3, 1]),
            p(&[25, -250, 1035, -2300, 2981, -2300, 1035, -250, 25]),
            p(&[-1, 29, -254, 1035, -2304, 2991, -2304, 1035, -254, 29, -1]),
        ];
        for base in &catalog {
            assert!(!cyclotomic_zero_exists(base));
            assert_eq!(cyclotomic_zero_exists(base), gcd_route(base));
            for n in orders_with_phi_at_most(8) {
                let prod = base * &cyclotomic_poly(n);
                assert!(cyclotomic_zero_exists(&prod), "{base} * Φ_{n}");
                assert!(gcd_route(&prod));
            }
        }
    }
}
