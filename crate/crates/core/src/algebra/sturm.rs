//! Exact real-root counting and isolation with Sturm chains.

use std::cmp::Ordering;

use rug::Rational;

use super::poly::IntPoly;

/// Sturm chain of a square-free polynomial, kept primitive with sign-correct
/// scaling so variations are exact.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(q: &IntPoly) -> Self {
        assert!(!q.is_zero(), "Sturm chain of zero polynomial");
        let mut chain = vec![q.clone()];
        let d = q.derivative();
        if d.is_zero() {
            return SturmChain { chain };
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            if b.deg() == 0 {
                break;
            }
            let mut r = a.pseudo_rem(b);
            // prem multiplies by lead(b)^(δ+1); undo a negative factor.
            let delta = a.deg() - b.deg();
            if b.lead().unwrap().cmp0() == Ordering::Less && (delta + 1) % 2 == 1 {
                r = -r;
            }
            if r.is_zero() {
                break;
            }
            let c = r.content();
            let next = -r.div_exact_scalar(&c);
            chain.push(next);
        }
        SturmChain { chain }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.chain
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// A real root located in `(lo, hi]`, or exactly at `lo` when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        Rational::from(&self.hi - &self.lo)
    }

    pub fn midpoint(&self) -> Rational {
        Rational::from(&self.lo + &self.hi) / 2
    }

    /// Bisects once; `q` must be square-free with exactly one root here.
    pub fn bisect(&mut self, q: &IntPoly) {
        if self.is_exact() {
            return;
        }
        let hi_sign = q.sign_at(&self.hi);
        if hi_sign == Ordering::Equal {
            self.lo = self.hi.clone();
            return;
        }
        let mid = self.midpoint();
        match q.sign_at(&mid) {
            Ordering::Equal => {
                self.lo = mid.clone();
                self.hi = mid;
            }
            s if s == hi_sign => self.hi = mid,
            _ => self.lo = mid,
        }
    }

    /// Bisects until the width is at most `width`.
    pub fn refine_to(&mut self, q: &IntPoly, width: &Rational) {
        while !self.is_exact() && self.width() > *width {
            self.bisect(q);
        }
    }
}

/// Result of [`sturm_count`].
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub count: usize,
    pub intervals: Vec<IsolatingInterval>,
}

/// Counts and isolates the real roots of `q` in `(a, b]`.
///
/// `q` is reduced to its square-free part first, so each distinct root is
/// counted once.
pub fn sturm_count(q: &IntPoly, a: &Rational, b: &Rational) -> RootIsolation {
    assert!(a < b, "empty interval");
    let sf = q.squarefree_part();
    if sf.deg() == 0 {
        return RootIsolation { count: 0, intervals: Vec::new() };
    }
    let chain = SturmChain::new(&sf);
    let count = chain.count(a, b);
    let mut intervals = Vec::with_capacity(count);
    isolate(&sf, &chain, a.clone(), b.clone(), count, &mut intervals);
    RootIsolation { count, intervals }
}

fn isolate(
    q: &IntPoly,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    count: usize,
    out: &mut Vec<IsolatingInterval>,
) {
    match count {
        0 => {}
        1 => {
            let mut iv = IsolatingInterval { lo, hi };
            if q.sign_at(&iv.hi) == Ordering::Equal {
                iv.lo = iv.hi.clone();
            }
            out.push(iv);
        }
        _ => {
            let mid = Rational::from(&lo + &hi) / 2;
            let left = chain.count(&lo, &mid);
            isolate(q, chain, lo, mid.clone(), left, out);
            isolate(q, chain, mid, hi, count - left, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn worked_examples() {
        let iso = sturm_count(&p(&[0, 1]), &r(-2, 1), &r(2, 1));
        assert_eq!(iso.count, 1);
        assert!(iso.intervals[0].lo <= 0 && iso.intervals[0].hi >= 0);

        assert_eq!(sturm_count(&p(&[-5, 0, 1]), &r(-2, 1), &r(2, 1)).count, 0);

        let q = p(&[9, -7, 1]);
        let iso = sturm_count(&q, &r(-2, 1), &r(2, 1));
        assert_eq!(iso.count, 1);
        let mut iv = iso.intervals[0].clone();
        iv.refine_to(&q, &r(1, 1_000_000));
        let expected = (7.0 - 13f64.sqrt()) / 2.0;
        assert!((iv.midpoint().to_f64() - expected).abs() < 1e-6);
    }

    #[test]
    fn roots_at_endpoints_and_bisection_points() {
        // roots -1, 0, 1: 0 is the first bisection point of (-2, 2].
        let q = p(&[0, -1, 0, 1]);
        let iso = sturm_count(&q, &r(-2, 1), &r(2, 1));
        assert_eq!(iso.count, 3);
        assert!(iso.intervals.iter().any(|iv| iv.is_exact() && iv.lo == 0));
        // half-open: root at the right end counts, at the left end does not.
        assert_eq!(sturm_count(&q, &r(-1, 1), &r(1, 1)).count, 2);
        assert_eq!(sturm_count(&q, &r(-3, 2), &r(-1, 1)).count, 1);
    }

    #[test]
    fn repeated_factors_counted_once() {
        let f = p(&[-2, 0, 1]);
        let q = &(&f * &f) * &p(&[1, 1]);
        let iso = sturm_count(&q, &r(-10, 1), &r(10, 1));
        assert_eq!(iso.count, 3);
        for w in iso.intervals.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn negative_leading_coefficients() {
        let q = p(&[3, 0, -1]);
        assert_eq!(sturm_count(&q, &r(-2, 1), &r(2, 1)).count, 2);
        let q = p(&[1, 2, 0, -3, 0, -1]);
        let iso = sturm_count(&q, &r(-2, 1), &r(2, 1));
        // agrees with sign changes on a fine grid
        let grid: Vec<f64> = (0..=4000).map(|i| -2.0 + i as f64 * 0.001).collect();
        let f = |x: f64| 1.0 + 2.0 * x - 3.0 * x.powi(3) - x.powi(5);
        let changes = grid.windows(2).filter(|w| f(w[0]) * f(w[1]) < 0.0).count();
        assert_eq!(iso.count, changes);
    }
}
