use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// `base^exp` as an owned integer.
pub fn ipow(base: &Integer, exp: u32) -> Integer {
    Integer::from(base.pow(exp))
}

/// Dense univariate polynomial over the integers, constant term first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and `degree()` is `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::from(1))
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut coeffs = vec![Integer::new(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t^n - 1`
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Integer::new(); n + 1];
        coeffs[0] = Integer::from(-1);
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    /// Leading coefficient is a unit of the integers (±1).
    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| *c.as_abs() == 1)
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Sign of the value at a rational point, evaluated as the homogenized
    /// integer sum `Σ c_i p^i q^(d-i)` with `q > 0`.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let (num, den) = (x.numer(), x.denom());
        let mut acc = Integer::new();
        let mut den_pow = Integer::from(1);
        // Horner in the numerator while accumulating powers of the denominator.
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc *= num;
            let term = Integer::from(c * &den_pow);
            acc += term;
            if i > 0 {
                den_pow *= den;
            }
        }
        acc.cmp0()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Integer::from(c * i as u64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|c| Integer::from(c * k)).collect())
    }

    /// Divides every coefficient by `k`; `k` must divide each of them.
    pub fn div_exact_scalar(&self, k: &Integer) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| Integer::from(c.div_exact_ref(k)))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for c in &self.coeffs {
            g.gcd_mut(c);
            if g == 1 {
                break;
            }
        }
        g
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lead().unwrap().cmp0() == Ordering::Less {
            g = -g;
        }
        self.div_exact_scalar(&g)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Pseudo-remainder: `lead(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> Self {
        assert!(!divisor.is_zero(), "pseudo-remainder by zero polynomial");
        let dd = divisor.deg();
        if self.is_zero() || self.deg() < dd {
            return self.clone();
        }
        let lc = divisor.lead().unwrap();
        let mut r = self.coeffs.clone();
        let mut steps = self.deg() - dd + 1;
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let top = r.pop().unwrap();
            for c in r.iter_mut() {
                *c *= lc;
            }
            for (i, dc) in divisor.coeffs.iter().take(dd).enumerate() {
                r[shift + i] -= Integer::from(&top * dc);
            }
            steps -= 1;
            while r.last().is_some_and(|c| *c == 0) {
                r.pop();
            }
        }
        // Remaining multiplications keep the result a true pseudo-remainder.
        if steps > 0 {
            let f = ipow(lc, steps as u32);
            for c in r.iter_mut() {
                *c *= &f;
            }
        }
        Self::new(r)
    }

    /// Exact quotient in `Z[t]` when `divisor` divides `self`, otherwise `None`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Euclidean division in `Z[t]`; `None` if a quotient coefficient would be
    /// fractional.
    pub fn div_rem(&self, divisor: &IntPoly) -> Option<(Self, Self)> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.deg();
        if self.is_zero() || self.deg() < dd {
            return Some((Self::zero(), self.clone()));
        }
        let lc = divisor.lead().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![Integer::new(); self.deg() - dd + 1];
        while r.len() > dd {
            let shift = r.len() - 1 - dd;
            let top = r.pop().unwrap();
            if top != 0 {
                if !top.is_divisible(lc) {
                    return None;
                }
                let f = Integer::from(top.div_exact_ref(lc));
                for (i, dc) in divisor.coeffs.iter().take(dd).enumerate() {
                    r[shift + i] -= Integer::from(&f * dc);
                }
                q[shift] = f;
            }
        }
        Some((Self::new(q), Self::new(r)))
    }

    /// `t^deg * p(1/t)`: the coefficient list reversed.
    pub fn reversal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Palindromic coefficients with a nonzero constant term.
    pub fn is_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Positive gcd in `Z[t]` (primitive, positive leading coefficient, times
    /// the gcd of the contents).
    pub fn gcd(&self, other: &IntPoly) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = Integer::from(self.content().gcd_ref(&other.content()));
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    /// Square-free decomposition `p = c * Π f_i^i` over `Z[t]`, returned as
    /// `(f_i, i)` for the non-constant primitive factors.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, u32)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let p = self.primitive_part();
        let mut a = p.gcd(&p.derivative()).primitive_part();
        let mut b = p.div_exact(&a).expect("gcd divides").primitive_part();
        let mut i = 1;
        while b.deg() > 0 {
            let c = a.gcd(&b).primitive_part();
            let factor = b.div_exact(&c).expect("gcd divides").primitive_part();
            if factor.deg() > 0 {
                out.push((factor, i));
            }
            a = a.div_exact(&c).expect("gcd divides").primitive_part();
            b = c;
            i += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors (primitive).
    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return Self::one();
        }
        let p = self.primitive_part();
        let g = p.gcd(&p.derivative());
        p.div_exact(&g.primitive_part())
            .expect("gcd divides")
            .primitive_part()
    }

    /// Multiplicity of `factor` in `self` (factor non-constant).
    pub fn multiplicity_of(&self, factor: &IntPoly) -> u32 {
        assert!(factor.deg() > 0);
        let mut m = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            match cur.div_exact(factor) {
                Some(q) => {
                    cur = q;
                    m += 1;
                }
                None => break,
            }
        }
        m
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = c.cmp0() == Ordering::Less;
            let abs = Integer::from(c.abs_ref());
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if i == 0 || abs != 1 {
                s.push_str(&abs.to_string());
            }
            match i {
                0 => {}
                1 => s.push_str(var),
                _ => {
                    s.push_str(var);
                    s.push('^');
                    s.push_str(&i.to_string());
                }
            }
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Integer::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Integer::from(a * b);
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| Integer::from(-c)).collect())
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Integer Laurent polynomial `Σ c_i t^(low + i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLaurentPoly {
    coeffs: Vec<Integer>,
    low: i64,
}

impl IntLaurentPoly {
    pub fn new(coeffs: Vec<Integer>, low: i64) -> Self {
        IntLaurentPoly { coeffs, low }
    }

    pub fn from_i64s(coeffs: &[i64], low: i64) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect(), low)
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        Self::new(p.coeffs().to_vec(), 0)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.low
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    /// Strips the unit `±t^k`: the result has a nonzero constant term and a
    /// positive value at `t = 1` (positive leading coefficient if that value
    /// is zero).
    pub fn normalize(&self) -> Result<IntPoly> {
        normalize_alexander(self)
    }
}

pub fn normalize_alexander(p: &IntLaurentPoly) -> Result<IntPoly> {
    let first = p
        .coeffs
        .iter()
        .position(|c| *c != 0)
        .ok_or(Error::ZeroPolynomial)?;
    let poly = IntPoly::new(p.coeffs[first..].to_vec());
    let at_one: Integer = poly.coeffs().iter().sum();
    let flip = match at_one.cmp0() {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => poly.lead().unwrap().cmp0() == Ordering::Less,
    };
    Ok(if flip { -poly } else { poly })
}
