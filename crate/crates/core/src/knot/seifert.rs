use rug::{Integer, Rational};

use super::hermitian::certified_inertia;
use crate::algebra::transform::interpolate_integer_points;
use crate::algebra::{det_bareiss, normalize_alexander, IntLaurentPoly, IntPoly};
use crate::error::{Error, Result};
use crate::numerics::{CertifiedReal, DEFAULT_PRECISION_CAP};

/// Seifert matrix of a knot; `det(A - Aᵀ) = 1` is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let k = entries.len();
        if entries.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidSeifert(format!("matrix is not square ({k} rows)")));
        }
        let m = SeifertMatrix { entries };
        let d = det_bareiss(m.map(|i, j| m.at(i, j) - m.at(j, i)));
        if d != 1 {
            return Err(Error::InvalidSeifert(format!("det(A - A^T) = {d}, expected 1")));
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    fn at(&self, i: usize, j: usize) -> Integer {
        Integer::from(self.entries[i][j])
    }

    fn map(&self, f: impl Fn(usize, usize) -> Integer) -> Vec<Vec<Integer>> {
        let k = self.size();
        (0..k).map(|i| (0..k).map(|j| f(i, j)).collect()).collect()
    }

    /// `-A`, a Seifert matrix of the mirror image.
    pub fn negated(&self) -> SeifertMatrix {
        SeifertMatrix {
            entries: self.entries.iter().map(|r| r.iter().map(|v| -v).collect()).collect(),
        }
    }

    /// `det(At - Aᵀ)` before normalization.
    pub fn alexander_raw(&self) -> IntPoly {
        let k = self.size();
        let values: Vec<Integer> = (0..=k as i64)
            .map(|t| det_bareiss(self.map(|i, j| self.at(i, j) * t - self.at(j, i))))
            .collect();
        interpolate_integer_points(&values)
    }

    /// Alexander polynomial with nonzero constant term and positive leading
    /// coefficient.
    pub fn alexander(&self) -> IntPoly {
        let raw = self.alexander_raw();
        let p = normalize_alexander(&IntLaurentPoly::from_poly(&raw))
            .expect("det(A - A^T) = 1 makes the Alexander polynomial nonzero");
        positive_lead(p)
    }

    /// `σ(e^{2πi·turn})` for `turn ∈ (0, 1/2]`: the signature of
    /// `A(1 - z) + Aᵀ(1 - z̄)`.
    ///
    /// Dividing by `2 sin(π·turn) > 0` turns this into `S + i·u·N` with
    /// `S = A + Aᵀ`, `N = Aᵀ - A`, `u = cot(π·turn)`, whose realification
    /// `[[S, -uN], [uN, S]]` doubles every eigenvalue.
    pub fn signature_at_turn(&self, turn: &Rational) -> Result<i64> {
        assert!(*turn > 0 && *turn <= (1, 2), "turn outside (0, 1/2]");
        let k = self.size();
        if k == 0 {
            return Ok(0);
        }
        let half = *turn == (1, 2);
        let mut prec = 64;
        loop {
            let u = if half {
                CertifiedReal::from_f64(0.0)
            } else {
                let x = &CertifiedReal::pi(prec) * &CertifiedReal::from_rational(turn, prec);
                x.cos().div(&x.sin()).expect("sin(π·turn) > 0")
            };
            let s = |i: usize, j: usize| CertifiedReal::from_int(&(self.at(i, j) + self.at(j, i)), prec);
            let un = |i: usize, j: usize| {
                &u * &CertifiedReal::from_int(&(self.at(j, i) - self.at(i, j)), prec)
            };
            let b: Vec<Vec<CertifiedReal>> = (0..2 * k)
                .map(|r| {
                    (0..2 * k)
                        .map(|c| match (r < k, c < k) {
                            (true, true) => s(r, c),
                            (false, false) => s(r - k, c - k),
                            (true, false) => -un(r, c - k),
                            (false, true) => un(r - k, c),
                        })
                        .collect()
                })
                .collect();
            if let Some(inertia) = certified_inertia(&b, prec) {
                if inertia.positive + inertia.negative == 2 * k {
                    return Ok(inertia.signature() / 2);
                }
            }
            if prec >= DEFAULT_PRECISION_CAP {
                return Err(Error::PrecisionExhausted { cap: DEFAULT_PRECISION_CAP });
            }
            prec *= 2;
        }
    }
}

pub(crate) fn positive_lead(p: IntPoly) -> IntPoly {
    if p.lead().is_some_and(|c| *c < 0) {
        -&p
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    fn figure8() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]]).unwrap()
    }

    /// 2x2 symbolic oracle: det(At - Aᵀ) = (a t - a)(d t - d) - (b t - c)(c t - b).
    fn det2_oracle(a: i64, b: i64, c: i64, d: i64) -> IntPoly {
        // (ad - bc) t^2 + (-2ad + b^2 + c^2) t + (ad - bc)
        IntPoly::from_i64s(&[a * d - b * c, -2 * a * d + b * b + c * c, a * d - b * c])
    }

    #[test]
    fn alexander_polynomials() {
        assert_eq!(trefoil().alexander(), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(figure8().alexander(), IntPoly::from_i64s(&[1, -3, 1]));
        assert_eq!(trefoil().alexander_raw(), det2_oracle(-1, 1, 0, -1));
        assert_eq!(figure8().alexander_raw(), det2_oracle(1, 1, 0, -1));
        assert_eq!(SeifertMatrix::new(vec![]).unwrap().alexander(), IntPoly::one());
        // det(A - Aᵀ) = 1 is the raw determinant's value at t = 1
        for s in [trefoil(), figure8()] {
            assert_eq!(s.alexander_raw().eval(&Integer::from(1)), 1);
        }
    }

    #[test]
    fn validation() {
        assert!(matches!(
            SeifertMatrix::new(vec![vec![1, 0], vec![0, 1]]),
            Err(Error::InvalidSeifert(_))
        ));
        assert!(matches!(SeifertMatrix::new(vec![vec![1, 0]]), Err(Error::InvalidSeifert(_))));
        assert!(matches!(SeifertMatrix::new(vec![vec![1]]), Err(Error::InvalidSeifert(_))));
    }

    #[test]
    fn signatures() {
        let half = Rational::from((1, 2));
        assert_eq!(trefoil().signature_at_turn(&half).unwrap(), -2);
        assert_eq!(trefoil().negated().signature_at_turn(&half).unwrap(), 2);
        assert_eq!(figure8().signature_at_turn(&half).unwrap(), 0);
        // trefoil jumps at 1/6
        assert_eq!(trefoil().signature_at_turn(&Rational::from((1, 7))).unwrap(), 0);
        assert_eq!(trefoil().signature_at_turn(&Rational::from((1, 5))).unwrap(), -2);
        assert_eq!(trefoil().signature_at_turn(&Rational::from((1, 1000))).unwrap(), 0);
    }

    #[test]
    fn singular_point_exhausts_precision() {
        let r = trefoil().signature_at_turn(&Rational::from((1, 6)));
        assert!(matches!(r, Err(Error::PrecisionExhausted { .. })));
    }
}
