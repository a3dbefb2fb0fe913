//! Certified inertia of symmetric interval matrices.
//!
//! An approximately orthogonal `V` is computed from the midpoint matrix by
//! Jacobi rotations. `C = Vᵀ B V` is then formed in interval arithmetic. If
//! every Gershgorin disc of `C` avoids 0, shrinking the off-diagonal part to
//! zero never makes `C` singular, so `C` has the inertia of its diagonal. By
//! Sylvester's law of inertia the same holds for every `B` in the interval
//! family, provided `V` is nonsingular; that is certified by a second
//! Gershgorin test on `Vᵀ V`.

#![allow(clippy::needless_range_loop)]

use std::cmp::Ordering;

use rug::float::Round;
use rug::Float;

use crate::numerics::CertifiedReal;

/// Counts of positive and negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia of every symmetric matrix in the interval family `b`, or `None`
/// if it cannot be certified at `prec` bits (for instance near a singular
/// member).
pub fn certified_inertia(b: &[Vec<CertifiedReal>], prec: u32) -> Option<Inertia> {
    let n = b.len();
    if n == 0 {
        return Some(Inertia { positive: 0, negative: 0 });
    }
    let mid: Vec<Vec<Float>> = b
        .iter()
        .map(|r| r.iter().map(|x| Float::with_val(prec, x.midpoint())).collect())
        .collect();
    let v = jacobi_eigenvectors(mid, prec);
    let vb: Vec<Vec<CertifiedReal>> = v
        .iter()
        .map(|r| r.iter().map(|x| CertifiedReal::from_float(x.clone())).collect())
        .collect();

    // Vᵀ V must be certifiably nonsingular.
    let gram = congruence(&identity(n), &vb);
    if !gershgorin_signs(&gram)?.iter().all(|&s| s == Ordering::Greater) {
        return None;
    }

    let c = congruence(b, &vb);
    let signs = gershgorin_signs(&c)?;
    Some(Inertia {
        positive: signs.iter().filter(|&&s| s == Ordering::Greater).count(),
        negative: signs.iter().filter(|&&s| s == Ordering::Less).count(),
    })
}

fn identity(n: usize) -> Vec<Vec<CertifiedReal>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| CertifiedReal::from_f64(if i == j { 1.0 } else { 0.0 }))
                .collect()
        })
        .collect()
}

/// `Vᵀ B V` with `v[i][j]` = component `i` of column `j`.
fn congruence(b: &[Vec<CertifiedReal>], v: &[Vec<CertifiedReal>]) -> Vec<Vec<CertifiedReal>> {
    let n = b.len();
    let bv: Vec<Vec<CertifiedReal>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &b[i][k] * &v[k][j]).sum())
                .collect()
        })
        .collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &v[k][i] * &bv[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Sign of each diagonal entry when every Gershgorin disc avoids 0.
fn gershgorin_signs(c: &[Vec<CertifiedReal>]) -> Option<Vec<Ordering>> {
    let n = c.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let prec = c[i][i].prec();
        let mut off = Float::new(prec);
        for j in 0..n {
            if j != i {
                off = Float::with_val_round(prec, &off + c[i][j].abs().upper(), Round::Up).0;
            }
        }
        let d = &c[i][i];
        if *d.lower() > off {
            out.push(Ordering::Greater);
        } else if Float::with_val(prec, -d.upper()) > off {
            out.push(Ordering::Less);
        } else {
            return None;
        }
    }
    Some(out)
}

/// Cyclic Jacobi eigenvalue iteration; returns the accumulated rotations,
/// whose columns approximate eigenvectors.
fn jacobi_eigenvectors(mut a: Vec<Vec<Float>>, prec: u32) -> Vec<Vec<Float>> {
    let n = a.len();
    let mut v: Vec<Vec<Float>> = (0..n)
        .map(|i| (0..n).map(|j| Float::with_val(prec, if i == j { 1 } else { 0 })).collect())
        .collect();
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32)));
    for _sweep in 0..100 {
        let mut off = Float::new(prec);
        let mut total = Float::new(prec);
        for i in 0..n {
            for j in 0..n {
                let sq = Float::with_val(prec, a[i][j].square_ref());
                if i != j {
                    off += &sq;
                }
                total += sq;
            }
        }
        if off <= Float::with_val(prec, &tol * &tol) * &total || off.is_zero() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].is_zero() {
                    continue;
                }
                // θ = (a_qq - a_pp) / (2 a_pq), t = sgn θ / (|θ| + sqrt(θ² + 1))
                let theta = Float::with_val(prec, &a[q][q] - &a[p][p]) / Float::with_val(prec, &a[p][q] * 2u32);
                let root = (Float::with_val(prec, theta.square_ref()) + 1u32).sqrt();
                let denom = Float::with_val(prec, theta.abs_ref()) + root;
                let mut t = Float::with_val(prec, 1) / denom;
                if theta.is_sign_negative() {
                    t = -t;
                }
                let c = (Float::with_val(prec, t.square_ref()) + 1u32).sqrt().recip();
                let s = Float::with_val(prec, &t * &c);
                rotate(&mut a, &mut v, p, q, &c, &s, prec);
            }
        }
    }
    v
}

fn rotate(a: &mut [Vec<Float>], v: &mut [Vec<Float>], p: usize, q: usize, c: &Float, s: &Float, prec: u32) {
    let n = a.len();
    // A <- Jᵀ A J with J the rotation in the (p, q) plane
    for k in 0..n {
        let akp = a[k][p].clone();
        let akq = a[k][q].clone();
        a[k][p] = Float::with_val(prec, c * &akp) - Float::with_val(prec, s * &akq);
        a[k][q] = Float::with_val(prec, s * &akp) + Float::with_val(prec, c * &akq);
    }
    for k in 0..n {
        let apk = a[p][k].clone();
        let aqk = a[q][k].clone();
        a[p][k] = Float::with_val(prec, c * &apk) - Float::with_val(prec, s * &aqk);
        a[q][k] = Float::with_val(prec, s * &apk) + Float::with_val(prec, c * &aqk);
    }
    for row in v.iter_mut() {
        let vkp = row[p].clone();
        let vkq = row[q].clone();
        row[p] = Float::with_val(prec, c * &vkp) - Float::with_val(prec, s * &vkq);
        row[q] = Float::with_val(prec, s * &vkp) + Float::with_val(prec, c * &vkq);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(rows: &[&[f64]]) -> Vec<Vec<CertifiedReal>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| CertifiedReal::from_f64(x)).collect())
            .collect()
    }

    /// Sign changes in the leading principal minors (valid when none vanish).
    fn minors_signature(a: &[&[f64]]) -> i64 {
        let n = a.len();
        let mut prev = 1.0;
        let mut sig = 0;
        for k in 1..=n {
            let mut m: Vec<Vec<f64>> = (0..k).map(|i| a[i][..k].to_vec()).collect();
            let mut det = 1.0;
            for c in 0..k {
                let piv = (c..k).max_by(|&x, &y| m[x][c].abs().total_cmp(&m[y][c].abs())).unwrap();
                if piv != c {
                    m.swap(piv, c);
                    det = -det;
                }
                det *= m[c][c];
                for r in c + 1..k {
                    let f = m[r][c] / m[c][c];
                    for cc in c..k {
                        m[r][cc] -= f * m[c][cc];
                    }
                }
            }
            sig += if det * prev > 0.0 { 1 } else { -1 };
            prev = det;
        }
        sig
    }

    #[test]
    fn definite_and_indefinite() {
        let a = exact(&[&[2.0, 1.0], &[1.0, 2.0]]);
        assert_eq!(certified_inertia(&a, 64), Some(Inertia { positive: 2, negative: 0 }));
        let a = exact(&[&[-2.0, 1.0], &[1.0, -2.0]]);
        assert_eq!(certified_inertia(&a, 64).unwrap().signature(), -2);
        let a = exact(&[&[2.0, 1.0], &[1.0, -2.0]]);
        assert_eq!(certified_inertia(&a, 64).unwrap().signature(), 0);
        assert_eq!(certified_inertia(&[], 64).unwrap().signature(), 0);
    }

    #[test]
    fn singular_is_not_certified() {
        let a = exact(&[&[1.0, 1.0], &[1.0, 1.0]]);
        assert_eq!(certified_inertia(&a, 256), None);
    }

    #[test]
    fn agrees_with_minor_signs() {
        let cases: [&[&[f64]]; 3] = [
            &[&[4.0, 1.0, 0.5], &[1.0, -3.0, 2.0], &[0.5, 2.0, 1.0]],
            &[&[1.0, 2.0, 3.0, 4.0], &[2.0, -1.0, 0.0, 1.0], &[3.0, 0.0, 5.0, -2.0], &[4.0, 1.0, -2.0, 7.0]],
            &[&[-1.0, 0.3], &[0.3, -0.5]],
        ];
        for a in cases {
            let inertia = certified_inertia(&exact(a), 128).unwrap();
            assert_eq!(inertia.signature(), minors_signature(a));
        }
    }

    #[test]
    fn interval_entries() {
        let wide = CertifiedReal::from_bounds(Float::with_val(64, 0.9), Float::with_val(64, 1.1));
        let a = vec![
            vec![CertifiedReal::from_f64(3.0), wide.clone()],
            vec![wide, CertifiedReal::from_f64(-3.0)],
        ];
        assert_eq!(certified_inertia(&a, 64).unwrap().signature(), 0);
    }
}
