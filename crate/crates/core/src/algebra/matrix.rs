//! Exact integer determinants.

use rug::Integer;

/// Determinant by fraction-free Bareiss elimination.
pub fn det_bareiss(mut mat: Vec<Vec<Integer>>) -> Integer {
    let n = mat.len();
    if n == 0 {
        return Integer::from(1);
    }
    assert!(mat.iter().all(|r| r.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = Integer::from(1);
    for k in 0..n {
        if mat[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| mat[r][k] != 0) else {
                return Integer::new();
            };
            mat.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = Integer::from(&mat[i][j] * &mat[k][k]) - Integer::from(&mat[i][k] * &mat[k][j]);
                mat[i][j] = v.div_exact(&prev);
            }
        }
        prev = mat[k][k].clone();
    }
    let d = mat[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Integer>> {
        rows.iter().map(|r| r.iter().map(|&v| Integer::from(v)).collect()).collect()
    }

    /// Cofactor expansion along the first row.
    fn det_cofactor(a: &[Vec<Integer>]) -> Integer {
        let n = a.len();
        if n == 0 {
            return Integer::from(1);
        }
        let mut acc = Integer::new();
        for j in 0..n {
            let minor: Vec<Vec<Integer>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &a[0][j] * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_bareiss(m(&[])), 1);
        assert_eq!(det_bareiss(m(&[&[0, 1], &[1, 0]])), -1);
        assert_eq!(det_bareiss(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), 6);
        assert_eq!(det_bareiss(m(&[&[1, 2], &[2, 4]])), 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn matches_cofactor_expansion(n in 1usize..=5, seed in prop::collection::vec(-9i64..=9, 25)) {
                let a: Vec<Vec<Integer>> = (0..n)
                    .map(|i| (0..n).map(|j| Integer::from(seed[i * 5 + j])).collect())
                    .collect();
                prop_assert_eq!(det_bareiss(a.clone()), det_cofactor(&a));
            }
        }
    }
}
