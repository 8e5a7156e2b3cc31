//! Matrix exponential via scaling-and-squaring with Padé(13) approximation
//! (Higham 2005). Backward error is bounded by ~1e-13 in the 1-norm for f64,
//! which the displacement unitarity checks rely on.

use ndarray::Array2;

use crate::C64;

/// Padé(13,13) coefficients, Higham (2005) Table 10.4.
const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

const THETA13: f64 = 5.371_920_351_148_152;

fn one_norm(a: &Array2<C64>) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..a.ncols() {
        let s: f64 = a.column(j).iter().map(|z| z.norm()).sum();
        if s > worst {
            worst = s;
        }
    }
    worst
}

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Solve `A X = B` by Gaussian elimination with partial pivoting.
fn solve(mut a: Array2<C64>, mut b: Array2<C64>) -> Array2<C64> {
    let n = a.nrows();
    for k in 0..n {
        let mut piv = k;
        let mut best = a[[k, k]].norm();
        for r in (k + 1)..n {
            let m = a[[r, k]].norm();
            if m > best {
                best = m;
                piv = r;
            }
        }
        if piv != k {
            for j in 0..n {
                a.swap([k, j], [piv, j]);
                b.swap([k, j], [piv, j]);
            }
        }
        let akk = a[[k, k]];
        for r in (k + 1)..n {
            let f = a[[r, k]] / akk;
            if f == c(0.0) {
                continue;
            }
            for j in k..n {
                let v = a[[k, j]];
                a[[r, j]] -= f * v;
            }
            for j in 0..n {
                let v = b[[k, j]];
                b[[r, j]] -= f * v;
            }
        }
    }
    for k in (0..n).rev() {
        let akk = a[[k, k]];
        for j in 0..n {
            let mut s = b[[k, j]];
            for m in (k + 1)..n {
                s -= a[[k, m]] * b[[m, j]];
            }
            b[[k, j]] = s / akk;
        }
    }
    b
}

/// exp(A) for a square complex matrix.
pub fn expm(a: &Array2<C64>) -> Array2<C64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm requires a square matrix");
    if n == 0 {
        return Array2::zeros((0, 0));
    }
    if n == 1 {
        let mut r = Array2::zeros((1, 1));
        r[[0, 0]] = a[[0, 0]].exp();
        return r;
    }

    let norm = one_norm(a);
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a * c(1.0 / (1u64 << s) as f64);

    let eye = Array2::from_diag_elem(n, c(1.0));
    let a2 = scaled.dot(&scaled);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);

    let u_inner = &a6 * c(PADE13[13]) + &a4 * c(PADE13[11]) + &a2 * c(PADE13[9]);
    let u = scaled.dot(
        &(u_inner.dot(&a6)
            + &a6 * c(PADE13[7])
            + &a4 * c(PADE13[5])
            + &a2 * c(PADE13[3])
            + &eye * c(PADE13[1])),
    );
    let v_inner = &a6 * c(PADE13[12]) + &a4 * c(PADE13[10]) + &a2 * c(PADE13[8]);
    let v = v_inner.dot(&a6)
        + &a6 * c(PADE13[6])
        + &a4 * c(PADE13[4])
        + &a2 * c(PADE13[2])
        + &eye * c(PADE13[0]);

    let mut r = solve(&v - &u, &v + &u);
    for _ in 0..s {
        r = r.dot(&r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn exponential_of_zero_is_identity() {
        let z = Array2::<C64>::zeros((5, 5));
        let e = expm(&z);
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((e[[i, j]] - C64::new(expect, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn diagonal_exponential_is_scalar_exp() {
        let a = array![
            [C64::new(0.3, 1.2), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(-2.0, 0.4)]
        ];
        let e = expm(&a);
        assert!((e[[0, 0]] - C64::new(0.3, 1.2).exp()).norm() < 1e-14);
        assert!((e[[1, 1]] - C64::new(-2.0, 0.4).exp()).norm() < 1e-14);
    }

    #[test]
    fn pauli_rotation_closed_form() {
        // exp(i t σ_x) = cos t + i sin t σ_x
        let t = 0.83;
        let a = array![
            [C64::new(0.0, 0.0), C64::new(0.0, t)],
            [C64::new(0.0, t), C64::new(0.0, 0.0)]
        ];
        let e = expm(&a);
        assert!((e[[0, 0]] - C64::new(t.cos(), 0.0)).norm() < 1e-14);
        assert!((e[[0, 1]] - C64::new(0.0, t.sin())).norm() < 1e-14);
    }

    #[test]
    fn large_norm_triggers_scaling_and_stays_accurate() {
        // anti-Hermitian generator with norm >> theta_13: result must be unitary
        let n = 12;
        let mut g = Array2::<C64>::zeros((n, n));
        for i in 0..n - 1 {
            g[[i, i + 1]] = C64::new(0.0, 3.0 * (i + 1) as f64);
            g[[i + 1, i]] = C64::new(0.0, 3.0 * (i + 1) as f64);
        }
        let e = expm(&g);
        let gram = e.t().mapv(|z| z.conj()).dot(&e);
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (gram[[i, j]] - C64::new(expect, 0.0)).norm() < 1e-12,
                    "unitarity violated at ({i},{j})"
                );
            }
        }
    }
}
