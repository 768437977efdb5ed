//! Hermite and associated Laguerre polynomials via stable three-term
//! recurrences. Nonnegative orders are enforced by the index types.

use num_complex::Complex64;

/// Physicists' Hermite polynomial `H_m(x)`.
pub fn hermite(m: u32, x: f64) -> f64 {
    match m {
        0 => 1.0,
        1 => 2.0 * x,
        _ => {
            let mut h_prev = 1.0;
            let mut h = 2.0 * x;
            for k in 1..m {
                let next = 2.0 * x * h - 2.0 * k as f64 * h_prev;
                h_prev = h;
                h = next;
            }
            h
        }
    }
}

/// `H_m` at a complex argument (the same recurrence; needed for the
/// Airy-transform sum, whose Hermite factor sits on the imaginary axis).
pub fn hermite_complex(m: u32, z: Complex64) -> Complex64 {
    match m {
        0 => Complex64::new(1.0, 0.0),
        1 => 2.0 * z,
        _ => {
            let mut h_prev = Complex64::new(1.0, 0.0);
            let mut h = 2.0 * z;
            for k in 1..m {
                let next = 2.0 * z * h - 2.0 * k as f64 * h_prev;
                h_prev = h;
                h = next;
            }
            h
        }
    }
}

/// Associated Laguerre polynomial `L_p^a(x)`.
pub fn laguerre(p: u32, a: u32, x: f64) -> f64 {
    let a = a as f64;
    match p {
        0 => 1.0,
        1 => 1.0 + a - x,
        _ => {
            let mut l_prev = 1.0;
            let mut l = 1.0 + a - x;
            for k in 1..p {
                let kf = k as f64;
                let next = ((2.0 * kf + a + 1.0 - x) * l - (kf + a) * l_prev) / (kf + 1.0);
                l_prev = l;
                l = next;
            }
            l
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_low_orders() {
        for &x in &[-2.0, 0.0, 0.5, 3.0] {
            assert_eq!(hermite(0, x), 1.0);
            assert_eq!(hermite(1, x), 2.0 * x);
        }
        assert_eq!(hermite(1, 3.0), 6.0);
        // H_2 = 4x^2 - 2 evaluated independently
        assert_eq!(hermite(2, 1.0), 4.0 * 1.0 - 2.0);
    }

    #[test]
    fn hermite_recurrence_residual() {
        // H_{m+1} - 2x H_m + 2m H_{m-1} = 0, relative to the largest term
        for m in 1..=20u32 {
            let mut x = -5.0;
            while x <= 5.0 {
                let lhs = hermite(m + 1, x) - 2.0 * x * hermite(m, x)
                    + 2.0 * m as f64 * hermite(m - 1, x);
                let scale = hermite(m + 1, x)
                    .abs()
                    .max((2.0 * x * hermite(m, x)).abs())
                    .max(1.0);
                assert!(lhs.abs() / scale < 1e-9, "residual at m={m}, x={x}");
                x += 0.7;
            }
        }
    }

    #[test]
    fn hermite_complex_matches_real_axis() {
        for m in 0..8 {
            let z = Complex64::new(1.3, 0.0);
            let h = hermite_complex(m, z);
            assert!((h.re - hermite(m, 1.3)).abs() < 1e-9 * h.norm().max(1.0));
            assert_eq!(h.im, 0.0);
        }
    }

    #[test]
    fn hermite_of_imaginary_argument_times_i_pow_is_real() {
        // H_n(i w) i^n is real for real w
        let w = 0.515;
        for n in 0..8u32 {
            let v = hermite_complex(n, Complex64::new(0.0, w)) * Complex64::i().powu(n);
            assert!(v.im.abs() < 1e-12 * v.norm().max(1.0), "n={n}: {v}");
        }
    }

    #[test]
    fn laguerre_low_orders() {
        assert_eq!(laguerre(0, 3, 2.5), 1.0);
        assert_eq!(laguerre(1, 0, 0.5), 0.5);
        // L_2^1(x) = 3 - 3x + x^2/2 expanded by hand
        let x = 1.0;
        let expected = 3.0 - 3.0 * x + 0.5 * x * x;
        assert!((laguerre(2, 1, x) - expected).abs() < 1e-14);
    }

    #[test]
    fn laguerre_recurrence_against_expansion() {
        // L_3^2(x) = (-x^3 + 15x^2 - 60x + 60)/6
        for &x in &[0.0_f64, 0.7, 2.0, 5.5] {
            let expected = (-x.powi(3) + 15.0 * x * x - 60.0 * x + 60.0) / 6.0;
            assert!((laguerre(3, 2, x) - expected).abs() < 1e-12 * expected.abs().max(1.0));
        }
    }
}
