//! Adaptive Gauss-Kronrod quadrature (7/15-point panels).
//!
//! Panels are bisected greedily on the largest Kronrod error estimate until
//! the combined estimate meets the requested tolerance. Integrands here are
//! Gaussian-damped and at worst Airy-oscillatory, so panel counts stay small;
//! the driver refuses to run past a hard panel cap instead of spinning.

use num_complex::Complex64;

use crate::error::{Result, SqwError};

// 15-point Kronrod abscissae (positive half, descending) and weights, with
// the embedded 7-point Gauss weights. Standard QUADPACK constants.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_8,
    0.140_653_259_715_525_918_7,
    0.169_004_726_639_267_902_8,
    0.190_350_578_064_785_409_9,
    0.204_432_940_075_298_892_4,
    0.209_482_141_084_727_828_0,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_3,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_9,
    0.417_959_183_673_469_387_8,
];

/// One Kronrod panel evaluation: returns (K15 value, |K15 - G7| error bound).
fn qk15_complex(f: &mut impl FnMut(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        let sum = f1 + f2;
        kronrod += sum * WGK[j];
        // odd-indexed Kronrod nodes coincide with the 7-point Gauss nodes
        if j % 2 == 1 {
            gauss += sum * WG[j / 2];
        }
    }
    ((kronrod * half), (kronrod - gauss).norm() * half.abs())
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

/// Adaptive integral of a complex-valued function over `[a, b]`.
///
/// `initial_panels` seeds the subdivision (useful for oscillatory
/// integrands); the result is accepted once the summed error estimate drops
/// below `abs_tol + rel_tol * |integral|`.
pub fn integrate_complex(
    mut f: impl FnMut(f64) -> Complex64,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    initial_panels: usize,
) -> Result<(Complex64, f64)> {
    const MAX_PANELS: usize = 4000;
    let n0 = initial_panels.max(1);
    let mut panels: Vec<Panel> = Vec::with_capacity(64);
    let width = (b - a) / n0 as f64;
    for i in 0..n0 {
        let pa = a + i as f64 * width;
        let pb = if i + 1 == n0 { b } else { a + (i + 1) as f64 * width };
        let (value, error) = qk15_complex(&mut f, pa, pb);
        panels.push(Panel { a: pa, b: pb, value, error });
    }
    loop {
        let total: Complex64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.error).sum();
        if err <= abs_tol + rel_tol * total.norm() {
            return Ok((total, err));
        }
        if panels.len() >= MAX_PANELS {
            return Err(SqwError::QuadratureDidNotConverge(format!(
                "error estimate {err:.3e} above tolerance after {} panels on [{a}, {b}]",
                panels.len()
            )));
        }
        // bisect the worst panel (first of equals, for determinism)
        let mut worst = 0;
        for (i, p) in panels.iter().enumerate() {
            if p.error > panels[worst].error {
                worst = i;
            }
        }
        let Panel { a: pa, b: pb, .. } = panels[worst];
        let mid = 0.5 * (pa + pb);
        let (v1, e1) = qk15_complex(&mut f, pa, mid);
        let (v2, e2) = qk15_complex(&mut f, mid, pb);
        panels[worst] = Panel { a: pa, b: mid, value: v1, error: e1 };
        panels.push(Panel { a: mid, b: pb, value: v2, error: e2 });
    }
}

/// Adaptive integral of a real function over `[a, b]`.
pub fn integrate(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    initial_panels: usize,
) -> Result<(f64, f64)> {
    let (v, e) = integrate_complex(
        move |x| Complex64::new(f(x), 0.0),
        a,
        b,
        abs_tol,
        rel_tol,
        initial_panels,
    )?;
    Ok((v.re, e))
}

/// Half-width `L` such that `exp(-L^2)` falls below `tail`; integration
/// windows for Gaussian-damped integrands are taken as `[-L, L]`.
pub fn gaussian_halfwidth(tail: f64) -> f64 {
    (-tail.ln()).sqrt()
}
