//! Closed-form wavefunctions and propagation kernels.
//!
//! In reduced units the paraxial evolution under `V = alpha x` factorizes per
//! axis. The x factor of an order-m Hermite-Gauss mode propagated to `zeta`
//! is, up to unit-norm scaling,
//!
//! ```text
//! (1+zeta^2)^(-1/4) e^{-i(m+1/2) atan zeta}
//!   exp(-X^2/(1+i zeta)) H_m(sqrt(2) X / sqrt(1+zeta^2))
//!   exp(-2i A zeta x) exp(-i A^2 zeta^3 / 3),     X = x + A zeta^2 / 2,
//! ```
//!
//! and the y factor is the same with `A = 0`. The half-integer powers of
//! `(1 - i zeta)/(1 + i zeta)` are evaluated as `exp(-i m atan zeta)`, which
//! keeps the branch continuous in `zeta` and equal to 1 at `zeta = 0`. The
//! density is the free-space density translated by the classical drift
//! `-A zeta^2 / 2`; the potential contributes only that drift, the tilt
//! phase and the cubic phase, none of which depend on the mode indices.
//!
//! Laguerre-Gauss modes are built as unitary superpositions of Hermite-Gauss
//! modes of equal total order; the polar closed form is used at `zeta = 0`
//! as an independent cross-check only.

use num_complex::Complex64;

use crate::error::{Result, SqwError};
use crate::grid::{ComplexField2D, Grid2D};
use crate::specfun::{hermite, laguerre};

/// Transverse mode label: Cartesian `HG(m, n)` or cylindrical `LG(ell, p)`,
/// optionally displaced from the beam axis (offsets in waist units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModeSpec {
    Hermite { m: u32, n: u32, offset: (f64, f64) },
    Laguerre { ell: i32, p: u32, offset: (f64, f64) },
}

impl ModeSpec {
    pub fn hg(m: u32, n: u32) -> Self {
        ModeSpec::Hermite { m, n, offset: (0.0, 0.0) }
    }

    pub fn lg(ell: i32, p: u32) -> Self {
        ModeSpec::Laguerre { ell, p, offset: (0.0, 0.0) }
    }

    pub fn with_offset(self, ox: f64, oy: f64) -> Self {
        match self {
            ModeSpec::Hermite { m, n, .. } => ModeSpec::Hermite { m, n, offset: (ox, oy) },
            ModeSpec::Laguerre { ell, p, .. } => ModeSpec::Laguerre { ell, p, offset: (ox, oy) },
        }
    }

    pub fn offset(&self) -> (f64, f64) {
        match *self {
            ModeSpec::Hermite { offset, .. } | ModeSpec::Laguerre { offset, .. } => offset,
        }
    }

    /// Total mode order `m + n` (equals `2p + |ell|` for LG).
    pub fn order(&self) -> u32 {
        match *self {
            ModeSpec::Hermite { m, n, .. } => m + n,
            ModeSpec::Laguerre { ell, p, .. } => 2 * p + ell.unsigned_abs(),
        }
    }
}

/// The propagation features a linear potential adds to any mode, plus the
/// mode-order Gouy factor. All but the Gouy factor are mode-independent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatedTerms {
    /// Envelope center displacement, `-A zeta^2 / 2`.
    pub centroid_shift: f64,
    /// Coefficient `2 A zeta` of the tilt phase `exp(-i (2 A zeta) x)`.
    pub tilt_phase_coeff: f64,
    /// Cubic global phase magnitude `A^2 zeta^3 / 3` (enters as its negative).
    pub t3_phase: f64,
    /// `exp(-i (m + n + 1) atan zeta)`; unit modulus, 1 at `zeta = 0`.
    pub gouy_factor: Complex64,
}

/// Propagation terms for a mode at reduced potential `a` and distance `zeta`.
pub fn propagated_terms(mode: &ModeSpec, a: f64, zeta: f64) -> PropagatedTerms {
    PropagatedTerms {
        centroid_shift: classical_centroid(0.0, a, zeta),
        tilt_phase_coeff: 2.0 * a * zeta,
        t3_phase: t3_phase(a, zeta),
        gouy_factor: Complex64::from_polar(1.0, -((mode.order() + 1) as f64) * zeta.atan()),
    }
}

/// Classical transverse trajectory `x(zeta) = x0 - A zeta^2 / 2`.
pub fn classical_centroid(x0: f64, a: f64, zeta: f64) -> f64 {
    x0 - 0.5 * a * zeta * zeta
}

/// Cubic global phase `A^2 zeta^3 / 3` accumulated under the potential.
pub fn t3_phase(a: f64, zeta: f64) -> f64 {
    a * a * zeta.powi(3) / 3.0
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Unit-norm constant for the 1D profile `exp(-x^2) H_m(sqrt(2) x)`, whose
/// squared L2 norm is `2^(m - 1/2) m! sqrt(pi)`.
fn hg_axis_norm(m: u32) -> f64 {
    (2.0_f64.powf(m as f64 - 0.5) * factorial(m) * std::f64::consts::PI.sqrt())
        .sqrt()
        .recip()
}

/// One transverse axis factor of a propagated HG mode, continuum-normalized.
///
/// `a = 0` gives the free (y) factor. Offsets translate the envelope; the
/// translation also feeds the tilt phase so that the result still solves the
/// reduced paraxial equation.
#[derive(Debug, Clone, Copy)]
pub struct AxisMode {
    pub m: u32,
    pub a: f64,
    pub zeta: f64,
    pub offset: f64,
}

impl AxisMode {
    fn width(&self) -> f64 {
        (1.0 + self.zeta * self.zeta).sqrt()
    }

    fn common_prefactor(&self) -> Complex64 {
        let s2 = 1.0 + self.zeta * self.zeta;
        let gouy =
            Complex64::from_polar(s2.powf(-0.25), -(self.m as f64 + 0.5) * self.zeta.atan());
        // the cubic phase belongs to the axis that feels the potential
        let t3 = Complex64::from_polar(1.0, -t3_phase(self.a, self.zeta));
        gouy * hg_axis_norm(self.m) * t3
    }

    fn eval_parts(&self, x: f64) -> (Complex64, Complex64, f64) {
        let big_x = x - self.offset + 0.5 * self.a * self.zeta * self.zeta;
        let one_i_zeta = Complex64::new(1.0, self.zeta);
        let u = std::f64::consts::SQRT_2 * big_x / self.width();
        let envelope = (-big_x * big_x / one_i_zeta).exp();
        let tilt = Complex64::from_polar(1.0, -2.0 * self.a * self.zeta * x);
        let common = self.common_prefactor() * envelope * tilt;
        (common * hermite(self.m, u), common, u)
    }

    /// Factor value at coordinate `x`.
    pub fn eval(&self, x: f64) -> Complex64 {
        self.eval_parts(x).0
    }

    /// Factor value and its x derivative (for current and streamline work).
    pub fn eval_with_derivative(&self, x: f64) -> (Complex64, Complex64) {
        let big_x = x - self.offset + 0.5 * self.a * self.zeta * self.zeta;
        let one_i_zeta = Complex64::new(1.0, self.zeta);
        let (value, common, u) = self.eval_parts(x);
        let hermite_deriv =
            if self.m == 0 { 0.0 } else { 2.0 * self.m as f64 * hermite(self.m - 1, u) };
        let deriv = value
            * (-2.0 * big_x / one_i_zeta - Complex64::new(0.0, 2.0 * self.a * self.zeta))
            + common * hermite_deriv * std::f64::consts::SQRT_2 / self.width();
        (value, deriv)
    }
}

fn hg_axes(m: u32, n: u32, offset: (f64, f64), a: f64, zeta: f64) -> (AxisMode, AxisMode) {
    (
        AxisMode { m, a, zeta, offset: offset.0 },
        AxisMode { m: n, a: 0.0, zeta, offset: offset.1 },
    )
}

fn require_hg(mode: &ModeSpec) -> Result<(u32, u32, (f64, f64))> {
    match *mode {
        ModeSpec::Hermite { m, n, offset } => Ok((m, n, offset)),
        ModeSpec::Laguerre { .. } => {
            Err(SqwError::InvalidParameter("expected a Hermite-Gauss mode".into()))
        }
    }
}

fn require_lg(mode: &ModeSpec) -> Result<(i32, u32, (f64, f64))> {
    match *mode {
        ModeSpec::Laguerre { ell, p, offset } => Ok((ell, p, offset)),
        ModeSpec::Hermite { .. } => {
            Err(SqwError::InvalidParameter("expected a Laguerre-Gauss mode".into()))
        }
    }
}

/// Sample a product of axis factors onto a grid.
fn sample_axes(grid: Grid2D, zeta: f64, fx: &AxisMode, fy: &AxisMode) -> ComplexField2D {
    let col: Vec<Complex64> = grid.xs().iter().map(|&x| fx.eval(x)).collect();
    let row: Vec<Complex64> = grid.ys().iter().map(|&y| fy.eval(y)).collect();
    let mut field = ComplexField2D::zeros(grid, zeta);
    for iy in 0..grid.ny {
        let base = iy * grid.nx;
        for ix in 0..grid.nx {
            field.values[base + ix] = row[iy] * col[ix];
        }
    }
    field
}

fn check_capture_and_normalize(mut field: ComplexField2D) -> Result<ComplexField2D> {
    let captured = field.norm_sq();
    if captured < 0.999 {
        return Err(SqwError::GridCapture { captured });
    }
    field.normalize();
    Ok(field)
}

/// Initial (`zeta = 0`) Hermite-Gauss wavefunction, unit discrete norm.
///
/// Rejects grids that capture less than 0.999 of the analytic norm.
pub fn hg_initial(mode: &ModeSpec, grid: Grid2D) -> Result<ComplexField2D> {
    let (m, n, offset) = require_hg(mode)?;
    let (fx, fy) = hg_axes(m, n, offset, 0.0, 0.0);
    check_capture_and_normalize(sample_axes(grid, 0.0, &fx, &fy))
}

/// Hermite-Gauss wavefunction propagated to `zeta` under reduced potential
/// strength `a`, unit discrete norm.
pub fn hg_propagated(mode: &ModeSpec, a: f64, zeta: f64, grid: Grid2D) -> Result<ComplexField2D> {
    let (m, n, offset) = require_hg(mode)?;
    let (fx, fy) = hg_axes(m, n, offset, a, zeta);
    let mut field = sample_axes(grid, zeta, &fx, &fy);
    field.normalize();
    Ok(field)
}

/// Continuum-normalized point value of a propagated mode (HG or LG).
pub fn eval_mode(mode: &ModeSpec, a: f64, zeta: f64, x: f64, y: f64) -> Complex64 {
    match *mode {
        ModeSpec::Hermite { m, n, offset } => {
            let (fx, fy) = hg_axes(m, n, offset, a, zeta);
            fx.eval(x) * fy.eval(y)
        }
        ModeSpec::Laguerre { .. } => eval_mode_gradient(mode, a, zeta, x, y).0,
    }
}

/// Point value together with its transverse gradient.
pub fn eval_mode_gradient(
    mode: &ModeSpec,
    a: f64,
    zeta: f64,
    x: f64,
    y: f64,
) -> (Complex64, Complex64, Complex64) {
    match *mode {
        ModeSpec::Hermite { m, n, offset } => {
            let (fx, fy) = hg_axes(m, n, offset, a, zeta);
            let (vx, dx) = fx.eval_with_derivative(x);
            let (vy, dy) = fy.eval_with_derivative(y);
            (vx * vy, dx * vy, vx * dy)
        }
        ModeSpec::Laguerre { ell, p, offset } => {
            let mut value = Complex64::new(0.0, 0.0);
            let mut grad_x = Complex64::new(0.0, 0.0);
            let mut grad_y = Complex64::new(0.0, 0.0);
            for (m, n, c) in lg_from_hg_coeffs(ell, p) {
                let (fx, fy) = hg_axes(m, n, offset, a, zeta);
                let (vx, dx) = fx.eval_with_derivative(x);
                let (vy, dy) = fy.eval_with_derivative(y);
                value += c * vx * vy;
                grad_x += c * dx * vy;
                grad_y += c * vx * dy;
            }
            (value, grad_x, grad_y)
        }
    }
}

/// Hermite-Gauss expansion of `LG(ell, p)`: the list of `(m, n, coefficient)`
/// over all `m + n = 2p + |ell|`, unit total weight.
///
/// Coefficients are the k-th Taylor coefficients of
/// `(1 - t)^p (1 + t)^(p + |ell|)` with the usual square-root prefactor and
/// an `i^k` twist whose handedness follows the sign of `ell`.
pub fn lg_from_hg_coeffs(ell: i32, p: u32) -> Vec<(u32, u32, Complex64)> {
    let l = ell.unsigned_abs();
    let big_n = 2 * p + l;
    let (gen_a, gen_b) = (p, p + l); // (1-t)^gen_a (1+t)^gen_b
    let mut poly = vec![0.0; (big_n + 1) as usize];
    for j in 0..=gen_a {
        for k in 0..=gen_b {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            poly[(j + k) as usize] += sign * binomial(gen_a, j) * binomial(gen_b, k);
        }
    }
    let norm = (2.0_f64.powi(big_n as i32) * factorial(gen_a) * factorial(gen_b)).sqrt();
    // (-1)^p aligns the superposition with the polar convention whose radial
    // factor is +L_p^{|ell|}(2 r^2)
    let ring_sign = if p % 2 == 0 { 1.0 } else { -1.0 };
    (0..=big_n)
        .map(|k| {
            let b_k =
                ring_sign * (factorial(big_n - k) * factorial(k)).sqrt() * poly[k as usize] / norm;
            let twist =
                if ell >= 0 { Complex64::i().powu(k) } else { (-Complex64::i()).powu(k) };
            (big_n - k, k, twist * b_k)
        })
        .collect()
}

fn binomial(n: u32, k: u32) -> f64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Initial (`zeta = 0`) Laguerre-Gauss wavefunction from the polar closed
/// form, unit discrete norm. The phase winds by `2 pi ell` around the center.
pub fn lg_initial(mode: &ModeSpec, grid: Grid2D) -> Result<ComplexField2D> {
    let (ell, p, offset) = require_lg(mode)?;
    let l = ell.unsigned_abs();
    let norm = (2.0 * factorial(p) / (std::f64::consts::PI * factorial(p + l))).sqrt();
    let field = ComplexField2D::from_fn(grid, 0.0, |x, y| {
        let (dx, dy) = (x - offset.0, y - offset.1);
        let r2 = dx * dx + dy * dy;
        let phi = dy.atan2(dx);
        let radial = norm
            * (std::f64::consts::SQRT_2 * r2.sqrt()).powi(l as i32)
            * laguerre(p, l, 2.0 * r2)
            * (-r2).exp();
        Complex64::from_polar(radial, phi * ell as f64)
    });
    check_capture_and_normalize(field)
}

/// Laguerre-Gauss wavefunction propagated to `zeta` under reduced potential
/// strength `a`, via the Hermite-Gauss superposition, unit discrete norm.
pub fn lg_propagated(mode: &ModeSpec, a: f64, zeta: f64, grid: Grid2D) -> Result<ComplexField2D> {
    let (ell, p, offset) = require_lg(mode)?;
    let coeffs = lg_from_hg_coeffs(ell, p);
    let big_n = 2 * p + ell.unsigned_abs();
    // per-axis factor tables shared across the superposition
    let x_tables: Vec<Vec<Complex64>> = (0..=big_n)
        .map(|m| {
            let fx = AxisMode { m, a, zeta, offset: offset.0 };
            grid.xs().iter().map(|&x| fx.eval(x)).collect()
        })
        .collect();
    let y_tables: Vec<Vec<Complex64>> = (0..=big_n)
        .map(|n| {
            let fy = AxisMode { m: n, a: 0.0, zeta, offset: offset.1 };
            grid.ys().iter().map(|&y| fy.eval(y)).collect()
        })
        .collect();
    let mut field = ComplexField2D::zeros(grid, zeta);
    for (m, n, c) in &coeffs {
        let col = &x_tables[*m as usize];
        let row = &y_tables[*n as usize];
        for iy in 0..grid.ny {
            let base = iy * grid.nx;
            let ry = c * row[iy];
            for ix in 0..grid.nx {
                field.values[base + ix] += ry * col[ix];
            }
        }
    }
    field.normalize();
    Ok(field)
}

/// Convenience dispatch: initial field of either family.
pub fn mode_initial(mode: &ModeSpec, grid: Grid2D) -> Result<ComplexField2D> {
    match mode {
        ModeSpec::Hermite { .. } => hg_initial(mode, grid),
        ModeSpec::Laguerre { .. } => lg_initial(mode, grid),
    }
}

/// Convenience dispatch: propagated field of either family.
pub fn mode_propagated(
    mode: &ModeSpec,
    a: f64,
    zeta: f64,
    grid: Grid2D,
) -> Result<ComplexField2D> {
    match mode {
        ModeSpec::Hermite { .. } => hg_propagated(mode, a, zeta, grid),
        ModeSpec::Laguerre { .. } => lg_propagated(mode, a, zeta, grid),
    }
}

/// Floor on `|zeta|` below which the kernels are rejected as distributional.
pub const KERNEL_ZETA_MIN: f64 = 1e-6;

/// Reduced x-axis propagation kernel for potential strength `a`,
///
/// ```text
/// K(x, x'; zeta) = sqrt(1/(i pi zeta))
///     exp(-i [ A^2 zeta^3 / 12 - (x - x')^2 / zeta + A zeta (x + x') ]),
/// ```
///
/// defined so that `psi(x, zeta) = int K(x, x') psi(x', 0) dx'` in waist
/// units. The prefactor is beam-independent in this reduced form; negative
/// `zeta` takes the analytic continuation (principal square root).
pub fn kernel_x(x: f64, x_prime: f64, a: f64, zeta: f64) -> Result<Complex64> {
    if zeta.abs() < KERNEL_ZETA_MIN {
        return Err(SqwError::ZetaTooSmall { zeta, min: KERNEL_ZETA_MIN });
    }
    let pre = Complex64::new(0.0, std::f64::consts::PI * zeta).inv().sqrt();
    let dx = x - x_prime;
    let phase = a * a * zeta.powi(3) / 12.0 - dx * dx / zeta + a * zeta * (x + x_prime);
    Ok(pre * Complex64::from_polar(1.0, -phase))
}

/// Free (y-axis) propagation kernel; equals [`kernel_x`] with `a = 0`.
pub fn kernel_y(y: f64, y_prime: f64, zeta: f64) -> Result<Complex64> {
    kernel_x(y, y_prime, 0.0, zeta)
}
