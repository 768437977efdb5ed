//! Independent numerical propagators used as oracles for the closed forms:
//! a Strang split-step spectral solver of the reduced paraxial equation and
//! a direct quadrature of the propagation kernel.
//!
//! In reduced units the evolution is `i d psi / d zeta = (k^2/4 + 2 A x) psi`
//! (momentum diagonal kinetic part, position diagonal potential part), so a
//! split step alternates exact multipliers in the two bases. For a linear
//! potential the usual Strang commutator defects collapse to a global phase,
//! which keeps the method unitary and, up to that phase, spectrally exact.

mod fft;

pub use fft::Fft2;

use num_complex::Complex64;

use crate::error::{Result, SqwError};
use crate::grid::{ComplexField2D, Grid2D};

/// Fraction of the Nyquist wavenumber the field's spectrum may occupy.
const NYQUIST_FRACTION: f64 = 0.8;
/// Spectral power allowed beyond the Nyquist fraction before rejecting.
const ALIAS_POWER_TOL: f64 = 1e-10;
/// Largest per-axis sample count accepted by [`kernel_propagate`].
pub const KERNEL_GRID_CAP: usize = 256;
/// Conditioning floor on `|zeta|` for [`kernel_propagate`].
pub const KERNEL_PROPAGATE_ZETA_MIN: f64 = 1e-3;

/// Parameters of a split-step run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitStepPlan {
    /// Steps per unit `zeta`; at least 16.
    pub steps_per_rayleigh: u32,
    pub grid: Grid2D,
    /// Reduced potential strength.
    pub a: f64,
    /// Absorbing-layer width as a fraction of each extent, `[0, 0.5)`;
    /// 0 disables the absorber (the default for oracle comparisons).
    pub absorber_width: f64,
}

impl SplitStepPlan {
    pub fn new(steps_per_rayleigh: u32, grid: Grid2D, a: f64, absorber_width: f64) -> Result<Self> {
        if steps_per_rayleigh < 16 {
            return Err(SqwError::InvalidParameter(format!(
                "steps_per_rayleigh must be >= 16, got {steps_per_rayleigh}"
            )));
        }
        if !(0.0..0.5).contains(&absorber_width) {
            return Err(SqwError::InvalidParameter(format!(
                "absorber_width must lie in [0, 0.5), got {absorber_width}"
            )));
        }
        if !a.is_finite() {
            return Err(SqwError::InvalidParameter("potential strength must be finite".into()));
        }
        Ok(Self { steps_per_rayleigh, grid, a, absorber_width })
    }
}

/// Reject fields whose spectral content reaches beyond the allowed fraction
/// of the grid Nyquist wavenumber on either axis.
fn aliasing_guard(field: &ComplexField2D, fft: &mut Fft2) -> Result<()> {
    let grid = field.grid;
    let mut spectrum = field.values.clone();
    fft.forward(&mut spectrum);
    let mut total = 0.0;
    let mut beyond = 0.0;
    let (kx_max, ky_max) = (NYQUIST_FRACTION * grid.nyquist_x(), NYQUIST_FRACTION * grid.nyquist_y());
    for iy in 0..grid.ny {
        let ky = grid.ky(iy);
        for ix in 0..grid.nx {
            let p = spectrum[iy * grid.nx + ix].norm_sqr();
            total += p;
            if grid.kx(ix).abs() > kx_max || ky.abs() > ky_max {
                beyond += p;
            }
        }
    }
    let fraction = if total > 0.0 { beyond / total } else { 0.0 };
    if fraction > ALIAS_POWER_TOL {
        return Err(SqwError::NyquistExceeded { limit: 100.0 * NYQUIST_FRACTION, fraction });
    }
    Ok(())
}

/// Cosine-ramp absorbing mask value for one axis coordinate.
fn absorber_factor(coord: f64, extent: f64, width: f64) -> f64 {
    if width <= 0.0 {
        return 1.0;
    }
    let layer = width * extent;
    let depth = (coord.abs() - (extent - layer)) / layer;
    if depth <= 0.0 {
        1.0
    } else {
        (std::f64::consts::FRAC_PI_2 * depth.min(1.0)).cos().powi(2)
    }
}

/// Strang split-step evolution of `field` by `delta_zeta` under `plan`.
///
/// Half kinetic, full potential, half kinetic per step, with adjacent half
/// steps merged. Unitary to rounding with the absorber disabled. Rejects
/// aliased input spectra and grid mismatches.
pub fn split_step_propagate(
    field: &ComplexField2D,
    plan: &SplitStepPlan,
    delta_zeta: f64,
) -> Result<ComplexField2D> {
    let grid = plan.grid;
    if field.grid != grid {
        return Err(SqwError::InvalidParameter(
            "field grid does not match the split-step plan grid".into(),
        ));
    }
    if delta_zeta == 0.0 || !delta_zeta.is_finite() {
        return Err(SqwError::InvalidParameter(format!(
            "delta_zeta must be finite and nonzero, got {delta_zeta}"
        )));
    }
    let mut fft = Fft2::new(grid.nx, grid.ny);
    aliasing_guard(field, &mut fft)?;

    let steps = ((plan.steps_per_rayleigh as f64 * delta_zeta.abs()).round() as usize).max(1);
    let dz = delta_zeta / steps as f64;

    // per-axis multiplier tables
    let kin_x: Vec<Complex64> = (0..grid.nx)
        .map(|ix| Complex64::from_polar(1.0, -grid.kx(ix).powi(2) / 4.0 * dz))
        .collect();
    let kin_y: Vec<Complex64> = (0..grid.ny)
        .map(|iy| Complex64::from_polar(1.0, -grid.ky(iy).powi(2) / 4.0 * dz))
        .collect();
    let half_kin_x: Vec<Complex64> = (0..grid.nx)
        .map(|ix| Complex64::from_polar(1.0, -grid.kx(ix).powi(2) / 8.0 * dz))
        .collect();
    let half_kin_y: Vec<Complex64> = (0..grid.ny)
        .map(|iy| Complex64::from_polar(1.0, -grid.ky(iy).powi(2) / 8.0 * dz))
        .collect();
    let pot_x: Vec<Complex64> = (0..grid.nx)
        .map(|ix| Complex64::from_polar(1.0, -2.0 * plan.a * grid.x(ix) * dz))
        .collect();
    let absorber: Option<Vec<f64>> = (plan.absorber_width > 0.0).then(|| {
        let mut mask = vec![0.0; grid.len()];
        for iy in 0..grid.ny {
            let my = absorber_factor(grid.y(iy), grid.extent_y, plan.absorber_width);
            for ix in 0..grid.nx {
                mask[iy * grid.nx + ix] =
                    my * absorber_factor(grid.x(ix), grid.extent_x, plan.absorber_width);
            }
        }
        mask
    });

    let apply_axis = |values: &mut [Complex64], fx: &[Complex64], fy: &[Complex64]| {
        for iy in 0..grid.ny {
            let base = iy * grid.nx;
            let row_f = fy[iy];
            for ix in 0..grid.nx {
                values[base + ix] *= row_f * fx[ix];
            }
        }
    };

    let mut values = field.values.clone();
    fft.forward(&mut values);
    apply_axis(&mut values, &half_kin_x, &half_kin_y);
    for step in 0..steps {
        fft.inverse(&mut values);
        // exact potential phase (diagonal in position)
        for iy in 0..grid.ny {
            let base = iy * grid.nx;
            for ix in 0..grid.nx {
                values[base + ix] *= pot_x[ix];
            }
        }
        if let Some(mask) = &absorber {
            for (v, &m) in values.iter_mut().zip(mask) {
                *v *= m;
            }
        }
        fft.forward(&mut values);
        if step + 1 < steps {
            apply_axis(&mut values, &kin_x, &kin_y);
        } else {
            apply_axis(&mut values, &half_kin_x, &half_kin_y);
        }
    }
    fft.inverse(&mut values);

    Ok(ComplexField2D {
        grid,
        values,
        zeta: field.zeta + delta_zeta,
        normalized: field.normalized && absorber.is_none(),
    })
}

/// Direct separable quadrature of the propagation kernel: trapezoid-free
/// midpoint sums `psi(x,y,zeta) = sum K_x(x,x') K_y(y,y') psi0(x',y') dx' dy'`
/// over the (cell-centered) grid. O(n^3), intended for small grids.
pub fn kernel_propagate(field0: &ComplexField2D, a: f64, zeta: f64) -> Result<ComplexField2D> {
    let grid = field0.grid;
    if grid.nx > KERNEL_GRID_CAP || grid.ny > KERNEL_GRID_CAP {
        return Err(SqwError::KernelGridTooLarge {
            n: grid.nx.max(grid.ny),
            cap: KERNEL_GRID_CAP,
        });
    }
    if zeta.abs() < KERNEL_PROPAGATE_ZETA_MIN {
        return Err(SqwError::ZetaTooSmall { zeta, min: KERNEL_PROPAGATE_ZETA_MIN });
    }
    let xs = grid.xs();
    let ys = grid.ys();
    let dx = grid.dx();
    let dy = grid.dy();
    // dense kernel matrices including the quadrature weights
    let mut kx = vec![Complex64::default(); grid.nx * grid.nx];
    for (i, &x) in xs.iter().enumerate() {
        for (j, &xp) in xs.iter().enumerate() {
            kx[i * grid.nx + j] = crate::analytic::kernel_x(x, xp, a, zeta)? * dx;
        }
    }
    let mut ky = vec![Complex64::default(); grid.ny * grid.ny];
    for (i, &y) in ys.iter().enumerate() {
        for (j, &yp) in ys.iter().enumerate() {
            ky[i * grid.ny + j] = crate::analytic::kernel_y(y, yp, zeta)? * dy;
        }
    }
    // rows: tmp[jy][ix] = sum_jx Kx[ix][jx] psi[jy][jx]
    let mut tmp = vec![Complex64::default(); grid.len()];
    for jy in 0..grid.ny {
        let src = &field0.values[jy * grid.nx..(jy + 1) * grid.nx];
        let dst = &mut tmp[jy * grid.nx..(jy + 1) * grid.nx];
        for ix in 0..grid.nx {
            let krow = &kx[ix * grid.nx..(ix + 1) * grid.nx];
            let mut acc = Complex64::default();
            for jx in 0..grid.nx {
                acc += krow[jx] * src[jx];
            }
            dst[ix] = acc;
        }
    }
    // columns: out[iy][ix] = sum_jy Ky[iy][jy] tmp[jy][ix]
    let mut out = vec![Complex64::default(); grid.len()];
    for iy in 0..grid.ny {
        let krow = &ky[iy * grid.ny..(iy + 1) * grid.ny];
        let dst = &mut out[iy * grid.nx..(iy + 1) * grid.nx];
        for jy in 0..grid.ny {
            let w = krow[jy];
            let src = &tmp[jy * grid.nx..(jy + 1) * grid.nx];
            for ix in 0..grid.nx {
                dst[ix] += w * src[ix];
            }
        }
    }
    Ok(ComplexField2D { grid, values: out, zeta: field0.zeta + zeta, normalized: false })
}
