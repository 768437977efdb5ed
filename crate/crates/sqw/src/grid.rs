//! Uniform transverse sampling grid and complex fields sampled on it.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SqwError};

/// Uniform, cell-centered transverse grid, symmetric about the beam axis.
///
/// Coordinates are dimensionless (units of the waist `w0`). `extent_x` and
/// `extent_y` are half-widths: samples along x are
/// `x_i = -extent_x + (i + 1/2) dx` with `dx = 2 extent_x / nx`, so the
/// sample set is symmetric about the origin and contains no point at 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid2D {
    pub nx: usize,
    pub ny: usize,
    pub extent_x: f64,
    pub extent_y: f64,
}

impl Grid2D {
    /// Build a grid; counts must be even and at least 8 (spectral-method
    /// requirement), extents positive.
    pub fn new(nx: usize, ny: usize, extent_x: f64, extent_y: f64) -> Result<Self> {
        for (name, n) in [("nx", nx), ("ny", ny)] {
            if n < 8 || n % 2 != 0 {
                return Err(SqwError::InvalidParameter(format!(
                    "grid {name} must be even and >= 8, got {n}"
                )));
            }
        }
        for (name, e) in [("extent_x", extent_x), ("extent_y", extent_y)] {
            if !e.is_finite() || e <= 0.0 {
                return Err(SqwError::InvalidParameter(format!(
                    "grid {name} must be finite and positive, got {e}"
                )));
            }
        }
        Ok(Self { nx, ny, extent_x, extent_y })
    }

    /// Square helper: same count and extent on both axes.
    pub fn square(n: usize, extent: f64) -> Result<Self> {
        Self::new(n, n, extent, extent)
    }

    pub fn dx(&self) -> f64 {
        2.0 * self.extent_x / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        2.0 * self.extent_y / self.ny as f64
    }

    pub fn x(&self, ix: usize) -> f64 {
        -self.extent_x + (ix as f64 + 0.5) * self.dx()
    }

    pub fn y(&self, iy: usize) -> f64 {
        -self.extent_y + (iy as f64 + 0.5) * self.dy()
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.nx).map(|i| self.x(i)).collect()
    }

    pub fn ys(&self) -> Vec<f64> {
        (0..self.ny).map(|i| self.y(i)).collect()
    }

    /// Area element `dx dy`.
    pub fn cell_area(&self) -> f64 {
        self.dx() * self.dy()
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// FFT wavenumber for column index `ix` (period `2 extent_x`).
    pub fn kx(&self, ix: usize) -> f64 {
        let n = self.nx as i64;
        let j = ix as i64;
        let f = if j < n / 2 { j } else { j - n };
        std::f64::consts::PI * f as f64 / self.extent_x
    }

    /// FFT wavenumber for row index `iy`.
    pub fn ky(&self, iy: usize) -> f64 {
        let n = self.ny as i64;
        let j = iy as i64;
        let f = if j < n / 2 { j } else { j - n };
        std::f64::consts::PI * f as f64 / self.extent_y
    }

    /// Nyquist wavenumber along x, `pi / dx`.
    pub fn nyquist_x(&self) -> f64 {
        std::f64::consts::PI / self.dx()
    }

    pub fn nyquist_y(&self) -> f64 {
        std::f64::consts::PI / self.dy()
    }
}

/// Complex wavefunction sampled on a [`Grid2D`], row-major (`iy * nx + ix`).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField2D {
    pub grid: Grid2D,
    pub values: Vec<Complex64>,
    /// Dimensionless propagation coordinate `z / z_R` of this sample plane.
    pub zeta: f64,
    /// True when the discrete norm has been fixed to 1.
    pub normalized: bool,
}

impl ComplexField2D {
    /// Sample `f(x, y)` on the grid.
    pub fn from_fn(grid: Grid2D, zeta: f64, mut f: impl FnMut(f64, f64) -> Complex64) -> Self {
        let mut values = Vec::with_capacity(grid.len());
        for iy in 0..grid.ny {
            let y = grid.y(iy);
            for ix in 0..grid.nx {
                values.push(f(grid.x(ix), y));
            }
        }
        Self { grid, values, zeta, normalized: false }
    }

    pub fn zeros(grid: Grid2D, zeta: f64) -> Self {
        Self { grid, values: vec![Complex64::new(0.0, 0.0); grid.len()], zeta, normalized: false }
    }

    #[inline]
    pub fn idx(&self, ix: usize, iy: usize) -> usize {
        iy * self.grid.nx + ix
    }

    #[inline]
    pub fn at(&self, ix: usize, iy: usize) -> Complex64 {
        self.values[iy * self.grid.nx + ix]
    }

    /// Discrete squared L2 norm, `sum |psi|^2 dx dy`.
    pub fn norm_sq(&self) -> f64 {
        let w = self.grid.cell_area();
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * w
    }

    /// Scale to unit discrete norm and set the `normalized` tag.
    pub fn normalize(&mut self) {
        let n2 = self.norm_sq();
        if n2 > 0.0 && n2.is_finite() {
            let s = 1.0 / n2.sqrt();
            for v in &mut self.values {
                *v *= s;
            }
            self.normalized = true;
        }
    }

    /// Discrete inner product `<self|other> = sum conj(self) * other dx dy`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        debug_assert_eq!(self.grid, other.grid);
        let w = self.grid.cell_area();
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            * w
    }

    /// L2 distance `|| self - other ||`.
    pub fn l2_distance(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.grid, other.grid);
        let w = self.grid.cell_area();
        (self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            * w)
            .sqrt()
    }

    /// L2 distance after removing one global phase (the argument of the
    /// mutual overlap), `min_phi || self - e^{i phi} other ||`.
    pub fn l2_distance_phase_aligned(&self, other: &Self) -> f64 {
        let ov = self.inner(other);
        // e^{i phi} <self|other> must come out real positive
        let phase =
            if ov.norm() > 0.0 { ov.conj() / ov.norm() } else { Complex64::new(1.0, 0.0) };
        let w = self.grid.cell_area();
        (self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - phase * b).norm_sqr())
            .sum::<f64>()
            * w)
            .sqrt()
    }

    /// Pointwise multiply by a function of position (e.g. a phase screen).
    pub fn apply_position_factor(&mut self, mut f: impl FnMut(f64, f64) -> Complex64) {
        for iy in 0..self.grid.ny {
            let y = self.grid.y(iy);
            let row = iy * self.grid.nx;
            for ix in 0..self.grid.nx {
                self.values[row + ix] *= f(self.grid.x(ix), y);
            }
        }
    }

    /// Extract the values on a nested coarse/central target grid.
    ///
    /// The target must share the cell spacing and be aligned with this grid's
    /// sample points (used to restrict a padded computation back to a
    /// reporting window).
    pub fn restrict_to(&self, target: Grid2D) -> Result<Self> {
        let (dx, dy) = (self.grid.dx(), self.grid.dy());
        if (dx - target.dx()).abs() > 1e-12 * dx || (dy - target.dy()).abs() > 1e-12 * dy {
            return Err(SqwError::InvalidParameter(
                "restrict_to: target grid spacing differs from source".into(),
            ));
        }
        let off_x = (self.grid.extent_x - target.extent_x) / dx;
        let off_y = (self.grid.extent_y - target.extent_y) / dy;
        let ox = off_x.round() as i64;
        let oy = off_y.round() as i64;
        if (off_x - ox as f64).abs() > 1e-9
            || (off_y - oy as f64).abs() > 1e-9
            || ox < 0
            || oy < 0
            || ox as usize + target.nx > self.grid.nx
            || oy as usize + target.ny > self.grid.ny
        {
            return Err(SqwError::InvalidParameter(
                "restrict_to: target grid is not nested in source".into(),
            ));
        }
        let (ox, oy) = (ox as usize, oy as usize);
        let mut values = Vec::with_capacity(target.len());
        for iy in 0..target.ny {
            let src = (iy + oy) * self.grid.nx + ox;
            values.extend_from_slice(&self.values[src..src + target.nx]);
        }
        Ok(Self { grid: target, values, zeta: self.zeta, normalized: false })
    }
}
