//! 2D complex FFT behind a small interface, so the propagator does not care
//! which engine does the transforms. Pinned by delta-impulse, plane-wave and
//! Parseval tests.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

pub struct Fft2 {
    nx: usize,
    ny: usize,
    fwd_x: Arc<dyn Fft<f64>>,
    inv_x: Arc<dyn Fft<f64>>,
    fwd_y: Arc<dyn Fft<f64>>,
    inv_y: Arc<dyn Fft<f64>>,
    scratch: Vec<Complex64>,
}

impl Fft2 {
    pub fn new(nx: usize, ny: usize) -> Self {
        let mut planner = FftPlanner::new();
        let fwd_x = planner.plan_fft_forward(nx);
        let inv_x = planner.plan_fft_inverse(nx);
        let fwd_y = planner.plan_fft_forward(ny);
        let inv_y = planner.plan_fft_inverse(ny);
        let scratch_len = fwd_x
            .get_inplace_scratch_len()
            .max(inv_x.get_inplace_scratch_len())
            .max(fwd_y.get_inplace_scratch_len())
            .max(inv_y.get_inplace_scratch_len())
            .max(nx * ny);
        Self { nx, ny, fwd_x, inv_x, fwd_y, inv_y, scratch: vec![Complex64::default(); scratch_len] }
    }

    fn transform_rows(&mut self, data: &mut [Complex64], inverse: bool) {
        let plan = if inverse { &self.inv_x } else { &self.fwd_x };
        for row in data.chunks_exact_mut(self.nx) {
            plan.process_with_scratch(row, &mut self.scratch);
        }
    }

    fn transform_cols(&mut self, data: &mut [Complex64], inverse: bool) {
        // transpose, run rows of length ny, transpose back
        let (nx, ny) = (self.nx, self.ny);
        let mut t = vec![Complex64::default(); nx * ny];
        for iy in 0..ny {
            for ix in 0..nx {
                t[ix * ny + iy] = data[iy * nx + ix];
            }
        }
        let plan = if inverse { &self.inv_y } else { &self.fwd_y };
        for row in t.chunks_exact_mut(ny) {
            plan.process_with_scratch(row, &mut self.scratch);
        }
        for ix in 0..nx {
            for iy in 0..ny {
                data[iy * nx + ix] = t[ix * ny + iy];
            }
        }
    }

    /// In-place forward transform (unnormalized, standard DFT sign).
    pub fn forward(&mut self, data: &mut [Complex64]) {
        debug_assert_eq!(data.len(), self.nx * self.ny);
        self.transform_rows(data, false);
        self.transform_cols(data, false);
    }

    /// In-place inverse transform including the `1/(nx ny)` factor.
    pub fn inverse(&mut self, data: &mut [Complex64]) {
        debug_assert_eq!(data.len(), self.nx * self.ny);
        self.transform_rows(data, true);
        self.transform_cols(data, true);
        let scale = 1.0 / (self.nx * self.ny) as f64;
        for v in data.iter_mut() {
            *v *= scale;
        }
    }
}
