//! Densities, probability currents, streamline tracing, moments, orbital
//! angular momentum and Gouy-phase extraction.
//!
//! Currents and momenta are reported in reduced units: `j_perp` is
//! `Im(psi* grad psi)` on the waist-scaled grid and the longitudinal proxy is
//! `|psi|^2` (the physical current carries an extra `p0/m` along z and
//! `hbar/(m w0)` transversely, which cancel in every ratio used here). The
//! local transverse velocity of the flow is `dx/dzeta = Im(grad psi / psi)/2`.
