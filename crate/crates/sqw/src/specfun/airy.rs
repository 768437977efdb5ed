//! Airy function of the first kind and its derivatives.
//!
//! Three evaluation regimes, chosen so the branches agree on their overlaps:
//!
//! * `|x| <= 2.75` — Maclaurin series of the defining equation `y'' = x y`;
//! * `2.75 < |x| <= 10.25` — Taylor recentering about fixed anchor points,
//!   with the Taylor coefficients generated by the same recurrence from
//!   high-precision anchor values of `(Ai, Ai')`. This sidesteps the heavy
//!   cancellation the origin series suffers at moderate positive arguments;
//! * `|x| > 10.25` — Poincare asymptotic expansions, with the oscillatory
//!   (Stokes) form on the negative axis, truncated at the smallest term.
//!
//! `Bi` grows where `Ai` decays and is not provided; nothing in the crate
//! needs it.

use std::f64::consts::PI;

/// Ai(0) = 3^(-2/3) / Gamma(2/3).
pub const AI_ZERO: f64 = 0.355_028_053_887_817_239_260_1;
/// Ai'(0) = -3^(-1/3) / Gamma(1/3).
pub const AIP_ZERO: f64 = -0.258_819_403_792_806_798_405_2;

// Anchor values (x0, Ai(x0), Ai'(x0)) for the recentered Taylor branch,
// evaluated in extended precision from the defining ODE.
const ANCHORS: [(f64, f64, f64); 10] = [
    (3.5, 2.584_098_786_989_634_963_277e-3, -5.004_413_967_952_582_832_03e-3),
    (5.0, 1.083_444_281_360_744_173_499e-4, -2.474_138_908_684_624_760_002e-4),
    (6.5, 2.795_882_343_204_913_585_46e-6, -7.231_931_466_601_792_559_814e-6),
    (8.0, 4.692_207_616_099_231_625_649e-8, -1.341_439_297_906_786_574_291e-7),
    (9.5, 5.330_263_704_617_491_626_585e-10, -1.656_639_459_374_066_626_259e-9),
    (-3.5, -0.375_533_823_140_431_911_934_4, -0.343_443_433_454_048_146_287_9),
    (-5.0, 0.350_761_009_024_114_319_788, 0.327_192_818_554_443_136_794_9),
    (-6.5, -0.238_020_301_997_115_803_594_4, -0.674_952_492_513_202_172_998_9),
    (-8.0, -0.052_705_050_356_386_202_622_08, 0.935_560_938_198_306_551_025_5),
    (-9.5, 0.319_103_247_719_128_201_375_7, -0.108_095_318_811_871_238_996_3),
];

/// Taylor step of the Airy equation about `x0`: given `(Ai, Ai')` there,
/// returns `(Ai, Ai')` at `x0 + h` via `a_{n+2} = (x0 a_n + a_{n-1}) / ((n+1)(n+2))`.
fn ode_taylor(a0: f64, a1: f64, x0: f64, h: f64) -> (f64, f64) {
    let mut value = a0 + a1 * h;
    let mut deriv = a1;
    // a[n-1], a[n], a[n+1] rolling window; a_2 = x0 a0 / 2
    let mut prev = a0; // a_0
    let mut cur = a1; // a_1
    let mut next = x0 * a0 / 2.0; // a_2
    let mut h_pow = h; // h^{n+1} entering iteration n = 1
    value += next * h_pow * h;
    deriv += next * 2.0 * h_pow;
    let scale = a0.abs().max(a1.abs()).max(1e-300);
    // the coefficient chain contains exact zeros (a_2 = a_5 = ... = 0 at
    // x0 = 0), so require several consecutive tiny terms before stopping
    let mut small_run = 0;
    for n in 1..250 {
        // a_{n+2} from a_n (cur at this point is a_{n}, prev a_{n-1})
        let a_np2 = (x0 * cur + prev) / (((n + 1) * (n + 2)) as f64);
        prev = cur;
        cur = next;
        next = a_np2;
        h_pow *= h; // h^{n+1}
        value += next * h_pow * h;
        deriv += next * ((n + 2) as f64) * h_pow;
        if (next * h_pow * h).abs() < 1e-18 * scale {
            small_run += 1;
            if small_run >= 4 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    (value, deriv)
}

/// Asymptotic coefficient pair (u_k, v_k) iterator state.
struct AsymCoeffs {
    k: u32,
    u: f64,
}

impl AsymCoeffs {
    fn new() -> Self {
        Self { k: 0, u: 1.0 }
    }
    /// Advance to the next k and return (u_k, v_k).
    fn next(&mut self) -> (f64, f64) {
        self.k += 1;
        let k = self.k as f64;
        self.u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0));
        let v = self.u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        (self.u, v)
    }
}

/// Exponential-regime expansion, x > 0 large.
fn asymptotic_positive(x: f64) -> (f64, f64) {
    let xi = 2.0 / 3.0 * x.powf(1.5);
    let mut su = 1.0;
    let mut sv = 1.0;
    let mut coeffs = AsymCoeffs::new();
    let mut sign = -1.0;
    let mut pow = 1.0;
    let mut last = f64::INFINITY;
    for _ in 0..60 {
        let (u, v) = coeffs.next();
        pow /= xi;
        let tu = u * pow;
        if tu.abs() >= last {
            break; // optimal truncation
        }
        last = tu.abs();
        su += sign * tu;
        sv += sign * v * pow;
        if tu.abs() < 1e-18 {
            break;
        }
        sign = -sign;
    }
    let pre = (-xi).exp() / (2.0 * PI.sqrt());
    (pre * su / x.powf(0.25), -pre * sv * x.powf(0.25))
}

/// Oscillatory-regime expansion for Ai(-t), t > 0 large.
fn asymptotic_negative(t: f64) -> (f64, f64) {
    let xi = 2.0 / 3.0 * t.powf(1.5);
    let (sin_p, cos_p) = (xi - PI / 4.0).sin_cos();
    // even/odd splits of the u and v series with alternating signs:
    // sum_k (-1)^k c_{2k} xi^{-2k} and sum_k (-1)^k c_{2k+1} xi^{-2k-1}
    let mut pu = 1.0;
    let mut qu = 0.0;
    let mut pv = 1.0;
    let mut qv = 0.0;
    let mut coeffs = AsymCoeffs::new();
    let mut pow = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..60 {
        let (u, v) = coeffs.next();
        pow /= xi;
        let tu = u * pow;
        if tu.abs() >= last {
            break;
        }
        last = tu.abs();
        // k odd contributes to the odd sums, k even to the even sums;
        // the (-1)^k alternation acts per pair
        let phase = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 1 {
            qu += phase * tu;
            qv += phase * v * pow;
        } else {
            pu += phase * tu;
            pv += phase * v * pow;
        }
        if tu.abs() < 1e-18 {
            break;
        }
    }
    let root = t.powf(0.25);
    let ai = (cos_p * pu + sin_p * qu) / (PI.sqrt() * root);
    let aip = root * (sin_p * pv - cos_p * qv) / PI.sqrt();
    (ai, aip)
}

/// `ln Ai(x)` for large positive `x`, where `Ai` itself underflows.
/// Valid on the asymptotic branch only (`x > 10`).
pub(crate) fn airy_ai_ln_positive(x: f64) -> f64 {
    debug_assert!(x > 10.0);
    let xi = 2.0 / 3.0 * x.powf(1.5);
    let mut su = 1.0;
    let mut coeffs = AsymCoeffs::new();
    let mut sign = -1.0;
    let mut pow = 1.0;
    for _ in 0..40 {
        let (u, _) = coeffs.next();
        pow /= xi;
        let t = u * pow;
        su += sign * t;
        if t.abs() < 1e-18 {
            break;
        }
        sign = -sign;
    }
    -xi + su.ln() - (2.0 * PI.sqrt()).ln() - 0.25 * x.ln()
}

/// Ai and Ai' evaluated together.
pub fn airy_ai_pair(x: f64) -> (f64, f64) {
    let ax = x.abs();
    if ax <= 2.75 {
        ode_taylor(AI_ZERO, AIP_ZERO, 0.0, x)
    } else if ax <= 10.25 {
        let mut best = ANCHORS[0];
        for anchor in ANCHORS.iter() {
            if (x - anchor.0).abs() < (x - best.0).abs() {
                best = *anchor;
            }
        }
        let (x0, a0, a1) = best;
        ode_taylor(a0, a1, x0, x - x0)
    } else if x > 0.0 {
        asymptotic_positive(x)
    } else {
        asymptotic_negative(-x)
    }
}

/// Airy function of the first kind.
pub fn airy_ai(x: f64) -> f64 {
    airy_ai_pair(x).0
}

/// First derivative of the Airy function.
pub fn airy_ai_prime(x: f64) -> f64 {
    airy_ai_pair(x).1
}

/// k-th derivative of Ai, reduced through `Ai'' = x Ai` to
/// `P_k(x) Ai(x) + Q_k(x) Ai'(x)` with polynomial coefficient vectors.
///
/// The reduction is exact, so no high-order numerical differentiation is
/// involved.
pub fn airy_ai_derivative(k: u32, x: f64) -> f64 {
    let (p, q) = derivative_polys(k);
    let (ai, aip) = airy_ai_pair(x);
    poly_eval(&p, x) * ai + poly_eval(&q, x) * aip
}

/// Coefficient vectors (ascending powers) of the reduction polynomials.
fn derivative_polys(k: u32) -> (Vec<f64>, Vec<f64>) {
    let mut p = vec![1.0];
    let mut q = vec![0.0];
    for _ in 0..k {
        // (P, Q) -> (P' + x Q, P + Q')
        let mut new_p = poly_derivative(&p);
        let xq = poly_shift_up(&q);
        poly_add_into(&mut new_p, &xq);
        let mut new_q = poly_derivative(&q);
        poly_add_into(&mut new_q, &p);
        p = new_p;
        q = new_q;
    }
    (p, q)
}

fn poly_eval(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

fn poly_derivative(c: &[f64]) -> Vec<f64> {
    if c.len() <= 1 {
        return vec![0.0];
    }
    c.iter().enumerate().skip(1).map(|(i, &ck)| ck * i as f64).collect()
}

fn poly_shift_up(c: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(c.len() + 1);
    out.push(0.0);
    out.extend_from_slice(c);
    out
}

fn poly_add_into(a: &mut Vec<f64>, b: &[f64]) {
    if b.len() > a.len() {
        a.resize(b.len(), 0.0);
    }
    for (ai, &bi) in a.iter_mut().zip(b) {
        *ai += bi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Maclaurin oracle: the classical two-series form
    /// `Ai(x) = c1 f(x) - c2 g(x)` summed term by term. Useful up to
    /// moderate |x| where cancellation is tolerable.
    fn series_oracle(x: f64) -> f64 {
        let x3 = x * x * x;
        let mut f_term = 1.0;
        let mut f_sum = f_term;
        let mut g_term = x;
        let mut g_sum = g_term;
        for k in 0..60 {
            let kf = k as f64;
            f_term *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
            g_term *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
            f_sum += f_term;
            g_sum += g_term;
        }
        AI_ZERO * f_sum + AIP_ZERO * g_sum
    }

    #[test]
    fn ai_at_origin_matches_series_oracle() {
        assert!((airy_ai(0.0) - 0.355_028_053_887_817_2).abs() < 1e-15);
        assert!((airy_ai(0.0) - series_oracle(0.0)).abs() < 1e-15);
        for &x in &[-2.0, -1.0, -0.3, 0.4, 1.1, 2.2] {
            assert!(
                (airy_ai(x) - series_oracle(x)).abs() < 1e-13,
                "series oracle mismatch at {x}"
            );
        }
    }

    #[test]
    fn ai_decays_monotonically_for_positive_x() {
        let mut prev = airy_ai(3.0);
        assert!(prev > 0.0);
        let mut x = 3.0;
        while x < 12.0 {
            x += 0.25;
            let v = airy_ai(x);
            assert!(v > 0.0 && v < prev, "Ai must decay monotonically at x = {x}");
            prev = v;
        }
    }

    #[test]
    fn first_zero_via_bisection_on_series_oracle() {
        let (mut lo, mut hi) = (-2.5, -2.0);
        assert!(series_oracle(lo) * series_oracle(hi) < 0.0);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if series_oracle(lo) * series_oracle(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let zero = 0.5 * (lo + hi);
        assert!((zero - (-2.338_107_410_459_767)).abs() < 1e-10);
        assert!(airy_ai(zero).abs() < 1e-12);
    }

    // Reference samples evaluated in extended precision, spanning all three
    // evaluation branches.
    const REFERENCE: [(f64, f64, f64); 34] = [
        (-30.0, -0.087_968_188_456_842_162_8, 1.228_620_602_637_485_13),
        (-25.0, 0.163_526_578_830_429_469, 0.962_378_851_387_697_41),
        (-20.0, -0.176_406_127_077_984_69, 0.892_862_856_736_471_238),
        (-15.0, 0.278_217_490_870_828_93, 0.272_374_204_308_642_021),
        (-12.0, -0.066_555_175_054_373_129_5, 1.023_110_453_367_970_73),
        (-10.0, 0.040_241_238_486_443_190_7, 0.996_265_044_132_790_056),
        (-9.0, -0.022_133_721_547_341_403_7, -0.975_663_980_926_331_595),
        (-8.2, -0.221_599_454_803_603_913, 0.706_598_697_862_806_594),
        (-7.0, 0.184_280_835_250_505_637, -0.771_008_168_410_126_548),
        (-6.0, -0.329_145_173_629_823_105, 0.345_935_487_281_342_895),
        (-5.5, 0.017_781_541_276_574_975_6, 0.864_197_217_771_398_391),
        (-4.0, -0.070_265_532_949_289_515_1, -0.790_628_575_368_581_38),
        (-2.338_107_410_459_767, 2.743_319_340_666_283e-17, 0.701_210_822_720_691_362),
        (-2.0, 0.227_407_428_201_685_576, 0.618_259_020_741_691_041),
        (-1.0, 0.535_560_883_292_352_119, -0.010_160_567_116_645_209_4),
        (-0.5, 0.475_728_091_610_539_589, -0.204_081_670_339_547_386),
        (0.0, 0.355_028_053_887_817_239, -0.258_819_403_792_806_798),
        (0.5, 0.231_693_606_480_833_49, -0.224_910_532_664_683_893),
        (1.0, 0.135_292_416_312_881_416, -0.159_147_441_296_793_213),
        (2.0, 0.034_924_130_423_274_379_1, -0.053_090_384_433_653_631_7),
        (2.8, 0.009_410_506_914_923_965_9, -0.016_499_780_994_915_144_4),
        (3.6, 0.002_126_478_682_638_170_47, -0.004_171_131_744_419_380_4),
        (4.5, 0.000_330_250_323_514_308_984, -0.000_717_866_567_557_508_889),
        (5.5, 3.368_531_190_859_981_44e-5, -8.046_339_130_556_514_34e-5),
        (6.4, 3.617_762_318_851_799_69e-6, -9.288_603_444_862_974_68e-6),
        (7.2, 4.367_166_359_142_260_18e-7, -1.186_541_071_717_639_09e-6),
        (8.5, 1.099_700_975_519_550_65e-8, -3.237_725_440_447_602_26e-8),
        (9.8, 2.083_102_822_430_867_6e-10, -6.573_250_419_471_654_98e-10),
        (10.5, 2.202_274_519_283_401_64e-11, -7.187_696_781_451_567_09e-11),
        (12.0, 1.393_184_688_875_360_84e-13, -4.854_736_554_985_308_46e-13),
        (15.0, 2.164_962_520_737_992_3e-18, -8.420_567_954_017_772_77e-18),
        (20.0, 1.691_672_868_670_540_31e-27, -7.586_391_625_748_354_96e-27),
        (25.0, 8.116_026_824_691_386_68e-38, -4.066_089_337_243_281_01e-37),
        (30.0, 3.208_217_591_550_495_57e-49, -1.759_876_581_432_725_98e-48),
    ];

    #[test]
    fn accuracy_against_reference_table() {
        for &(x, ai_ref, aip_ref) in REFERENCE.iter() {
            let (ai, aip) = airy_ai_pair(x);
            let abs_err = (ai - ai_ref).abs();
            if x.abs() <= 10.0 {
                assert!(abs_err < 1e-12, "Ai({x}): abs err {abs_err:.3e}");
            }
            // relative accuracy away from zeros
            if ai_ref.abs() > 1e-16 {
                assert!(
                    abs_err / ai_ref.abs() < 1e-10,
                    "Ai({x}): rel err {:.3e}",
                    abs_err / ai_ref.abs()
                );
            }
            if aip_ref.abs() > 1e-16 {
                assert!(
                    (aip - aip_ref).abs() / aip_ref.abs() < 1e-10,
                    "Ai'({x}): rel err {:.3e}",
                    (aip - aip_ref).abs() / aip_ref.abs()
                );
            }
        }
    }

    #[test]
    fn branch_overlap_agreement() {
        // adjacent evaluation branches agree at the same point to 1e-10
        for &s in &[1.0, -1.0] {
            // origin series vs anchored Taylor at the |x| = 2.75 seam
            let x = s * 2.75;
            let (v1, d1) = ode_taylor(AI_ZERO, AIP_ZERO, 0.0, x);
            let anchor = ANCHORS.iter().find(|a| a.0 == s * 3.5).unwrap();
            let (v2, d2) = ode_taylor(anchor.1, anchor.2, anchor.0, x - anchor.0);
            assert!((v1 - v2).abs() / v1.abs() < 1e-10, "Ai seam at {x}: {v1:e} vs {v2:e}");
            assert!((d1 - d2).abs() / d1.abs() < 1e-10, "Ai' seam at {x}");

            // anchored Taylor vs asymptotic expansion at the |x| = 10.25 seam
            let x = s * 10.25;
            let anchor = ANCHORS.iter().find(|a| a.0 == s * 9.5).unwrap();
            let (v1, d1) = ode_taylor(anchor.1, anchor.2, anchor.0, x - anchor.0);
            let (v2, d2) =
                if s > 0.0 { asymptotic_positive(x) } else { asymptotic_negative(-x) };
            assert!((v1 - v2).abs() / v1.abs() < 1e-10, "Ai seam at {x}: {v1:e} vs {v2:e}");
            assert!((d1 - d2).abs() / d1.abs() < 1e-10, "Ai' seam at {x}");
        }
    }

    #[test]
    fn ode_residual_by_finite_differences() {
        // Ai''(x) - x Ai(x) = 0 within 1e-8 on a fine grid, using a 5-point
        // second-difference stencil of the implementation itself
        let h = 0.005;
        let mut x = -10.0;
        while x <= 5.0 {
            let second = (-airy_ai(x - 2.0 * h) + 16.0 * airy_ai(x - h) - 30.0 * airy_ai(x)
                + 16.0 * airy_ai(x + h)
                - airy_ai(x + 2.0 * h))
                / (12.0 * h * h);
            let residual = second - x * airy_ai(x);
            assert!(residual.abs() < 1e-8, "ODE residual {residual:.2e} at x = {x}");
            x += 0.37;
        }
    }

    /// Fornberg finite-difference weights for derivative `m` at 0 on nodes `xs`.
    fn fornberg_weights(xs: &[f64], m: usize) -> Vec<f64> {
        let n = xs.len();
        let mut c = vec![vec![0.0; m + 1]; n];
        c[0][0] = 1.0;
        let mut c1 = 1.0;
        let mut c4 = xs[0];
        for i in 1..n {
            let mut c2 = 1.0;
            let c5 = c4;
            c4 = xs[i];
            // row i is seeded from row i-1 as it stood before this sweep
            let prev_row = c[i - 1].clone();
            for j in 0..i {
                let c3 = xs[i] - xs[j];
                c2 *= c3;
                for k in (0..=m.min(i)).rev() {
                    let below = if k > 0 { c[j][k - 1] } else { 0.0 };
                    c[j][k] = (c4 * c[j][k] - k as f64 * below) / c3;
                }
            }
            for k in (0..=m.min(i)).rev() {
                let below = if k > 0 { prev_row[k - 1] } else { 0.0 };
                c[i][k] = c1 / c2 * (k as f64 * below - c5 * prev_row[k]);
            }
            c1 = c2;
        }
        c.iter().map(|row| row[m]).collect()
    }

    #[test]
    fn high_order_derivatives_match_finite_differences() {
        // k-th derivatives from the polynomial reduction vs Fornberg stencils
        let h = 0.1;
        let nodes: Vec<f64> = (-7..=7).map(|i| i as f64 * h).collect();
        for k in 1..=6 {
            let w = fornberg_weights(&nodes, k);
            for &x in &[-2.0, -1.0, -0.5, 0.5] {
                let fd: f64 =
                    nodes.iter().zip(&w).map(|(dx, &wi)| wi * airy_ai(x + dx)).sum();
                let exact = airy_ai_derivative(k as u32, x);
                assert!(
                    (fd - exact).abs() < 1e-6,
                    "d^{k} Ai at {x}: fd {fd:.9e} vs reduction {exact:.9e}"
                );
            }
        }
    }

    #[test]
    fn derivative_polys_low_orders() {
        // Ai'' = x Ai, Ai''' = Ai + x Ai'
        let x = 1.7;
        let (ai, aip) = airy_ai_pair(x);
        assert!((airy_ai_derivative(0, x) - ai).abs() < 1e-15);
        assert!((airy_ai_derivative(1, x) - aip).abs() < 1e-15);
        assert!((airy_ai_derivative(2, x) - x * ai).abs() < 1e-14);
        assert!((airy_ai_derivative(3, x) - (ai + x * aip)).abs() < 1e-14);
    }
}
