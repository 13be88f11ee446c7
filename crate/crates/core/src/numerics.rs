//! Small numerical kernel: bracketing root finder, adaptive Simpson quadrature
//! and the error function.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::{FRAC_2_SQRT_PI, PI};

use crate::error::{invalid, Error, Result};

/// Settings for [`adaptive_quadrature`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Target absolute error of the whole integral.
    pub abs_tol: f64,
    /// Maximum number of halvings of the initial interval.
    pub max_depth: u32,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self { abs_tol: 1e-10, max_depth: 50 }
    }
}

impl QuadratureSettings {
    pub fn with_tol(abs_tol: f64) -> Self {
        Self { abs_tol, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(invalid(format!("abs_tol must be > 0, got {}", self.abs_tol)));
        }
        if self.max_depth < 1 {
            return Err(invalid("max_depth must be >= 1"));
        }
        Ok(())
    }
}

/// Plain bisection for a root of `f` on `[lo, hi]`.
///
/// Requires a sign change between the endpoints. Stops once the bracket is no
/// wider than `tol` (or cannot be split further in floating point) and returns
/// its midpoint. An exact zero at an endpoint or midpoint is returned directly.
pub fn bisect_root<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(invalid(format!("tolerance must be > 0, got {tol}")));
    }
    if !(lo < hi) {
        return Err(invalid(format!("empty bracket [{lo}, {hi}]")));
    }
    let eval = |f: &mut F, x: f64| {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite { x })
        }
    };
    let (mut lo, mut hi) = (lo, hi);
    let f_lo = eval(&mut f, lo)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let f_hi = eval(&mut f, hi)?;
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoBracket { lo, hi });
    }
    let lo_negative = f_lo < 0.0;
    while hi - lo > tol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = eval(&mut f, mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + 0.5 * (hi - lo))
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    f_left_mid: f64,
    fm: f64,
    f_right_mid: f64,
    fb: f64,
    depth: u32,
    value: f64,
    error: f64,
}

impl Panel {
    #[allow(clippy::too_many_arguments)]
    fn new(a: f64, b: f64, fa: f64, fl: f64, fm: f64, fr: f64, fb: f64, depth: u32) -> Self {
        let h = b - a;
        let coarse = h / 6.0 * (fa + 4.0 * fm + fb);
        let fine = h / 12.0 * (fa + 4.0 * fl + 2.0 * fm + 4.0 * fr + fb);
        let diff = fine - coarse;
        Self {
            a,
            b,
            fa,
            f_left_mid: fl,
            fm,
            f_right_mid: fr,
            fb,
            depth,
            value: fine + diff / 15.0,
            // the unscaled difference bounds the error of `fine`, which in turn
            // over-covers the extrapolated value
            error: diff.abs(),
        }
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

const INITIAL_PANELS: usize = 16;
const MAX_PANELS: usize = 1 << 20;

/// Globally adaptive Simpson quadrature of `f` over `[a, b]`.
///
/// Each panel compares Simpson's rule on the panel with the composite rule on
/// its two halves; the panel with the largest estimated error is split until
/// the summed estimate drops below `settings.abs_tol`. Integrable square-root
/// endpoint behaviour (classical turning points) is handled by refinement
/// alone. Fails with [`Error::DepthExceeded`] if every remaining offending
/// panel has hit `max_depth`.
pub fn adaptive_quadrature<F>(mut f: F, a: f64, b: f64, settings: QuadratureSettings) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    settings.validate()?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(invalid(format!("quadrature needs finite a < b, got [{a}, {b}]")));
    }
    let mut eval = |x: f64| {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite { x })
        }
    };

    // 4 * INITIAL_PANELS + 1 equally spaced samples seed the panels.
    let n_samples = 4 * INITIAL_PANELS;
    let h = (b - a) / n_samples as f64;
    let mut samples = Vec::with_capacity(n_samples + 1);
    for i in 0..=n_samples {
        let x = if i == n_samples { b } else { a + i as f64 * h };
        samples.push((x, eval(x)?));
    }
    let mut heap = BinaryHeap::with_capacity(4 * INITIAL_PANELS);
    for p in 0..INITIAL_PANELS {
        let s = &samples[4 * p..=4 * p + 4];
        heap.push(Panel::new(s[0].0, s[4].0, s[0].1, s[1].1, s[2].1, s[3].1, s[4].1, 4));
    }

    let mut frozen_value = 0.0;
    let mut frozen_error = 0.0;
    let mut panels = INITIAL_PANELS;
    loop {
        let active_error: f64 = heap.iter().map(|p| p.error).sum();
        let total_error = active_error + frozen_error;
        if total_error <= settings.abs_tol {
            let active_value: f64 = heap.iter().map(|p| p.value).sum();
            return Ok(active_value + frozen_value);
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => {
                return Err(Error::DepthExceeded { estimate: frozen_value, error_bound: frozen_error })
            }
        };
        if worst.depth >= settings.max_depth || panels >= MAX_PANELS {
            frozen_value += worst.value;
            frozen_error += worst.error;
            if panels >= MAX_PANELS {
                let active_value: f64 = heap.iter().map(|p| p.value).sum();
                let active_error: f64 = heap.iter().map(|p| p.error).sum();
                return Err(Error::DepthExceeded {
                    estimate: frozen_value + active_value,
                    error_bound: frozen_error + active_error,
                });
            }
            continue;
        }
        let m = 0.5 * (worst.a + worst.b);
        let lm = 0.5 * (worst.a + m);
        let rm = 0.5 * (m + worst.b);
        let (ql, qr) = (0.5 * (worst.a + lm), 0.5 * (lm + m));
        let (sl, sr) = (0.5 * (m + rm), 0.5 * (rm + worst.b));
        let (f_ql, f_qr, f_sl, f_sr) = (eval(ql)?, eval(qr)?, eval(sl)?, eval(sr)?);
        let d = worst.depth + 1;
        heap.push(Panel::new(worst.a, m, worst.fa, f_ql, worst.f_left_mid, f_qr, worst.fm, d));
        heap.push(Panel::new(m, worst.b, worst.fm, f_sl, worst.f_right_mid, f_sr, worst.fb, d));
        panels += 1;
    }
}

/// Error function, absolute accuracy better than 1e-12 on the real line.
///
/// `|x| <= 2.5` uses the all-positive series
/// `erf x = (2/√π) e^(-x²) Σ 2ⁿ x^(2n+1) / (1·3·…·(2n+1))`;
/// larger arguments use the Laplace continued fraction for `erfc`.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    let value = if ax <= 2.5 {
        erf_series(ax)
    } else {
        1.0 - erfc_continued_fraction(ax)
    };
    value.copysign(x)
}

fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0.0;
    while term > sum * f64::EPSILON * 0.25 {
        n += 1.0;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
    }
    FRAC_2_SQRT_PI * (-x2).exp() * sum
}

fn erfc_continued_fraction(x: f64) -> f64 {
    if x > 27.0 {
        return 0.0;
    }
    // erfc x = e^(-x²)/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + …))))
    let mut t = x;
    for k in (1..=120).rev() {
        t = x + (k as f64 * 0.5) / t;
    }
    (-x * x).exp() / (PI.sqrt() * t)
}
