use super::sum::CompensatedSum;
use super::tail::TailFit;
use super::{EvalOptions, EvalResult, TailKind, TailMode};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy)]
struct Checkpoint<T> {
    n: usize,
    t: T,
    t_prev: T,
    s: T,
}

/// Checkpoint indices `⌊8·2^{j/4}⌋`, four per octave.
struct Grid {
    j: i32,
    last: usize,
}

impl Iterator for Grid {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        loop {
            let g = (8.0 * 2f64.powf(self.j as f64 / 4.0)).floor() as usize;
            self.j += 1;
            if g > self.last {
                self.last = g;
                return Some(g);
            }
        }
    }
}

struct State<'a, T> {
    n: usize,
    t: T,
    t1: T,
    t2: T,
    s: T,
    floor: T,
    hist: &'a [Checkpoint<T>],
}

/// Sums a term stream with the shared stopping rule and tail estimates.
///
/// The rule fires at the first `N ≥ 4` where the last three terms (after the
/// first nonzero one) satisfy `|t_n| ≤ tol·max(|S_n|, 10^{−300})` and
/// `|t_N| ≤ |t_{N−1}|`. Summation then continues until the tail estimate
/// meets `tol·max(1, |value|)` or `max_terms` runs out.
pub fn eval_series<T: Real>(
    terms: impl Iterator<Item = T>,
    opts: &EvalOptions<T>,
) -> EvalResult<T> {
    let tiny = T::min_positive_value().max(T::lit(1e-300));
    let mut acc = CompensatedSum::new();
    let mut hist: Vec<Checkpoint<T>> = Vec::new();
    let mut grid = Grid { j: 0, last: 0 };
    let mut next_grid = grid.next().unwrap_or(usize::MAX);
    let mut weighted = T::zero();
    let (mut t1, mut t2, mut t3) = (T::zero(), T::zero(), T::zero());
    let (mut run, mut seen, mut fired) = (0usize, false, false);
    let mut count = 0usize;

    for (n, t) in terms.take(opts.max_terms.max(1)).enumerate() {
        count = n + 1;
        acc.add(t);
        let s = acc.value();
        weighted = weighted + t.abs() * T::from_usize_(n + 1);
        let at_grid = n == next_grid;
        if at_grid {
            hist.push(Checkpoint {
                n,
                t,
                t_prev: t1,
                s,
            });
            next_grid = grid.next().unwrap_or(usize::MAX);
        }
        if !fired {
            seen |= !t.is_zero();
            let small = seen && t.abs() <= opts.tol * s.abs().max(tiny);
            run = if small { run + 1 } else { 0 };
            fired = n >= 4 && run >= 3 && t.abs() <= t1.abs();
        }
        if fired {
            let floor = rounding_floor(s, weighted);
            let st = State {
                n,
                t,
                t1,
                t2,
                s,
                floor,
                hist: &hist,
            };
            if let Some(res) = try_finish(&st, at_grid, opts) {
                return res;
            }
        }
        t3 = t2;
        t2 = t1;
        t1 = t;
    }

    let s = acc.value();
    let floor = rounding_floor(s, weighted);
    if count < opts.max_terms {
        // the stream itself ended: a finite series, summed completely
        return EvalResult {
            value: s,
            terms_used: count.max(1),
            error_estimate: floor,
            converged: true,
            tail: TailKind::Terminated,
        };
    }
    let n = count - 1;
    let st = State {
        n,
        t: t1,
        t1: t2,
        t2: t3,
        s,
        floor,
        hist: &hist,
    };
    let (kind, value, est) = estimate(&st, opts, true);
    EvalResult {
        value,
        terms_used: count,
        error_estimate: est,
        converged: false,
        tail: kind,
    }
}

fn rounding_floor<T: Real>(s: T, weighted: T) -> T {
    T::epsilon() * (T::lit(2.0) * s.abs() + weighted)
}

fn try_finish<T: Real>(
    st: &State<T>,
    at_grid: bool,
    opts: &EvalOptions<T>,
) -> Option<EvalResult<T>> {
    let kind = classify(st);
    if kind == TailKind::PowerLaw && opts.tail == TailMode::Extrapolate && !at_grid {
        return None;
    }
    let (kind, value, est) = estimate(st, opts, at_grid);
    if kind == TailKind::Unclassified {
        return None;
    }
    let ok = est <= opts.tol * value.abs().max(T::one());
    ok.then_some(EvalResult {
        value,
        terms_used: st.n + 1,
        error_estimate: est,
        converged: true,
        tail: kind,
    })
}

fn raabe<T: Real>(n: usize, t_prev: T, t: T) -> Option<T> {
    if t.is_zero() || t_prev.is_zero() || n < 2 {
        return None;
    }
    Some(T::from_usize_(n - 1) * (t_prev.abs() / t.abs() - T::one()))
}

fn nearest<T: Real>(hist: &[Checkpoint<T>], target: f64) -> Option<&Checkpoint<T>> {
    let lt = target.max(1.0).ln();
    hist.iter().min_by(|a, b| {
        let da = ((a.n as f64).ln() - lt).abs();
        let db = ((b.n as f64).ln() - lt).abs();
        da.total_cmp(&db)
    })
}

fn classify<T: Real>(st: &State<T>) -> TailKind {
    let (t, t1) = (st.t, st.t1);
    if t.is_zero() && t1.is_zero() && st.t2.is_zero() {
        return TailKind::Terminated;
    }
    if t.is_zero() || t1.is_zero() {
        return TailKind::Unclassified;
    }
    if t.signum() != t1.signum() {
        return TailKind::Alternating;
    }
    let r = (t / t1).abs();
    if r < T::lit(0.9) {
        return TailKind::Geometric;
    }
    let Some(rho) = raabe(st.n, t1, t) else {
        return TailKind::Unclassified;
    };
    let rho_half = nearest(st.hist, st.n as f64 / 2.0)
        .filter(|c| c.n < st.n)
        .and_then(|c| raabe(c.n, c.t_prev, c.t));
    if let Some(h) = rho_half {
        if rho > T::lit(1.5) * h + T::one() && r < T::one() {
            // local exponent still growing: faster than any power
            return TailKind::Geometric;
        }
    }
    if rho > T::lit(1.05) {
        TailKind::PowerLaw
    } else {
        TailKind::Unclassified
    }
}

/// Value and error estimate for the current position.
fn estimate<T: Real>(st: &State<T>, opts: &EvalOptions<T>, may_fit: bool) -> (TailKind, T, T) {
    let kind = classify(st);
    let at = st.t.abs();
    let nn = T::from_usize_(st.n.max(1));
    match kind {
        TailKind::Terminated => (kind, st.s, st.floor),
        TailKind::Alternating => (kind, st.s, at + st.floor),
        TailKind::Geometric => {
            let r = (st.t / st.t1).abs().min(T::lit(0.999_999));
            (kind, st.s, at * r / (T::one() - r) + st.floor)
        }
        TailKind::PowerLaw => {
            let rho = raabe(st.n, st.t1, st.t).unwrap_or(T::lit(2.0));
            let raw = at * nn / (rho - T::one()) + st.floor;
            if opts.tail == TailMode::Extrapolate && may_fit {
                if let Some((v, unc)) = extrapolate(st) {
                    return (kind, v, unc + st.floor);
                }
            }
            (kind, st.s, raw)
        }
        TailKind::Unclassified => (kind, st.s, at * nn + st.floor),
    }
}

/// Extrapolated value at the current point together with its disagreement
/// with the extrapolation from about half as many terms.
fn extrapolate<T: Real>(st: &State<T>) -> Option<(T, T)> {
    let here = Checkpoint {
        n: st.n,
        t: st.t,
        t_prev: st.t1,
        s: st.s,
    };
    let v_here = extrapolated_at(&here, st.hist)?;
    let half = nearest(st.hist, st.n as f64 / 2.0).filter(|c| 3 * c.n < 2 * st.n)?;
    let v_half = extrapolated_at(half, st.hist)?;
    Some((v_here, (v_here - v_half).abs()))
}

fn extrapolated_at<T: Real>(p: &Checkpoint<T>, hist: &[Checkpoint<T>]) -> Option<T> {
    let q2 = nearest(hist, p.n as f64 / 2.0)?;
    let q4 = nearest(hist, p.n as f64 / 4.0)?;
    let q8 = nearest(hist, p.n as f64 / 8.0)?;
    let q16 = nearest(hist, p.n as f64 / 16.0)?;
    if !(q16.n < q8.n && q8.n < q4.n && q4.n < q2.n && q2.n < p.n) || q16.n < 8 {
        return None;
    }
    if [q16.t, q8.t, q4.t, q2.t]
        .iter()
        .any(|t| t.signum() != p.t.signum())
    {
        return None;
    }
    let fit = TailFit::through([
        (q16.n, q16.t),
        (q8.n, q8.t),
        (q4.n, q4.t),
        (q2.n, q2.t),
        (p.n, p.t),
    ])?;
    let tail = fit.tail_after(p.n)?;
    Some(p.s + p.t.signum() * tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(tol: f64, max: usize) -> EvalOptions<f64> {
        EvalOptions::new(tol, max)
    }

    #[test]
    fn grid_is_strictly_increasing() {
        let g: Vec<usize> = Grid { j: 0, last: 0 }.take(12).collect();
        assert_eq!(g, vec![8, 9, 11, 13, 16, 19, 22, 26, 32, 38, 45, 53]);
    }

    #[test]
    fn geometric_series() {
        let r = eval_series((0..).map(|n| 0.5f64.powi(n)), &opts(1e-12, 1000));
        assert!(r.converged);
        assert_eq!(r.tail, TailKind::Geometric);
        assert!((r.value - 2.0).abs() <= r.error_estimate);
        assert!(r.error_estimate <= 1e-12 * 2.0);
    }

    #[test]
    fn inverse_squares_extrapolate() {
        let terms = (0..).map(|n: usize| 1.0 / ((n + 1) as f64).powi(2));
        let r = eval_series(terms, &opts(1e-10, 200_000));
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!(r.converged, "{r:?}");
        assert!((r.value - z2).abs() < 1e-10, "{}", r.value - z2);
        assert!((r.value - z2).abs() <= 10.0 * r.error_estimate);
    }

    #[test]
    fn raw_mode_reports_partial_sum() {
        let terms = (0..).map(|n: usize| 1.0 / ((n + 1) as f64).powi(2));
        let r = eval_series(terms, &opts(1e-10, 10_000).raw());
        assert!(!r.converged);
        assert_eq!(r.terms_used, 10_000);
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((z2 - r.value - 1e-4).abs() < 1e-7);
        assert!(r.error_estimate >= z2 - r.value);
    }

    #[test]
    fn leading_zeros_do_not_stop_early() {
        let terms = (0..).map(|n: usize| if n < 6 { 0.0 } else { 0.5f64.powi(n as i32) });
        let r = eval_series(terms, &opts(1e-12, 1000));
        assert!(r.converged);
        assert!((r.value - 0.5f64.powi(5)).abs() <= r.error_estimate);
    }

    #[test]
    fn finite_stream_is_exact() {
        let r = eval_series([1.0, 2.0, 3.0].into_iter(), &opts(1e-10, 100));
        assert_eq!(r.value, 6.0);
        assert!(r.converged);
        assert_eq!(r.terms_used, 3);
    }

    #[test]
    fn trailing_zeros_terminate() {
        let terms = (0..).map(|n: usize| if n == 0 { 0.5 } else { 0.0 });
        let r = eval_series(terms, &opts(1e-10, 100));
        assert!(r.converged);
        assert_eq!(r.value, 0.5);
        assert_eq!(r.tail, TailKind::Terminated);
        assert_eq!(r.terms_used, 5);
    }

    #[test]
    fn alternating_series() {
        let terms = (0..).map(|n: usize| (-0.9f64).powi(n as i32) / (n + 1) as f64);
        let r = eval_series(terms, &opts(1e-12, 10_000));
        let exact = (1.9f64).ln() / 0.9;
        assert!(r.converged);
        assert!((r.value - exact).abs() <= r.error_estimate);
    }

    #[test]
    fn log_modulated_tail() {
        // ∑ ln n / n² = −ζ′(2)
        let terms = (0..).map(|n: usize| {
            let m = (n + 1) as f64;
            m.ln() / (m * m)
        });
        let r = eval_series(terms, &opts(1e-10, 400_000));
        let exact = 0.937_548_254_315_843_8;
        assert!((r.value - exact).abs() < 1e-9, "{}", r.value - exact);
        assert!((r.value - exact).abs() <= 10.0 * r.error_estimate);
    }
}
