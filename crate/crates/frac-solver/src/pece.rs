use crate::{gamma, FractionalOrder, GridSpec, SolverError, Trajectory, VectorField};

/// Predictor weight `b_{j,n+1} = (h^α/α)·((n+1−j)^α − (n−j)^α)` of the
/// fractional rectangle rule, for `0 ≤ j ≤ n`.
pub fn predictor_weight(
    alpha: FractionalOrder,
    h: f64,
    n: usize,
    j: usize,
) -> Result<f64, SolverError> {
    if j > n {
        return Err(SolverError::WeightIndex { j, max: n });
    }
    let a = alpha.value();
    let k = (n + 1 - j) as f64;
    Ok(h.powf(a) / a * (k.powf(a) - (k - 1.0).powf(a)))
}

/// Corrector weight `a_{j,n+1}` of the fractional trapezoid rule, for
/// `0 ≤ j ≤ n+1`:
///
/// - `a_{0,n+1}   = (h^α/(α(α+1)))·(n^{α+1} − (n−α)(n+1)^α)`
/// - `a_{j,n+1}   = (h^α/(α(α+1)))·((n−j+2)^{α+1} + (n−j)^{α+1} − 2(n−j+1)^{α+1})`
/// - `a_{n+1,n+1} = h^α/(α(α+1))`
pub fn corrector_weight(
    alpha: FractionalOrder,
    h: f64,
    n: usize,
    j: usize,
) -> Result<f64, SolverError> {
    if j > n + 1 {
        return Err(SolverError::WeightIndex { j, max: n + 1 });
    }
    let a = alpha.value();
    let scale = h.powf(a) / (a * (a + 1.0));
    let w = if j == 0 {
        let nf = n as f64;
        nf.powf(a + 1.0) - (nf - a) * (nf + 1.0).powf(a)
    } else if j == n + 1 {
        1.0
    } else {
        let m = (n - j) as f64;
        (m + 2.0).powf(a + 1.0) + m.powf(a + 1.0) - 2.0 * (m + 1.0).powf(a + 1.0)
    };
    Ok(scale * w)
}

/// Solver options beyond the classic single-correction PECE.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeceConfig {
    /// Corrector passes per step, 1..=10.
    pub corrector_iterations: u32,
    /// Floor every state component at 0 after each corrector pass.
    /// Off by default: overshoot is reported, not hidden.
    pub clamp_nonnegative: bool,
}

impl Default for PeceConfig {
    fn default() -> Self {
        PeceConfig {
            corrector_iterations: 1,
            clamp_nonnegative: false,
        }
    }
}

/// Integrate `D^α y = f(t, y)`, `y(0) = y0`, over `grid` with the
/// predict-evaluate-correct-evaluate scheme.
///
/// Step `n+1` first forms the predictor
/// `y^P = y0 + (1/Γ(α)) Σ_{j≤n} b_{j,n+1} f(t_j, y_j)`, then applies
/// `corrector_iterations` corrector passes
/// `y_{n+1} = y0 + (1/Γ(α)) [Σ_{j≤n} a_{j,n+1} f(t_j, y_j) + a_{n+1,n+1} f(t_{n+1}, ·)]`,
/// feeding each pass the latest estimate. The history sum runs over every
/// prior step (full memory, no truncation), with `f(t_j, y_j)` cached once
/// per accepted step.
pub fn pece_solve<F: VectorField>(
    field: &F,
    alpha: FractionalOrder,
    y0: &[f64],
    grid: GridSpec,
    corrector_iterations: u32,
) -> Result<Trajectory, SolverError> {
    pece_solve_with(
        field,
        alpha,
        y0,
        grid,
        PeceConfig {
            corrector_iterations,
            ..PeceConfig::default()
        },
    )
}

/// [`pece_solve`] with explicit [`PeceConfig`].
pub fn pece_solve_with<F: VectorField>(
    field: &F,
    alpha: FractionalOrder,
    y0: &[f64],
    grid: GridSpec,
    config: PeceConfig,
) -> Result<Trajectory, SolverError> {
    let dim = field.dim();
    if y0.len() != dim {
        return Err(SolverError::DimensionMismatch {
            expected: dim,
            actual: y0.len(),
        });
    }
    if let Some(index) = y0.iter().position(|v| !v.is_finite()) {
        return Err(SolverError::NonFiniteInitialState { index });
    }
    if !(1..=10).contains(&config.corrector_iterations) {
        return Err(SolverError::InvalidCorrectorIterations {
            given: config.corrector_iterations,
        });
    }

    let a = alpha.value();
    let h = grid.step();
    let n_steps = grid.n_steps();
    let gamma_a = gamma(a)?;
    let pred_scale = h.powf(a) / a / gamma_a;
    let corr_scale = h.powf(a) / (a * (a + 1.0)) / gamma_a;

    // Power tables shared by all steps; the per-step weights below are the
    // same float operations as predictor_weight / corrector_weight. The
    // corr_w fill reads up to index n_steps + 1.
    let mut pow_a = vec![0.0; n_steps + 2];
    let mut pow_a1 = vec![0.0; n_steps + 2];
    for (k, (pa, pa1)) in pow_a.iter_mut().zip(pow_a1.iter_mut()).enumerate() {
        let kf = k as f64;
        *pa = kf.powf(a);
        *pa1 = kf.powf(a + 1.0);
    }
    // pred_w[k] = b_{j,n+1}/Gamma(alpha) with k = n+1-j, k >= 1.
    let mut pred_w = vec![0.0; n_steps + 1];
    for k in 1..=n_steps {
        pred_w[k] = pred_scale * (pow_a[k] - pow_a[k - 1]);
    }
    // corr_w[m] = a_{j,n+1}/Gamma(alpha) for interior j, with m = n-j.
    let mut corr_w = vec![0.0; n_steps];
    for (m, w) in corr_w.iter_mut().enumerate() {
        *w = corr_scale * (pow_a1[m + 2] + pow_a1[m] - 2.0 * pow_a1[m + 1]);
    }

    let mut times = Vec::with_capacity(n_steps + 1);
    let mut states = Vec::with_capacity((n_steps + 1) * dim);
    times.push(0.0);
    states.extend_from_slice(y0);

    // Cached f(t_j, y_j) at accepted states, row-major like `states`.
    let mut f_hist = vec![0.0; (n_steps + 1) * dim];
    field.eval(0.0, y0, &mut f_hist[..dim]);

    let mut acc_pred = vec![0.0; dim];
    let mut acc_corr = vec![0.0; dim];
    let mut y_next = vec![0.0; dim];
    let mut f_new = vec![0.0; dim];

    for n in 0..n_steps {
        let t_next = grid.time(n + 1);

        // One pass over the history accumulates both quadratures.
        // a_{0,n+1} depends on n itself, so j = 0 is handled separately.
        let a0 = {
            let nf = n as f64;
            corr_scale * (pow_a1[n] - (nf - a) * pow_a[n + 1])
        };
        for c in 0..dim {
            acc_pred[c] = pred_w[n + 1] * f_hist[c];
            acc_corr[c] = a0 * f_hist[c];
        }
        match dim {
            2 => convolve::<2>(&mut acc_pred, &mut acc_corr, &pred_w, &corr_w, &f_hist, n),
            3 => convolve::<3>(&mut acc_pred, &mut acc_corr, &pred_w, &corr_w, &f_hist, n),
            _ => convolve_dyn(&mut acc_pred, &mut acc_corr, &pred_w, &corr_w, &f_hist, n, dim),
        }

        // Predict, then evaluate the field there.
        for c in 0..dim {
            y_next[c] = y0[c] + acc_pred[c];
        }
        field.eval(t_next, &y_next, &mut f_new);

        // Correct, re-evaluating at the latest estimate between passes.
        for pass in 0..config.corrector_iterations {
            for c in 0..dim {
                y_next[c] = y0[c] + acc_corr[c] + corr_scale * f_new[c];
            }
            if config.clamp_nonnegative {
                for v in y_next.iter_mut() {
                    if *v < 0.0 {
                        *v = 0.0;
                    }
                }
            }
            if y_next.iter().any(|v| !v.is_finite()) {
                return Err(SolverError::NonFiniteState { step: n + 1 });
            }
            if pass + 1 < config.corrector_iterations {
                field.eval(t_next, &y_next, &mut f_new);
            }
        }

        // Final evaluate: the cached value must match the accepted state.
        let row = (n + 1) * dim;
        field.eval(t_next, &y_next, &mut f_hist[row..row + dim]);
        times.push(t_next);
        states.extend_from_slice(&y_next);
    }

    Ok(Trajectory::new(times, states, dim, alpha, grid))
}

// Interior history sum for j = 1..=n with a compile-time dimension; the
// O(N^2) total cost makes this the hot loop of every long solve.
fn convolve<const D: usize>(
    acc_pred: &mut [f64],
    acc_corr: &mut [f64],
    pred_w: &[f64],
    corr_w: &[f64],
    f_hist: &[f64],
    n: usize,
) {
    let mut ap = [0.0; D];
    let mut ac = [0.0; D];
    for j in 1..=n {
        let wp = pred_w[n + 1 - j];
        let wc = corr_w[n - j];
        let row = &f_hist[j * D..j * D + D];
        for c in 0..D {
            ap[c] += wp * row[c];
            ac[c] += wc * row[c];
        }
    }
    for c in 0..D {
        acc_pred[c] += ap[c];
        acc_corr[c] += ac[c];
    }
}

fn convolve_dyn(
    acc_pred: &mut [f64],
    acc_corr: &mut [f64],
    pred_w: &[f64],
    corr_w: &[f64],
    f_hist: &[f64],
    n: usize,
    dim: usize,
) {
    for j in 1..=n {
        let wp = pred_w[n + 1 - j];
        let wc = corr_w[n - j];
        let row = &f_hist[j * dim..(j + 1) * dim];
        for c in 0..dim {
            acc_pred[c] += wp * row[c];
            acc_corr[c] += wc * row[c];
        }
    }
}
