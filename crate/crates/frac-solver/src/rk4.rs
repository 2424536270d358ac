use crate::{FractionalOrder, GridSpec, SolverError, Trajectory, VectorField};

/// Classical fourth-order Runge-Kutta on the same uniform grid as
/// [`pece_solve`](crate::pece_solve).
///
/// Integer-order only; used as the α = 1 consistency oracle for the
/// fractional scheme.
pub fn rk4_solve<F: VectorField>(
    field: &F,
    y0: &[f64],
    grid: GridSpec,
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

    let h = grid.step();
    let n_steps = grid.n_steps();
    let mut times = Vec::with_capacity(n_steps + 1);
    let mut states = Vec::with_capacity((n_steps + 1) * dim);
    times.push(0.0);
    states.extend_from_slice(y0);

    let mut y = y0.to_vec();
    let mut k1 = vec![0.0; dim];
    let mut k2 = vec![0.0; dim];
    let mut k3 = vec![0.0; dim];
    let mut k4 = vec![0.0; dim];
    let mut stage = vec![0.0; dim];

    for n in 0..n_steps {
        let t = grid.time(n);
        field.eval(t, &y, &mut k1);
        for c in 0..dim {
            stage[c] = y[c] + 0.5 * h * k1[c];
        }
        field.eval(t + 0.5 * h, &stage, &mut k2);
        for c in 0..dim {
            stage[c] = y[c] + 0.5 * h * k2[c];
        }
        field.eval(t + 0.5 * h, &stage, &mut k3);
        for c in 0..dim {
            stage[c] = y[c] + h * k3[c];
        }
        field.eval(t + h, &stage, &mut k4);
        for c in 0..dim {
            y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(SolverError::NonFiniteState { step: n + 1 });
        }
        times.push(grid.time(n + 1));
        states.extend_from_slice(&y);
    }

    Ok(Trajectory::new(
        times,
        states,
        dim,
        FractionalOrder::ONE,
        grid,
    ))
}
