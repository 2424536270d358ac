use crate::SolverError;

/// Uniform time grid: `n_steps = floor(t_end / step)` intervals of width
/// `step` starting at `t = 0`. The horizon is truncated down to an integer
/// multiple of the step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    step: f64,
    t_end: f64,
    n_steps: usize,
}

impl GridSpec {
    pub fn new(step: f64, t_end: f64) -> Result<Self, SolverError> {
        if !(step > 0.0 && step.is_finite() && t_end.is_finite() && t_end >= step) {
            return Err(SolverError::InvalidGrid { step, t_end });
        }
        // The small bias absorbs representation noise in t_end / step
        // (e.g. 2000 / 0.05 evaluating just under 40000).
        let n_steps = (t_end / step + 1e-9).floor() as usize;
        Ok(GridSpec {
            step,
            t_end,
            n_steps,
        })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// Time of grid node `k`, computed as `k * step` (not accumulated).
    pub fn time(&self, k: usize) -> f64 {
        k as f64 * self.step
    }
}
