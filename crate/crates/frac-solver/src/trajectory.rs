use crate::{FractionalOrder, GridSpec};

/// Solution samples on a uniform grid: `n_steps + 1` rows of dimension `d`,
/// row 0 being the initial condition exactly as supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<f64>, // row-major (n_steps + 1) x dim
    dim: usize,
    alpha: FractionalOrder,
    grid: GridSpec,
}

impl Trajectory {
    pub(crate) fn new(
        times: Vec<f64>,
        states: Vec<f64>,
        dim: usize,
        alpha: FractionalOrder,
        grid: GridSpec,
    ) -> Self {
        debug_assert_eq!(times.len() * dim, states.len());
        Trajectory {
            times,
            states,
            dim,
            alpha,
            grid,
        }
    }

    /// Number of stored rows (`n_steps + 1`).
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> FractionalOrder {
        self.alpha
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn time(&self, k: usize) -> f64 {
        self.times[k]
    }

    pub fn state(&self, k: usize) -> &[f64] {
        &self.states[k * self.dim..(k + 1) * self.dim]
    }

    pub fn final_state(&self) -> &[f64] {
        self.state(self.len() - 1)
    }

    /// Iterate `(t_k, y_k)` rows in step order.
    pub fn rows(&self) -> impl Iterator<Item = (f64, &[f64])> {
        self.times
            .iter()
            .copied()
            .zip(self.states.chunks_exact(self.dim))
    }
}
