/// Right-hand side of a (fractional) initial value problem.
///
/// Implementations must be deterministic and side-effect-free: the solver
/// caches evaluations and replays them in the history convolution, so two
/// calls with the same `(t, y)` must write the same derivative.
pub trait VectorField {
    /// State dimension `d ≥ 1`.
    fn dim(&self) -> usize;

    /// Write `f(t, y)` into `dy`. Both slices have length `dim()`.
    fn eval(&self, t: f64, y: &[f64], dy: &mut [f64]);
}

/// Adapter turning a closure into a [`VectorField`].
pub struct FnField<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(f64, &[f64], &mut [f64])> FnField<F> {
    pub fn new(dim: usize, f: F) -> Self {
        FnField { dim, f }
    }
}

impl<F: Fn(f64, &[f64], &mut [f64])> VectorField for FnField<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, t: f64, y: &[f64], dy: &mut [f64]) {
        (self.f)(t, y, dy)
    }
}

impl<T: VectorField + ?Sized> VectorField for &T {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn eval(&self, t: f64, y: &[f64], dy: &mut [f64]) {
        (**self).eval(t, y, dy)
    }
}
