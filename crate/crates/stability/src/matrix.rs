use crate::StabilityError;
use serde::Serialize;

/// Real square matrix of the two dimensions the models produce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SquareMatrix {
    Two([[f64; 2]; 2]),
    Three([[f64; 3]; 3]),
}

impl SquareMatrix {
    /// Build from dynamically sized rows; anything but 2x2 or 3x3 is a
    /// dimension error.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, StabilityError> {
        let n = rows.len();
        let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
        if rows.iter().any(|r| r.len() != n) {
            return Err(StabilityError::Dimension { rows: n, cols });
        }
        match n {
            2 => Ok(SquareMatrix::Two([
                [rows[0][0], rows[0][1]],
                [rows[1][0], rows[1][1]],
            ])),
            3 => Ok(SquareMatrix::Three([
                [rows[0][0], rows[0][1], rows[0][2]],
                [rows[1][0], rows[1][1], rows[1][2]],
                [rows[2][0], rows[2][1], rows[2][2]],
            ])),
            _ => Err(StabilityError::Dimension { rows: n, cols }),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        match self {
            SquareMatrix::Two(m) => m.iter().map(|r| r.to_vec()).collect(),
            SquareMatrix::Three(m) => m.iter().map(|r| r.to_vec()).collect(),
        }
    }
}

impl From<[[f64; 2]; 2]> for SquareMatrix {
    fn from(m: [[f64; 2]; 2]) -> Self {
        SquareMatrix::Two(m)
    }
}

impl From<[[f64; 3]; 3]> for SquareMatrix {
    fn from(m: [[f64; 3]; 3]) -> Self {
        SquareMatrix::Three(m)
    }
}

/// Monic quadratic `λ² + a1·λ + a2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadraticPoly {
    pub a1: f64,
    pub a2: f64,
}

/// Monic cubic `λ³ + w1·λ² + w2·λ + w3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CubicPoly {
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
}

/// Monic characteristic polynomial of a model Jacobian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum CharPoly {
    Quadratic(QuadraticPoly),
    Cubic(CubicPoly),
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        match self {
            CharPoly::Quadratic(_) => 2,
            CharPoly::Cubic(_) => 3,
        }
    }

    /// Evaluate at a real point.
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            CharPoly::Quadratic(p) => (x + p.a1) * x + p.a2,
            CharPoly::Cubic(p) => ((x + p.w1) * x + p.w2) * x + p.w3,
        }
    }
}

/// Coefficients of the monic characteristic polynomial via trace, principal
/// minors, and determinant: `(a1, a2) = (−tr, det)` for 2x2 and
/// `(w1, w2, w3) = (−tr, Σ principal 2x2 minors, −det)` for 3x3.
pub fn char_poly(matrix: &SquareMatrix) -> CharPoly {
    match matrix {
        SquareMatrix::Two(m) => CharPoly::Quadratic(QuadraticPoly {
            a1: -(m[0][0] + m[1][1]),
            a2: m[0][0] * m[1][1] - m[0][1] * m[1][0],
        }),
        SquareMatrix::Three(m) => {
            let tr = m[0][0] + m[1][1] + m[2][2];
            let minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0])
                + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
                + (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
            let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            CharPoly::Cubic(CubicPoly {
                w1: -tr,
                w2: minors,
                w3: -det,
            })
        }
    }
}
