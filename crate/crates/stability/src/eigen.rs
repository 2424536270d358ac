use crate::{CharPoly, CubicPoly, QuadraticPoly};
use num_complex::Complex64;
use serde::Serialize;

/// One eigenvalue as a re/im pair (serialization-friendly).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub re: f64,
    pub im: f64,
}

impl Eigenvalue {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Principal argument in (−π, π].
    pub fn arg(&self) -> f64 {
        self.im.atan2(self.re)
    }

    fn from_complex(z: Complex64) -> Self {
        Eigenvalue { re: z.re, im: z.im }
    }
}

/// Roots of a characteristic polynomial with their worst residual
/// `max_i |p(λ_i)|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenSet {
    pub values: Vec<Eigenvalue>,
    pub max_residual: f64,
}

/// All complex roots of the polynomial: quadratic formula for degree 2,
/// depressed-cubic Cardano/trigonometric casework plus one Newton polish
/// step for degree 3.
pub fn eigenvalues(p: &CharPoly) -> EigenSet {
    let values = match p {
        CharPoly::Quadratic(q) => quadratic_roots(q),
        CharPoly::Cubic(c) => cubic_roots(c),
    };
    let max_residual = values
        .iter()
        .map(|v| eval_complex(p, Complex64::new(v.re, v.im)).norm())
        .fold(0.0, f64::max);
    EigenSet {
        values,
        max_residual,
    }
}

fn eval_complex(p: &CharPoly, z: Complex64) -> Complex64 {
    match p {
        CharPoly::Quadratic(q) => (z + q.a1) * z + q.a2,
        CharPoly::Cubic(c) => ((z + c.w1) * z + c.w2) * z + c.w3,
    }
}

fn quadratic_roots(p: &QuadraticPoly) -> Vec<Eigenvalue> {
    let disc = p.a1 * p.a1 - 4.0 * p.a2;
    if disc >= 0.0 {
        // Avoid cancellation: compute the large-magnitude root first.
        let sd = disc.sqrt();
        let r1 = if p.a1 >= 0.0 {
            (-p.a1 - sd) / 2.0
        } else {
            (-p.a1 + sd) / 2.0
        };
        let r2 = if r1 != 0.0 { p.a2 / r1 } else { -p.a1 };
        vec![
            Eigenvalue { re: r1, im: 0.0 },
            Eigenvalue { re: r2, im: 0.0 },
        ]
    } else {
        let re = -p.a1 / 2.0;
        let im = (-disc).sqrt() / 2.0;
        vec![Eigenvalue { re, im }, Eigenvalue { re, im: -im }]
    }
}

fn cubic_roots(c: &CubicPoly) -> Vec<Eigenvalue> {
    // Depressed form x^3 + p x + q with λ = x − w1/3.
    let shift = c.w1 / 3.0;
    let p = c.w2 - c.w1 * c.w1 / 3.0;
    let q = 2.0 * c.w1.powi(3) / 27.0 - c.w1 * c.w2 / 3.0 + c.w3;
    let half_q = q / 2.0;
    let delta = half_q * half_q + (p / 3.0).powi(3);

    let poly = CharPoly::Cubic(*c);
    let mut roots: Vec<Complex64> = Vec::with_capacity(3);
    if delta > 0.0 {
        // One real root and a conjugate pair.
        let s = delta.sqrt();
        let a = -(half_q.abs() + s).cbrt();
        let a = if q < 0.0 { -a } else { a };
        let b = if a != 0.0 { -p / (3.0 * a) } else { 0.0 };
        let real = a + b - shift;
        let re = -(a + b) / 2.0 - shift;
        let im = 3.0_f64.sqrt() / 2.0 * (a - b);
        roots.push(Complex64::new(real, 0.0));
        roots.push(Complex64::new(re, im.abs()));
        roots.push(Complex64::new(re, -im.abs()));
    } else if p == 0.0 && q == 0.0 {
        let r = Complex64::new(-shift, 0.0);
        roots.extend([r, r, r]);
    } else {
        // Three real roots via the trigonometric form.
        let m = 2.0 * (-p / 3.0).sqrt();
        let cos_arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = cos_arg.acos() / 3.0;
        for k in 0..3 {
            let angle = theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0;
            roots.push(Complex64::new(m * angle.cos() - shift, 0.0));
        }
    }

    // One Newton step against the original monic cubic tightens the
    // residual; conjugate symmetry is restored afterwards.
    let polished: Vec<Complex64> = roots
        .iter()
        .map(|&z| {
            let f = eval_complex(&poly, z);
            let df = (Complex64::new(3.0, 0.0) * z + 2.0 * c.w1) * z + c.w2;
            if df.norm() > 1e-300 {
                let candidate = z - f / df;
                if eval_complex(&poly, candidate).norm() <= f.norm() {
                    candidate
                } else {
                    z
                }
            } else {
                z
            }
        })
        .collect();
    let mut out: Vec<Eigenvalue> = polished.iter().map(|&z| Eigenvalue::from_complex(z)).collect();
    if out.len() == 3 && out[1].im != 0.0 {
        out[2] = Eigenvalue {
            re: out[1].re,
            im: -out[1].im,
        };
    }
    out
}
