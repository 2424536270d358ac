//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line with the measured quantities (visible with `--nocapture`).
//!
//! The sixteen preset runs (4 scenarios x 4 orders) are computed once and
//! shared by the convergence and agreement criteria.

use epi_models::{sirs_rhs, sis_rhs, SirsParams, SirsState, SisParams, SisState};
use fracepi::presets;
use fracepi::run::{report_at, solve_all};
use fracepi::scenario::Scenario;
use frac_solver::{
    mittag_leffler, pece_solve, rk4_solve, FractionalOrder, GridSpec, FnField,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stability::{
    classify_endemic_sirs, cubic_discriminant, eigenvalues, matignon_check, sirs_equilibria,
    sirs_r0, sis_equilibria, sis_r0, CharPoly, Classification, CubicPoly, QuadraticPoly,
};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

fn order(a: f64) -> FractionalOrder {
    FractionalOrder::new(a).unwrap()
}

fn sis_df_params(alpha: f64) -> SisParams {
    SisParams::new(0.01, 0.06, 0.01, 0.02, 0.2, order(alpha)).unwrap()
}

fn sis_en_params(alpha: f64) -> SisParams {
    SisParams::new(0.01, 0.45, 0.01, 0.2, 0.05, order(alpha)).unwrap()
}

fn sirs_df_params(alpha: f64) -> SirsParams {
    SirsParams::new(0.01, 0.06, 0.01, 0.3, 0.15, 0.02, order(alpha)).unwrap()
}

fn sirs_en_params(alpha: f64) -> SirsParams {
    SirsParams::new(0.01, 0.5, 0.01, 0.2, 0.015, 0.02, order(alpha)).unwrap()
}

fn report_line(criterion: &str, pass: bool, details: &str) {
    println!(
        "[{}] {criterion}: {details}",
        if pass { "PASS" } else { "FAIL" }
    );
}

// ---------------------------------------------------------------------------
// Shared preset runs for criteria 6-8
// ---------------------------------------------------------------------------

struct RunRecord {
    alpha: f64,
    final_state: Vec<f64>,
    predicted: Vec<f64>,
    verdict_stable: bool,
}

struct ScenarioRuns {
    name: &'static str,
    disease_free: bool,
    elapsed: Duration,
    runs: Vec<RunRecord>,
}

static PRESET_RUNS: OnceLock<Vec<ScenarioRuns>> = OnceLock::new();

fn preset_runs() -> &'static [ScenarioRuns] {
    PRESET_RUNS.get_or_init(|| {
        let cases: [(&'static str, Scenario, bool); 4] = [
            ("sis-df", presets::sis_disease_free(), true),
            ("sis-en", presets::sis_endemic(), false),
            ("sirs-df", presets::sirs_disease_free(), true),
            ("sirs-en", presets::sirs_endemic(), false),
        ];
        cases
            .into_iter()
            .map(|(name, scenario, disease_free)| {
                let start = Instant::now();
                let solved = solve_all(&scenario).expect("preset scenario solves");
                let elapsed = start.elapsed();
                let runs = solved
                    .into_iter()
                    .map(|(alpha, traj)| {
                        let report = report_at(&scenario, alpha).expect("report");
                        RunRecord {
                            alpha: alpha.value(),
                            final_state: traj.final_state().to_vec(),
                            predicted: report.equilibria.predicted().to_vec(),
                            verdict_stable: report.predicted().verdict.is_stable(),
                        }
                    })
                    .collect();
                ScenarioRuns {
                    name,
                    disease_free,
                    elapsed,
                    runs,
                }
            })
            .collect()
    })
}

// ---------------------------------------------------------------------------
// Criterion 1: PECE vs Mittag-Leffler on the linear test equation
// ---------------------------------------------------------------------------

fn linear_decay_max_rel_error(alpha: f64, h: f64, t_end: f64) -> f64 {
    let field = FnField::new(1, |_t, y: &[f64], dy: &mut [f64]| dy[0] = -y[0]);
    let a = order(alpha);
    let traj = pece_solve(&field, a, &[1.0], GridSpec::new(h, t_end).unwrap(), 1).unwrap();
    traj.rows()
        .map(|(t, y)| {
            let exact = mittag_leffler(a, -t.powf(alpha)).unwrap();
            ((y[0] - exact) / exact).abs()
        })
        .fold(0.0, f64::max)
}

#[test]
fn criterion_01_solver_oracle() {
    let mut details = String::new();
    let mut pass = true;
    for alpha in [0.5, 0.9, 1.0] {
        let start = Instant::now();
        let err = linear_decay_max_rel_error(alpha, 1e-3, 5.0);
        let secs = start.elapsed().as_secs_f64();
        pass &= err <= 1e-3 && secs < 10.0;
        details.push_str(&format!("alpha={alpha}: rel_err={err:.2e} ({secs:.1}s); "));
    }
    report_line("C1 solver oracle vs Mittag-Leffler", pass, &details);
    assert!(pass, "{details}");
}

// ---------------------------------------------------------------------------
// Criterion 2: cross-solver equivalence at alpha = 1
// ---------------------------------------------------------------------------

#[test]
fn criterion_02_cross_solver_equivalence() {
    let field = epi_models::SisField::new(&sis_en_params(1.0));
    let grid = GridSpec::new(0.01, 100.0).unwrap();
    let y0 = [0.95, 0.05];
    let pece = pece_solve(&field, order(1.0), &y0, grid, 2).unwrap();
    let rk4 = rk4_solve(&field, &y0, grid).unwrap();
    let max_diff = pece
        .rows()
        .zip(rk4.rows())
        .flat_map(|((_, a), (_, b))| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
        .fold(0.0, f64::max);
    let pass = max_diff <= 1e-3;
    report_line(
        "C2 PECE vs RK4 on the endemic SIS field",
        pass,
        &format!("max_abs_diff={max_diff:.2e}"),
    );
    assert!(pass);
}

// ---------------------------------------------------------------------------
// Criterion 3: convergence under grid refinement
// ---------------------------------------------------------------------------

#[test]
fn criterion_03_grid_refinement() {
    let errs: Vec<f64> = [4e-3, 2e-3, 1e-3]
        .iter()
        .map(|&h| linear_decay_max_rel_error(0.9, h, 5.0))
        .collect();
    let monotone = errs[0] > errs[1] && errs[1] > errs[2];
    let reduction = errs[0] / errs[2];
    let pass = monotone && reduction >= 3.0;
    report_line(
        "C3 refinement strictly reduces error",
        pass,
        &format!(
            "errors {:.2e} -> {:.2e} -> {:.2e}, total reduction {reduction:.1}x",
            errs[0], errs[1], errs[2]
        ),
    );
    assert!(pass);
}

// ---------------------------------------------------------------------------
// Criterion 4: reproduction numbers of the four scenarios
// ---------------------------------------------------------------------------

#[test]
fn criterion_04_r0_reproduction() {
    let values = [
        ("sis-df", sis_r0(&sis_df_params(1.0)), 0.260_869_6),
        ("sis-en", sis_r0(&sis_en_params(1.0)), 1.730_769_2),
        ("sirs-df", sirs_r0(&sirs_df_params(1.0)), 0.130_434_8),
        ("sirs-en", sirs_r0(&sirs_en_params(1.0)), 2.222_222_2),
    ];
    let mut pass = true;
    let mut details = String::new();
    for (name, actual, expected) in values {
        let ok = (actual - expected).abs() <= 1e-6;
        pass &= ok;
        details.push_str(&format!("{name}: {actual:.7}; "));
    }
    report_line("C4 reproduction numbers", pass, &details);
    assert!(pass, "{details}");
}

// ---------------------------------------------------------------------------
// Criterion 5: equilibrium residuals and the Newton cross-check
// ---------------------------------------------------------------------------

fn fd_jacobian<const D: usize>(f: &dyn Fn(&[f64; D]) -> [f64; D], x: &[f64; D]) -> [[f64; D]; D] {
    let h = 1e-7;
    let mut j = [[0.0; D]; D];
    for c in 0..D {
        let mut hi = *x;
        let mut lo = *x;
        hi[c] += h;
        lo[c] -= h;
        let fh = f(&hi);
        let fl = f(&lo);
        for r in 0..D {
            j[r][c] = (fh[r] - fl[r]) / (2.0 * h);
        }
    }
    j
}

fn solve_linear<const D: usize>(mut a: [[f64; D]; D], mut b: [f64; D]) -> Option<[f64; D]> {
    for col in 0..D {
        let pivot = (col..D).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-14 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..D {
            let factor = a[row][col] / a[col][col];
            for k in col..D {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = [0.0; D];
    for row in (0..D).rev() {
        let mut sum = b[row];
        for k in row + 1..D {
            sum -= a[row][k] * x[k];
        }
        x[row] = sum / a[row][row];
    }
    Some(x)
}

fn norm<const D: usize>(v: &[f64; D]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn damped_newton<const D: usize>(f: &dyn Fn(&[f64; D]) -> [f64; D], start: [f64; D]) -> [f64; D] {
    let mut x = start;
    for _ in 0..200 {
        let fx = f(&x);
        if norm(&fx) < 1e-13 {
            return x;
        }
        let j = fd_jacobian(f, &x);
        let mut rhs = fx;
        for v in rhs.iter_mut() {
            *v = -*v;
        }
        let Some(step) = solve_linear(j, rhs) else {
            return x;
        };
        let mut damping = 1.0;
        loop {
            let mut candidate = x;
            for c in 0..D {
                candidate[c] += damping * step[c];
            }
            if norm(&f(&candidate)) < norm(&fx) {
                x = candidate;
                break;
            }
            damping *= 0.5;
            if damping < 1e-8 {
                return x;
            }
        }
    }
    x
}

#[test]
fn criterion_05_equilibrium_residuals_and_newton() {
    let mut pass = true;
    let mut details = String::new();

    // Residual norms of every emitted equilibrium across scenarios/orders.
    let mut worst_residual = 0.0_f64;
    for alpha in presets::PRESET_ALPHAS {
        for (set, rhs) in [
            (sis_equilibria(&sis_df_params(alpha)), sis_df_params(alpha)),
            (sis_equilibria(&sis_en_params(alpha)), sis_en_params(alpha)),
        ] {
            for p in std::iter::once(&set.disease_free).chain(set.endemic.iter()) {
                let dy = sis_rhs(&SisState::new(p[0], p[1]).unwrap(), &rhs);
                worst_residual = worst_residual.max(dy[0].hypot(dy[1]));
            }
        }
        for (set, rhs) in [
            (sirs_equilibria(&sirs_df_params(alpha)), sirs_df_params(alpha)),
            (sirs_equilibria(&sirs_en_params(alpha)), sirs_en_params(alpha)),
        ] {
            for p in std::iter::once(&set.disease_free).chain(set.endemic.iter()) {
                let dy = sirs_rhs(&SirsState::new(p[0], p[1], p[2]).unwrap(), &rhs);
                worst_residual =
                    worst_residual.max((dy[0] * dy[0] + dy[1] * dy[1] + dy[2] * dy[2]).sqrt());
            }
        }
    }
    pass &= worst_residual <= 1e-10;
    details.push_str(&format!("worst residual {worst_residual:.2e}; "));

    // Closed forms vs the independent damped-Newton root-finder.
    let sis = sis_en_params(1.0);
    let e = sis.effective();
    let h_en = sis_equilibria(&sis).endemic.unwrap();
    let root = damped_newton(&move |x: &[f64; 2]| e.rhs(x[0], x[1]), [0.3, 0.2]);
    let sis_diff = (root[0] - h_en[0]).abs().max((root[1] - h_en[1]).abs());
    pass &= sis_diff <= 1e-7;
    details.push_str(&format!(
        "H_en=({:.7}, {:.7}) newton diff {sis_diff:.1e}; ",
        h_en[0], h_en[1]
    ));

    let sirs = sirs_en_params(1.0);
    let e = sirs.effective();
    let p_en = sirs_equilibria(&sirs).endemic.unwrap();
    let root = damped_newton(&move |x: &[f64; 3]| e.rhs(x[0], x[1], x[2]), [0.5, 0.1, 0.3]);
    let sirs_diff = (0..3).map(|c| (root[c] - p_en[c]).abs()).fold(0.0, f64::max);
    pass &= sirs_diff <= 1e-7;
    details.push_str(&format!(
        "P_en=({:.7}, {:.7}, {:.7}) newton diff {sirs_diff:.1e}",
        p_en[0], p_en[1], p_en[2]
    ));

    report_line("C5 equilibrium residuals + Newton cross-check", pass, &details);
    assert!(pass, "{details}");
}

// ---------------------------------------------------------------------------
// Criteria 6-8: preset convergence and classifier agreement
// ---------------------------------------------------------------------------

#[test]
fn criterion_06_disease_free_presets_converge() {
    let mut pass = true;
    let mut details = String::new();
    for sc in preset_runs().iter().filter(|s| s.disease_free) {
        let secs = sc.elapsed.as_secs_f64();
        pass &= secs < 60.0;
        let mut worst_qi = (0.0_f64, 0.0_f64); // (value, alpha)
        let mut worst_qs = (0.0_f64, 0.0_f64);
        for run in &sc.runs {
            let qi = run.final_state[1].abs();
            let qs = (run.final_state[0] - run.predicted[0]).abs();
            if qi > worst_qi.0 {
                worst_qi = (qi, run.alpha);
            }
            if qs > worst_qs.0 {
                worst_qs = (qs, run.alpha);
            }
            pass &= qi < 1e-3 && qs < 1e-2;
        }
        details.push_str(&format!(
            "{}: worst |Q_I|={:.1e} (alpha={}), worst |Q_S-target|={:.1e} (alpha={}) in {secs:.1}s; ",
            sc.name, worst_qi.0, worst_qi.1, worst_qs.0, worst_qs.1
        ));
    }
    report_line("C6 disease-free preset convergence", pass, &details);
    assert!(pass, "{details}");
}

#[test]
fn criterion_07_endemic_presets_converge() {
    let mut pass = true;
    let mut details = String::new();
    for sc in preset_runs().iter().filter(|s| !s.disease_free) {
        let mut worst = (0.0_f64, 0.0_f64); // (value, alpha)
        for run in &sc.runs {
            let max_component = run
                .final_state
                .iter()
                .zip(&run.predicted)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if max_component > worst.0 {
                worst = (max_component, run.alpha);
            }
            pass &= max_component < 1e-2;
        }
        details.push_str(&format!(
            "{}: worst per-component distance {:.1e} (alpha={}); ",
            sc.name, worst.0, worst.1
        ));
    }
    report_line("C7 endemic preset convergence", pass, &details);
    assert!(pass, "{details}");
}

#[test]
fn criterion_08_classifier_simulation_agreement() {
    let mut pass = true;
    let mut stable_count = 0;
    for sc in preset_runs() {
        for run in &sc.runs {
            pass &= run.verdict_stable;
            stable_count += usize::from(run.verdict_stable);
            // Distance below the criterion 6/7 thresholds per regime.
            if sc.disease_free {
                pass &= run.final_state[1].abs() < 1e-3
                    && (run.final_state[0] - run.predicted[0]).abs() < 1e-2;
                if run.final_state.len() == 3 {
                    pass &= run.final_state[2].abs() < 1e-2;
                }
            } else {
                pass &= run
                    .final_state
                    .iter()
                    .zip(&run.predicted)
                    .all(|(a, b)| (a - b).abs() < 1e-2);
            }
        }
    }
    report_line(
        "C8 classifier vs simulation",
        pass,
        &format!("{stable_count}/16 runs verdict stable, all within tolerance"),
    );
    assert!(pass);
}

// ---------------------------------------------------------------------------
// Criterion 9: identity suite
// ---------------------------------------------------------------------------

#[test]
fn criterion_09_identity_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    let mut pass = true;

    // Endemic identities for 200 draws with R0 > 1.
    let mut worst_identity = 0.0_f64;
    for _ in 0..200 {
        let alpha: f64 = rng.gen_range(0.05..=1.0);
        let (lam, nu, om, eta): (f64, f64, f64, f64) = (
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..1.0),
        );
        let target_r0 = rng.gen_range(1.05..5.0);
        let phi =
            ((eta.powf(alpha) + nu.powf(alpha) + om.powf(alpha)) * target_r0).powf(1.0 / alpha);
        let p = SisParams::new(lam, phi, nu, om, eta, order(alpha)).unwrap();
        let en = sis_equilibria(&p).endemic.expect("constructed R0 > 1");
        let e = p.effective();
        let n = en[0] + en[1];
        let id4 = (e.infection * en[0] / n
            - (e.disease_death + e.natural_death + e.return_rate))
            .abs();
        let id5 = (e.recruitment
            - ((e.disease_death + e.natural_death) * en[1] + e.natural_death * en[0]))
            .abs();
        worst_identity = worst_identity.max(id4).max(id5);
    }
    pass &= worst_identity <= 1e-10;

    // Total-population identities for 1000 random states.
    let mut worst_total = 0.0_f64;
    for _ in 0..1000 {
        let alpha: f64 = rng.gen_range(0.05..=1.0);
        let p = SisParams::new(
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..2.0),
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..1.0),
            order(alpha),
        )
        .unwrap();
        let s = SisState::new(rng.gen_range(0.0..5.0), rng.gen_range(0.0..5.0)).unwrap();
        let dy = sis_rhs(&s, &p);
        let e = p.effective();
        let expected = e.recruitment - e.disease_death * s.q_i() - e.natural_death * s.total();
        worst_total = worst_total.max((dy[0] + dy[1] - expected).abs());

        let p = SirsParams::new(
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..2.0),
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..1.0),
            rng.gen_range(0.005..1.0),
            order(alpha),
        )
        .unwrap();
        let s = SirsState::new(
            rng.gen_range(0.0..5.0),
            rng.gen_range(0.0..5.0),
            rng.gen_range(0.0..5.0),
        )
        .unwrap();
        let dy = sirs_rhs(&s, &p);
        let e = p.effective();
        let expected = e.recruitment - e.disease_death * s.q_i() - e.natural_death * s.total();
        worst_total = worst_total.max((dy[0] + dy[1] + dy[2] - expected).abs());
    }
    pass &= worst_total <= 1e-14;

    report_line(
        "C9 identity suite",
        pass,
        &format!(
            "endemic identities worst {worst_identity:.2e} (<=1e-10), totals worst {worst_total:.2e} (<=1e-14)"
        ),
    );
    assert!(pass);
}

// ---------------------------------------------------------------------------
// Criterion 10: discriminant / proposition / angle-condition suite
// ---------------------------------------------------------------------------

#[test]
fn criterion_10_discriminant_and_proposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut pass = true;

    // Discriminant sign vs root structure on 100 constructed cubics.
    for case in 0..100 {
        let real_rooted = case % 2 == 0;
        let p = if real_rooted {
            let r1 = rng.gen_range(-5.0..5.0);
            let r2 = r1 + rng.gen_range(0.2..3.0);
            let r3 = r2 + rng.gen_range(0.2..3.0);
            CubicPoly {
                w1: -(r1 + r2 + r3),
                w2: r1 * r2 + r1 * r3 + r2 * r3,
                w3: -(r1 * r2 * r3),
            }
        } else {
            let r = rng.gen_range(-5.0..5.0);
            let a = rng.gen_range(-3.0..3.0);
            let b = rng.gen_range(0.2..3.0);
            let m = a * a + b * b;
            CubicPoly {
                w1: -(r + 2.0 * a),
                w2: m + 2.0 * a * r,
                w3: -(r * m),
            }
        };
        let d = cubic_discriminant(&p);
        let complex = eigenvalues(&CharPoly::Cubic(p))
            .values
            .iter()
            .filter(|v| v.im != 0.0)
            .count();
        pass &= if real_rooted {
            d > 0.0 && complex == 0
        } else {
            d < 0.0 && complex == 2
        };
    }

    // Pinned proposition cases.
    let v = classify_endemic_sirs(
        &CubicPoly {
            w1: 6.0,
            w2: 11.0,
            w3: 6.0,
        },
        order(0.8),
    );
    pass &= v.is_stable() && v.rule_fired == "prop-i";
    let v = classify_endemic_sirs(
        &CubicPoly {
            w1: -3.0,
            w2: 3.0,
            w3: -1.0,
        },
        order(0.8),
    );
    pass &= v.classification == Classification::Unstable && v.rule_fired == "prop-v";
    let v = classify_endemic_sirs(
        &CubicPoly {
            w1: 0.0,
            w2: 0.0,
            w3: 1.0,
        },
        order(0.5),
    );
    pass &= v.is_stable() && v.rule_fired == "prop-ii";

    // Angle condition vs root signs for 100 random quadratics at alpha = 1.
    for _ in 0..100 {
        let (poly, stable_expected) = if rng.gen_bool(0.5) {
            let r1: f64 = rng.gen_range(-3.0..3.0);
            let r2: f64 = rng.gen_range(-3.0..3.0);
            (
                QuadraticPoly {
                    a1: -(r1 + r2),
                    a2: r1 * r2,
                },
                r1 < 0.0 && r2 < 0.0,
            )
        } else {
            let re: f64 = rng.gen_range(-3.0..3.0);
            let im: f64 = rng.gen_range(0.2..3.0);
            (
                QuadraticPoly {
                    a1: -2.0 * re,
                    a2: re * re + im * im,
                },
                re < 0.0,
            )
        };
        let eigs = eigenvalues(&CharPoly::Quadratic(poly));
        if eigs.values.iter().any(|v| v.re == 0.0 && v.im == 0.0) {
            continue;
        }
        pass &= matignon_check(&eigs, order(1.0)).is_stable() == stable_expected;
    }

    report_line(
        "C10 discriminant/proposition suite",
        pass,
        "100 cubics, 3 pinned proposition cases, 100 quadratics",
    );
    assert!(pass);
}

// ---------------------------------------------------------------------------
// Criterion 11: byte-identical reproduction
// ---------------------------------------------------------------------------

#[test]
fn criterion_11_reproduce_is_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let run = |dir: &std::path::Path| {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_fracepi"))
            .args(["reproduce", "fig2", "--out"])
            .arg(dir)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
    };
    let a = tmp.path().join("a");
    let b = tmp.path().join("b");
    run(&a);
    run(&b);
    let mut names: Vec<_> = std::fs::read_dir(&a)
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    let mut pass = names.len() == 5;
    for name in &names {
        let left = std::fs::read(a.join(name)).unwrap();
        let right = std::fs::read(b.join(name)).unwrap();
        pass &= left == right;
    }
    report_line(
        "C11 determinism of reproduce fig2",
        pass,
        &format!("{} files byte-identical across two runs", names.len()),
    );
    assert!(pass);
}
