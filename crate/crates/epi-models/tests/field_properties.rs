//! Structural identities of the SIS/SIRS fields checked over random states
//! and parameter draws, plus the cross-solver consistency check at α = 1.

use epi_models::{
    sis_rhs, sis_rhs_legacy, sirs_rhs, SisField, SisParams, SisState, SirsParams, SirsState,
};
use frac_solver::{pece_solve, rk4_solve, FractionalOrder, GridSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn order(a: f64) -> FractionalOrder {
    FractionalOrder::new(a).unwrap()
}

fn random_sis_params(rng: &mut ChaCha8Rng) -> SisParams {
    let alpha = order(rng.gen_range(0.05..=1.0));
    SisParams::new(
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        alpha,
    )
    .unwrap()
}

fn random_sirs_params(rng: &mut ChaCha8Rng) -> SirsParams {
    let alpha = order(rng.gen_range(0.05..=1.0));
    SirsParams::new(
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        rng.gen_range(0.001..2.0),
        alpha,
    )
    .unwrap()
}

#[test]
fn sis_total_population_identity() {
    // Summing the field components must reproduce the total-population
    // equation dN = Lambda^a - eta^a Q_I - nu^a N.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let p = random_sis_params(&mut rng);
        let e = p.effective();
        let state = SisState::new(rng.gen_range(0.0..5.0), rng.gen_range(0.0..5.0)).unwrap();
        let dy = sis_rhs(&state, &p);
        let expected =
            e.recruitment - e.disease_death * state.q_i() - e.natural_death * state.total();
        assert!((dy[0] + dy[1] - expected).abs() <= 1e-14);
    }
}

#[test]
fn sirs_total_population_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..1000 {
        let p = random_sirs_params(&mut rng);
        let e = p.effective();
        let state = SirsState::new(
            rng.gen_range(0.0..5.0),
            rng.gen_range(0.0..5.0),
            rng.gen_range(0.0..5.0),
        )
        .unwrap();
        let dy = sirs_rhs(&state, &p);
        let expected =
            e.recruitment - e.disease_death * state.q_i() - e.natural_death * state.total();
        assert!((dy[0] + dy[1] + dy[2] - expected).abs() <= 1e-14);
    }
}

#[test]
fn disease_cannot_spontaneously_appear() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let sis = random_sis_params(&mut rng);
        let s = SisState::new(rng.gen_range(0.0..5.0), 0.0).unwrap();
        assert_eq!(sis_rhs(&s, &sis)[1], 0.0);
        assert_eq!(sis_rhs_legacy(&s, &sis)[1], 0.0);

        let sirs = random_sirs_params(&mut rng);
        let s = SirsState::new(rng.gen_range(0.0..5.0), 0.0, rng.gen_range(0.0..5.0)).unwrap();
        assert_eq!(sirs_rhs(&s, &sirs)[1], 0.0);
    }
}

#[test]
fn order_one_collapses_to_integer_model() {
    // At alpha = 1 the corrected SIS field equals the legacy field, and the
    // SIRS field equals the classical integer-order system.
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let rates: [f64; 6] = std::array::from_fn(|_| rng.gen_range(0.001..2.0));
        let state = SisState::new(rng.gen_range(0.0..5.0), rng.gen_range(0.0..5.0)).unwrap();
        let p = SisParams::new(rates[0], rates[1], rates[2], rates[3], rates[4], order(1.0))
            .unwrap();
        let corrected = sis_rhs(&state, &p);
        let legacy = sis_rhs_legacy(&state, &p);
        assert!((corrected[0] - legacy[0]).abs() <= 1e-14);
        assert!((corrected[1] - legacy[1]).abs() <= 1e-14);

        let sp = SirsParams::new(
            rates[0],
            rates[1],
            rates[2],
            rates[3],
            rates[4],
            rates[5],
            order(1.0),
        )
        .unwrap();
        let st = SirsState::new(
            rng.gen_range(0.0..5.0),
            rng.gen_range(0.0..5.0),
            rng.gen_range(0.0..5.0),
        )
        .unwrap();
        let dy = sirs_rhs(&st, &sp);
        // Integer-order right-hand side written out directly.
        let n = st.total();
        let inc = if n > 1e-12 {
            rates[1] * st.q_s() * st.q_i() / n
        } else {
            0.0
        };
        let expected = [
            rates[0] - inc - rates[2] * st.q_s() + rates[5] * st.q_r(),
            inc - (rates[4] + rates[3] + rates[2]) * st.q_i(),
            rates[3] * st.q_i() - (rates[2] + rates[5]) * st.q_r(),
        ];
        for c in 0..3 {
            assert!((dy[c] - expected[c]).abs() <= 1e-14);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn incidence_stays_within_bound(
        q_s in 0.0f64..10.0,
        q_i in 0.0f64..10.0,
        phi in 0.001f64..2.0,
        alpha in 0.05f64..=1.0,
    ) {
        // phi^a Q_S Q_I / N lies in [0, phi^a min(Q_S, Q_I)].
        let p = SisParams::new(0.01, phi, 0.01, 0.02, 0.2, order(alpha)).unwrap();
        let e = p.effective();
        let state = SisState::new(q_s, q_i).unwrap();
        let dy = sis_rhs(&state, &p);
        let incidence = dy[1]
            + (e.disease_death + e.natural_death + e.return_rate) * q_i;
        prop_assert!(incidence >= -1e-15);
        prop_assert!(incidence <= e.infection * q_s.min(q_i) + 1e-12);
    }
}

#[test]
fn pece_matches_rk4_on_sis_at_order_one() {
    // Cross-solver oracle from (0.95, 0.05) over a moderate horizon.
    let params = SisParams::new(0.01, 0.06, 0.01, 0.02, 0.2, order(1.0)).unwrap();
    let field = SisField::new(&params);
    let grid = GridSpec::new(0.05, 40.0).unwrap();
    let y0 = [0.95, 0.05];
    let pece = pece_solve(&field, order(1.0), &y0, grid, 2).unwrap();
    let rk4 = rk4_solve(&field, &y0, grid).unwrap();
    for ((_, a), (_, b)) in pece.rows().zip(rk4.rows()) {
        assert!((a[0] - b[0]).abs() <= 1e-3);
        assert!((a[1] - b[1]).abs() <= 1e-3);
    }
}
