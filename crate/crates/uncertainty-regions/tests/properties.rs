//! Property tests for the analytic invariants: identities hold on random
//! inputs, regions contain what the state families generate, and the
//! serialization and scan layers behave structurally.

use num_complex::Complex;
use proptest::prelude::*;

use uncertainty_regions::oracle::scan_qubit_pair;
use uncertainty_regions::plot::{parse_region_csv, region_csv_string, RegionRow, RowKind};
use uncertainty_regions::quantum::{
    qubit_variance, qutrit_variance, HermitianMatrix3, QubitObservable, QubitState, QutritState,
    UncertaintyPoint, Vec3,
};
use uncertainty_regions::qubit_regions::{
    blw_curved_bound, blw_straight_bound, lagrange_identity_residuals, max_sdev_b,
    min_sdev_b, pair_region_contains, QubitPair,
};
use uncertainty_regions::qutrit_regions::{
    extended_monotonicity_witness, extended_region_contains, extended_variances,
    gm_region_contains, gm_variances, ExtendedPairParams, GellMannStateParams,
};

fn unit_from_angles(polar: f64, azimuth: f64) -> Vec3<f64> {
    let s = polar.sin();
    Vec3::new(s * azimuth.cos(), s * azimuth.sin(), polar.cos())
}

fn ball_from(polar: f64, azimuth: f64, cube: f64) -> Vec3<f64> {
    unit_from_angles(polar, azimuth).scale(cube.cbrt())
}

const PI: f64 = std::f64::consts::PI;

proptest! {
    #[test]
    fn lagrange_identities_hold(
        ap in 0.0..PI, aa in 0.0..2.0 * PI,
        bp in 0.0..PI, ba in 0.0..2.0 * PI,
        rp in 0.0..PI, ra in 0.0..2.0 * PI, rc in 0.0..1.0,
    ) {
        let a = unit_from_angles(ap, aa);
        let b = unit_from_angles(bp, ba);
        let r = ball_from(rp, ra, rc);
        let (r1, r2, r3) = lagrange_identity_residuals(a, b, r);
        prop_assert!(r1 < 1e-12 && r2 < 1e-12 && r3 < 1e-12, "{r1} {r2} {r3}");
    }

    #[test]
    fn pair_region_is_swap_symmetric(
        theta in 1e-3..PI / 2.0,
        u in 0.0..1.0,
        v in 0.0..1.0,
    ) {
        let pair = QubitPair::from_angle(theta).unwrap();
        let p = UncertaintyPoint::std_dev(u, v).unwrap();
        let q = UncertaintyPoint::std_dev(v, u).unwrap();
        prop_assert_eq!(
            pair_region_contains(&pair, &p).unwrap(),
            pair_region_contains(&pair, &q).unwrap()
        );
    }

    #[test]
    fn sharp_boundary_dominates_reference_bounds(
        theta in 0.0..PI / 2.0,
        x in 0.0..1.0,
    ) {
        let pair = QubitPair::from_angle(theta).unwrap();
        let lo = min_sdev_b(&pair, x).unwrap();
        prop_assert!(lo + x >= blw_straight_bound(&pair) - 1e-12);
        prop_assert!(lo * lo + x * x >= blw_curved_bound(&pair) - 1e-12);
    }

    #[test]
    fn sampled_states_land_in_the_region(
        theta in 1e-3..PI / 2.0,
        rp in 0.0..PI, ra in 0.0..2.0 * PI, rc in 0.0..1.0,
    ) {
        let pair = QubitPair::from_angle(theta).unwrap();
        let r = ball_from(rp, ra, rc);
        let da = (1.0 - pair.a().dot(r).powi(2)).max(0.0).sqrt();
        let db = (1.0 - pair.b().dot(r).powi(2)).max(0.0).sqrt();
        let lo = min_sdev_b(&pair, da).unwrap();
        let hi = max_sdev_b(&pair, da).unwrap();
        prop_assert!(lo - 1e-9 <= db && db <= hi + 1e-9, "{da} {db} vs [{lo}, {hi}]");
    }

    #[test]
    fn triple_sum_identity_holds(
        rp in 0.0..PI, ra in 0.0..2.0 * PI, rc in 0.0..1.0,
    ) {
        let r = ball_from(rp, ra, rc);
        let state = QubitState::new(r).unwrap();
        let sum = qubit_variance(&QubitObservable::sigma_x(), &state)
            + qubit_variance(&QubitObservable::sigma_y(), &state)
            + qubit_variance(&QubitObservable::sigma_z(), &state);
        prop_assert!((sum - (3.0 - r.norm_sq())).abs() < 1e-12);
    }

    #[test]
    fn extended_family_lands_in_the_region(
        w in 0.0..1.0,
        rho in 0.0..1.0,
        ang in 0.0..2.0 * PI,
    ) {
        let p = ExtendedPairParams::new(w, rho * ang.cos(), rho * ang.sin()).unwrap();
        let (va, vb): (f64, f64) = extended_variances(&p, 0.0).unwrap();
        let (da, db) = (va.sqrt().min(1.0), vb.sqrt().min(1.0));
        prop_assert!(extended_region_contains(da, db).unwrap());
    }

    #[test]
    fn extended_minimum_is_monotone_in_u(
        x in 1e-6..1.0f64,
        t in 1e-6..1.0f64,
    ) {
        // w₋ ≤ 1 requires u ≤ 1 − X; the discriminant is then (x−u)² at worst
        let u = t * (1.0 - x) * (1.0 - 1e-9);
        prop_assume!(u > 0.0 && 1.0 - 4.0 * x * u > 1e-12);
        let (_, y_prime) = extended_monotonicity_witness(x, u).unwrap();
        prop_assert!(y_prime >= -1e-12, "Y' = {y_prime} at x = {x}, u = {u}");
    }

    #[test]
    fn gellmann_family_lands_in_the_region(
        rho11 in 0.0..1.0f64,
        frac in 0.0..1.0f64,
        mu in 0.0..1.0f64,
        phase in 0.0..PI,
    ) {
        let rho33 = frac * (1.0 - rho11);
        let modulus = (mu * rho11 * rho33).sqrt();
        let p = GellMannStateParams::new(
            rho11,
            rho33,
            modulus * phase.cos(),
            modulus * phase.sin(),
        ).unwrap();
        let (x, y) = gm_variances(&p);
        prop_assert!(gm_region_contains(x, y), "({x}, {y}) outside region");
    }

    #[test]
    fn gellmann_reduced_moments_match_full_matrix(
        rho11 in 0.0..1.0f64,
        frac in 0.0..1.0f64,
        mu in 0.0..1.0f64,
        phase in 0.0..PI,
    ) {
        let rho33 = frac * (1.0 - rho11);
        let modulus = (mu * rho11 * rho33).sqrt() * (1.0 - 1e-9);
        let rho13 = Complex::new(modulus * phase.cos(), modulus * phase.sin());
        let p = GellMannStateParams::new(rho11, rho33, rho13.re, rho13.im).unwrap();
        let (x, y) = gm_variances(&p);
        let state = QutritState::from_gm_params(rho11, rho33, rho13).unwrap();
        let xf = qutrit_variance(&HermitianMatrix3::gell_mann_a(), &state);
        let yf = qutrit_variance(&HermitianMatrix3::gell_mann_b(), &state);
        prop_assert!((x - xf).abs() < 1e-12 && (y - yf).abs() < 1e-12);
    }

    #[test]
    fn region_csv_round_trips(
        rows in proptest::collection::vec(
            (0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64, prop::bool::ANY, "[a-z][a-z0-9-]{0,12}"),
            0..40,
        )
    ) {
        let rows: Vec<RegionRow> = rows
            .into_iter()
            .map(|(x, lo, extra, analytic, source)| RegionRow {
                x,
                y_min: lo,
                y_max: lo + extra * (1.0 - lo),
                kind: if analytic { RowKind::Analytic } else { RowKind::Empirical },
                source,
            })
            .collect();
        let text = region_csv_string(&rows);
        let parsed = parse_region_csv(&text).unwrap();
        prop_assert_eq!(parsed.len(), rows.len());
        // serialization sorts by abscissa, so compare as multisets via sorting
        let mut expect = rows;
        expect.sort_by(|p, q| p.x.total_cmp(&q.x));
        for (p, q) in parsed.iter().zip(&expect) {
            prop_assert!((p.x - q.x).abs() < 1e-9);
            prop_assert!((p.y_min - q.y_min).abs() < 1e-9);
            prop_assert!((p.y_max - q.y_max).abs() < 1e-9);
            prop_assert_eq!(p.kind, q.kind);
            prop_assert_eq!(&p.source, &q.source);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn scan_is_deterministic_and_coverage_grows(
        seed in 0u64..1_000,
        theta in 1e-2..PI / 2.0,
    ) {
        let pair = QubitPair::from_angle(theta).unwrap();
        let small = scan_qubit_pair(&pair, 40, 20_000, 2_000, seed).unwrap();
        let again = scan_qubit_pair(&pair, 40, 20_000, 2_000, seed).unwrap();
        prop_assert_eq!(&small, &again);
        let large = scan_qubit_pair(&pair, 40, 40_000, 2_000, seed).unwrap();
        for (s, l) in small.bins.iter().zip(&large.bins) {
            prop_assert!(l.count >= s.count);
            prop_assert!(l.min_u2 <= s.min_u2);
            prop_assert!(l.max_u2 >= s.max_u2);
        }
    }
}
