//! Verification suites: each runs a named battery of analytic-vs-oracle
//! checks and reports one machine-readable line per check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::FormulaId;
use crate::error::{Error, Result};
use crate::oracle::{
    scan_extended_pair, scan_gellmann, scan_gellmann_filtered, scan_qubit_pair, EnvelopeSide,
    RegionScan, MIN_BIN_OCCUPANCY,
};
use crate::plot::{equivalence_scan, qp_envelope_curves};
use crate::quantum::{qubit_variance, QubitObservable, QubitState, Scale, Vec3};
use crate::qubit_regions::{
    lagrange_identity_residuals, max_sdev_b, min_sdev_b, planar_decomposition_check,
    schrodinger_equality_residual, QubitPair,
};
use crate::qutrit_regions::{
    extended_min_var_b, gm_boundary_segments, gm_max_var_b, gm_min_var_b, gm_schrodinger_gap,
    gm_segment_value,
};

/// Knobs shared by all suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub samples: u64,
    pub seed: u64,
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            samples: 1_000_000,
            seed: 0,
            tol: 5e-3,
        }
    }
}

/// Outcome of one check. `measured` is the quantity the check compares
/// against its tolerance (a maximum residual or envelope gap, except where a
/// check's description says otherwise).
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub measured: f64,
    pub tol: f64,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "{} {} {:.6e} {:.1e}",
            self.name,
            if self.pass { "pass" } else { "fail" },
            self.measured,
            self.tol
        )
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "qubit-thm1",
    "qubit-identities",
    "triple",
    "extended",
    "gellmann-curves",
    "gellmann-gap",
    "qp-equivalence",
];

/// Runs one named suite.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    match name {
        "qubit-thm1" => suite_qubit_thm1(cfg),
        "qubit-identities" => suite_qubit_identities(cfg),
        "triple" => suite_triple(cfg),
        "extended" => suite_extended(cfg),
        "gellmann-curves" => suite_gellmann_curves(cfg),
        "gellmann-gap" => suite_gellmann_gap(cfg),
        "qp-equivalence" => suite_qp_equivalence(cfg),
        other => Err(Error::invalid(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?}"
        ))),
    }
}

fn check(name: impl Into<String>, measured: f64, tol: f64) -> CheckResult {
    CheckResult {
        name: name.into(),
        pass: measured <= tol,
        measured,
        tol,
    }
}

/// Maximum over usable bins of the distance from the empirical envelope to
/// the analytic range over the bin, restricted to bins whose center lies in
/// `domain`.
fn envelope_gap(
    scan: &RegionScan,
    side: EnvelopeSide,
    domain: (f64, f64),
    f: impl Fn(f64) -> f64,
) -> Result<f64> {
    const PROBES: usize = 9;
    let mut max_gap: f64 = 0.0;
    let mut used = 0usize;
    for (i, bin) in scan.bins.iter().enumerate() {
        if bin.count < MIN_BIN_OCCUPANCY {
            continue;
        }
        let (lo, hi) = scan.bin_range(i);
        let center = 0.5 * (lo + hi);
        if center < domain.0 || center > domain.1 {
            continue;
        }
        let plo = lo.max(domain.0);
        let phi = hi.min(domain.1).min(1.0);
        let mut amin = f64::INFINITY;
        let mut amax = f64::NEG_INFINITY;
        for p in 0..PROBES {
            let x = plo + (phi - plo) * p as f64 / (PROBES - 1) as f64;
            let v = f(x);
            if v.is_finite() {
                amin = amin.min(v);
                amax = amax.max(v);
            }
        }
        let e = match side {
            EnvelopeSide::Min => bin.min_u2,
            EnvelopeSide::Max => bin.max_u2,
        };
        let gap = if e < amin {
            amin - e
        } else if e > amax {
            e - amax
        } else {
            0.0
        };
        max_gap = max_gap.max(gap);
        used += 1;
    }
    if used == 0 {
        return Err(Error::Inconclusive(format!(
            "no usable bins in domain [{}, {}]",
            domain.0, domain.1
        )));
    }
    Ok(max_gap)
}

const PANEL_ANGLES: &[(&str, f64)] = &[
    ("pi-16", std::f64::consts::PI / 16.0),
    ("pi-8", std::f64::consts::PI / 8.0),
    ("pi-4", std::f64::consts::PI / 4.0),
    ("3pi-8", 3.0 * std::f64::consts::PI / 8.0),
    ("7pi-16", 7.0 * std::f64::consts::PI / 16.0),
    ("pi-2", std::f64::consts::PI / 2.0),
];

fn suite_qubit_thm1(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let n_ball = cfg.samples.max(10_000);
    let n_sphere = (cfg.samples / 10).max(100_000);
    let mut out = Vec::new();
    for &(label, theta) in PANEL_ANGLES {
        let pair = QubitPair::from_angle(theta)?;
        let scan = scan_qubit_pair(&pair, 200, n_ball, n_sphere, cfg.seed)?;
        let lo = envelope_gap(&scan, EnvelopeSide::Min, (0.0, 1.0), |x| {
            min_sdev_b(&pair, x).unwrap()
        })?;
        out.push(check(format!("qubit-thm1/{label}/lower"), lo, cfg.tol));
        let hi = envelope_gap(&scan, EnvelopeSide::Max, (0.0, 1.0), |x| {
            max_sdev_b(&pair, x).unwrap()
        })?;
        out.push(check(format!("qubit-thm1/{label}/upper"), hi, cfg.tol));
    }
    Ok(out)
}

fn unit_vector(rng: &mut ChaCha8Rng) -> Vec3<f64> {
    loop {
        let v = Vec3::new(
            rng.gen::<f64>() * 2.0 - 1.0,
            rng.gen::<f64>() * 2.0 - 1.0,
            rng.gen::<f64>() * 2.0 - 1.0,
        );
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v.scale(1.0 / n);
        }
    }
}

fn ball_vector(rng: &mut ChaCha8Rng) -> Vec3<f64> {
    unit_vector(rng).scale(rng.gen::<f64>().cbrt())
}

fn suite_qubit_identities(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let n = cfg.samples.clamp(1_000, 100_000);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut max_identity: f64 = 0.0;
    let mut max_schrodinger: f64 = 0.0;
    let mut max_planar: f64 = 0.0;
    for _ in 0..n {
        let a = unit_vector(&mut rng);
        let b = unit_vector(&mut rng);
        let r = ball_vector(&mut rng);
        let (r1, r2, r3) = lagrange_identity_residuals(a, b, r);
        max_identity = max_identity.max(r1).max(r2).max(r3);
        if let Ok(pair) = QubitPair::new(a, b) {
            let state = QubitState::new(r)?;
            max_schrodinger = max_schrodinger.max(schrodinger_equality_residual(&pair, &state));
            // unit in-plane combination for the decomposition lemma
            let t: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
            let in_plane = a.scale(t.cos()) + pair.a_perp().scale(t.sin());
            if let Some(u) = in_plane.normalized() {
                max_planar = max_planar.max(planar_decomposition_check(a, b, u)?);
            }
        }
    }
    Ok(vec![
        check("qubit-identities/lagrange", max_identity, 1e-12),
        check("qubit-identities/schrodinger-equality", max_schrodinger, 1e-11),
        check("qubit-identities/planar-decomposition", max_planar, 1e-10),
    ])
}

fn suite_triple(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let n = cfg.samples.clamp(10_000, 1_000_000);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (sx, sy, sz) = (
        QubitObservable::<f64>::sigma_x(),
        QubitObservable::<f64>::sigma_y(),
        QubitObservable::<f64>::sigma_z(),
    );
    let mut max_residual: f64 = 0.0;
    let mut iff_violations = 0u64;
    let mut max_pure_defect: f64 = 0.0;
    let mut max_saturation_defect: f64 = 0.0;
    for i in 0..n {
        let r = if i % 4 == 0 {
            unit_vector(&mut rng)
        } else {
            ball_vector(&mut rng)
        };
        let state = QubitState::new(r)?;
        let sum = qubit_variance(&sx, &state)
            + qubit_variance(&sy, &state)
            + qubit_variance(&sz, &state);
        let r2 = r.norm_sq();
        max_residual = max_residual.max((sum - (3.0 - r2)).abs());
        let saturated = (sum - 2.0).abs() < 1e-9;
        let pure = r.norm() > 1.0 - 1e-9;
        if saturated != pure {
            iff_violations += 1;
        }
        if pure {
            max_pure_defect = max_pure_defect.max((sum - 2.0).abs());
        }
        // Heisenberg saturation witnesses for (σx, σy): kill one component
        let mut w = r;
        if i % 2 == 0 {
            w.x = 0.0;
        } else {
            w.y = 0.0;
        }
        let ws = QubitState::new(w)?;
        let fixed = if i % 2 == 0 {
            qubit_variance(&sx, &ws)
        } else {
            qubit_variance(&sy, &ws)
        };
        max_saturation_defect = max_saturation_defect.max((fixed - 1.0).abs());
    }
    Ok(vec![
        check("triple/sum-identity", max_residual, 1e-12),
        check("triple/saturation-iff-pure", iff_violations as f64, 0.0),
        check("triple/pure-sum-is-two", max_pure_defect, 1e-9),
        check("triple/heisenberg-witness", max_saturation_defect, 1e-12),
    ])
}

fn suite_extended(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    // odd grid so r = 0 and r = ±1 are exact lattice points
    let scan = scan_extended_pair(0.0, 401, 401, 200, Scale::Variance)?;
    let mut max_gap: f64 = 0.0;
    for k in 1..=19 {
        let x = 0.05 * k as f64;
        let i = scan.bin_index(x);
        let bin = scan.bins[i];
        if bin.count < MIN_BIN_OCCUPANCY {
            return Err(Error::Inconclusive(format!("sparse bin at X = {x}")));
        }
        let (lo, hi) = scan.bin_range(i);
        let candidates = [lo, x, hi.min(1.0)];
        let amin = candidates
            .iter()
            .map(|&t| extended_min_var_b(t).unwrap())
            .fold(f64::INFINITY, f64::min);
        let amax = candidates
            .iter()
            .map(|&t| extended_min_var_b(t).unwrap())
            .fold(f64::NEG_INFINITY, f64::max);
        let e = bin.min_u2;
        let gap = if e < amin {
            amin - e
        } else if e > amax {
            e - amax
        } else {
            0.0
        };
        max_gap = max_gap.max(gap);
    }
    let corner0 = scan.bins[0].min_u2;
    let corner1 = scan.bins[scan.bin_count - 1].min_u2;
    let corner_top = scan.bins[0].max_u2;
    Ok(vec![
        check("extended/min-var-envelope", max_gap, cfg.tol),
        check("extended/corner-0-0", corner0.abs(), 1e-9),
        check("extended/corner-1-0", corner1.abs(), 1e-9),
        check("extended/corner-0-1", (corner_top - 1.0).abs(), 1e-9),
    ])
}

/// Midline of the analytic gap between the two lobes, used only to attribute
/// a sample to its lobe for `Var(A) ≤ 3/16`.
fn lobe_midline(x: f64) -> f64 {
    let top = gm_segment_value::<f64>(FormulaId::GmLobeTop, x).unwrap();
    let bottom = gm_segment_value::<f64>(FormulaId::GmGapLine, x).unwrap();
    0.5 * (top + bottom)
}

// odd diagonal grids so ρ11 = ½ (the x = 1 corner) is an exact lattice point
const GM_LATTICE: (usize, usize, usize, usize) = (801, 801, 25, 8);

fn suite_gellmann_curves(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let (n11, n33, nmu, nph) = GM_LATTICE;
    let scan = scan_gellmann(n11, n33, nmu, nph, 400)?;
    let lobe_cut = 3.0 / 16.0;
    let lower_lobe = scan_gellmann_filtered(n11, n33, nmu, nph, 400, |x, y| {
        x <= lobe_cut && y <= lobe_midline(x)
    })?;
    let upper_lobe = scan_gellmann_filtered(n11, n33, nmu, nph, 400, |x, y| {
        x <= lobe_cut && y > lobe_midline(x)
    })?;
    let mut out = Vec::new();

    // soundness: each analytic segment against the envelope that owns it
    for seg in gm_boundary_segments::<f64>() {
        let f = seg.formula;
        let (scan_ref, side) = match f {
            FormulaId::GmUpperFlat | FormulaId::GmUpperLine | FormulaId::GmUpperRoot => {
                (&scan, EnvelopeSide::Max)
            }
            FormulaId::GmLowerRoot
            | FormulaId::GmLowerParabola
            | FormulaId::GmLowerLine
            | FormulaId::GmJoinLine
            | FormulaId::GmLobeBottom => (&scan, EnvelopeSide::Min),
            FormulaId::GmLobeTop => (&lower_lobe, EnvelopeSide::Max),
            FormulaId::GmGapLine => (&upper_lobe, EnvelopeSide::Min),
            _ => unreachable!("gm_boundary_segments yields only Gell-Mann formulas"),
        };
        let gap = envelope_gap(scan_ref, side, seg.domain, |x| {
            gm_segment_value::<f64>(f, x).unwrap()
        })?;
        out.push(check(format!("gellmann-curves/{}", f.name()), gap, cfg.tol));
    }

    // completeness: every occupied bin's envelope sits on the assembly
    let lower_env = envelope_gap(&scan, EnvelopeSide::Min, (0.0, 1.0), gm_min_var_b)?;
    out.push(check("gellmann-curves/completeness-lower", lower_env, cfg.tol));
    let upper_env = envelope_gap(&scan, EnvelopeSide::Max, (0.0, 1.0), gm_max_var_b)?;
    out.push(check("gellmann-curves/completeness-upper", upper_env, cfg.tol));

    // endpoint table
    let at = |f, x: f64| gm_segment_value::<f64>(f, x).unwrap();
    let endpoint_defect = [
        (at(FormulaId::GmUpperFlat, 0.25) - at(FormulaId::GmUpperLine, 0.25)).abs(),
        (at(FormulaId::GmUpperLine, 0.75) - at(FormulaId::GmUpperRoot, 0.75)).abs(),
        (at(FormulaId::GmUpperRoot, 1.0) - at(FormulaId::GmLowerRoot, 1.0)).abs(),
        (at(FormulaId::GmLowerRoot, 15.0 / 16.0) - at(FormulaId::GmLowerParabola, 15.0 / 16.0))
            .abs(),
        (at(FormulaId::GmLowerParabola, 13.0 / 16.0) - at(FormulaId::GmLowerLine, 13.0 / 16.0))
            .abs(),
        at(FormulaId::GmLowerLine, 0.25).abs(),
        (at(FormulaId::GmJoinLine, 15.0 / 64.0) - at(FormulaId::GmLobeBottom, 15.0 / 64.0)).abs(),
        (at(FormulaId::GmLobeTop, 3.0 / 16.0) - at(FormulaId::GmGapLine, 3.0 / 16.0)).abs(),
    ]
    .into_iter()
    .fold(0.0f64, f64::max);
    out.push(check("gellmann-curves/endpoint-table", endpoint_defect, 1e-12));

    // states with Var(A) = 1 carry only Var(B) = ½; the finite-width last bin
    // would legitimately span ½ ± √(bin width)/2, so restrict to the fiber
    let fiber = scan_gellmann_filtered(n11, n33, nmu, nph, 400, |x, _| x > 1.0 - 1e-12)?;
    let last = fiber.bins[fiber.bin_count - 1];
    let right_defect = (last.min_u2 - 0.5).abs().max((last.max_u2 - 0.5).abs());
    out.push(check("gellmann-curves/x1-bin-half", right_defect, cfg.tol));

    // the leftmost bin shows the two-lobe gap
    let first_lower = lower_lobe.bins[0];
    let first_upper = upper_lobe.bins[0];
    let gap_intrusion = first_lower.max_u2.max(0.0).max(1.0 - first_upper.min_u2.min(1.0));
    let in_band = !(first_lower.max_u2 < 0.1 && first_upper.min_u2 > 0.9);
    out.push(CheckResult {
        name: "gellmann-curves/x0-lobe-gap".into(),
        pass: !in_band,
        measured: gap_intrusion,
        tol: 0.1,
    });
    Ok(out)
}

fn suite_gellmann_gap(_cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let (min_b, f1) = gm_schrodinger_gap(1.0f64)?;
    let mut out = vec![
        check("gellmann-gap/f-at-1-is-zero", f1.abs(), 0.0),
        check("gellmann-gap/gap-at-1-is-half", (min_b - f1 - 0.5).abs(), 0.0),
    ];
    let mut min_gap = f64::INFINITY;
    for k in 0..=20 {
        let x = 0.99 + 0.01 * k as f64 / 20.0;
        let (m, f) = gm_schrodinger_gap(x)?;
        min_gap = min_gap.min(m - f);
    }
    out.push(CheckResult {
        name: "gellmann-gap/grid-positive".into(),
        pass: min_gap > 0.0,
        measured: min_gap,
        tol: 0.0,
    });
    Ok(out)
}

fn suite_qp_equivalence(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let env = qp_envelope_curves(0.5, &[0.5, 1.0, 2.0], 200)?;
    let tangency_defect = env
        .tangencies
        .iter()
        .map(|&(x, y)| (x * y - 0.5).abs())
        .fold(0.0f64, f64::max);
    let mut agree = true;
    for &(xi, eta, c) in &[(1.0, 1.0, 1.0), (1.0, 0.4, 0.5), (2.0, 1.0, 0.5)] {
        agree &= equivalence_scan(xi, eta, c, 1000)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..500 {
        let xi = rng.gen::<f64>() * 2.0 + 1e-3;
        let eta = rng.gen::<f64>() * 2.0 + 1e-3;
        let c = rng.gen::<f64>() * 2.0 + 1e-3;
        agree &= equivalence_scan(xi, eta, c, 257)?;
    }
    Ok(vec![
        check("qp-equivalence/tangency-on-hyperbola", tangency_defect, 1e-10),
        CheckResult {
            name: "qp-equivalence/additive-multiplicative".into(),
            pass: agree,
            measured: if agree { 0.0 } else { 1.0 },
            tol: 0.0,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            samples: 20_000,
            seed: 1,
            tol: 5e-3,
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nosuch", &small()).is_err());
    }

    #[test]
    fn identities_suite_passes() {
        let results = run_suite("qubit-identities", &small()).unwrap();
        assert!(results.iter().all(|c| c.pass), "{results:?}");
    }

    #[test]
    fn triple_suite_passes() {
        let results = run_suite("triple", &small()).unwrap();
        assert!(results.iter().all(|c| c.pass), "{results:?}");
    }

    #[test]
    fn gap_suite_passes() {
        let results = run_suite("gellmann-gap", &small()).unwrap();
        assert!(results.iter().all(|c| c.pass), "{results:?}");
    }

    #[test]
    fn qp_suite_passes() {
        let results = run_suite("qp-equivalence", &small()).unwrap();
        assert!(results.iter().all(|c| c.pass), "{results:?}");
    }

    #[test]
    fn check_line_format() {
        let c = check("demo/check", 1.5e-4, 5e-3);
        let line = c.line();
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields.len(), 4);
        assert_eq!(fields[0], "demo/check");
        assert_eq!(fields[1], "pass");
    }
}
