//! Brute-force ground truth: deterministic scans over parameterized state
//! families, binned into empirical envelopes.
//!
//! All scans are reproducible: randomness comes only from the caller's seed
//! through a counter-based generator, lattice scans use no randomness at all,
//! and parallel chunks own sub-seeds derived from (seed, chunk index) so the
//! merged result does not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quantum::{qubit_variance, QubitState, Scale, Vec3};
use crate::qubit_regions::QubitPair;
use crate::qutrit_regions::{extended_variances, gm_variances, ExtendedPairParams,
    GellMannStateParams};

/// One abscissa bin of a scan: how many samples fell in it and the extreme
/// ordinate values seen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanBin {
    pub count: u64,
    pub min_u2: f64,
    pub max_u2: f64,
}

impl ScanBin {
    fn empty() -> Self {
        Self {
            count: 0,
            min_u2: f64::INFINITY,
            max_u2: f64::NEG_INFINITY,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }
}

/// Empirical raster of an uncertainty region over the abscissa range [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct RegionScan {
    pub scale: Scale,
    pub bin_count: usize,
    pub bins: Vec<ScanBin>,
    pub seed: u64,
    pub total_samples: u64,
}

impl RegionScan {
    pub fn new(scale: Scale, bin_count: usize, seed: u64) -> Result<Self> {
        if bin_count == 0 {
            return Err(Error::invalid("bin_count must be at least 1"));
        }
        Ok(Self {
            scale,
            bin_count,
            bins: vec![ScanBin::empty(); bin_count],
            seed,
            total_samples: 0,
        })
    }

    /// Bins are half-open [lo, hi) except the last, which is closed at 1.
    pub fn bin_index(&self, u1: f64) -> usize {
        let i = (u1 * self.bin_count as f64).floor() as isize;
        i.clamp(0, self.bin_count as isize - 1) as usize
    }

    /// Abscissa interval covered by bin `i`.
    pub fn bin_range(&self, i: usize) -> (f64, f64) {
        let w = 1.0 / self.bin_count as f64;
        (i as f64 * w, (i + 1) as f64 * w)
    }

    pub fn record(&mut self, u1: f64, u2: f64) {
        let i = self.bin_index(u1);
        let b = &mut self.bins[i];
        b.count += 1;
        b.min_u2 = b.min_u2.min(u2);
        b.max_u2 = b.max_u2.max(u2);
        self.total_samples += 1;
    }

    /// Interval union per bin; panics on shape mismatch, which is a caller
    /// bug, not data-dependent.
    pub fn merge(&mut self, other: &RegionScan) {
        assert_eq!(self.bin_count, other.bin_count);
        assert_eq!(self.scale, other.scale);
        for (b, o) in self.bins.iter_mut().zip(&other.bins) {
            b.count += o.count;
            b.min_u2 = b.min_u2.min(o.min_u2);
            b.max_u2 = b.max_u2.max(o.max_u2);
        }
        self.total_samples += other.total_samples;
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ chunk.wrapping_mul(0xA076_1D64_78BD_642F)))
}

const BALL_CHUNK: u64 = 1 << 14;

/// Scans the qubit pair region in standard-deviation scale: a uniform φ grid
/// of in-plane pure states plus uniform samples of the closed Bloch ball.
pub fn scan_qubit_pair(
    pair: &QubitPair<f64>,
    bins: usize,
    n_ball: u64,
    n_sphere: u64,
    seed: u64,
) -> Result<RegionScan> {
    if n_ball == 0 || n_sphere == 0 {
        return Err(Error::invalid("sample counts must be at least 1"));
    }
    let mut scan = RegionScan::new(Scale::StdDev, bins, seed)?;
    let a = pair.a();
    let b = pair.b();
    let perp = pair.a_perp();

    let record_r = |scan: &mut RegionScan, r: Vec3<f64>| {
        let ea = a.dot(r);
        let eb = b.dot(r);
        let da = (1.0 - ea * ea).max(0.0).sqrt();
        let db = (1.0 - eb * eb).max(0.0).sqrt();
        scan.record(da, db);
    };

    let tau = std::f64::consts::TAU;
    for i in 0..n_sphere {
        let phi = tau * i as f64 / n_sphere as f64;
        let r = a.scale(phi.cos()) + perp.scale(phi.sin());
        record_r(&mut scan, r);
    }

    let chunks = n_ball.div_ceil(BALL_CHUNK);
    let partials: Vec<RegionScan> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut part = RegionScan::new(Scale::StdDev, bins, seed).unwrap();
            let mut rng = chunk_rng(seed, c);
            let lo = c * BALL_CHUNK;
            let hi = ((c + 1) * BALL_CHUNK).min(n_ball);
            for _ in lo..hi {
                let z: f64 = 1.0 - 2.0 * rng.gen::<f64>();
                let phi: f64 = tau * rng.gen::<f64>();
                let radius = rng.gen::<f64>().cbrt();
                let s = (1.0 - z * z).max(0.0).sqrt();
                let r = Vec3::new(radius * s * phi.cos(), radius * s * phi.sin(), radius * z);
                record_r(&mut part, r);
            }
            part
        })
        .collect();
    for p in &partials {
        scan.merge(p);
    }
    scan.total_samples = scan.bins.iter().map(|b| b.count).sum();
    Ok(scan)
}

/// Lattice scan of the extended-qubit family over `w ∈ [0,1]` and `(r_a, r_b)`
/// in the closed unit disk. No randomness; `seed` is recorded as 0.
pub fn scan_extended_pair(
    cos_ab: f64,
    grid_w: usize,
    grid_r: usize,
    bins: usize,
    scale: Scale,
) -> Result<RegionScan> {
    if grid_w < 2 || grid_r < 2 {
        return Err(Error::invalid("lattice grids must have at least 2 points"));
    }
    let mut scan = RegionScan::new(scale, bins, 0)?;
    let partials: Vec<RegionScan> = (0..grid_w)
        .into_par_iter()
        .map(|iw| {
            let mut part = RegionScan::new(scale, bins, 0).unwrap();
            let w = iw as f64 / (grid_w - 1) as f64;
            for ia in 0..grid_r {
                let ra = -1.0 + 2.0 * ia as f64 / (grid_r - 1) as f64;
                for ib in 0..grid_r {
                    let rb = -1.0 + 2.0 * ib as f64 / (grid_r - 1) as f64;
                    if ra * ra + rb * rb > 1.0 {
                        continue;
                    }
                    let p = ExtendedPairParams { w, r_a: ra, r_b: rb };
                    let (va, vb) = extended_variances(&p, cos_ab).unwrap();
                    match scale {
                        Scale::Variance => part.record(va, vb),
                        Scale::StdDev => part.record(va.sqrt(), vb.sqrt()),
                    }
                }
            }
            part
        })
        .collect();
    for p in &partials {
        scan.merge(p);
    }
    Ok(scan)
}

/// Lattice scan of the Gell-Mann family over `(ρ11, ρ33)` in the simplex,
/// `μ = |ρ13|²/(ρ11 ρ33) ∈ [0,1]` and the phase of `ρ13` in `[0, π]`.
/// Every lattice point is a valid state by construction. Variance scale.
pub fn scan_gellmann(
    n11: usize,
    n33: usize,
    nmu: usize,
    nph: usize,
    bins: usize,
) -> Result<RegionScan> {
    scan_gellmann_filtered(n11, n33, nmu, nph, bins, |_, _| true)
}

/// Same lattice as [`scan_gellmann`] but records only the variance pairs the
/// `filter` accepts. Used to isolate one lobe of the disconnected small-x
/// part of the region.
pub fn scan_gellmann_filtered(
    n11: usize,
    n33: usize,
    nmu: usize,
    nph: usize,
    bins: usize,
    filter: impl Fn(f64, f64) -> bool + Sync,
) -> Result<RegionScan> {
    if n11 < 2 || n33 < 2 || nmu < 2 || nph < 2 {
        return Err(Error::invalid("lattice grids must have at least 2 points"));
    }
    let mut scan = RegionScan::new(Scale::Variance, bins, 0)?;
    let partials: Vec<RegionScan> = (0..n11)
        .into_par_iter()
        .map(|i| {
            let mut part = RegionScan::new(Scale::Variance, bins, 0).unwrap();
            let rho11 = i as f64 / (n11 - 1) as f64;
            for j in 0..n33 {
                let rho33 = j as f64 / (n33 - 1) as f64;
                if rho11 + rho33 > 1.0 + 1e-15 {
                    continue;
                }
                for k in 0..nmu {
                    let mu = k as f64 / (nmu - 1) as f64;
                    let modulus = (mu * rho11 * rho33).max(0.0).sqrt();
                    for l in 0..nph {
                        let phase = std::f64::consts::PI * l as f64 / (nph - 1) as f64;
                        let p = GellMannStateParams {
                            rho11,
                            rho33,
                            re13: modulus * phase.cos(),
                            im13: modulus * phase.sin(),
                        };
                        let (va, vb) = gm_variances(&p);
                        if filter(va, vb) {
                            part.record(va, vb);
                        }
                    }
                }
            }
            part
        })
        .collect();
    for p in &partials {
        scan.merge(p);
    }
    Ok(scan)
}

/// Which envelope of a scan is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeSide {
    Min,
    Max,
}

/// One compared bin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeEntry {
    /// Bin center abscissa.
    pub x: f64,
    /// Analytic value at the bin center.
    pub analytic: f64,
    /// Empirical envelope value of the bin.
    pub empirical: f64,
    /// Distance from the empirical value to the analytic range over the bin.
    pub gap: f64,
}

/// Result of comparing an analytic envelope against a scan.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeReport {
    pub entries: Vec<EnvelopeEntry>,
    pub excluded_bins: usize,
    pub max_gap: f64,
    pub tol: f64,
    pub pass: bool,
}

pub const MIN_BIN_OCCUPANCY: u64 = 50;

/// Compares an analytic envelope function with the empirical envelope of a
/// scan. A bin's gap is the distance from its empirical extremum to the range
/// of the analytic function over the bin interval, so steep boundary slopes do
/// not register as disagreement. Bins with fewer than `min_count` samples are
/// excluded; if every bin is excluded the comparison is inconclusive.
pub fn compare_envelopes(
    analytic: impl Fn(f64) -> f64,
    scan: &RegionScan,
    which: EnvelopeSide,
    tol: f64,
    min_count: u64,
) -> Result<EnvelopeReport> {
    if tol <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let mut entries = Vec::new();
    let mut excluded = 0usize;
    let mut max_gap = 0.0f64;
    const PROBES: usize = 9;
    for (i, bin) in scan.bins.iter().enumerate() {
        if bin.count < min_count {
            excluded += 1;
            continue;
        }
        let (lo, hi) = scan.bin_range(i);
        let hi = hi.min(1.0);
        let mut amin = f64::INFINITY;
        let mut amax = f64::NEG_INFINITY;
        for p in 0..PROBES {
            let x = lo + (hi - lo) * p as f64 / (PROBES - 1) as f64;
            let v = analytic(x);
            if v.is_finite() {
                amin = amin.min(v);
                amax = amax.max(v);
            }
        }
        let center = 0.5 * (lo + hi);
        let empirical = match which {
            EnvelopeSide::Min => bin.min_u2,
            EnvelopeSide::Max => bin.max_u2,
        };
        let gap = if empirical < amin {
            amin - empirical
        } else if empirical > amax {
            empirical - amax
        } else {
            0.0
        };
        max_gap = max_gap.max(gap);
        entries.push(EnvelopeEntry {
            x: center,
            analytic: analytic(center),
            empirical,
            gap,
        });
    }
    if entries.is_empty() {
        return Err(Error::Inconclusive(
            "every bin fell below the occupancy floor".into(),
        ));
    }
    Ok(EnvelopeReport {
        entries,
        excluded_bins: excluded,
        max_gap,
        tol,
        pass: max_gap <= tol,
    })
}

/// Soundness spot-check: draws `n` seeded samples from the qubit ball and
/// confirms each passes the state constructor and reproduces its recorded
/// variance. Used by the verification suites.
pub fn spot_check_qubit_states(pair: &QubitPair<f64>, n: u64, seed: u64) -> Result<()> {
    let mut rng = chunk_rng(seed, u64::MAX);
    let (a, b) = pair.observables();
    for _ in 0..n {
        let z: f64 = 1.0 - 2.0 * rng.gen::<f64>();
        let phi: f64 = std::f64::consts::TAU * rng.gen::<f64>();
        let radius = rng.gen::<f64>().cbrt();
        let s = (1.0 - z * z).max(0.0).sqrt();
        let r = Vec3::new(radius * s * phi.cos(), radius * s * phi.sin(), radius * z);
        let state = QubitState::new(r)?;
        for obs in [a, b] {
            let v = qubit_variance(&obs, &state);
            if !(0.0..=1.0 + 1e-12).contains(&v) {
                return Err(Error::invariant("variance outside [0, 1]"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binning_is_half_open_with_closed_last() {
        let scan = RegionScan::new(Scale::StdDev, 10, 0).unwrap();
        assert_eq!(scan.bin_index(0.0), 0);
        assert_eq!(scan.bin_index(0.1), 1);
        assert_eq!(scan.bin_index(0.999), 9);
        assert_eq!(scan.bin_index(1.0), 9);
    }

    #[test]
    fn qubit_scan_is_deterministic() {
        let pair = QubitPair::from_angle(std::f64::consts::FRAC_PI_4).unwrap();
        let s1 = scan_qubit_pair(&pair, 50, 20_000, 1_000, 7).unwrap();
        let s2 = scan_qubit_pair(&pair, 50, 20_000, 1_000, 7).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn orthogonal_pair_circle() {
        // at θ=π/2 the in-plane grid fills Δ(B) = √(1−Δ(A)²)
        let pair = QubitPair::from_angle(std::f64::consts::FRAC_PI_2).unwrap();
        let scan = scan_qubit_pair(&pair, 200, 1, 100_000, 0).unwrap();
        let i = scan.bin_index(0.6);
        let bin = scan.bins[i];
        assert!(bin.count > 0);
        assert!((bin.min_u2 - 0.8).abs() < 5e-3);
    }

    #[test]
    fn qubit_scan_matches_theorem_boundaries() {
        use crate::qubit_regions::{max_sdev_b, min_sdev_b};
        let pair = QubitPair::from_angle(std::f64::consts::FRAC_PI_4).unwrap();
        let scan = scan_qubit_pair(&pair, 200, 1_000_000, 100_000, 0).unwrap();
        let lo = compare_envelopes(
            |x| min_sdev_b(&pair, x).unwrap(),
            &scan,
            EnvelopeSide::Min,
            5e-3,
            MIN_BIN_OCCUPANCY,
        )
        .unwrap();
        assert!(lo.pass, "lower envelope max_gap = {}", lo.max_gap);
        let hi = compare_envelopes(
            |x| max_sdev_b(&pair, x).unwrap(),
            &scan,
            EnvelopeSide::Max,
            5e-3,
            MIN_BIN_OCCUPANCY,
        )
        .unwrap();
        assert!(hi.pass, "upper envelope max_gap = {}", hi.max_gap);
    }

    #[test]
    fn fault_injection_fails() {
        use crate::qubit_regions::min_sdev_b;
        let pair = QubitPair::from_angle(std::f64::consts::FRAC_PI_8).unwrap();
        let scan = scan_qubit_pair(&pair, 100, 200_000, 50_000, 3).unwrap();
        let report = compare_envelopes(
            |x| min_sdev_b(&pair, x).unwrap() + 0.1,
            &scan,
            EnvelopeSide::Min,
            5e-3,
            MIN_BIN_OCCUPANCY,
        )
        .unwrap();
        assert!(!report.pass);
        assert!((report.max_gap - 0.1).abs() < 0.02);
    }

    #[test]
    fn empty_scan_is_inconclusive() {
        let scan = RegionScan::new(Scale::StdDev, 10, 0).unwrap();
        assert!(matches!(
            compare_envelopes(|_| 0.0, &scan, EnvelopeSide::Min, 1e-3, 50),
            Err(Error::Inconclusive(_))
        ));
    }

    #[test]
    fn extended_scan_hits_known_minimum() {
        let scan = scan_extended_pair(0.0, 81, 81, 50, Scale::Variance).unwrap();
        let i = scan.bin_index(0.5);
        assert!((scan.bins[i].min_u2 - 0.25).abs() < 5e-3);
        // (0,0) occupied by the w = 0 cell
        assert!(scan.bins[0].min_u2 <= 1e-12);
    }

    #[test]
    fn gellmann_scan_small() {
        let scan = scan_gellmann(60, 60, 9, 5, 100).unwrap();
        // rightmost bin holds only Var(B) ≈ ½
        let last = scan.bins[scan.bin_count - 1];
        assert!(last.count > 0);
        assert!(last.min_u2 > 0.5 - 0.05 && last.max_u2 < 0.5 + 0.05);
        // the Var(A)=0 bin shows the lobe gap
        let first = scan.bins[0];
        assert!(first.min_u2 < 0.1 && first.max_u2 > 0.9);
    }

    #[test]
    fn merge_is_interval_union() {
        let mut s1 = RegionScan::new(Scale::Variance, 4, 0).unwrap();
        let mut s2 = RegionScan::new(Scale::Variance, 4, 0).unwrap();
        s1.record(0.1, 0.5);
        s2.record(0.1, 0.2);
        s1.merge(&s2);
        let b = s1.bins[0];
        assert_eq!((b.count, b.min_u2, b.max_u2), (2, 0.2, 0.5));
    }

    #[test]
    fn spot_check_passes() {
        let pair = QubitPair::from_angle(1.0).unwrap();
        spot_check_qubit_states(&pair, 1_000, 42).unwrap();
    }
}
