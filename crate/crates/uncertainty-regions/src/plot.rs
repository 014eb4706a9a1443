//! CSV and SVG emission for curves and scans, plus the position–momentum
//! envelope figure and the additive↔multiplicative bound equivalence check.
//!
//! Output is deterministic: fixed number formatting, '.' decimal separator,
//! '\n' line endings, stable row ordering.

use std::fmt::Write as _;
use std::path::Path;

use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::oracle::RegionScan;

/// Stroke style of a plotted curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveStyle {
    Solid,
    Dashed,
    Thin,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotCurve {
    pub label: String,
    pub style: CurveStyle,
    pub points: Vec<(f64, f64)>,
}

/// A complete figure description.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub curves: Vec<PlotCurve>,
    pub raster: Option<RegionScan>,
}

impl PlotSpec {
    pub fn new(
        title: impl Into<String>,
        x_label: impl Into<String>,
        y_label: impl Into<String>,
        x_range: (f64, f64),
        y_range: (f64, f64),
    ) -> Result<Self> {
        for (lo, hi) in [x_range, y_range] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::invalid("axis range must be finite with lo < hi"));
            }
        }
        Ok(Self {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            x_range,
            y_range,
            curves: Vec::new(),
            raster: None,
        })
    }
}

/// The position–momentum figure: hyperbola `xy = C` with, for each `ℓ`, the
/// tangent line `x/ℓ + ℓy = 2√C` and the tangent ellipse `x²/ℓ² + ℓ²y² = 2C`.
/// All three touch at `(ℓ√C, √C/ℓ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QpEnvelope {
    pub spec: PlotSpec,
    /// One tangency point per requested `ℓ`.
    pub tangencies: Vec<(f64, f64)>,
}

pub fn qp_envelope_curves(c: f64, ell_values: &[f64], grid_n: usize) -> Result<QpEnvelope> {
    if c <= 0.0 || ell_values.iter().any(|&l| l <= 0.0) {
        return Err(Error::invalid("C and all ℓ values must be positive"));
    }
    if ell_values.is_empty() {
        return Err(Error::invalid("at least one ℓ value is required"));
    }
    if grid_n < 2 {
        return Err(Error::invalid("grid_n must be at least 2"));
    }
    let sqrt_c = c.sqrt();
    let l_max = ell_values.iter().cloned().fold(f64::MIN, f64::max);
    let x_max = 1.1 * (2.0 * l_max * sqrt_c).max(l_max * (2.0 * c).sqrt());
    let y_max = x_max;
    let mut spec = PlotSpec::new(
        "position-momentum uncertainty envelope",
        "position uncertainty",
        "momentum uncertainty",
        (0.0, x_max),
        (0.0, y_max),
    )?;

    let sample = |lo: f64, hi: f64, f: &dyn Fn(f64) -> f64| -> Vec<(f64, f64)> {
        (0..grid_n)
            .map(|i| {
                let x = lo + (hi - lo) * i as f64 / (grid_n - 1) as f64;
                (x, f(x))
            })
            .collect()
    };

    spec.curves.push(PlotCurve {
        label: "hyperbola".into(),
        style: CurveStyle::Solid,
        points: sample(c / y_max, x_max, &|x| c / x),
    });
    let mut tangencies = Vec::with_capacity(ell_values.len());
    for &l in ell_values {
        spec.curves.push(PlotCurve {
            label: format!("tangent-line ell={l}"),
            style: CurveStyle::Dashed,
            points: sample(0.0, 2.0 * l * sqrt_c, &|x| {
                2.0 * sqrt_c / l - x / (l * l)
            }),
        });
        spec.curves.push(PlotCurve {
            label: format!("tangent-ellipse ell={l}"),
            style: CurveStyle::Thin,
            points: sample(0.0, l * (2.0 * c).sqrt(), &|x| {
                (2.0 * c - x * x / (l * l)).max(0.0).sqrt() / l
            }),
        });
        tangencies.push((l * sqrt_c, sqrt_c / l));
    }
    Ok(QpEnvelope { spec, tangencies })
}

/// Checks the equivalence `ξη ≥ C ⟺ ∀x>0: ξ/x + xη ≥ 2√C` on a grid that
/// always contains the minimizing abscissa `x = √(ξ/η)`. Returns `true` when
/// the grid evidence agrees with the product test.
pub fn equivalence_scan(xi: f64, eta: f64, c: f64, x_grid: usize) -> Result<bool> {
    if xi <= 0.0 || eta <= 0.0 || c <= 0.0 {
        return Err(Error::invalid("ξ, η and C must be positive"));
    }
    if x_grid < 1 {
        return Err(Error::invalid("x_grid must be at least 1"));
    }
    let x_star = (xi / eta).sqrt();
    let threshold = 2.0 * c.sqrt();
    let additive = |x: f64| xi / x + x * eta;
    let mut grid: Vec<f64> = (1..=x_grid)
        .map(|k| 2.0 * x_star * k as f64 / x_grid as f64)
        .collect();
    grid.push(x_star);
    if xi * eta >= c {
        Ok(grid.iter().all(|&x| additive(x) >= threshold - 1e-12))
    } else {
        Ok(grid.iter().any(|&x| additive(x) < threshold - 1e-12))
    }
}

/// Whether a CSV row came from a formula or a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Analytic,
    Empirical,
}

impl RowKind {
    fn label(self) -> &'static str {
        match self {
            RowKind::Analytic => "analytic",
            RowKind::Empirical => "empirical",
        }
    }
}

/// One row of the region CSV schema `x,y_min,y_max,kind,source`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionRow {
    pub x: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub kind: RowKind,
    pub source: String,
}

/// Rows for sampled analytic curves: one row per point, `y_min = y_max`.
pub fn rows_from_curves(curves: &[SampledCurve<f64>]) -> Vec<RegionRow> {
    let mut rows = Vec::new();
    for c in curves {
        for &(x, y) in &c.points {
            rows.push(RegionRow {
                x,
                y_min: y,
                y_max: y,
                kind: RowKind::Analytic,
                source: c.segment.formula.name().to_string(),
            });
        }
    }
    rows
}

/// Rows for a scan: one row per non-empty bin, at the bin center.
pub fn rows_from_scan(scan: &RegionScan, source: &str) -> Vec<RegionRow> {
    scan.bins
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_empty())
        .map(|(i, b)| {
            let (lo, hi) = scan.bin_range(i);
            RegionRow {
                x: 0.5 * (lo + hi),
                y_min: b.min_u2,
                y_max: b.max_u2,
                kind: RowKind::Empirical,
                source: source.to_string(),
            }
        })
        .collect()
}

fn fmt_sig(v: f64) -> String {
    format!("{v:.11e}")
}

/// Serializes rows to the CSV schema, sorted by ascending `x` (stable for
/// ties), 12 significant digits per number.
pub fn region_csv_string(rows: &[RegionRow]) -> String {
    let mut sorted: Vec<&RegionRow> = rows.iter().collect();
    sorted.sort_by(|a, b| a.x.partial_cmp(&b.x).expect("finite abscissae"));
    let mut out = String::from("x,y_min,y_max,kind,source\n");
    for r in sorted {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_sig(r.x),
            fmt_sig(r.y_min),
            fmt_sig(r.y_max),
            r.kind.label(),
            r.source
        );
    }
    out
}

pub fn write_region_csv(path: &Path, rows: &[RegionRow]) -> Result<()> {
    std::fs::write(path, region_csv_string(rows)).map_err(|e| Error::io(path, e))
}

/// Parses text in the region CSV schema back into rows.
pub fn parse_region_csv(text: &str) -> Result<Vec<RegionRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some("x,y_min,y_max,kind,source") => {}
        _ => return Err(Error::Parse("missing region CSV header".into())),
    }
    let mut rows = Vec::new();
    for (n, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(Error::Parse(format!("row {}: expected 5 fields", n + 2)));
        }
        let num = |s: &str| -> Result<f64> {
            s.parse()
                .map_err(|_| Error::Parse(format!("row {}: bad number {s:?}", n + 2)))
        };
        let kind = match fields[3] {
            "analytic" => RowKind::Analytic,
            "empirical" => RowKind::Empirical,
            other => return Err(Error::Parse(format!("row {}: bad kind {other:?}", n + 2))),
        };
        rows.push(RegionRow {
            x: num(fields[0])?,
            y_min: num(fields[1])?,
            y_max: num(fields[2])?,
            kind,
            source: fields[4].to_string(),
        });
    }
    Ok(rows)
}

const SVG_SIZE: f64 = 800.0;
const MARGIN: f64 = 60.0;

fn svg_coord(v: f64, lo: f64, hi: f64, flip: bool) -> f64 {
    let t = (v - lo) / (hi - lo);
    let t = if flip { 1.0 - t } else { t };
    MARGIN + t * (SVG_SIZE - 2.0 * MARGIN)
}

fn style_attrs(style: CurveStyle) -> &'static str {
    match style {
        CurveStyle::Solid => "fill=\"none\" stroke=\"#1a1a8c\" stroke-width=\"2\"",
        CurveStyle::Dashed => {
            "fill=\"none\" stroke=\"#b02020\" stroke-width=\"1.5\" stroke-dasharray=\"8 4\""
        }
        CurveStyle::Thin => "fill=\"none\" stroke=\"#208040\" stroke-width=\"1\"",
    }
}

/// Renders the figure as a self-contained SVG 1.1 document: polylines for
/// curves, semi-transparent rects for the scan overlay, text for labels.
/// Identical specs produce byte-identical files.
pub fn svg_string(spec: &PlotSpec) -> String {
    let (xlo, xhi) = spec.x_range;
    let (ylo, yhi) = spec.y_range;
    let px = |x: f64| svg_coord(x, xlo, xhi, false);
    let py = |y: f64| svg_coord(y, ylo, yhi, true);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\">"
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" fill=\"#ffffff\"/>"
    );
    if let Some(scan) = &spec.raster {
        let _ = writeln!(out, "<g fill=\"#6090d0\" fill-opacity=\"0.35\">");
        for (i, b) in scan.bins.iter().enumerate() {
            if b.is_empty() {
                continue;
            }
            let (lo, hi) = scan.bin_range(i);
            let x0 = px(lo.max(xlo));
            let x1 = px(hi.min(xhi));
            let y0 = py(b.max_u2.min(yhi));
            let y1 = py(b.min_u2.max(ylo));
            if x1 <= x0 || y1 <= y0 {
                continue;
            }
            let _ = writeln!(
                out,
                "<rect x=\"{:.4}\" y=\"{:.4}\" width=\"{:.4}\" height=\"{:.4}\"/>",
                x0,
                y0,
                x1 - x0,
                y1 - y0
            );
        }
        let _ = writeln!(out, "</g>");
    }
    for curve in &spec.curves {
        let mut pts = String::new();
        for &(x, y) in &curve.points {
            if !x.is_finite() || !y.is_finite() {
                continue;
            }
            let _ = write!(pts, "{:.4},{:.4} ", px(x.clamp(xlo, xhi)), py(y.clamp(ylo, yhi)));
        }
        let _ = writeln!(
            out,
            "<polyline {} points=\"{}\"/>",
            style_attrs(curve.style),
            pts.trim_end()
        );
    }
    let _ = writeln!(
        out,
        "<text x=\"{:.1}\" y=\"30\" text-anchor=\"middle\" font-size=\"20\">{}</text>",
        SVG_SIZE / 2.0,
        spec.title
    );
    let _ = writeln!(
        out,
        "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"16\">{}</text>",
        SVG_SIZE / 2.0,
        SVG_SIZE - 15.0,
        spec.x_label
    );
    let _ = writeln!(
        out,
        "<text x=\"20\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"16\" transform=\"rotate(-90 20 {:.1})\">{}</text>",
        SVG_SIZE / 2.0,
        SVG_SIZE / 2.0,
        spec.y_label
    );
    out.push_str("</svg>\n");
    out
}

pub fn render_svg(spec: &PlotSpec, path: &Path) -> Result<()> {
    std::fs::write(path, svg_string(spec)).map_err(|e| Error::io(path, e))
}
