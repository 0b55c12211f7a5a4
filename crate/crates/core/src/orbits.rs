//! Level curves of the moduli and constant-argument spokes for the five
//! wheel figures, emitted as CSV point streams or SVG paths.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Point = [f64; 2];

/// Points closer than this to the line `v = −1` are dropped from N′ curves.
const PRIME_GAP: f64 = 1e-4;

/// Rounding slack when clipping points computed on the range boundary.
const CLIP_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FigureCase {
    /// Circles `x² + y² = L`.
    E,
    /// Trivial parabolic: vertical lines `x² = L`.
    P0,
    /// Parabolas `u² − v = L`.
    P,
    /// Parabolas `u²/(v + 1) = L`.
    Pp,
    /// Hyperbolas `x² − y² = L`.
    H,
}

impl FigureCase {
    pub const ALL: [FigureCase; 5] = [
        FigureCase::E,
        FigureCase::P0,
        FigureCase::P,
        FigureCase::Pp,
        FigureCase::H,
    ];

    pub fn label(self) -> &'static str {
        match self {
            FigureCase::E => "E",
            FigureCase::P0 => "P0",
            FigureCase::P => "P",
            FigureCase::Pp => "Pp",
            FigureCase::H => "H",
        }
    }

    /// The modulus whose level sets are the orbits. `None` where it is
    /// undefined (`v = −1` for N′).
    pub fn modulus(self, x: f64, y: f64) -> Option<f64> {
        match self {
            FigureCase::E => Some(x * x + y * y),
            FigureCase::H => Some(x * x - y * y),
            FigureCase::P0 => Some(x * x),
            FigureCase::P => Some(x * x - y),
            FigureCase::Pp => (y != -1.0).then(|| x * x / (y + 1.0)),
        }
    }

    /// The level family drawn when none is given.
    pub fn default_levels(self) -> Vec<Scalar> {
        match self {
            FigureCase::E | FigureCase::P0 => (0..6).map(|i| Scalar::ratio(i * i, 25)).collect(),
            FigureCase::H => (0..6).map(|i| Scalar::ratio(-i * i, 25)).collect(),
            FigureCase::P => (0..6).map(|i| Scalar::ratio(2 - i, 2)).collect(),
            FigureCase::Pp => (0..5).map(|i| Scalar::ratio(2, 2 + i * i * i)).collect(),
        }
    }
}

impl fmt::Display for FigureCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FigureCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" => Ok(FigureCase::E),
            "P0" => Ok(FigureCase::P0),
            "P" => Ok(FigureCase::P),
            "Pp" | "P'" | "P′" => Ok(FigureCase::Pp),
            "H" => Ok(FigureCase::H),
            other => Err(Error::Config(format!("unknown case {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Csv,
    Svg,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(Error::Config(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlotRange {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl PlotRange {
    pub fn contains(&self, p: &Point) -> bool {
        let within = |t: f64, lo: f64, hi: f64| t >= lo - CLIP_SLACK && t <= hi + CLIP_SLACK;
        within(p[0], self.xmin, self.xmax) && within(p[1], self.ymin, self.ymax)
    }

    fn radius(&self) -> f64 {
        [self.xmin, self.xmax]
            .iter()
            .flat_map(|x| [self.ymin, self.ymax].map(|y| x.hypot(y)))
            .fold(0.0, f64::max)
    }
}

impl Default for PlotRange {
    fn default() -> Self {
        PlotRange {
            xmin: -1.5,
            xmax: 1.5,
            ymin: -2.0,
            ymax: 2.0,
        }
    }
}

impl FromStr for PlotRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let vals: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Config(format!("bad range {s:?}")))?;
        match vals[..] {
            [xmin, xmax, ymin, ymax] => Ok(PlotRange {
                xmin,
                xmax,
                ymin,
                ymax,
            }),
            _ => Err(Error::Config(format!(
                "range needs four numbers, got {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotConfig {
    pub case: FigureCase,
    pub levels: Vec<Scalar>,
    pub spoke_angles: Vec<Scalar>,
    pub samples: usize,
    pub range: PlotRange,
    pub format: OutputFormat,
}

impl PlotConfig {
    /// Default levels, no spokes, 256 samples, the standard range, CSV.
    pub fn new(case: FigureCase) -> Self {
        PlotConfig {
            case,
            levels: case.default_levels(),
            spoke_angles: Vec::new(),
            samples: 256,
            range: PlotRange::default(),
            format: OutputFormat::Csv,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 2 {
            return Err(Error::Config("samples must be at least 2".into()));
        }
        let r = &self.range;
        if !(r.xmin < r.xmax && r.ymin < r.ymax) {
            return Err(Error::Config(
                "range must satisfy xmin<xmax, ymin<ymax".into(),
            ));
        }
        if matches!(self.case, FigureCase::E | FigureCase::P0)
            && self.levels.iter().any(Scalar::is_negative)
        {
            return Err(Error::Config(format!(
                "case {} needs non-negative levels",
                self.case
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    Orbit,
    Spoke,
}

impl PieceKind {
    pub fn label(self) -> &'static str {
        match self {
            PieceKind::Orbit => "orbit",
            PieceKind::Spoke => "spoke",
        }
    }
}

/// One connected polyline of the figure.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub kind: PieceKind,
    pub value: f64,
    pub points: Vec<Point>,
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (b - a) / (n - 1) as f64;
    (0..n).map(move |i| if i + 1 == n { b } else { a + step * i as f64 })
}

/// Splits a point stream into maximal runs of points passing `keep`.
fn runs(points: impl IntoIterator<Item = Point>, keep: impl Fn(&Point) -> bool) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for p in points {
        if keep(&p) {
            cur.push(p);
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Intervals of `t` with `t² ∈ [lo, hi]`, intersected with `[xmin, xmax]`.
fn square_root_intervals(lo: f64, hi: f64, xmin: f64, xmax: f64) -> Vec<(f64, f64)> {
    if hi < 0.0 || lo > hi {
        return Vec::new();
    }
    let (r0, r1) = (lo.max(0.0).sqrt(), hi.sqrt());
    let raw = if r0 == 0.0 {
        vec![(-r1, r1)]
    } else {
        vec![(-r1, -r0), (r0, r1)]
    };
    raw.into_iter()
        .map(|(a, b)| (a.max(xmin), b.min(xmax)))
        .filter(|(a, b)| a <= b)
        .collect()
}

/// Sweeps `t` over each interval and maps it through `f`.
fn sweep(
    intervals: &[(f64, f64)],
    n: usize,
    f: impl Fn(f64) -> Point,
    keep: impl Fn(&Point) -> bool,
) -> Vec<Vec<Point>> {
    intervals
        .iter()
        .flat_map(|&(a, b)| runs(linspace(a, b, n).map(&f), &keep))
        .collect()
}

/// The branches of the level set `modulus = level` inside the plot range.
pub fn sample_orbit(case: FigureCase, level: f64, config: &PlotConfig) -> Vec<Vec<Point>> {
    let r = config.range;
    let n = config.samples;
    let inside = |p: &Point| r.contains(p);
    match case {
        FigureCase::E => {
            if level < 0.0 {
                return Vec::new();
            }
            if level == 0.0 {
                return runs([[0.0, 0.0]], inside);
            }
            let rad = level.sqrt();
            let tau = std::f64::consts::TAU;
            runs(
                linspace(0.0, tau, n).map(|t| [rad * t.cos(), rad * t.sin()]),
                inside,
            )
        }
        FigureCase::H => {
            if level > 0.0 {
                // x = ±√(L + y²)
                [1.0, -1.0]
                    .iter()
                    .flat_map(|&s| {
                        sweep(
                            &[(r.ymin, r.ymax)],
                            n,
                            |y| [s * (level + y * y).sqrt(), y],
                            inside,
                        )
                    })
                    .collect()
            } else if level < 0.0 {
                [1.0, -1.0]
                    .iter()
                    .flat_map(|&s| {
                        sweep(
                            &[(r.xmin, r.xmax)],
                            n,
                            |x| [x, s * (x * x - level).sqrt()],
                            inside,
                        )
                    })
                    .collect()
            } else {
                [1.0, -1.0]
                    .iter()
                    .flat_map(|&s| sweep(&[(r.xmin, r.xmax)], n, |x| [x, s * x], inside))
                    .collect()
            }
        }
        FigureCase::P0 => {
            if level < 0.0 {
                return Vec::new();
            }
            let x = level.sqrt();
            let xs: &[f64] = if x == 0.0 { &[0.0] } else { &[-x, x] };
            xs.iter()
                .flat_map(|&x| sweep(&[(r.ymin, r.ymax)], n, |y| [x, y], inside))
                .collect()
        }
        FigureCase::P => {
            // v = u² − L
            let iv = square_root_intervals(r.ymin + level, r.ymax + level, r.xmin, r.xmax);
            sweep(&iv, n, |u| [u, u * u - level], inside)
        }
        FigureCase::Pp => {
            let keep = |p: &Point| inside(p) && (p[1] + 1.0).abs() >= PRIME_GAP;
            if level == 0.0 {
                if !(r.xmin..=r.xmax).contains(&0.0) {
                    return Vec::new();
                }
                return sweep(&[(r.ymin, r.ymax)], n, |v| [0.0, v], keep);
            }
            // v = u²/L − 1
            let (a, b) = (level * (r.ymin + 1.0), level * (r.ymax + 1.0));
            let iv = square_root_intervals(a.min(b), a.max(b), r.xmin, r.xmax);
            sweep(&iv, n, |u| [u, u * u / level - 1.0], keep)
        }
    }
}

/// The constant-argument line for `angle`: a ray from the origin for E, H
/// and P0, a vertical line for P (`u = angle`) and P′ (`u = 1/angle`).
pub fn sample_spokes(case: FigureCase, angle: f64, config: &PlotConfig) -> Vec<Vec<Point>> {
    let r = config.range;
    let n = config.samples;
    let inside = |p: &Point| r.contains(p);
    let ray = |dx: f64, dy: f64| {
        let len = dx.hypot(dy);
        let (dx, dy) = (dx / len, dy / len);
        runs(
            linspace(0.0, r.radius(), n).map(|s| [s * dx, s * dy]),
            inside,
        )
    };
    let vertical = |u: f64| {
        if (r.xmin..=r.xmax).contains(&u) {
            sweep(&[(r.ymin, r.ymax)], n, |v| [u, v], inside)
        } else {
            Vec::new()
        }
    };
    match case {
        FigureCase::E => ray(angle.cos(), angle.sin()),
        FigureCase::H => ray(angle.cosh(), angle.sinh()),
        FigureCase::P0 => ray(1.0, angle),
        FigureCase::P => vertical(angle),
        FigureCase::Pp => {
            if angle == 0.0 {
                Vec::new()
            } else {
                vertical(1.0 / angle)
            }
        }
    }
}

/// All orbits followed by all spokes, in configuration order.
pub fn pieces(config: &PlotConfig) -> Result<Vec<Piece>> {
    config.validate()?;
    let mut out = Vec::new();
    for level in &config.levels {
        let l = level.to_f64();
        for points in sample_orbit(config.case, l, config) {
            out.push(Piece {
                kind: PieceKind::Orbit,
                value: l,
                points,
            });
        }
    }
    for angle in &config.spoke_angles {
        let a = angle.to_f64();
        for points in sample_spokes(config.case, a, config) {
            out.push(Piece {
                kind: PieceKind::Spoke,
                value: a,
                points,
            });
        }
    }
    Ok(out)
}

fn io_err(e: impl fmt::Display) -> Error {
    Error::Io(e.to_string())
}

/// Writes the figure in the configured format.
pub fn emit(config: &PlotConfig, out: &mut dyn Write) -> Result<()> {
    let pieces = pieces(config)?;
    match config.format {
        OutputFormat::Csv => write_csv(config.case, &pieces, out),
        OutputFormat::Svg => write_svg(&config.range, &pieces, out),
    }
}

fn write_csv(case: FigureCase, pieces: &[Piece], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["case", "kind", "level_or_angle", "x", "y"])
        .map_err(io_err)?;
    for piece in pieces {
        let value = piece.value.to_string();
        for p in &piece.points {
            w.write_record([
                case.label(),
                piece.kind.label(),
                &value,
                &format!("{:.15e}", p[0]),
                &format!("{:.15e}", p[1]),
            ])
            .map_err(io_err)?;
        }
    }
    w.flush().map_err(io_err)
}

fn write_svg(range: &PlotRange, pieces: &[Piece], out: &mut dyn Write) -> Result<()> {
    let w = range.xmax - range.xmin;
    let h = range.ymax - range.ymin;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        range.xmin, range.ymin, w, h
    )
    .map_err(io_err)?;
    // flip y so that it grows upwards inside the same box
    writeln!(
        out,
        r#"<g transform="matrix(1 0 0 -1 0 {})" fill="none" stroke-width="1" vector-effect="non-scaling-stroke">"#,
        range.ymin + range.ymax
    )
    .map_err(io_err)?;
    for piece in pieces {
        let colour = match piece.kind {
            PieceKind::Orbit => "blue",
            PieceKind::Spoke => "green",
        };
        let mut d = String::new();
        for (i, p) in piece.points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{cmd}{:.6},{:.6} ", p[0], p[1]));
        }
        writeln!(
            out,
            r#"<path class="{}" data-value="{}" stroke="{}" vector-effect="non-scaling-stroke" d="{}"/>"#,
            piece.kind.label(),
            piece.value,
            colour,
            d.trim_end()
        )
        .map_err(io_err)?;
    }
    writeln!(out, "</g>\n</svg>").map_err(io_err)
}

/// Parses a comma-separated list of scalars; the empty string is the empty
/// list.
pub fn parse_list(s: &str) -> Result<Vec<Scalar>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<Scalar>()).collect()
}
