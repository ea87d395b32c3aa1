//! Closed forms: capture-time formulas and windows, lower bounds, the
//! minimum team size for a deadline, work and speed-up, and bound ratios.
//!
//! All arithmetic is exact. Real-valued bounds are [`Q`] rationals and
//! every floor and ceiling is explicit.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::strategies::Algorithm;
use crate::topology::{GridKind, GridSpec, Vertex};

pub type Q = Rational64;

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn qr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

/// Which branch of a two-case formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    CaseI,
    CaseII,
    NA,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::CaseI => "i",
            CaseTag::CaseII => "ii",
            CaseTag::NA => "-",
        })
    }
}

/// A capture time: exact, or bracketed by a real window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaptureTime {
    Point(u64),
    Window {
        lo: Q,
        hi: Q,
        /// The high end is a strict bound.
        strict_high: bool,
    },
}

impl CaptureTime {
    /// Smallest integer the bound admits.
    pub fn int_lo(&self) -> u64 {
        match *self {
            CaptureTime::Point(t) => t,
            CaptureTime::Window { lo, .. } => lo.ceil().to_integer().max(0) as u64,
        }
    }

    /// Largest integer the bound admits.
    pub fn int_hi(&self) -> u64 {
        match *self {
            CaptureTime::Point(t) => t,
            CaptureTime::Window { hi, strict_high, .. } => {
                let h = if strict_high {
                    hi.ceil().to_integer() - 1
                } else {
                    hi.floor().to_integer()
                };
                h.max(0) as u64
            }
        }
    }

    /// High end used when bracketing measured times. A strict high end
    /// comes from a coarser approximation, so one more round is allowed.
    pub fn bracket_high(&self) -> u64 {
        match *self {
            CaptureTime::Window { strict_high: true, .. } => self.int_hi() + 1,
            _ => self.int_hi(),
        }
    }

    pub fn admits(&self, t: u64) -> bool {
        self.int_lo() <= t && t <= self.int_hi()
    }

    pub fn brackets(&self, t: u64) -> bool {
        self.int_lo() <= t && t <= self.bracket_high()
    }
}

impl fmt::Display for CaptureTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaptureTime::Point(t) => write!(f, "{t}"),
            CaptureTime::Window { lo, hi, strict_high } => {
                let close = if *strict_high { ")" } else { "]" };
                write!(
                    f,
                    "[{}, {}{close} = {}..{}",
                    render_ratio(*lo),
                    render_ratio(*hi),
                    self.int_lo(),
                    self.int_hi()
                )
            }
        }
    }
}

/// Formula value for one instance, with the algorithm it describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Formula {
    pub algorithm: Algorithm,
    pub time: CaptureTime,
    pub case: CaseTag,
}

/// Rows and columns as the formulas read them: planar boards and tori
/// are symmetric, so the longer side is `n`.
fn oriented(spec: &GridSpec) -> (i64, i64) {
    let (m, n) = (spec.m as i64, spec.n as i64);
    match spec.kind {
        GridKind::SemiTorus => (m, n),
        _ => (m.min(n), m.max(n)),
    }
}

fn hypotheses(spec: &GridSpec, k: usize) -> Result<Algorithm> {
    let alg = Algorithm::for_board(spec.kind, k).map_err(|e| Error::Domain(e.to_string()))?;
    alg.check(spec, k).map_err(|e| Error::Domain(e.to_string()))?;
    Ok(alg)
}

/// Guaranteed capture time of the matching strategy.
///
/// Planar boards and semi-tori give a point value. Tori give a window
/// whose integer ends are [`CaptureTime::int_lo`] and [`CaptureTime::int_hi`].
pub fn capture_time_formula(spec: &GridSpec, k: usize) -> Result<Formula> {
    let alg = hypotheses(spec, k)?;
    let (m, n) = oriented(spec);
    let ki = k as i64;
    let (time, case) = match alg {
        Algorithm::Grid => (CaptureTime::Point(((m + n) / 2 - 1) as u64), CaseTag::NA),
        Algorithm::GridK => {
            let h = ki / 2;
            let t = ceil_div(n - h, 2 * h) + ceil_div(m - 2, 2);
            (CaptureTime::Point(t as u64), CaseTag::NA)
        }
        Algorithm::SGrid | Algorithm::SGridK => {
            let c = ceil_div(n - ki, 2 * ki);
            if m / 2 <= c {
                (CaptureTime::Point((ceil_div(n, ki) + 2 * (m / 2) - 2) as u64), CaseTag::CaseI)
            } else {
                (CaptureTime::Point((ceil_div(n, ki) + c + m / 2 - 2) as u64), CaseTag::CaseII)
            }
        }
        Algorithm::TGrid => {
            let (mq, nq) = (q(m), q(n));
            if m <= ceil_div(n, 2) {
                let base = nq * qr(2, 3) + mq * qr(5, 4);
                (
                    CaptureTime::Window {
                        lo: base - qr(9, 2),
                        hi: base - qr(25, 12),
                        strict_high: false,
                    },
                    CaseTag::CaseI,
                )
            } else {
                let base = nq * qr(25, 24) + mq / 2;
                (
                    CaptureTime::Window {
                        lo: base - qr(9, 2),
                        hi: base - qr(17, 8),
                        strict_high: false,
                    },
                    CaseTag::CaseII,
                )
            }
        }
        Algorithm::TGridK => {
            let (mq, nq, kq) = (q(m), q(n), q(ki));
            if m <= ceil_div(n, ki - 1) {
                let base = nq * 2 / kq + mq * qr(5, 4);
                (
                    CaptureTime::Window {
                        lo: base - qr(9, 2),
                        hi: base + (kq - 1) / kq - qr(11, 4),
                        strict_high: false,
                    },
                    CaseTag::CaseI,
                )
            } else {
                let base = nq * 2 / kq + nq * 3 / (kq * 4 - 4) + mq / 2;
                (
                    CaptureTime::Window {
                        lo: base - qr(9, 2),
                        hi: base - qr(1, 2),
                        strict_high: true,
                    },
                    CaseTag::CaseII,
                )
            }
        }
    };
    Ok(Formula {
        algorithm: alg,
        time,
        case,
    })
}

/// Round counts of the torus strategies against the adversarial robber:
/// guard phase, chase to a pre-siege, push to a siege, and the total
/// including the capturing round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusComponents {
    pub t1: u64,
    pub t2: u64,
    pub t3: u64,
    pub t: u64,
    pub case: CaseTag,
}

pub fn torus_exact_components(spec: &GridSpec, k: usize) -> Result<TorusComponents> {
    if spec.kind != GridKind::Torus {
        return Err(Error::Domain(format!("{spec} is not a torus")));
    }
    hypotheses(spec, k)?;
    let (m, n) = oriented(spec);
    let k = k as i64;
    let p = ceil_div(n, k - 1);
    let t1 = ceil_div(2 * n, k) - p;
    let (t2, t3, case) = if m <= p {
        (p + 2 * (m / 2) - 3, ceil_div(m - 6, 4), CaseTag::CaseI)
    } else {
        let (t2, row) = if p % 2 == 0 {
            (2 * p - 3, ceil_div(n, 2 * (k - 1)))
        } else {
            (2 * p - 4, floor_div(n, 2 * (k - 1)))
        };
        let lambda = m - row - 3;
        (t2, ceil_div(lambda, 2), CaseTag::CaseII)
    };
    let (t1, t2, t3) = (t1.max(0) as u64, t2.max(0) as u64, t3.max(0) as u64);
    Ok(TorusComponents {
        t1,
        t2,
        t3,
        t: t1 + t2 + t3 + 1,
        case,
    })
}

/// Bound from one placement: `max(d1, d_h - floor(e/2))`, where `d` are
/// the cop distances to the robber, `h` the minimal siege size and `e`
/// the length of an e-loop through the robber (if any).
pub fn placement_lower_bound(distances: &[usize], h: usize, loop_len: Option<usize>) -> Result<usize> {
    let k = distances.len();
    if h < 2 || h > k {
        return Err(Error::Input(format!("siege size h = {h} must lie in 2..={k}")));
    }
    if let Some(e) = loop_len {
        if e < 4 {
            return Err(Error::Input(format!("loop length {e} is below 4")));
        }
    }
    let mut d = distances.to_vec();
    d.sort_unstable();
    let loop_term = loop_len.map_or(0, |e| d[h - 1].saturating_sub(e / 2));
    Ok(d[0].max(loop_term))
}

/// `floor(n/2) + floor(m/2) - 2` on semi-tori and tori.
pub fn wrap_lower_bound(spec: &GridSpec) -> Result<usize> {
    if spec.kind == GridKind::PlanarGrid {
        return Err(Error::Domain("the wrap-around bound needs a semi-torus or torus".into()));
    }
    Ok((spec.n / 2 + spec.m / 2).saturating_sub(2))
}

/// Two cops on a planar grid: the robber picks the corner farthest from
/// one cop, so `ceil((m-1)/2) + ceil((n-1)/2) - 2`, at least 1.
pub fn planar_lower_bound(spec: &GridSpec) -> Result<usize> {
    if spec.kind != GridKind::PlanarGrid {
        return Err(Error::Domain(format!("{spec} is not a planar grid")));
    }
    Ok(((spec.m - 1).div_ceil(2) + (spec.n - 1).div_ceil(2)).saturating_sub(2).max(1))
}

/// Default cap on `placements x vertices` for [`placement_search_lower_bound`].
pub const PLACEMENT_SEARCH_BUDGET: u128 = 50_000_000;

fn on_unit_loop(spec: &GridSpec, v: Vertex) -> bool {
    for (dr, dc) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let top = v.row as isize - dr;
        let left = v.col as isize - dc;
        let corner = |r: isize, c: isize| -> Option<Vertex> {
            let r = if spec.kind.wraps_rows() { r.rem_euclid(spec.m as isize) } else { r };
            let c = if spec.kind.wraps_cols() { c.rem_euclid(spec.n as isize) } else { c };
            let w = Vertex::new(usize::try_from(r).ok()?, usize::try_from(c).ok()?);
            spec.contains(w).then_some(w)
        };
        let square = [(top, left), (top, left + 1), (top + 1, left + 1), (top + 1, left)];
        let cycle: Option<Vec<Vertex>> = square.iter().map(|&(r, c)| corner(r, c)).collect();
        if let Some(cycle) = cycle {
            if spec.is_e_loop(&cycle).unwrap_or(false) {
                return true;
            }
        }
    }
    false
}

/// Minimum over all cop placements of the best per-placement bound the
/// robber can pick: exact for the one-placement bound, exhaustive over
/// placements.
pub fn placement_search_lower_bound(spec: &GridSpec, k: usize, max_work: u128) -> Result<usize> {
    let v = spec.vertex_count();
    let h = crate::oracle::siege_lower_bound(spec);
    if h < 2 || h > k {
        return Err(Error::Domain(format!("{k} cops cannot form the minimal siege of size {h} on {spec}")));
    }
    let placements = crate::oracle::state_count(v, k) / (2 * v as u128);
    let work = placements * v as u128;
    if work > max_work {
        return Err(Error::Budget {
            estimate: work,
            budget: max_work.min(u64::MAX as u128) as u64,
        });
    }
    let verts: Vec<Vertex> = spec.vertices().collect();
    let dist: Vec<Vec<usize>> = verts
        .iter()
        .map(|&a| verts.iter().map(|&b| spec.distance(a, b)).collect())
        .collect();
    let on_loop: Vec<bool> = verts.iter().map(|&w| on_unit_loop(spec, w)).collect();
    let mut cops = vec![0usize; k];
    let mut ds = vec![0usize; k];
    let mut best = usize::MAX;
    loop {
        let mut worst = 0;
        for r in 0..v {
            if cops.contains(&r) {
                continue;
            }
            for (slot, &c) in ds.iter_mut().zip(&cops) {
                *slot = dist[c][r];
            }
            ds.sort_unstable();
            let mut b = ds[0];
            if on_loop[r] {
                b = b.max(ds[h - 1].saturating_sub(2));
            }
            worst = worst.max(b);
            if worst >= best {
                break;
            }
        }
        best = best.min(worst);
        let Some(i) = (0..k).rev().find(|&i| cops[i] < v - 1) else {
            break;
        };
        let x = cops[i] + 1;
        cops[i..].fill(x);
    }
    Ok(best)
}

/// A lower bound on the optimal capture time and how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub method: LowerBoundMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LowerBoundMethod {
    /// `floor(n/2) + floor(m/2) - 2`, with `k` equal to the minimal siege size.
    WrapFormula,
    /// Farthest corner from one of two cops on a planar grid.
    PlanarFormula,
    /// Exhaustive search over cop placements.
    PlacementSearch,
}

impl fmt::Display for LowerBoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerBoundMethod::WrapFormula => "wrap formula",
            LowerBoundMethod::PlanarFormula => "planar formula",
            LowerBoundMethod::PlacementSearch => "placement search",
        })
    }
}

/// Lower bound on the optimal capture time with `k` cops.
///
/// The closed forms only hold when `k` equals the minimal siege size
/// (2 on planar grids and semi-tori, 3 on tori). Other team sizes fall
/// back to an exhaustive placement search within `max_work`.
pub fn lower_bound(spec: &GridSpec, k: usize, max_work: u128) -> Result<LowerBound> {
    let (value, method) = match (spec.kind, k) {
        (GridKind::PlanarGrid, 2) => (planar_lower_bound(spec)?, LowerBoundMethod::PlanarFormula),
        (GridKind::SemiTorus, 2) | (GridKind::Torus, 3) => (wrap_lower_bound(spec)?, LowerBoundMethod::WrapFormula),
        _ => (
            placement_search_lower_bound(spec, k, max_work)?,
            LowerBoundMethod::PlacementSearch,
        ),
    };
    Ok(LowerBound { value, method })
}

/// Answer to "how many cops for capture within `t*` rounds".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeadlineAnswer {
    pub t_star: u64,
    /// Real lower end on `k`.
    pub bound: Q,
    /// Real upper end on `k` (tori only; `None` when unbounded).
    pub upper: Option<Q>,
    /// `bound` is strict (`k > bound`).
    pub strict_bound: bool,
    pub k: usize,
    pub case: CaseTag,
}

fn infeasible(spec: &GridSpec, t_star: u64) -> Error {
    Error::Infeasible(format!("no team size reaches capture within {t_star} rounds on {spec}"))
}

/// Smallest team for which the matching strategy's approximated capture
/// time fits within `t_star`.
///
/// Planar grids take the smallest even `k` at or above the bound. On
/// semi-tori and tori the case depends on `k` itself, so each candidate
/// is tested against the inequality of the case it falls in.
pub fn min_cops_for_deadline(spec: &GridSpec, t_star: u64) -> Result<DeadlineAnswer> {
    let (m, n) = oriented(spec);
    let t = t_star as i64;
    match spec.kind {
        GridKind::PlanarGrid => {
            let den = 2 * t - m + 3;
            if den <= 0 {
                return Err(infeasible(spec, t_star));
            }
            let bound = qr(2 * n, den);
            let mut k = bound.ceil().to_integer().max(2);
            if k % 2 == 1 {
                k += 1;
            }
            Ok(DeadlineAnswer {
                t_star,
                bound,
                upper: None,
                strict_bound: false,
                k: k as usize,
                case: CaseTag::NA,
            })
        }
        GridKind::SemiTorus => {
            for k in 2..=n / 2 {
                let case_one = m / 2 <= ceil_div(n - k, 2 * k);
                let (num, den) = match (case_one, m % 2 == 0) {
                    (true, true) => (n, t - m + 2),
                    (true, false) => (n, t - m + 3),
                    (false, true) => (3 * n, 2 * t - m + 5),
                    (false, false) => (3 * n, 2 * t - m + 7),
                };
                if den <= 0 {
                    continue;
                }
                let bound = qr(num, den);
                if q(k) >= bound {
                    return Ok(DeadlineAnswer {
                        t_star,
                        bound,
                        upper: None,
                        strict_bound: false,
                        k: k as usize,
                        case: if case_one { CaseTag::CaseI } else { CaseTag::CaseII },
                    });
                }
            }
            Err(infeasible(spec, t_star))
        }
        GridKind::Torus => {
            for k in 3..=n / 2 {
                let case_one = m <= ceil_div(n, k - 1);
                let (lo, hi, strict) = if case_one {
                    let lo_den = 4 * t - 5 * m + 18;
                    let hi_den = 4 * t - 5 * m + 7;
                    if lo_den <= 0 {
                        continue;
                    }
                    (qr(8 * n, lo_den), (hi_den > 0).then(|| qr(8 * n, hi_den)), false)
                } else {
                    let lo_den = 4 * t - 2 * m + 18;
                    let hi_den = 4 * t - 2 * m + 2;
                    if lo_den <= 0 {
                        continue;
                    }
                    (qr(11 * n, lo_den), (hi_den > 0).then(|| qr(11 * n, hi_den) + 1), true)
                };
                let kq = q(k);
                let above = if strict { kq > lo } else { kq >= lo };
                if above && hi.is_none_or(|h| kq < h) {
                    return Ok(DeadlineAnswer {
                        t_star,
                        bound: lo,
                        upper: hi,
                        strict_bound: strict,
                        k: k as usize,
                        case: if case_one { CaseTag::CaseI } else { CaseTag::CaseII },
                    });
                }
            }
            Err(infeasible(spec, t_star))
        }
    }
}

/// Work `w_k = k t_k` for each instance and the ratios `w_i / w_j`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Speedup {
    pub work: Vec<(usize, u64)>,
    pub ratios: Vec<(usize, usize, Q)>,
}

pub fn work_and_speedup(instances: &[(usize, u64)]) -> Speedup {
    let work: Vec<(usize, u64)> = instances.iter().map(|&(k, t)| (k, k as u64 * t)).collect();
    let mut ratios = Vec::new();
    for (i, &(ki, wi)) in work.iter().enumerate() {
        for &(kj, wj) in &work[i + 1..] {
            if wj != 0 {
                ratios.push((ki, kj, qr(wi as i64, wj as i64)));
            }
        }
    }
    Speedup { work, ratios }
}

/// One point of a bound-ratio schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrendPoint {
    pub m: usize,
    pub n: usize,
    pub upper: Q,
    pub lower: Q,
    pub ratio: Q,
}

/// Ratio of the strategy's guaranteed time to the wrap-around lower bound
/// along a schedule of boards: two cops on semi-tori (exact time), three
/// on tori (high end of the window).
pub fn bound_ratio_trend(kind: GridKind, schedule: &[(usize, usize)]) -> Result<Vec<TrendPoint>> {
    let k = match kind {
        GridKind::SemiTorus => 2,
        GridKind::Torus => 3,
        GridKind::PlanarGrid => return Err(Error::Domain("bound ratios are defined for semi-tori and tori".into())),
    };
    schedule
        .iter()
        .map(|&(m, n)| {
            let spec = GridSpec::new(kind, m, n)?;
            let upper = match capture_time_formula(&spec, k)?.time {
                CaptureTime::Point(t) => q(t as i64),
                CaptureTime::Window { hi, .. } => hi,
            };
            let lower = q(wrap_lower_bound(&spec)? as i64);
            if lower.is_zero() {
                return Err(Error::Domain(format!("lower bound vanishes on {spec}")));
            }
            Ok(TrendPoint {
                m,
                n,
                upper,
                lower,
                ratio: upper / lower,
            })
        })
        .collect()
}

/// Semi-tori `(4, 4 * 2^i)`, `i = 0..=8`: rows fixed, columns growing.
pub fn wide_semitorus_schedule() -> Vec<(usize, usize)> {
    (0..=8).map(|i| (4, 4 << i)).collect()
}

/// Semi-tori `(4 * 2^i, 4)`, `i = 0..=8`: columns fixed, rows growing.
pub fn tall_semitorus_schedule() -> Vec<(usize, usize)> {
    (0..=8).map(|i| (4 << i, 4)).collect()
}

/// Square tori `(m, m)`, `m = 8, 16, ..., 64`.
pub fn square_torus_schedule() -> Vec<(usize, usize)> {
    (1..=8).map(|i| (8 * i, 8 * i)).collect()
}

/// Tori `(8, 8 * 2^i)`, `i = 0..=8`.
pub fn wide_torus_schedule() -> Vec<(usize, usize)> {
    (0..=8).map(|i| (8, 8 << i)).collect()
}

/// `p/q`, or `p` for integers.
pub fn render_ratio(x: Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering rounded half away from zero.
pub fn render_decimal(x: Q, places: u32) -> String {
    let scale = 10i64.pow(places);
    let scaled = (x.abs() * scale).round().to_integer();
    let sign = if x.is_negative() && scaled != 0 { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{scaled}");
    }
    format!(
        "{sign}{}.{:0width$}",
        scaled / scale,
        scaled % scale,
        width = places as usize
    )
}

/// Every closed-form figure for one `(board, k)` instance. Fields outside
/// the hypotheses carry the reason instead of a value.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub spec: GridSpec,
    pub k: usize,
    pub algorithm: Option<Algorithm>,
    pub t_formula: std::result::Result<CaptureTime, String>,
    pub case_tag: CaseTag,
    pub components: Option<TorusComponents>,
    pub t_lower: std::result::Result<LowerBound, String>,
    pub work: Option<u64>,
    pub deadline: Option<std::result::Result<DeadlineAnswer, String>>,
    /// Per-field provenance.
    pub notes: Vec<(String, String)>,
}

pub const CSV_COLUMNS: [&str; 17] = [
    "kind",
    "m",
    "n",
    "k",
    "algorithm",
    "case",
    "t_formula",
    "t_lo",
    "t_hi",
    "t_exact",
    "t_lower",
    "lower_method",
    "work",
    "t_star",
    "k_bound",
    "k_upper",
    "k_min",
];

impl BoundsReport {
    pub fn new(spec: &GridSpec, k: usize, deadline: Option<u64>, search_budget: u128) -> Self {
        let mut notes = Vec::new();
        let formula = capture_time_formula(spec, k);
        let (algorithm, t_formula, case_tag) = match formula {
            Ok(f) => {
                notes.push((
                    "t_formula".into(),
                    match f.time {
                        CaptureTime::Point(_) => format!("closed form for {}", f.algorithm),
                        CaptureTime::Window { strict_high: true, .. } => {
                            format!("window for {}, strict high end", f.algorithm)
                        }
                        CaptureTime::Window { .. } => format!("window for {}", f.algorithm),
                    },
                ));
                (Some(f.algorithm), Ok(f.time), f.case)
            }
            Err(e) => (None, Err(reason(&e)), CaseTag::NA),
        };
        let components = if spec.kind == GridKind::Torus {
            torus_exact_components(spec, k).ok()
        } else {
            None
        };
        if components.is_some() {
            notes.push(("t_exact".into(), "round counts of the adversarial chase".into()));
        }
        let t_lower = lower_bound(spec, k, search_budget).map_err(|e| reason(&e));
        if let Ok(lb) = &t_lower {
            notes.push(("t_lower".into(), lb.method.to_string()));
        }
        let work = match (&t_formula, components) {
            (_, Some(c)) => Some(k as u64 * c.t),
            (Ok(CaptureTime::Point(t)), None) => Some(k as u64 * t),
            _ => None,
        };
        let deadline = deadline.map(|t| min_cops_for_deadline(spec, t).map_err(|e| reason(&e)));
        BoundsReport {
            spec: *spec,
            k,
            algorithm,
            t_formula,
            case_tag,
            components,
            t_lower,
            work,
            deadline,
            notes,
        }
    }

    pub fn csv_header() -> String {
        CSV_COLUMNS.join(",")
    }

    pub fn csv_row(&self) -> String {
        let na = |r: &String| csv_escape(&format!("n/a: {r}"));
        let mut cells = vec![
            self.spec.kind.as_str().to_string(),
            self.spec.m.to_string(),
            self.spec.n.to_string(),
            self.k.to_string(),
            self.algorithm.map_or(String::new(), |a| a.as_str().to_string()),
            self.case_tag.to_string(),
        ];
        match &self.t_formula {
            Ok(CaptureTime::Point(t)) => cells.extend([t.to_string(), t.to_string(), t.to_string()]),
            Ok(w @ CaptureTime::Window { lo, hi, strict_high }) => {
                let close = if *strict_high { ")" } else { "]" };
                cells.push(format!("[{} {}{close}", render_ratio(*lo), render_ratio(*hi)));
                cells.push(w.int_lo().to_string());
                cells.push(w.int_hi().to_string());
            }
            Err(r) => cells.extend([na(r), String::new(), String::new()]),
        }
        cells.push(self.components.map_or(String::new(), |c| c.t.to_string()));
        match &self.t_lower {
            Ok(lb) => cells.extend([lb.value.to_string(), lb.method.to_string()]),
            Err(r) => cells.extend([na(r), String::new()]),
        }
        cells.push(self.work.map_or(String::new(), |w| w.to_string()));
        match &self.deadline {
            None => cells.extend([String::new(), String::new(), String::new(), String::new()]),
            Some(Ok(d)) => cells.extend([
                d.t_star.to_string(),
                render_ratio(d.bound),
                d.upper.map_or(String::new(), render_ratio),
                d.k.to_string(),
            ]),
            Some(Err(r)) => cells.extend([String::new(), na(r), String::new(), String::new()]),
        }
        cells.join(",")
    }

    /// Human-readable multi-line form.
    pub fn to_text(&self) -> String {
        let mut out = format!("board      {}\nk          {}\n", self.spec, self.k);
        if let Some(a) = self.algorithm {
            out += &format!("algorithm  {a}\n");
        }
        match &self.t_formula {
            Ok(t) => out += &format!("t_formula  {t}  (case {})\n", self.case_tag),
            Err(r) => out += &format!("t_formula  n/a: {r}\n"),
        }
        if let Some(c) = self.components {
            out += &format!("t_exact    {} + {} + {} + 1 = {}\n", c.t1, c.t2, c.t3, c.t);
        }
        match &self.t_lower {
            Ok(lb) => out += &format!("t_lower    {} ({})\n", lb.value, lb.method),
            Err(r) => out += &format!("t_lower    n/a: {r}\n"),
        }
        if let Some(w) = self.work {
            out += &format!("work       {w}\n");
        }
        match &self.deadline {
            Some(Ok(d)) => {
                let open = if d.strict_bound { "(" } else { "[" };
                let hi = d
                    .upper
                    .map_or("inf".to_string(), |u| format!("{} ~ {}", render_ratio(u), render_decimal(u, 2)));
                out += &format!(
                    "deadline   t* = {}: k in {open}{} ~ {}, {hi}) -> k = {}\n",
                    d.t_star,
                    render_ratio(d.bound),
                    render_decimal(d.bound, 2),
                    d.k
                );
            }
            Some(Err(r)) => out += &format!("deadline   n/a: {r}\n"),
            None => {}
        }
        out
    }
}

fn reason(e: &Error) -> String {
    match e {
        Error::Domain(m) | Error::Config(m) | Error::Infeasible(m) => m.clone(),
        other => other.to_string(),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
