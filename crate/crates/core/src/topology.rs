//! Board families: planar grids, semi-tori (columns wrap) and tori.
//!
//! Row indices grow downward. On a semi-torus the wrap edge joins
//! `(i, 0)` and `(i, n-1)`; on a torus rows wrap as well.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The three board families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GridKind {
    #[serde(rename = "grid")]
    PlanarGrid,
    #[serde(rename = "semitorus")]
    SemiTorus,
    #[serde(rename = "torus")]
    Torus,
}

impl GridKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GridKind::PlanarGrid => "grid",
            GridKind::SemiTorus => "semitorus",
            GridKind::Torus => "torus",
        }
    }

    pub fn wraps_rows(self) -> bool {
        matches!(self, GridKind::Torus)
    }

    pub fn wraps_cols(self) -> bool {
        !matches!(self, GridKind::PlanarGrid)
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "grid" | "planar" => Ok(GridKind::PlanarGrid),
            "semitorus" | "semi-torus" | "cylinder" => Ok(GridKind::SemiTorus),
            "torus" => Ok(GridKind::Torus),
            other => Err(Error::Config(format!("unknown board kind `{other}`"))),
        }
    }
}

/// A board: kind plus `m` rows and `n` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct GridSpec {
    pub kind: GridKind,
    pub m: usize,
    pub n: usize,
}

#[derive(Deserialize)]
struct RawSpec {
    kind: GridKind,
    m: usize,
    n: usize,
}

impl TryFrom<RawSpec> for GridSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        GridSpec::new(raw.kind, raw.m, raw.n)
    }
}

impl GridSpec {
    /// Builds a board, rejecting sizes whose wrap edges would create
    /// loops or parallel edges.
    pub fn new(kind: GridKind, m: usize, n: usize) -> Result<Self> {
        let (min_m, min_n) = match kind {
            GridKind::PlanarGrid => (2, 2),
            GridKind::SemiTorus => (1, 3),
            GridKind::Torus => (3, 3),
        };
        if m < min_m || n < min_n {
            return Err(Error::Config(format!(
                "{kind} needs m >= {min_m} and n >= {min_n}, got {m}x{n}"
            )));
        }
        Ok(GridSpec { kind, m, n })
    }

    pub fn grid(m: usize, n: usize) -> Result<Self> {
        Self::new(GridKind::PlanarGrid, m, n)
    }

    pub fn semitorus(m: usize, n: usize) -> Result<Self> {
        Self::new(GridKind::SemiTorus, m, n)
    }

    pub fn torus(m: usize, n: usize) -> Result<Self> {
        Self::new(GridKind::Torus, m, n)
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.row < self.m && v.col < self.n
    }

    pub fn index(&self, v: Vertex) -> usize {
        debug_assert!(self.contains(v));
        v.row * self.n + v.col
    }

    pub fn vertex(&self, idx: usize) -> Vertex {
        Vertex::new(idx / self.n, idx % self.n)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count()).map(|i| self.vertex(i))
    }

    /// Board with rows and columns exchanged. Only meaningful for kinds
    /// that are symmetric under the exchange (planar grid, torus).
    pub fn transposed(&self) -> GridSpec {
        GridSpec {
            kind: self.kind,
            m: self.n,
            n: self.m,
        }
    }

    /// Applies `mv` to `v`; `None` if the step leaves a planar border.
    pub fn step(&self, v: Vertex, mv: Move) -> Option<Vertex> {
        let (dr, dc) = mv.delta();
        let row = shift(v.row, dr, self.m, self.kind.wraps_rows())?;
        let col = shift(v.col, dc, self.n, self.kind.wraps_cols())?;
        Some(Vertex { row, col })
    }

    /// Open neighbourhood N(v), in `Up, Down, Left, Right` order.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        Move::DIRECTIONS
            .iter()
            .filter_map(|&mv| self.step(v, mv))
            .collect()
    }

    /// Closed neighbourhood N[v] = N(v) plus v itself.
    pub fn closed_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(5);
        out.push(v);
        out.extend(self.neighbors(v));
        out
    }

    pub fn adjacent(&self, u: Vertex, w: Vertex) -> bool {
        self.distance(u, w) == 1
    }

    pub fn row_distance(&self, a: usize, b: usize) -> usize {
        axis_distance(a, b, self.m, self.kind.wraps_rows())
    }

    pub fn col_distance(&self, a: usize, b: usize) -> usize {
        axis_distance(a, b, self.n, self.kind.wraps_cols())
    }

    /// Shortest-path length in edges.
    pub fn distance(&self, u: Vertex, w: Vertex) -> usize {
        self.row_distance(u.row, w.row) + self.col_distance(u.col, w.col)
    }

    pub fn vertex_class(&self, v: Vertex) -> VertexClass {
        let top_or_bottom = v.row == 0 || v.row == self.m - 1;
        let left_or_right = v.col == 0 || v.col == self.n - 1;
        match self.kind {
            GridKind::Torus => VertexClass::Internal,
            GridKind::SemiTorus if top_or_bottom => VertexClass::Border,
            GridKind::SemiTorus => VertexClass::Internal,
            GridKind::PlanarGrid => match (top_or_bottom, left_or_right) {
                (true, true) => VertexClass::Corner,
                (false, false) => VertexClass::Internal,
                _ => VertexClass::Border,
            },
        }
    }

    /// Tests whether `cycle` is an e-loop: a chordless cycle such that
    /// every vertex off the cycle touches at most one cycle vertex.
    pub fn is_e_loop(&self, cycle: &[Vertex]) -> Result<bool> {
        let e = cycle.len();
        if e < 4 {
            return Err(Error::Input(format!("cycle of length {e} is too short")));
        }
        for (i, &v) in cycle.iter().enumerate() {
            if !self.contains(v) {
                return Err(Error::Input(format!("{v} is not on the board")));
            }
            if cycle[..i].contains(&v) {
                return Err(Error::Input(format!("{v} repeats in the cycle")));
            }
            let next = cycle[(i + 1) % e];
            if !self.adjacent(v, next) {
                return Err(Error::Input(format!("{v} and {next} are not adjacent")));
            }
        }
        for i in 0..e {
            for j in i + 2..e {
                if i == 0 && j == e - 1 {
                    continue;
                }
                if self.adjacent(cycle[i], cycle[j]) {
                    return Ok(false);
                }
            }
        }
        for w in self.vertices().filter(|w| !cycle.contains(w)) {
            let touches = cycle.iter().filter(|&&c| self.adjacent(c, w)).count();
            if touches > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            GridKind::PlanarGrid => 'G',
            GridKind::SemiTorus => 'S',
            GridKind::Torus => 'T',
        };
        write!(f, "{letter}{},{}", self.m, self.n)
    }
}

fn shift(x: usize, d: isize, size: usize, wraps: bool) -> Option<usize> {
    let y = x as isize + d;
    if wraps {
        Some(y.rem_euclid(size as isize) as usize)
    } else if y < 0 || y >= size as isize {
        None
    } else {
        Some(y as usize)
    }
}

fn axis_distance(a: usize, b: usize, size: usize, wraps: bool) -> usize {
    let d = a.abs_diff(b);
    if wraps {
        d.min(size - d)
    } else {
        d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl Vertex {
    pub const fn new(row: usize, col: usize) -> Self {
        Vertex { row, col }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl std::str::FromStr for Move {
    type Err = Error;

    /// Accepts `stay`, `up`, `down`, `left`, `right` or their initials.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "s" | "stay" => Ok(Move::Stay),
            "u" | "up" => Ok(Move::Up),
            "d" | "down" => Ok(Move::Down),
            "l" | "left" => Ok(Move::Left),
            "r" | "right" => Ok(Move::Right),
            other => Err(Error::Input(format!("unknown move `{other}`"))),
        }
    }
}

impl From<(usize, usize)> for Vertex {
    fn from((row, col): (usize, usize)) -> Self {
        Vertex { row, col }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    Corner,
    Border,
    Internal,
}

/// A single agent's displacement for one turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Move {
    Stay,
    Up,
    Down,
    Left,
    Right,
}

impl Move {
    /// All moves in tie-break order.
    pub const ALL: [Move; 5] = [Move::Stay, Move::Up, Move::Down, Move::Left, Move::Right];
    pub const DIRECTIONS: [Move; 4] = [Move::Up, Move::Down, Move::Left, Move::Right];

    pub fn delta(self) -> (isize, isize) {
        match self {
            Move::Stay => (0, 0),
            Move::Up => (-1, 0),
            Move::Down => (1, 0),
            Move::Left => (0, -1),
            Move::Right => (0, 1),
        }
    }

    pub fn opposite(self) -> Move {
        match self {
            Move::Stay => Move::Stay,
            Move::Up => Move::Down,
            Move::Down => Move::Up,
            Move::Left => Move::Right,
            Move::Right => Move::Left,
        }
    }

    /// The move `w` is reached by from `v`, if they are equal or adjacent.
    pub fn between(spec: &GridSpec, v: Vertex, w: Vertex) -> Option<Move> {
        Move::ALL.into_iter().find(|&mv| spec.step(v, mv) == Some(w))
    }
}
