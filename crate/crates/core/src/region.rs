//! The geometric data model: finite sets of unit cells and builders for the
//! rectangle, frame and cross families.
//!
//! Coordinates follow the convention that `x` grows rightward (columns) and
//! `y` grows upward (rows), so the cells of one column read bottom to top.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// One unit cell of the integer grid. Ordering is column-major: by `x`, then
/// by `y`, which makes the first cell of a region its left-most bottom-most
/// cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A finite set of unit cells.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Region {
    cells: BTreeSet<Cell>,
}

impl Region {
    pub fn new() -> Self {
        Region::default()
    }

    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        Region {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub(crate) fn cell_set(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Region {
        Region::from_cells(self.cells().map(|c| Cell::new(c.x + dx, c.y + dy)))
    }

    /// Quarter turn counterclockwise about the origin.
    pub fn rotate90(&self) -> Region {
        Region::from_cells(self.cells().map(|c| Cell::new(-c.y, c.x)))
    }

    /// Mirror image across the vertical axis.
    pub fn reflect(&self) -> Region {
        Region::from_cells(self.cells().map(|c| Cell::new(-c.x, c.y)))
    }

    /// Translated so that `min x = min y = 0`; the empty region is its own
    /// canonical form.
    pub fn canonical(&self) -> Region {
        let Some(min_x) = self.cells().map(|c| c.x).min() else {
            return Region::new();
        };
        let min_y = self.cells().map(|c| c.y).min().expect("nonempty");
        self.translate(-min_x, -min_y)
    }

    pub fn to_sorted_cells(&self) -> Vec<Cell> {
        self.cells().collect()
    }
}

/// Error type for region construction and parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionError {
    /// A cell listed twice in a region file; carries the 1-based line number.
    DuplicateCell { line: usize, cell: Cell },
    /// A line that is not two whitespace-separated integers.
    MalformedLine { line: usize },
    /// Frame or cross parameters outside their domain.
    InvalidSpec(&'static str),
}

impl fmt::Display for RegionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionError::DuplicateCell { line, cell } => {
                write!(f, "duplicate cell {cell} on line {line}")
            }
            RegionError::MalformedLine { line } => {
                write!(f, "malformed line {line}: expected two integers \"x y\"")
            }
            RegionError::InvalidSpec(what) => write!(f, "invalid parameters: {what}"),
        }
    }
}

impl core::error::Error for RegionError {}

/// A rectangle with a centered rectangular hole: the outer rectangle is
/// `(a1 + m + a2)` rows by `(b1 + n + b2)` columns; the `m x n` hole sits
/// `a1` rows above the bottom edge and `b1` columns right of the left edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrameSpec {
    a1: u32,
    a2: u32,
    b1: u32,
    b2: u32,
    m: u32,
    n: u32,
}

impl FrameSpec {
    /// `a1`, `a2` are the bottom/top band heights, `b1`, `b2` the left/right
    /// band widths (all positive); the hole is `m` rows by `n` columns,
    /// possibly zero — a zero hole dimension leaves the solid rectangle.
    pub fn new(a1: u32, a2: u32, b1: u32, b2: u32, m: u32, n: u32) -> Result<Self, RegionError> {
        if a1 == 0 || a2 == 0 || b1 == 0 || b2 == 0 {
            return Err(RegionError::InvalidSpec("frame thicknesses must be >= 1"));
        }
        Ok(FrameSpec {
            a1,
            a2,
            b1,
            b2,
            m,
            n,
        })
    }

    pub fn a1(&self) -> u32 {
        self.a1
    }
    pub fn a2(&self) -> u32 {
        self.a2
    }
    pub fn b1(&self) -> u32 {
        self.b1
    }
    pub fn b2(&self) -> u32 {
        self.b2
    }
    /// Hole height (rows).
    pub fn hole_rows(&self) -> u32 {
        self.m
    }
    /// Hole width (columns).
    pub fn hole_cols(&self) -> u32 {
        self.n
    }

    pub fn with_hole(&self, m: u32, n: u32) -> FrameSpec {
        FrameSpec { m, n, ..*self }
    }

    /// Outer dimensions as (rows, columns).
    pub fn outer(&self) -> (u32, u32) {
        (self.a1 + self.m + self.a2, self.b1 + self.n + self.b2)
    }
}

/// A central `a`-wide, `b`-tall block with four rectangular arms of length
/// `n`: horizontal arms of height `b`, vertical arms of width `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossSpec {
    a: u32,
    b: u32,
    n: u32,
}

impl CrossSpec {
    pub fn new(a: u32, b: u32, n: u32) -> Result<Self, RegionError> {
        if a == 0 || b == 0 {
            return Err(RegionError::InvalidSpec("cross center must be >= 1 x 1"));
        }
        Ok(CrossSpec { a, b, n })
    }

    pub fn a(&self) -> u32 {
        self.a
    }
    pub fn b(&self) -> u32 {
        self.b
    }
    pub fn arm(&self) -> u32 {
        self.n
    }
}

/// The `m` rows by `n` columns rectangle `{(x, y) : 0 <= x < n, 0 <= y < m}`.
pub fn build_rectangle(m: u32, n: u32) -> Region {
    let mut cells = BTreeSet::new();
    for x in 0..n as i64 {
        for y in 0..m as i64 {
            cells.insert(Cell::new(x, y));
        }
    }
    Region { cells }
}

/// The frame region of `spec`; a hole with `m = 0` or `n = 0` yields the full
/// outer rectangle.
pub fn build_frame(spec: &FrameSpec) -> Region {
    let (rows, cols) = spec.outer();
    let hole_x = spec.b1 as i64..(spec.b1 + spec.n) as i64;
    let hole_y = spec.a1 as i64..(spec.a1 + spec.m) as i64;
    let mut cells = BTreeSet::new();
    for x in 0..cols as i64 {
        for y in 0..rows as i64 {
            if hole_x.contains(&x) && hole_y.contains(&y) {
                continue;
            }
            cells.insert(Cell::new(x, y));
        }
    }
    Region { cells }
}

/// The cross region of `spec`, translated so every coordinate is nonnegative
/// (the center block occupies `x in [n, n+a)`, `y in [n, n+b)`).
pub fn build_cross(spec: &CrossSpec) -> Region {
    let (a, b, n) = (spec.a as i64, spec.b as i64, spec.n as i64);
    let mut cells = BTreeSet::new();
    for x in n..n + a {
        for y in n..n + b {
            cells.insert(Cell::new(x, y));
        }
    }
    // west and east arms (height b)
    for dx in 0..n {
        for y in n..n + b {
            cells.insert(Cell::new(dx, y));
            cells.insert(Cell::new(n + a + dx, y));
        }
    }
    // south and north arms (width a)
    for dy in 0..n {
        for x in n..n + a {
            cells.insert(Cell::new(x, dy));
            cells.insert(Cell::new(x, n + b + dy));
        }
    }
    Region { cells }
}

/// Parses the region file format: one `x y` cell per line, blank lines and
/// lines starting with `#` ignored.
pub fn parse_region_file(text: &str) -> Result<Region, RegionError> {
    let mut cells = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let (Some(xs), Some(ys), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(RegionError::MalformedLine { line });
        };
        let (Ok(x), Ok(y)) = (xs.parse::<i64>(), ys.parse::<i64>()) else {
            return Err(RegionError::MalformedLine { line });
        };
        let cell = Cell::new(x, y);
        if !cells.insert(cell) {
            return Err(RegionError::DuplicateCell { line, cell });
        }
    }
    Ok(Region { cells })
}
