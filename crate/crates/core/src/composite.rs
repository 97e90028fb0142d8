//! Frame and cross engines assembled from corner seam matrices and strip
//! transfer matrices.
//!
//! A frame (rectangle with a centered rectangular hole) splits into four
//! corner rectangles and four side strips. Walking the ring counterclockwise
//! from the south-west corner, every tile lies in exactly one piece or
//! crosses exactly one of the eight seams between consecutive pieces. Each
//! seam carries a state: the subset of cells on the downstream side of the
//! seam still *available* after the upstream piece's protruding tiles are
//! placed (the same availability convention as [`crate::transfer`], read
//! bottom to top on vertical seams and left to right on horizontal ones).
//! Summing over all seam states factorises the count into a trace of a cyclic
//! matrix product:
//!
//! ```text
//! tr( SW * TM(a1)^n * SE * TM(b2)^m * NE * TM(a2)^n * NW * TM(b1)^m )
//! ```
//!
//! where `SW = seam(a1, b1, Up, Right)` counts tilings of the `a1 x b1`
//! corner given which top-row cells the west strip already covered (row
//! index) and which first-column cells of the south strip its own tiles
//! protrude into (column index, as the availability they leave), and the
//! other three corners follow the same pattern rotated around the ring.
//!
//! The decomposition requires both hole dimensions to be positive or both
//! zero: if exactly one of them is zero, two opposite strips touch along a
//! seam the cycle does not model, and the trace counts only the tilings in
//! which no tile crosses that seam. [`Engine::frame_count`] therefore
//! dispatches degenerate holes to plain rectangle counting, while
//! [`Engine::frame_count_trace`] exposes the raw trace value, whose bivariate
//! generating function has the classical separable-denominator form.
//!
//! Crosses are handled the same way, except the central block protrudes into
//! all four arms independently; each arm is a dead-end strip, so its count is
//! the `(state, full)` entry of a transfer-matrix power.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::direct::TilingMode;
use crate::exact::{Matrix, WeightRing};
use crate::region::{Cell, CrossSpec, FrameSpec};
use crate::transfer::{full_mask, rect_count, Axis, TmCache, TransferError};

/// A side of an axis-aligned rectangle, in the order Up, Left, Down, Right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Up,
    Left,
    Down,
    Right,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Up, Side::Left, Side::Down, Side::Right];

    fn index(self) -> usize {
        match self {
            Side::Up => 0,
            Side::Left => 1,
            Side::Down => 2,
            Side::Right => 3,
        }
    }

    /// Number of boundary cells along this side of a `rows x cols` block.
    fn len(self, rows: u8, cols: u8) -> u8 {
        match self {
            Side::Up | Side::Down => cols,
            Side::Left | Side::Right => rows,
        }
    }

    /// The `pos`-th boundary cell (left to right on horizontal sides, bottom
    /// to top on vertical ones).
    fn boundary_cell(self, pos: u8, rows: u8, cols: u8) -> Cell {
        match self {
            Side::Up => Cell::new(pos as i64, rows as i64 - 1),
            Side::Down => Cell::new(pos as i64, 0),
            Side::Left => Cell::new(0, pos as i64),
            Side::Right => Cell::new(cols as i64 - 1, pos as i64),
        }
    }

    /// The outside cell a tile covers when protruding through position `pos`.
    fn halo_cell(self, pos: u8, rows: u8, cols: u8) -> Cell {
        match self {
            Side::Up => Cell::new(pos as i64, rows as i64),
            Side::Down => Cell::new(pos as i64, -1),
            Side::Left => Cell::new(-1, pos as i64),
            Side::Right => Cell::new(cols as i64, pos as i64),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Side::Up => "up",
            Side::Left => "left",
            Side::Down => "down",
            Side::Right => "right",
        };
        f.write_str(name)
    }
}

/// Error type of the assembly layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompositeError {
    /// `corner_transfer` requires two distinct free sides.
    SameSide,
    Transfer(TransferError),
}

impl From<TransferError> for CompositeError {
    fn from(e: TransferError) -> Self {
        CompositeError::Transfer(e)
    }
}

impl fmt::Display for CompositeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompositeError::SameSide => write!(f, "the two free sides must be distinct"),
            CompositeError::Transfer(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for CompositeError {}

/// Protrusion profile of a block: one bitmask per side, in the order Up,
/// Left, Down, Right.
pub type Profile = [u32; 4];

fn rect_cells(rows: u8, cols: u8) -> BTreeSet<Cell> {
    let mut cells = BTreeSet::new();
    for x in 0..cols as i64 {
        for y in 0..rows as i64 {
            cells.insert(Cell::new(x, y));
        }
    }
    cells
}

fn halo_for(sides: &[Side], rows: u8, cols: u8) -> BTreeMap<Cell, (usize, u8)> {
    let mut halo = BTreeMap::new();
    for &side in sides {
        for pos in 0..side.len(rows, cols) {
            halo.insert(side.halo_cell(pos, rows, cols), (side.index(), pos));
        }
    }
    halo
}

/// Enumerates all tilings of `cells` in which tiles may protrude onto the
/// listed halo cells (each halo cell is adjacent to exactly one block cell),
/// aggregating weights per protrusion profile. Protruding tiles are credited
/// to the block; up/down protrusions are vertical dominoes, left/right ones
/// horizontal.
fn stickout_profiles<W: WeightRing>(
    cells: &BTreeSet<Cell>,
    halo: &BTreeMap<Cell, (usize, u8)>,
    mode: TilingMode,
) -> BTreeMap<Profile, W> {
    let mut dp = StickDp {
        cells: cells.clone(),
        halo,
        memo: BTreeMap::new(),
        mode,
    };
    let result = dp.run();
    result.as_ref().clone()
}

struct StickDp<'a, W> {
    cells: BTreeSet<Cell>,
    halo: &'a BTreeMap<Cell, (usize, u8)>,
    memo: BTreeMap<Vec<Cell>, Rc<BTreeMap<Profile, W>>>,
    mode: TilingMode,
}

fn merge_profiles<W: WeightRing>(
    acc: &mut BTreeMap<Profile, W>,
    sub: &BTreeMap<Profile, W>,
    weight: &W,
    bit: Option<(usize, u8)>,
) {
    for (prof, val) in sub {
        let mut p = *prof;
        if let Some((side, pos)) = bit {
            debug_assert_eq!(p[side] & (1 << pos), 0, "halo cell used twice");
            p[side] |= 1 << pos;
        }
        let entry = acc.entry(p).or_insert_with(W::zero);
        *entry = entry.add_ref(&weight.mul_ref(val));
    }
}

impl<W: WeightRing> StickDp<'_, W> {
    fn run(&mut self) -> Rc<BTreeMap<Profile, W>> {
        if self.cells.is_empty() {
            let mut base = BTreeMap::new();
            base.insert([0u32; 4], W::one());
            return Rc::new(base);
        }
        let key: Vec<Cell> = self.cells.iter().copied().collect();
        if let Some(v) = self.memo.get(&key) {
            return Rc::clone(v);
        }
        let pivot = *self.cells.iter().next().expect("nonempty");
        self.cells.remove(&pivot);
        let mut acc: BTreeMap<Profile, W> = BTreeMap::new();

        let right = Cell::new(pivot.x + 1, pivot.y);
        if self.cells.remove(&right) {
            let sub = self.run();
            merge_profiles(&mut acc, &sub, &W::horizontal(), None);
            self.cells.insert(right);
        } else if let Some(&hit) = self.halo.get(&right) {
            let sub = self.run();
            merge_profiles(&mut acc, &sub, &W::horizontal(), Some(hit));
        }

        let up = Cell::new(pivot.x, pivot.y + 1);
        if self.cells.remove(&up) {
            let sub = self.run();
            merge_profiles(&mut acc, &sub, &W::vertical(), None);
            self.cells.insert(up);
        } else if let Some(&hit) = self.halo.get(&up) {
            let sub = self.run();
            merge_profiles(&mut acc, &sub, &W::vertical(), Some(hit));
        }

        // left and downward neighbours inside the block are already covered,
        // so only halo cells can take the other half of the tile there
        let left = Cell::new(pivot.x - 1, pivot.y);
        if let Some(&hit) = self.halo.get(&left) {
            let sub = self.run();
            merge_profiles(&mut acc, &sub, &W::horizontal(), Some(hit));
        }
        let down = Cell::new(pivot.x, pivot.y - 1);
        if let Some(&hit) = self.halo.get(&down) {
            let sub = self.run();
            merge_profiles(&mut acc, &sub, &W::vertical(), Some(hit));
        }

        if self.mode == TilingMode::MonomerDimer {
            let sub = self.run();
            merge_profiles(&mut acc, &sub, &W::monomer(), None);
        }

        self.cells.insert(pivot);
        let rc = Rc::new(acc);
        self.memo.insert(key, Rc::clone(&rc));
        rc
    }
}

type SeamKey = (u8, u8, Side, Side, TilingMode);
type ProfileTable<W> = Rc<Vec<(Profile, W)>>;
type PowerChain<W> = Vec<Rc<Matrix<W>>>;

/// The frame/cross assembly engine. Holds the transfer-matrix cache plus the
/// corner and central-block caches; all cached values are immutable and keyed
/// by their full parameter set, so reuse never changes results.
pub struct Engine<W> {
    tm: TmCache<W>,
    // consecutive powers of each strip matrix, extended on demand
    strip_pows: BTreeMap<(u8, TilingMode, Axis), PowerChain<W>>,
    seams: BTreeMap<SeamKey, Rc<Matrix<W>>>,
    rtms: BTreeMap<SeamKey, Rc<Matrix<W>>>,
    crosses: BTreeMap<(u8, u8, TilingMode), ProfileTable<W>>,
}

impl<W: WeightRing> Default for Engine<W> {
    fn default() -> Self {
        Engine::new()
    }
}

impl<W: WeightRing> Engine<W> {
    pub fn new() -> Self {
        Engine::with_cap(crate::transfer::DEFAULT_WIDTH_CAP)
    }

    pub fn with_cap(cap: u8) -> Self {
        Engine {
            tm: TmCache::with_cap(cap),
            strip_pows: BTreeMap::new(),
            seams: BTreeMap::new(),
            rtms: BTreeMap::new(),
            crosses: BTreeMap::new(),
        }
    }

    pub fn tm_cache(&mut self) -> &mut TmCache<W> {
        &mut self.tm
    }

    /// `TM(width)^k`, served from the per-strip power cache.
    fn strip_power(
        &mut self,
        width: u8,
        mode: TilingMode,
        axis: Axis,
        k: usize,
    ) -> Result<Rc<Matrix<W>>, CompositeError> {
        let base = self.tm.tm(width, mode, axis)?;
        let powers = self
            .strip_pows
            .entry((width, mode, axis))
            .or_insert_with(|| vec![Rc::new(Matrix::identity(base.rows()))]);
        while powers.len() <= k {
            let next = powers.last().expect("nonempty").mul(&base);
            powers.push(Rc::new(next));
        }
        Ok(Rc::clone(&powers[k]))
    }

    fn check_width(&self, v: u32) -> Result<u8, CompositeError> {
        if v == 0 || v > self.tm.cap() as u32 {
            return Err(TransferError::WidthBeyondCap {
                width: v,
                cap: self.tm.cap(),
            }
            .into());
        }
        Ok(v as u8)
    }

    /// The corner stick-out matrix: entry `(i, j)` counts (or
    /// weight-enumerates) the complete tilings of the `a x b` rectangle whose
    /// protrusions through side `s1` form exactly the subset with mask `i`
    /// and through side `s2` the subset with mask `j`, with the other two
    /// sides flush.
    pub fn corner_transfer(
        &mut self,
        a: u8,
        b: u8,
        s1: Side,
        s2: Side,
        mode: TilingMode,
    ) -> Result<Rc<Matrix<W>>, CompositeError> {
        if s1 == s2 {
            return Err(CompositeError::SameSide);
        }
        self.check_width(a as u32)?;
        self.check_width(b as u32)?;
        let key = (a, b, s1, s2, mode);
        if let Some(m) = self.rtms.get(&key) {
            return Ok(Rc::clone(m));
        }
        let cells = rect_cells(a, b);
        let halo = halo_for(&[s1, s2], a, b);
        let profs = stickout_profiles::<W>(&cells, &halo, mode);
        let rows = 1usize << s1.len(a, b);
        let cols = 1usize << s2.len(a, b);
        let mut mat = Matrix::zero(rows, cols);
        for (prof, w) in profs {
            *mat.get_mut(prof[s1.index()] as usize, prof[s2.index()] as usize) = w;
        }
        let rc = Rc::new(mat);
        self.rtms.insert(key, Rc::clone(&rc));
        Ok(rc)
    }

    /// The seam matrix used in the frame trace: row `i` is the availability
    /// left on the corner's `into` side by the upstream strip, column `j` the
    /// availability this corner's protrusions leave on the downstream strip's
    /// first column (through side `out`).
    fn seam(
        &mut self,
        rows: u8,
        cols: u8,
        into: Side,
        out: Side,
        mode: TilingMode,
    ) -> Rc<Matrix<W>> {
        let key = (rows, cols, into, out, mode);
        if let Some(m) = self.seams.get(&key) {
            return Rc::clone(m);
        }
        let in_len = into.len(rows, cols);
        let out_len = out.len(rows, cols);
        let halo = halo_for(&[out], rows, cols);
        let full_out = full_mask(out_len);
        let mut mat = Matrix::zero(1usize << in_len, 1usize << out_len);
        for avail in 0..(1u32 << in_len) {
            let mut cells = rect_cells(rows, cols);
            for pos in 0..in_len {
                if avail & (1 << pos) == 0 {
                    cells.remove(&into.boundary_cell(pos, rows, cols));
                }
            }
            let profs = stickout_profiles::<W>(&cells, &halo, mode);
            for (prof, w) in profs {
                let j = full_out ^ prof[out.index()];
                *mat.get_mut(avail as usize, j as usize) = w;
            }
        }
        let rc = Rc::new(mat);
        self.seams.insert(key, Rc::clone(&rc));
        rc
    }

    /// Number (or weight enumerator) of tilings of the frame region of
    /// `spec`. A hole degenerate in exactly one dimension leaves the solid
    /// outer rectangle with an uncovered seam the trace cannot model, so that
    /// case is counted as a plain rectangle; a hole degenerate in both
    /// dimensions is the solid rectangle too, but the four-corner trace
    /// covers it exactly (every piece boundary lies on the cycle).
    pub fn frame_count(&mut self, spec: &FrameSpec, mode: TilingMode) -> Result<W, CompositeError> {
        if (spec.hole_rows() == 0) != (spec.hole_cols() == 0) {
            let (rows, cols) = spec.outer();
            return Ok(rect_count(&mut self.tm, rows, cols, mode)?);
        }
        self.frame_count_trace(spec, mode)
    }

    /// The raw trace-formula value for `spec`. Equal to
    /// [`Engine::frame_count`] whenever both hole dimensions are positive or
    /// both are zero; for a hole degenerate in exactly one dimension it
    /// counts only the tilings of the solid rectangle in which no tile
    /// crosses the seam segment the hole collapses to.
    pub fn frame_count_trace(
        &mut self,
        spec: &FrameSpec,
        mode: TilingMode,
    ) -> Result<W, CompositeError> {
        let a1 = self.check_width(spec.a1())?;
        let a2 = self.check_width(spec.a2())?;
        let b1 = self.check_width(spec.b1())?;
        let b2 = self.check_width(spec.b2())?;
        let m = spec.hole_rows() as usize;
        let n = spec.hole_cols() as usize;
        let south = self.strip_power(a1, mode, Axis::Horizontal, n)?;
        let east = self.strip_power(b2, mode, Axis::Vertical, m)?;
        let north = self.strip_power(a2, mode, Axis::Horizontal, n)?;
        let west = self.strip_power(b1, mode, Axis::Vertical, m)?;
        let c_sw = self.seam(a1, b1, Side::Up, Side::Right, mode);
        let c_se = self.seam(a1, b2, Side::Left, Side::Up, mode);
        let c_ne = self.seam(a2, b2, Side::Down, Side::Left, mode);
        let c_nw = self.seam(a2, b1, Side::Right, Side::Down, mode);
        let prod = c_sw
            .mul(&south)
            .mul(&c_se)
            .mul(&east)
            .mul(&c_ne)
            .mul(&north)
            .mul(&c_nw)
            .mul(&west);
        Ok(prod.trace())
    }

    /// Frame counts for square holes `n = 0 ..= n_last`.
    pub fn frame_seq(
        &mut self,
        a1: u32,
        a2: u32,
        b1: u32,
        b2: u32,
        n_last: usize,
        mode: TilingMode,
    ) -> Result<Vec<W>, CompositeError> {
        // a zero thickness is just a width outside the supported range
        self.check_width(a1)?;
        self.check_width(a2)?;
        self.check_width(b1)?;
        self.check_width(b2)?;
        let base = FrameSpec::new(a1, a2, b1, b2, 0, 0).expect("thicknesses checked");
        (0..=n_last)
            .map(|n| self.frame_count(&base.with_hole(n as u32, n as u32), mode))
            .collect()
    }

    /// The table `D(m, n)` of frame counts for holes `m x n`,
    /// `0 <= m <= m_last`, `0 <= n <= n_last` (region counts; degenerate
    /// holes are solid rectangles).
    pub fn frame_table(
        &mut self,
        spec: &FrameSpec,
        m_last: usize,
        n_last: usize,
        mode: TilingMode,
    ) -> Result<Vec<Vec<W>>, CompositeError> {
        self.table_with(spec, m_last, n_last, mode, Engine::frame_count)
    }

    /// Like [`Engine::frame_table`] but using the raw trace value everywhere;
    /// this is the table whose bivariate generating function has the
    /// separable form `P(x, y) / (Q1(x) Q2(y))`.
    pub fn frame_table_trace(
        &mut self,
        spec: &FrameSpec,
        m_last: usize,
        n_last: usize,
        mode: TilingMode,
    ) -> Result<Vec<Vec<W>>, CompositeError> {
        self.table_with(spec, m_last, n_last, mode, Engine::frame_count_trace)
    }

    fn table_with(
        &mut self,
        spec: &FrameSpec,
        m_last: usize,
        n_last: usize,
        mode: TilingMode,
        mut f: impl FnMut(&mut Self, &FrameSpec, TilingMode) -> Result<W, CompositeError>,
    ) -> Result<Vec<Vec<W>>, CompositeError> {
        let mut table = Vec::with_capacity(m_last + 1);
        for m in 0..=m_last {
            let mut row = Vec::with_capacity(n_last + 1);
            for n in 0..=n_last {
                row.push(f(self, &spec.with_hole(m as u32, n as u32), mode)?);
            }
            table.push(row);
        }
        Ok(table)
    }

    fn cross_profiles(&mut self, a: u8, b: u8, mode: TilingMode) -> ProfileTable<W> {
        let key = (a, b, mode);
        if let Some(p) = self.crosses.get(&key) {
            return Rc::clone(p);
        }
        // the central block is `a` wide and `b` tall
        let cells = rect_cells(b, a);
        let halo = halo_for(&Side::ALL, b, a);
        let profs = stickout_profiles::<W>(&cells, &halo, mode);
        let rc = Rc::new(profs.into_iter().collect::<Vec<_>>());
        self.crosses.insert(key, Rc::clone(&rc));
        rc
    }

    /// Cross counts for arm lengths `n = 0 ..= n_last`: every tiling of the
    /// central block with protrusions into the four arms, times the number of
    /// completions of each arm.
    pub fn cross_seq(
        &mut self,
        spec: &CrossSpec,
        n_last: usize,
        mode: TilingMode,
    ) -> Result<Vec<W>, CompositeError> {
        let a = self.check_width(spec.a())?;
        let b = self.check_width(spec.b())?;
        // vertical arms have width a, horizontal arms height b
        let tm_ns = self.tm.tm(a, mode, Axis::Vertical)?;
        let tm_ew = self.tm.tm(b, mode, Axis::Horizontal)?;
        let profs = self.cross_profiles(a, b, mode);
        let full_a = full_mask(a);
        let full_b = full_mask(b);
        let e_full = |dim: usize, full: usize| -> Vec<W> {
            (0..dim)
                .map(|i| if i == full { W::one() } else { W::zero() })
                .collect()
        };
        let mut vec_ns = e_full(1 << a, full_a as usize);
        let mut vec_ew = e_full(1 << b, full_b as usize);
        let mut out = Vec::with_capacity(n_last + 1);
        for n in 0..=n_last {
            if n > 0 {
                vec_ns = tm_ns.mul_vec(&vec_ns);
                vec_ew = tm_ew.mul_vec(&vec_ew);
            }
            let mut total = W::zero();
            for (prof, w) in profs.iter() {
                let up = &vec_ns[(full_a ^ prof[Side::Up.index()]) as usize];
                let left = &vec_ew[(full_b ^ prof[Side::Left.index()]) as usize];
                let down = &vec_ns[(full_a ^ prof[Side::Down.index()]) as usize];
                let right = &vec_ew[(full_b ^ prof[Side::Right.index()]) as usize];
                if up.is_zero() || left.is_zero() || down.is_zero() || right.is_zero() {
                    continue;
                }
                let term = w.mul_ref(up).mul_ref(left).mul_ref(down).mul_ref(right);
                total = total.add_ref(&term);
            }
            out.push(total);
        }
        Ok(out)
    }
}
