//! The transfer-matrix method for strips of fixed width.
//!
//! Tiling an `m x n` rectangle column by column is a walk in a directed graph
//! on the subsets of `{1..m}`: a vertex is the set of cells of the current
//! column still *available* (not occupied by dominoes protruding from the
//! previous column). From an availability set one chooses disjoint vertical
//! dominoes inside it, optionally monomers on remaining cells, and every cell
//! still uncovered takes a horizontal domino protruding into the next column;
//! the successor state is the complement of the protruding set. The whole
//! column must end up covered, so the only follower of the empty set is the
//! universal set.
//!
//! States are indexed by the binary value of their bitmask (bit `i` set means
//! cell `i + 1`, counting from the bottom, is available), so index `0` is the
//! empty set and `2^m - 1` the full column. The number of tilings of an
//! `m x n` rectangle is the `(full, full)` entry of the `n`-th power of the
//! transfer matrix: the first column is fully available and nothing may
//! protrude past the last one.
//!
//! In weighted mode entries are monomials in the tile weights; a horizontal
//! domino is credited once, in the column where it originates. Strips that
//! are walked vertically (frame sides, cross arms) use the same abstract
//! matrix with the roles of `h` and `v` swapped — see [`Axis`].

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::fmt;

use crate::direct::TilingMode;
use crate::exact::{Int, Matrix, MultiPoly, WeightRing};

/// Default bound on the strip width (matrix dimension `2^8 = 256`).
pub const DEFAULT_WIDTH_CAP: u8 = 8;

/// Hard ceiling regardless of configuration, to keep the dense `2^m x 2^m`
/// matrix representation sane.
pub const MAX_WIDTH: u8 = 12;

/// Which way a strip is walked. `Horizontal` steps move rightward through
/// vertical columns (the convention of the module doc); `Vertical` steps move
/// through horizontal rows, which exchanges the geometric meaning of the two
/// domino orientations and therefore swaps the weights `h` and `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// An availability subset of the `m` cells of a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnState {
    pub mask: u32,
    pub width: u8,
}

impl ColumnState {
    pub fn new(mask: u32, width: u8) -> Self {
        debug_assert!(width as u32 <= 32 && mask < (1u32 << width));
        ColumnState { mask, width }
    }

    pub fn full(width: u8) -> Self {
        ColumnState::new(full_mask(width), width)
    }

    pub fn empty(width: u8) -> Self {
        ColumnState::new(0, width)
    }
}

pub(crate) fn full_mask(width: u8) -> u32 {
    (1u32 << width) - 1
}

/// Error type of the transfer layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransferError {
    WidthBeyondCap { width: u32, cap: u8 },
}

impl fmt::Display for TransferError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransferError::WidthBeyondCap { width, cap } => {
                write!(
                    f,
                    "strip width {width} outside the supported range 1..={cap}"
                )
            }
        }
    }
}

impl core::error::Error for TransferError {}

/// Per-step weights in strip-local terms: `along` weighs a domino protruding
/// into the next step, `across` a domino lying inside the current step,
/// `single` a monomer.
struct StepWeights<W> {
    along: W,
    across: W,
    single: W,
}

impl<W: WeightRing> StepWeights<W> {
    fn for_axis(axis: Axis) -> Self {
        match axis {
            Axis::Horizontal => StepWeights {
                along: W::horizontal(),
                across: W::vertical(),
                single: W::monomer(),
            },
            Axis::Vertical => StepWeights {
                along: W::vertical(),
                across: W::horizontal(),
                single: W::monomer(),
            },
        }
    }
}

fn followers_in<W: WeightRing>(
    mask: u32,
    width: u8,
    mode: TilingMode,
    w: &StepWeights<W>,
) -> BTreeMap<u32, W> {
    let mut out = BTreeMap::new();
    place(mask, width, mode, w, W::one(), 0, &mut out);
    out
}

/// Enumerates every way to finish the current column given availability
/// `avail`, aggregating the placement weights per follower state.
fn place<W: WeightRing>(
    avail: u32,
    width: u8,
    mode: TilingMode,
    w: &StepWeights<W>,
    weight: W,
    protruding: u32,
    out: &mut BTreeMap<u32, W>,
) {
    if avail == 0 {
        let follower = full_mask(width) ^ protruding;
        let entry = out.entry(follower).or_insert_with(W::zero);
        *entry = entry.add_ref(&weight);
        return;
    }
    let p = avail.trailing_zeros();
    let pbit = 1u32 << p;
    // the cell joins a domino protruding into the next column
    place(
        avail & !pbit,
        width,
        mode,
        w,
        weight.mul_ref(&w.along),
        protruding | pbit,
        out,
    );
    // a domino inside the column, with the cell above
    let above = pbit << 1;
    if p + 1 < width as u32 && avail & above != 0 {
        place(
            avail & !(pbit | above),
            width,
            mode,
            w,
            weight.mul_ref(&w.across),
            protruding,
            out,
        );
    }
    if mode == TilingMode::MonomerDimer {
        place(
            avail & !pbit,
            width,
            mode,
            w,
            weight.mul_ref(&w.single),
            protruding,
            out,
        );
    }
}

/// The followers of `state` with their aggregated weight monomials, in
/// ascending mask order. Weights are in the geometric convention of a
/// horizontally walked strip.
pub fn followers(state: ColumnState, mode: TilingMode) -> Vec<(ColumnState, MultiPoly)> {
    let w = StepWeights::<MultiPoly>::for_axis(Axis::Horizontal);
    followers_in(state.mask, state.width, mode, &w)
        .into_iter()
        .map(|(mask, weight)| (ColumnState::new(mask, state.width), weight))
        .collect()
}

/// Cache of transfer matrices keyed by `(width, mode, axis)`. Matrices are
/// immutable once built and shared via `Rc`; create one cache per thread for
/// concurrent use.
pub struct TmCache<W> {
    cap: u8,
    map: BTreeMap<(u8, TilingMode, Axis), Rc<Matrix<W>>>,
}

impl<W: WeightRing> Default for TmCache<W> {
    fn default() -> Self {
        TmCache::new()
    }
}

impl<W: WeightRing> TmCache<W> {
    pub fn new() -> Self {
        TmCache::with_cap(DEFAULT_WIDTH_CAP)
    }

    pub fn with_cap(cap: u8) -> Self {
        TmCache {
            cap: cap.min(MAX_WIDTH),
            map: BTreeMap::new(),
        }
    }

    pub fn cap(&self) -> u8 {
        self.cap
    }

    /// The `2^m x 2^m` transfer matrix for width `m`, built once per key.
    pub fn tm(
        &mut self,
        width: u8,
        mode: TilingMode,
        axis: Axis,
    ) -> Result<Rc<Matrix<W>>, TransferError> {
        if width == 0 || width > self.cap {
            return Err(TransferError::WidthBeyondCap {
                width: width as u32,
                cap: self.cap,
            });
        }
        let key = (width, mode, axis);
        if let Some(m) = self.map.get(&key) {
            return Ok(Rc::clone(m));
        }
        let dim = 1usize << width;
        let w = StepWeights::for_axis(axis);
        let mut mat = Matrix::zero(dim, dim);
        for state in 0..dim as u32 {
            for (follower, weight) in followers_in(state, width, mode, &w) {
                *mat.get_mut(state as usize, follower as usize) = weight;
            }
        }
        let rc = Rc::new(mat);
        self.map.insert(key, Rc::clone(&rc));
        Ok(rc)
    }
}

/// Tilings of the `m x n` rectangles for `n = 0 ..= n_last`, by iterated
/// state-vector propagation from the full state.
pub fn seq_rect(
    cache: &mut TmCache<Int>,
    m: u8,
    n_last: usize,
    mode: TilingMode,
) -> Result<Vec<Int>, TransferError> {
    seq_rect_in(cache, m, n_last, mode)
}

/// Generic (optionally weighted) version of [`seq_rect`].
pub fn seq_rect_in<W: WeightRing>(
    cache: &mut TmCache<W>,
    m: u8,
    n_last: usize,
    mode: TilingMode,
) -> Result<Vec<W>, TransferError> {
    let tm = cache.tm(m, mode, Axis::Horizontal)?;
    let full = full_mask(m) as usize;
    // row vector e_full * TM^n, read at the full coordinate
    let mut vec: Vec<W> = (0..tm.cols())
        .map(|i| if i == full { W::one() } else { W::zero() })
        .collect();
    let mut out = Vec::with_capacity(n_last + 1);
    out.push(W::one());
    for _ in 1..=n_last {
        let mut next: Vec<W> = (0..tm.cols()).map(|_| W::zero()).collect();
        for (i, vi) in vec.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, target) in next.iter_mut().enumerate() {
                let e = tm.get(i, j);
                if !e.is_zero() {
                    *target = target.add_ref(&vi.mul_ref(e));
                }
            }
        }
        vec = next;
        out.push(vec[full].clone());
    }
    Ok(out)
}

/// Count (or weight-enumerate) the tilings of a solid `rows x cols`
/// rectangle, walking along whichever dimension keeps the strip width within
/// the cap. An empty rectangle has exactly one (empty) tiling.
pub fn rect_count<W: WeightRing>(
    cache: &mut TmCache<W>,
    rows: u32,
    cols: u32,
    mode: TilingMode,
) -> Result<W, TransferError> {
    if rows == 0 || cols == 0 {
        return Ok(W::one());
    }
    let (width, steps, axis) = if rows <= cols {
        (rows, cols, Axis::Horizontal)
    } else {
        (cols, rows, Axis::Vertical)
    };
    if width > cache.cap as u32 {
        return Err(TransferError::WidthBeyondCap {
            width,
            cap: cache.cap,
        });
    }
    let tm = cache.tm(width as u8, mode, axis)?;
    let full = full_mask(width as u8) as usize;
    let mut vec: Vec<W> = (0..tm.cols())
        .map(|i| if i == full { W::one() } else { W::zero() })
        .collect();
    for _ in 0..steps {
        vec = tm.mul_vec(&vec);
    }
    Ok(vec[full].clone())
}
