//! Direct enumeration of tilings by memoised dynamic programming.
//!
//! This is the crate's ground truth: a deliberately simple counter that works
//! on any finite cell set and knows nothing about transfer matrices. The
//! recurrence picks the left-most bottom-most uncovered cell and branches on
//! the ways to cover it — a horizontal domino to the right, a vertical domino
//! upward, and (in monomer-dimer mode) a single-cell tile. Left and downward
//! neighbours of the pivot are always already covered, so the branch set is
//! complete. Results are memoised on the sorted list of remaining cells;
//! recursion depth is bounded by the cell count.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::exact::{Int, MultiPoly, WeightRing};
use crate::region::{Cell, Region};

/// Which tile set is allowed: dominoes only, or dominoes and monomers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TilingMode {
    Dimer,
    MonomerDimer,
}

/// Number of complete tilings of `region`.
pub fn count_tilings(region: &Region, mode: TilingMode) -> Int {
    count_in::<Int>(region, mode)
}

/// Weight enumerator of `region`: the sum over tilings of
/// `h^(#horizontal) * v^(#vertical) * m^(#monomer)`. Evaluating at all ones
/// recovers [`count_tilings`].
pub fn count_weighted(region: &Region, mode: TilingMode) -> MultiPoly {
    count_in::<MultiPoly>(region, mode)
}

/// Generic tiling counter over any weight ring.
pub fn count_in<W: WeightRing>(region: &Region, mode: TilingMode) -> W {
    let mut dp = Dp {
        cells: region.cell_set().clone(),
        memo: BTreeMap::new(),
        mode,
    };
    dp.run()
}

struct Dp<W> {
    cells: BTreeSet<Cell>,
    memo: BTreeMap<Vec<Cell>, W>,
    mode: TilingMode,
}

impl<W: WeightRing> Dp<W> {
    fn run(&mut self) -> W {
        if self.cells.is_empty() {
            return W::one();
        }
        let key: Vec<Cell> = self.cells.iter().copied().collect();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let pivot = *self.cells.iter().next().expect("nonempty");
        self.cells.remove(&pivot);
        let mut acc = W::zero();
        let right = Cell::new(pivot.x + 1, pivot.y);
        if self.cells.remove(&right) {
            acc = acc.add_ref(&W::horizontal().mul_ref(&self.run()));
            self.cells.insert(right);
        }
        let up = Cell::new(pivot.x, pivot.y + 1);
        if self.cells.remove(&up) {
            acc = acc.add_ref(&W::vertical().mul_ref(&self.run()));
            self.cells.insert(up);
        }
        if self.mode == TilingMode::MonomerDimer {
            acc = acc.add_ref(&W::monomer().mul_ref(&self.run()));
        }
        self.cells.insert(pivot);
        self.memo.insert(key, acc.clone());
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat_int, MultiPoly};
    use crate::region::{build_frame, build_rectangle, FrameSpec};

    #[test]
    fn empty_region_has_one_tiling() {
        assert_eq!(count_tilings(&Region::new(), TilingMode::Dimer), int(1));
        assert_eq!(
            count_tilings(&Region::new(), TilingMode::MonomerDimer),
            int(1)
        );
    }

    #[test]
    fn single_cell() {
        let r = build_rectangle(1, 1);
        assert_eq!(count_tilings(&r, TilingMode::Dimer), int(0));
        assert_eq!(count_tilings(&r, TilingMode::MonomerDimer), int(1));
        assert_eq!(
            count_weighted(&r, TilingMode::MonomerDimer),
            MultiPoly::var(2)
        );
    }

    #[test]
    fn two_by_two() {
        let r = build_rectangle(2, 2);
        assert_eq!(count_tilings(&r, TilingMode::Dimer), int(2));
        // the two tilings weigh h^2 and v^2
        let h = MultiPoly::var(0);
        let v = MultiPoly::var(1);
        assert_eq!(
            count_weighted(&r, TilingMode::Dimer),
            h.mul(&h).add(&v.mul(&v))
        );
    }

    #[test]
    fn horizontal_pair_weighs_h() {
        let r = build_rectangle(1, 2);
        assert_eq!(count_weighted(&r, TilingMode::Dimer), MultiPoly::var(0));
    }

    #[test]
    fn square_ring_small_holes() {
        // frame(2,2,2,2) with square holes 0, 1, 2
        let expect = [36i64, 196, 1444];
        for (k, e) in expect.iter().enumerate() {
            let spec = FrameSpec::new(2, 2, 2, 2, k as u32, k as u32).unwrap();
            assert_eq!(
                count_tilings(&build_frame(&spec), TilingMode::Dimer),
                int(*e)
            );
        }
    }

    #[test]
    fn weighted_frame_at_ones_matches_plain_count() {
        let spec = FrameSpec::new(2, 2, 2, 2, 1, 1).unwrap();
        let region = build_frame(&spec);
        let w = count_weighted(&region, TilingMode::Dimer);
        assert_eq!(w.eval_ones(), rat_int(196));
    }

    #[test]
    fn known_monomer_dimer_squares() {
        // matchings (including partial ones) of the n x n grid
        let expect = [1i64, 1, 7, 131, 10012];
        for (n, e) in expect.iter().enumerate() {
            let r = build_rectangle(n as u32, n as u32);
            assert_eq!(count_tilings(&r, TilingMode::MonomerDimer), int(*e));
        }
    }

    #[test]
    fn odd_area_dimer_count_is_zero() {
        let r = build_rectangle(3, 3);
        assert_eq!(count_tilings(&r, TilingMode::Dimer), int(0));
    }
}
