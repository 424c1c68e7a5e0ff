//! A deliberately simple backtracking enumerator kept as an independent
//! cross-check for the optimized search. It shares no search machinery with
//! the main solver: membership is tracked in an ordered set, and candidates
//! are produced by aligning every cell of every tile onto the first free
//! cell.

use std::collections::BTreeSet;

use crate::grid::{Cell, Placement, Region, TileSet, Tiling};

/// All tilings of `region` by `tileset`, sorted in canonical order.
pub fn enumerate(region: &Region, tileset: &TileSet) -> Vec<Tiling> {
    let mut remaining: BTreeSet<Cell> = region.cells().iter().copied().collect();
    let mut partial: Vec<Placement> = Vec::new();
    let mut out: Vec<Tiling> = Vec::new();
    recurse(tileset, &mut remaining, &mut partial, &mut out);
    out.sort();
    out
}

fn recurse(tileset: &TileSet, remaining: &mut BTreeSet<Cell>, partial: &mut Vec<Placement>, out: &mut Vec<Tiling>) {
    let first = match remaining.iter().next() {
        Some(&c) => c,
        None => {
            out.push(Tiling::new(partial.clone(), tileset));
            return;
        }
    };
    for tile in tileset.iter() {
        for anchor in tile.cells() {
            let d = (first.row - anchor.row, first.col - anchor.col);
            let cover: Vec<Cell> = tile.cells().iter().map(|c| c.translated(d.0, d.1)).collect();
            if cover.iter().all(|c| remaining.contains(c)) {
                for c in &cover {
                    remaining.remove(c);
                }
                partial.push(Placement::new(tile.index(), d));
                recurse(tileset, remaining, partial, out);
                partial.pop();
                for c in &cover {
                    remaining.insert(*c);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::ribbon_set;
    use crate::regions::rect;
    use crate::solver::{enumerate_tilings, EnumerationBudget};

    #[test]
    fn agrees_with_main_search_on_small_rectangles() {
        let sets = [TileSet::dominoes(), ribbon_set(3).unwrap(), ribbon_set(4).unwrap()];
        for tileset in &sets {
            for a in 1..=3 {
                for b in 1..=4 {
                    let r = rect(a, b);
                    let fast = enumerate_tilings(&r, tileset, &EnumerationBudget::unlimited());
                    assert!(fast.exhausted);
                    let slow = enumerate(&r, tileset);
                    assert_eq!(fast.tilings, slow, "mismatch on rect({a},{b})");
                }
            }
        }
    }

    #[test]
    fn four_by_four_domino_count() {
        let r = rect(4, 4);
        assert_eq!(enumerate(&r, &TileSet::dominoes()).len(), 36);
    }
}
