//! Region constructors: rectangles, modified rectangles, exhaustive
//! small-region generation, and seeded random disk regions.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grid::{Cell, Region};
use crate::{Error, Result};

/// The a-rows by b-cols rectangle with its southwest cell at the origin.
/// Panics if either side is zero.
pub fn rect(a: u32, b: u32) -> Region {
    assert!(a >= 1 && b >= 1, "rectangle sides must be positive");
    Region::new((0..a as i32).flat_map(|r| (0..b as i32).map(move |c| Cell::new(r, c))))
        .expect("non-empty rectangle")
}

/// The modified rectangle M(a, b): the a-by-b rectangle minus its upper-left
/// cell (a-1, 0) and lower-right cell (0, b-1).
pub fn modified_rect(a: u32, b: u32) -> Result<Region> {
    if a < 2 || b < 2 {
        return Err(Error::OutOfRange(format!("modified rectangle needs sides >= 2, got {a}x{b}")));
    }
    rect(a, b).without(&[Cell::new(a as i32 - 1, 0), Cell::new(0, b as i32 - 1)])
}

/// Hard cap for exhaustive region generation; the fixed-polyomino count
/// roughly quadruples per extra cell.
pub const MAX_EXHAUSTIVE_AREA: u32 = 12;

/// Visits every fixed polyomino (up to translation) with at most `max_area`
/// cells, exactly once each, in a deterministic order. The visited cell
/// slice is unsorted and has its lexicographically least cell at the origin.
pub fn for_each_fixed_polyomino<F: FnMut(&[Cell])>(max_area: u32, visit: F) -> Result<()> {
    if max_area < 1 || max_area > MAX_EXHAUSTIVE_AREA {
        return Err(Error::OutOfRange(format!(
            "exhaustive generation supports areas 1..={MAX_EXHAUSTIVE_AREA}, got {max_area}"
        )));
    }
    let mut gen = Redelmeier::new(max_area as usize, visit);
    gen.extend(vec![Cell::new(0, 0)]);
    Ok(())
}

/// Every fixed polyomino (up to translation) with at most `max_area` cells,
/// normalized, in a deterministic order.
pub fn fixed_polyominoes(max_area: u32) -> Result<Vec<Region>> {
    let mut out: Vec<Region> = Vec::new();
    for_each_fixed_polyomino(max_area, |cells| {
        let cells = crate::grid::normalize(cells.iter().copied()).expect("non-empty");
        out.push(Region::new(cells).expect("non-empty"));
    })?;
    out.sort_by(|a, b| a.area().cmp(&b.area()).then_with(|| a.cells().cmp(b.cells())));
    Ok(out)
}

/// Every disk region (up to translation) with at most `max_area` cells, in a
/// deterministic order.
pub fn all_disk_regions(max_area: u32) -> Result<Vec<Region>> {
    let mut out: Vec<Region> = Vec::new();
    for_each_fixed_polyomino(max_area, |cells| {
        let cells = crate::grid::normalize(cells.iter().copied()).expect("non-empty");
        let region = Region::new(cells).expect("non-empty");
        if region.is_disk() {
            out.push(region);
        }
    })?;
    out.sort_by(|a, b| a.area().cmp(&b.area()).then_with(|| a.cells().cmp(b.cells())));
    Ok(out)
}

/// Redelmeier's fixed-polyomino enumeration: grow from the origin over the
/// half-plane of cells lexicographically at least the origin, retiring each
/// frontier cell after its branch so every polyomino is produced exactly
/// once.
struct Redelmeier<F: FnMut(&[Cell])> {
    max_area: usize,
    current: Vec<Cell>,
    seen: SeenGrid,
    visit: F,
}

impl<F: FnMut(&[Cell])> Redelmeier<F> {
    fn new(max_area: usize, visit: F) -> Self {
        let mut seen = SeenGrid::new(max_area);
        seen.insert(Cell::new(0, 0));
        Redelmeier { max_area, current: Vec::new(), seen, visit }
    }

    fn allowed(&self, c: Cell) -> bool {
        let extent = self.max_area as i32;
        if c.row < 0 || c.row >= extent || c.col <= -extent || c.col >= extent {
            return false;
        }
        c.row > 0 || c.col >= 0
    }

    fn extend(&mut self, untried: Vec<Cell>) {
        for i in 0..untried.len() {
            let c = untried[i];
            self.current.push(c);
            (self.visit)(&self.current);
            if self.current.len() < self.max_area {
                let mut next: Vec<Cell> = untried[i + 1..].to_vec();
                let mut added: Vec<Cell> = Vec::new();
                for nb in c.neighbors() {
                    if self.allowed(nb) && !self.seen.contains(nb) {
                        self.seen.insert(nb);
                        added.push(nb);
                        next.push(nb);
                    }
                }
                self.extend(next);
                for nb in added {
                    self.seen.remove(nb);
                }
            }
            self.current.pop();
        }
    }
}

/// Membership grid over the reachable half-plane window.
struct SeenGrid {
    extent: usize,
    bits: Vec<bool>,
}

impl SeenGrid {
    fn new(max_area: usize) -> SeenGrid {
        let extent = max_area;
        SeenGrid { extent, bits: vec![false; (extent + 1) * (2 * extent + 1)] }
    }

    fn index(&self, c: Cell) -> usize {
        let r = c.row as usize;
        let col = (c.col + self.extent as i32) as usize;
        r * (2 * self.extent + 1) + col
    }

    fn contains(&self, c: Cell) -> bool {
        self.bits[self.index(c)]
    }

    fn insert(&mut self, c: Cell) {
        let i = self.index(c);
        self.bits[i] = true;
    }

    fn remove(&mut self, c: Cell) {
        let i = self.index(c);
        self.bits[i] = false;
    }
}

const GROWTH_ATTEMPTS: u32 = 1000;

/// Grows a random disk region of the given area by repeatedly attaching a
/// uniformly chosen boundary-adjacent cell, retrying until the result passes
/// the disk test. Deterministic for a fixed (area, seed).
pub fn random_disk_region(area: u32, seed: u64) -> Result<Region> {
    if area < 1 {
        return Err(Error::OutOfRange("region area must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GROWTH_ATTEMPTS {
        let mut cells: Vec<Cell> = vec![Cell::new(0, 0)];
        while cells.len() < area as usize {
            let mut frontier: Vec<Cell> = cells
                .iter()
                .flat_map(|c| c.neighbors())
                .filter(|nb| !cells.contains(nb))
                .collect();
            frontier.sort();
            frontier.dedup();
            let pick = frontier[rng.gen_range(0..frontier.len())];
            cells.push(pick);
        }
        let region = Region::new(cells)?.normalized();
        if region.is_disk() {
            return Ok(region);
        }
    }
    Err(Error::GrowthFailed(GROWTH_ATTEMPTS))
}
