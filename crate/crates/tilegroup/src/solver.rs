//! Exact-cover tiling search: enumeration, tileability decision, tile-count
//! vectors, and parity-constrained search.
//!
//! The search always branches on the lexicographically least uncovered cell
//! and tries the placements covering it in (tile_index, offset) order, which
//! fixes a deterministic enumeration order. A placement covering the branch
//! cell must have its least covered cell exactly there, so each tile
//! contributes at most one candidate per branch cell.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::grid::{placements, Placement, Region, TileSet, Tiling};

pub mod reference;

/// Caps for a search; `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_tilings: Option<u64>,
    pub max_nodes: Option<u64>,
}

impl EnumerationBudget {
    pub fn unlimited() -> Self {
        EnumerationBudget::default()
    }

    pub fn with_max_tilings(n: u64) -> Self {
        EnumerationBudget { max_tilings: Some(n), max_nodes: None }
    }

    pub fn with_max_nodes(n: u64) -> Self {
        EnumerationBudget { max_tilings: None, max_nodes: Some(n) }
    }
}

/// Result of an enumeration: the tilings found (in search order, which is
/// ascending canonical order) and whether the search ran to completion.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub tilings: Vec<Tiling>,
    pub exhausted: bool,
    pub nodes: u64,
}

/// counts[k] = number of placements of tile k+1.
pub fn count_vector(tiling: &Tiling, n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n];
    for p in tiling.placements() {
        counts[p.tile_index - 1] += 1;
    }
    counts
}

struct Candidate {
    placement: Placement,
    mask: Vec<u64>,
}

struct SearchContext {
    ncells: usize,
    blocks: usize,
    /// candidates[i]: placements whose least covered cell is cell i, in
    /// tile-index order (at most one per tile).
    candidates: Vec<Vec<Candidate>>,
    /// adjacency by cell index, for the dead-component prune
    adjacency: Vec<[u32; 4]>,
    area_gcd: usize,
    min_tile_area: usize,
}

const NO_CELL: u32 = u32::MAX;

impl SearchContext {
    fn new(region: &Region, tileset: &TileSet) -> SearchContext {
        let cells = region.cells();
        let ncells = cells.len();
        let blocks = ncells.div_ceil(64);
        let index_of = |c| cells.binary_search(&c).ok();

        let mut candidates: Vec<Vec<Candidate>> = (0..ncells).map(|_| Vec::new()).collect();
        for tile in tileset.iter() {
            for p in placements(tile, region) {
                let i = index_of(p.min_cell(tileset)).expect("placement inside region");
                let mut mask = vec![0u64; blocks];
                for c in p.cells(tileset) {
                    let k = index_of(c).expect("placement inside region");
                    mask[k / 64] |= 1 << (k % 64);
                }
                candidates[i].push(Candidate { placement: p, mask });
            }
        }

        let adjacency = cells
            .iter()
            .map(|c| {
                let mut adj = [NO_CELL; 4];
                for (slot, nb) in c.neighbors().into_iter().enumerate() {
                    if let Some(k) = index_of(nb) {
                        adj[slot] = k as u32;
                    }
                }
                adj
            })
            .collect();

        SearchContext {
            ncells,
            blocks,
            candidates,
            adjacency,
            area_gcd: tileset.area_gcd(),
            min_tile_area: tileset.min_area(),
        }
    }

    fn overlaps(&self, covered: &[u64], mask: &[u64]) -> bool {
        covered.iter().zip(mask).any(|(a, b)| a & b != 0)
    }

    fn apply(&self, covered: &mut [u64], mask: &[u64]) {
        for (a, b) in covered.iter_mut().zip(mask) {
            *a |= b;
        }
    }

    fn unapply(&self, covered: &mut [u64], mask: &[u64]) {
        for (a, b) in covered.iter_mut().zip(mask) {
            *a &= !b;
        }
    }

    fn is_covered(&self, covered: &[u64], k: usize) -> bool {
        covered[k / 64] >> (k % 64) & 1 == 1
    }

    /// True iff some uncovered connected component has a size no combination
    /// of tile areas can reach; such a position admits no completion.
    fn has_dead_component(&self, covered: &[u64], scratch: &mut ComponentScratch) -> bool {
        scratch.generation += 1;
        let generation = scratch.generation;
        for start in 0..self.ncells {
            if self.is_covered(covered, start) || scratch.visited[start] == generation {
                continue;
            }
            let mut size = 0usize;
            scratch.stack.clear();
            scratch.stack.push(start as u32);
            scratch.visited[start] = generation;
            while let Some(k) = scratch.stack.pop() {
                size += 1;
                for &nb in &self.adjacency[k as usize] {
                    if nb != NO_CELL
                        && scratch.visited[nb as usize] != generation
                        && !self.is_covered(covered, nb as usize)
                    {
                        scratch.visited[nb as usize] = generation;
                        scratch.stack.push(nb);
                    }
                }
            }
            if size % self.area_gcd != 0 || size < self.min_tile_area {
                return true;
            }
        }
        false
    }
}

struct ComponentScratch {
    visited: Vec<u64>,
    stack: Vec<u32>,
    generation: u64,
}

impl ComponentScratch {
    fn new(ncells: usize) -> Self {
        ComponentScratch { visited: vec![0; ncells], stack: Vec::new(), generation: 0 }
    }
}

#[derive(PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

struct Search<'a, F: FnMut(&[Placement]) -> Flow> {
    ctx: &'a SearchContext,
    covered: Vec<u64>,
    stack: Vec<Placement>,
    scratch: ComponentScratch,
    nodes: u64,
    max_nodes: u64,
    budget_hit: bool,
    stopped: bool,
    visit: F,
}

impl<F: FnMut(&[Placement]) -> Flow> Search<'_, F> {
    fn run(ctx: &SearchContext, max_nodes: u64, visit: F) -> (bool, u64) {
        let mut s = Search {
            ctx,
            covered: vec![0u64; ctx.blocks],
            stack: Vec::new(),
            scratch: ComponentScratch::new(ctx.ncells),
            nodes: 0,
            max_nodes,
            budget_hit: false,
            stopped: false,
            visit,
        };
        s.dfs(0);
        (!s.budget_hit, s.nodes)
    }

    fn dfs(&mut self, mut pos: usize) {
        while pos < self.ctx.ncells && self.ctx.is_covered(&self.covered, pos) {
            pos += 1;
        }
        if pos == self.ctx.ncells {
            if (self.visit)(&self.stack) == Flow::Stop {
                self.stopped = true;
            }
            return;
        }
        for ci in 0..self.ctx.candidates[pos].len() {
            if self.stopped {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                self.budget_hit = true;
                self.stopped = true;
                return;
            }
            let cand = &self.ctx.candidates[pos][ci];
            if self.ctx.overlaps(&self.covered, &cand.mask) {
                continue;
            }
            let placement = cand.placement;
            let mask = cand.mask.clone();
            self.ctx.apply(&mut self.covered, &mask);
            if !self.ctx.has_dead_component(&self.covered, &mut self.scratch) {
                self.stack.push(placement);
                self.dfs(pos + 1);
                self.stack.pop();
            }
            self.ctx.unapply(&mut self.covered, &mask);
        }
    }
}

/// Enumerates tilings of `region` by `tileset` in deterministic order, up to
/// the budget. `exhausted` is true iff the search completed, so an empty,
/// exhausted result proves untileability.
pub fn enumerate_tilings(region: &Region, tileset: &TileSet, budget: &EnumerationBudget) -> Enumeration {
    if region.area() % tileset.area_gcd() != 0 {
        return Enumeration { tilings: Vec::new(), exhausted: true, nodes: 0 };
    }
    let ctx = SearchContext::new(region, tileset);
    let max_tilings = budget.max_tilings.unwrap_or(u64::MAX);
    if max_tilings == 0 {
        return Enumeration { tilings: Vec::new(), exhausted: false, nodes: 0 };
    }
    let mut tilings: Vec<Tiling> = Vec::new();
    let mut truncated = false;
    let (complete, nodes) = Search::run(&ctx, budget.max_nodes.unwrap_or(u64::MAX), |stack| {
        tilings.push(Tiling::new(stack.to_vec(), tileset));
        if tilings.len() as u64 >= max_tilings {
            truncated = true;
            Flow::Stop
        } else {
            Flow::Continue
        }
    });
    Enumeration { tilings, exhausted: complete && !truncated, nodes }
}

/// True iff at least one tiling exists. Uses the memoized decision search,
/// which shares its answer with first-solution enumeration.
pub fn is_tileable(region: &Region, tileset: &TileSet) -> bool {
    decide_tileable(region, tileset, u64::MAX).expect("unlimited budget cannot be exhausted")
}

/// Decides tileability within a node budget; `None` means the budget ran out
/// before the search finished.
///
/// Internally memoizes on the coverage state of the cells within the maximal
/// tile row-span beyond the branch cell, which is the only part of a partial
/// cover that can still influence the remainder of the search.
pub fn decide_tileable(region: &Region, tileset: &TileSet, max_nodes: u64) -> Option<bool> {
    if region.area() % tileset.area_gcd() != 0 {
        return Some(false);
    }
    let ctx = SearchContext::new(region, tileset);
    let cells = region.cells();
    let hmax = tileset.max_row_span();

    // ends[i]: last cell index whose row fits inside the memo window of i.
    let mut ends = vec![0usize; ctx.ncells];
    let mut k = 0usize;
    for i in 0..ctx.ncells {
        if k < i {
            k = i;
        }
        while k + 1 < ctx.ncells && cells[k + 1].row <= cells[i].row + hmax - 1 {
            k += 1;
        }
        ends[i] = k;
    }
    if ends.iter().enumerate().any(|(i, &e)| e - i > 128) {
        // Window too wide for the u128 memo key; fall back to the plain
        // search with a first-solution cutoff.
        let budget = EnumerationBudget { max_tilings: Some(1), max_nodes: Some(max_nodes) };
        let e = enumerate_tilings(region, tileset, &budget);
        if !e.tilings.is_empty() {
            return Some(true);
        }
        return if e.exhausted { Some(false) } else { None };
    }

    let mut memo: HashMap<(u32, u128), bool> = HashMap::new();
    let mut covered = vec![0u64; ctx.blocks];
    let mut nodes = 0u64;
    decide_rec(&ctx, &ends, &mut covered, &mut memo, &mut nodes, max_nodes, 0)
}

fn window_key(ctx: &SearchContext, covered: &[u64], pos: usize, end: usize) -> (u32, u128) {
    let mut mask = 0u128;
    for (bit, k) in (pos + 1..=end).enumerate() {
        if ctx.is_covered(covered, k) {
            mask |= 1 << bit;
        }
    }
    (pos as u32, mask)
}

fn decide_rec(
    ctx: &SearchContext,
    ends: &[usize],
    covered: &mut Vec<u64>,
    memo: &mut HashMap<(u32, u128), bool>,
    nodes: &mut u64,
    max_nodes: u64,
    mut pos: usize,
) -> Option<bool> {
    while pos < ctx.ncells && ctx.is_covered(covered, pos) {
        pos += 1;
    }
    if pos == ctx.ncells {
        return Some(true);
    }
    let key = window_key(ctx, covered, pos, ends[pos]);
    if let Some(&v) = memo.get(&key) {
        return Some(v);
    }
    for ci in 0..ctx.candidates[pos].len() {
        *nodes += 1;
        if *nodes > max_nodes {
            return None;
        }
        let cand = &ctx.candidates[pos][ci];
        if ctx.overlaps(covered, &cand.mask) {
            continue;
        }
        let mask = cand.mask.clone();
        ctx.apply(covered, &mask);
        let sub = decide_rec(ctx, ends, covered, memo, nodes, max_nodes, pos + 1);
        ctx.unapply(covered, &mask);
        match sub {
            Some(true) => {
                memo.insert(key, true);
                return Some(true);
            }
            Some(false) => {}
            None => return None,
        }
    }
    memo.insert(key, false);
    Some(false)
}

/// Visits every tiling in enumeration order without materializing the whole
/// list. Returns true iff the search ran to completion: the visitor never
/// broke and the node budget was not hit.
pub fn for_each_tiling(
    region: &Region,
    tileset: &TileSet,
    budget: &EnumerationBudget,
    mut visit: impl FnMut(Tiling) -> ControlFlow<()>,
) -> bool {
    if region.area() % tileset.area_gcd() != 0 {
        return true;
    }
    let ctx = SearchContext::new(region, tileset);
    let mut broke = false;
    let (complete, _) = Search::run(&ctx, budget.max_nodes.unwrap_or(u64::MAX), |stack| {
        match visit(Tiling::new(stack.to_vec(), tileset)) {
            ControlFlow::Continue(()) => Flow::Continue,
            ControlFlow::Break(()) => {
                broke = true;
                Flow::Stop
            }
        }
    });
    complete && !broke
}

/// First tiling (in enumeration order) whose number of placements of marked
/// tiles has the requested parity, or `None` if no such tiling exists within
/// the budget.
pub fn parity_search(
    region: &Region,
    tileset: &TileSet,
    marked: &[usize],
    want_odd: bool,
    budget: &EnumerationBudget,
) -> Option<Tiling> {
    let mut is_marked = vec![false; tileset.len() + 1];
    for &i in marked {
        is_marked[i] = true;
    }
    if region.area() % tileset.area_gcd() != 0 {
        return None;
    }
    let ctx = SearchContext::new(region, tileset);
    let mut found: Option<Tiling> = None;
    Search::run(&ctx, budget.max_nodes.unwrap_or(u64::MAX), |stack| {
        let marked_count = stack.iter().filter(|p| is_marked[p.tile_index]).count();
        if (marked_count % 2 == 1) == want_odd {
            found = Some(Tiling::new(stack.to_vec(), tileset));
            Flow::Stop
        } else {
            Flow::Continue
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{ribbon_set, Cell, Region, TileSet};
    use crate::regions::{modified_rect, rect};

    #[test]
    fn two_by_two_dominoes() {
        let square = rect(2, 2);
        let e = enumerate_tilings(&square, &TileSet::dominoes(), &EnumerationBudget::unlimited());
        assert!(e.exhausted);
        assert_eq!(e.tilings.len(), 2);
        for t in &e.tilings {
            t.validate(&square, &TileSet::dominoes()).unwrap();
        }
        assert_eq!(count_vector(&e.tilings[0], 2), vec![2, 0]);
        assert_eq!(count_vector(&e.tilings[1], 2), vec![0, 2]);
    }

    #[test]
    fn two_by_three_trominoes() {
        let t3 = ribbon_set(3).unwrap();
        let r = rect(2, 3);
        let e = enumerate_tilings(&r, &t3, &EnumerationBudget::unlimited());
        assert!(e.exhausted);
        assert_eq!(e.tilings.len(), 2);
        let vectors: Vec<Vec<u64>> = e.tilings.iter().map(|t| count_vector(t, 4)).collect();
        assert!(vectors.contains(&vec![2, 0, 0, 0]));
        assert!(vectors.contains(&vec![0, 1, 1, 0]));
    }

    #[test]
    fn area_mismatch_is_untileable() {
        let t3 = ribbon_set(3).unwrap();
        let e = enumerate_tilings(&rect(2, 2), &t3, &EnumerationBudget::unlimited());
        assert!(e.exhausted);
        assert!(e.tilings.is_empty());
        assert!(!is_tileable(&rect(2, 2), &t3));
    }

    #[test]
    fn tileability_examples() {
        let t4 = ribbon_set(4).unwrap();
        let s = t4.subset(&[2, 3, 5, 8]).unwrap();
        assert!(is_tileable(&modified_rect(2, 3).unwrap(), &s));
        assert!(!is_tileable(&modified_rect(3, 2).unwrap(), &s));
        let bar = Region::new((0..4).map(|c| Cell::new(0, c))).unwrap();
        assert!(is_tileable(&bar, &t4));
    }

    #[test]
    fn decision_agrees_with_enumeration() {
        let t3 = ribbon_set(3).unwrap();
        for a in 1..=4 {
            for b in 1..=5 {
                let r = rect(a, b);
                let e = enumerate_tilings(&r, &t3, &EnumerationBudget::unlimited());
                assert!(e.exhausted);
                assert_eq!(is_tileable(&r, &t3), !e.tilings.is_empty(), "rect({a},{b})");
            }
        }
    }

    #[test]
    fn budget_caps_are_reported() {
        let square = rect(4, 4);
        let dominoes = TileSet::dominoes();
        let capped = enumerate_tilings(&square, &dominoes, &EnumerationBudget::with_max_tilings(3));
        assert_eq!(capped.tilings.len(), 3);
        assert!(!capped.exhausted);

        let full = enumerate_tilings(&square, &dominoes, &EnumerationBudget::unlimited());
        assert!(full.exhausted);
        assert_eq!(full.tilings.len(), 36);
        assert_eq!(&full.tilings[..3], capped.tilings.as_slice());

        let starved = enumerate_tilings(&square, &dominoes, &EnumerationBudget::with_max_nodes(5));
        assert!(!starved.exhausted);

        assert_eq!(decide_tileable(&square, &dominoes, 2), None);
    }

    #[test]
    fn enumeration_is_deterministic_and_sorted() {
        let t4 = ribbon_set(4).unwrap();
        let r = rect(4, 4);
        let a = enumerate_tilings(&r, &t4, &EnumerationBudget::unlimited());
        let b = enumerate_tilings(&r, &t4, &EnumerationBudget::unlimited());
        assert_eq!(a.tilings, b.tilings);
        let mut sorted = a.tilings.clone();
        sorted.sort();
        assert_eq!(a.tilings, sorted);
    }

    #[test]
    fn parity_search_examples() {
        let t4 = ribbon_set(4).unwrap();
        let non_s = [1usize, 4, 6, 7];
        let budget = EnumerationBudget::unlimited();

        let odd = parity_search(&modified_rect(3, 2).unwrap(), &t4, &non_s, true, &budget).unwrap();
        let marked: u64 = count_vector(&odd, 8).iter().enumerate().filter(|(i, _)| non_s.contains(&(i + 1))).map(|(_, &c)| c).sum();
        assert_eq!(marked % 2, 1);

        let bar = Region::new((0..4).map(|c| Cell::new(0, c))).unwrap();
        let t = parity_search(&bar, &t4, &[1], true, &budget).unwrap();
        assert_eq!(count_vector(&t, 8)[0], 1);

        // No even tiling of the bar exists: the only tiling uses exactly one t1.
        assert!(parity_search(&bar, &t4, &[1], false, &budget).is_none());
    }
}
