//! Tile invariants: linear functionals on tile-count vectors (optionally
//! modular), invariants induced by periodic colorings, exhaustive region
//! corpora, and the tile counting group computed as a lattice quotient.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::grid::{Region, TileSet, Tiling};
use crate::lattice::{quotient_shape, GroupShape, IntMatrix};
use crate::solver::{count_vector, for_each_tiling, EnumerationBudget};
use crate::{Error, Result};

/// An integer linear functional on tile-count vectors, evaluated over Z when
/// `modulus == 0` and over Z_m otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantFunctional {
    pub coeffs: Vec<i64>,
    pub modulus: u64,
}

impl InvariantFunctional {
    pub fn new(coeffs: Vec<i64>, modulus: u64) -> InvariantFunctional {
        InvariantFunctional { coeffs, modulus }
    }

    pub fn over_z(coeffs: Vec<i64>) -> InvariantFunctional {
        InvariantFunctional { coeffs, modulus: 0 }
    }

    /// Dot product with a count vector, reduced into [0, m) when modular.
    pub fn evaluate(&self, counts: &[u64]) -> i64 {
        assert_eq!(counts.len(), self.coeffs.len(), "count vector length mismatch");
        let raw: i64 = self.coeffs.iter().zip(counts).map(|(&c, &n)| c * n as i64).sum();
        if self.modulus == 0 {
            raw
        } else {
            raw.rem_euclid(self.modulus as i64)
        }
    }
}

/// The parity functional counting the tiles of `T_4` that belong to the
/// skew subset {t2, t3, t5, t8}.
pub fn height_functional() -> InvariantFunctional {
    InvariantFunctional::new(vec![0, 1, 1, 0, 1, 0, 0, 1], 2)
}

/// A doubly periodic cell coloring: the value at (r, c) is
/// `weights[r mod p][c mod q]` reduced mod m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicColoring {
    period_rows: usize,
    period_cols: usize,
    weights: Vec<i64>, // row-major, p x q
    modulus: u64,
}

impl PeriodicColoring {
    pub fn new(weights: Vec<Vec<i64>>, modulus: u64) -> Result<PeriodicColoring> {
        if modulus < 2 {
            return Err(Error::OutOfRange("coloring modulus must be >= 2".into()));
        }
        let p = weights.len();
        let q = weights.first().map_or(0, |r| r.len());
        if p == 0 || q == 0 || weights.iter().any(|r| r.len() != q) {
            return Err(Error::Parse("coloring weights must form a non-empty rectangular grid".into()));
        }
        Ok(PeriodicColoring {
            period_rows: p,
            period_cols: q,
            weights: weights.into_iter().flatten().collect(),
            modulus,
        })
    }

    /// The horizontal-swath coloring: period (m, 1) with weight r on row r.
    pub fn row_swaths(modulus: u64) -> PeriodicColoring {
        PeriodicColoring::new((0..modulus as i64).map(|r| vec![r]).collect(), modulus)
            .expect("swath coloring is well-formed")
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn period(&self) -> (usize, usize) {
        (self.period_rows, self.period_cols)
    }

    pub fn value_at(&self, row: i32, col: i32) -> u64 {
        let r = (row.rem_euclid(self.period_rows as i32)) as usize;
        let c = (col.rem_euclid(self.period_cols as i32)) as usize;
        self.weights[r * self.period_cols + c].rem_euclid(self.modulus as i64) as u64
    }

    /// Total color of a region, mod m.
    pub fn region_value(&self, region: &Region) -> u64 {
        region.cells().iter().map(|c| self.value_at(c.row, c.col)).sum::<u64>() % self.modulus
    }

    /// The same coloring translated by (drow, dcol).
    pub fn shifted(&self, drow: i32, dcol: i32) -> PeriodicColoring {
        let p = self.period_rows;
        let q = self.period_cols;
        let weights = (0..p)
            .map(|r| (0..q).map(|c| self.value_at(r as i32 - drow, c as i32 - dcol) as i64).collect())
            .collect();
        PeriodicColoring::new(weights, self.modulus).expect("shift preserves shape")
    }

    /// Parses a coloring file: the first non-blank line is the modulus, the
    /// remaining lines are the p x q weight grid with the northmost row
    /// first (matching the region text format).
    pub fn from_text(text: &str) -> Result<PeriodicColoring> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let modulus: u64 = lines
            .next()
            .ok_or_else(|| Error::Parse("coloring text is blank".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad coloring modulus: {e}")))?;
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|w| w.parse::<i64>().map_err(|e| Error::Parse(format!("bad coloring weight {w:?}: {e}"))))
                .collect::<Result<Vec<i64>>>()?;
            rows.push(row);
        }
        rows.reverse(); // northmost line first => row index 0 is the last line
        PeriodicColoring::new(rows, modulus)
    }
}

/// For each tile, the color sum of its cells at every offset inside one
/// period window. Returns the per-tile values iff the sum is constant for
/// every tile (i.e. the coloring induces a tile invariant), else `None`.
pub fn coloring_tile_values(coloring: &PeriodicColoring, tileset: &TileSet) -> Option<Vec<u64>> {
    let (p, q) = coloring.period();
    let mut values = Vec::with_capacity(tileset.len());
    for tile in tileset.iter() {
        let mut common: Option<u64> = None;
        for dr in 0..p as i32 {
            for dc in 0..q as i32 {
                let sum = tile
                    .cells()
                    .iter()
                    .map(|c| coloring.value_at(c.row + dr, c.col + dc))
                    .sum::<u64>()
                    % coloring.modulus();
                match common {
                    None => common = Some(sum),
                    Some(v) if v != sum => return None,
                    Some(_) => {}
                }
            }
        }
        values.push(common.expect("tiles are non-empty"));
    }
    Some(values)
}

/// Outcome of checking one functional against all tilings of one region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantReport {
    /// Every tiling evaluates to this value.
    Constant { value: i64 },
    /// Two tilings with different values.
    Counterexample { first: Tiling, second: Tiling, values: (i64, i64) },
    /// The region has no tiling at all.
    Vacuous,
    /// The enumeration budget ran out before the check finished.
    Inconclusive,
}

/// Evaluates `functional` on every tiling of `region`, streaming through the
/// enumeration. Reports the constant value, the first counterexample pair,
/// vacuity, or budget exhaustion.
pub fn verify_functional(
    functional: &InvariantFunctional,
    region: &Region,
    tileset: &TileSet,
    budget: &EnumerationBudget,
) -> InvariantReport {
    let n = tileset.len();
    let mut witness: Option<(Tiling, i64)> = None;
    let mut counterexample: Option<(Tiling, i64)> = None;
    let complete = for_each_tiling(region, tileset, budget, |tiling| {
        let value = functional.evaluate(&count_vector(&tiling, n));
        match &witness {
            None => {
                witness = Some((tiling, value));
                ControlFlow::Continue(())
            }
            Some((_, first_value)) if *first_value != value => {
                counterexample = Some((tiling, value));
                ControlFlow::Break(())
            }
            Some(_) => ControlFlow::Continue(()),
        }
    });
    if let Some((second, second_value)) = counterexample {
        let (first, first_value) = witness.expect("counterexample implies witness");
        return InvariantReport::Counterexample { first, second, values: (first_value, second_value) };
    }
    if !complete {
        return InvariantReport::Inconclusive;
    }
    match witness {
        Some((_, value)) => InvariantReport::Constant { value },
        None => InvariantReport::Vacuous,
    }
}

/// A region together with the deduplicated count vectors of all its tilings.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub region: Region,
    pub count_vectors: Vec<Vec<u64>>,
}

/// A finite stand-in for "all tileable disk regions": every entry has at
/// least one tiling and carries its complete (deduplicated) count-vector
/// set. Group shapes computed from a corpus are exact for the corpus and
/// upper bounds for the full region family; report the corpus parameters
/// alongside any shape.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_vectors(&self) -> usize {
        self.entries.iter().map(|e| e.count_vectors.len()).sum()
    }
}

/// Enumerates the tilings of one region and returns its corpus entry, or
/// `None` if it is untileable (`Err` if the budget ran out first).
fn corpus_entry(
    region: &Region,
    tileset: &TileSet,
    budget: &EnumerationBudget,
) -> std::result::Result<Option<CorpusEntry>, ()> {
    let n = tileset.len();
    let mut vectors: BTreeSet<Vec<u64>> = BTreeSet::new();
    let complete = for_each_tiling(region, tileset, budget, |tiling| {
        vectors.insert(count_vector(&tiling, n));
        ControlFlow::Continue(())
    });
    if !complete {
        return Err(());
    }
    if vectors.is_empty() {
        return Ok(None);
    }
    Ok(Some(CorpusEntry { region: region.clone(), count_vectors: vectors.into_iter().collect() }))
}

/// Builds the corpus of every tileable disk region of area at most
/// `max_area` (up to translation) plus any tileable `extras`, each with its
/// complete tiling enumeration. Regions whose enumeration exceeds the budget
/// are excluded with a logged warning.
pub fn build_corpus(
    tileset: &TileSet,
    max_area: u32,
    extras: &[Region],
    budget: &EnumerationBudget,
) -> Result<Corpus> {
    let mut candidates = crate::regions::all_disk_regions(max_area)?;
    let mut known: BTreeSet<Vec<crate::grid::Cell>> =
        candidates.iter().map(|r| r.cells().to_vec()).collect();
    for extra in extras {
        let normalized = extra.normalized();
        if known.insert(normalized.cells().to_vec()) {
            candidates.push(normalized);
        }
    }
    let results: Vec<std::result::Result<Option<CorpusEntry>, ()>> = candidates
        .par_iter()
        .map(|region| corpus_entry(region, tileset, budget))
        .collect();
    let mut entries = Vec::new();
    for (region, result) in candidates.iter().zip(results) {
        match result {
            Ok(Some(entry)) => entries.push(entry),
            Ok(None) => {}
            Err(()) => log::warn!("corpus: enumeration budget exhausted, skipping region\n{}", region.to_text()),
        }
    }
    Ok(Corpus { entries })
}

/// The deduplicated difference vectors b(alpha) - b(alpha_0) across the
/// corpus, one row per distinct difference, against each region's first
/// count vector.
pub fn difference_rows(corpus: &Corpus, n: usize) -> IntMatrix {
    let mut rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    for entry in &corpus.entries {
        let base = &entry.count_vectors[0];
        assert_eq!(base.len(), n, "corpus entry has wrong tile count");
        for v in &entry.count_vectors[1..] {
            let diff: Vec<i64> = v.iter().zip(base).map(|(&a, &b)| a as i64 - b as i64).collect();
            rows.insert(diff);
        }
    }
    let rows: Vec<Vec<i64>> = rows.into_iter().collect();
    if rows.is_empty() {
        IntMatrix::empty_with_cols(n)
    } else {
        IntMatrix::from_rows(&rows).expect("difference rows are rectangular")
    }
}

/// The tile counting group of the corpus: Z^n modulo the lattice spanned by
/// all tiling-difference vectors.
pub fn counting_group(corpus: &Corpus, n: usize) -> GroupShape {
    quotient_shape(&difference_rows(corpus, n), n)
}
