//! Words in the free group F(x, y), boundary words of disk regions, and
//! tile-boundary presentations.
//!
//! The letter `x` is a unit step east and `y` a unit step north. Boundary
//! words are read along a clockwise traversal (interior on the traverser's
//! right) starting at the southwest corner of the region's lexicographically
//! least cell, so the text rendering uses `x`/`y` for positive letters and
//! `X`/`Y` for inverses.

use std::collections::HashMap;
use std::fmt;

use crate::grid::{Cell, Region, TileSet};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    Y,
}

/// A single letter: a generator with exponent +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub const X: Letter = Letter { gen: Gen::X, inverse: false };
    pub const X_INV: Letter = Letter { gen: Gen::X, inverse: true };
    pub const Y: Letter = Letter { gen: Gen::Y, inverse: false };
    pub const Y_INV: Letter = Letter { gen: Gen::Y, inverse: true };

    pub fn inverted(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    fn to_char(self) -> char {
        match (self.gen, self.inverse) {
            (Gen::X, false) => 'x',
            (Gen::X, true) => 'X',
            (Gen::Y, false) => 'y',
            (Gen::Y, true) => 'Y',
        }
    }
}

/// A freely reduced word in F(x, y).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    /// Builds a word from letters, reducing adjacent inverse pairs.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|&top| top == l.inverted()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    /// Parses the text syntax: `x`, `X` (inverse), `y`, `Y`, concatenated.
    /// The identity may be written as an empty string or `1`.
    pub fn parse(text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "1" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            letters.push(match ch {
                'x' => Letter::X,
                'X' => Letter::X_INV,
                'y' => Letter::Y,
                'Y' => Letter::Y_INV,
                _ => return Err(Error::Parse(format!("unexpected character {ch:?} in word"))),
            });
        }
        Ok(Word::from_letters(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    /// `gen` raised to the signed power `k`.
    pub fn power(gen: Gen, k: i32) -> Word {
        let letter = Letter { gen, inverse: k < 0 };
        Word { letters: vec![letter; k.unsigned_abs() as usize] }
    }

    /// The commutator a b a^-1 b^-1.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Signed counts of x letters and y letters.
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut ex = 0i64;
        let mut ey = 0i64;
        for l in &self.letters {
            let d = if l.inverse { -1 } else { 1 };
            match l.gen {
                Gen::X => ex += d,
                Gen::Y => ey += d,
            }
        }
        (ex, ey)
    }

    /// Removes matching first/last inverse pairs until none remain.
    pub fn cyclically_reduced(&self) -> Word {
        let mut letters = self.letters.as_slice();
        while letters.len() >= 2 && letters[0] == letters[letters.len() - 1].inverted() {
            letters = &letters[1..letters.len() - 1];
        }
        Word { letters: letters.to_vec() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// True iff the cyclically reduced forms of `a` and `b` are rotations of one
/// another (i.e. the words agree up to choice of basepoint).
pub fn cyclically_equal(a: &Word, b: &Word) -> bool {
    let a = a.cyclically_reduced();
    let b = b.cyclically_reduced();
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let doubled: Vec<Letter> = a.letters.iter().chain(a.letters.iter()).copied().collect();
    doubled.windows(b.len()).any(|w| w == b.letters.as_slice())
}

/// Reads the boundary word of a disk region: a clockwise traversal with the
/// interior kept on the right, starting at the southwest corner of the
/// lexicographically least cell. North steps record `y`, south `y^-1`, east
/// `x`, west `x^-1`.
pub fn boundary_word(region: &Region) -> Result<Word> {
    if !region.is_disk() {
        return Err(Error::NotADisk);
    }
    // Directed boundary edges keyed by start vertex; vertex (r, c) is the
    // southwest corner of cell (r, c). A pinch-free boundary gives each
    // vertex at most one outgoing edge.
    let mut next: HashMap<(i32, i32), ((i32, i32), Letter)> = HashMap::with_capacity(region.area() * 2);
    for &cell in region.cells() {
        let (r, c) = (cell.row, cell.col);
        if !region.contains(Cell::new(r, c - 1)) {
            let prev = next.insert((r, c), ((r + 1, c), Letter::Y));
            debug_assert!(prev.is_none());
        }
        if !region.contains(Cell::new(r + 1, c)) {
            let prev = next.insert((r + 1, c), ((r + 1, c + 1), Letter::X));
            debug_assert!(prev.is_none());
        }
        if !region.contains(Cell::new(r, c + 1)) {
            let prev = next.insert((r + 1, c + 1), ((r, c + 1), Letter::Y_INV));
            debug_assert!(prev.is_none());
        }
        if !region.contains(Cell::new(r - 1, c)) {
            let prev = next.insert((r, c + 1), ((r, c), Letter::X_INV));
            debug_assert!(prev.is_none());
        }
    }
    let base = region.min_cell();
    let start = (base.row, base.col);
    let mut letters = Vec::with_capacity(next.len());
    let mut at = start;
    loop {
        let &(to, letter) = next
            .get(&at)
            .ok_or_else(|| Error::InvalidTiling(format!("boundary traversal stuck at vertex {at:?}")))?;
        letters.push(letter);
        at = to;
        if at == start {
            break;
        }
    }
    if letters.len() != next.len() {
        // A disk region has a single boundary cycle; anything else means the
        // disk predicate and the traversal disagree.
        return Err(Error::NotADisk);
    }
    Ok(Word::from_letters(letters))
}

/// A presentation of the tile boundary group on generators x, y: one relator
/// per tile, in tile-index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relators: Vec<Word>,
}

impl Presentation {
    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.relators {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// The presentation whose relators are the boundary words of the tiles, in
/// index order.
pub fn presentation(tileset: &TileSet) -> Result<Presentation> {
    let relators = tileset
        .iter()
        .map(|t| boundary_word(&t.as_region()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Presentation { relators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{ribbon_set, ribbon_tile};

    fn region(spec: &[(i32, i32)]) -> Region {
        Region::new(spec.iter().map(|&(r, c)| Cell::new(r, c))).unwrap()
    }

    #[test]
    fn reduction() {
        let w = Word::parse("xXyYx").unwrap();
        assert_eq!(w.to_string(), "x");
        assert_eq!(Word::parse("xyYX").unwrap(), Word::identity());
        assert_eq!(Word::identity().to_string(), "1");
    }

    #[test]
    fn exponent_sums() {
        let w = Word::commutator(&Word::power(Gen::Y, 1), &Word::power(Gen::X, 3));
        assert_eq!(w.exponent_sums(), (0, 0));
        assert_eq!(Word::parse("xxy").unwrap().exponent_sums(), (2, 1));
        assert_eq!(Word::identity().exponent_sums(), (0, 0));
    }

    #[test]
    fn unit_square_boundary() {
        let w = boundary_word(&region(&[(0, 0)])).unwrap();
        assert_eq!(w.to_string(), "yxYX");
    }

    #[test]
    fn horizontal_domino_boundary() {
        let w = boundary_word(&region(&[(0, 0), (0, 1)])).unwrap();
        assert_eq!(w.to_string(), "yxxYXX");
        let expect = Word::commutator(&Word::power(Gen::Y, 1), &Word::power(Gen::X, 2));
        assert_eq!(w, expect);
    }

    #[test]
    fn skew_tetromino_boundary() {
        let t2 = ribbon_tile("001").unwrap();
        let w = boundary_word(&t2.as_region()).unwrap();
        assert_eq!(w.to_string(), "yxxyxYYXXX");
    }

    #[test]
    fn boundary_requires_disk() {
        assert!(matches!(boundary_word(&region(&[(0, 0), (1, 1)])), Err(Error::NotADisk)));
    }

    #[test]
    fn boundary_is_translation_invariant() {
        let a = region(&[(0, 0), (0, 1), (1, 1)]);
        let b = a.translated(7, -3);
        assert_eq!(boundary_word(&a).unwrap(), boundary_word(&b).unwrap());
    }

    #[test]
    fn boundary_length_is_perimeter() {
        let r = region(&[(0, 0), (0, 1), (1, 1)]);
        // 3 cells, 12 edges, 2 shared: perimeter 8.
        assert_eq!(boundary_word(&r).unwrap().len(), 8);
    }

    #[test]
    fn domino_presentation() {
        let p = presentation(&TileSet::dominoes()).unwrap();
        let printed: Vec<String> = p.relators().iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, vec!["yxxYXX", "yyxYYX"]);
    }

    #[test]
    fn tromino_presentation() {
        let p = presentation(&ribbon_set(3).unwrap()).unwrap();
        let printed: Vec<String> = p.relators().iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, vec!["yxxxYXXX", "yxyxYYXX", "yyxxYXYX", "yyyxYYYX"]);
    }

    #[test]
    fn unit_square_presentation() {
        let single = TileSet::new(vec![crate::grid::Tile::new(1, "u", vec![Cell::new(0, 0)]).unwrap()]).unwrap();
        let p = presentation(&single).unwrap();
        assert_eq!(p.relators()[0].to_string(), "yxYX");
    }

    #[test]
    fn cyclic_equality() {
        let a = Word::parse("yxxxYXXX").unwrap();
        let b = Word::parse("xxxYXXXy").unwrap();
        assert!(cyclically_equal(&a, &b));
        assert!(cyclically_equal(&Word::parse("xy").unwrap(), &Word::parse("yx").unwrap()));
        assert!(!cyclically_equal(&Word::parse("xy").unwrap(), &Word::parse("xY").unwrap()));
    }
}
