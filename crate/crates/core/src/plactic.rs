//! Semistandard tableaux, Schensted row insertion and the plactic monoid.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog;
use crate::exactlin::Word;
use crate::homalg::GradedAlgebra;
use crate::{Error, Result};

/// Semistandard Young tableau, top row first (English notation).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau::default()
    }

    /// Validates rows: weakly increasing, columns strictly increasing, partition shape.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = Tableau { rows };
        if !t.is_valid() {
            return Err(Error::Parameter(format!("not a semistandard tableau: {:?}", t.rows)));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_valid(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| !r.is_empty() && r.iter().all(|&x| x > 0) && r.windows(2).all(|p| p[0] <= p[1]));
        let shape_ok = self.rows.windows(2).all(|p| p[0].len() >= p[1].len());
        let cols_ok = self
            .rows
            .windows(2)
            .all(|p| p[1].iter().zip(&p[0]).all(|(below, above)| below > above));
        rows_ok && shape_ok && cols_ok
    }

    /// Schensted row insertion: `x` bumps the leftmost entry strictly greater
    /// than it, which is inserted into the next row.
    pub fn row_insert(&mut self, x: u8) {
        let mut x = x;
        for row in &mut self.rows {
            match row.iter().position(|&y| y > x) {
                Some(i) => x = core::mem::replace(&mut row[i], x),
                None => {
                    row.push(x);
                    return;
                }
            }
        }
        self.rows.push(alloc::vec![x]);
    }

    /// Insertion with the letter range checked against `1..=generators`.
    pub fn insert_checked(&mut self, x: u8, generators: usize) -> Result<()> {
        if x == 0 || x as usize > generators {
            return Err(Error::LetterOutOfRange {
                letter: x as u32,
                generators,
            });
        }
        self.row_insert(x);
        Ok(())
    }

    /// Plactic normal form: insert the letters of `w` left to right.
    pub fn from_word(w: &Word) -> Tableau {
        let mut t = Tableau::empty();
        for l in w.letters() {
            t.row_insert(l);
        }
        t
    }

    /// Row reading word: bottom row to top row, each left to right.
    pub fn reading_word(&self) -> Word {
        let letters: Vec<u8> = self.rows.iter().rev().flatten().copied().collect();
        Word::new(&letters).expect("tableau fits in a word")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| if *x >= 100 { 3 } else if *x >= 10 { 2 } else { 1 })
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x:>width$}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

pub fn word_to_tableau(w: &Word) -> Tableau {
    Tableau::from_word(w)
}

pub fn knuth_equivalent(a: &Word, b: &Word) -> bool {
    a.len() == b.len() && Tableau::from_word(a) == Tableau::from_word(b)
}

/// All words reachable from `w` by one Knuth move, in either direction.
pub fn knuth_neighbours(w: &Word) -> Vec<Word> {
    let letters = w.to_vec();
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(2) {
        let (x, y, z) = (letters[i], letters[i + 1], letters[i + 2]);
        let mut push = |a: u8, b: u8, c: u8| {
            let mut v = letters.clone();
            v[i] = a;
            v[i + 1] = b;
            v[i + 2] = c;
            out.push(Word::new(&v).expect("same length"));
        };
        // ℓ m k ↔ ℓ k m with k < ℓ ≤ m
        if z < x && x <= y {
            push(x, z, y);
        }
        if y < x && x <= z {
            push(x, z, y);
        }
        // k m ℓ ↔ m k ℓ with k ≤ ℓ < m
        if x <= z && z < y {
            push(y, x, z);
        }
        if y <= z && z < x {
            push(y, x, z);
        }
    }
    out
}

/// Partitions of `n` with at most `max_parts` parts, as weakly decreasing
/// sequences, listed in increasing lexicographic order.
pub fn partitions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, parts_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in 1..=cap.min(rest) {
            cur.push(p);
            go(rest - p, p, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Semistandard fillings of `shape` with entries `1..=generators`, in
/// lexicographic order of their concatenated rows.
pub fn fillings(shape: &[usize], generators: usize) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&l| alloc::vec![0; l]).collect();
    let mut out = Vec::new();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u8>>,
        generators: u8,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1u8;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for x in lo..=generators {
            rows[r][c] = x;
            fill(k + 1, cells, rows, generators, out);
        }
        rows[r][c] = 0;
    }
    fill(0, &cells, &mut rows, generators as u8, &mut out);
    out
}

/// Every SSYT with `n` cells and entries at most `generators`, grouped by shape.
pub fn enumerate_tableaux(generators: usize, n: usize) -> Result<Vec<Tableau>> {
    if generators == 0 || generators > u8::MAX as usize {
        return Err(Error::Parameter(format!("generator count {generators} outside 1..=255")));
    }
    if n > Word::MAX_LEN {
        return Err(Error::WordTooLong {
            requested: n,
            max: Word::MAX_LEN,
        });
    }
    let mut shapes = partitions(n, generators);
    shapes.sort();
    Ok(shapes.iter().flat_map(|s| fillings(s, generators)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionCheck {
    pub generators: usize,
    /// Common value of the three counts, per degree.
    pub counts: Vec<usize>,
}

/// `#SSYT(n cells, entries ≤ D) = dim P_n = dim B_n` for all `n ≤ max_degree`.
pub fn dimension_cross_check(generators: usize, max_degree: usize) -> Result<DimensionCheck> {
    let plactic = GradedAlgebra::quotient_only(catalog::plactic(generators)?, max_degree)?;
    let parafermion = GradedAlgebra::quotient_only(catalog::parafermion(generators)?, max_degree)?;
    let mut counts = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let tableaux = enumerate_tableaux(generators, n)?.len();
        let p = plactic.component_dim(n)?;
        let b = parafermion.component_dim(n)?;
        if tableaux != p || p != b {
            return Err(Error::Consistency(format!(
                "degree {n}: {tableaux} tableaux, dim P_n = {p}, dim B_n = {b}"
            )));
        }
        counts.push(p);
    }
    Ok(DimensionCheck { generators, counts })
}

/// Exhaustive comparison, over all words of length `n`, of Knuth equivalence
/// by tableaux with equality of normal forms in the plactic algebra `algebra`.
/// Returns the number of word pairs compared.
pub fn knuth_agreement(algebra: &GradedAlgebra, n: usize) -> Result<usize> {
    let d = algebra.generators();
    let words: Vec<Word> = Word::all(d, n).collect();
    let mut forms = Vec::with_capacity(words.len());
    let mut tableaux = Vec::with_capacity(words.len());
    for w in &words {
        forms.push(algebra.reduce_word(w)?);
        tableaux.push(Tableau::from_word(w));
    }
    let mut pairs = 0;
    for i in 0..words.len() {
        for j in 0..words.len() {
            let combinatorial = tableaux[i] == tableaux[j];
            let algebraic = forms[i] == forms[j];
            if combinatorial != algebraic {
                return Err(Error::Consistency(format!(
                    "{} and {}: tableaux say {combinatorial}, reduction says {algebraic}",
                    words[i], words[j]
                )));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// Number of distinct normal forms over all `D^n` words.
pub fn distinct_normal_forms(generators: usize, n: usize) -> usize {
    let mut seen: BTreeMap<Tableau, ()> = BTreeMap::new();
    for w in Word::all(generators, n) {
        seen.insert(Tableau::from_word(&w), ());
    }
    seen.len()
}
