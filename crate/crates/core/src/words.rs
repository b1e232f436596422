//! Permutations, reduced words, fully commutative shapes, the bijection Φ
//! between standard tableaux and reduced words, rewriting systems on words,
//! the 0-Hecke monoid and the `res` map on set-valued tableaux.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{skew_from_cells, Cell, Partition, SkewShape};
use crate::tableaux::{IndexSet, Letter, SetValuedTableau, Tableau};

pub type Word = Vec<u32>;

/// `{i : a_i > a_{i+1}}`.
pub fn word_descents(a: &[u32]) -> IndexSet {
    (1..a.len()).filter(|&i| a[i - 1] > a[i]).collect()
}

/// A permutation of `[N]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidWord(format!("{one_line:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `w(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `w s_a`: swap positions `a` and `a+1`.
    pub fn times_s(&self, a: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(a - 1, a);
        Permutation(v)
    }

    pub fn has_descent_at(&self, a: usize) -> bool {
        self.0[a - 1] > self.0[a]
    }

    pub fn descents(&self) -> IndexSet {
        (1..self.0.len()).filter(|&a| self.has_descent_at(a)).collect()
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() == 1
    }

    /// Avoids the pattern 321.
    pub fn is_321_avoiding(&self) -> bool {
        // Track the largest prefix value; a 321 occurs iff some entry is
        // smaller than an earlier entry that is itself a non-left-to-right-max.
        let w = &self.0;
        let n = w.len();
        let mut min_suffix = vec![usize::MAX; n + 1];
        for i in (0..n).rev() {
            min_suffix[i] = min_suffix[i + 1].min(w[i]);
        }
        let mut max_prefix = 0;
        for i in 0..n {
            if w[i] < max_prefix && min_suffix[i + 1] < w[i] {
                return false;
            }
            max_prefix = max_prefix.max(w[i]);
        }
        true
    }

    /// Composition `self ∘ other` as functions.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

fn check_letters(a: &[u32], n: usize) -> Result<()> {
    if let Some(&x) = a.iter().find(|&&x| x == 0 || x as usize >= n) {
        return Err(Error::InvalidWord(format!("letter {x} is not a generator of S_{n}")));
    }
    Ok(())
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation(cur.clone()));
            return;
        }
        for x in 1..=n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out
}

/// `s_{a_1} ⋯ s_{a_p}` in `S_n` (group product).
pub fn word_product(a: &[u32], n: usize) -> Result<Permutation> {
    check_letters(a, n)?;
    let mut w = Permutation::identity(n);
    for &x in a {
        w = w.times_s(x as usize);
    }
    Ok(w)
}

/// `s_{a_1} ∘ ⋯ ∘ s_{a_p}` in the 0-Hecke monoid of `S_n`.
pub fn hecke_product(a: &[u32], n: usize) -> Result<Permutation> {
    check_letters(a, n)?;
    let mut w = Permutation::identity(n);
    for &x in a {
        if !w.has_descent_at(x as usize) {
            w = w.times_s(x as usize);
        }
    }
    Ok(w)
}

pub fn is_reduced(a: &[u32], n: usize) -> bool {
    word_product(a, n).map_or(false, |w| w.length() == a.len())
}

/// Inversion set `{(i,j) : i<j, w^{-1}(i) > w^{-1}(j)}` (pairs of values).
pub fn inversion_set(w: &Permutation) -> BTreeSet<(usize, usize)> {
    let inv = w.inverse();
    let n = w.size();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if inv.at(i) > inv.at(j) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Cover relations `(x, y)` of the inversion poset, `x` added before `y`
/// along every reduced word: `y` is the next inversion sharing the smaller
/// value of `x`, or the previous one sharing its larger value.
pub fn inversion_covers(w: &Permutation) -> Vec<((usize, usize), (usize, usize))> {
    let inv = inversion_set(w);
    let n = w.size();
    let mut out = Vec::new();
    for &(i, j) in &inv {
        if let Some(l) = (j + 1..=n).find(|&p| inv.contains(&(i, p))) {
            out.push(((i, j), (i, l)));
        }
        if let Some(k) = (1..i).rev().find(|&p| inv.contains(&(p, j))) {
            out.push(((i, j), (k, j)));
        }
    }
    out
}

/// The inversions added, in order, while multiplying out the word.
pub fn inversion_sequence(a: &[u32], n: usize) -> Result<Vec<(usize, usize)>> {
    check_letters(a, n)?;
    let mut u = Permutation::identity(n);
    let mut out = Vec::with_capacity(a.len());
    for &x in a {
        let x = x as usize;
        let (p, q) = (u.at(x), u.at(x + 1));
        if p > q {
            return Err(Error::InvalidWord(format!("{a:?} is not reduced")));
        }
        out.push((p, q));
        u = u.times_s(x);
    }
    Ok(out)
}

/// All reduced words of `w`, sorted.
pub fn reduced_words(w: &Permutation) -> Vec<Word> {
    fn rec(w: &Permutation, memo: &mut BTreeMap<Permutation, Vec<Word>>) -> Vec<Word> {
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut out = Vec::new();
        if w.length() == 0 {
            out.push(Vec::new());
        }
        for a in w.descents() {
            for mut prefix in rec(&w.times_s(a), memo) {
                prefix.push(a as u32);
                out.push(prefix);
            }
        }
        out.sort();
        memo.insert(w.clone(), out.clone());
        out
    }
    rec(w, &mut BTreeMap::new())
}

/// All 0-Hecke expressions of length `len` for `w`, sorted.
pub fn hecke_expressions(w: &Permutation, len: usize, bound: usize) -> Result<Vec<Word>> {
    if len > bound {
        return Err(Error::BoundExceeded(format!("expression length {len} > {bound}")));
    }
    fn rec(w: &Permutation, len: usize, memo: &mut BTreeMap<(Permutation, usize), Vec<Word>>) -> Vec<Word> {
        if let Some(v) = memo.get(&(w.clone(), len)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if len == 0 {
            if w.length() == 0 {
                out.push(Vec::new());
            }
        } else if w.length() <= len {
            for a in w.descents() {
                // u ∘ s_a = w with u = w (a already a descent) or u = w s_a.
                for u in [w.clone(), w.times_s(a)] {
                    for mut prefix in rec(&u, len - 1, memo) {
                        prefix.push(a as u32);
                        out.push(prefix);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        memo.insert((w.clone(), len), out.clone());
        out
    }
    Ok(rec(w, len, &mut BTreeMap::new()))
}

/// `w^{δ_n} = 2 4 … (2n−2) 1 3 … (2n−3)` in `S_{2n−2}`.
pub fn w_staircase(n: usize) -> Permutation {
    if n <= 1 {
        return Permutation::identity(0);
    }
    let mut v: Vec<usize> = (1..n).map(|i| 2 * i).collect();
    v.extend((1..n).map(|i| 2 * i - 1));
    Permutation(v)
}

/// Move `2i−1` left `μ_i` places in `w^{δ_n}`, for each `i` in turn.
pub fn w_skew_staircase(n: usize, mu: &Partition) -> Result<Permutation> {
    let delta = crate::shapes::staircase(n);
    if !delta.contains(mu) {
        return Err(Error::InvalidShape(format!("{mu:?} is not inside δ_{n}")));
    }
    let mut v = w_staircase(n).0;
    for (i, &m) in mu.parts().iter().enumerate() {
        let x = 2 * i + 1;
        let p = v.iter().position(|&y| y == x).unwrap();
        let item = v.remove(p);
        v.insert(p - m, item);
    }
    Ok(Permutation(v))
}

/// A skew diagram realizing the heap of a fully commutative permutation.
/// The cell `(i,j)` carries the letter `offset + i − j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FcEmbedding {
    pub shape: SkewShape,
    pub offset: i64,
    pub n: usize,
}

impl FcEmbedding {
    /// `δ_n/μ` with letters `n−1+i−j` in `S_{2n−2}`.
    pub fn skew_staircase(n: usize, mu: &Partition) -> Result<Self> {
        let shape = SkewShape::skew(&crate::shapes::staircase(n), mu)?;
        Ok(FcEmbedding { shape, offset: n as i64 - 1, n: 2 * n.max(1) - 2 })
    }

    pub fn letter(&self, c: Cell) -> u32 {
        (self.offset + c.row as i64 - c.col as i64) as u32
    }

    /// Cells grouped by letter, each list ordered from the bottom-right.
    fn diagonals(&self) -> BTreeMap<u32, Vec<Cell>> {
        let mut d: BTreeMap<u32, Vec<Cell>> = BTreeMap::new();
        for c in self.shape.cells() {
            d.entry(self.letter(c)).or_default().push(c);
        }
        for v in d.values_mut() {
            v.sort_by(|a, b| b.row.cmp(&a.row));
        }
        d
    }
}

/// `σ(w)`: realize the heap of a reduced word of `w` as a skew diagram.
pub fn fc_shape(w: &Permutation) -> Result<FcEmbedding> {
    if !w.is_321_avoiding() {
        return Err(Error::NotFullyCommutative);
    }
    let n = w.size();
    let a: Word = reduced_word_greedy(w);
    if a.is_empty() {
        return Ok(FcEmbedding { shape: SkewShape::straight(&Partition::empty()), offset: 0, n });
    }
    // Positions of each letter in word order.
    let mut occ: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (p, &x) in a.iter().enumerate() {
        occ.entry(x).or_default().push(p);
    }
    let kmax = *occ.keys().max().unwrap() as i64;
    // row of each word position; content = kmax − letter.
    let mut row: Vec<i64> = vec![0; a.len()];
    let mut prev_letter: Option<u32> = None;
    // Bottom-most cell of the largest letter placed so far: (row, letter).
    let mut anchor: Option<(i64, u32)> = None;
    for (&x, ps) in &occ {
        if prev_letter != Some(x - 1) {
            // New component; its top-right cell sits half the letter gap
            // below and left of the previous component's bottom-left cell.
            let top = match anchor {
                None => 1,
                Some((r, y)) => r + ((x - y) as i64 + 1) / 2,
            };
            let k = ps.len() as i64;
            for (idx, &p) in ps.iter().enumerate() {
                row[p] = top + k - 1 - idx as i64;
            }
        } else {
            let below = &occ[&(x - 1)];
            for &p in ps {
                let next = below.iter().find(|&&q| q > p);
                let prev = below.iter().rev().find(|&&q| q < p);
                row[p] = match (next, prev) {
                    (Some(&q), _) => row[q] + 1,
                    (None, Some(&q)) => row[q],
                    (None, None) => return Err(Error::NotFullyCommutative),
                };
            }
        }
        anchor = Some((row[ps[0]], x));
        prev_letter = Some(x);
    }
    let raw: Vec<(i64, i64)> = a
        .iter()
        .enumerate()
        .map(|(p, &x)| (row[p], row[p] + kmax - x as i64))
        .collect();
    let r0 = raw.iter().map(|c| c.0).min().unwrap() - 1;
    let c0 = raw.iter().map(|c| c.1).min().unwrap() - 1;
    let distinct: BTreeSet<(isize, isize)> = raw.iter().map(|&(r, c)| (r as isize, c as isize)).collect();
    if distinct.len() != raw.len() {
        return Err(Error::NotFullyCommutative);
    }
    let shape = skew_from_cells(&distinct)?;
    // letter = kmax + row − col in raw coordinates.
    let offset = kmax + r0 - c0;
    let emb = FcEmbedding { shape, offset, n };
    if emb.shape.size() != w.length() {
        return Err(Error::NotFullyCommutative);
    }
    Ok(emb)
}

/// Lexicographically smallest reduced word.
pub fn reduced_word_greedy(w: &Permutation) -> Word {
    let mut u = w.clone();
    // Peel off left descents: w = s_a u.
    let mut letters = Vec::new();
    while u.length() > 0 {
        let inv = u.inverse();
        let a = (1..u.size()).find(|&a| inv.has_descent_at(a)).unwrap();
        letters.push(a as u32);
        u = inv.times_s(a).inverse();
    }
    letters
}

/// Φ: read the cells in decreasing order of their entries and record letters.
pub fn phi(emb: &FcEmbedding, t: &Tableau) -> Result<Word> {
    if t.shape() != &emb.shape {
        return Err(Error::InvalidShape(format!("tableau shape {} differs from {}", t.shape(), emb.shape)));
    }
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    Ok(t.positions().iter().rev().map(|&c| emb.letter(c)).collect())
}

/// Φ⁻¹: the k-th occurrence of a letter fills the k-th cell of its diagonal
/// counted from the bottom-right; the i-th letter receives the value `p+1−i`.
pub fn phi_inverse(emb: &FcEmbedding, a: &[u32]) -> Result<Tableau> {
    let p = a.len();
    if p != emb.shape.size() {
        return Err(Error::InvalidWord(format!("word length {p} differs from shape size {}", emb.shape.size())));
    }
    let diag = emb.diagonals();
    let mut used: BTreeMap<u32, usize> = BTreeMap::new();
    let mut pos = vec![Cell::new(0, 0); p];
    for (i, &x) in a.iter().enumerate() {
        let k = used.entry(x).or_insert(0);
        let cell = diag
            .get(&x)
            .and_then(|d| d.get(*k))
            .ok_or_else(|| Error::InvalidWord(format!("{a:?} has too many copies of {x}")))?;
        *k += 1;
        pos[p - 1 - i] = *cell;
    }
    let t = Tableau::from_positions(emb.shape.clone(), &pos)?;
    if !t.is_standard() {
        return Err(Error::InvalidWord(format!("{a:?} is not a reduced word of this shape")));
    }
    Ok(t)
}

/// Φ computed from the inversion order: the cell of the k-th inversion added
/// along the word holds the value `p+1−k`. The cell of each inversion is found
/// from a single reference tableau.
pub fn phi_via_inversions(emb: &FcEmbedding, t: &Tableau, w: &Permutation) -> Result<Word> {
    // The row-major filling fixes the correspondence cells <-> inversions.
    let cells = emb.shape.cells();
    let reference = crate::tableaux::row_superstandard(&emb.shape);
    let ref_word = phi(emb, &reference)?;
    let ref_inv = inversion_sequence(&ref_word, emb.n)?;
    let mut inv_of: BTreeMap<Cell, (usize, usize)> = BTreeMap::new();
    let ref_pos = reference.positions();
    let p = cells.len();
    for (k, inv) in ref_inv.iter().enumerate() {
        inv_of.insert(ref_pos[p - 1 - k], *inv);
    }
    let mut u = Permutation::identity(w.size());
    let mut out = Vec::with_capacity(p);
    for &c in t.positions().iter().rev() {
        let (x, y) = inv_of[&c];
        let pos = u.inverse();
        let a = pos.at(x);
        if pos.at(y) != a + 1 {
            return Err(Error::InvalidTableau(format!("{t} is not a linear extension of the inversion poset")));
        }
        out.push(a as u32);
        u = u.times_s(a);
    }
    if &u != w {
        return Err(Error::InvalidTableau("product differs from w".into()));
    }
    Ok(out)
}

/// Rewriting systems on words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewrite {
    Knuth,
    ShiftedKnuth,
    KKnuth,
    WeakKKnuth,
}

fn knuth_moves(a: &[u32], strict: bool, out: &mut BTreeSet<Word>) {
    for i in 0..a.len().saturating_sub(2) {
        let (x, y, z) = (a[i], a[i + 1], a[i + 2]);
        let le = |p: u32, q: u32| if strict { p < q } else { p <= q };
        // acb <-> cab with a <= b < c (a<b<c in the K setting)
        let first = (le(x, z) && z < y) || (le(y, z) && z < x);
        // bac <-> bca with a < b <= c
        let second = (y < x && le(x, z)) || (z < x && le(x, y));
        if first {
            let mut b = a.to_vec();
            b.swap(i, i + 1);
            out.insert(b);
        }
        if second {
            let mut b = a.to_vec();
            b.swap(i + 1, i + 2);
            out.insert(b);
        }
    }
}

/// All words one move away from `a`.
pub fn rewrite_neighbors(a: &[u32], mode: Rewrite) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let k = matches!(mode, Rewrite::KKnuth | Rewrite::WeakKKnuth);
    knuth_moves(a, k, &mut out);
    if matches!(mode, Rewrite::ShiftedKnuth | Rewrite::WeakKKnuth) && a.len() >= 2 {
        let mut b = a.to_vec();
        b.swap(0, 1);
        out.insert(b);
    }
    if k {
        for i in 0..a.len().saturating_sub(2) {
            if a[i] == a[i + 2] && a[i] != a[i + 1] {
                let mut b = a.to_vec();
                b[i] = a[i + 1];
                b[i + 1] = a[i];
                b[i + 2] = a[i + 1];
                out.insert(b);
            }
        }
        for i in 0..a.len() {
            let mut b = a.to_vec();
            b.insert(i, a[i]);
            out.insert(b);
            if i + 1 < a.len() && a[i] == a[i + 1] {
                let mut b = a.to_vec();
                b.remove(i);
                out.insert(b);
            }
        }
    }
    out.remove(a);
    out
}

/// Breadth-first closure of `a` under the moves, keeping words of length at
/// most `max_len`.
pub fn rewrite_class(a: &[u32], mode: Rewrite, max_len: usize) -> BTreeSet<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.to_vec());
    queue.push_back(a.to_vec());
    while let Some(b) = queue.pop_front() {
        for c in rewrite_neighbors(&b, mode) {
            if c.len() <= max_len && seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    seen.into_iter().collect()
}

/// res: record the letter of the cell holding each value, values taken in
/// decreasing order.
pub fn res(emb: &FcEmbedding, t: &SetValuedTableau) -> Result<Word> {
    if t.shape() != &emb.shape {
        return Err(Error::InvalidShape("set-valued tableau has the wrong shape".into()));
    }
    Ok(t.locate().iter().rev().map(|&(c, _)| emb.letter(c)).collect())
}

/// Inverse of `res`: letters that change the 0-Hecke product fill cells as in
/// Φ⁻¹; a letter that does not change it joins the cell of the previous copy
/// of the same letter.
pub fn res_inverse(emb: &FcEmbedding, a: &[u32]) -> Result<SetValuedTableau> {
    let p = a.len();
    let diag = emb.diagonals();
    let mut used: BTreeMap<u32, usize> = BTreeMap::new();
    let mut last_cell: BTreeMap<u32, Cell> = BTreeMap::new();
    let mut u = Permutation::identity(emb.n);
    let mut cell_of: Vec<Cell> = Vec::with_capacity(p);
    check_letters(a, emb.n)?;
    for &x in a {
        let xi = x as usize;
        let cell = if u.has_descent_at(xi) {
            *last_cell
                .get(&x)
                .ok_or_else(|| Error::InvalidWord(format!("{a:?} repeats {x} without a previous copy")))?
        } else {
            u = u.times_s(xi);
            let k = used.entry(x).or_insert(0);
            let c = *diag
                .get(&x)
                .and_then(|d| d.get(*k))
                .ok_or_else(|| Error::InvalidWord(format!("{a:?} is not an expression for this shape")))?;
            *k += 1;
            c
        };
        last_cell.insert(x, cell);
        cell_of.push(cell);
    }
    if used.values().sum::<usize>() != emb.shape.size() {
        return Err(Error::InvalidWord(format!("{a:?} does not reach the full permutation")));
    }
    let shape = &emb.shape;
    let mut rows: Vec<Vec<Vec<Letter>>> = (1..=shape.num_rows()).map(|r| vec![Vec::new(); shape.row_len(r)]).collect();
    for (i, c) in cell_of.iter().enumerate() {
        rows[c.row - 1][shape.offset(*c).unwrap()].push(Letter::plain((p - i) as u32));
    }
    SetValuedTableau::new(shape.clone(), p, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{staircase, Partition};
    use crate::tableaux::enumerate_standard;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inversion_examples() {
        let v = perm(&[2, 4, 1, 6, 3, 5]);
        let want: BTreeSet<_> = [(1, 2), (1, 4), (3, 4), (3, 6), (5, 6)].into_iter().collect();
        assert_eq!(inversion_set(&v), want);
        let w = perm(&[2, 4, 6, 1, 3, 5]);
        let mut want2 = want.clone();
        want2.insert((1, 6));
        assert_eq!(inversion_set(&w), want2);
        assert!(inversion_set(&Permutation::identity(4)).is_empty());
    }

    #[test]
    fn staircase_permutations() {
        assert_eq!(w_staircase(6).one_line(), &[2, 4, 6, 8, 10, 1, 3, 5, 7, 9]);
        let mu = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(w_skew_staircase(6, &mu).unwrap().one_line(), &[2, 4, 1, 6, 8, 3, 10, 5, 7, 9]);
        assert_eq!(w_staircase(2).one_line(), &[2, 1]);
    }

    #[test]
    fn fc_shape_examples() {
        let v = fc_shape(&perm(&[2, 4, 1, 6, 3, 5])).unwrap();
        assert_eq!(v.shape, SkewShape::new(&[3, 2, 1], &[1], false).unwrap());
        let w = fc_shape(&perm(&[2, 4, 6, 1, 3, 5])).unwrap();
        assert_eq!(w.shape, SkewShape::straight(&staircase(4)));
        assert_eq!(fc_shape(&perm(&[3, 2, 1])), Err(Error::NotFullyCommutative));
    }

    #[test]
    fn fc_shape_of_skew_staircases() {
        for n in 2..=6 {
            for mu in crate::shapes::partitions_inside(&staircase(n)) {
                let w = w_skew_staircase(n, &mu).unwrap();
                let emb = fc_shape(&w).unwrap();
                let want = SkewShape::skew(&staircase(n), &mu).unwrap();
                assert_eq!(emb.shape.normalized_cells(), want.normalized_cells(), "n={n} mu={mu:?}");
            }
        }
    }

    #[test]
    fn phi_example() {
        let emb = FcEmbedding::skew_staircase(4, &Partition::empty()).unwrap();
        let a = vec![1, 3, 2, 5, 4, 3];
        let t = phi_inverse(&emb, &a).unwrap();
        assert_eq!(t.rows(), &[vec![1, 4, 6], vec![2, 5], vec![3]]);
        assert_eq!(phi(&emb, &t).unwrap(), a);
        assert_eq!(word_descents(&a), [2, 4, 5].into_iter().collect());
        assert_eq!(t.descent_set(), [1, 2, 4].into_iter().collect());
        let seq = inversion_sequence(&a, 6).unwrap();
        assert_eq!(seq, vec![(1, 2), (3, 4), (1, 4), (5, 6), (3, 6), (1, 6)]);
    }

    #[test]
    fn phi_single_inversion() {
        let emb = FcEmbedding::skew_staircase(2, &Partition::empty()).unwrap();
        let t = Tableau::from_display(&[&[1]], false).unwrap();
        assert_eq!(phi(&emb, &t).unwrap(), vec![1]);
    }

    #[test]
    fn phi_routes_agree_and_biject() {
        for n in 2..=5 {
            for mu in crate::shapes::partitions_inside(&staircase(n)) {
                let w = w_skew_staircase(n, &mu).unwrap();
                let emb = FcEmbedding::skew_staircase(n, &mu).unwrap();
                let mut words = Vec::new();
                for t in enumerate_standard(&emb.shape) {
                    let a = phi(&emb, &t).unwrap();
                    assert_eq!(phi_via_inversions(&emb, &t, &w).unwrap(), a);
                    assert_eq!(word_product(&a, emb.n).unwrap(), w);
                    assert_eq!(word_descents(&a), crate::tableaux::reverse(&t.descent_set(), a.len()));
                    assert_eq!(phi_inverse(&emb, &a).unwrap(), t);
                    words.push(a);
                }
                words.sort();
                assert_eq!(words, reduced_words(&w), "n={n} mu={mu:?}");
            }
        }
    }

    #[test]
    fn inversion_sequences_respect_covers() {
        let w = w_skew_staircase(5, &Partition::new(vec![2, 1]).unwrap()).unwrap();
        let covers = inversion_covers(&w);
        assert!(!covers.is_empty());
        for a in reduced_words(&w) {
            let seq = inversion_sequence(&a, w.size()).unwrap();
            let idx = |x: &(usize, usize)| seq.iter().position(|y| y == x).unwrap();
            for (x, y) in &covers {
                assert!(idx(x) < idx(y), "{a:?}: {x:?} then {y:?}");
            }
        }
    }

    #[test]
    fn cover_poset_counts_reduced_words() {
        for w in [perm(&[2, 4, 1, 6, 3, 5]), perm(&[2, 4, 6, 1, 3, 5]), w_skew_staircase(5, &Partition::new(vec![1]).unwrap()).unwrap()] {
            let elems: Vec<_> = inversion_set(&w).into_iter().collect();
            let m = elems.len();
            let idx = |x: &(usize, usize)| elems.iter().position(|y| y == x).unwrap();
            let mut pred = vec![0u32; m];
            for (x, y) in inversion_covers(&w) {
                pred[idx(&y)] |= 1 << idx(&x);
            }
            let mut dp = vec![0u64; 1 << m];
            dp[0] = 1;
            for s in 0..(1usize << m) {
                for e in 0..m {
                    if s >> e & 1 == 0 && (pred[e] as usize) & !s == 0 {
                        dp[s | 1 << e] += dp[s];
                    }
                }
            }
            assert_eq!(dp[(1 << m) - 1] as usize, reduced_words(&w).len());
        }
    }

    #[test]
    fn neighbors_examples() {
        let a = [1, 3, 2, 5, 4, 3];
        assert!(rewrite_neighbors(&a, Rewrite::Knuth).contains(&vec![3, 1, 2, 5, 4, 3]));
        assert!(rewrite_neighbors(&[3, 1, 2, 5, 4, 3], Rewrite::Knuth).contains(&vec![3, 1, 5, 2, 4, 3]));
        assert!(rewrite_neighbors(&[1, 1], Rewrite::KKnuth).contains(&vec![1]));
        assert!(rewrite_neighbors(&[2, 1], Rewrite::ShiftedKnuth).contains(&vec![1, 2]));
        assert!(!rewrite_neighbors(&[2, 1], Rewrite::Knuth).contains(&vec![1, 2]));
    }

    #[test]
    fn hecke_examples() {
        assert_eq!(hecke_product(&[1, 1], 2).unwrap(), perm(&[2, 1]));
        assert_eq!(hecke_product(&[1, 2, 1], 3).unwrap(), perm(&[3, 2, 1]));
        assert_eq!(hecke_product(&[2, 1, 2], 3).unwrap(), perm(&[3, 2, 1]));
        let w = w_staircase(4);
        assert_eq!(hecke_expressions(&w, w.length(), 12).unwrap(), reduced_words(&w));
        assert_eq!(hecke_expressions(&perm(&[2, 1]), 2, 12).unwrap(), vec![vec![1, 1]]);
        assert!(hecke_expressions(&Permutation::identity(2), 1, 12).unwrap().is_empty());
        for a in hecke_expressions(&w, 8, 12).unwrap() {
            assert_eq!(hecke_product(&a, 6).unwrap(), w);
        }
    }

    #[test]
    fn res_examples() {
        let emb = FcEmbedding::skew_staircase(2, &Partition::empty()).unwrap();
        let t = SetValuedTableau::new(emb.shape.clone(), 2, vec![vec![vec![Letter::plain(1), Letter::plain(2)]]]).unwrap();
        assert_eq!(res(&emb, &t).unwrap(), vec![1, 1]);
        assert_eq!(res_inverse(&emb, &[1, 1]).unwrap(), t);
    }
}
