//! Tableau families: plain integer fillings (standard and semistandard),
//! marked shifted fillings, and set-valued tableaux.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Cell, SkewShape};

/// A subset of `[n-1]`.
pub type IndexSet = BTreeSet<usize>;

/// `[n-1] \ s`.
pub fn complement(s: &IndexSet, n: usize) -> IndexSet {
    (1..n).filter(|i| !s.contains(i)).collect()
}

/// `{n - k : k in s}`.
pub fn reverse(s: &IndexSet, n: usize) -> IndexSet {
    s.iter().map(|&k| n - k).collect()
}

pub fn major_index(s: &IndexSet) -> usize {
    s.iter().sum()
}

/// A possibly marked letter. Ordered `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub value: u32,
    pub marked: bool,
}

impl Letter {
    pub const fn plain(value: u32) -> Self {
        Letter { value, marked: false }
    }

    pub const fn primed(value: u32) -> Self {
        Letter { value, marked: true }
    }

    fn key(&self) -> (u32, bool) {
        (self.value, !self.marked)
    }

    pub fn toggled(self) -> Self {
        Letter { value: self.value, marked: !self.marked }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl std::str::FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, marked) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let value = body.parse::<u32>().map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        Ok(Letter { value, marked })
    }
}

fn check_rows<T>(shape: &SkewShape, rows: &[Vec<T>]) -> Result<()> {
    if rows.len() != shape.num_rows() {
        return Err(Error::InvalidTableau(format!(
            "expected {} rows, got {}",
            shape.num_rows(),
            rows.len()
        )));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != shape.row_len(r + 1) {
            return Err(Error::InvalidTableau(format!("row {} has wrong length", r + 1)));
        }
    }
    Ok(())
}

/// Split display rows where `None` marks an inner cell into a shape.
fn shape_from_display<T: Clone>(rows: &[Vec<Option<T>>], shifted: bool) -> Result<(SkewShape, Vec<Vec<T>>)> {
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut body = Vec::new();
    for row in rows {
        let blanks = row.iter().take_while(|x| x.is_none()).count();
        if row[blanks..].iter().any(|x| x.is_none()) {
            return Err(Error::InvalidTableau("blank cells must form a prefix of the row".into()));
        }
        outer.push(row.len());
        inner.push(blanks);
        body.push(row[blanks..].iter().map(|x| x.clone().unwrap()).collect());
    }
    Ok((SkewShape::new(&outer, &inner, shifted)?, body))
}

/// A filling of a (shifted) skew shape by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

pub type StandardTableau = Tableau;

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        check_rows(&shape, &rows)?;
        Ok(Tableau { shape, rows })
    }

    /// Rows as displayed, `0` standing for an inner (blank) cell.
    pub fn from_display(rows: &[&[u32]], shifted: bool) -> Result<Self> {
        let opt: Vec<Vec<Option<u32>>> =
            rows.iter().map(|r| r.iter().map(|&x| (x != 0).then_some(x)).collect()).collect();
        let (shape, body) = shape_from_display(&opt, shifted)?;
        Tableau::new(shape, body)
    }

    /// Standard tableau from a map value -> cell (`cells[k-1]` holds `k`).
    pub fn from_positions(shape: SkewShape, cells: &[Cell]) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
        if cells.len() != shape.size() {
            return Err(Error::InvalidTableau("position list has the wrong length".into()));
        }
        for (k, &c) in cells.iter().enumerate() {
            let off = shape.offset(c).ok_or_else(|| Error::InvalidTableau(format!("{c} is outside the shape")))?;
            if rows[c.row - 1][off] != 0 {
                return Err(Error::InvalidTableau(format!("{c} filled twice")));
            }
            rows[c.row - 1][off] = k as u32 + 1;
        }
        Tableau::new(shape, rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.shape.offset(c).map(|o| self.rows[c.row - 1][o])
    }

    pub fn set(&mut self, c: Cell, v: u32) -> Result<()> {
        let o = self.shape.offset(c).ok_or_else(|| Error::InvalidTableau(format!("{c} is outside the shape")))?;
        self.rows[c.row - 1][o] = v;
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.shape.cells().into_iter().map(move |c| (c, self.get(c).unwrap()))
    }

    /// `positions()[k-1]` is the cell containing `k`. Standard tableaux only.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(0, 0); self.size()];
        for (c, v) in self.entries() {
            if v >= 1 && (v as usize) <= pos.len() {
                pos[v as usize - 1] = c;
            }
        }
        pos
    }

    /// Rows and columns weakly/strictly increasing.
    pub fn is_semistandard(&self) -> bool {
        for (c, v) in self.entries() {
            if v == 0 {
                return false;
            }
            if let Some(r) = self.get(Cell::new(c.row, c.col + 1)) {
                if r < v {
                    return false;
                }
            }
            if let Some(d) = self.get(Cell::new(c.row + 1, c.col)) {
                if d <= v {
                    return false;
                }
            }
        }
        true
    }

    /// Entries form a bijection onto `[n]` increasing along rows and columns.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (_, v) in self.entries() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.entries().all(|(c, v)| {
            self.get(Cell::new(c.row, c.col + 1)).map_or(true, |r| r > v)
                && self.get(Cell::new(c.row + 1, c.col)).map_or(true, |d| d > v)
        })
    }

    /// `{i : i lies in a strictly higher row than i+1}`.
    pub fn descent_set(&self) -> IndexSet {
        let pos = self.positions();
        (1..pos.len()).filter(|&i| pos[i - 1].row < pos[i].row).collect()
    }

    /// Rows read left to right, bottom to top.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flat_map(|r| r.iter().copied()).collect()
    }

    /// Rows read top to bottom, each right to left, entry `i` recorded as `n+1-i`
    /// where `n` is the largest entry.
    pub fn crystal_reading_word(&self) -> Vec<u32> {
        let n = self.rows.iter().flatten().copied().max().unwrap_or(0);
        self.rows.iter().flat_map(|r| r.iter().rev().map(move |&v| n + 1 - v)).collect()
    }

    /// Conjugate tableau of a straight skew shape.
    pub fn transpose(&self) -> Result<Tableau> {
        let shape = self.shape.transpose()?;
        let mut t = Tableau::new(shape.clone(), (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect())?;
        for (c, v) in self.entries() {
            t.set(Cell::new(c.col, c.row), v)?;
        }
        Ok(t)
    }

    /// `T(i)`: replace each entry `k` by `i_k`.
    pub fn content_expand(&self, i: &[u32]) -> Result<Tableau> {
        check_content(&self.descent_set(), i, self.size())?;
        let rows = self.rows.iter().map(|r| r.iter().map(|&k| i[k as usize - 1]).collect()).collect();
        Tableau::new(self.shape.clone(), rows)
    }

    /// Standardization of a semistandard filling: equal values numbered
    /// left to right. Returns the standard tableau and the weakly increasing
    /// content vector.
    pub fn standardize(&self) -> (Tableau, Vec<u32>) {
        let mut cells: Vec<(u32, usize, usize)> =
            self.entries().map(|(c, v)| (v, c.col, c.row)).collect();
        cells.sort();
        let mut t = self.clone();
        let mut content = Vec::with_capacity(cells.len());
        for (k, &(v, col, row)) in cells.iter().enumerate() {
            t.set(Cell::new(row, col), k as u32 + 1).unwrap();
            content.push(v);
        }
        (t, content)
    }

    pub fn with_marks(&self, marks: &BTreeSet<Cell>) -> Result<MarkedTableau> {
        if !self.shape.is_shifted() {
            return Err(Error::InvalidTableau("marks need a shifted shape".into()));
        }
        let mut rows: Vec<Vec<Letter>> =
            self.rows.iter().map(|r| r.iter().map(|&v| Letter::plain(v)).collect()).collect();
        for c in marks {
            if c.is_diagonal() {
                return Err(Error::InvalidTableau(format!("diagonal cell {c} cannot be marked")));
            }
            let o = self.shape.offset(*c).ok_or_else(|| Error::InvalidTableau(format!("{c} outside shape")))?;
            rows[c.row - 1][o].marked = true;
        }
        MarkedTableau::new(self.shape.clone(), rows)
    }

    pub fn unmarked(&self) -> MarkedTableau {
        let rows = self.rows.iter().map(|r| r.iter().map(|&v| Letter::plain(v)).collect()).collect();
        MarkedTableau { shape: self.shape.clone(), rows }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.shape.num_rows())
            .map(|r| {
                let blanks = self.shape.inner()[r - 1];
                let mut parts: Vec<String> = vec![".".to_string(); blanks];
                parts.extend(self.rows[r - 1].iter().map(|v| v.to_string()));
                parts.join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

fn check_content(des: &IndexSet, i: &[u32], n: usize) -> Result<()> {
    if i.len() != n {
        return Err(Error::InvalidWord(format!("content vector has length {}, expected {n}", i.len())));
    }
    for k in 1..n {
        let (a, b) = (i[k - 1], i[k]);
        if a > b || (des.contains(&k) && a == b) {
            return Err(Error::InvalidWord(format!("content vector {i:?} is not in I_Des")));
        }
    }
    if i.first() == Some(&0) {
        return Err(Error::InvalidWord("content values must be positive".into()));
    }
    Ok(())
}

/// All vectors in `I_S` with entries in `[1, numvars]`.
pub fn content_vectors(des: &IndexSet, n: usize, numvars: u32) -> Vec<Vec<u32>> {
    fn rec(des: &IndexSet, n: usize, nv: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let k = cur.len();
        if k == n {
            out.push(cur.clone());
            return;
        }
        let lo = match cur.last() {
            None => 1,
            Some(&p) => p + u32::from(des.contains(&k)),
        };
        for v in lo..=nv {
            cur.push(v);
            rec(des, n, nv, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(des, n, numvars, &mut Vec::new(), &mut out);
    out
}

/// A filling of a shifted shape by possibly marked letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedTableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

pub type MarkedShiftedStandardTableau = MarkedTableau;

impl MarkedTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<Self> {
        check_rows(&shape, &rows)?;
        if !shape.is_shifted() {
            return Err(Error::InvalidTableau("marked tableaux live on shifted shapes".into()));
        }
        Ok(MarkedTableau { shape, rows })
    }

    /// Rows as displayed (row `i` starting at column `i`), `None` for inner cells.
    pub fn from_display(rows: &[Vec<Option<Letter>>]) -> Result<Self> {
        let (shape, body) = shape_from_display(rows, true)?;
        MarkedTableau::new(shape, body)
    }

    /// Parse rows of tokens such as `"3"`, `"4'"`, `"."`.
    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        let opt: Result<Vec<Vec<Option<Letter>>>> = rows
            .iter()
            .map(|r| r.iter().map(|s| if *s == "." { Ok(None) } else { s.parse().map(Some) }).collect())
            .collect();
        MarkedTableau::from_display(&opt?)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, c: Cell) -> Option<Letter> {
        self.shape.offset(c).map(|o| self.rows[c.row - 1][o])
    }

    pub fn set(&mut self, c: Cell, v: Letter) -> Result<()> {
        let o = self.shape.offset(c).ok_or_else(|| Error::InvalidTableau(format!("{c} is outside the shape")))?;
        self.rows[c.row - 1][o] = v;
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.shape.cells().into_iter().map(move |c| (c, self.get(c).unwrap()))
    }

    /// The underlying unmarked filling.
    pub fn base(&self) -> Tableau {
        let rows = self.rows.iter().map(|r| r.iter().map(|l| l.value).collect()).collect();
        Tableau { shape: self.shape.clone(), rows }
    }

    pub fn marks(&self) -> BTreeSet<Cell> {
        self.entries().filter(|(_, l)| l.marked).map(|(c, _)| c).collect()
    }

    /// Shifted standard base with no marks on the diagonal.
    pub fn is_standard(&self) -> bool {
        self.base().is_standard() && self.entries().all(|(c, l)| !(l.marked && c.is_diagonal()))
    }

    /// Marked shifted semistandard: weakly increasing rows and columns in the
    /// order `1'<1<2'<...`, each unmarked value at most once per column, each
    /// marked value at most once per row, diagonal unmarked.
    pub fn is_semistandard(&self) -> bool {
        for (c, l) in self.entries() {
            if l.value == 0 || (l.marked && c.is_diagonal()) {
                return false;
            }
            if let Some(r) = self.get(Cell::new(c.row, c.col + 1)) {
                if r < l || (r == l && l.marked) {
                    return false;
                }
            }
            if let Some(d) = self.get(Cell::new(c.row + 1, c.col)) {
                if d < l || (d == l && !l.marked) {
                    return false;
                }
            }
        }
        true
    }

    /// Descent set of a marked shifted standard tableau: `i` is a descent when
    /// `i` is unmarked and `i+1` marked, or both unmarked and `i` strictly above
    /// `i+1`, or both marked and `i'` strictly left of `(i+1)'`.
    pub fn descent_set(&self) -> IndexSet {
        let n = self.size();
        let mut pos = vec![(Cell::new(0, 0), false); n];
        for (c, l) in self.entries() {
            pos[l.value as usize - 1] = (c, l.marked);
        }
        (1..n)
            .filter(|&i| {
                let (a, ma) = pos[i - 1];
                let (b, mb) = pos[i];
                marked_descent(a, ma, b, mb)
            })
            .collect()
    }

    /// Mark every unmarked off-diagonal entry and unmark every marked one.
    pub fn toggle_marks(&self) -> MarkedTableau {
        let mut t = self.clone();
        for r in 1..=self.shape.num_rows() {
            let (a, _) = self.shape.row_range(r);
            for (o, l) in t.rows[r - 1].iter_mut().enumerate() {
                if a + o != r {
                    *l = l.toggled();
                }
            }
        }
        t
    }

    pub fn content_expand(&self, i: &[u32]) -> Result<MarkedTableau> {
        check_content(&self.descent_set(), i, self.size())?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|l| Letter { value: i[l.value as usize - 1], marked: l.marked }).collect())
            .collect();
        MarkedTableau::new(self.shape.clone(), rows)
    }

    /// Standardization of a marked semistandard filling: for each value the
    /// marked copies are numbered top to bottom, then the unmarked copies left
    /// to right.
    pub fn standardize(&self) -> (MarkedTableau, Vec<u32>) {
        let mut cells: Vec<(Letter, usize, Cell)> = self
            .entries()
            .map(|(c, l)| (l, if l.marked { c.row } else { c.col }, c))
            .collect();
        cells.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
        let mut t = self.clone();
        let mut content = Vec::with_capacity(cells.len());
        for (k, &(l, _, c)) in cells.iter().enumerate() {
            t.set(c, Letter { value: k as u32 + 1, marked: l.marked }).unwrap();
            content.push(l.value);
        }
        (t, content)
    }

    /// Reflect the shifted diagram across `y = x` (anti-transpose inside the
    /// shifted staircase with first row `n1`) and relabel values by `f`.
    pub fn reflect_complement(&self, n1: usize, total: u32) -> Result<MarkedTableau> {
        let cells: Vec<(Cell, Letter)> = self
            .entries()
            .map(|(c, l)| {
                (crate::shapes::reflect_cell(c, n1), Letter { value: total + 1 - l.value, marked: l.marked })
            })
            .collect();
        marked_from_cells(&cells)
    }
}

pub(crate) fn marked_descent(a: Cell, ma: bool, b: Cell, mb: bool) -> bool {
    match (ma, mb) {
        (false, true) => true,
        (true, false) => false,
        (false, false) => a.row < b.row,
        (true, true) => a.col < b.col,
    }
}

/// Assemble a marked tableau on a straight shifted shape from explicit cells.
pub fn marked_from_cells(cells: &[(Cell, Letter)]) -> Result<MarkedTableau> {
    let nrows = cells.iter().map(|(c, _)| c.row).max().unwrap_or(0);
    let mut rows: Vec<Vec<(usize, Letter)>> = vec![Vec::new(); nrows];
    for &(c, l) in cells {
        rows[c.row - 1].push((c.col, l));
    }
    let mut parts = Vec::new();
    let mut body = Vec::new();
    for (r, row) in rows.iter_mut().enumerate() {
        row.sort_by_key(|x| x.0);
        if row.is_empty() || row[0].0 != r + 1 || row.iter().enumerate().any(|(o, x)| x.0 != r + 1 + o) {
            return Err(Error::InvalidShape(format!("row {} is not a shifted row", r + 1)));
        }
        parts.push(row.len());
        body.push(row.iter().map(|x| x.1).collect());
    }
    let shape = SkewShape::new(&parts, &[], true)?;
    MarkedTableau::new(shape, body)
}

impl fmt::Display for MarkedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.shape.num_rows())
            .map(|r| {
                let blanks = self.shape.inner()[r - 1];
                let mut parts: Vec<String> = vec![".".to_string(); blanks];
                parts.extend(self.rows[r - 1].iter().map(|v| v.to_string()));
                parts.join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Set-valued standard tableau of a given size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetValuedTableau {
    shape: SkewShape,
    size: usize,
    rows: Vec<Vec<Vec<Letter>>>,
}

impl SetValuedTableau {
    pub fn new(shape: SkewShape, size: usize, mut rows: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        check_rows(&shape, &rows)?;
        for row in rows.iter_mut() {
            for cell in row.iter_mut() {
                cell.sort_by_key(|l| l.value);
            }
        }
        let t = SetValuedTableau { shape, size, rows };
        if !t.is_valid() {
            return Err(Error::InvalidTableau(format!("not a set-valued tableau: {t}")));
        }
        Ok(t)
    }

    /// Singleton entries from a standard tableau.
    pub fn from_standard(t: &Tableau) -> Self {
        let rows = t.rows().iter().map(|r| r.iter().map(|&v| vec![Letter::plain(v)]).collect()).collect();
        SetValuedTableau { shape: t.shape().clone(), size: t.size(), rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> &[Vec<Vec<Letter>>] {
        &self.rows
    }

    pub fn get(&self, c: Cell) -> Option<&[Letter]> {
        self.shape.offset(c).map(|o| self.rows[c.row - 1][o].as_slice())
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, &[Letter])> + '_ {
        self.shape.cells().into_iter().map(move |c| (c, self.get(c).unwrap()))
    }

    /// `locate()[v-1]` = (cell, marked) holding value `v`.
    pub fn locate(&self) -> Vec<(Cell, bool)> {
        let mut pos = vec![(Cell::new(0, 0), false); self.size];
        for (c, set) in self.entries() {
            for l in set {
                if l.value >= 1 && l.value as usize <= self.size {
                    pos[l.value as usize - 1] = (c, l.marked);
                }
            }
        }
        pos
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.size + 1];
        for (c, set) in self.entries() {
            if set.is_empty() {
                return false;
            }
            for l in set {
                let v = l.value as usize;
                if v == 0 || v > self.size || seen[v] {
                    return false;
                }
                seen[v] = true;
                if l.marked && (!self.shape.is_shifted() || c.is_diagonal()) {
                    return false;
                }
            }
            let mx = set.iter().map(|l| l.value).max().unwrap();
            for nb in [Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)] {
                if let Some(s2) = self.get(nb) {
                    if s2.iter().map(|l| l.value).min().unwrap() <= mx {
                        return false;
                    }
                }
            }
        }
        seen[1..].iter().all(|&b| b)
    }

    /// Descent set using the marked-tableau rules on the cells holding `i`
    /// and `i+1`. Inside one cell only `i, (i+1)'` is a descent.
    pub fn descent_set(&self) -> IndexSet {
        let pos = self.locate();
        (1..self.size)
            .filter(|&i| {
                let (a, ma) = pos[i - 1];
                let (b, mb) = pos[i];
                if a == b {
                    return !ma && mb;
                }
                marked_descent(a, ma, b, mb)
            })
            .collect()
    }

    pub fn toggle_marks(&self) -> SetValuedTableau {
        let mut t = self.clone();
        for r in 1..=self.shape.num_rows() {
            let (a, _) = self.shape.row_range(r);
            for (o, set) in t.rows[r - 1].iter_mut().enumerate() {
                if a + o != r {
                    for l in set.iter_mut() {
                        *l = l.toggled();
                    }
                }
            }
        }
        t
    }

    /// The singleton-valued tableau, if every cell holds one value.
    pub fn to_standard(&self) -> Option<Tableau> {
        if self.size != self.shape.size() {
            return None;
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|s| s[0].value).collect()).collect();
        Tableau::new(self.shape.clone(), rows).ok()
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.shape.num_rows())
            .map(|r| {
                let blanks = self.shape.inner()[r - 1];
                let mut parts: Vec<String> = vec![".".to_string(); blanks];
                parts.extend(self.rows[r - 1].iter().map(|s| {
                    let v: Vec<String> = s.iter().map(|l| l.to_string()).collect();
                    format!("{{{}}}", v.join(","))
                }));
                parts.join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Which family `enumerate` produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Standard,
    ShiftedStandard,
    MarkedShiftedStandard,
}

/// Enumeration bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(default)]
pub struct Bounds {
    pub max_cells: usize,
    pub max_set_valued_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_cells: 16, max_set_valued_size: 10 }
    }
}

/// Visit every linear extension of the shape in lexicographic order of the
/// position sequence (value `k` placed in row-major-first available cell).
pub fn for_each_linear_extension(shape: &SkewShape, mut f: impl FnMut(&[Cell])) {
    let cells = shape.cells();
    let n = cells.len();
    let index = |c: Cell| cells.binary_search(&c).ok();
    // Predecessors inside the shape.
    let preds: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| {
            let mut p = Vec::new();
            if c.row > 1 {
                if let Some(i) = index(Cell::new(c.row - 1, c.col)) {
                    p.push(i);
                }
            }
            if c.col > 1 {
                if let Some(i) = index(Cell::new(c.row, c.col - 1)) {
                    p.push(i);
                }
            }
            p
        })
        .collect();
    let mut filled = vec![false; n];
    let mut order: Vec<Cell> = Vec::with_capacity(n);
    fn rec(
        cells: &[Cell],
        preds: &[Vec<usize>],
        filled: &mut [bool],
        order: &mut Vec<Cell>,
        f: &mut dyn FnMut(&[Cell]),
    ) {
        if order.len() == cells.len() {
            f(order);
            return;
        }
        for i in 0..cells.len() {
            if !filled[i] && preds[i].iter().all(|&p| filled[p]) {
                filled[i] = true;
                order.push(cells[i]);
                rec(cells, preds, filled, order, f);
                order.pop();
                filled[i] = false;
            }
        }
    }
    rec(&cells, &preds, &mut filled, &mut order, &mut f);
}

/// Cells numbered in row-major order.
pub fn row_superstandard(shape: &SkewShape) -> Tableau {
    Tableau::from_positions(shape.clone(), &shape.cells()).unwrap()
}

/// Cells numbered column by column, left to right, each top to bottom.
pub fn column_superstandard(shape: &SkewShape) -> Tableau {
    let mut cells = shape.cells();
    cells.sort_by_key(|c| (c.col, c.row));
    Tableau::from_positions(shape.clone(), &cells).unwrap()
}

/// All (shifted) standard tableaux of the shape.
pub fn enumerate_standard(shape: &SkewShape) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_linear_extension(shape, |pos| out.push(Tableau::from_positions(shape.clone(), pos).unwrap()));
    out
}

/// All marked shifted standard tableaux, marks enumerated last.
pub fn enumerate_marked(shape: &SkewShape) -> Vec<MarkedTableau> {
    let off: Vec<Cell> = shape.cells().into_iter().filter(|c| !c.is_diagonal()).collect();
    let mut out = Vec::new();
    for t in enumerate_standard(shape) {
        for mask in 0u64..(1u64 << off.len()) {
            let marks: BTreeSet<Cell> =
                off.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c).collect();
            out.push(t.with_marks(&marks).unwrap());
        }
    }
    out
}

/// Bounded enumeration front end.
pub fn enumerate(shape: &SkewShape, kind: Kind, bounds: Bounds) -> Result<Vec<MarkedTableau>> {
    if shape.size() > bounds.max_cells {
        return Err(Error::BoundExceeded(format!("{} cells > {}", shape.size(), bounds.max_cells)));
    }
    match kind {
        Kind::Standard => {
            if shape.is_shifted() {
                return Err(Error::InvalidShape("use ShiftedStandard for shifted shapes".into()));
            }
            Err(Error::InvalidShape("use enumerate_standard for straight shapes".into()))
        }
        Kind::ShiftedStandard => {
            if !shape.is_shifted() {
                return Err(Error::InvalidShape("shape is not shifted".into()));
            }
            Ok(enumerate_standard(shape).iter().map(|t| t.unmarked()).collect())
        }
        Kind::MarkedShiftedStandard => {
            if !shape.is_shifted() {
                return Err(Error::InvalidShape("shape is not shifted".into()));
            }
            Ok(enumerate_marked(shape))
        }
    }
}

/// Whether set-valued enumeration marks values in off-diagonal cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Plain,
    MarkedShifted,
}

/// All set-valued tableaux of the given size.
pub fn enumerate_set_valued(shape: &SkewShape, size: usize, kind: SetKind, bounds: Bounds) -> Result<Vec<SetValuedTableau>> {
    if size < shape.size() {
        return Err(Error::InvalidShape(format!("size {size} is smaller than the shape")));
    }
    if size > bounds.max_set_valued_size.max(shape.size()) || shape.size() > bounds.max_cells {
        return Err(Error::BoundExceeded(format!("size {size} exceeds the set-valued bound")));
    }
    if kind == SetKind::MarkedShifted && !shape.is_shifted() {
        return Err(Error::InvalidShape("marked set-valued tableaux need a shifted shape".into()));
    }
    let cells = shape.cells();
    let m = cells.len();
    let idx = |c: Cell| cells.binary_search(&c).ok();
    let preds: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| {
            [Cell::new(c.row.wrapping_sub(1), c.col), Cell::new(c.row, c.col.wrapping_sub(1))]
                .into_iter()
                .filter_map(idx)
                .collect()
        })
        .collect();
    let succs: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| [Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)].into_iter().filter_map(idx).collect())
        .collect();
    let mut content: Vec<Vec<Letter>> = vec![Vec::new(); m];
    let mut out = Vec::new();
    struct Ctx<'a> {
        shape: &'a SkewShape,
        cells: &'a [Cell],
        preds: &'a [Vec<usize>],
        succs: &'a [Vec<usize>],
        size: usize,
        kind: SetKind,
    }
    fn rec(ctx: &Ctx, v: usize, empty: usize, content: &mut Vec<Vec<Letter>>, out: &mut Vec<SetValuedTableau>) {
        if v > ctx.size {
            if empty == 0 {
                let mut rows: Vec<Vec<Vec<Letter>>> =
                    (1..=ctx.shape.num_rows()).map(|r| vec![Vec::new(); ctx.shape.row_len(r)]).collect();
                for (i, c) in ctx.cells.iter().enumerate() {
                    rows[c.row - 1][ctx.shape.offset(*c).unwrap()] = content[i].clone();
                }
                out.push(SetValuedTableau { shape: ctx.shape.clone(), size: ctx.size, rows });
            }
            return;
        }
        if ctx.size + 1 - v < empty {
            return;
        }
        for i in 0..ctx.cells.len() {
            let ok = if content[i].is_empty() {
                ctx.preds[i].iter().all(|&p| !content[p].is_empty())
            } else {
                ctx.succs[i].iter().all(|&s| content[s].is_empty())
            };
            if !ok {
                continue;
            }
            let was_empty = content[i].is_empty();
            let marks: &[bool] = if ctx.kind == SetKind::MarkedShifted && !ctx.cells[i].is_diagonal() {
                &[false, true]
            } else {
                &[false]
            };
            for &mk in marks {
                content[i].push(Letter { value: v as u32, marked: mk });
                rec(ctx, v + 1, empty - usize::from(was_empty), content, out);
                content[i].pop();
            }
        }
    }
    let ctx = Ctx { shape, cells: &cells, preds: &preds, succs: &succs, size, kind };
    rec(&ctx, 1, m, &mut content, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{shifted_staircase, staircase, Partition, StrictPartition};

    fn fig_i() -> Vec<Tableau> {
        let rows: [[&[u32]; 3]; 8] = [
            [&[0, 0, 1], &[2, 3], &[4]],
            [&[0, 0, 1], &[2, 4], &[3]],
            [&[0, 0, 2], &[1, 3], &[4]],
            [&[0, 0, 2], &[1, 4], &[3]],
            [&[0, 0, 3], &[1, 2], &[4]],
            [&[0, 0, 3], &[1, 4], &[2]],
            [&[0, 0, 4], &[1, 2], &[3]],
            [&[0, 0, 4], &[1, 3], &[2]],
        ];
        rows.iter().map(|r| Tableau::from_display(r, false).unwrap()).collect()
    }

    fn fig_ii() -> Vec<MarkedTableau> {
        let rows: [[&[&str]; 2]; 8] = [
            [&["1", "2'", "4'"], &["3"]],
            [&["1", "2", "4'"], &["3"]],
            [&["1", "2'", "3'"], &["4"]],
            [&["1", "2", "3'"], &["4"]],
            [&["1", "2'", "4"], &["3"]],
            [&["1", "2'", "3"], &["4"]],
            [&["1", "2", "4"], &["3"]],
            [&["1", "2", "3"], &["4"]],
        ];
        rows.iter().map(|r| MarkedTableau::parse(r).unwrap()).collect()
    }

    #[test]
    fn figure_sets_enumerate_exactly() {
        let shape = SkewShape::skew(&staircase(4), &Partition::new(vec![2]).unwrap()).unwrap();
        let mut got = enumerate_standard(&shape);
        let mut want = fig_i();
        assert!(want.iter().all(|t| t.is_standard()));
        got.sort();
        want.sort();
        assert_eq!(got, want);

        let eta = SkewShape::shifted(&StrictPartition::new(vec![3, 1]).unwrap());
        let mut got = enumerate_marked(&eta);
        let mut want = fig_ii();
        assert!(want.iter().all(|t| t.is_standard()));
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn reading_words() {
        assert_eq!(fig_i()[2].reading_word(), vec![4, 1, 3, 2]);
        let row = Tableau::from_display(&[&[1, 2, 3]], false).unwrap();
        assert_eq!(row.reading_word(), vec![1, 2, 3]);
        let t = Tableau::from_display(&[&[0, 0, 1, 3, 11], &[0, 0, 2, 6], &[4, 5, 9], &[7, 10], &[8]], false).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.crystal_reading_word(), vec![1, 9, 11, 6, 10, 3, 7, 8, 2, 5, 4]);
    }

    #[test]
    fn toggle_first_is_seventh() {
        let f = fig_ii();
        assert_eq!(f[0].toggle_marks(), f[6]);
        assert_eq!(f[0].toggle_marks().toggle_marks(), f[0]);
        let single = MarkedTableau::parse(&[&["1"]]).unwrap();
        assert_eq!(single.toggle_marks(), single);
    }

    #[test]
    fn descent_examples() {
        let q = MarkedTableau::parse(&[&["1", "2'", "3"], &["4", "5"], &["6"]]).unwrap();
        assert_eq!(q.descent_set(), [1, 3, 5].into_iter().collect());
        let one = Tableau::from_display(&[&[1]], false).unwrap();
        assert!(one.descent_set().is_empty());
        // Figure pairing reverses descents column by column.
        for (t, u) in fig_i().iter().zip(fig_ii()) {
            assert_eq!(u.descent_set(), reverse(&t.descent_set(), 4));
        }
    }

    #[test]
    fn marked_counts_are_free_bits() {
        for p in crate::shapes::strict_partitions_inside(&shifted_staircase(5)) {
            let s = SkewShape::shifted(&p);
            if s.size() > 6 {
                continue;
            }
            let plain = enumerate_standard(&s).len();
            let marked = enumerate_marked(&s).len();
            let (_, off) = crate::shapes::cell_census(&p);
            assert_eq!(marked, plain << off);
        }
    }

    #[test]
    fn set_valued_examples() {
        let one = SkewShape::straight(&Partition::new(vec![1]).unwrap());
        let v = enumerate_set_valued(&one, 2, SetKind::Plain, Bounds::default()).unwrap();
        assert_eq!(v.len(), 1);
        let two = SkewShape::straight(&Partition::new(vec![2]).unwrap());
        let v = enumerate_set_valued(&two, 3, SetKind::Plain, Bounds::default()).unwrap();
        assert_eq!(v.len(), 2);
        let lam = SkewShape::straight(&Partition::new(vec![2, 1]).unwrap());
        let v = enumerate_set_valued(&lam, 3, SetKind::Plain, Bounds::default()).unwrap();
        let mut singles: Vec<Tableau> = v.iter().map(|t| t.to_standard().unwrap()).collect();
        singles.sort();
        assert_eq!(singles, enumerate_standard(&lam));
        assert!(enumerate_set_valued(&lam, 2, SetKind::Plain, Bounds::default()).is_err());
    }

    #[test]
    fn content_expand_round_trip() {
        let lam = SkewShape::straight(&Partition::new(vec![2, 1]).unwrap());
        for t in enumerate_standard(&lam) {
            let d = t.descent_set();
            for i in content_vectors(&d, 3, 3) {
                let s = t.content_expand(&i).unwrap();
                assert!(s.is_semistandard());
                assert_eq!(s.standardize(), (t.clone(), i.clone()));
            }
            let id: Vec<u32> = (1..=3).collect();
            assert_eq!(t.content_expand(&id).unwrap(), t);
        }
    }

    #[test]
    fn letter_parse_and_order() {
        let a: Letter = "3'".parse().unwrap();
        assert_eq!(a, Letter::primed(3));
        assert!(Letter::primed(1) < Letter::plain(1));
        assert!(Letter::plain(1) < Letter::primed(2));
        assert!("x".parse::<Letter>().is_err());
    }
}
