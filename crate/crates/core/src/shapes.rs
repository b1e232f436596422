//! Partitions, strict partitions and (shifted) skew diagrams.
//!
//! Cells are 1-based `(row, col)` in English convention. Row `i` of a shifted
//! diagram starts at column `i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect();
        Partition(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn cells(&self) -> Vec<Cell> {
        SkewShape::straight(self).cells()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Inclusion of shifted diagrams (same as componentwise inclusion).
    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    pub fn cells(&self) -> Vec<Cell> {
        SkewShape::shifted(self).cells()
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Partition(self.0.clone()).fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }

    pub fn content(&self) -> isize {
        self.col as isize - self.row as isize
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `outer / inner`, straight or shifted. `inner` is padded with zeros to the
/// length of `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
    shifted: bool,
}

#[derive(Serialize, Deserialize)]
struct SkewShapeRepr {
    outer: Vec<usize>,
    #[serde(default)]
    inner: Vec<usize>,
    #[serde(default)]
    shifted: bool,
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut inner = self.inner.clone();
        while inner.last() == Some(&0) {
            inner.pop();
        }
        SkewShapeRepr { outer: self.outer.clone(), inner, shifted: self.shifted }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SkewShapeRepr::deserialize(d)?;
        SkewShape::new(&r.outer, &r.inner, r.shifted).map_err(serde::de::Error::custom)
    }
}

impl SkewShape {
    pub fn new(outer: &[usize], inner: &[usize], shifted: bool) -> Result<Self> {
        let mut outer = outer.to_vec();
        while outer.last() == Some(&0) {
            outer.pop();
        }
        let mut inner = inner.to_vec();
        while inner.last() == Some(&0) {
            inner.pop();
        }
        if inner.len() > outer.len() {
            return Err(Error::InvalidShape(format!("inner {inner:?} not inside outer {outer:?}")));
        }
        if shifted {
            StrictPartition::new(outer.clone())?;
            StrictPartition::new(inner.clone())?;
        } else {
            Partition::new(outer.clone())?;
            Partition::new(inner.clone())?;
        }
        inner.resize(outer.len(), 0);
        if inner.iter().zip(&outer).any(|(m, l)| m > l) {
            return Err(Error::InvalidShape(format!("inner {inner:?} not inside outer {outer:?}")));
        }
        Ok(SkewShape { outer, inner, shifted })
    }

    pub fn straight(p: &Partition) -> Self {
        SkewShape { outer: p.0.clone(), inner: vec![0; p.len()], shifted: false }
    }

    pub fn skew(outer: &Partition, inner: &Partition) -> Result<Self> {
        Self::new(&outer.0, &inner.0, false)
    }

    pub fn shifted(p: &StrictPartition) -> Self {
        SkewShape { outer: p.0.clone(), inner: vec![0; p.len()], shifted: true }
    }

    pub fn shifted_skew(outer: &StrictPartition, inner: &StrictPartition) -> Result<Self> {
        Self::new(&outer.0, &inner.0, true)
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// Inner parts padded to the number of rows.
    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn outer_partition(&self) -> Partition {
        Partition(self.outer.clone())
    }

    pub fn inner_partition(&self) -> Partition {
        Partition::new(self.inner.clone()).expect("validated")
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&m| m == 0)
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// First column of row `r` (1-based) in the ambient plane.
    fn row_origin(&self, r: usize) -> usize {
        if self.shifted {
            r
        } else {
            1
        }
    }

    /// Inclusive column range of row `r` (1-based); empty rows give `first > last`.
    pub fn row_range(&self, r: usize) -> (usize, usize) {
        if r == 0 || r > self.outer.len() {
            return (1, 0);
        }
        let o = self.row_origin(r);
        (o + self.inner[r - 1], o + self.outer[r - 1] - 1)
    }

    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 || r > self.outer.len() {
            0
        } else {
            self.outer[r - 1] - self.inner[r - 1]
        }
    }

    pub fn size(&self) -> usize {
        self.outer.iter().sum::<usize>() - self.inner.iter().sum::<usize>()
    }

    pub fn contains(&self, c: Cell) -> bool {
        let (a, b) = self.row_range(c.row);
        a <= c.col && c.col <= b
    }

    /// Whether `c` lies in the inner diagram.
    pub fn inner_contains(&self, c: Cell) -> bool {
        if c.row == 0 || c.row > self.outer.len() {
            return false;
        }
        let o = self.row_origin(c.row);
        o <= c.col && c.col < o + self.inner[c.row - 1]
    }

    /// Whether `c` lies in the outer diagram.
    pub fn outer_contains(&self, c: Cell) -> bool {
        if c.row == 0 || c.row > self.outer.len() {
            return false;
        }
        let o = self.row_origin(c.row);
        o <= c.col && c.col < o + self.outer[c.row - 1]
    }

    /// Offset of `c` inside its row, if `c` belongs to the shape.
    pub fn offset(&self, c: Cell) -> Option<usize> {
        let (a, b) = self.row_range(c.row);
        (a <= c.col && c.col <= b).then(|| c.col - a)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut v = Vec::with_capacity(self.size());
        for r in 1..=self.outer.len() {
            let (a, b) = self.row_range(r);
            for c in a..=b {
                v.push(Cell::new(r, c));
            }
        }
        v
    }

    /// Conjugate of a straight skew shape.
    pub fn transpose(&self) -> Result<SkewShape> {
        if self.shifted {
            return Err(Error::InvalidShape("cannot transpose a shifted shape".into()));
        }
        let o = Partition(self.outer.clone()).conjugate();
        let i = self.inner_partition().conjugate();
        SkewShape::new(&o.0, &i.0, false)
    }

    /// The poset-isomorphic shifted shape `(λ+δ)/(μ+δ)` of a straight skew shape.
    pub fn embed_shifted(&self) -> Result<SkewShape> {
        if self.shifted {
            return Ok(self.clone());
        }
        let m = self.outer.len() + 1;
        let outer: Vec<usize> = (0..m - 1).map(|i| self.outer[i] + m - 1 - i).collect();
        let inner: Vec<usize> = (0..m - 1).map(|i| self.inner[i] + m - 1 - i).collect();
        SkewShape::new(&outer, &inner, true)
    }

    /// Maximal cells of the inner diagram.
    pub fn inner_corners(&self) -> Vec<Cell> {
        let mut v = Vec::new();
        for r in 1..=self.outer.len() {
            if self.inner[r - 1] == 0 {
                continue;
            }
            let c = Cell::new(r, self.row_origin(r) + self.inner[r - 1] - 1);
            let below = Cell::new(r + 1, c.col);
            let right = Cell::new(r, c.col + 1);
            if !self.inner_contains(below) && !self.inner_contains(right) {
                v.push(c);
            }
        }
        v
    }

    /// Minimal cells of the complement of the outer diagram.
    pub fn outer_corners(&self) -> Vec<Cell> {
        let mut v = Vec::new();
        for r in 1..=self.outer.len() + 1 {
            let len = if r <= self.outer.len() { self.outer[r - 1] } else { 0 };
            let c = Cell::new(r, self.row_origin(r) + len);
            let up_ok = r == 1 || self.outer_contains(Cell::new(r - 1, c.col));
            let left_ok = c.col == self.row_origin(r) || self.outer_contains(Cell::new(r, c.col - 1));
            if up_ok && left_ok {
                v.push(c);
            }
        }
        v
    }

    /// Cells of the shape that can be removed leaving a valid skew shape
    /// (maximal cells of the shape poset).
    pub fn removable_cells(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|c| {
                !self.contains(Cell::new(c.row + 1, c.col)) && !self.contains(Cell::new(c.row, c.col + 1))
            })
            .collect()
    }

    /// The shape with `c` removed from the outer boundary.
    pub fn remove_outer(&self, c: Cell) -> Result<SkewShape> {
        let (_, b) = self.row_range(c.row);
        if !self.contains(c) || b != c.col {
            return Err(Error::InvalidShape(format!("{c} is not removable")));
        }
        let mut outer = self.outer.clone();
        outer[c.row - 1] -= 1;
        SkewShape::new(&outer, &self.inner, self.shifted)
    }

    /// Cell set translated so that the minimal row and column are 1.
    pub fn normalized_cells(&self) -> BTreeSet<(isize, isize)> {
        normalize_cells(self.cells().iter().map(|c| (c.row as isize, c.col as isize)))
    }

    /// Whether the shape is connected as a diagram (edge adjacency).
    pub fn num_components(&self) -> usize {
        let cells: BTreeSet<Cell> = self.cells().into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut comps = 0;
        for &c in &cells {
            if seen.contains(&c) {
                continue;
            }
            comps += 1;
            let mut stack = vec![c];
            seen.insert(c);
            while let Some(x) = stack.pop() {
                let nb = [
                    Cell::new(x.row + 1, x.col),
                    Cell::new(x.row, x.col + 1),
                    Cell::new(x.row.wrapping_sub(1), x.col),
                    Cell::new(x.row, x.col.wrapping_sub(1)),
                ];
                for y in nb {
                    if cells.contains(&y) && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        comps
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = Partition(self.outer.clone());
        let tag = if self.shifted { "shifted " } else { "" };
        if self.is_straight() {
            write!(f, "{tag}{o}")
        } else {
            write!(f, "{tag}{o}/{}", self.inner_partition())
        }
    }
}

pub(crate) fn normalize_cells(it: impl Iterator<Item = (isize, isize)>) -> BTreeSet<(isize, isize)> {
    let v: Vec<(isize, isize)> = it.collect();
    let r0 = v.iter().map(|c| c.0).min().unwrap_or(1);
    let c0 = v.iter().map(|c| c.1).min().unwrap_or(1);
    v.into_iter().map(|(r, c)| (r - r0 + 1, c - c0 + 1)).collect()
}

/// Rebuild a straight skew shape from an arbitrary cell set, if it is one.
pub fn skew_from_cells(cells: &BTreeSet<(isize, isize)>) -> Result<SkewShape> {
    let norm = normalize_cells(cells.iter().copied());
    let mut rows: BTreeMap<isize, Vec<isize>> = BTreeMap::new();
    for &(r, c) in &norm {
        rows.entry(r).or_default().push(c);
    }
    let nrows = rows.keys().max().copied().unwrap_or(0);
    let mut outer = vec![0usize; nrows as usize];
    let mut inner = vec![0usize; nrows as usize];
    // Empty rows (between components) get inner = outer = next row's end.
    let mut below = 0usize;
    for r in (1..=nrows).rev() {
        let i = (r - 1) as usize;
        match rows.get(&r) {
            Some(cols) => {
                let lo = cols[0];
                let hi = *cols.last().unwrap();
                if (hi - lo + 1) as usize != cols.len() {
                    return Err(Error::InvalidShape(format!("row {r} is not contiguous")));
                }
                inner[i] = (lo - 1) as usize;
                outer[i] = hi as usize;
            }
            None => {
                inner[i] = below;
                outer[i] = below;
            }
        }
        below = outer[i];
    }
    let shape = SkewShape::new(&outer, &inner, false)?;
    if shape.normalized_cells() != norm {
        return Err(Error::InvalidShape("cell set is not a skew diagram".into()));
    }
    Ok(shape)
}

/// δ_k = (k-1, ..., 1).
pub fn staircase(k: usize) -> Partition {
    Partition((1..k).rev().collect())
}

/// ϱ_k: the staircase viewed as a strict partition.
pub fn shifted_staircase(k: usize) -> StrictPartition {
    StrictPartition((1..k).rev().collect())
}

/// ρ^{ℓ,m} = (m^ℓ).
pub fn rectangle(l: usize, m: usize) -> Partition {
    if m == 0 {
        return Partition::empty();
    }
    Partition(vec![m; l])
}

/// τ^{ℓ,m} = (ℓ+m-1, ℓ+m-3, ..., |ℓ-m|+1).
pub fn trapezoid(l: usize, m: usize) -> StrictPartition {
    let parts = (0..l.min(m)).map(|i| l + m - 1 - 2 * i).collect();
    StrictPartition(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Staircase,
    ShiftedStaircase,
    Rectangle,
    Trapezoid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyShape {
    Straight(Partition),
    Strict(StrictPartition),
}

pub fn make_family(kind: Family, params: &[usize]) -> Result<FamilyShape> {
    let need = match kind {
        Family::Staircase | Family::ShiftedStaircase => 1,
        Family::Rectangle | Family::Trapezoid => 2,
    };
    if params.len() != need {
        return Err(Error::InvalidShape(format!("{kind:?} takes {need} parameter(s)")));
    }
    if params.iter().any(|&p| p == 0) {
        return Err(Error::InvalidShape(format!("{kind:?} parameters must be positive")));
    }
    Ok(match kind {
        Family::Staircase => FamilyShape::Straight(staircase(params[0])),
        Family::ShiftedStaircase => FamilyShape::Strict(shifted_staircase(params[0])),
        Family::Rectangle => FamilyShape::Straight(rectangle(params[0], params[1])),
        Family::Trapezoid => FamilyShape::Strict(trapezoid(params[0], params[1])),
    })
}

/// Map `(i,j) -> (C-j, C-i)`: the reflection across the line `y = x` of the
/// drawn diagram, with `C = n_1 + 1`.
pub fn reflect_cell(c: Cell, n1: usize) -> Cell {
    Cell::new(n1 + 1 - c.col, n1 + 1 - c.row)
}

/// `n - mu`: the strict partition whose shifted diagram is the reflection of
/// the shifted skew diagram `n / mu`.
pub fn subtract_reflect(n: &StrictPartition, mu: &StrictPartition) -> Result<StrictPartition> {
    if !n.contains(mu) {
        return Err(Error::InvalidShape(format!("{mu} is not contained in {n}")));
    }
    let skew = SkewShape::shifted_skew(n, mu)?;
    let n1 = n.part(0);
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in skew.cells() {
        let d = reflect_cell(c, n1);
        rows.entry(d.row).or_default().push(d.col);
    }
    let mut parts = Vec::new();
    let mut expect_row = rows.keys().next().copied().unwrap_or(1);
    for (r, mut cols) in rows {
        if r != expect_row {
            return Err(Error::InvalidShape("reflected diagram has a gap".into()));
        }
        expect_row += 1;
        cols.sort_unstable();
        if cols[cols.len() - 1] - cols[0] + 1 != cols.len() {
            return Err(Error::InvalidShape("reflected row is not contiguous".into()));
        }
        parts.push(cols.len());
    }
    StrictPartition::new(parts)
}

/// (diagonal cells, off-diagonal cells) of a shifted diagram.
pub fn cell_census(s: &StrictPartition) -> (usize, usize) {
    (s.len(), s.size() - s.len())
}

/// (inner corners, outer corners).
pub fn corners(s: &SkewShape) -> (Vec<Cell>, Vec<Cell>) {
    (s.inner_corners(), s.outer_corners())
}

/// η(k, a, b) = ϱ_k − τ^{a,b}.
pub fn eta(k: usize, a: usize, b: usize) -> Result<StrictPartition> {
    if a == 0 || b == 0 {
        return Ok(shifted_staircase(k));
    }
    if a + b >= k {
        return Err(Error::InvalidShape(format!("need a+b<k, got a={a} b={b} k={k}")));
    }
    subtract_reflect(&shifted_staircase(k), &trapezoid(a, b))
}

/// δ_k / (b^a).
pub fn staircase_minus_rectangle(k: usize, a: usize, b: usize) -> Result<SkewShape> {
    SkewShape::skew(&staircase(k), &rectangle(a, b))
}

/// All partitions contained in `outer`.
pub fn partitions_inside(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &Partition, i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if i >= outer.len() {
            return;
        }
        for p in 1..=cap.min(outer.part(i)) {
            cur.push(p);
            rec(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 0, outer.part(0), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All strict partitions contained in `outer`.
pub fn strict_partitions_inside(outer: &StrictPartition) -> Vec<StrictPartition> {
    partitions_inside(&outer.as_partition())
        .into_iter()
        .filter(|p| p.is_strict())
        .map(|p| StrictPartition(p.0))
        .collect()
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        for k in 1..8 {
            assert_eq!(staircase(k).conjugate(), staircase(k));
        }
    }

    #[test]
    fn families() {
        assert_eq!(staircase(4), p(&[3, 2, 1]));
        assert_eq!(trapezoid(2, 2), sp(&[3, 1]));
        assert_eq!(trapezoid(1, 2), sp(&[2]));
        assert_eq!(trapezoid(2, 3), sp(&[4, 2]));
        assert_eq!(trapezoid(3, 2), trapezoid(2, 3));
        assert_eq!(rectangle(2, 2), p(&[2, 2]));
        assert!(make_family(Family::Rectangle, &[2]).is_err());
        assert_eq!(
            make_family(Family::Trapezoid, &[2, 2]).unwrap(),
            FamilyShape::Strict(sp(&[3, 1]))
        );
    }

    #[test]
    fn subtract_reflect_examples() {
        assert_eq!(subtract_reflect(&shifted_staircase(6), &trapezoid(2, 2)).unwrap(), sp(&[5, 4, 2]));
        assert_eq!(subtract_reflect(&shifted_staircase(4), &sp(&[2])).unwrap(), sp(&[3, 1]));
        for k in 1..7 {
            assert_eq!(subtract_reflect(&shifted_staircase(k), &StrictPartition::empty()).unwrap(), shifted_staircase(k));
        }
        assert!(subtract_reflect(&sp(&[2]), &sp(&[3])).is_err());
        assert_eq!(eta(6, 2, 3).unwrap(), sp(&[5, 3, 1]));
    }

    #[test]
    fn census_examples() {
        assert_eq!(cell_census(&sp(&[3, 1])), (2, 2));
        assert_eq!(cell_census(&shifted_staircase(4)), (3, 3));
        assert_eq!(cell_census(&sp(&[1])), (1, 0));
    }

    #[test]
    fn corner_examples() {
        let s = SkewShape::skew(&p(&[3, 2, 1]), &p(&[1])).unwrap();
        assert_eq!(s.inner_corners(), vec![Cell::new(1, 1)]);
        let one = SkewShape::straight(&p(&[1]));
        assert!(one.inner_corners().is_empty());
        let oc = one.outer_corners();
        assert!(oc.contains(&Cell::new(1, 2)) && oc.contains(&Cell::new(2, 1)));
        // Shifted staircase: outer corners by brute-force minimality.
        let rho = SkewShape::shifted(&shifted_staircase(4));
        let brute: Vec<Cell> = (1..=5)
            .flat_map(|r| (r..=6).map(move |c| Cell::new(r, c)))
            .filter(|&c| !rho.outer_contains(c))
            .filter(|&c| {
                let up = Cell::new(c.row - 1, c.col);
                let left = Cell::new(c.row, c.col - 1);
                (c.row == 1 || rho.outer_contains(up)) && (c.col == c.row || rho.outer_contains(left))
            })
            .collect();
        assert_eq!(rho.outer_corners(), brute);
        assert_eq!(rho.removable_cells(), vec![Cell::new(3, 3)]);
    }

    #[test]
    fn eta_size_matches_product_formula_size() {
        for k in 2..10 {
            for a in 1..k {
                for b in 1..k - a {
                    let e = eta(k, a, b).unwrap();
                    assert_eq!(e.size(), k * (k - 1) / 2 - a * b);
                }
            }
        }
    }

    #[test]
    fn embed_shifted_preserves_rows() {
        let s = SkewShape::skew(&p(&[3, 2, 1]), &p(&[1])).unwrap();
        let e = s.embed_shifted().unwrap();
        assert_eq!(e.size(), s.size());
        assert!(e.is_shifted());
        for r in 1..=s.num_rows() {
            assert_eq!(s.row_len(r), e.row_len(r));
        }
    }

    #[test]
    fn skew_from_cells_round_trip() {
        let s = SkewShape::skew(&p(&[3, 2, 1]), &p(&[2, 1])).unwrap();
        let back = skew_from_cells(&s.normalized_cells()).unwrap();
        assert_eq!(back.normalized_cells(), s.normalized_cells());
        assert_eq!(s.num_components(), 3);
    }

    #[test]
    fn json_forms() {
        let s = SkewShape::skew(&p(&[3, 2, 1]), &p(&[2])).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"outer":[3,2,1],"inner":[2],"shifted":false}"#);
        let back: SkewShape = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
