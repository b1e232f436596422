//! Insertion algorithms: RSK, Worley–Sagan, mixed shifted insertion, jeu de
//! taquin with rectification, and evacuation.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape, StrictPartition};
use crate::tableaux::{Letter, MarkedTableau, Tableau};

/// Rows of a straight or shifted tableau under construction.
type Rows = Vec<Vec<u32>>;

fn straight_from_rows(rows: Rows) -> Tableau {
    let parts: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let shape = SkewShape::straight(&Partition::new(parts).expect("insertion keeps a partition shape"));
    Tableau::new(shape, rows).expect("row lengths match")
}

fn shifted_from_rows(rows: Rows) -> Tableau {
    let parts: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let shape = SkewShape::shifted(&StrictPartition::new(parts).expect("insertion keeps a strict shape"));
    Tableau::new(shape, rows).expect("row lengths match")
}

/// Row insertion of a word: `(P(a), Q(a))`.
pub fn rsk(a: &[u32]) -> (Tableau, Tableau) {
    let mut p: Rows = Vec::new();
    let mut q: Rows = Vec::new();
    for (k, &x) in a.iter().enumerate() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![k as u32 + 1]);
                break;
            }
            let i = p[r].partition_point(|&v| v <= x);
            if i == p[r].len() {
                p[r].push(x);
                q[r].push(k as u32 + 1);
                break;
            }
            std::mem::swap(&mut p[r][i], &mut x);
            r += 1;
        }
    }
    (straight_from_rows(p), straight_from_rows(q))
}

/// Inverse of `rsk`.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Vec<u32>> {
    if p.shape() != q.shape() || !p.shape().is_straight() || p.shape().is_shifted() {
        return Err(Error::InvalidTableau("RSK inverse needs two straight tableaux of the same shape".into()));
    }
    if !q.is_standard() || !p.is_semistandard() {
        return Err(Error::InvalidTableau("RSK inverse needs (semistandard, standard)".into()));
    }
    let mut rows: Rows = p.rows().to_vec();
    let pos = q.positions();
    let mut out = vec![0; pos.len()];
    for k in (0..pos.len()).rev() {
        let c = pos[k];
        let r = c.row - 1;
        if rows[r].len() != c.col {
            return Err(Error::InvalidTableau(format!("{c} is not a corner at step {}", k + 1)));
        }
        let mut x = rows[r].pop().unwrap();
        for rr in (0..r).rev() {
            let i = rows[rr].partition_point(|&v| v < x);
            if i == 0 {
                return Err(Error::InvalidTableau("reverse bump found no entry".into()));
            }
            std::mem::swap(&mut rows[rr][i - 1], &mut x);
        }
        out[k] = x;
        while rows.last().map_or(false, |r| r.is_empty()) {
            rows.pop();
        }
    }
    Ok(out)
}

/// Entry of a shifted row-vector tableau at `(r, c)` (1-based), if present.
fn sh_get(rows: &Rows, r: usize, c: usize) -> Option<u32> {
    if r == 0 || r > rows.len() || c < r {
        return None;
    }
    rows[r - 1].get(c - r).copied()
}

/// Height of column `c` in a shifted row-vector tableau.
fn sh_col_height(rows: &Rows, c: usize) -> usize {
    // Rows covering column c form a prefix 1..=h.
    let (mut lo, mut hi) = (0usize, rows.len().min(c));
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if rows[mid - 1].len() + mid > c {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Worley–Sagan bumping. Returns the new cell and whether the insertion
/// finished in a column.
fn ws_bump(rows: &mut Rows, x: u32) -> (Cell, bool) {
    let mut x = x;
    let mut i = 1;
    loop {
        if i > rows.len() {
            rows.push(vec![x]);
            return (Cell::new(i, i), false);
        }
        let row = &mut rows[i - 1];
        let p = row.partition_point(|&v| v <= x);
        if p == row.len() {
            row.push(x);
            return (Cell::new(i, i + p), false);
        }
        let y = std::mem::replace(&mut row[p], x);
        x = y;
        if p == 0 {
            // Diagonal bumped: strict insertion into columns i+1, i+2, ...
            let mut j = i + 1;
            loop {
                let h = sh_col_height(rows, j);
                // First row r in 1..=h with T(r, j) >= x.
                let (mut lo, mut hi) = (1usize, h + 1);
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    if sh_get(rows, mid, j).unwrap() >= x {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                if lo == h + 1 {
                    let r = h + 1;
                    if r > rows.len() {
                        rows.push(vec![x]);
                    } else {
                        rows[r - 1].push(x);
                    }
                    return (Cell::new(r, j), true);
                }
                let slot = &mut rows[lo - 1][j - lo];
                x = std::mem::replace(slot, x);
                j += 1;
            }
        }
        i += 1;
    }
}

/// Worley–Sagan insertion `a ↦ (P_SW(a), Q_SW(a))`.
pub fn ws_insert(a: &[u32]) -> (Tableau, MarkedTableau) {
    let mut p: Rows = Vec::new();
    let mut cells: Vec<(Cell, Letter)> = Vec::with_capacity(a.len());
    for (k, &x) in a.iter().enumerate() {
        let (c, col) = ws_bump(&mut p, x);
        cells.push((c, Letter { value: k as u32 + 1, marked: col }));
    }
    let q = crate::tableaux::marked_from_cells(&cells).expect("recording tableau is a shifted shape");
    (shifted_from_rows(p), q)
}

/// Recording tableau only.
pub fn q_sw(a: &[u32]) -> MarkedTableau {
    ws_insert(a).1
}

/// Inverse Worley–Sagan insertion.
pub fn ws_inverse(p: &Tableau, q: &MarkedTableau) -> Result<Vec<u32>> {
    if p.shape() != q.shape() || !p.shape().is_shifted() || !p.shape().is_straight() {
        return Err(Error::InvalidTableau("Worley–Sagan inverse needs two tableaux of one straight shifted shape".into()));
    }
    if !q.is_standard() {
        return Err(Error::InvalidTableau(format!("{q} is not a marked shifted standard tableau")));
    }
    let mut rows: Rows = p.rows().to_vec();
    let n = q.size();
    let mut loc = vec![(Cell::new(0, 0), false); n];
    for (c, l) in q.entries() {
        loc[l.value as usize - 1] = (c, l.marked);
    }
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        let (c, marked) = loc[k];
        let r = c.row;
        if rows.len() < r || rows[r - 1].len() + r - 1 != c.col || sh_col_height(&rows, c.col) != r {
            return Err(Error::InvalidTableau(format!("{c} is not a corner at step {}", k + 1)));
        }
        let mut x = rows[r - 1].pop().unwrap();
        if rows[r - 1].is_empty() {
            rows.pop();
        }
        // Rows of the row phase still to be undone: 1..row_from.
        let mut row_from = r;
        if marked {
            let mut col = c.col - 1;
            loop {
                if col == 0 {
                    return Err(Error::InvalidTableau("column phase ran off the diagram".into()));
                }
                let h = sh_col_height(&rows, col);
                // Largest row with T(row, col) <= x.
                let (mut lo, mut hi) = (0usize, h);
                while lo < hi {
                    let mid = (lo + hi + 1) / 2;
                    if sh_get(&rows, mid, col).unwrap() <= x {
                        lo = mid;
                    } else {
                        hi = mid - 1;
                    }
                }
                if lo == 0 {
                    return Err(Error::InvalidTableau("reverse column bump found no entry".into()));
                }
                x = std::mem::replace(&mut rows[lo - 1][col - lo], x);
                if lo == col {
                    // Came from the diagonal of row `col`.
                    row_from = col;
                    break;
                }
                col -= 1;
            }
        }
        for rr in (1..row_from).rev() {
            let row = &mut rows[rr - 1];
            let i = row.partition_point(|&v| v < x);
            if i == 0 {
                return Err(Error::InvalidTableau("reverse row bump found no entry".into()));
            }
            x = std::mem::replace(&mut row[i - 1], x);
        }
        out[k] = x;
    }
    Ok(out)
}

/// Mixed shifted insertion of a word with distinct letters.
pub fn mixed_insert(w: &[u32]) -> Result<(MarkedTableau, Tableau)> {
    let mut seen = std::collections::BTreeSet::new();
    if !w.iter().all(|x| seen.insert(*x)) {
        return Err(Error::InvalidWord(format!("{w:?} repeats a letter")));
    }
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    let mut q: Vec<(Cell, Letter)> = Vec::with_capacity(w.len());
    let get = |rows: &Vec<Vec<Letter>>, r: usize, c: usize| -> Option<Letter> {
        if r == 0 || r > rows.len() || c < r {
            None
        } else {
            rows[r - 1].get(c - r).copied()
        }
    };
    for (k, &x0) in w.iter().enumerate() {
        let mut x = Letter::plain(x0);
        let (mut y, mut z) = (0usize, 0usize);
        let cell = loop {
            if !x.marked {
                let r = y + 1;
                if r > rows.len() {
                    rows.push(vec![x]);
                    break Cell::new(r, r);
                }
                let row = &mut rows[r - 1];
                let p = row.partition_point(|l| l.value < x.value);
                if p == row.len() {
                    row.push(x);
                    break Cell::new(r, r + p);
                }
                let b = std::mem::replace(&mut row[p], x);
                y = r;
                z = r + p;
                x = b;
            } else {
                let col = z + 1;
                let mut r = 1;
                while let Some(l) = get(&rows, r, col) {
                    if l.value > x.value {
                        break;
                    }
                    r += 1;
                }
                match get(&rows, r, col) {
                    None => {
                        if r > rows.len() {
                            rows.push(vec![x]);
                        } else {
                            rows[r - 1].push(x);
                        }
                        break Cell::new(r, col);
                    }
                    Some(_) => {
                        let b = std::mem::replace(&mut rows[r - 1][col - r], x);
                        y = r;
                        z = col;
                        x = b;
                    }
                }
            }
            if y == z {
                x.marked = true;
            }
        };
        q.push((cell, Letter::plain(k as u32 + 1)));
    }
    let shape = SkewShape::shifted(&StrictPartition::new(rows.iter().map(|r| r.len()).collect())?);
    let p = MarkedTableau::new(shape, rows)?;
    let qt = crate::tableaux::marked_from_cells(&q)?.base();
    Ok((p, qt))
}

/// Minimal increasing tableau: entry `i+j−1` at `(i,j)`.
pub fn minimal_increasing(lambda: &StrictPartition) -> Tableau {
    let shape = SkewShape::shifted(lambda);
    let rows = (1..=shape.num_rows())
        .map(|r| {
            let (a, b) = shape.row_range(r);
            (a..=b).map(|c| (r + c - 1) as u32).collect()
        })
        .collect();
    Tableau::new(shape, rows).unwrap()
}

/// Superstandard tableau: rows filled with consecutive values.
pub fn superstandard(shape: &SkewShape) -> Tableau {
    crate::tableaux::row_superstandard(shape)
}

fn entry_map(t: &Tableau) -> BTreeMap<Cell, u32> {
    t.entries().collect()
}

/// Path of the hole during an inner slide into `c`; the last cell leaves the shape.
fn slide(shape: &SkewShape, map: &mut BTreeMap<Cell, u32>, c: Cell) -> Result<Vec<Cell>> {
    if !shape.inner_corners().contains(&c) {
        return Err(Error::NotInnerCorner(c.row, c.col));
    }
    let mut hole = c;
    let mut path = vec![hole];
    loop {
        let below = Cell::new(hole.row + 1, hole.col);
        let right = Cell::new(hole.row, hole.col + 1);
        let next = match (map.get(&below), map.get(&right)) {
            (None, None) => break,
            (Some(_), None) => below,
            (None, Some(_)) => right,
            (Some(b), Some(r)) => {
                if b <= r {
                    below
                } else {
                    right
                }
            }
        };
        let v = map.remove(&next).unwrap();
        map.insert(hole, v);
        hole = next;
        path.push(hole);
    }
    Ok(path)
}

fn rebuild(shape: &SkewShape, map: &BTreeMap<Cell, u32>, inner_row: usize, outer_row: usize) -> Result<Tableau> {
    let mut inner = shape.inner().to_vec();
    let mut outer = shape.outer().to_vec();
    inner[inner_row - 1] -= 1;
    outer[outer_row - 1] -= 1;
    let new_shape = SkewShape::new(&outer, &inner, shape.is_shifted())?;
    let rows = (1..=new_shape.num_rows())
        .map(|r| {
            let (a, b) = new_shape.row_range(r);
            (a..=b).map(|col| map[&Cell::new(r, col)]).collect()
        })
        .collect();
    Tableau::new(new_shape, rows)
}

/// One inner jeu de taquin slide into the inner corner `c`.
pub fn jdt_slide(t: &Tableau, c: Cell) -> Result<Tableau> {
    Ok(jdt_slide_path(t, c)?.0)
}

/// The slide together with the cells visited by the hole.
pub fn jdt_slide_path(t: &Tableau, c: Cell) -> Result<(Tableau, Vec<Cell>)> {
    let mut map = entry_map(t);
    let path = slide(t.shape(), &mut map, c)?;
    let end = *path.last().unwrap();
    Ok((rebuild(t.shape(), &map, c.row, end.row)?, path))
}

/// Rectification; `order` is a standard tableau of the inner shape (cells
/// are vacated from its largest entry down). Defaults to row order.
pub fn rectify(t: &Tableau, order: Option<&Tableau>) -> Result<Tableau> {
    let shape = t.shape();
    let inner_shape = if shape.is_shifted() {
        SkewShape::shifted(&StrictPartition::new(shape.inner().to_vec())?)
    } else {
        SkewShape::straight(&shape.inner_partition())
    };
    let default;
    let order = match order {
        Some(o) => {
            if o.shape() != &inner_shape || !o.is_standard() {
                return Err(Error::InvalidTableau("rectification order must be standard on the inner shape".into()));
            }
            o
        }
        None => {
            default = superstandard(&inner_shape);
            &default
        }
    };
    let mut cur = t.clone();
    for &c in order.positions().iter().rev() {
        cur = jdt_slide(&cur, c)?;
    }
    Ok(cur)
}

/// Tableau of a straight skew shape carried onto `(λ+δ)/(μ+δ)`.
pub fn embed_shifted(t: &Tableau) -> Result<Tableau> {
    let shape = t.shape().embed_shifted()?;
    if t.shape().is_shifted() {
        return Ok(t.clone());
    }
    let m = t.shape().num_rows() + 1;
    let mut out = Tableau::new(shape.clone(), (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect())?;
    for (c, v) in t.entries() {
        out.set(Cell::new(c.row, c.col + m - 1), v)?;
    }
    Ok(out)
}

/// Shifted rectification of a straight tableau via the shifted embedding.
pub fn rectify_shifted(t: &Tableau) -> Result<Tableau> {
    rectify(&embed_shifted(t)?, None)
}

/// Schützenberger evacuation of a standard tableau of straight shape.
pub fn evacuation(t: &Tableau) -> Result<Tableau> {
    let shape = t.shape().clone();
    if !shape.is_straight() || shape.is_shifted() {
        return Err(Error::InvalidShape("evacuation needs a straight (unshifted) shape".into()));
    }
    let n = t.size() as u32;
    let mut out = t.clone();
    let mut cur = t.clone();
    for k in 1..=n {
        // Remove the minimal entry at (1,1) and slide into the hole.
        let mut map = entry_map(&cur);
        map.remove(&Cell::new(1, 1));
        let mut inner = cur.shape().inner().to_vec();
        inner[0] += 1;
        let skew = SkewShape::new(cur.shape().outer(), &inner, false)?;
        let path = slide(&skew, &mut map, Cell::new(1, 1))?;
        let end = *path.last().unwrap();
        out.set(end, n + 1 - k)?;
        if k < n {
            cur = rebuild(&skew, &map, 1, end.row)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::shifted_staircase;
    use crate::tableaux::{enumerate_standard, reverse};

    #[test]
    fn rsk_example() {
        let (p, q) = rsk(&[4, 1, 3, 2]);
        assert_eq!(p.rows(), &[vec![1, 2], vec![3], vec![4]]);
        assert_eq!(q.rows(), &[vec![1, 3], vec![2], vec![4]]);
        assert_eq!(rsk_inverse(&p, &q).unwrap(), vec![4, 1, 3, 2]);
    }

    #[test]
    fn ws_examples() {
        let (p, q) = ws_insert(&[1, 3, 2, 5, 4, 3]);
        assert_eq!(p.rows(), &[vec![1, 2, 3], vec![3, 4], vec![5]]);
        assert_eq!(q, MarkedTableau::parse(&[&["1", "2", "4"], &["3", "5"], &["6"]]).unwrap());
        let (p2, q2) = ws_insert(&[3, 1, 5, 2, 4, 3]);
        assert_eq!(p2, p);
        assert_eq!(q2, MarkedTableau::parse(&[&["1", "2'", "3"], &["4", "5"], &["6"]]).unwrap());
        assert_eq!(ws_inverse(&p, &q).unwrap(), vec![1, 3, 2, 5, 4, 3]);
        assert_eq!(ws_inverse(&p2, &q2).unwrap(), vec![3, 1, 5, 2, 4, 3]);
    }

    #[test]
    fn ws_inverse_example() {
        let tt = MarkedTableau::parse(&[
            &["1", "2", "4", "6'", "9'"],
            &["3", "5", "8", "11'"],
            &["7", "10'", "13'"],
            &["12", "14"],
            &["15"],
        ])
        .unwrap();
        let m = minimal_increasing(&shifted_staircase(6));
        assert_eq!(ws_inverse(&m, &tt).unwrap(), vec![1, 7, 5, 9, 8, 3, 6, 7, 2, 4, 3, 5, 4, 6, 5]);
    }

    #[test]
    fn minimal_increasing_five() {
        let m = minimal_increasing(&shifted_staircase(5));
        assert_eq!(m.rows(), &[vec![1, 2, 3, 4], vec![3, 4, 5], vec![5, 6], vec![7]]);
    }

    #[test]
    fn mixed_example() {
        let (p, q) = mixed_insert(&[1, 9, 11, 6, 10, 3, 7, 8, 2, 5, 4]).unwrap();
        assert_eq!(
            p,
            MarkedTableau::parse(&[&["1", "2", "4", "6'", "9'"], &["3", "5", "8", "11'"], &["7", "10'"]]).unwrap()
        );
        assert_eq!(q.rows(), &[vec![1, 2, 3, 7, 8], vec![4, 5, 9, 10], vec![6, 11]]);
        assert!(mixed_insert(&[1, 1]).is_err());
    }

    fn jdt_t() -> Tableau {
        Tableau::from_display(&[&[0, 0, 2, 5, 9], &[0, 2, 4, 7, 10], &[1, 6, 8]], false).unwrap()
    }

    #[test]
    fn jdt_example() {
        let (j, path) = jdt_slide_path(&jdt_t(), Cell::new(1, 2)).unwrap();
        assert_eq!(path, vec![Cell::new(1, 2), Cell::new(2, 2), Cell::new(2, 3), Cell::new(2, 4), Cell::new(2, 5)]);
        assert_eq!(j, Tableau::from_display(&[&[0, 2, 2, 5, 9], &[0, 4, 7, 10], &[1, 6, 8]], false).unwrap());
        let r = rectify(&jdt_t(), None).unwrap();
        assert_eq!(r.rows(), &[vec![1, 2, 2, 5, 9], vec![4, 7, 10], vec![6, 8]]);
        let straight = Tableau::from_display(&[&[1, 2], &[3]], false).unwrap();
        assert_eq!(jdt_slide(&straight, Cell::new(1, 1)), Err(Error::NotInnerCorner(1, 1)));
        assert_eq!(rectify(&straight, None).unwrap(), straight);
    }

    #[test]
    fn staircase_rectifies_to_superstandard() {
        for n in 2..=5 {
            let s = superstandard(&SkewShape::straight(&crate::shapes::staircase(n)));
            let r = rectify_shifted(&s).unwrap();
            assert_eq!(r, superstandard(&SkewShape::shifted(&shifted_staircase(n))));
        }
    }

    #[test]
    fn evacuation_reverses_descents() {
        let one = Tableau::from_display(&[&[1]], false).unwrap();
        assert_eq!(evacuation(&one).unwrap(), one);
        for t in enumerate_standard(&SkewShape::straight(&crate::shapes::staircase(4))) {
            let e = evacuation(&t).unwrap();
            assert!(e.is_standard());
            assert_eq!(e.descent_set(), reverse(&t.descent_set(), 6));
            assert_eq!(evacuation(&e).unwrap(), t);
        }
    }
}
