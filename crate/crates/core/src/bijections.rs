//! Bijections between standard tableaux of `δ_n/μ` and marked shifted
//! standard tableaux: φ = Q_SW∘Φ, its inverse ψ on staircase-minus-rectangle
//! shapes, the conjugation bijection, and the mixed-insertion and crystal
//! routes.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::insertion::{minimal_increasing, mixed_insert, rsk_inverse, superstandard, ws_insert, ws_inverse};
use crate::shapes::{eta, rectangle, shifted_staircase, staircase, Cell, Partition, SkewShape, StrictPartition};
use crate::tableaux::{enumerate_standard, marked_from_cells, Letter, MarkedTableau, Tableau};
use crate::words::{phi, phi_inverse, FcEmbedding};

/// Recover `(n, μ)` from a tableau shape `δ_n/μ`.
pub fn staircase_parts(shape: &SkewShape) -> Result<(usize, Partition)> {
    if shape.is_shifted() {
        return Err(Error::InvalidShape(format!("{shape} is shifted; expected δ_n/μ")));
    }
    let n = shape.outer().len() + 1;
    if shape.outer() != staircase(n).parts() {
        return Err(Error::InvalidShape(format!("outer shape of {shape} is not a staircase")));
    }
    Ok((n, shape.inner_partition()))
}

/// `(ℓ, m)` when `μ = (m^ℓ)`; `(0, 0)` for the empty partition.
pub fn rectangle_dims(mu: &Partition) -> Option<(usize, usize)> {
    if mu.is_empty() {
        return Some((0, 0));
    }
    let m = mu.part(0);
    mu.parts().iter().all(|&p| p == m).then_some((mu.len(), m))
}

fn embedding_of(t: &Tableau) -> Result<FcEmbedding> {
    let (n, mu) = staircase_parts(t.shape())?;
    FcEmbedding::skew_staircase(n, &mu)
}

/// φ(T) = Q_SW(Φ(T)).
pub fn phi_map(t: &Tableau) -> Result<MarkedTableau> {
    let emb = embedding_of(t)?;
    Ok(ws_insert(&phi(&emb, t)?).1)
}

/// φ(T) together with the insertion tableau P_SW(Φ(T)).
pub fn phi_pair(t: &Tableau) -> Result<(Tableau, MarkedTableau)> {
    let emb = embedding_of(t)?;
    Ok(ws_insert(&phi(&emb, t)?))
}

/// Letters of the rectangle `(m^ℓ)` inside `δ_n`, read column by column
/// from the left, each column top to bottom.
pub fn rectangle_column_word(n: usize, l: usize, m: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(l * m);
    for j in 1..=m {
        for i in 1..=l {
            out.push((n - 1 + i - j) as u32);
        }
    }
    out
}

/// The last `ℓm` letters of `ws_inverse(M^{ϱ_n}, T̃)`: the column word of the
/// rectangle, reversed. It consists of `m` descending runs of length `ℓ`, run
/// `k` starting at `n+ℓ−m−2+k`.
pub fn completion_tail(n: usize, l: usize, m: usize) -> Vec<u32> {
    let mut w = rectangle_column_word(n, l, m);
    w.reverse();
    w
}

/// The block `T̃ − T` that completes a tableau of `ϱ_n − τ^{ℓ,m}` to `ϱ_n`:
/// Q_SW of the rectangle's column word, reflected across `y = x` and with
/// values complemented in `[C(n,2)]`.
pub fn completion_block(n: usize, l: usize, m: usize) -> Result<Vec<(Cell, Letter)>> {
    if l * m == 0 {
        return Ok(Vec::new());
    }
    if l + m >= n {
        return Err(Error::InvalidShape(format!("need ℓ+m<n, got ℓ={l} m={m} n={n}")));
    }
    let q = ws_insert(&rectangle_column_word(n, l, m)).1;
    let total = (n * (n - 1) / 2) as u32;
    Ok(q.entries()
        .map(|(c, x)| (crate::shapes::reflect_cell(c, n - 1), Letter { value: total + 1 - x.value, marked: x.marked }))
        .collect())
}

/// Extend `U ∈ ShSYT′(ϱ_n − τ^{ℓ,m})` to `T̃ ∈ ShSYT′(ϱ_n)` by adding the
/// completion block.
pub fn complete_marked(u: &MarkedTableau, n: usize, l: usize, m: usize) -> Result<MarkedTableau> {
    let target = if l * m == 0 { shifted_staircase(n) } else { eta(n, l, m)? };
    if u.shape() != &SkewShape::shifted(&target) {
        return Err(Error::InvalidShape(format!("{} is not the shape ϱ_{n} − τ^{{{l},{m}}} = {target}", u.shape())));
    }
    let mut cells: Vec<(Cell, Letter)> = u.entries().collect();
    cells.extend(completion_block(n, l, m)?);
    marked_from_cells(&cells)
}

/// ψ: the inverse of φ on `ShSYT′(ϱ_n − τ^{ℓ,m})`, landing in `SYT(δ_n/(m^ℓ))`.
pub fn psi(u: &MarkedTableau, n: usize, l: usize, m: usize) -> Result<Tableau> {
    let (l, m) = if l * m == 0 { (0, 0) } else { (l, m) };
    let full = complete_marked(u, n, l, m)?;
    let word = ws_inverse(&minimal_increasing(&shifted_staircase(n)), &full)?;
    let keep = word.len() - l * m;
    let tail = completion_tail(n, l, m);
    if word[keep..] != tail[..] {
        return Err(Error::InvalidTableau(format!(
            "inverse insertion of the completed tableau ends in {:?}, expected {tail:?}",
            &word[keep..]
        )));
    }
    let mu = if l == 0 { Partition::empty() } else { rectangle(l, m) };
    phi_inverse(&FcEmbedding::skew_staircase(n, &mu)?, &word[..keep])
}

/// Distinct P_SW tableaux over `SYT(δ_n/μ)`, grouped by shape. The number of
/// classes of shape ν is the coefficient of `P_ν` in `s_{δ_n/μ}`.
pub fn schur_p_expand(n: usize, mu: &Partition) -> Result<BTreeMap<StrictPartition, usize>> {
    let shape = SkewShape::skew(&staircase(n), mu)?;
    let emb = FcEmbedding::skew_staircase(n, mu)?;
    let mut ps = std::collections::BTreeSet::new();
    for t in enumerate_standard(&shape) {
        ps.insert(ws_insert(&phi(&emb, &t)?).0);
    }
    let mut out = BTreeMap::new();
    for p in ps {
        let nu = StrictPartition::new(p.shape().outer().to_vec())?;
        *out.entry(nu).or_insert(0) += 1;
    }
    Ok(out)
}

/// Tableaux of `δ_n/μ` indexed by (shape of P_SW, rank of P_SW among classes
/// of that shape, Q_SW).
fn class_index(n: usize, mu: &Partition) -> Result<BTreeMap<(Vec<usize>, usize, MarkedTableau), Tableau>> {
    let shape = SkewShape::skew(&staircase(n), mu)?;
    let emb = FcEmbedding::skew_staircase(n, mu)?;
    let mut by_p: BTreeMap<Tableau, Vec<(MarkedTableau, Tableau)>> = BTreeMap::new();
    for t in enumerate_standard(&shape) {
        let (p, q) = ws_insert(&phi(&emb, &t)?);
        by_p.entry(p).or_default().push((q, t));
    }
    let mut rank: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for (p, members) in by_p {
        let nu = p.shape().outer().to_vec();
        let r = rank.entry(nu.clone()).or_insert(0);
        for (q, t) in members {
            out.insert((nu.clone(), *r, q), t);
        }
        *r += 1;
    }
    Ok(out)
}

/// Largest shape for which the conjugation bijection is tabulated exhaustively.
pub const STEMBRIDGE_MAX_CELLS: usize = 14;

/// The Des-preserving bijection `SYT(δ_n/μ) → SYT(δ_n/μ′)` for all `T` at
/// once. A tableau goes to the tableau of `δ_n/μ′` with the same Q_SW whose
/// P_SW class has the same shape and the same rank among classes of that shape.
pub fn stembridge_table(n: usize, mu: &Partition) -> Result<BTreeMap<Tableau, Tableau>> {
    let shape = SkewShape::skew(&staircase(n), mu)?;
    if shape.size() > STEMBRIDGE_MAX_CELLS {
        return Err(Error::BoundExceeded(format!(
            "{shape} has {} cells; the exhaustive table stops at {STEMBRIDGE_MAX_CELLS}",
            shape.size()
        )));
    }
    let src = class_index(n, mu)?;
    let dst = class_index(n, &mu.conjugate())?;
    if src.len() != dst.len() {
        return Err(Error::Arithmetic(format!("|SYT(δ_{n}/{mu})| = {} but the conjugate side has {}", src.len(), dst.len())));
    }
    let mut out = BTreeMap::new();
    for (key, t) in src {
        let image = dst
            .get(&key)
            .ok_or_else(|| Error::Arithmetic(format!("no class of shape {:?} rank {} on the conjugate side", key.0, key.1)))?;
        out.insert(t, image.clone());
    }
    Ok(out)
}

/// Des-preserving bijection `SYT(δ_n/μ) → SYT(δ_n/μ′)`. Rectangles go
/// through ψ; other shapes use the exhaustive table.
pub fn stembridge_map(t: &Tableau) -> Result<Tableau> {
    let (n, mu) = staircase_parts(t.shape())?;
    if let Some((l, m)) = rectangle_dims(&mu) {
        if l * m == 0 || l + m < n {
            return psi(&phi_map(t)?, n, m, l);
        }
    }
    stembridge_table(n, &mu)?
        .remove(t)
        .ok_or_else(|| Error::InvalidTableau(format!("{t} is not standard")))
}

/// `φ_{μ′}⁻¹(φ_μ(T)°)` for rectangles. This composite equals conjugation
/// `T ↦ T′`, so it complements descent sets.
pub fn stembridge_literal(t: &Tableau) -> Result<Tableau> {
    let (n, mu) = staircase_parts(t.shape())?;
    match rectangle_dims(&mu) {
        Some((l, m)) if l * m == 0 || l + m < n => psi(&phi_map(t)?.toggle_marks(), n, m, l),
        _ => Err(Error::InvalidShape(format!("{mu} is not a rectangle fitting in δ_{n}"))),
    }
}

/// φ through mixed insertion: complete with the superstandard rectangle,
/// invert RSK against `S^{δ_n}`, mixed-insert, reflect and complement
/// (toggling primes), then restrict.
pub fn mixed_route(t: &Tableau) -> Result<MarkedTableau> {
    let (n, mu) = staircase_parts(t.shape())?;
    let (l, m) = rectangle_dims(&mu).ok_or_else(|| Error::InvalidShape(format!("{mu} is not a rectangle")))?;
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    let lm = (l * m) as u32;
    let full = SkewShape::straight(&staircase(n));
    let mut tt = superstandard(&full);
    if l * m > 0 {
        for (c, v) in superstandard(&SkewShape::straight(&rectangle(l, m))).entries() {
            tt.set(c, v)?;
        }
    }
    for (c, v) in t.entries() {
        tt.set(c, v + lm)?;
    }
    let w = rsk_inverse(&tt, &superstandard(&full))?;
    let (p, _) = mixed_insert(&w)?;
    let total = full.size() as u32;
    // Reflection swaps the row and column conditions, so primes flip as well.
    let reflected = p.reflect_complement(n.saturating_sub(1), total)?.toggle_marks();
    let keep = total - lm;
    let cells: Vec<(Cell, Letter)> = reflected.entries().filter(|(_, l)| l.value <= keep).collect();
    marked_from_cells(&cells)
}

/// φ through the crystal reading word: `P_MS(w_T)`.
pub fn crystal_route(t: &Tableau) -> Result<MarkedTableau> {
    staircase_parts(t.shape())?;
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    Ok(mixed_insert(&t.crystal_reading_word())?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{enumerate_marked, reverse};

    fn ex_t() -> MarkedTableau {
        MarkedTableau::parse(&[&["1", "2", "4", "6'", "9'"], &["3", "5", "8", "11'"], &["7", "10'"]]).unwrap()
    }

    fn ex_s() -> Tableau {
        Tableau::from_display(&[&[0, 0, 1, 3, 11], &[0, 0, 2, 6], &[4, 5, 9], &[7, 10], &[8]], false).unwrap()
    }

    #[test]
    fn figure_first_column() {
        let s = Tableau::from_display(&[&[0, 0, 1], &[2, 3], &[4]], false).unwrap();
        let u = MarkedTableau::parse(&[&["1", "2'", "4'"], &["3"]]).unwrap();
        assert_eq!(phi_map(&s).unwrap(), u);
        assert_eq!(psi(&u, 4, 1, 2).unwrap(), s);
    }

    #[test]
    fn inverse_example() {
        assert_eq!(phi_map(&ex_s()).unwrap(), ex_t());
        assert_eq!(psi(&ex_t(), 6, 2, 2).unwrap(), ex_s());
        let full = complete_marked(&ex_t(), 6, 2, 2).unwrap();
        assert_eq!(full.get(Cell::new(3, 5)), Some(Letter::primed(13)));
        assert_eq!(full.get(Cell::new(4, 4)), Some(Letter::plain(12)));
        assert_eq!(full.get(Cell::new(5, 5)), Some(Letter::plain(15)));
        assert_eq!(completion_tail(6, 2, 2), vec![5, 4, 6, 5]);
        assert_eq!(completion_tail(6, 3, 2), vec![6, 5, 4, 7, 6, 5]);
        // The displayed block for ℓ=2, m=3 is shown toggled; it is the block of the conjugate rectangle.
        let block: BTreeMap<Cell, Letter> = completion_block(6, 3, 2).unwrap().into_iter().collect();
        let shown = [((2, 5), "12'"), ((3, 4), "10"), ((3, 5), "13"), ((4, 4), "11"), ((4, 5), "14"), ((5, 5), "15")];
        assert_eq!(block.len(), shown.len());
        for ((r, c), v) in shown {
            assert_eq!(block[&Cell::new(r, c)], v.parse().unwrap());
        }
    }

    #[test]
    fn crystal_and_mixed_routes() {
        assert_eq!(crystal_route(&ex_s()).unwrap(), ex_t());
        assert_eq!(mixed_route(&ex_s()).unwrap(), ex_t());
    }

    #[test]
    fn small_staircase_round_trips() {
        let one = Tableau::from_display(&[&[1]], false).unwrap();
        let u = phi_map(&one).unwrap();
        assert_eq!(u.size(), 1);
        assert_eq!(psi(&u, 2, 0, 0).unwrap(), one);
        for n in 2..=4 {
            for t in enumerate_standard(&SkewShape::straight(&staircase(n))) {
                assert_eq!(psi(&phi_map(&t).unwrap(), n, 0, 0).unwrap(), t);
            }
        }
    }

    #[test]
    fn rectangles_up_to_five() {
        for n in 3..=5 {
            for l in 1..n {
                for m in 1..n - l {
                    let shape = SkewShape::skew(&staircase(n), &rectangle(l, m)).unwrap();
                    let target = SkewShape::shifted(&eta(n, l, m).unwrap());
                    let all = enumerate_standard(&shape);
                    let mut images = std::collections::BTreeSet::new();
                    for t in &all {
                        let u = phi_map(t).unwrap();
                        assert_eq!(u.shape(), &target);
                        assert_eq!(u.descent_set(), reverse(&t.descent_set(), t.size()));
                        assert_eq!(&psi(&u, n, l, m).unwrap(), t);
                        assert_eq!(mixed_route(t).unwrap(), u);
                        images.insert(u);
                    }
                    assert_eq!(images.len(), enumerate_marked(&target).len());
                }
            }
        }
    }

    #[test]
    fn block_matches_completed_tableaux() {
        // φ of T completed by the column-superstandard rectangle restricts to the block.
        for n in 3..=6 {
            for l in 1..n {
                for m in 1..n - l {
                    let shape = SkewShape::skew(&staircase(n), &rectangle(l, m)).unwrap();
                    let full = SkewShape::straight(&staircase(n));
                    let fill = crate::tableaux::column_superstandard(&SkewShape::straight(&rectangle(l, m)));
                    let block: BTreeMap<Cell, Letter> = completion_block(n, l, m).unwrap().into_iter().collect();
                    for t in enumerate_standard(&shape).into_iter().take(40) {
                        let mut tt = superstandard(&full);
                        for (c, v) in fill.entries() {
                            tt.set(c, v).unwrap();
                        }
                        for (c, v) in t.entries() {
                            tt.set(c, v + (l * m) as u32).unwrap();
                        }
                        let q = phi_map(&tt).unwrap();
                        let u = phi_map(&t).unwrap();
                        for (c, x) in q.entries() {
                            match u.get(c) {
                                Some(y) => assert_eq!(x, y),
                                None => assert_eq!(block[&c], x),
                            }
                        }
                        assert_eq!(psi(&u.toggle_marks(), n, m, l).unwrap(), t.transpose().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_preserves_descents() {
        for mu in crate::shapes::partitions_inside(&staircase(4)) {
            let table = stembridge_table(4, &mu).unwrap();
            let images: std::collections::BTreeSet<_> = table.values().cloned().collect();
            assert_eq!(images.len(), table.len());
            for (t, s) in &table {
                assert_eq!(s.shape().inner_partition(), mu.conjugate());
                assert_eq!(s.descent_set(), t.descent_set());
                assert_eq!(&stembridge_map(t).unwrap(), s);
            }
        }
    }

    #[test]
    fn literal_composite_is_transpose() {
        for t in enumerate_standard(&SkewShape::skew(&staircase(5), &rectangle(1, 2)).unwrap()) {
            assert_eq!(stembridge_literal(&t).unwrap(), t.transpose().unwrap());
        }
    }

    #[test]
    fn expansion_of_rectangles() {
        let e = schur_p_expand(5, &rectangle(1, 2)).unwrap();
        assert_eq!(e.into_iter().collect::<Vec<_>>(), vec![(eta(5, 1, 2).unwrap(), 1)]);
        let e = schur_p_expand(4, &Partition::empty()).unwrap();
        assert_eq!(e.into_iter().collect::<Vec<_>>(), vec![(shifted_staircase(4), 1)]);
    }
}

