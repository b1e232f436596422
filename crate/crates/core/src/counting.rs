//! Exact counts: the staircase-minus-rectangle product formula, hook-length
//! formulas, Feit's determinant, a linear-extension oracle, LR coefficients,
//! and truncated generating functions.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{cell_census, eta, staircase, staircase_minus_rectangle, Cell, Partition, SkewShape, StrictPartition};
use crate::tableaux::{content_vectors, enumerate_marked, enumerate_set_valued, enumerate_standard, Bounds, Letter, SetKind};

pub type BigCount = BigUint;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn double_factorial(n: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = n;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    acc
}

/// `F(m) = 1!·2!⋯(m−1)!` and `G(m) = 1!!·3!!⋯(2m−3)!!`.
pub fn superfactorials(m: usize) -> (BigUint, BigUint) {
    let mut f = BigUint::one();
    let mut g = BigUint::one();
    for i in 1..m {
        f *= factorial(i);
        g *= double_factorial(2 * i as i64 - 1);
    }
    (f, g)
}

fn to_integer(r: &BigRational, what: &str) -> Result<BigUint> {
    if !r.is_integer() {
        return Err(Error::Arithmetic(format!("{what} evaluated to the non-integer {r}")));
    }
    r.to_integer().to_biguint().ok_or_else(|| Error::Arithmetic(format!("{what} evaluated to the negative value {r}")))
}

/// Product formula for `f^{δ_{a+b+2c}/(b^a)}`.
pub fn product_formula(a: usize, b: usize, c: usize) -> Result<BigUint> {
    let k = a + b + 2 * c;
    if k == 0 {
        return Err(Error::InvalidShape("a = b = c = 0 gives no staircase".into()));
    }
    let n = k * (k - 1) / 2 - a * b;
    let f = |m: usize| BigInt::from(superfactorials(m).0);
    let g = |m: usize| BigInt::from(superfactorials(m).1);
    let num = BigInt::from(factorial(n)) * f(a) * f(b) * f(c) * f(a + b + c) * g(c) * g(a + b + c);
    let den = f(a + b) * f(b + c) * f(a + c) * g(a + c) * g(b + c) * g(a + b + 2 * c);
    to_integer(&BigRational::new(num, den), &format!("product_formula({a},{b},{c})"))
}

/// Largest shape handled by the order-ideal dynamic program.
pub const LINEAR_EXTENSION_MAX_CELLS: usize = 40;

/// Number of linear extensions of a (shifted) skew diagram, by dynamic
/// programming over order ideals.
pub fn count_linear_extensions(shape: &SkewShape) -> Result<BigUint> {
    if shape.size() > LINEAR_EXTENSION_MAX_CELLS {
        return Err(Error::BoundExceeded(format!("{} cells > {LINEAR_EXTENSION_MAX_CELLS}", shape.size())));
    }
    let rows = shape.num_rows();
    let ranges: Vec<(usize, usize)> = (1..=rows).map(|r| shape.row_range(r)).collect();
    let mut memo: HashMap<Vec<u8>, BigUint> = HashMap::new();
    fn rec(shape: &SkewShape, ranges: &[(usize, usize)], fill: &mut Vec<u8>, memo: &mut HashMap<Vec<u8>, BigUint>) -> BigUint {
        if let Some(v) = memo.get(fill.as_slice()) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut complete = true;
        for r in 0..ranges.len() {
            let (a, b) = ranges[r];
            let next = a + fill[r] as usize;
            if next > b {
                continue;
            }
            complete = false;
            // The cell above must be filled or lie outside the skew shape.
            if r > 0 {
                let above = Cell::new(r, next);
                if shape.contains(above) && next >= ranges[r - 1].0 + fill[r - 1] as usize {
                    continue;
                }
            }
            fill[r] += 1;
            total += rec(shape, ranges, fill, memo);
            fill[r] -= 1;
        }
        if complete {
            total = BigUint::one();
        }
        memo.insert(fill.clone(), total.clone());
        total
    }
    Ok(rec(shape, &ranges, &mut vec![0; rows], &mut memo))
}

/// Hook-length formula for a straight shape.
pub fn hlf(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for c in lambda.cells() {
        let arm = lambda.part(c.row - 1) - c.col;
        let leg = conj.part(c.col - 1) - c.row;
        hooks *= (arm + leg + 1) as u64;
    }
    factorial(lambda.size()) / hooks
}

/// Shifted hook lengths (hooks in the doubled diagram).
pub fn shifted_hooks(eta: &StrictPartition) -> Vec<(Cell, usize)> {
    let l = eta.len();
    let part = |r: usize| if r >= 1 && r <= l { eta.part(r - 1) } else { 0 };
    let row_end = |r: usize| r + part(r) - 1;
    eta.cells()
        .into_iter()
        .map(|c| {
            let arm = row_end(c.row) - c.col;
            let leg = (c.row + 1..=l).filter(|&r| r <= c.col && row_end(r) >= c.col).count();
            let extra = if c.col <= l { part(c.col + 1) } else { 0 };
            (c, arm + leg + 1 + extra)
        })
        .collect()
}

/// Shifted hook-length formula: `|ShSYT(η)|`.
pub fn shifted_hlf(eta: &StrictPartition) -> BigUint {
    let hooks = shifted_hooks(eta).iter().fold(BigUint::one(), |acc, &(_, h)| acc * h as u64);
    factorial(eta.size()) / hooks
}

fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= pivot.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / pivot.clone();
            for c in col..n {
                let v = m[col][c].clone() * factor.clone();
                m[r][c] -= v;
            }
        }
    }
    det
}

/// Feit's determinant `n!·det[1/(λ_i − μ_j − i + j)!]`.
pub fn feit(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if !lambda.contains(mu) {
        return Err(Error::InvalidShape(format!("{mu} is not contained in {lambda}")));
    }
    let l = lambda.len();
    if l > 12 {
        return Err(Error::BoundExceeded(format!("length {l} > 12")));
    }
    let n = lambda.size() - mu.size();
    let m: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let d = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                    if d < 0 {
                        BigRational::zero()
                    } else {
                        BigRational::new(BigInt::one(), BigInt::from(factorial(d as usize)))
                    }
                })
                .collect()
        })
        .collect();
    let det = rational_det(m) * BigRational::from_integer(BigInt::from(factorial(n)));
    to_integer(&det, &format!("feit({lambda}, {mu})"))
}

/// `c^λ_{μν}`: semistandard fillings of `λ/μ` with content `ν` whose reverse
/// reading word (rows top to bottom, each right to left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return Ok(BigUint::zero());
    }
    if lambda.size() - mu.size() > 16 {
        return Err(Error::BoundExceeded(format!("{} cells > 16", lambda.size() - mu.size())));
    }
    let shape = SkewShape::skew(lambda, mu)?;
    let mut order: Vec<Cell> = Vec::new();
    for r in 1..=shape.num_rows() {
        let (a, b) = shape.row_range(r);
        order.extend((a..=b).rev().map(|c| Cell::new(r, c)));
    }
    let mut filled: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut counts = vec![0usize; nu.len() + 1];
    fn rec(
        k: usize,
        order: &[Cell],
        nu: &Partition,
        filled: &mut BTreeMap<Cell, usize>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if k == order.len() {
            return 1;
        }
        let c = order[k];
        let hi = filled.get(&Cell::new(c.row, c.col + 1)).copied().unwrap_or(nu.len());
        let lo = filled.get(&Cell::new(c.row.wrapping_sub(1), c.col)).map_or(1, |v| v + 1);
        let mut total = 0;
        for v in lo..=hi {
            if counts[v - 1] >= nu.part(v - 1) || (v > 1 && counts[v - 1] + 1 > counts[v - 2]) {
                continue;
            }
            counts[v - 1] += 1;
            filled.insert(c, v);
            total += rec(k + 1, order, nu, filled, counts);
            filled.remove(&c);
            counts[v - 1] -= 1;
        }
        total
    }
    Ok(BigUint::from(rec(0, &order, nu, &mut filled, &mut counts)))
}

/// The eight coefficients `c^{δ_k}` over the conjugation orbit of `(μ, ν)`,
/// in the order `μν, μ′ν, μν′, μ′ν′, ν′μ′, νμ′, ν′μ, νμ`.
pub fn lr_orbit(k: usize, mu: &Partition, nu: &Partition) -> Result<[BigUint; 8]> {
    let lam = staircase(k);
    let (mc, nc) = (mu.conjugate(), nu.conjugate());
    let pairs = [(mu, nu), (&mc, nu), (mu, &nc), (&mc, &nc), (&nc, &mc), (nu, &mc), (&nc, mu), (nu, mu)];
    let mut out: [BigUint; 8] = Default::default();
    for (i, (a, b)) in pairs.into_iter().enumerate() {
        out[i] = lr_coefficient(&lam, a, b)?;
    }
    Ok(out)
}

/// Both sides of `f^{δ_k/(b^a)} = 2^N · |ShSYT(η)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainIdentity {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub f: BigUint,
    pub g: BigUint,
    /// Off-diagonal cells of η.
    pub n_structural: usize,
    /// `|η| − k + a` as printed.
    pub n_printed: i64,
    pub holds: bool,
    pub holds_printed: bool,
}

pub fn main_identity(k: usize, a: usize, b: usize) -> Result<MainIdentity> {
    let shape = staircase_minus_rectangle(k, a, b)?;
    let e = eta(k, a, b)?;
    let f = count_linear_extensions(&shape)?;
    let g = count_linear_extensions(&SkewShape::shifted(&e))?;
    let n_structural = cell_census(&e).1;
    let n_printed = e.size() as i64 - k as i64 + a as i64;
    let holds = f == (&g << n_structural);
    let holds_printed = n_printed >= 0 && f == (&g << n_printed as usize);
    Ok(MainIdentity { k, a, b, f, g, n_structural, n_printed, holds, holds_printed })
}

/// Truncated generating polynomial in `numvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialGF {
    pub numvars: usize,
    pub maxdeg: usize,
    pub coefficients: BTreeMap<Vec<u32>, BigUint>,
}

impl MonomialGF {
    pub fn new(numvars: usize, maxdeg: usize) -> Self {
        MonomialGF { numvars, maxdeg, coefficients: BTreeMap::new() }
    }

    /// Add `x^content`, where `content` lists variable indices `1..=numvars`.
    pub fn add_content(&mut self, content: impl IntoIterator<Item = u32>) {
        let mut e = vec![0u32; self.numvars];
        let mut deg = 0;
        for v in content {
            e[v as usize - 1] += 1;
            deg += 1;
        }
        if deg <= self.maxdeg {
            *self.coefficients.entry(e).or_insert_with(BigUint::zero) += 1u32;
        }
    }

    pub fn add(&mut self, other: &MonomialGF) {
        for (e, c) in &other.coefficients {
            *self.coefficients.entry(e.clone()).or_insert_with(BigUint::zero) += c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.values().all(|c| c.is_zero())
    }

    pub fn coefficient(&self, e: &[u32]) -> BigUint {
        self.coefficients.get(e).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigUint {
        self.coefficients.values().sum()
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct GfJson {
    vars: usize,
    deg: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MonomialGF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GfJson {
            vars: self.numvars,
            deg: self.maxdeg,
            terms: self
                .coefficients
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| TermJson { e: e.clone(), c: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialGF {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GfJson::deserialize(d)?;
        let mut gf = MonomialGF::new(j.vars, j.deg);
        for t in j.terms {
            if t.e.len() != j.vars {
                return Err(serde::de::Error::custom("exponent vector length differs from vars"));
            }
            let c: BigUint = t.c.parse().map_err(serde::de::Error::custom)?;
            gf.coefficients.insert(t.e, c);
        }
        Ok(gf)
    }
}

/// Generating functions that `gf_truncate` can expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GfKind {
    Schur,
    SchurSkew,
    SchurP,
    SchurPSkew,
    GrothendieckG,
    GrothendieckGp,
}

pub const GF_MAX_VARS: usize = 4;
pub const GF_MAX_DEG: usize = 12;

/// Semistandard fillings with entries in `[numvars]`, recorded as contents.
fn for_each_ssyt(shape: &SkewShape, numvars: u32, f: &mut dyn FnMut(&[u32])) {
    let cells = shape.cells();
    let mut vals: BTreeMap<Cell, u32> = BTreeMap::new();
    let mut content = Vec::with_capacity(cells.len());
    fn rec(
        k: usize,
        cells: &[Cell],
        nv: u32,
        vals: &mut BTreeMap<Cell, u32>,
        content: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if k == cells.len() {
            f(content);
            return;
        }
        let c = cells[k];
        let left = vals.get(&Cell::new(c.row, c.col.wrapping_sub(1))).copied().unwrap_or(1);
        let up = vals.get(&Cell::new(c.row.wrapping_sub(1), c.col)).map_or(1, |v| v + 1);
        for v in left.max(up)..=nv {
            vals.insert(c, v);
            content.push(v);
            rec(k + 1, cells, nv, vals, content, f);
            content.pop();
        }
        vals.remove(&c);
    }
    rec(0, &cells, numvars, &mut vals, &mut content, f);
}

/// Marked shifted semistandard fillings (unmarked diagonal) with entries in
/// `[numvars]`: rows and columns weakly increase, an unmarked letter appears
/// at most once per column and a marked letter at most once per row.
fn for_each_marked_ssyt(shape: &SkewShape, numvars: u32, f: &mut dyn FnMut(&[u32])) {
    let cells = shape.cells();
    let mut vals: BTreeMap<Cell, Letter> = BTreeMap::new();
    let mut content = Vec::with_capacity(cells.len());
    let mut alphabet = Vec::new();
    for v in 1..=numvars {
        alphabet.push(Letter::primed(v));
        alphabet.push(Letter::plain(v));
    }
    fn rec(
        k: usize,
        cells: &[Cell],
        alphabet: &[Letter],
        vals: &mut BTreeMap<Cell, Letter>,
        content: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if k == cells.len() {
            f(content);
            return;
        }
        let c = cells[k];
        let left = vals.get(&Cell::new(c.row, c.col.wrapping_sub(1))).copied();
        let up = vals.get(&Cell::new(c.row.wrapping_sub(1), c.col)).copied();
        for &x in alphabet {
            if c.is_diagonal() && x.marked {
                continue;
            }
            if let Some(l) = left {
                if x < l || (x == l && x.marked) {
                    continue;
                }
            }
            if let Some(u) = up {
                if x < u || (x == u && !x.marked) {
                    continue;
                }
            }
            vals.insert(c, x);
            content.push(x.value);
            rec(k + 1, cells, alphabet, vals, content, f);
            content.pop();
        }
        vals.remove(&c);
    }
    rec(0, &cells, &alphabet, &mut vals, &mut content, f);
}

/// Truncated expansion of a Schur, Schur P, or (non-standard) Grothendieck
/// generating function.
pub fn gf_truncate(kind: GfKind, shape: &SkewShape, numvars: usize, maxdeg: usize, bounds: Bounds) -> Result<MonomialGF> {
    if numvars == 0 || numvars > GF_MAX_VARS || maxdeg > GF_MAX_DEG {
        return Err(Error::BoundExceeded(format!(
            "need 1 ≤ numvars ≤ {GF_MAX_VARS} and maxdeg ≤ {GF_MAX_DEG}, got {numvars} and {maxdeg}"
        )));
    }
    let shifted_kind = matches!(kind, GfKind::SchurP | GfKind::SchurPSkew | GfKind::GrothendieckGp);
    if shifted_kind != shape.is_shifted() {
        return Err(Error::InvalidShape(format!("{kind:?} does not apply to {shape}")));
    }
    if matches!(kind, GfKind::Schur | GfKind::SchurP) && !shape.is_straight() {
        return Err(Error::InvalidShape(format!("{kind:?} needs a straight shape; use the skew variant")));
    }
    let mut gf = MonomialGF::new(numvars, maxdeg);
    let nv = numvars as u32;
    match kind {
        GfKind::Schur | GfKind::SchurSkew => {
            if shape.size() <= maxdeg {
                for_each_ssyt(shape, nv, &mut |c| gf.add_content(c.iter().copied()));
            }
        }
        GfKind::SchurP | GfKind::SchurPSkew => {
            if shape.size() <= maxdeg {
                for_each_marked_ssyt(shape, nv, &mut |c| gf.add_content(c.iter().copied()));
            }
        }
        GfKind::GrothendieckG | GfKind::GrothendieckGp => {
            let sk = if kind == GfKind::GrothendieckG { SetKind::Plain } else { SetKind::MarkedShifted };
            for size in shape.size()..=maxdeg {
                for t in enumerate_set_valued(shape, size, sk, bounds)? {
                    for i in content_vectors(&t.descent_set(), size, nv) {
                        gf.add_content(i);
                    }
                }
            }
        }
    }
    Ok(gf)
}

/// Schur function through the fundamental expansion over standard tableaux,
/// with descent sets optionally reversed.
pub fn schur_via_descents(shape: &SkewShape, numvars: usize, maxdeg: usize, reversed: bool) -> MonomialGF {
    let mut gf = MonomialGF::new(numvars, maxdeg);
    let n = shape.size();
    if n > maxdeg {
        return gf;
    }
    for t in enumerate_standard(shape) {
        let des = if reversed { crate::tableaux::reverse(&t.descent_set(), n) } else { t.descent_set() };
        for i in content_vectors(&des, n, numvars as u32) {
            gf.add_content(i);
        }
    }
    gf
}

/// Schur P function through the fundamental expansion over marked shifted
/// standard tableaux.
pub fn schur_p_via_descents(shape: &SkewShape, numvars: usize, maxdeg: usize) -> MonomialGF {
    let mut gf = MonomialGF::new(numvars, maxdeg);
    let n = shape.size();
    if n > maxdeg {
        return gf;
    }
    for t in enumerate_marked(shape) {
        for i in content_vectors(&t.descent_set(), n, numvars as u32) {
            gf.add_content(i);
        }
    }
    gf
}

/// Small helper for callers holding a `u64`.
pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{partitions_inside, rectangle, shifted_staircase, strict_partitions_inside};

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn superfactorial_values() {
        assert_eq!(superfactorials(1), (big(1), big(1)));
        assert_eq!(superfactorials(4), (big(12), big(45)));
        assert_eq!(superfactorials(0), (big(1), big(1)));
    }

    #[test]
    fn product_formula_values() {
        assert_eq!(product_formula(0, 0, 1).unwrap(), big(1));
        assert_eq!(product_formula(1, 1, 1).unwrap(), big(16));
        let shape = staircase_minus_rectangle(5, 1, 2).unwrap();
        assert_eq!(product_formula(1, 2, 1).unwrap(), count_linear_extensions(&shape).unwrap());
    }

    #[test]
    fn linear_extension_values() {
        assert_eq!(count_linear_extensions(&staircase_minus_rectangle(4, 1, 2).unwrap()).unwrap(), big(8));
        assert_eq!(count_linear_extensions(&SkewShape::straight(&Partition::new(vec![1]).unwrap())).unwrap(), big(1));
        let sh = SkewShape::shifted(&StrictPartition::new(vec![3, 1]).unwrap());
        assert_eq!(count_linear_extensions(&sh).unwrap(), big(2));
        for mu in partitions_inside(&staircase(5)) {
            let shape = SkewShape::skew(&staircase(5), &mu).unwrap();
            assert_eq!(count_linear_extensions(&shape).unwrap(), big(enumerate_standard(&shape).len() as u64));
        }
    }

    #[test]
    fn hook_formulas() {
        assert_eq!(hlf(&staircase(4)), big(16));
        assert_eq!(hlf(&Partition::new(vec![1]).unwrap()), big(1));
        assert_eq!(shifted_hlf(&shifted_staircase(4)), big(2));
        for eta in strict_partitions_inside(&shifted_staircase(7)) {
            assert_eq!(shifted_hlf(&eta), count_linear_extensions(&SkewShape::shifted(&eta)).unwrap(), "{eta}");
        }
        for lam in crate::shapes::partitions_of(7) {
            assert_eq!(hlf(&lam), count_linear_extensions(&SkewShape::straight(&lam)).unwrap());
        }
    }

    #[test]
    fn feit_values() {
        assert_eq!(feit(&staircase(4), &Partition::new(vec![2]).unwrap()).unwrap(), big(8));
        assert_eq!(feit(&staircase(4), &Partition::new(vec![1]).unwrap()).unwrap(), big(16));
        assert_eq!(feit(&Partition::new(vec![1]).unwrap(), &Partition::empty()).unwrap(), big(1));
        for mu in partitions_inside(&staircase(6)) {
            let shape = SkewShape::skew(&staircase(6), &mu).unwrap();
            if shape.size() <= 12 {
                assert_eq!(feit(&staircase(6), &mu).unwrap(), count_linear_extensions(&shape).unwrap());
            }
        }
    }

    #[test]
    fn lr_values() {
        let e = Partition::empty();
        assert_eq!(lr_coefficient(&staircase(4), &e, &staircase(4)).unwrap(), big(1));
        let p = |v: Vec<usize>| Partition::new(v).unwrap();
        assert_eq!(
            lr_coefficient(&staircase(3), &p(vec![2]), &p(vec![1])).unwrap(),
            lr_coefficient(&staircase(3), &p(vec![1, 1]), &p(vec![1])).unwrap()
        );
        assert_eq!(lr_coefficient(&p(vec![3, 2, 1]), &p(vec![2, 1]), &p(vec![2, 1])).unwrap(), big(2));
        // Σ_ν c^λ_{μν} f^ν = f^{λ/μ}.
        for mu in partitions_inside(&staircase(5)) {
            let lam = staircase(5);
            let n = lam.size() - mu.size();
            let mut total = BigUint::zero();
            for nu in crate::shapes::partitions_of(n) {
                total += lr_coefficient(&lam, &mu, &nu).unwrap() * hlf(&nu);
            }
            assert_eq!(total, count_linear_extensions(&SkewShape::skew(&lam, &mu).unwrap()).unwrap());
        }
    }

    #[test]
    fn lr_orbit_k4() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        for nu in crate::shapes::partitions_of(3) {
            let orbit = lr_orbit(4, &mu, &nu).unwrap();
            assert!(orbit.iter().all(|c| c == &orbit[0]));
        }
    }

    #[test]
    fn main_identity_figure() {
        let m = main_identity(4, 1, 2).unwrap();
        assert_eq!((m.f.clone(), m.g.clone(), m.n_structural, m.n_printed), (big(8), big(2), 2, 1));
        assert!(m.holds);
        assert!(!m.holds_printed);
    }

    #[test]
    fn gf_examples() {
        let b = Bounds::default();
        let s = gf_truncate(GfKind::Schur, &SkewShape::straight(&staircase(2)), 2, 4, b).unwrap();
        assert_eq!(s.coefficients.len(), 2);
        assert_eq!(s.coefficient(&[1, 0]), big(1));
        assert_eq!(s.coefficient(&[0, 1]), big(1));
        let s4 = gf_truncate(GfKind::Schur, &SkewShape::straight(&staircase(4)), 3, 6, b).unwrap();
        let p4 = gf_truncate(GfKind::SchurP, &SkewShape::shifted(&shifted_staircase(4)), 3, 6, b).unwrap();
        assert_eq!(s4, p4);
        let a = gf_truncate(GfKind::SchurSkew, &staircase_minus_rectangle(4, 1, 2).unwrap(), 3, 4, b).unwrap();
        let c = gf_truncate(GfKind::SchurSkew, &staircase_minus_rectangle(4, 2, 1).unwrap(), 3, 4, b).unwrap();
        assert_eq!(a, c);
        assert_eq!(a, schur_via_descents(&staircase_minus_rectangle(4, 1, 2).unwrap(), 3, 4, false));
        let e = SkewShape::shifted(&eta(4, 1, 2).unwrap());
        assert_eq!(gf_truncate(GfKind::SchurP, &e, 3, 4, b).unwrap(), schur_p_via_descents(&e, 3, 4));
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<MonomialGF>(&json).unwrap(), a);
    }

    #[test]
    fn grothendieck_conjugate_symmetry() {
        let b = Bounds::default();
        let g1 = gf_truncate(GfKind::GrothendieckG, &staircase_minus_rectangle(4, 1, 2).unwrap(), 3, 7, b).unwrap();
        let g2 = gf_truncate(GfKind::GrothendieckG, &staircase_minus_rectangle(4, 2, 1).unwrap(), 3, 7, b).unwrap();
        assert_eq!(g1, g2);
        let gp = gf_truncate(GfKind::GrothendieckGp, &SkewShape::shifted(&eta(4, 1, 2).unwrap()), 3, 7, b).unwrap();
        assert_eq!(g1, gp);
        assert!(SkewShape::skew(&staircase(4), &rectangle(1, 2)).is_ok());
    }

    #[test]
    fn set_valued_descent_multisets_match() {
        use crate::tableaux::reverse;
        let b = Bounds::default();
        for (n, l, m) in [(3, 0, 0), (4, 1, 1), (4, 1, 2)] {
            let plain = if l == 0 { SkewShape::straight(&staircase(n)) } else { staircase_minus_rectangle(n, l, m).unwrap() };
            let marked = SkewShape::shifted(&if l == 0 { shifted_staircase(n) } else { eta(n, l, m).unwrap() });
            for size in plain.size()..=plain.size() + 2 {
                let mut da: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
                for t in enumerate_set_valued(&plain, size, SetKind::Plain, b).unwrap() {
                    *da.entry(reverse(&t.descent_set(), size).into_iter().collect()).or_default() += 1;
                }
                let mut dc: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
                for t in enumerate_set_valued(&marked, size, SetKind::MarkedShifted, b).unwrap() {
                    *dc.entry(t.descent_set().into_iter().collect()).or_default() += 1;
                }
                assert_eq!(da, dc, "n={n} l={l} m={m} size={size}");
            }
        }
    }
}
