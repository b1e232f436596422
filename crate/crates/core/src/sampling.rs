//! Uniform random tableaux: a shifted hook walk, an exact corner-ratio
//! sampler, random marks, and the skew-staircase pipeline built on ψ.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::{BigUint, RandBigInt};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::bijections::psi;
use crate::counting::shifted_hlf;
use crate::error::{Error, Result};
use crate::shapes::{eta, Cell, SkewShape, StrictPartition};
use crate::tableaux::{MarkedTableau, Tableau};

pub const SAMPLE_MAX_CELLS: usize = 1_000_000;
pub const EXACT_MAX_CELLS: usize = 1_000;

/// Seeded ChaCha stream. `split(i)` gives independent streams for parallel
/// tasks; a single stream is bit-reproducible.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn split(&self, stream: u64) -> RandomSource {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream + 1);
        RandomSource { seed: self.seed, rng }
    }
}

impl RngCore for RandomSource {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }
    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }
    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.rng.try_fill_bytes(dest)
    }
}

/// Fenwick tree over row lengths, used to draw a uniform cell.
struct Fenwick(Vec<i64>);

impl Fenwick {
    fn new(vals: &[usize]) -> Self {
        let mut f = Fenwick(vec![0; vals.len() + 1]);
        for (i, &v) in vals.iter().enumerate() {
            f.add(i, v as i64);
        }
        f
    }

    fn add(&mut self, i: usize, d: i64) {
        let mut i = i + 1;
        while i < self.0.len() {
            self.0[i] += d;
            i += i & i.wrapping_neg();
        }
    }

    /// Index of the row holding the `k`-th cell (0-based), and the offset in it.
    fn find(&self, mut k: i64) -> (usize, usize) {
        let n = self.0.len() - 1;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            if pos + step <= n && self.0[pos + step] <= k {
                pos += step;
                k -= self.0[pos];
            }
            step >>= 1;
        }
        (pos, k as usize)
    }
}

/// The mutable shifted diagram seen by the walk. Rows and columns are
/// 1-based; row `r` occupies columns `r ..= r + len[r] - 1`.
struct WalkState {
    len: Vec<usize>,
    col: Vec<usize>,
}

impl WalkState {
    fn new(eta: &StrictPartition) -> Self {
        let l = eta.len();
        let mut len = vec![0; l + 2];
        let width = if l == 0 { 0 } else { eta.part(0) };
        let mut col = vec![0; width + 2];
        for r in 1..=l {
            len[r] = eta.part(r - 1);
            for c in r..r + len[r] {
                col[c] += 1;
            }
        }
        WalkState { len, col }
    }

    /// One hook-walk step from `(i, j)`; `None` at a corner.
    fn step(&self, i: usize, j: usize, rng: &mut impl Rng) -> Option<(usize, usize)> {
        let arm = self.len[i] + i - 1 - j;
        let leg = self.col[j] - i;
        let ext = if self.col[j] == j { self.len.get(j + 1).copied().unwrap_or(0) } else { 0 };
        let h = arm + leg + ext;
        if h == 0 {
            return None;
        }
        let x = rng.gen_range(0..h);
        Some(if x < arm {
            (i, j + 1 + x)
        } else if x < arm + leg {
            (i + 1 + (x - arm), j)
        } else {
            (j + 1, j + 1 + (x - arm - leg))
        })
    }
}

/// Uniform element of `ShSYT(η)` by the shifted hook walk.
pub fn sample_shifted_syt(eta: &StrictPartition, rng: &mut impl Rng) -> Result<Tableau> {
    let total = eta.size();
    if total > SAMPLE_MAX_CELLS {
        return Err(Error::BoundExceeded(format!("{total} cells > {SAMPLE_MAX_CELLS}")));
    }
    let l = eta.len();
    let mut st = WalkState::new(eta);
    let mut fen = Fenwick::new(&st.len[1..=l]);
    let mut flat: Vec<Vec<u32>> = (1..=l).map(|r| vec![0; st.len[r]]).collect();
    for v in (1..=total).rev() {
        let (ri, off) = fen.find(rng.gen_range(0..v) as i64);
        let (mut i, mut j) = (ri + 1, ri + 1 + off);
        while let Some(next) = st.step(i, j, rng) {
            (i, j) = next;
        }
        flat[i - 1][j - i] = v as u32;
        st.len[i] -= 1;
        st.col[j] -= 1;
        fen.add(i - 1, -1);
    }
    Tableau::new(SkewShape::shifted(eta), flat)
}

fn remove_corner(eta: &[usize], r: usize) -> Vec<usize> {
    let mut p = eta.to_vec();
    p[r] -= 1;
    if p[r] == 0 {
        p.pop();
    }
    p
}

/// Uniform element of `ShSYT(η)`: place the largest entry in corner `c`
/// with probability `g^{η−c} / g^η`, then recurse.
pub fn sample_exact(eta: &StrictPartition, rng: &mut impl Rng) -> Result<Tableau> {
    let total = eta.size();
    if total > EXACT_MAX_CELLS {
        return Err(Error::BoundExceeded(format!("{total} cells > {EXACT_MAX_CELLS}")));
    }
    let mut parts = eta.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|&p| vec![0; p]).collect();
    for v in (1..=total).rev() {
        let mut choices: Vec<(usize, BigUint)> = Vec::new();
        for r in 0..parts.len() {
            if r + 1 == parts.len() || parts[r + 1] + 1 < parts[r] {
                let sub = StrictPartition::new(remove_corner(&parts, r))?;
                choices.push((r, shifted_hlf(&sub)));
            }
        }
        let sum: BigUint = choices.iter().map(|(_, g)| g).sum();
        let mut x = rng.gen_biguint_below(&sum);
        let mut pick = choices[0].0;
        for (r, g) in choices {
            if x < g {
                pick = r;
                break;
            }
            x -= g;
        }
        rows[pick][parts[pick] - 1] = v as u32;
        parts = remove_corner(&parts, pick);
    }
    Tableau::new(SkewShape::shifted(eta), rows)
}

/// Independent fair coins on the off-diagonal cells, read in row-major order.
pub fn random_marks(t: &Tableau, rng: &mut impl Rng) -> Result<MarkedTableau> {
    let marks: BTreeSet<Cell> = t.entries().filter(|(c, _)| !c.is_diagonal()).filter(|_| rng.gen_bool(0.5)).map(|(c, _)| c).collect();
    t.with_marks(&marks)
}

/// Uniform element of `SYT(δ_k/(b^a))`: hook walk on η, random marks, ψ.
pub fn sample_skew_staircase(k: usize, a: usize, b: usize, rng: &mut impl Rng) -> Result<Tableau> {
    if k == 0 || (a * b > 0 && a + b >= k) {
        return Err(Error::InvalidShape(format!("need a+b<k, got k={k} a={a} b={b}")));
    }
    let e = eta(k, a, b)?;
    let u = random_marks(&sample_shifted_syt(&e, rng)?, rng)?;
    psi(&u, k, a, b)
}

/// Pearson statistic and upper-tail p-value against a uniform distribution
/// on `observed.len()` outcomes.
pub fn chi_square_uniform(observed: &[u64]) -> (f64, f64) {
    let k = observed.len();
    if k < 2 {
        return (0.0, 1.0);
    }
    let n: u64 = observed.iter().sum();
    let e = n as f64 / k as f64;
    let stat: f64 = observed.iter().map(|&o| (o as f64 - e).powi(2) / e).sum();
    let dist = ChiSquared::new((k - 1) as f64).expect("positive degrees of freedom");
    (stat, 1.0 - dist.cdf(stat))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchmarkRow {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub median_secs: f64,
}

/// The rectangle used for staircase size `k`: (a, b) = (k/5, k/3), the
/// proportions of (60, 100) at k = 300.
pub fn benchmark_rect(k: usize) -> (usize, usize) {
    (k / 5, k / 3)
}

/// Median wall-clock time of `sample_skew_staircase` for each `k`.
pub fn benchmark_scaling(ks: &[usize], reps: usize, seed: u64) -> Result<Vec<BenchmarkRow>> {
    if reps == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let src = RandomSource::new(seed);
    for (idx, &k) in ks.iter().enumerate() {
        let (a, b) = benchmark_rect(k);
        let mut rng = src.split(idx as u64);
        let mut times = Vec::with_capacity(reps);
        for _ in 0..reps {
            let start = Instant::now();
            sample_skew_staircase(k, a, b, &mut rng)?;
            times.push(start.elapsed().as_secs_f64());
        }
        times.sort_by(|x, y| x.total_cmp(y));
        out.push(BenchmarkRow { k, a, b, median_secs: times[times.len() / 2] });
    }
    Ok(out)
}

/// Least-squares slope of log(time) against log(k).
pub fn fitted_exponent(rows: &[BenchmarkRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| ((r.k as f64).ln(), r.median_secs.max(1e-9).ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_linear_extensions;
    use crate::shapes::shifted_staircase;
    use crate::tableaux::enumerate_standard;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use std::collections::{BTreeMap, HashMap};

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    /// Exact probability that a walk started uniformly on `η` stops in each row's corner.
    fn exact_walk_corners(eta: &StrictPartition) -> BTreeMap<usize, BigRational> {
        let st = WalkState::new(eta);
        let cells = eta.cells();
        let mut memo: HashMap<(usize, usize), BTreeMap<usize, BigRational>> = HashMap::new();
        fn go(
            st: &WalkState,
            i: usize,
            j: usize,
            memo: &mut HashMap<(usize, usize), BTreeMap<usize, BigRational>>,
        ) -> BTreeMap<usize, BigRational> {
            if let Some(m) = memo.get(&(i, j)) {
                return m.clone();
            }
            let arm = st.len[i] + i - 1 - j;
            let leg = st.col[j] - i;
            let ext = if st.col[j] == j { st.len.get(j + 1).copied().unwrap_or(0) } else { 0 };
            let h = arm + leg + ext;
            let mut out = BTreeMap::new();
            if h == 0 {
                out.insert(i, BigRational::one());
            } else {
                let mut nexts: Vec<(usize, usize)> = (1..=arm).map(|d| (i, j + d)).collect();
                nexts.extend((1..=leg).map(|d| (i + d, j)));
                nexts.extend((0..ext).map(|d| (j + 1, j + 1 + d)));
                let w = BigRational::new(1.into(), (h as i64).into());
                for (a, b) in nexts {
                    for (r, p) in go(st, a, b, memo) {
                        *out.entry(r).or_insert_with(BigRational::zero) += p * &w;
                    }
                }
            }
            memo.insert((i, j), out.clone());
            out
        }
        let w = BigRational::new(1.into(), (cells.len() as i64).into());
        let mut tot = BTreeMap::new();
        for c in cells {
            for (r, p) in go(&st, c.row, c.col, &mut memo) {
                *tot.entry(r).or_insert_with(BigRational::zero) += p * &w;
            }
        }
        tot
    }

    #[test]
    fn walk_corner_law_matches_hook_ratios() {
        for parts in [vec![3, 1], vec![3, 2], vec![4, 3, 1], vec![5, 3, 2], vec![5, 4, 2, 1], vec![6, 4, 1], vec![7, 5, 4, 2]] {
            let e = sp(&parts);
            let g = shifted_hlf(&e);
            let law = exact_walk_corners(&e);
            for r in 0..parts.len() {
                let is_corner = r + 1 == parts.len() || parts[r + 1] + 1 < parts[r];
                let want = if is_corner {
                    let sub = sp(&remove_corner(&parts, r));
                    BigRational::new(shifted_hlf(&sub).into(), g.clone().into())
                } else {
                    BigRational::zero()
                };
                assert_eq!(law.get(&(r + 1)).cloned().unwrap_or_else(BigRational::zero), want, "{parts:?} row {}", r + 1);
            }
        }
        for k in 2..=6 {
            let e = shifted_staircase(k);
            let law = exact_walk_corners(&e);
            let total: BigRational = law.values().sum();
            assert!(total.is_one());
        }
    }

    #[test]
    fn single_tableau_shapes() {
        let mut rng = RandomSource::new(3);
        for parts in [vec![5], vec![2, 1], vec![1]] {
            let e = sp(&parts);
            let a = sample_shifted_syt(&e, &mut rng).unwrap();
            let b = sample_exact(&e, &mut rng).unwrap();
            assert_eq!(a, b);
            assert!(a.is_standard());
        }
        let t = sample_skew_staircase(2, 0, 0, &mut rng).unwrap();
        assert_eq!(t.rows(), &[vec![1]]);
    }

    #[test]
    fn determinism_and_streams() {
        let e = sp(&[6, 4, 3, 1]);
        let run = |src: &mut RandomSource| (0..20).map(|_| sample_shifted_syt(&e, src).unwrap()).collect::<Vec<_>>();
        assert_eq!(run(&mut RandomSource::new(11)), run(&mut RandomSource::new(11)));
        let base = RandomSource::new(11);
        assert_ne!(run(&mut base.split(0)), run(&mut base.split(1)));
        assert_eq!(run(&mut base.split(4)), run(&mut base.split(4)));
    }

    #[test]
    fn shifted_31_is_fair() {
        let e = sp(&[3, 1]);
        let mut rng = RandomSource::new(5);
        let mut counts: BTreeMap<Tableau, u64> = BTreeMap::new();
        let draws = 10_000u64;
        for _ in 0..draws {
            *counts.entry(sample_shifted_syt(&e, &mut rng).unwrap()).or_default() += 1;
        }
        assert_eq!(counts.len(), 2);
        let sigma = (draws as f64 * 0.25).sqrt();
        for &c in counts.values() {
            assert!((c as f64 - draws as f64 / 2.0).abs() < 3.0 * sigma);
        }
    }

    #[test]
    fn skew_staircase_pipeline_is_valid() {
        let mut rng = RandomSource::new(9);
        let shape = crate::shapes::staircase_minus_rectangle(6, 2, 2).unwrap();
        for _ in 0..200 {
            let t = sample_skew_staircase(6, 2, 2, &mut rng).unwrap();
            assert_eq!(t.shape(), &shape);
            assert!(t.is_standard());
            let u = crate::bijections::phi_map(&t).unwrap();
            assert_eq!(psi(&u, 6, 2, 2).unwrap(), t);
        }
        assert!(sample_skew_staircase(4, 2, 2, &mut rng).is_err());
    }

    #[test]
    fn skew_staircase_support() {
        let mut rng = RandomSource::new(1);
        let shape = crate::shapes::staircase_minus_rectangle(4, 1, 2).unwrap();
        let all: BTreeSet<Tableau> = enumerate_standard(&shape).into_iter().collect();
        let seen: BTreeSet<Tableau> = (0..400).map(|_| sample_skew_staircase(4, 1, 2, &mut rng).unwrap()).collect();
        assert_eq!(seen, all);
        assert_eq!(count_linear_extensions(&shape).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn chi_square_helper() {
        let (s, p) = chi_square_uniform(&[100, 100, 100, 100]);
        assert_eq!(s, 0.0);
        assert!((p - 1.0).abs() < 1e-12);
        let (_, p) = chi_square_uniform(&[1000, 0]);
        assert!(p < 1e-12);
    }

    #[test]
    fn fitted_exponent_of_power_law() {
        let rows: Vec<BenchmarkRow> =
            [10usize, 20, 40].iter().map(|&k| BenchmarkRow { k, a: 0, b: 0, median_secs: (k as f64).powi(3) * 1e-6 }).collect();
        assert!((fitted_exponent(&rows).unwrap() - 3.0).abs() < 1e-9);
        assert!(benchmark_scaling(&[5], 0, 1).unwrap().is_empty());
    }
}
