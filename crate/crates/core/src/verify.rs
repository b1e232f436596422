//! Exhaustive invariant suites at desk scale. Each check reports how many
//! cases it examined and the first failure, if any.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bijections::{crystal_route, mixed_route, phi_map, psi, stembridge_map};
use crate::counting::{
    count_linear_extensions, feit, gf_truncate, hlf, lr_orbit, main_identity, product_formula, schur_via_descents,
    shifted_hlf, GfKind,
};
use crate::error::{Error, Result};
use crate::insertion::{
    evacuation, minimal_increasing, mixed_insert, q_sw, rectify, rectify_shifted, rsk, rsk_inverse, superstandard,
    ws_insert, ws_inverse,
};
use crate::shapes::{
    cell_census, eta, partitions_inside, partitions_of, rectangle, shifted_staircase, staircase, strict_partitions_inside,
    subtract_reflect, trapezoid, Partition, SkewShape, StrictPartition,
};
use crate::tableaux::{
    complement, content_vectors, enumerate_marked, enumerate_set_valued, enumerate_standard, reverse, Bounds, IndexSet,
    Letter, MarkedTableau, SetKind, Tableau,
};
use crate::words::{
    all_permutations, hecke_expressions, hecke_product, phi, phi_inverse, phi_via_inversions, reduced_word_greedy,
    reduced_words, res, res_inverse, rewrite_class, rewrite_neighbors, w_skew_staircase, w_staircase, word_descents,
    word_product, FcEmbedding, Permutation, Rewrite, Word,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Tableaux,
    Words,
    Insertion,
    Bijections,
    Counting,
    Ktheory,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Tableaux, Suite::Words, Suite::Insertion, Suite::Bijections, Suite::Counting, Suite::Ktheory];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tableaux => "tableaux",
            Suite::Words => "words",
            Suite::Insertion => "insertion",
            Suite::Bijections => "bijections",
            Suite::Counting => "counting",
            Suite::Ktheory => "ktheory",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

/// Case counter that keeps the first failure and any notes.
#[derive(Default)]
struct Tally {
    cases: usize,
    failure: Option<String>,
    notes: Vec<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

fn run(suite: Suite, name: &str, f: impl FnOnce(&mut Tally) -> Result<()>) -> Check {
    let mut t = Tally::default();
    let res = f(&mut t);
    let (passed, detail) = match (res, t.failure) {
        (Err(e), _) => (false, format!("error: {e}")),
        (Ok(()), Some(msg)) => (false, msg),
        (Ok(()), None) => (true, t.notes.join("; ")),
    };
    Check { suite, name: name.to_string(), passed, cases: t.cases, detail }
}

pub fn run_suite(suite: Suite, max_n: usize) -> Vec<Check> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, max_n)).collect(),
        Suite::Tableaux => tableaux_suite(max_n),
        Suite::Words => words_suite(max_n),
        Suite::Insertion => insertion_suite(max_n),
        Suite::Bijections => bijections_suite(max_n),
        Suite::Counting => counting_suite(max_n),
        Suite::Ktheory => ktheory_suite(max_n),
    }
}

fn all_words(len: usize, k: u32) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (1..=k).map(move |x| [w.clone(), vec![x]].concat())).collect();
    }
    out
}

fn strict_of_size(m: usize) -> Vec<StrictPartition> {
    partitions_of(m).into_iter().filter(|p| p.is_strict()).map(|p| StrictPartition::new(p.parts().to_vec()).unwrap()).collect()
}

/// Skew shapes `λ/μ` with `μ ≠ ∅`, `|λ| ≤ max_outer` and at most `max_cells` cells.
fn skew_shapes(max_outer: usize, max_cells: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for m in 2..=max_outer {
        for lam in partitions_of(m) {
            for mu in partitions_inside(&lam) {
                if !mu.is_empty() && mu != lam && lam.size() - mu.size() <= max_cells {
                    out.push(SkewShape::skew(&lam, &mu).unwrap());
                }
            }
        }
    }
    out
}

/// `(ℓ, m)` with `ℓ+m < n`, `ℓ,m ≥ 1`, preceded by the empty rectangle.
fn rectangles(n: usize) -> Vec<(usize, usize)> {
    let mut v = vec![(0, 0)];
    for l in 1..n {
        for m in 1..n - l {
            v.push((l, m));
        }
    }
    v
}

fn rect(l: usize, m: usize) -> Partition {
    if l * m == 0 {
        Partition::empty()
    } else {
        rectangle(l, m)
    }
}

fn skew_staircase_shape(n: usize, mu: &Partition) -> SkewShape {
    SkewShape::skew(&staircase(n), mu).unwrap()
}

// ---------------------------------------------------------------- tableaux

fn brute_standard(shape: &SkewShape) -> BTreeSet<Tableau> {
    let cells = shape.cells();
    let mut out = BTreeSet::new();
    for p in all_permutations(cells.len()) {
        let mut pos = cells.clone();
        for (i, &c) in cells.iter().enumerate() {
            pos[p.at(i + 1) - 1] = c;
        }
        let t = Tableau::from_positions(shape.clone(), &pos).unwrap();
        if t.is_standard() {
            out.insert(t);
        }
    }
    out
}

fn blank_rows<T: Clone>(shape: &SkewShape, x: T) -> Vec<Vec<T>> {
    (1..=shape.num_rows()).map(|r| vec![x.clone(); shape.row_len(r)]).collect()
}

/// Every semistandard filling by `1..=nv`, by brute force.
fn brute_ssyt(shape: &SkewShape, nv: u32) -> BTreeSet<Tableau> {
    let cells = shape.cells();
    let mut out = BTreeSet::new();
    let total = (nv as usize).pow(cells.len() as u32);
    for code in 0..total {
        let mut rows = blank_rows(shape, 0u32);
        let mut x = code;
        for &c in &cells {
            rows[c.row - 1][shape.offset(c).unwrap()] = (x % nv as usize) as u32 + 1;
            x /= nv as usize;
        }
        if let Ok(t) = Tableau::new(shape.clone(), rows) {
            if t.is_semistandard() {
                out.insert(t);
            }
        }
    }
    out
}

/// Every marked shifted semistandard filling by `1'..nv`, by brute force.
fn brute_marked_ssyt(shape: &SkewShape, nv: u32) -> BTreeSet<MarkedTableau> {
    let cells = shape.cells();
    let alpha: Vec<Letter> = (1..=nv).flat_map(|v| [Letter::primed(v), Letter::plain(v)]).collect();
    let k = alpha.len();
    let mut out = BTreeSet::new();
    for code in 0..k.pow(cells.len() as u32) {
        let mut rows = blank_rows(shape, Letter::plain(1));
        let mut x = code;
        for &c in &cells {
            rows[c.row - 1][shape.offset(c).unwrap()] = alpha[x % k];
            x /= k;
        }
        if let Ok(t) = MarkedTableau::new(shape.clone(), rows) {
            if t.is_semistandard() {
                out.insert(t);
            }
        }
    }
    out
}

fn tableaux_suite(max_n: usize) -> Vec<Check> {
    let s = Suite::Tableaux;
    let small = (max_n + 1).min(6);
    let mid = (max_n + 3).min(8);
    let mut v = Vec::new();
    v.push(run(s, "standard enumerator matches brute force", |t| {
        let mut shapes: Vec<SkewShape> = (1..=small).flat_map(|m| partitions_of(m)).map(|p| SkewShape::straight(&p)).collect();
        shapes.extend((1..=small).flat_map(strict_of_size).map(|p| SkewShape::shifted(&p)));
        shapes.extend(skew_shapes(small + 1, small));
        for shape in shapes {
            let e = enumerate_standard(&shape);
            let set: BTreeSet<Tableau> = e.iter().cloned().collect();
            t.case(set.len() == e.len() && set == brute_standard(&shape), || format!("shape {shape}"));
        }
        Ok(())
    }));
    v.push(run(s, "marked enumerator is free in off-diagonal marks", |t| {
        for m in 1..=mid {
            for p in strict_of_size(m) {
                let shape = SkewShape::shifted(&p);
                let e = enumerate_marked(&shape);
                let set: BTreeSet<&MarkedTableau> = e.iter().collect();
                let plain = enumerate_standard(&shape).len();
                let ok = e.len() == plain << cell_census(&p).1 && set.len() == e.len() && e.iter().all(|u| u.is_standard());
                t.case(ok, || format!("shape {p:?}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "toggling marks is an involution complementing Des", |t| {
        for m in 1..=mid {
            for p in strict_of_size(m) {
                for u in enumerate_marked(&SkewShape::shifted(&p)) {
                    let w = u.toggle_marks();
                    let ok = w.toggle_marks() == u && w.descent_set() == complement(&u.descent_set(), m);
                    t.case(ok, || format!("{u}"));
                }
            }
        }
        Ok(())
    }));
    v.push(run(s, "fundamental expansion partitions semistandard fillings", |t| {
        let nv = 3;
        for m in 1..=small {
            for p in partitions_of(m) {
                let shape = SkewShape::straight(&p);
                let mut hits: Vec<Tableau> = Vec::new();
                for x in enumerate_standard(&shape) {
                    for i in content_vectors(&x.descent_set(), m, nv) {
                        hits.push(x.content_expand(&i)?);
                    }
                }
                let set: BTreeSet<Tableau> = hits.iter().cloned().collect();
                t.case(set.len() == hits.len() && set == brute_ssyt(&shape, nv), || format!("straight {p:?}"));
            }
            for p in strict_of_size(m) {
                let shape = SkewShape::shifted(&p);
                let mut hits: Vec<MarkedTableau> = Vec::new();
                for x in enumerate_marked(&shape) {
                    for i in content_vectors(&x.descent_set(), m, nv) {
                        hits.push(x.content_expand(&i)?);
                    }
                }
                let set: BTreeSet<MarkedTableau> = hits.iter().cloned().collect();
                t.case(set.len() == hits.len() && set == brute_marked_ssyt(&shape, nv), || format!("shifted {p:?}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "evacuation is an involution reversing Des", |t| {
        for m in 1..=mid {
            for p in partitions_of(m) {
                for x in enumerate_standard(&SkewShape::straight(&p)) {
                    let e = evacuation(&x)?;
                    let ok = e.is_standard() && evacuation(&e)? == x && e.descent_set() == reverse(&x.descent_set(), m);
                    t.case(ok, || format!("{x}"));
                }
            }
        }
        Ok(())
    }));
    v
}

// ---------------------------------------------------------------- words

/// Closure of `a` under commutation and braid moves.
fn coxeter_class(a: &[u32]) -> BTreeSet<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.to_vec());
    queue.push_back(a.to_vec());
    while let Some(b) = queue.pop_front() {
        let mut next = Vec::new();
        for i in 0..b.len().saturating_sub(1) {
            if b[i].abs_diff(b[i + 1]) >= 2 {
                let mut c = b.clone();
                c.swap(i, i + 1);
                next.push(c);
            }
            if i + 2 < b.len() && b[i] == b[i + 2] && b[i].abs_diff(b[i + 1]) == 1 {
                let mut c = b.clone();
                c[i] = b[i + 1];
                c[i + 1] = b[i];
                c[i + 2] = b[i + 1];
                next.push(c);
            }
        }
        for c in next {
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    seen.into_iter().collect()
}

fn words_suite(max_n: usize) -> Vec<Check> {
    let s = Suite::Words;
    let nmax = max_n.min(5);
    let mut v = Vec::new();
    v.push(run(s, "reduced words are connected by commutation and braid moves", |t| {
        for w in all_permutations(nmax) {
            let r: BTreeSet<Word> = reduced_words(&w).into_iter().collect();
            t.case(coxeter_class(&reduced_word_greedy(&w)) == r, || format!("w = {:?}", w.one_line()));
        }
        Ok(())
    }));
    v.push(run(s, "Grassmannian reduced words form one Knuth class", |t| {
        for w in all_permutations((max_n + 1).min(6)) {
            if w.is_grassmannian() && w.length() > 0 {
                let r: BTreeSet<Word> = reduced_words(&w).into_iter().collect();
                let a = r.iter().next().unwrap().clone();
                t.case(rewrite_class(&a, Rewrite::Knuth, a.len()) == r, || format!("w = {:?}", w.one_line()));
            }
        }
        Ok(())
    }));
    v.push(run(s, "staircase reduced words form one Knuth and one shifted Knuth class", |t| {
        for n in 2..=nmax {
            let w = w_staircase(n);
            let r: BTreeSet<Word> = reduced_words(&w).into_iter().collect();
            let a = r.iter().next().unwrap().clone();
            t.case(rewrite_class(&a, Rewrite::Knuth, a.len()) == r, || format!("Knuth, n = {n}"));
            t.case(rewrite_class(&a, Rewrite::ShiftedKnuth, a.len()) == r, || format!("shifted Knuth, n = {n}"));
            for b in &r {
                t.case(b.len() < 2 || b[0] % 2 == b[1] % 2, || format!("first letters of {b:?}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "skew staircase reduced words are closed under shifted Knuth moves", |t| {
        for n in 2..=nmax {
            for mu in partitions_inside(&staircase(n)) {
                let w = w_skew_staircase(n, &mu)?;
                let r: BTreeSet<Word> = reduced_words(&w).into_iter().collect();
                for a in &r {
                    let ok = rewrite_neighbors(a, Rewrite::ShiftedKnuth).iter().all(|b| r.contains(b));
                    t.case(ok, || format!("n = {n}, μ = {mu:?}, a = {a:?}"));
                }
            }
        }
        Ok(())
    }));
    v.push(run(s, "Φ is a Des-reversing bijection onto reduced words", |t| {
        for n in 2..=nmax {
            for mu in partitions_inside(&staircase(n)) {
                let shape = skew_staircase_shape(n, &mu);
                if shape.size() == 0 {
                    continue;
                }
                let emb = FcEmbedding::skew_staircase(n, &mu)?;
                let w = w_skew_staircase(n, &mu)?;
                let r: BTreeSet<Word> = reduced_words(&w).into_iter().collect();
                let mut images = BTreeSet::new();
                for x in enumerate_standard(&shape) {
                    let a = phi(&emb, &x)?;
                    let ok = r.contains(&a)
                        && word_descents(&a) == reverse(&x.descent_set(), a.len())
                        && phi_inverse(&emb, &a)? == x
                        && phi_via_inversions(&emb, &x, &w)? == a;
                    t.case(ok, || format!("n = {n}, μ = {mu:?}, T = {x}"));
                    images.insert(a);
                }
                t.case(images == r, || format!("image of Φ for n = {n}, μ = {mu:?}"));
            }
        }
        Ok(())
    }));
    v
}

// ---------------------------------------------------------------- insertion

fn insertion_suite(max_n: usize) -> Vec<Check> {
    let s = Suite::Insertion;
    let len = max_n.min(5);
    let nmax = max_n.min(5);
    let corpus: Vec<Word> = (1..=len).flat_map(|l| all_words(l, 4)).collect();
    let mut v = Vec::new();
    v.push(run(s, "RSK and Worley–Sagan insertion invert", |t| {
        for l in 1..=(max_n + 1).min(6) {
            for a in all_words(l, 4) {
                let (p, q) = rsk(&a);
                t.case(rsk_inverse(&p, &q)? == a, || format!("RSK on {a:?}"));
                let (p, q) = ws_insert(&a);
                t.case(ws_inverse(&p, &q)? == a, || format!("Worley–Sagan on {a:?}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "P_SW classes are shifted Knuth classes", |t| {
        for l in 1..=len {
            let mut classes: BTreeMap<Tableau, BTreeSet<Word>> = BTreeMap::new();
            for a in all_words(l, 4) {
                classes.entry(ws_insert(&a).0).or_default().insert(a);
            }
            for (p, class) in classes {
                let a = class.iter().next().unwrap();
                t.case(rewrite_class(a, Rewrite::ShiftedKnuth, l) == class, || format!("class of {p}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "Des(a) = Des(Q_SW(a))", |t| {
        for a in &corpus {
            t.case(word_descents(a) == q_sw(a).descent_set(), || format!("{a:?}"));
        }
        Ok(())
    }));
    v.push(run(s, "Q_SW of the negated word toggles marks", |t| {
        let mut distinct: Vec<Word> =
            corpus.iter().filter(|a| a.iter().collect::<BTreeSet<_>>().len() == a.len()).cloned().collect();
        distinct.extend(all_permutations(nmax).iter().map(|w| w.one_line().iter().map(|&x| x as u32).collect::<Word>()));
        for a in &distinct {
            let c = *a.iter().max().unwrap() + 1;
            let neg: Word = a.iter().map(|&x| c - x).collect();
            t.case(q_sw(&neg) == q_sw(a).toggle_marks(), || format!("{a:?}"));
        }
        t.note(format!("{} words with distinct letters; repeated letters break Des complementation", distinct.len()));
        Ok(())
    }));
    v.push(run(s, "P_SW of a staircase reduced word is minimal increasing", |t| {
        for n in 2..=nmax {
            let m = minimal_increasing(&shifted_staircase(n));
            for a in reduced_words(&w_staircase(n)) {
                t.case(ws_insert(&a).0 == m, || format!("{a:?}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "mixed insertion of w is Worley–Sagan insertion of w⁻¹ swapped", |t| {
        for w in all_permutations(nmax) {
            let word: Word = w.one_line().iter().map(|&x| x as u32).collect();
            let inv: Word = w.inverse().one_line().iter().map(|&x| x as u32).collect();
            let (pms, qms) = mixed_insert(&word)?;
            let (psw, qsw) = ws_insert(&inv);
            t.case(pms == qsw && qms == psw, || format!("w = {word:?}"));
        }
        Ok(())
    }));
    v.push(run(s, "Q_MS(w) is the shifted rectification of Q(w)", |t| {
        for w in all_permutations(nmax) {
            let word: Word = w.one_line().iter().map(|&x| x as u32).collect();
            let (_, qms) = mixed_insert(&word)?;
            t.case(qms == rectify_shifted(&rsk(&word).1)?, || format!("w = {word:?}"));
        }
        Ok(())
    }));
    v.push(run(s, "rectification does not depend on the slide order", |t| {
        for shape in skew_shapes((max_n + 2).min(7), 7) {
            if shape.inner_partition().size() > 3 {
                continue;
            }
            let orders = enumerate_standard(&SkewShape::straight(&shape.inner_partition()));
            for x in enumerate_standard(&shape) {
                let base = rectify(&x, None)?;
                let mut ok = base.is_standard() && base.shape().is_straight();
                for o in &orders {
                    ok &= rectify(&x, Some(o))? == base;
                }
                t.case(ok, || format!("{x}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "shifted rectification of S^δ is S^ϱ", |t| {
        for n in 2..=nmax + 1 {
            let sd = superstandard(&SkewShape::straight(&staircase(n)));
            let sr = superstandard(&SkewShape::shifted(&shifted_staircase(n)));
            t.case(rectify_shifted(&sd)? == sr, || format!("n = {n}"));
        }
        Ok(())
    }));
    v
}

// ---------------------------------------------------------------- bijections

/// Largest shape on which φ∘ψ is checked over all of `ShSYT′(η)`.
pub const PHI_PSI_MAX_CELLS: usize = 12;

fn bijections_suite(max_n: usize) -> Vec<Check> {
    let s = Suite::Bijections;
    let nmax = (max_n + 1).min(6);
    let nsmall = max_n.min(5);
    let mut v = Vec::new();
    v.push(run(s, "φ is a Des-reversing bijection with inverse ψ", |t| {
        for n in 2..=nmax {
            for (l, m) in rectangles(n) {
                let shape = skew_staircase_shape(n, &rect(l, m));
                let e = eta(n, l, m)?;
                let target = SkewShape::shifted(&e);
                let mut images = HashSet::new();
                for x in enumerate_standard(&shape) {
                    let u = phi_map(&x)?;
                    let ok = u.shape() == &target
                        && u.is_standard()
                        && u.descent_set() == reverse(&x.descent_set(), x.size())
                        && psi(&u, n, l, m)? == x;
                    t.case(ok, || format!("n = {n}, (ℓ,m) = ({l},{m}), T = {x}"));
                    images.insert(u);
                }
                let want = shifted_hlf(&e) << cell_census(&e).1;
                t.case(BigUint::from(images.len()) == want, || format!("image size for n = {n}, ({l},{m})"));
                if e.size() <= PHI_PSI_MAX_CELLS {
                    for u in enumerate_marked(&target) {
                        t.case(phi_map(&psi(&u, n, l, m)?)? == u, || format!("φ∘ψ at {u}"));
                    }
                }
            }
        }
        Ok(())
    }));
    v.push(run(s, "mixed-insertion and crystal routes agree with φ", |t| {
        for n in 2..=nsmall {
            for (l, m) in rectangles(n) {
                for x in enumerate_standard(&skew_staircase_shape(n, &rect(l, m))) {
                    let u = phi_map(&x)?;
                    t.case(mixed_route(&x)? == u, || format!("mixed route at {x}"));
                    t.case(crystal_route(&x)? == u, || format!("crystal route at {x}"));
                }
            }
        }
        Ok(())
    }));
    v.push(run(s, "conjugation map is a Des-preserving bijection", |t| {
        for n in 2..=nsmall {
            for mu in partitions_inside(&staircase(n)) {
                let shape = skew_staircase_shape(n, &mu);
                let target = skew_staircase_shape(n, &mu.conjugate());
                let mut images = HashSet::new();
                for x in enumerate_standard(&shape) {
                    let y = stembridge_map(&x)?;
                    t.case(y.shape() == &target && y.is_standard() && y.descent_set() == x.descent_set(), || {
                        format!("n = {n}, μ = {mu:?}, T = {x}")
                    });
                    images.insert(y);
                }
                t.case(images.len() == enumerate_standard(&target).len(), || format!("n = {n}, μ = {mu:?} not onto"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "|ShSYT(ϱ_n/τ)| = |ShSYT(ϱ_n − τ)|", |t| {
        for n in 2..=nmax {
            for (l, m) in rectangles(n).into_iter().skip(1) {
                let skew = SkewShape::shifted_skew(&shifted_staircase(n), &trapezoid(l, m))?;
                let a = count_linear_extensions(&skew)?;
                let b = count_linear_extensions(&SkewShape::shifted(&eta(n, l, m)?))?;
                t.case(a == b, || format!("n = {n}, ({l},{m}): {a} vs {b}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "reversed Des multiset (hence maj generating function) equals the marked one", |t| {
        for n in 2..=nmax {
            for (l, m) in rectangles(n) {
                let e = eta(n, l, m)?;
                if e.size() > PHI_PSI_MAX_CELLS + 3 {
                    continue;
                }
                let mut a: BTreeMap<IndexSet, usize> = BTreeMap::new();
                for x in enumerate_standard(&skew_staircase_shape(n, &rect(l, m))) {
                    *a.entry(reverse(&x.descent_set(), x.size())).or_default() += 1;
                }
                let mut b: BTreeMap<IndexSet, usize> = BTreeMap::new();
                for u in enumerate_marked(&SkewShape::shifted(&e)) {
                    *b.entry(u.descent_set()).or_default() += 1;
                }
                t.case(a == b, || format!("n = {n}, ({l},{m})"));
            }
        }
        Ok(())
    }));
    v
}

// ---------------------------------------------------------------- counting

/// Largest `δ_{a+b+2c}/(b^a)` checked against the three counting routes.
pub const PRODUCT_FORMULA_MAX_CELLS: usize = 12;

/// Triples `(a, b, c)` with `k = a+b+2c ≥ 2`, `a+b < k` when `ab > 0`, and
/// at most `max_cells` cells.
pub fn product_formula_triples(max_cells: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 2..=max_cells + 1 {
        for c in 0..=k / 2 {
            for a in 0..=k - 2 * c {
                let b = k - 2 * c - a;
                if a * b > 0 && c == 0 {
                    continue;
                }
                if k * (k - 1) / 2 - a * b <= max_cells {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

fn counting_suite(max_n: usize) -> Vec<Check> {
    let s = Suite::Counting;
    let nsmall = max_n.min(5);
    let mut v = Vec::new();
    v.push(run(s, "product formula = linear extensions = Feit determinant", |t| {
        for (a, b, c) in product_formula_triples(PRODUCT_FORMULA_MAX_CELLS) {
            let k = a + b + 2 * c;
            let pf = product_formula(a, b, c)?;
            let le = count_linear_extensions(&skew_staircase_shape(k, &rect(a, b)))?;
            let fe = feit(&staircase(k), &rect(a, b))?;
            t.case(pf == le && le == fe, || format!("({a},{b},{c}): {pf} / {le} / {fe}"));
        }
        Ok(())
    }));
    v.push(run(s, "f^{δ_k/(b^a)} = 2^N |ShSYT(η)| with N off-diagonal", |t| {
        let (mut printed_ok, mut total) = (0, 0);
        for k in 2..=(max_n + 1).min(6) {
            for (a, b) in rectangles(k) {
                let r = main_identity(k, a, b)?;
                t.case(r.holds, || format!("k = {k}, (a,b) = ({a},{b})"));
                total += 1;
                printed_ok += r.holds_printed as usize;
            }
        }
        t.note(format!("N = |η|−k+a also holds on {printed_ok} of {total}"));
        Ok(())
    }));
    v.push(run(s, "hook length formulas match linear extensions", |t| {
        for lam in partitions_inside(&staircase((max_n + 2).min(7))) {
            t.case(hlf(&lam) == count_linear_extensions(&SkewShape::straight(&lam))?, || format!("λ = {lam:?}"));
        }
        for e in strict_partitions_inside(&shifted_staircase((max_n + 2).min(7))) {
            t.case(shifted_hlf(&e) == count_linear_extensions(&SkewShape::shifted(&e))?, || format!("η = {e:?}"));
        }
        Ok(())
    }));
    v.push(run(s, "λ/μ and its shifted translate have equal counts", |t| {
        for shape in skew_shapes(9, 8) {
            let lam = shape.outer_partition();
            let mu = shape.inner_partition();
            let n = lam.len() + 1;
            let up = |p: &Partition| {
                StrictPartition::new((0..n - 1).map(|i| p.part(i) + n - 1 - i).collect()).unwrap()
            };
            let shifted = SkewShape::shifted_skew(&up(&lam), &up(&mu))?;
            t.case(count_linear_extensions(&shape)? == count_linear_extensions(&shifted)?, || format!("{shape}"));
        }
        Ok(())
    }));
    v.push(run(s, "reflected differences have the right size", |t| {
        let top = (max_n + 3).min(8);
        for n in strict_partitions_inside(&shifted_staircase(top)) {
            for mu in strict_partitions_inside(&n) {
                let r = subtract_reflect(&shifted_staircase(top), &mu);
                if let Ok(r) = r {
                    t.case(r.size() == shifted_staircase(top).size() - mu.size(), || format!("μ = {mu:?}"));
                }
            }
        }
        for k in 2..=top {
            for (a, b) in rectangles(k) {
                t.case(eta(k, a, b)?.size() == k * (k - 1) / 2 - a * b, || format!("η({k},{a},{b})"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "LR coefficients of δ_k are conjugation symmetric", |t| {
        for k in 2..=max_n.min(4) {
            let inside = partitions_inside(&staircase(k));
            let total = staircase(k).size();
            for mu in &inside {
                for nu in &inside {
                    if mu.size() + nu.size() == total {
                        let o = lr_orbit(k, mu, nu)?;
                        t.case(o.iter().all(|x| x == &o[0]), || format!("k = {k}, μ = {mu:?}, ν = {nu:?}: {o:?}"));
                    }
                }
            }
        }
        Ok(())
    }));
    v.push(run(s, "Schur expansions by Des and by reversed Des agree", |t| {
        let b = Bounds::default();
        for lam in partitions_inside(&staircase(nsmall)) {
            if lam.is_empty() {
                continue;
            }
            let shape = SkewShape::straight(&lam);
            let d = lam.size();
            let direct = gf_truncate(GfKind::Schur, &shape, 3, d, b)?;
            let f = schur_via_descents(&shape, 3, d, false);
            let r = schur_via_descents(&shape, 3, d, true);
            t.case(direct == f && f == r, || format!("λ = {lam:?}"));
        }
        Ok(())
    }));
    v.push(run(s, "s_{δ_n/μ} = s_{δ_n/μ′} in three variables", |t| {
        let b = Bounds::default();
        for n in 2..=nsmall {
            for mu in partitions_inside(&staircase(n)) {
                let a = skew_staircase_shape(n, &mu);
                let c = skew_staircase_shape(n, &mu.conjugate());
                let d = a.size();
                t.case(gf_truncate(GfKind::SchurSkew, &a, 3, d, b)? == gf_truncate(GfKind::SchurSkew, &c, 3, d, b)?, || {
                    format!("n = {n}, μ = {mu:?}")
                });
            }
        }
        Ok(())
    }));
    v.push(run(s, "s_{δ_n/(m^ℓ)} = P_η in three variables", |t| {
        let b = Bounds::default();
        for n in 2..=nsmall {
            for (l, m) in rectangles(n) {
                let a = skew_staircase_shape(n, &rect(l, m));
                let e = SkewShape::shifted(&eta(n, l, m)?);
                let d = a.size();
                t.case(gf_truncate(GfKind::SchurSkew, &a, 3, d, b)? == gf_truncate(GfKind::SchurP, &e, 3, d, b)?, || {
                    format!("n = {n}, ({l},{m})")
                });
            }
        }
        Ok(())
    }));
    v
}

// ---------------------------------------------------------------- ktheory

/// Degree bound for the Grothendieck truncations.
pub const K_MAX_DEG: usize = 8;

fn ktheory_suite(max_n: usize) -> Vec<Check> {
    let s = Suite::Ktheory;
    let nmax = max_n.min(4);
    let b = Bounds::default();
    let mut v = Vec::new();
    v.push(run(s, "toggling set-valued marks complements Des off equal-mark pairs", |t| {
        let mut literal = 0;
        for n in 2..=nmax {
            for (l, m) in rectangles(n) {
                let shape = SkewShape::shifted(&eta(n, l, m)?);
                for size in shape.size()..=(shape.size() + 2).min(8) {
                    for u in enumerate_set_valued(&shape, size, SetKind::MarkedShifted, b)? {
                        let w = u.toggle_marks();
                        t.case(w.toggle_marks() == u, || format!("involution at {u}"));
                        let (du, dw) = (u.descent_set(), w.descent_set());
                        let pos = u.locate();
                        for i in 1..size {
                            let (a, ma) = pos[i - 1];
                            let (c, mc) = pos[i];
                            if a == c && ma == mc {
                                literal += (du.contains(&i) == dw.contains(&i)) as usize;
                                continue;
                            }
                            t.case(du.contains(&i) != dw.contains(&i), || format!("i = {i} in {u}"));
                        }
                    }
                }
            }
        }
        t.note(format!("{literal} equal-mark pairs inside one cell keep their descent status"));
        Ok(())
    }));
    v.push(run(s, "res is a Des-reversing bijection onto Hecke words", |t| {
        for n in 2..=nmax {
            for mu in partitions_inside(&staircase(n)) {
                let shape = skew_staircase_shape(n, &mu);
                if shape.size() == 0 {
                    continue;
                }
                let emb = FcEmbedding::skew_staircase(n, &mu)?;
                let w = w_skew_staircase(n, &mu)?;
                let top = if n == 3 { 6 } else { shape.size() + 2 };
                for size in shape.size()..=top {
                    let mut images = BTreeSet::new();
                    for x in enumerate_set_valued(&shape, size, SetKind::Plain, b)? {
                        let a = res(&emb, &x)?;
                        let ok = hecke_product(&a, emb.n)? == w
                            && word_descents(&a) == reverse(&x.descent_set(), size)
                            && res_inverse(&emb, &a)? == x;
                        t.case(ok, || format!("n = {n}, μ = {mu:?}, T = {x}"));
                        images.insert(a);
                    }
                    let h: BTreeSet<Word> = hecke_expressions(&w, size, 14)?.into_iter().collect();
                    t.case(images == h, || format!("image of res, n = {n}, μ = {mu:?}, size {size}"));
                }
            }
        }
        Ok(())
    }));
    v.push(run(s, "Hecke words of Grassmannian permutations form one K-Knuth class", |t| {
        let w = w_staircase(3);
        let l = w.length();
        let h: BTreeSet<Word> = (l..=l + 2).flat_map(|k| hecke_expressions(&w, k, 14).unwrap()).collect();
        let a = reduced_word_greedy(&w);
        let class: BTreeSet<Word> = rewrite_class(&a, Rewrite::KKnuth, l + 3).into_iter().filter(|b| b.len() <= l + 2).collect();
        t.case(class == h, || format!("{} words in the class, {} Hecke words", class.len(), h.len()));
        for n in 2..=nmax {
            for mu in partitions_inside(&staircase(n)) {
                let w = w_skew_staircase(n, &mu)?;
                let l = w.length();
                if l < 2 {
                    continue;
                }
                for k in l..=l + 2 {
                    for a in hecke_expressions(&w, k, 14)? {
                        t.case(a[0] % 2 == 1 && a[1] % 2 == 1, || format!("first letters of {a:?}, n = {n}"));
                    }
                }
            }
        }
        Ok(())
    }));
    v.push(run(s, "G_{δ_n/μ} = G_{δ_n/μ′}", |t| {
        for n in 2..=nmax {
            for mu in partitions_inside(&staircase(n)) {
                let a = gf_truncate(GfKind::GrothendieckG, &skew_staircase_shape(n, &mu), 3, K_MAX_DEG, b)?;
                let c = gf_truncate(GfKind::GrothendieckG, &skew_staircase_shape(n, &mu.conjugate()), 3, K_MAX_DEG, b)?;
                t.case(a == c, || format!("n = {n}, μ = {mu:?}"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "G_{δ_n/(m^ℓ)} = GP_η", |t| {
        for n in 2..=nmax {
            for (l, m) in rectangles(n) {
                let a = gf_truncate(GfKind::GrothendieckG, &skew_staircase_shape(n, &rect(l, m)), 3, K_MAX_DEG, b)?;
                let c = gf_truncate(GfKind::GrothendieckGp, &SkewShape::shifted(&eta(n, l, m)?), 3, K_MAX_DEG, b)?;
                t.case(a == c, || format!("n = {n}, ({l},{m})"));
            }
        }
        Ok(())
    }));
    v.push(run(s, "set-valued counts agree size by size", |t| {
        for n in 2..=nmax {
            for (l, m) in rectangles(n) {
                let a = skew_staircase_shape(n, &rect(l, m));
                let c = SkewShape::shifted(&eta(n, l, m)?);
                for size in a.size()..=a.size() + 3 {
                    let x = enumerate_set_valued(&a, size, SetKind::Plain, b)?.len();
                    let y = enumerate_set_valued(&c, size, SetKind::MarkedShifted, b)?.len();
                    t.case(x == y, || format!("n = {n}, ({l},{m}), size {size}: {x} vs {y}"));
                }
            }
        }
        Ok(())
    }));
    v
}

/// Word product sanity used by callers that build words by hand.
pub fn is_reduced_word_of(a: &[u32], w: &Permutation) -> bool {
    a.len() == w.length() && word_product(a, w.size()).map(|p| &p == w).unwrap_or(false)
}
