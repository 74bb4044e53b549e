//! Exhaustive enumeration of homomorphisms `B_n → Σ_m` up to conjugacy.
//!
//! A homomorphism is a tuple of generator images satisfying the braid
//! relation on adjacent pairs and commutation on distant ones. The braid
//! relation makes adjacent images conjugate, so all images share one cycle
//! type; the search fixes the first image to the canonical permutation of
//! each type and backtracks over the rest, pruning by class membership and
//! the relations involving earlier positions. Completed tuples with equal
//! first image are conjugate exactly when related by the centralizer of
//! that image, so orbits are extracted by peeling centralizer orbits off
//! the tuple set, lexicographically smallest representative first.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::{self, Permutation};

/// Parameter gate for the default search: anything beyond requires an
/// explicit override, since the space grows super-exponentially.
pub const DEFAULT_MAX_STRANDS: usize = 8;
pub const DEFAULT_MAX_DEGREE: usize = 10;

/// Resource controls for a search run.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Wall-clock budget; exceeding it aborts with the completed fraction.
    pub budget: Option<Duration>,
    /// Lift the `(n, m)` parameter gate.
    pub allow_large: bool,
    /// Worker threads for the class-level split; results are identical
    /// for any worker count.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: None,
            allow_large: false,
            workers: 1,
        }
    }
}

/// A homomorphism `B_n → Σ_m` given by its generator images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SymHomomorphism {
    n: usize,
    m: usize,
    gen_images: Vec<Permutation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HomKind {
    Cyclic,
    Standard,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomClassification {
    pub kind: HomKind,
    pub transitive: bool,
}

impl SymHomomorphism {
    /// Validating constructor; the relation recheck runs through
    /// [`Permutation::compose`], independent of the search internals.
    pub fn new(n: usize, m: usize, gen_images: Vec<Permutation>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("need n >= 2, got {n}")));
        }
        if gen_images.len() != n - 1 {
            return Err(Error::Precondition(format!(
                "expected {} generator images, got {}",
                n - 1,
                gen_images.len()
            )));
        }
        for s in &gen_images {
            if s.degree() != m {
                return Err(Error::DegreeMismatch(m, s.degree()));
            }
        }
        for w in gen_images.windows(2) {
            let aba = w[0].compose(&w[1])?.compose(&w[0])?;
            let bab = w[1].compose(&w[0])?.compose(&w[1])?;
            if aba != bab {
                return Err(Error::Precondition("braid relation violated".into()));
            }
        }
        for i in 0..gen_images.len() {
            for j in i + 2..gen_images.len() {
                if !gen_images[i].commutes_with(&gen_images[j])? {
                    return Err(Error::Precondition("commutation violated".into()));
                }
            }
        }
        let ct = gen_images[0].cycle_type();
        if gen_images.iter().any(|s| s.cycle_type() != ct) {
            return Err(Error::Precondition(
                "generator images must share one cycle type".into(),
            ));
        }
        Ok(SymHomomorphism { n, m, gen_images })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn gen_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    /// Image of a braid word: letters act by composition, inverses by the
    /// inverse permutation.
    pub fn evaluate(&self, word: &BraidWord) -> Result<Permutation> {
        if word.strands() != self.n {
            return Err(Error::Precondition(format!(
                "word has {} strands, homomorphism expects {}",
                word.strands(),
                self.n
            )));
        }
        let mut acc = Permutation::identity(self.m);
        for &letter in word.letters() {
            let s = &self.gen_images[letter.unsigned_abs() as usize - 1];
            let factor = if letter > 0 { s.clone() } else { s.inverse() };
            acc = acc.compose(&factor)?;
        }
        Ok(acc)
    }

    /// Cyclic means all generator images coincide (the generators are
    /// conjugate and generate, so equal images force an abelian, hence
    /// cyclic, image). Standard means `m == n` and some relabeling of
    /// points turns the images into the adjacent transpositions.
    pub fn classify(&self) -> HomClassification {
        let transitive = perm::is_transitive(&self.gen_images).unwrap_or(false);
        let cyclic = self.gen_images.windows(2).all(|w| w[0] == w[1]);
        let kind = if cyclic {
            HomKind::Cyclic
        } else if self.m == self.n && self.is_standard_shape() {
            HomKind::Standard
        } else {
            HomKind::Other
        };
        HomClassification { kind, transitive }
    }

    /// Reconstruct the point path `p_1, …, p_n` with `s_i = (p_i, p_{i+1})`,
    /// if it exists.
    fn is_standard_shape(&self) -> bool {
        let supports: Vec<Vec<usize>> = self
            .gen_images
            .iter()
            .map(|s| {
                (0..s.degree())
                    .filter(|&p| s.apply(p) != p)
                    .collect::<Vec<_>>()
            })
            .collect();
        if supports.iter().any(|sup| sup.len() != 2) {
            return false;
        }
        let n = self.n;
        if n == 2 {
            return self.m == 2;
        }
        let first = &supports[0];
        let second = &supports[1];
        let shared: Vec<usize> = first
            .iter()
            .copied()
            .filter(|p| second.contains(p))
            .collect();
        if shared.len() != 1 {
            return false;
        }
        let mut path = Vec::with_capacity(n);
        path.push(if first[0] == shared[0] {
            first[1]
        } else {
            first[0]
        });
        path.push(shared[0]);
        for i in 1..n - 1 {
            let prev = path[i];
            let sup = &supports[i];
            if !sup.contains(&prev) {
                return false;
            }
            path.push(if sup[0] == prev { sup[1] } else { sup[0] });
        }
        let mut sorted = path.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == n && n == self.m
    }
}

#[inline]
fn rows_braid(a: &[u8], b: &[u8]) -> bool {
    (0..a.len()).all(|i| a[b[a[i] as usize] as usize] == b[a[b[i] as usize] as usize])
}

#[inline]
fn rows_commute(a: &[u8], b: &[u8]) -> bool {
    (0..a.len()).all(|i| a[b[i] as usize] == b[a[i] as usize])
}

/// `h s h⁻¹` as image rows: `out[h[i]] = h[s[i]]`.
fn conjugate_row(s: &[u8], h: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; s.len()];
    for i in 0..s.len() {
        out[h[i] as usize] = h[s[i] as usize];
    }
    out
}

struct DeadlineGuard {
    deadline: Option<Instant>,
    classes_done: AtomicUsize,
    classes_total: usize,
}

impl DeadlineGuard {
    fn check(&self) -> Result<()> {
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                let done = self.classes_done.load(Ordering::Relaxed);
                return Err(Error::BudgetExceeded {
                    completed_fraction: done as f64 / self.classes_total.max(1) as f64,
                });
            }
        }
        Ok(())
    }
}

/// All complete relation-satisfying tuples for one cycle-type class, with
/// the first image fixed to the canonical class representative, reduced to
/// lexicographically least orbit representatives under the centralizer.
fn search_class(
    n: usize,
    class_rows: &[Vec<u8>],
    canonical: &[u8],
    centralizer: &[Vec<u8>],
    guard: &DeadlineGuard,
) -> Result<Vec<Vec<Vec<u8>>>> {
    let slots = n - 1;
    let mut complete: Vec<Vec<Vec<u8>>> = Vec::new();
    // Iterative DFS over partial tuples.
    let mut stack: Vec<Vec<Vec<u8>>> = vec![vec![canonical.to_vec()]];
    let mut nodes_since_check = 0usize;
    while let Some(partial) = stack.pop() {
        nodes_since_check += 1;
        if nodes_since_check >= 512 {
            nodes_since_check = 0;
            guard.check()?;
        }
        if partial.len() == slots {
            complete.push(partial);
            continue;
        }
        let prev = &partial[partial.len() - 1];
        for cand in class_rows {
            if !rows_braid(prev, cand) {
                continue;
            }
            if partial[..partial.len() - 1]
                .iter()
                .all(|earlier| rows_commute(earlier, cand))
            {
                let mut ext = partial.clone();
                ext.push(cand.clone());
                stack.push(ext);
            }
        }
    }

    // Peel centralizer orbits: the smallest remaining tuple is the
    // canonical representative of its orbit.
    complete.sort();
    complete.dedup();
    let mut reps = Vec::new();
    let mut removed = vec![false; complete.len()];
    for idx in 0..complete.len() {
        if removed[idx] {
            continue;
        }
        guard.check()?;
        let rep = complete[idx].clone();
        for h in centralizer {
            let conj: Vec<Vec<u8>> = rep.iter().map(|s| conjugate_row(s, h)).collect();
            if let Ok(pos) = complete.binary_search(&conj) {
                removed[pos] = true;
            }
        }
        reps.push(rep);
    }
    Ok(reps)
}

/// One representative per conjugacy orbit of homomorphisms `B_n → Σ_m`,
/// sorted by generator image tuples. The list is complete for the given
/// parameters unless the budget aborts the run.
pub fn enumerate_homs(n: usize, m: usize, options: &SearchOptions) -> Result<Vec<SymHomomorphism>> {
    if n < 3 || m < 1 {
        return Err(Error::Precondition(format!(
            "enumeration needs n >= 3 and m >= 1, got ({n}, {m})"
        )));
    }
    if (n > DEFAULT_MAX_STRANDS || m > DEFAULT_MAX_DEGREE) && !options.allow_large {
        return Err(Error::SearchGate { n, m });
    }
    if m > 12 {
        // The full Σ_m table would not fit in memory; fail cleanly even
        // under the override flag.
        return Err(Error::Precondition(format!(
            "degree {m} is beyond full enumeration of the symmetric group (max 12)"
        )));
    }

    let flat = perm::all_images_flat(m);
    let mut classes: BTreeMap<Vec<usize>, Vec<Vec<u8>>> = BTreeMap::new();
    for row in flat.chunks_exact(m) {
        classes
            .entry(perm::cycle_type_of_images(row))
            .or_default()
            .push(row.to_vec());
    }

    let guard = DeadlineGuard {
        deadline: options.budget.map(|b| Instant::now() + b),
        classes_done: AtomicUsize::new(0),
        classes_total: classes.len(),
    };

    let tasks: Vec<(&Vec<usize>, &Vec<Vec<u8>>)> = classes.iter().collect();
    let run_one =
        |(cycle_type, members): &(&Vec<usize>, &Vec<Vec<u8>>)| -> Result<Vec<Vec<Vec<u8>>>> {
            let canonical_perm = perm::canonical_of_cycle_type(cycle_type, m)?;
            let canonical: Vec<u8> = canonical_perm
                .zero_based_images()
                .iter()
                .map(|&x| x as u8)
                .collect();
            let centralizer: Vec<Vec<u8>> = flat
                .chunks_exact(m)
                .filter(|h| rows_commute(h, &canonical))
                .map(|h| h.to_vec())
                .collect();
            let reps = search_class(n, members, &canonical, &centralizer, &guard)?;
            guard.classes_done.fetch_add(1, Ordering::Relaxed);
            Ok(reps)
        };

    let per_class: Vec<Vec<Vec<Vec<u8>>>> = if options.workers > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.workers)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| tasks.par_iter().map(run_one).collect::<Result<Vec<_>>>())?
    } else {
        tasks.iter().map(run_one).collect::<Result<Vec<_>>>()?
    };

    let mut homs: Vec<SymHomomorphism> = per_class
        .into_iter()
        .flatten()
        .map(|tuple| {
            let gens = tuple
                .iter()
                .map(|row| Permutation::from_zero_based(row.iter().map(|&x| x as usize).collect()))
                .collect::<Result<Vec<_>>>()?;
            SymHomomorphism::new(n, m, gens)
        })
        .collect::<Result<Vec<_>>>()?;
    homs.sort();
    Ok(homs)
}

/// Outcome of a rigidity sweep over the enumerated orbits.
#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    pub n: usize,
    pub m: usize,
    pub orbit_count: usize,
    pub transitive_count: usize,
    /// True when every orbit in scope has the kind the statement demands.
    pub holds: bool,
    pub counterexample: Option<SymHomomorphism>,
    pub complete: bool,
}

/// Every transitive homomorphism in the range `6 < n < m < 2n` is cyclic.
pub fn verify_lin_a(n: usize, m: usize, options: &SearchOptions) -> Result<RigidityReport> {
    if !(6 < n && n < m && m < 2 * n) {
        return Err(Error::Precondition(format!(
            "range requires 6 < n < m < 2n, got ({n}, {m})"
        )));
    }
    let homs = enumerate_homs(n, m, options)?;
    let mut transitive_count = 0;
    let mut counterexample = None;
    for h in &homs {
        let c = h.classify();
        if c.transitive {
            transitive_count += 1;
            if c.kind != HomKind::Cyclic && counterexample.is_none() {
                counterexample = Some(h.clone());
            }
        }
    }
    Ok(RigidityReport {
        n,
        m,
        orbit_count: homs.len(),
        transitive_count,
        holds: counterexample.is_none(),
        counterexample,
        complete: true,
    })
}

/// Every transitive homomorphism `B_n → Σ_n` with `n ≥ 5` is cyclic or
/// standard.
pub fn verify_artin(n: usize, options: &SearchOptions) -> Result<RigidityReport> {
    if n < 5 {
        return Err(Error::Precondition(format!(
            "rigidity statement requires n >= 5, got {n}"
        )));
    }
    let homs = enumerate_homs(n, n, options)?;
    let mut transitive_count = 0;
    let mut counterexample = None;
    for h in &homs {
        let c = h.classify();
        if c.transitive {
            transitive_count += 1;
            if c.kind == HomKind::Other && counterexample.is_none() {
                counterexample = Some(h.clone());
            }
        }
    }
    Ok(RigidityReport {
        n,
        m: n,
        orbit_count: homs.len(),
        transitive_count,
        holds: counterexample.is_none(),
        counterexample,
        complete: true,
    })
}

/// For targets smaller than the strand count every homomorphism
/// (transitive or not) is cyclic.
pub fn verify_all_cyclic(n: usize, m: usize, options: &SearchOptions) -> Result<RigidityReport> {
    if m >= n {
        return Err(Error::Precondition(format!(
            "statement requires m < n, got ({n}, {m})"
        )));
    }
    let homs = enumerate_homs(n, m, options)?;
    let mut counterexample = None;
    let mut transitive_count = 0;
    for h in &homs {
        let c = h.classify();
        if c.transitive {
            transitive_count += 1;
        }
        if c.kind != HomKind::Cyclic && counterexample.is_none() {
            counterexample = Some(h.clone());
        }
    }
    Ok(RigidityReport {
        n,
        m,
        orbit_count: homs.len(),
        transitive_count,
        holds: counterexample.is_none(),
        counterexample,
        complete: true,
    })
}
