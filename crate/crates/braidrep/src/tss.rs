//! Totally symmetric sets in symmetric groups and the labeled multicurve
//! counting model.
//!
//! A totally symmetric subset of a group commutes pairwise and realizes
//! every permutation of itself by conjugation. Witness search only needs
//! the adjacent transpositions of positions, since those generate the full
//! symmetric group on positions; a witness for an arbitrary permutation is
//! a product of the stored ones.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::{self, Permutation};

/// Largest degree for which exhaustive conjugator scans are attempted.
pub const SCAN_DEGREE_BOUND: usize = 9;

/// Cap on closure enumeration for generated subgroups of Σ_m.
pub const CLOSURE_BOUND: usize = 1_000_000;

/// Outcome of a total-symmetry check, carrying either one conjugator per
/// adjacent transposition of positions or the condition that failed.
#[derive(Debug, Clone, PartialEq)]
pub enum TotalSymmetryVerdict {
    TotallySymmetric { witnesses: Vec<Permutation> },
    NotCommuting { i: usize, j: usize },
    NoConjugator { transposition: usize },
}

impl TotalSymmetryVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, TotalSymmetryVerdict::TotallySymmetric { .. })
    }
}

/// Verdict for the image of a totally symmetric set under a homomorphism:
/// it collapses to a point or survives whole; anything else is a bug in
/// whatever produced the images.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageDichotomy {
    Singleton,
    FullCardinality,
    Violation,
}

#[inline]
fn rows_commute(a: &[u8], b: &[u8]) -> bool {
    (0..a.len()).all(|i| a[b[i] as usize] == b[a[i] as usize])
}

/// `h x h⁻¹ == y`, checked as `h ∘ x == y ∘ h` without allocating.
#[inline]
fn conjugates_to(h: &[u8], x: &[u8], y: &[u8]) -> bool {
    (0..h.len()).all(|i| h[x[i] as usize] == y[h[i] as usize])
}

fn to_row(p: &Permutation) -> Vec<u8> {
    p.zero_based_images().iter().map(|&x| x as u8).collect()
}

fn from_row(row: &[u8]) -> Permutation {
    Permutation::from_zero_based(row.iter().map(|&x| x as usize).collect())
        .expect("search rows are valid permutations")
}

/// One explicit solution of `c x c⁻¹ = y` for same-cycle-type rows, built
/// by matching up cycles of equal length.
fn conjugator_mapping(x: &[u8], y: &[u8]) -> Option<Vec<u8>> {
    let m = x.len();
    let cycles = |p: &[u8]| -> Vec<Vec<u8>> {
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut q = start;
            while !seen[q] {
                seen[q] = true;
                cycle.push(q as u8);
                q = p[q] as usize;
            }
            out.push(cycle);
        }
        out.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
        out
    };
    let cx = cycles(x);
    let cy = cycles(y);
    if cx.iter().map(Vec::len).collect::<Vec<_>>() != cy.iter().map(Vec::len).collect::<Vec<_>>() {
        return None;
    }
    let mut c = vec![0u8; m];
    for (a, b) in cx.iter().zip(cy.iter()) {
        for (pa, pb) in a.iter().zip(b.iter()) {
            c[*pa as usize] = *pb;
        }
    }
    debug_assert!(conjugates_to(&c, x, y));
    Some(c)
}

/// All elements of Σ_m commuting with `x`, in lexicographic order.
fn centralizer_rows(x: &[u8]) -> Vec<Vec<u8>> {
    let m = x.len();
    perm::all_images_flat(m)
        .chunks_exact(m)
        .filter(|h| rows_commute(h, x))
        .map(|h| h.to_vec())
        .collect()
}

/// Search for `h` with `h xs[i] h⁻¹ = xs[swap(i)]` for all `i`, where
/// `swap` exchanges positions `t` and `t+1`. Scans the coset
/// `c · Z(xs[t])`, which is exactly the set of elements carrying
/// `xs[t]` to `xs[t+1]`.
fn transposition_witness(xs: &[Vec<u8>], t: usize, centralizer: &[Vec<u8>]) -> Option<Vec<u8>> {
    let m = xs[0].len();
    let c = conjugator_mapping(&xs[t], &xs[t + 1])?;
    let mut h = vec![0u8; m];
    for z in centralizer {
        for i in 0..m {
            h[i] = c[z[i] as usize];
        }
        if !conjugates_to(&h, &xs[t + 1], &xs[t]) {
            continue;
        }
        let fixes_rest = (0..xs.len())
            .filter(|&j| j != t && j != t + 1)
            .all(|j| conjugates_to(&h, &xs[j], &xs[j]));
        if fixes_rest {
            return Some(h.clone());
        }
    }
    None
}

/// Decide total symmetry of an ordered list of permutations of one degree,
/// returning conjugator witnesses for the adjacent transpositions. Degrees
/// above [`SCAN_DEGREE_BOUND`] are refused rather than scanned.
pub fn is_totally_symmetric(elements: &[Permutation]) -> Result<TotalSymmetryVerdict> {
    if elements.len() <= 1 {
        return Ok(TotalSymmetryVerdict::TotallySymmetric {
            witnesses: Vec::new(),
        });
    }
    let m = elements[0].degree();
    for e in elements {
        if e.degree() != m {
            return Err(Error::DegreeMismatch(m, e.degree()));
        }
    }
    if m > SCAN_DEGREE_BOUND {
        return Err(Error::ScanDegreeTooLarge {
            degree: m,
            bound: SCAN_DEGREE_BOUND,
        });
    }
    let rows: Vec<Vec<u8>> = elements.iter().map(to_row).collect();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if !rows_commute(&rows[i], &rows[j]) {
                return Ok(TotalSymmetryVerdict::NotCommuting { i, j });
            }
        }
    }
    let mut witnesses = Vec::with_capacity(rows.len() - 1);
    for t in 0..rows.len() - 1 {
        let centralizer = centralizer_rows(&rows[t]);
        match transposition_witness(&rows, t, &centralizer) {
            Some(h) => witnesses.push(from_row(&h)),
            None => return Ok(TotalSymmetryVerdict::NoConjugator { transposition: t }),
        }
    }
    Ok(TotalSymmetryVerdict::TotallySymmetric { witnesses })
}

/// Classify the image of a totally symmetric set under a homomorphism.
/// Genuine homomorphisms never produce `Violation`; seeing it means the
/// caller's images were not computed from one.
pub fn check_image_dichotomy(images: &[Permutation]) -> Result<ImageDichotomy> {
    if images.len() <= 1 {
        return Ok(ImageDichotomy::Singleton);
    }
    let all_equal = images.windows(2).all(|w| w[0] == w[1]);
    if all_equal {
        return Ok(ImageDichotomy::Singleton);
    }
    let mut sorted = images.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != images.len() {
        return Ok(ImageDichotomy::Violation);
    }
    if is_totally_symmetric(images)?.holds() {
        Ok(ImageDichotomy::FullCardinality)
    } else {
        Ok(ImageDichotomy::Violation)
    }
}

/// Order of the subgroup generated by `gens`, by breadth-first closure.
/// Stops with an error if the closure exceeds `bound`.
pub fn closure_order(gens: &[Permutation], bound: usize) -> Result<usize> {
    let m = match gens.first() {
        Some(g) => g.degree(),
        None => return Ok(1),
    };
    if m > 16 {
        return Err(Error::Precondition(format!(
            "closure enumeration supports degree <= 16, got {m}"
        )));
    }
    for g in gens {
        if g.degree() != m {
            return Err(Error::DegreeMismatch(m, g.degree()));
        }
    }
    let encode = |row: &[u8]| -> u64 {
        row.iter()
            .enumerate()
            .fold(0u64, |acc, (i, &x)| acc | (x as u64) << (4 * i))
    };
    let rows: Vec<Vec<u8>> = gens.iter().map(to_row).collect();
    let identity: Vec<u8> = (0..m as u8).collect();
    let mut seen = std::collections::HashSet::new();
    seen.insert(encode(&identity));
    let mut queue = vec![identity];
    while let Some(u) = queue.pop() {
        for g in &rows {
            let v: Vec<u8> = (0..m).map(|i| u[g[i] as usize]).collect();
            if seen.insert(encode(&v)) {
                if seen.len() > bound {
                    return Err(Error::ClosureBound { bound });
                }
                queue.push(v);
            }
        }
    }
    Ok(seen.len())
}

/// True iff `|⟨X⟩| ≥ 2^(k-1)` for a totally symmetric set of size `k`,
/// with the subgroup order found by closure enumeration.
pub fn min_order_bound_check(elements: &[Permutation]) -> Result<bool> {
    let k = elements.len() as u32;
    let order = closure_order(elements, CLOSURE_BOUND)?;
    let lower = if k == 0 { 1u128 } else { 1u128 << (k - 1) };
    Ok(order as u128 >= lower)
}

/// The disjoint-curve capacity used on a closed genus-g surface. The
/// classifier below takes the capacity as a parameter so variants
/// (e.g. `3g - 3 + p`) run through the same engine.
pub fn surface_capacity(g: u64) -> u64 {
    3 * g + 3
}

/// `{ ℓ in 0..=k : C(k,ℓ) ≤ capacity }`, with exact big-integer binomials.
pub fn allowed_label_sizes(k: u64, capacity: u64) -> Vec<u64> {
    let cap = BigInt::from(capacity);
    let mut out = Vec::new();
    let mut binom = BigInt::one();
    for l in 0..=k {
        if binom <= cap {
            out.push(l);
        }
        if l < k {
            // C(k, l+1) = C(k, l) * (k - l) / (l + 1), exact at every step
            binom = binom * BigInt::from(k - l) / BigInt::from(l + 1);
        }
    }
    out
}

/// The component-type gate: whenever `k² - k > 6g + 6`, every label size
/// that fits in the capacity `3g + 3` lies in `{0, 1, k-1, k}`. This is a
/// theorem over all inputs, so a `false` return signals a transcription
/// bug rather than a mathematical fact.
pub fn prop31_holds(g: u64, k: u64) -> bool {
    let hypothesis = (k as i128) * (k as i128) - (k as i128) > 6 * (g as i128) + 6;
    if !hypothesis {
        return true;
    }
    allowed_label_sizes(k, surface_capacity(g))
        .into_iter()
        .all(|l| l == 0 || l == 1 || l + 1 == k || l == k)
}

/// Component type by label size: A for singletons, I for co-singletons,
/// C for full labels. When these overlap (k ≤ 2) the fuller type wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentType {
    A,
    I,
    C,
    Other,
}

pub fn component_type(label_size: usize, k: usize) -> ComponentType {
    if label_size == k {
        ComponentType::C
    } else if label_size + 1 == k {
        ComponentType::I
    } else if label_size == 1 {
        ComponentType::A
    } else {
        ComponentType::Other
    }
}

/// The counting shadow of a labeled multicurve: abstract components that
/// carry nonempty label subsets of `{1..k}`, under a disjointness budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledMulticurveModel {
    k: usize,
    components: Vec<std::collections::BTreeSet<usize>>,
    capacity: usize,
}

impl LabeledMulticurveModel {
    pub fn new(
        k: usize,
        components: Vec<std::collections::BTreeSet<usize>>,
        capacity: usize,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("label set must be nonempty".into()));
        }
        if components.len() > capacity {
            return Err(Error::Precondition(format!(
                "{} components exceed capacity {capacity}",
                components.len()
            )));
        }
        for c in &components {
            if c.is_empty() {
                return Err(Error::Precondition("component with empty label".into()));
            }
            if c.iter().any(|&x| x == 0 || x > k) {
                return Err(Error::Precondition(format!("label out of range 1..={k}")));
            }
        }
        Ok(LabeledMulticurveModel {
            k,
            components,
            capacity,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn components(&self) -> &[std::collections::BTreeSet<usize>] {
        &self.components
    }

    /// Apply a permutation of `{1..k}` to every label.
    pub fn relabel(&self, p: &Permutation) -> Result<Self> {
        if p.degree() != self.k {
            return Err(Error::DegreeMismatch(p.degree(), self.k));
        }
        let components = self
            .components
            .iter()
            .map(|c| c.iter().map(|&x| p.apply(x - 1) + 1).collect())
            .collect();
        Ok(LabeledMulticurveModel {
            k: self.k,
            components,
            capacity: self.capacity,
        })
    }

    fn label_multiset(&self) -> Vec<std::collections::BTreeSet<usize>> {
        let mut sorted = self.components.clone();
        sorted.sort();
        sorted
    }

    /// Model-level total symmetry: the label multiset is invariant under
    /// every permutation of `{1..k}`. Adjacent transpositions suffice.
    pub fn is_totally_symmetric(&self) -> bool {
        let base = self.label_multiset();
        for t in 1..self.k {
            let swap =
                Permutation::from_cycles(self.k, &[&[t, t + 1]]).expect("adjacent transposition");
            let relabeled = self.relabel(&swap).expect("degree matches");
            if relabeled.label_multiset() != base {
                return false;
            }
        }
        true
    }
}

/// Exhaustively list the totally symmetric subsets of Σ_m of size exactly
/// `k`, each returned as its elements in lexicographic order. Elements of
/// such a set of size ≥ 2 are conjugate, so the scan walks one conjugacy
/// class at a time, enumerates pairwise-commuting subsets, and then runs
/// the witness search.
pub fn scan_totally_symmetric_sets(m: usize, k: usize) -> Result<Vec<Vec<Permutation>>> {
    if m > SCAN_DEGREE_BOUND {
        return Err(Error::ScanDegreeTooLarge {
            degree: m,
            bound: SCAN_DEGREE_BOUND,
        });
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let flat = perm::all_images_flat(m);
    let all: Vec<&[u8]> = flat.chunks_exact(m).collect();
    if k == 1 {
        return Ok(all.iter().map(|r| vec![from_row(r)]).collect());
    }

    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (idx, row) in all.iter().enumerate() {
        classes
            .entry(perm::cycle_type_of_images(row))
            .or_default()
            .push(idx);
    }

    let mut found = Vec::new();
    for members in classes.values() {
        if members.len() < k {
            continue;
        }
        // Forward neighbors in the commuting graph of this class.
        let rows: Vec<&[u8]> = members.iter().map(|&i| all[i]).collect();
        let neighbors: Vec<Vec<usize>> = (0..rows.len())
            .map(|i| {
                (i + 1..rows.len())
                    .filter(|&j| rows_commute(rows[i], rows[j]))
                    .collect()
            })
            .collect();
        let mut centralizers: Vec<Option<Vec<Vec<u8>>>> = vec![None; rows.len()];

        let mut stack: Vec<Vec<usize>> = (0..rows.len()).map(|i| vec![i]).collect();
        stack.reverse();
        while let Some(tuple) = stack.pop() {
            if tuple.len() == k {
                let xs: Vec<Vec<u8>> = tuple.iter().map(|&i| rows[i].to_vec()).collect();
                let mut ok = true;
                for t in 0..k - 1 {
                    let root = tuple[t];
                    if centralizers[root].is_none() {
                        centralizers[root] = Some(centralizer_rows(rows[root]));
                    }
                    let z = centralizers[root].as_ref().unwrap();
                    if transposition_witness(&xs, t, z).is_none() {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    found.push(xs.iter().map(|r| from_row(r)).collect());
                }
                continue;
            }
            let last = *tuple.last().unwrap();
            for &next in neighbors[last].iter().rev() {
                if tuple[..tuple.len() - 1]
                    .iter()
                    .all(|&e| neighbors[e].binary_search(&next).is_ok())
                {
                    let mut extended = tuple.clone();
                    extended.push(next);
                    stack.push(extended);
                }
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(m: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(m, cycles).unwrap()
    }

    #[test]
    fn disjoint_transpositions_are_totally_symmetric() {
        let x = vec![p(4, &[&[1, 2]]), p(4, &[&[3, 4]])];
        match is_totally_symmetric(&x).unwrap() {
            TotalSymmetryVerdict::TotallySymmetric { witnesses } => {
                assert_eq!(witnesses.len(), 1);
                let h = &witnesses[0];
                assert_eq!(x[0].conjugate_by(h).unwrap(), x[1]);
                assert_eq!(x[1].conjugate_by(h).unwrap(), x[0]);
            }
            other => panic!("expected totally symmetric, got {other:?}"),
        }
    }

    #[test]
    fn noncommuting_pair_is_rejected() {
        let x = vec![p(3, &[&[1, 2]]), p(3, &[&[1, 3]])];
        assert_eq!(
            is_totally_symmetric(&x).unwrap(),
            TotalSymmetryVerdict::NotCommuting { i: 0, j: 1 }
        );
    }

    #[test]
    fn singleton_is_totally_symmetric() {
        let x = vec![p(5, &[&[1, 4, 2]])];
        assert!(is_totally_symmetric(&x).unwrap().holds());
    }

    #[test]
    fn commuting_set_without_conjugator_is_rejected() {
        // (1 2) and (1 2)(3 4) commute but lie in different classes, so no
        // conjugator can swap them.
        let x = vec![p(4, &[&[1, 2]]), p(4, &[&[1, 2], &[3, 4]])];
        assert_eq!(
            is_totally_symmetric(&x).unwrap(),
            TotalSymmetryVerdict::NoConjugator { transposition: 0 }
        );
    }

    #[test]
    fn degree_bound_is_enforced() {
        let x = vec![Permutation::identity(10), p(10, &[&[1, 2]])];
        assert!(matches!(
            is_totally_symmetric(&x),
            Err(Error::ScanDegreeTooLarge { degree: 10, .. })
        ));
    }

    #[test]
    fn image_dichotomy_cases() {
        let a = p(4, &[&[1, 2]]);
        let b = p(4, &[&[3, 4]]);
        assert_eq!(
            check_image_dichotomy(&[a.clone(), a.clone()]).unwrap(),
            ImageDichotomy::Singleton
        );
        assert_eq!(
            check_image_dichotomy(&[a.clone(), b]).unwrap(),
            ImageDichotomy::FullCardinality
        );
        // Distinct non-commuting images cannot arise from a homomorphism
        // applied to a totally symmetric set.
        assert_eq!(
            check_image_dichotomy(&[a, p(4, &[&[1, 3]])]).unwrap(),
            ImageDichotomy::Violation
        );
    }

    #[test]
    fn order_bound_examples() {
        let single = vec![p(4, &[&[1, 2, 3]])];
        assert!(min_order_bound_check(&single).unwrap());

        let klein = vec![p(4, &[&[1, 2]]), p(4, &[&[3, 4]])];
        assert_eq!(closure_order(&klein, CLOSURE_BOUND).unwrap(), 4);
        assert!(min_order_bound_check(&klein).unwrap());
    }

    #[test]
    fn closure_order_of_full_symmetric_group() {
        let gens = vec![p(5, &[&[1, 2]]), p(5, &[&[1, 2, 3, 4, 5]])];
        assert_eq!(closure_order(&gens, CLOSURE_BOUND).unwrap(), 120);
        assert!(matches!(
            closure_order(&gens, 50),
            Err(Error::ClosureBound { bound: 50 })
        ));
    }

    #[test]
    fn allowed_label_sizes_examples() {
        assert_eq!(allowed_label_sizes(13, 72), vec![0, 1, 12, 13]);
        assert_eq!(allowed_label_sizes(3, 3), vec![0, 1, 2, 3]);
        assert_eq!(allowed_label_sizes(4, 5), vec![0, 1, 3, 4]);
    }

    #[test]
    fn prop31_examples() {
        assert!(prop31_holds(23, 13));
        // Hypothesis fails for small k; the implication is vacuous.
        assert!(prop31_holds(100, 3));
    }

    #[test]
    fn prop31_gate_for_large_strand_counts() {
        // k = floor(n/2) satisfies the hypothesis whenever n >= 26 and
        // g <= n - 3.
        for n in 26u64..=80 {
            let k = n / 2;
            for g in 0..=n - 3 {
                assert!(k * k - k > 6 * g + 6, "gate fails at n={n}, g={g}");
                assert!(prop31_holds(g, k));
            }
        }
    }

    #[test]
    fn model_total_symmetry() {
        let full_orbit = LabeledMulticurveModel::new(
            3,
            vec![
                BTreeSet::from([1]),
                BTreeSet::from([2]),
                BTreeSet::from([3]),
            ],
            12,
        )
        .unwrap();
        assert!(full_orbit.is_totally_symmetric());

        let trivial_label =
            LabeledMulticurveModel::new(3, vec![BTreeSet::from([1, 2, 3])], 12).unwrap();
        assert!(trivial_label.is_totally_symmetric());

        let lopsided =
            LabeledMulticurveModel::new(3, vec![BTreeSet::from([1]), BTreeSet::from([2])], 12)
                .unwrap();
        assert!(!lopsided.is_totally_symmetric());
    }

    #[test]
    fn model_symmetry_survives_relabeling() {
        let model = LabeledMulticurveModel::new(
            4,
            vec![
                BTreeSet::from([1, 2]),
                BTreeSet::from([1, 3]),
                BTreeSet::from([1, 4]),
                BTreeSet::from([2, 3]),
                BTreeSet::from([2, 4]),
                BTreeSet::from([3, 4]),
            ],
            10,
        )
        .unwrap();
        assert!(model.is_totally_symmetric());
        let flat = crate::perm::all_images_flat(4);
        for chunk in flat.chunks_exact(4) {
            let q =
                Permutation::from_zero_based(chunk.iter().map(|&x| x as usize).collect()).unwrap();
            let relabeled = model.relabel(&q).unwrap();
            assert!(relabeled.is_totally_symmetric());
            assert_eq!(relabeled.label_multiset(), model.label_multiset());
        }
    }

    #[test]
    fn capacity_is_enforced() {
        let err = LabeledMulticurveModel::new(2, vec![BTreeSet::from([1]), BTreeSet::from([2])], 1);
        assert!(err.is_err());
    }

    #[test]
    fn component_type_classification() {
        assert_eq!(component_type(1, 5), ComponentType::A);
        assert_eq!(component_type(4, 5), ComponentType::I);
        assert_eq!(component_type(5, 5), ComponentType::C);
        assert_eq!(component_type(3, 7), ComponentType::Other);
        assert_eq!(component_type(1, 1), ComponentType::C);
    }

    #[test]
    fn scan_finds_disjoint_transposition_pairs() {
        let sets = scan_totally_symmetric_sets(4, 2).unwrap();
        let mut klein = vec![p(4, &[&[1, 2]]), p(4, &[&[3, 4]])];
        klein.sort();
        assert!(sets.contains(&klein));
        for set in &sets {
            assert!(is_totally_symmetric(set).unwrap().holds());
        }
    }

    #[test]
    fn scanned_sets_satisfy_order_bound_small() {
        for m in 2..=5 {
            for k in 2..=3 {
                for set in scan_totally_symmetric_sets(m, k).unwrap() {
                    assert!(min_order_bound_check(&set).unwrap());
                }
            }
        }
    }

    #[test]
    fn scanned_sets_satisfy_order_bound_degree_seven() {
        // Every totally symmetric set of periodic elements found in Σ_m,
        // m <= 7, k <= 4, generates a group of order at least 2^(k-1).
        for m in 6..=7 {
            for k in 2..=4 {
                for set in scan_totally_symmetric_sets(m, k).unwrap() {
                    assert!(
                        min_order_bound_check(&set).unwrap(),
                        "order bound fails in degree {m} at size {k}"
                    );
                }
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn allowed_sizes_are_symmetric(k in 1u64..40, capacity in 0u64..10_000) {
                let allowed = allowed_label_sizes(k, capacity);
                for &l in &allowed {
                    prop_assert!(allowed.contains(&(k - l)));
                }
            }

            #[test]
            fn prop31_never_fails(g in 0u64..80, k in 1u64..50) {
                prop_assert!(prop31_holds(g, k));
            }
        }
    }
}
