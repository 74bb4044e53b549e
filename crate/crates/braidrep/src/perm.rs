//! Exact permutation arithmetic on `{1..m}`.
//!
//! Points are 1-based in the external JSON encoding (an array of 1-based
//! images) and 0-based in storage. Permutations are compared by their image
//! arrays, never by how they were built.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection on `{1..m}` stored as 0-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Identity on `m` points. Degree must be at least 1.
    pub fn identity(m: usize) -> Self {
        assert!(m >= 1, "degree must be at least 1");
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// Build from 0-based images, validating bijectivity.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    x + 1,
                    m
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image {} repeated",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from 1-based images (the JSON encoding).
    pub fn from_one_based(images: Vec<usize>) -> Result<Self> {
        let shifted: Vec<usize> = images
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("images are 1-based; got 0".into()))
            })
            .collect::<Result<_>>()?;
        Self::from_zero_based(shifted)
    }

    /// Build from disjoint cycles given with 1-based points, e.g.
    /// `from_cycles(4, &[&[1, 2], &[3, 4]])` for `(1 2)(3 4)`.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut touched = vec![false; m];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let a = cycle[window];
                let b = cycle[(window + 1) % cycle.len()];
                if a == 0 || a > m || b == 0 || b > m {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point out of range for degree {m}"
                    )));
                }
                if touched[a - 1] {
                    return Err(Error::InvalidPermutation("cycles are not disjoint".into()));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Self::from_zero_based(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn zero_based_images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = (0..self.degree())
            .map(|i| self.images[other.images[i]])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Permutation) -> Result<Permutation> {
        if self.degree() != h.degree() {
            return Err(Error::DegreeMismatch(self.degree(), h.degree()));
        }
        let hinv = h.inverse();
        let mut images = vec![0; self.degree()];
        for i in 0..self.degree() {
            images[i] = h.images[self.images[hinv.images[i]]];
        }
        Ok(Permutation { images })
    }

    /// Cycle lengths sorted descending; they sum to the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut lengths = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p];
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Least `e > 0` with `self^e = identity`, computed by iterated
    /// composition (not via the cycle type, so the lcm formula can be
    /// tested against this independently).
    pub fn order(&self) -> u64 {
        let id = Permutation::identity(self.degree());
        let mut power = self.clone();
        let mut e = 1u64;
        while power != id {
            power = power.compose(self).expect("same degree");
            e += 1;
        }
        e
    }

    pub fn commutes_with(&self, other: &Permutation) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(
            (0..self.degree())
                .all(|i| self.images[other.images[i]] == other.images[self.images[i]]),
        )
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; fixed points omitted, identity
    /// printed as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut wrote = false;
        for start in 0..m {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based_images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_based(images).map_err(D::Error::custom)
    }
}

/// True iff the group generated by `gens` has a single orbit on `{1..m}`,
/// by BFS over generator images. The empty set leaves every point fixed,
/// so it is transitive only on one point.
pub fn is_transitive_on(m: usize, gens: &[Permutation]) -> Result<bool> {
    for g in gens {
        if g.degree() != m {
            return Err(Error::DegreeMismatch(m, g.degree()));
        }
    }
    if gens.is_empty() {
        return Ok(m == 1);
    }
    let mut reached = vec![false; m];
    let mut stack = vec![0usize];
    reached[0] = true;
    let mut count = 1;
    while let Some(p) = stack.pop() {
        for g in gens {
            for q in [g.apply(p), g.inverse().apply(p)] {
                if !reached[q] {
                    reached[q] = true;
                    count += 1;
                    stack.push(q);
                }
            }
        }
    }
    Ok(count == m)
}

/// [`is_transitive_on`] with the degree read off the first generator.
pub fn is_transitive(gens: &[Permutation]) -> Result<bool> {
    match gens.first() {
        Some(g) => is_transitive_on(g.degree(), gens),
        None => Err(Error::Precondition(
            "degree is ambiguous for an empty generator set; use is_transitive_on".into(),
        )),
    }
}

/// The canonical permutation of a given cycle type: cycles laid out on
/// consecutive points, longest first. `cycle_type` must sum to `m`.
pub fn canonical_of_cycle_type(cycle_type: &[usize], m: usize) -> Result<Permutation> {
    if cycle_type.iter().sum::<usize>() != m {
        return Err(Error::InvalidPermutation(format!(
            "cycle type does not sum to degree {m}"
        )));
    }
    let mut sorted = cycle_type.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut images: Vec<usize> = (0..m).collect();
    let mut base = 0;
    for &len in &sorted {
        if len == 0 {
            return Err(Error::InvalidPermutation("zero-length cycle".into()));
        }
        for j in 0..len {
            images[base + j] = base + (j + 1) % len;
        }
        base += len;
    }
    Permutation::from_zero_based(images)
}

/// All of Σ_m as 0-based image rows concatenated into one flat buffer,
/// in lexicographic order. Iterate with `.chunks_exact(m)`.
pub(crate) fn all_images_flat(m: usize) -> Vec<u8> {
    assert!(
        (1..=12).contains(&m),
        "degree out of range for full enumeration"
    );
    let mut current: Vec<u8> = (0..m as u8).collect();
    let mut out = Vec::new();
    loop {
        out.extend_from_slice(&current);
        if !next_lex(&mut current) {
            break;
        }
    }
    out
}

/// Advance to the next permutation in lexicographic order; false at the last.
fn next_lex(slice: &mut [u8]) -> bool {
    let n = slice.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && slice[i - 1] >= slice[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while slice[j] <= slice[i - 1] {
        j -= 1;
    }
    slice.swap(i - 1, j);
    slice[i..].reverse();
    true
}

/// Cycle type of a 0-based image row, sorted descending.
pub(crate) fn cycle_type_of_images(images: &[u8]) -> Vec<usize> {
    let m = images.len();
    let mut seen = vec![false; m];
    let mut lengths = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            len += 1;
            p = images[p] as usize;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(m: usize) -> Vec<Permutation> {
        all_images_flat(m)
            .chunks_exact(m)
            .map(|c| Permutation::from_zero_based(c.iter().map(|&x| x as usize).collect()).unwrap())
            .collect()
    }

    #[test]
    fn compose_identity_is_noop() {
        let p = Permutation::from_cycles(4, &[&[1, 3, 2]]).unwrap();
        let id = Permutation::identity(4);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
    }

    #[test]
    fn compose_involution() {
        let t = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
        assert_eq!(t.compose(&t).unwrap(), Permutation::identity(2));
    }

    #[test]
    fn compose_transpositions_gives_three_cycle() {
        // p = (1 2), q = (2 3); r(i) = p(q(i)) evaluated point by point:
        // 1 -> q 1 -> p 2, 2 -> q 3 -> p 3, 3 -> q 2 -> p 1.
        let p = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let q = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        let r = p.compose(&q).unwrap();
        assert_eq!(r.one_based_images(), vec![2, 3, 1]);
        for i in 0..3 {
            assert_eq!(r.apply(i), p.apply(q.apply(i)));
        }
    }

    #[test]
    fn compose_degree_mismatch_errors() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(p.compose(&q), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn conjugate_by_identity_is_noop() {
        let p = Permutation::from_cycles(5, &[&[1, 4, 5]]).unwrap();
        assert_eq!(p.conjugate_by(&Permutation::identity(5)).unwrap(), p);
    }

    #[test]
    fn conjugate_transposition() {
        // h (1 2) h⁻¹ with h = (2 3): pointwise evaluation gives (1 3).
        let p = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let h = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        let expected = Permutation::from_cycles(3, &[&[1, 3]]).unwrap();
        assert_eq!(p.conjugate_by(&h).unwrap(), expected);
    }

    #[test]
    fn conjugation_preserves_cycle_type_exhaustive_s4() {
        let s4 = sym(4);
        for p in &s4 {
            for h in &s4 {
                assert_eq!(p.conjugate_by(h).unwrap().cycle_type(), p.cycle_type());
            }
        }
    }

    #[test]
    fn compose_associative_exhaustive_s4() {
        let s4 = sym(4);
        for p in &s4 {
            for q in &s4 {
                let pq = p.compose(q).unwrap();
                for r in &s4 {
                    let qr = q.compose(r).unwrap();
                    assert_eq!(pq.compose(r).unwrap(), p.compose(&qr).unwrap());
                }
            }
        }
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        let p = Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.cycle_type(), vec![2, 2]);
        let q = Permutation::from_cycles(5, &[&[1, 2, 3]]).unwrap();
        assert_eq!(q.cycle_type(), vec![3, 1, 1]);
    }

    #[test]
    fn order_equals_lcm_of_cycle_type_exhaustive_s5() {
        for p in sym(5) {
            let lcm = p
                .cycle_type()
                .iter()
                .fold(1u64, |acc, &len| num_integer::lcm(acc, len as u64));
            assert_eq!(p.order(), lcm);
        }
    }

    #[test]
    fn transitivity_examples() {
        let full = Permutation::from_cycles(6, &[&[1, 2, 3, 4, 5, 6]]).unwrap();
        assert!(is_transitive(&[full]).unwrap());

        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert!(!is_transitive(&[t]).unwrap());

        let adjacent: Vec<Permutation> = (1..5)
            .map(|i| Permutation::from_cycles(5, &[&[i, i + 1]]).unwrap())
            .collect();
        assert!(is_transitive(&adjacent).unwrap());

        // No generators: all orbits are singletons.
        assert!(!is_transitive_on(3, &[]).unwrap());
        assert!(is_transitive_on(1, &[]).unwrap());
    }

    #[test]
    fn canonical_cycle_type_roundtrip() {
        let p = canonical_of_cycle_type(&[3, 2, 1], 6).unwrap();
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(p.one_based_images(), vec![2, 3, 1, 5, 4, 6]);
    }

    #[test]
    fn json_encoding_is_one_based() {
        let p = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1,3]");
        let q: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Permutation>("[2,2,3]").is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = Permutation::from_cycles(7, &[&[1, 5, 3], &[2, 7]]).unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn perm_strategy(m: usize) -> impl Strategy<Value = Permutation> {
            Just((0..m).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_zero_based(v).unwrap())
        }

        proptest! {
            #[test]
            fn inverse_reverses_composition(
                p in perm_strategy(8),
                q in perm_strategy(8),
            ) {
                let lhs = p.compose(&q).unwrap().inverse();
                let rhs = q.inverse().compose(&p.inverse()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn json_roundtrip(p in perm_strategy(9)) {
                let text = serde_json::to_string(&p).unwrap();
                let back: Permutation = serde_json::from_str(&text).unwrap();
                prop_assert_eq!(p, back);
            }
        }
    }
}
