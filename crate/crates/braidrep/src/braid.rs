//! Braid words in Artin generators and the word problem.
//!
//! The word problem is decided through the faithful action of `B_n` on the
//! free group `F_n`: the generator σ_i sends `x_i ↦ x_i x_{i+1} x_i⁻¹`,
//! `x_{i+1} ↦ x_i`, and fixes all other generators. A braid word is the
//! identity iff it fixes every free generator. Free words are kept freely
//! reduced at every step; intermediate words can grow exponentially in the
//! braid word length, so the action carries a configurable length bound.

use rand::Rng;

use crate::error::{Error, Result};

/// Letters are signed generator indices: `i` is σ_i, `-i` is σ_i⁻¹.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// A freely reduced word in `F_n`; letters are `±1..=±rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

/// Abort bound on intermediate free word length during the Artin action.
pub const DEFAULT_FREE_WORD_LIMIT: usize = 1_000_000;

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Precondition(format!(
                "braid group needs at least 2 strands, got {strands}"
            )));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > strands - 1 {
                return Err(Error::GeneratorOutOfRange { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The empty word.
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// The single generator σ_i (1-based, `i <= strands - 1`).
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        Self::new(strands, vec![i as i32])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed sequence of negated letters; no other simplification.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Precondition(format!(
                "strand counts differ: {} vs {}",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Parse the text form: comma-separated signed integers, e.g.
    /// `"1,-3,2"` for σ_1σ_3⁻¹σ_2. The empty string is the identity.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Self::identity(strands);
        }
        let letters: Vec<i32> = trimmed
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Precondition(format!("bad braid letter {piece:?}")))
            })
            .collect::<Result<_>>()?;
        Self::new(strands, letters)
    }

    pub fn to_text(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FreeWord {
    /// Reduces the letters freely and validates their range.
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::Precondition(format!(
                    "free letter {l} out of range for rank {rank}"
                )));
            }
        }
        let mut reduced = Vec::with_capacity(letters.len());
        for l in letters {
            if reduced.last() == Some(&-l) {
                reduced.pop();
            } else {
                reduced.push(l);
            }
        }
        Ok(FreeWord {
            rank,
            letters: reduced,
        })
    }

    /// The generator `x_i` (1-based).
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::Precondition(format!(
                "generator {i} out of range for rank {rank}"
            )));
        }
        Ok(FreeWord {
            rank,
            letters: vec![i as i32],
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Push a letter onto a freely reduced buffer, cancelling an inverse on top.
#[inline]
fn push_reduced(buf: &mut Vec<i32>, letter: i32) {
    if buf.last() == Some(&-letter) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

/// Apply one braid generator (`gen = ±i`) to a reduced free word.
fn apply_generator(gen: i32, word: &[i32], limit: usize) -> Result<Vec<i32>> {
    let i = gen.unsigned_abs() as i32;
    let j = i + 1;
    let mut out = Vec::with_capacity(word.len() + 8);
    for &letter in word {
        if gen > 0 {
            // σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
            if letter == i {
                push_reduced(&mut out, i);
                push_reduced(&mut out, j);
                push_reduced(&mut out, -i);
            } else if letter == -i {
                push_reduced(&mut out, i);
                push_reduced(&mut out, -j);
                push_reduced(&mut out, -i);
            } else if letter == j {
                push_reduced(&mut out, i);
            } else if letter == -j {
                push_reduced(&mut out, -i);
            } else {
                push_reduced(&mut out, letter);
            }
        } else {
            // σ_i⁻¹: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
            if letter == i {
                push_reduced(&mut out, j);
            } else if letter == -i {
                push_reduced(&mut out, -j);
            } else if letter == j {
                push_reduced(&mut out, -j);
                push_reduced(&mut out, i);
                push_reduced(&mut out, j);
            } else if letter == -j {
                push_reduced(&mut out, -j);
                push_reduced(&mut out, -i);
                push_reduced(&mut out, j);
            } else {
                push_reduced(&mut out, letter);
            }
        }
        if out.len() > limit {
            return Err(Error::FreeWordTooLong { bound: limit });
        }
    }
    Ok(out)
}

/// Left action of a braid word on a free word, with an explicit length
/// bound on intermediate reduced words. `act(b·c, w) = act(b, act(c, w))`,
/// so letters are applied right to left.
pub fn artin_act_with_limit(b: &BraidWord, w: &FreeWord, limit: usize) -> Result<FreeWord> {
    if w.rank != b.strands {
        return Err(Error::RankMismatch {
            word_rank: w.rank,
            strands: b.strands,
        });
    }
    let mut current = w.letters.clone();
    for &gen in b.letters.iter().rev() {
        current = apply_generator(gen, &current, limit)?;
    }
    Ok(FreeWord {
        rank: w.rank,
        letters: current,
    })
}

/// [`artin_act_with_limit`] with the default bound.
pub fn artin_act(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    artin_act_with_limit(b, w, DEFAULT_FREE_WORD_LIMIT)
}

/// Word problem: true iff the word acts trivially on every free generator.
pub fn is_identity(b: &BraidWord) -> Result<bool> {
    is_identity_with_limit(b, DEFAULT_FREE_WORD_LIMIT)
}

pub fn is_identity_with_limit(b: &BraidWord, limit: usize) -> Result<bool> {
    for i in 1..=b.strands {
        let x = FreeWord::generator(b.strands, i)?;
        if artin_act_with_limit(b, &x, limit)? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The odd-indexed generators σ_1, σ_3, …, σ_ℓ with ℓ the largest odd
/// integer below `n`; there are `n/2` of them.
pub fn xn_set(n: usize) -> Result<Vec<BraidWord>> {
    if n < 2 {
        return Err(Error::Precondition(format!("xn_set needs n >= 2, got {n}")));
    }
    (1..n)
        .step_by(2)
        .map(|i| BraidWord::generator(n, i))
        .collect()
}

/// The difference set σ_1σ_i⁻¹ for odd i with 3 ≤ i < n; `n/2 - 1` words.
pub fn xn_prime_set(n: usize) -> Result<Vec<BraidWord>> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "xn_prime_set needs n >= 4, got {n}"
        )));
    }
    (3..n)
        .step_by(2)
        .map(|i| BraidWord::new(n, vec![1, -(i as i32)]))
        .collect()
}

/// All defining relators of `B_n`: the braid relators
/// σ_iσ_{i+1}σ_iσ_{i+1}⁻¹σ_i⁻¹σ_{i+1}⁻¹ and the commutators
/// σ_iσ_jσ_i⁻¹σ_j⁻¹ for |i-j| ≥ 2.
pub fn defining_relators(n: usize) -> Result<Vec<BraidWord>> {
    let mut out = Vec::new();
    for i in 1..n as i32 - 1 {
        out.push(BraidWord::new(
            n,
            vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        )?);
    }
    for i in 1..n as i32 {
        for j in i + 2..n as i32 {
            out.push(BraidWord::new(n, vec![i, j, -i, -j])?);
        }
    }
    Ok(out)
}

/// Uniformly random word with length drawn from `0..=max_len`.
pub fn random_word<R: Rng>(n: usize, max_len: usize, rng: &mut R) -> Result<BraidWord> {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let idx = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                idx
            } else {
                -idx
            }
        })
        .collect();
    BraidWord::new(n, letters)
}

/// A random product of conjugated defining relators and cancelling pairs:
/// trivial in `B_n` by construction, so the Artin-action oracle must
/// certify it. Used to cross-check evaluated homomorphisms.
pub fn random_identity_word<R: Rng>(n: usize, blocks: usize, rng: &mut R) -> Result<BraidWord> {
    let mut word = BraidWord::identity(n)?;
    for _ in 0..blocks {
        let relator = match rng.gen_range(0..3) {
            0 if n >= 3 => {
                let i = rng.gen_range(1..n as i32 - 1);
                BraidWord::new(n, vec![i, i + 1, i, -(i + 1), -i, -(i + 1)])?
            }
            1 if n >= 4 => {
                let i = rng.gen_range(1..n as i32 - 2);
                let j = rng.gen_range(i + 2..n as i32);
                BraidWord::new(n, vec![i, j, -i, -j])?
            }
            _ => {
                let i = rng.gen_range(1..n as i32);
                BraidWord::new(n, vec![i, -i])?
            }
        };
        let conj = random_word(n, 4, rng)?;
        let piece = conj.concat(&relator)?.concat(&conj.inverse())?;
        word = word.concat(&piece)?;
    }
    Ok(word)
}

/// A random product of commutators `[u, v] = u v u⁻¹ v⁻¹` of short words:
/// an element of the commutator subgroup, so its exponent sum vanishes.
pub fn random_commutator_word<R: Rng>(n: usize, blocks: usize, rng: &mut R) -> Result<BraidWord> {
    let mut word = BraidWord::identity(n)?;
    for _ in 0..blocks {
        let u = random_word(n, 5, rng)?;
        let v = random_word(n, 5, rng)?;
        let commutator = u.concat(&v)?.concat(&u.inverse())?.concat(&v.inverse())?;
        word = word.concat(&commutator)?;
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn empty_braid_acts_trivially() {
        let b = BraidWord::identity(4).unwrap();
        let w = FreeWord::new(4, vec![1, -3, 2, 2]).unwrap();
        assert_eq!(artin_act(&b, &w).unwrap(), w);
    }

    #[test]
    fn sigma_one_on_x_one() {
        let b = BraidWord::generator(2, 1).unwrap();
        let x1 = FreeWord::generator(2, 1).unwrap();
        let image = artin_act(&b, &x1).unwrap();
        assert_eq!(image.letters(), &[1, 2, -1]);
    }

    #[test]
    fn inverse_pair_acts_trivially() {
        let b = BraidWord::new(3, vec![1, -1]).unwrap();
        let x2 = FreeWord::generator(3, 2).unwrap();
        assert_eq!(artin_act(&b, &x2).unwrap(), x2);
        assert!(is_identity(&b).unwrap());
    }

    #[test]
    fn braid_relator_is_identity() {
        let b = BraidWord::new(3, vec![1, 2, 1, -2, -1, -2]).unwrap();
        assert!(is_identity(&b).unwrap());
    }

    #[test]
    fn commutation_relator_is_identity() {
        let b = BraidWord::new(5, vec![1, 3, -1, -3]).unwrap();
        assert!(is_identity(&b).unwrap());
    }

    #[test]
    fn single_generator_is_not_identity() {
        let b = BraidWord::generator(5, 1).unwrap();
        assert!(!is_identity(&b).unwrap());
    }

    #[test]
    fn all_defining_relators_die_up_to_eight_strands() {
        for n in 3..=8 {
            for relator in defining_relators(n).unwrap() {
                assert!(is_identity(&relator).unwrap(), "relator failed at n={n}");
            }
        }
    }

    #[test]
    fn xn_set_examples() {
        let x6 = xn_set(6).unwrap();
        assert_eq!(
            x6.iter().map(|b| b.letters().to_vec()).collect::<Vec<_>>(),
            vec![vec![1], vec![3], vec![5]]
        );
        assert_eq!(xn_set(7).unwrap().len(), 3); // floor(7/2)
        assert_eq!(xn_set(2).unwrap().len(), 1);
        for n in 2..=20 {
            assert_eq!(xn_set(n).unwrap().len(), n / 2);
        }
    }

    #[test]
    fn xn_prime_set_examples() {
        let x7 = xn_prime_set(7).unwrap();
        assert_eq!(
            x7.iter().map(|b| b.letters().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, -3], vec![1, -5]]
        );
        assert_eq!(xn_prime_set(5).unwrap().len(), 1);
        assert_eq!(xn_prime_set(16).unwrap().len(), 7); // floor(16/2) - 1
    }

    #[test]
    fn xn_elements_pairwise_commute() {
        for n in 2..=9 {
            let xs = xn_set(n).unwrap();
            for a in &xs {
                for b in &xs {
                    let commutator = a
                        .concat(b)
                        .unwrap()
                        .concat(&a.inverse())
                        .unwrap()
                        .concat(&b.inverse())
                        .unwrap();
                    assert!(is_identity(&commutator).unwrap());
                }
            }
        }
    }

    #[test]
    fn random_words_cancel_against_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for trial in 0..1000 {
            let n = rng.gen_range(2..=8);
            let b = random_word(n, 40, &mut rng).unwrap();
            let cancel = b.concat(&b.inverse()).unwrap();
            assert!(
                is_identity(&cancel).unwrap(),
                "trial {trial} failed for word {:?}",
                b.letters()
            );
        }
    }

    #[test]
    fn random_identity_words_are_certified() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let w = random_identity_word(6, 4, &mut rng).unwrap();
            assert!(is_identity(&w).unwrap());
        }
    }

    #[test]
    fn length_bound_trips() {
        // (σ_1σ_2⁻¹)^k stretches free words exponentially; a tiny bound
        // must abort instead of allocating without bound.
        let mut letters = Vec::new();
        for _ in 0..64 {
            letters.push(1);
            letters.push(-2);
        }
        let b = BraidWord::new(3, letters).unwrap();
        let x = FreeWord::generator(3, 1).unwrap();
        match artin_act_with_limit(&b, &x, 100) {
            Err(Error::FreeWordTooLong { bound: 100 }) => {}
            other => panic!("expected length abort, got {other:?}"),
        }
    }

    #[test]
    fn parse_and_print_roundtrip() {
        let b = BraidWord::parse(5, "1,-3,2").unwrap();
        assert_eq!(b.letters(), &[1, -3, 2]);
        assert_eq!(b.to_text(), "1,-3,2");
        assert!(BraidWord::parse(3, "1,-3,2").is_err()); // σ_3 needs n >= 4
        assert!(BraidWord::parse(5, "").unwrap().is_empty());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn short_braid(n: usize) -> impl Strategy<Value = BraidWord> {
            let max = n as i32 - 1;
            prop::collection::vec((1..=max, prop::bool::ANY), 0..8).prop_map(move |pairs| {
                let letters = pairs
                    .into_iter()
                    .map(|(i, neg)| if neg { -i } else { i })
                    .collect();
                BraidWord::new(n, letters).unwrap()
            })
        }

        proptest! {
            #[test]
            fn action_respects_concatenation(
                a in short_braid(5),
                b in short_braid(5),
                gen in 1usize..=5,
            ) {
                let x = FreeWord::generator(5, gen).unwrap();
                let joint = artin_act(&a.concat(&b).unwrap(), &x).unwrap();
                let staged = artin_act(&a, &artin_act(&b, &x).unwrap()).unwrap();
                prop_assert_eq!(joint, staged);
            }

            #[test]
            fn action_is_invertible(a in short_braid(4), gen in 1usize..=4) {
                let x = FreeWord::generator(4, gen).unwrap();
                let there = artin_act(&a, &x).unwrap();
                let back = artin_act(&a.inverse(), &there).unwrap();
                prop_assert_eq!(back, x);
            }
        }
    }
}
