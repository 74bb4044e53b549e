//! Monodromy of the superelliptic family `y^d = (x-x_1)…(x-x_n)` on first
//! homology, modelled by reduced Burau matrices with the twist variable
//! specialized into `ℤ[t]/(1 + t + … + t^(d-1))`.
//!
//! At `d = 2` the model collapses to the integer symplectic action of the
//! chain homomorphism; for `d = 3` and even `n` the cover has genus
//! `n - 2`, one past the range where only the chain actions survive.
//! Characteristic polynomials are the separating invariant: they are
//! conjugation-invariant, exactly computable, and unchanged by replacing a
//! representation with a commuting-twist modification on any word of
//! exponent sum zero.

pub mod cyclotomic;

use num_bigint::BigInt;

pub use cyclotomic::CycElem;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::symp::{self, Sign};

/// Square matrix over the degree-d cyclotomic quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    n: usize,
    d: usize,
    entries: Vec<CycElem>, // (n-1) × (n-1), row-major
}

impl BurauMatrix {
    fn dim(&self) -> usize {
        self.n - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> &CycElem {
        &self.entries[row * self.dim() + col]
    }

    pub fn identity(n: usize, d: usize) -> Self {
        let dim = n - 1;
        let mut entries = vec![CycElem::zero(d); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = CycElem::one(d);
        }
        BurauMatrix { n, d, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.d)
    }

    pub fn mul(&self, other: &BurauMatrix) -> Result<BurauMatrix> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::Precondition(
                "matrix parameters (n, d) must match".into(),
            ));
        }
        let dim = self.dim();
        let mut entries = vec![CycElem::zero(self.d); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        entries[i * dim + j] = entries[i * dim + j].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(BurauMatrix {
            n: self.n,
            d: self.d,
            entries,
        })
    }

    /// Characteristic polynomial coefficients `c_0..c_dim` (monic), by the
    /// trace recursion; the divisions by integers are exact in the ring.
    pub fn charpoly(&self) -> Result<Vec<CycElem>> {
        let dim = self.dim();
        let d = self.d;
        let mut coeffs = vec![CycElem::zero(d); dim + 1];
        coeffs[dim] = CycElem::one(d);
        let mut m = Self::identity(self.n, d);
        for k in 1..=dim {
            let nmat = self.mul(&m)?;
            let mut trace = CycElem::zero(d);
            for i in 0..dim {
                trace = trace.add(nmat.entry(i, i));
            }
            let c = trace.neg().exact_div_int(k as i64)?;
            m = nmat;
            for i in 0..dim {
                let diag = m.entry(i, i).add(&c);
                m.entries[i * dim + i] = diag;
            }
            coeffs[dim - k] = c;
        }
        Ok(coeffs)
    }

    /// Determinant via the constant characteristic coefficient:
    /// `det(M) = (-1)^dim · c_0`.
    pub fn det(&self) -> Result<CycElem> {
        let c0 = self.charpoly()?.swap_remove(0);
        if self.dim() % 2 == 0 {
            Ok(c0)
        } else {
            Ok(c0.neg())
        }
    }

    /// Specialize `t ↦ -1` (even `d` only) into an integer matrix.
    pub fn eval_at_neg_one(&self) -> Result<Vec<BigInt>> {
        self.entries.iter().map(CycElem::eval_at_neg_one).collect()
    }

    /// Rows of entries, each entry as its polynomial coefficient array
    /// `[c_0, c_1, …]`; errors if a coefficient overflows `i64`.
    pub fn to_coeff_rows(&self) -> Result<Vec<Vec<Vec<i64>>>> {
        let dim = self.dim();
        (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| {
                        self.entry(r, c)
                            .coeffs()
                            .iter()
                            .map(|x| {
                                i64::try_from(x).map_err(|_| {
                                    Error::Internal("matrix coefficient exceeds i64".into())
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

/// The reduced Burau image of σ_i (1-based) with `t` in the degree-d
/// quotient ring: the edge generators act by 2×2 blocks
/// `[[-t, 0], [1, 1]]` and `[[1, t], [0, -t]]`, interior ones by the 3×3
/// block `[[1, t, 0], [0, -t, 0], [0, 1, 1]]` centered on position i-1.
pub fn burau_generator(n: usize, d: usize, i: usize, sign: Sign) -> Result<BurauMatrix> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "reduced Burau needs n >= 3, got {n}"
        )));
    }
    if i == 0 || i > n - 1 {
        return Err(Error::GeneratorOutOfRange {
            index: i as i32,
            strands: n,
        });
    }
    let t = CycElem::t_power(d, 1);
    let tinv = CycElem::t_power(d, -1);
    let one = CycElem::one(d);
    let mut m = BurauMatrix::identity(n, d);
    let dim = n - 1;
    let mut set = |r: usize, c: usize, v: CycElem| {
        m.entries[r * dim + c] = v;
    };
    match (sign, i) {
        (Sign::Plus, 1) => {
            set(0, 0, t.neg());
            if dim > 1 {
                set(1, 0, one);
            }
        }
        (Sign::Plus, i) if i == n - 1 => {
            set(dim - 1, dim - 1, t.neg());
            if dim > 1 {
                set(dim - 2, dim - 1, t.clone());
            }
        }
        (Sign::Plus, i) => {
            let p = i - 1; // diagonal position of the -t entry
            set(p - 1, p, t.clone());
            set(p, p, t.neg());
            set(p + 1, p, one);
        }
        (Sign::Minus, 1) => {
            set(0, 0, tinv.neg());
            if dim > 1 {
                set(1, 0, tinv.clone());
            }
        }
        (Sign::Minus, i) if i == n - 1 => {
            set(dim - 1, dim - 1, tinv.neg());
            if dim > 1 {
                set(dim - 2, dim - 1, one);
            }
        }
        (Sign::Minus, i) => {
            let p = i - 1;
            set(p - 1, p, one);
            set(p, p, tinv.neg());
            set(p + 1, p, tinv.clone());
        }
    }
    Ok(m)
}

/// Generator images σ_1..σ_{n-1} of the degree-d monodromy model.
pub fn burau_rep(n: usize, d: usize) -> Result<Vec<BurauMatrix>> {
    (1..n)
        .map(|i| burau_generator(n, d, i, Sign::Plus))
        .collect()
}

/// Image of a braid word under the degree-d model.
pub fn eval_burau_word(n: usize, d: usize, word: &BraidWord) -> Result<BurauMatrix> {
    if word.strands() != n {
        return Err(Error::Precondition(format!(
            "word has {} strands, expected {n}",
            word.strands()
        )));
    }
    let mut acc = BurauMatrix::identity(n, d);
    for &letter in word.letters() {
        let i = letter.unsigned_abs() as usize;
        let sign = if letter > 0 { Sign::Plus } else { Sign::Minus };
        acc = acc.mul(&burau_generator(n, d, i, sign)?)?;
    }
    Ok(acc)
}

/// Genus of the degree-d cover over `n = 2k` branch points:
/// `(d-1)(k-1)`. Odd `n` is rejected; the formula is stated for `n = 2k`.
pub fn superelliptic_genus(d: u64, n: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::Precondition(format!(
            "cover degree must be at least 2, got {d}"
        )));
    }
    if n % 2 != 0 || n == 0 {
        return Err(Error::Precondition(format!(
            "genus formula requires even n, got {n}"
        )));
    }
    let k = n / 2;
    Ok((d - 1) * (k - 1))
}

/// Multiply polynomial coefficient vectors over the ring.
fn poly_mul(a: &[CycElem], b: &[CycElem], d: usize) -> Vec<CycElem> {
    let mut out = vec![CycElem::zero(d); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

/// `(x - 1)^e` as ring-coefficient polynomial.
fn x_minus_one_power(e: usize, d: usize) -> Vec<CycElem> {
    let mut acc = vec![CycElem::one(d)];
    let factor = vec![CycElem::from_int(d, -1), CycElem::one(d)];
    for _ in 0..e {
        acc = poly_mul(&acc, &factor, d);
    }
    acc
}

/// Characteristic polynomial of an integer symplectic matrix, embedded
/// into the degree-d ring as constants and padded by `(x - 1)^pad` so the
/// degree matches a Burau matrix of dimension `n - 1`.
fn padded_symplectic_charpoly(
    m: &symp::SympMatrix,
    d: usize,
    target_degree: usize,
) -> Result<Vec<CycElem>> {
    let dim = m.dim();
    if target_degree < dim {
        return Err(Error::Internal("padding target below matrix size".into()));
    }
    let entries: Vec<CycElem> = m
        .rows()
        .flat_map(|row| row.iter().map(|e| CycElem::from_bigint(d, e.clone())))
        .collect();
    let as_burau = BurauMatrix {
        n: dim + 1,
        d,
        entries,
    };
    let base = as_burau.charpoly()?;
    Ok(poly_mul(
        &base,
        &x_minus_one_power(target_degree - dim, d),
        d,
    ))
}

/// Do the degree-d model and the chain homomorphism have matching spectra
/// on every generator and on σ_1σ_3⁻¹? Exact comparison of characteristic
/// polynomials after padding the smaller side by `(x-1)` factors.
pub fn spectra_match_standard(n: usize, d: usize) -> Result<bool> {
    if n % 2 != 0 || n < 4 {
        return Err(Error::Precondition(format!(
            "spectrum comparison requires even n >= 4, got {n}"
        )));
    }
    let burau = burau_rep(n, d)?;
    let standard = symp::standard_rep(n, Sign::Plus)?;
    let target = n - 1;
    for (b, s) in burau.iter().zip(standard.gen_images()) {
        let cb = b.charpoly()?;
        let cs = padded_symplectic_charpoly(s, d, target)?;
        if cb != cs {
            return Ok(false);
        }
    }
    let word = BraidWord::new(n, vec![1, -3])?;
    let cb = eval_burau_word(n, d, &word)?.charpoly()?;
    let cs = padded_symplectic_charpoly(&standard.evaluate(&word)?, d, target)?;
    Ok(cb == cs)
}

/// At `d = 2` the model is exactly the chain action on homology; the
/// spectra agree generator by generator.
pub fn compare_d2_with_standard(n: usize) -> Result<bool> {
    spectra_match_standard(n, 2)
}

/// Report on whether the degree-d model can be a commuting-twist
/// modification of the trivial, chain, or inverse-chain homomorphism.
/// Such a modification leaves the image of σ_1σ_3⁻¹ unchanged, so
/// distinct spectra on that word rule it out; matching spectra are
/// reported as inconclusive rather than as a distinction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransvectionDistinctionReport {
    pub n: usize,
    pub d: usize,
    /// σ_1σ_3⁻¹ has nontrivial image, ruling out modifications of the
    /// trivial homomorphism.
    pub distinct_from_trivial: bool,
    pub distinct_from_standard: bool,
    pub distinct_from_negative_standard: bool,
    /// All three distinctions hold at homology level.
    pub conclusive: bool,
}

/// The degree-d variant of [`d3_not_transvection_check`]; `d = 2` is the
/// honesty case where the spectra genuinely match and nothing is ruled out.
pub fn not_transvection_check(n: usize, d: usize) -> Result<TransvectionDistinctionReport> {
    if n % 2 != 0 || n < 6 {
        return Err(Error::Precondition(format!(
            "distinction check requires even n >= 6, got {n}"
        )));
    }
    let word = BraidWord::new(n, vec![1, -3])?;
    let image = eval_burau_word(n, d, &word)?;
    let distinct_from_trivial = !image.is_identity();
    let cp = image.charpoly()?;
    let target = n - 1;

    let plus = symp::standard_rep(n, Sign::Plus)?.evaluate(&word)?;
    let minus = symp::standard_rep(n, Sign::Minus)?.evaluate(&word)?;
    let distinct_from_standard = cp != padded_symplectic_charpoly(&plus, d, target)?;
    let distinct_from_negative_standard = cp != padded_symplectic_charpoly(&minus, d, target)?;

    Ok(TransvectionDistinctionReport {
        n,
        d,
        distinct_from_trivial,
        distinct_from_standard,
        distinct_from_negative_standard,
        conclusive: distinct_from_trivial
            && distinct_from_standard
            && distinct_from_negative_standard,
    })
}

/// Certify, at homology level, that the degree-3 model is not a
/// commuting-twist modification of the trivial, chain, or inverse-chain
/// homomorphism.
pub fn d3_not_transvection_check(n: usize) -> Result<TransvectionDistinctionReport> {
    not_transvection_check(n, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn braid_pairs(n: usize) -> Vec<(usize, usize)> {
        (1..n - 1).map(|i| (i, i + 1)).collect()
    }

    #[test]
    fn braid_relation_holds_for_n4_d3() {
        let gens = burau_rep(4, 3).unwrap();
        let lhs = gens[0].mul(&gens[1]).unwrap().mul(&gens[0]).unwrap();
        let rhs = gens[1].mul(&gens[0]).unwrap().mul(&gens[1]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relations_hold_up_to_n8_d5() {
        for n in 3..=8 {
            for d in 2..=5 {
                let gens = burau_rep(n, d).unwrap();
                for (i, j) in braid_pairs(n) {
                    let a = &gens[i - 1];
                    let b = &gens[j - 1];
                    let lhs = a.mul(b).unwrap().mul(a).unwrap();
                    let rhs = b.mul(a).unwrap().mul(b).unwrap();
                    assert_eq!(lhs, rhs, "braid relation fails at n={n}, d={d}, i={i}");
                }
                for i in 1..n {
                    for j in i + 2..n {
                        let a = &gens[i - 1];
                        let b = &gens[j - 1];
                        assert_eq!(
                            a.mul(b).unwrap(),
                            b.mul(a).unwrap(),
                            "commutation fails at n={n}, d={d}, ({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn generator_inverses_cancel() {
        for n in 3..=6 {
            for d in 2..=4 {
                for i in 1..n {
                    let plus = burau_generator(n, d, i, Sign::Plus).unwrap();
                    let minus = burau_generator(n, d, i, Sign::Minus).unwrap();
                    assert!(plus.mul(&minus).unwrap().is_identity());
                    assert!(minus.mul(&plus).unwrap().is_identity());
                }
            }
        }
    }

    #[test]
    fn d2_matrices_are_integral() {
        let gens = burau_rep(5, 2).unwrap();
        for gmat in &gens {
            gmat.eval_at_neg_one().unwrap();
        }
    }

    #[test]
    fn determinants_are_units() {
        for n in 3..=6 {
            for d in 2..=4 {
                for gmat in burau_rep(n, d).unwrap() {
                    assert!(gmat.det().unwrap().is_monomial_unit());
                }
            }
        }
    }

    #[test]
    fn genus_formula() {
        assert_eq!(superelliptic_genus(2, 2).unwrap(), 0);
        for k in 1..=10 {
            assert_eq!(superelliptic_genus(2, 2 * k).unwrap(), k - 1);
            assert_eq!(superelliptic_genus(3, 2 * k).unwrap(), 2 * (k - 1));
        }
        for n in [6u64, 8, 10] {
            assert_eq!(superelliptic_genus(3, n).unwrap(), n - 2);
        }
        assert!(superelliptic_genus(3, 7).is_err());
        assert!(superelliptic_genus(1, 6).is_err());
    }

    #[test]
    fn genus_matches_chain_homomorphism_for_d2() {
        for n in [4usize, 6, 8, 10] {
            let g2 = superelliptic_genus(2, n as u64).unwrap();
            assert_eq!(g2 + 1, (n / 2) as u64);
            let rep = symp::standard_rep(n, Sign::Plus).unwrap();
            assert_eq!(rep.genus() as u64, g2);
        }
    }

    #[test]
    fn d2_spectra_match_standard() {
        for n in [4, 6, 8] {
            assert!(compare_d2_with_standard(n).unwrap(), "mismatch at n={n}");
        }
    }

    #[test]
    fn d3_spectra_do_not_match_standard() {
        assert!(!spectra_match_standard(6, 3).unwrap());
    }

    #[test]
    fn d3_distinction_reports() {
        for n in [6, 8] {
            let report = d3_not_transvection_check(n).unwrap();
            assert!(report.distinct_from_trivial);
            assert!(report.distinct_from_standard);
            assert!(report.distinct_from_negative_standard);
            assert!(report.conclusive);
        }
    }

    #[test]
    fn d2_distinction_is_honestly_inconclusive() {
        // The d = 2 model *is* the chain action, so the same machinery
        // must refuse to "distinguish" them.
        let report = not_transvection_check(6, 2).unwrap();
        assert!(report.distinct_from_trivial);
        assert!(!report.distinct_from_standard);
        assert!(!report.conclusive);
    }

    #[test]
    fn specialization_commutes_with_word_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let word = crate::braid::random_word(5, 12, &mut rng).unwrap();
            let via_d4 = eval_burau_word(5, 4, &word)
                .unwrap()
                .eval_at_neg_one()
                .unwrap();
            let via_d2 = eval_burau_word(5, 2, &word)
                .unwrap()
                .eval_at_neg_one()
                .unwrap();
            assert_eq!(via_d4, via_d2);
        }
    }

    #[test]
    fn certified_identity_words_evaluate_to_identity_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let word = crate::braid::random_identity_word(5, 3, &mut rng).unwrap();
            assert!(crate::braid::is_identity(&word).unwrap());
            for d in 2..=4 {
                assert!(eval_burau_word(5, d, &word).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn charpoly_of_identity() {
        let id = BurauMatrix::identity(4, 3);
        let cp = id.charpoly().unwrap();
        // (x - 1)^3 = x^3 - 3x^2 + 3x - 1
        let expect: Vec<CycElem> = [-1i64, 3, -3, 1]
            .iter()
            .map(|&v| CycElem::from_int(3, v))
            .collect();
        assert_eq!(cp, expect);
    }
}
