//! Integer symplectic matrices: the homology shadow of mapping classes.
//!
//! Everything in this module acts on `H_1` of a closed genus-g surface
//! with the standard basis `a_1..a_g, b_1..b_g` and the pairing
//! `⟨x, y⟩ = xᵀJy`, where `J` has `+I` in the upper-right block. A Dehn
//! twist along a curve with homology class `v` acts as the transvection
//! `x ↦ x + ⟨x, v⟩·v` (sign `-1` for the inverse twist).
//!
//! The module never claims faithfulness: an identity verified here is a
//! necessary condition on mapping classes, and an identity refuted here
//! is a genuine refutation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Cap on closure enumeration for finite symplectic groups.
pub const MATRIX_CLOSURE_BOUND: usize = 10_000_000;

/// A `2g × 2g` integer matrix preserving the standard symplectic form.
/// Construction checks `MᵀJM = J`; determinant `+1` follows but is
/// computed independently by [`SympMatrix::det`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SympMatrix {
    g: usize,
    entries: Vec<BigInt>,
}

/// Sign of a twist: `Plus` is the right-handed twist, `Minus` its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_int(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::Precondition(format!("sign must be ±1, got {other}"))),
        }
    }
}

/// `⟨x, y⟩ = xᵀJy` for length-2g integer vectors.
pub fn pairing(x: &[BigInt], y: &[BigInt], g: usize) -> BigInt {
    debug_assert_eq!(x.len(), 2 * g);
    debug_assert_eq!(y.len(), 2 * g);
    let mut acc = BigInt::zero();
    for i in 0..g {
        acc += &x[i] * &y[g + i] - &x[g + i] * &y[i];
    }
    acc
}

/// `⟨e_c, v⟩` for the c-th standard basis vector.
fn basis_pairing(c: usize, v: &[BigInt], g: usize) -> BigInt {
    if c < g {
        v[g + c].clone()
    } else {
        -v[c - g].clone()
    }
}

impl SympMatrix {
    /// Validating constructor: entries are row-major, `MᵀJM = J` required.
    pub fn new(g: usize, entries: Vec<BigInt>) -> Result<Self> {
        let d = 2 * g;
        if entries.len() != d * d {
            return Err(Error::VectorLength {
                got: entries.len(),
                expected: d * d,
            });
        }
        let m = SympMatrix { g, entries };
        if !m.is_symplectic() {
            return Err(Error::NotSymplectic);
        }
        Ok(m)
    }

    pub fn identity(g: usize) -> Self {
        let d = 2 * g;
        let mut entries = vec![BigInt::zero(); d * d];
        for i in 0..d {
            entries[i * d + i] = BigInt::one();
        }
        SympMatrix { g, entries }
    }

    /// `-I`, central in the symplectic group.
    pub fn neg_identity(g: usize) -> Self {
        let mut m = Self::identity(g);
        for e in &mut m.entries {
            *e = -std::mem::take(e);
        }
        m
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        2 * self.g
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim() + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks_exact(self.dim())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.g)
    }

    /// `MᵀJM = J`, checked entry by entry: `⟨Me_i, Me_j⟩ = ⟨e_i, e_j⟩`.
    pub fn is_symplectic(&self) -> bool {
        let d = self.dim();
        let g = self.g;
        let col = |c: usize| -> Vec<BigInt> { (0..d).map(|r| self.entry(r, c).clone()).collect() };
        let cols: Vec<Vec<BigInt>> = (0..d).map(col).collect();
        for i in 0..d {
            for j in 0..d {
                let expected = if j == i + g {
                    BigInt::one()
                } else if i == j + g {
                    -BigInt::one()
                } else {
                    BigInt::zero()
                };
                if pairing(&cols[i], &cols[j], g) != expected {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, other: &SympMatrix) -> Result<SympMatrix> {
        if self.g != other.g {
            return Err(Error::Precondition(format!(
                "genus mismatch: {} vs {}",
                self.g, other.g
            )));
        }
        let d = self.dim();
        let mut entries = vec![BigInt::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        entries[i * d + j] += a * b;
                    }
                }
            }
        }
        Ok(SympMatrix { g: self.g, entries })
    }

    /// `M⁻¹ = -J Mᵀ J`, exact for symplectic matrices.
    pub fn inverse(&self) -> SympMatrix {
        let d = self.dim();
        let g = self.g;
        // (J M^T J)[i][j] = Σ_{k,l} J[i][k] M[j][k]... expand directly.
        let j_sign = |r: usize| -> (usize, i64) {
            // J e_r: for r < g, J maps to -e_{r+g} reading columns; work
            // with explicit index algebra instead: J[i][k] nonzero iff
            // k == i + g (value 1) or k == i - g (value -1).
            if r < g {
                (r + g, 1)
            } else {
                (r - g, -1)
            }
        };
        let mut entries = vec![BigInt::zero(); d * d];
        for i in 0..d {
            let (k, si) = j_sign(i);
            for j in 0..d {
                // The right J factor enters through its columns, whose
                // sign is opposite to the row sign: J[l][j] = -sj at
                // l = j_sign(j).0, so (-J Mᵀ J)[i][j] = si·sj·M[l][k].
                let (l, sj) = j_sign(j);
                let v = self.entry(l, k).clone();
                entries[i * d + j] = if si * sj == 1 { v } else { -v };
            }
        }
        let inv = SympMatrix { g, entries };
        debug_assert!(inv.mul(self).map(|p| p.is_identity()).unwrap_or(false));
        inv
    }

    pub fn pow(&self, e: u64) -> SympMatrix {
        let mut acc = SympMatrix::identity(self.g);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same genus");
            }
            base = base.mul(&base).expect("same genus");
            e >>= 1;
        }
        acc
    }

    pub fn pow_signed(&self, e: i64) -> SympMatrix {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inverse().pow(e.unsigned_abs())
        }
    }

    /// Integer determinant by fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let d = self.dim();
        let mut a: Vec<Vec<BigInt>> = self.rows().map(|r| r.to_vec()).collect();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..d.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..d).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev; // exact by Bareiss
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[d - 1][d - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Entries as `i64`, row-major; errors if any entry overflows.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        self.rows()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        i64::try_from(e)
                            .map_err(|_| Error::Internal("matrix entry exceeds i64".into()))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Integer vector from i64 entries, for writing classes down concisely.
pub fn vec_bigint(entries: &[i64]) -> Vec<BigInt> {
    entries.iter().map(|&x| BigInt::from(x)).collect()
}

/// The transvection `x ↦ x + sign·⟨x, v⟩·v`; the zero vector gives the
/// identity. `multiplier` generalizes to the k-th power of the twist.
pub fn powered_transvection(v: &[BigInt], multiplier: i64, g: usize) -> Result<SympMatrix> {
    if v.len() != 2 * g {
        return Err(Error::VectorLength {
            got: v.len(),
            expected: 2 * g,
        });
    }
    let d = 2 * g;
    let mult = BigInt::from(multiplier);
    let mut entries = vec![BigInt::zero(); d * d];
    for c in 0..d {
        let coeff = &mult * basis_pairing(c, v, g);
        for r in 0..d {
            let mut e = if r == c {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            e += &coeff * &v[r];
            entries[r * d + c] = e;
        }
    }
    SympMatrix::new(g, entries)
}

pub fn transvection_matrix(v: &[BigInt], sign: Sign, g: usize) -> Result<SympMatrix> {
    powered_transvection(v, sign.as_int(), g)
}

/// Homology classes of a chain of curves: consecutive pairings `±1`,
/// distant pairings `0`, every class primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainVectors {
    g: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl ChainVectors {
    pub fn g(&self) -> usize {
        self.g
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    /// Gram-pattern and primitivity check.
    pub fn validate(&self) -> Result<()> {
        let g = self.g;
        for (i, v) in self.vectors.iter().enumerate() {
            if v.len() != 2 * g {
                return Err(Error::VectorLength {
                    got: v.len(),
                    expected: 2 * g,
                });
            }
            let gcd = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if gcd != BigInt::one() {
                return Err(Error::Internal(format!(
                    "chain vector {i} is not primitive"
                )));
            }
        }
        for i in 0..self.vectors.len() {
            for j in i + 1..self.vectors.len() {
                let p = pairing(&self.vectors[i], &self.vectors[j], g);
                let ok = if j == i + 1 {
                    p.abs() == BigInt::one()
                } else {
                    p.is_zero()
                };
                if !ok {
                    return Err(Error::Internal(format!(
                        "chain pairing violated between positions {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The standard chain on a closed genus-g surface: `v_1 = a_1`,
/// `v_{2i} = b_i`, `v_{2i+1} = a_i + a_{i+1}` (reading `a_{g+1} = 0`, so
/// the last odd vector of a full chain is `a_g`). At most `2g + 1` curves
/// fit on the surface.
pub fn chain_vectors(g: usize, length: usize) -> Result<ChainVectors> {
    if g < 1 {
        return Err(Error::Precondition("chain needs genus at least 1".into()));
    }
    if length > 2 * g + 1 {
        return Err(Error::ChainTooLong {
            length,
            g,
            bound: 2 * g + 1,
        });
    }
    let d = 2 * g;
    let mut vectors = Vec::with_capacity(length);
    for idx in 1..=length {
        let mut v = vec![BigInt::zero(); d];
        if idx % 2 == 0 {
            v[g + idx / 2 - 1] = BigInt::one(); // b_{idx/2}
        } else {
            let i = (idx - 1) / 2; // v_{2i+1} = a_i + a_{i+1}, v_1 = a_1
            if i >= 1 {
                v[i - 1] = BigInt::one();
            }
            if i < g {
                v[i] = BigInt::one();
            }
        }
        vectors.push(v);
    }
    let chain = ChainVectors { g, vectors };
    chain.validate()?;
    Ok(chain)
}

/// Generator images on homology for a braid group action: braid relation
/// for adjacent images, commutation for distant ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyRepresentation {
    n: usize,
    g: usize,
    gen_images: Vec<SympMatrix>,
}

impl HomologyRepresentation {
    pub fn new(n: usize, g: usize, gen_images: Vec<SympMatrix>) -> Result<Self> {
        if gen_images.len() != n - 1 {
            return Err(Error::Precondition(format!(
                "expected {} generator images, got {}",
                n - 1,
                gen_images.len()
            )));
        }
        let rep = HomologyRepresentation { n, g, gen_images };
        rep.verify_relations()?;
        Ok(rep)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn gen_images(&self) -> &[SympMatrix] {
        &self.gen_images
    }

    /// Braid and commutation identities as exact matrix equalities.
    pub fn verify_relations(&self) -> Result<()> {
        let imgs = &self.gen_images;
        for i in 0..imgs.len().saturating_sub(1) {
            let aba = imgs[i].mul(&imgs[i + 1])?.mul(&imgs[i])?;
            let bab = imgs[i + 1].mul(&imgs[i])?.mul(&imgs[i + 1])?;
            if aba != bab {
                return Err(Error::Internal(format!(
                    "braid relation fails between generators {} and {}",
                    i + 1,
                    i + 2
                )));
            }
        }
        for i in 0..imgs.len() {
            for j in i + 2..imgs.len() {
                if imgs[i].mul(&imgs[j])? != imgs[j].mul(&imgs[i])? {
                    return Err(Error::Internal(format!(
                        "commutation fails between generators {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Image of a braid word under the representation.
    pub fn evaluate(&self, word: &BraidWord) -> Result<SympMatrix> {
        if word.strands() != self.n {
            return Err(Error::Precondition(format!(
                "word has {} strands, representation expects {}",
                word.strands(),
                self.n
            )));
        }
        let mut acc = SympMatrix::identity(self.g);
        for &letter in word.letters() {
            let idx = letter.unsigned_abs() as usize - 1;
            let m = if letter > 0 {
                self.gen_images[idx].clone()
            } else {
                self.gen_images[idx].inverse()
            };
            acc = acc.mul(&m)?;
        }
        Ok(acc)
    }
}

/// The homology action of the chain homomorphism: σ_i acts as the twist
/// along the i-th chain class, with `Sign::Minus` giving exact inverses.
/// The genus is `⌊(n-1)/2⌋`, the smallest surface carrying the chain.
pub fn standard_rep(n: usize, sign: Sign) -> Result<HomologyRepresentation> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "standard representation needs n >= 3, got {n}"
        )));
    }
    let g = (n - 1) / 2;
    let chain = chain_vectors(g, n - 1)?;
    let gen_images = chain
        .vectors()
        .iter()
        .map(|v| transvection_matrix(v, sign, g))
        .collect::<Result<Vec<_>>>()?;
    HomologyRepresentation::new(n, g, gen_images)
}

/// Replace every generator image `M_i` by `φ·M_i`. Requires `φ` to
/// commute with each image; the relations are re-verified on the result.
pub fn transvect_representation(
    rep: &HomologyRepresentation,
    phi: &SympMatrix,
) -> Result<HomologyRepresentation> {
    if phi.genus() != rep.genus() {
        return Err(Error::Precondition(format!(
            "genus mismatch: {} vs {}",
            phi.genus(),
            rep.genus()
        )));
    }
    for (i, m) in rep.gen_images().iter().enumerate() {
        if phi.mul(m)? != m.mul(phi)? {
            return Err(Error::NonCommuting { index: i + 1 });
        }
    }
    let images = rep
        .gen_images()
        .iter()
        .map(|m| phi.mul(m))
        .collect::<Result<Vec<_>>>()?;
    HomologyRepresentation::new(rep.n(), rep.genus(), images)
}

/// The exponents `k` in `[-kmax, kmax]` for which the k-th twist powers
/// along a pairing-1 pair still satisfy the braid relation. On homology
/// this happens exactly for `k ∈ {-1, 0, 1}`.
pub fn braid_power_test(g: usize, kmax: u64) -> Result<Vec<i64>> {
    if g < 1 || kmax < 1 {
        return Err(Error::Precondition(
            "braid power test needs g >= 1 and kmax >= 1".into(),
        ));
    }
    let mut a = vec![BigInt::zero(); 2 * g];
    a[0] = BigInt::one(); // a_1
    let mut b = vec![BigInt::zero(); 2 * g];
    b[g] = BigInt::one(); // b_1, with ⟨a_1, b_1⟩ = 1
    let ta = transvection_matrix(&a, Sign::Plus, g)?;
    let tb = transvection_matrix(&b, Sign::Plus, g)?;
    let kmax = kmax as i64;
    let mut found = Vec::new();
    for k in -kmax..=kmax {
        let ak = ta.pow_signed(k);
        let bk = tb.pow_signed(k);
        let aba = ak.mul(&bk)?.mul(&ak)?;
        let bab = bk.mul(&ak)?.mul(&bk)?;
        if aba == bab {
            found.push(k);
        }
    }
    Ok(found)
}

/// Homology classes of a lantern configuration on a genus-3 surface with
/// all seven curves nonseparating and no two bounding: the three boundary
/// classes are the handle classes `a_1, a_2, a_3`, the interior curve
/// around handles i and j has class `a_i + a_j`, and the outer boundary
/// class is `a_1 + a_2 + a_3`. Order: `[c, x_1, d_1, x_2, d_2, x_3, d_3]`
/// matching the relation `T_c = T_{x_1}T_{d_1}⁻¹T_{x_2}T_{d_2}⁻¹T_{x_3}T_{d_3}⁻¹`.
pub fn lantern_genus3_classes() -> [Vec<BigInt>; 7] {
    [
        vec_bigint(&[1, 1, 1, 0, 0, 0]), // c
        vec_bigint(&[1, 1, 0, 0, 0, 0]), // x_1 around handles 1,2
        vec_bigint(&[1, 0, 0, 0, 0, 0]), // d_1
        vec_bigint(&[0, 1, 1, 0, 0, 0]), // x_2 around handles 2,3
        vec_bigint(&[0, 1, 0, 0, 0, 0]), // d_2
        vec_bigint(&[1, 0, 1, 0, 0, 0]), // x_3 around handles 1,3
        vec_bigint(&[0, 0, 1, 0, 0, 0]), // d_3
    ]
}

/// Check the lantern identity on homology for caller-supplied classes
/// `[c, x_1, d_1, x_2, d_2, x_3, d_3]`: all pairwise pairings must vanish
/// (the seven curves are disjoint or meet with algebraic count zero), and
/// `T_c = T_{x_1}T_{d_1}⁻¹T_{x_2}T_{d_2}⁻¹T_{x_3}T_{d_3}⁻¹` must hold as
/// matrices. A false return signals classes that do not come from a
/// genuine embedded lantern.
pub fn verify_lantern(classes: &[Vec<BigInt>; 7]) -> Result<bool> {
    let d = classes[0].len();
    if d == 0 || d % 2 != 0 {
        return Err(Error::VectorLength {
            got: d,
            expected: d + d % 2,
        });
    }
    let g = d / 2;
    for v in classes.iter() {
        if v.len() != d {
            return Err(Error::VectorLength {
                got: v.len(),
                expected: d,
            });
        }
    }
    for i in 0..7 {
        for j in i + 1..7 {
            if !pairing(&classes[i], &classes[j], g).is_zero() {
                return Ok(false);
            }
        }
    }
    let t = |idx: usize, sign: Sign| transvection_matrix(&classes[idx], sign, g);
    let lhs = t(0, Sign::Plus)?;
    let rhs = t(1, Sign::Plus)?
        .mul(&t(2, Sign::Minus)?)?
        .mul(&t(3, Sign::Plus)?)?
        .mul(&t(4, Sign::Minus)?)?
        .mul(&t(5, Sign::Plus)?)?
        .mul(&t(6, Sign::Minus)?)?;
    Ok(lhs == rhs)
}

/// What the product of four chain twists does on homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRelationReport {
    /// Multiplicative order of the product, if at most 200.
    pub order: Option<u64>,
    pub fifth_power_is_neg_identity: bool,
    pub tenth_power_is_identity: bool,
}

/// Report on a product of twists along arbitrary classes.
pub fn twist_product_report(vectors: &[Vec<BigInt>], g: usize) -> Result<ChainRelationReport> {
    let mut p = SympMatrix::identity(g);
    for v in vectors {
        p = p.mul(&transvection_matrix(v, Sign::Plus, g)?)?;
    }
    let p5 = p.pow(5);
    let p10 = p5.mul(&p5)?;
    let mut order = None;
    let mut power = SympMatrix::identity(g);
    for e in 1..=200u64 {
        power = power.mul(&p)?;
        if power.is_identity() {
            order = Some(e);
            break;
        }
    }
    Ok(ChainRelationReport {
        order,
        fifth_power_is_neg_identity: p5 == SympMatrix::neg_identity(g),
        tenth_power_is_identity: p10.is_identity(),
    })
}

/// The 4-chain product on `H_1(S_g)`. The boundary of a neighborhood of
/// the chain is nullhomologous, so its twist acts trivially; the report
/// records the order of the product and its fifth and tenth powers.
pub fn verify_chain_relation(g: usize) -> Result<ChainRelationReport> {
    if g < 2 {
        return Err(Error::Precondition(format!(
            "chain relation check needs g >= 2, got {g}"
        )));
    }
    let chain = chain_vectors(g, 4)?;
    twist_product_report(chain.vectors(), g)
}

/// Homology classes of the standard `2g + 1` twist generating set for the
/// mapping class group of a closed genus-g surface: the two handle
/// classes `a_1, a_2`, all of `b_1..b_g`, and the connecting classes
/// `a_i + a_{i+1}` for `i < g`.
pub fn humphries_classes(g: usize) -> Result<Vec<Vec<BigInt>>> {
    if g < 2 {
        return Err(Error::Precondition(format!(
            "generating configuration needs g >= 2, got {g}"
        )));
    }
    let d = 2 * g;
    let unit = |i: usize| {
        let mut v = vec![BigInt::zero(); d];
        v[i] = BigInt::one();
        v
    };
    let mut classes = vec![unit(0), unit(1)]; // a_1, a_2
    for i in 0..g {
        classes.push(unit(g + i)); // b_{i+1}
    }
    for i in 0..g - 1 {
        let mut v = vec![BigInt::zero(); d];
        v[i] = BigInt::one();
        v[i + 1] = BigInt::one(); // a_{i+1} + a_{i+2}
        classes.push(v);
    }
    Ok(classes)
}

/// `|Sp(2g, p)| = p^(g²) · Π_{i=1..g} (p^(2i) - 1)`.
pub fn sp_group_order(g: usize, p: u64) -> u128 {
    let p = p as u128;
    let mut order = p.pow((g * g) as u32);
    for i in 1..=g {
        order *= p.pow(2 * i as u32) - 1;
    }
    order
}

/// Size of the subgroup of `Sp(2g, p)` generated by the transvections
/// along `classes`, by breadth-first closure. `p` must be 2 or 3 and the
/// dimension at most 6 so states pack into a `u128` key.
pub fn transvection_closure_mod_p(
    classes: &[Vec<BigInt>],
    g: usize,
    p: u64,
    bound: usize,
) -> Result<usize> {
    if !(p == 2 || p == 3) {
        return Err(Error::Precondition(format!(
            "modulus must be 2 or 3, got {p}"
        )));
    }
    let d = 2 * g;
    if d > 6 {
        return Err(Error::Precondition(format!(
            "closure supports dimension <= 6, got {d}"
        )));
    }
    let reduce = |m: &SympMatrix| -> Vec<u8> {
        m.entries
            .iter()
            .map(|e| {
                let r = e.mod_floor(&BigInt::from(p));
                u8::try_from(&r).expect("residue fits")
            })
            .collect()
    };
    let gens: Vec<Vec<u8>> = classes
        .iter()
        .map(|v| transvection_matrix(v, Sign::Plus, g).map(|m| reduce(&m)))
        .collect::<Result<_>>()?;
    let encode = |m: &[u8]| -> u128 {
        m.iter()
            .enumerate()
            .fold(0u128, |acc, (i, &x)| acc | (x as u128) << (2 * i))
    };
    let mat_mul = |a: &[u8], b: &[u8]| -> Vec<u8> {
        let mut out = vec![0u8; d * d];
        for i in 0..d {
            for k in 0..d {
                let av = a[i * d + k];
                if av == 0 {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] =
                        ((out[i * d + j] as u64 + av as u64 * b[k * d + j] as u64) % p) as u8;
                }
            }
        }
        out
    };
    let mut identity = vec![0u8; d * d];
    for i in 0..d {
        identity[i * d + i] = 1;
    }
    let mut seen = std::collections::HashSet::new();
    seen.insert(encode(&identity));
    let mut queue = vec![identity];
    while let Some(u) = queue.pop() {
        for gmat in &gens {
            let v = mat_mul(&u, gmat);
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

/// Outcome of the generating-set check mod a small prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HumphriesReport {
    pub closure_size: usize,
    pub group_order: u128,
    pub generates: bool,
}

/// Do the twists along the standard `2g+1` generating configuration
/// surject onto `Sp(2g, p)`? Decided by closure enumeration against the
/// group-order formula.
pub fn humphries_generation_check(g: usize, p_mod: u64) -> Result<HumphriesReport> {
    if !(g == 2 || g == 3) {
        return Err(Error::Precondition(format!(
            "generation check supports g in {{2, 3}}, got {g}"
        )));
    }
    let classes = humphries_classes(g)?;
    let closure_size = transvection_closure_mod_p(&classes, g, p_mod, MATRIX_CLOSURE_BOUND)?;
    let group_order = sp_group_order(g, p_mod);
    Ok(HumphriesReport {
        closure_size,
        group_order,
        generates: closure_size as u128 == group_order,
    })
}
