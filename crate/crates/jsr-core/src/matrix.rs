//! Exact rational matrices, matrix sets, and product words.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly::RatPoly;

/// Square matrix of exact rationals. The nonnegativity flag is recomputed at
/// construction and never trusted from input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BigRational>, // row-major, dim * dim
    nonneg: bool,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::NotSquare { rows: 0, row: 0, cols: 0 });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare { rows: dim, row: i, cols: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self::from_entries(dim, entries))
    }

    fn from_entries(dim: usize, entries: Vec<BigRational>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        let nonneg = entries.iter().all(|e| !e.is_negative());
        ExactMatrix { dim, entries, nonneg }
    }

    /// Convenience constructor from integer literals; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "ragged integer matrix literal");
            entries.extend(row.iter().map(|&v| BigRational::from(BigInt::from(v))));
        }
        Self::from_entries(dim, entries)
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_entries(dim, vec![BigRational::zero(); dim * dim])
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigRational::one();
        }
        m.nonneg = true;
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_nonneg(&self) -> bool {
        self.nonneg
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let v = &entries[i * n + j] + a * b;
                    entries[i * n + j] = v;
                }
            }
        }
        Self::from_entries(n, entries)
    }

    pub fn pow(&self, e: u64) -> ExactMatrix {
        let mut result = ExactMatrix::identity(self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn transpose(&self) -> ExactMatrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entries[j * n + i].clone());
            }
        }
        Self::from_entries(n, entries)
    }

    pub fn scale(&self, s: &BigRational) -> ExactMatrix {
        Self::from_entries(self.dim, self.entries.iter().map(|e| e * s).collect())
    }

    /// Entrywise `self <= other`.
    pub fn entrywise_le(&self, other: &ExactMatrix) -> bool {
        self.dim == other.dim
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn trace(&self) -> BigRational {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Maximum over rows of the sum of absolute values of entries.
    pub fn norm_row_sum(&self) -> BigRational {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).abs()).sum())
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Maximum over columns of the sum of absolute values of entries.
    pub fn norm_col_sum(&self) -> BigRational {
        let n = self.dim;
        (0..n)
            .map(|j| (0..n).map(|i| self.get(i, j).abs()).sum())
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Characteristic polynomial by the Faddeev-LeVerrier recurrence, exact.
    pub fn charpoly(&self) -> RatPoly {
        let n = self.dim;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = self.clone();
        for k in 1..=n {
            let c = -(m.trace() / BigRational::from(BigInt::from(k as i64)));
            coeffs[n - k] = c.clone();
            if k < n {
                for i in 0..n {
                    let v = &m.entries[i * n + i] + &c;
                    m.entries[i * n + i] = v;
                }
                m = self.mul(&m);
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    fn canonical_bytes(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(self.dim.to_string().as_bytes());
        out.push(b':');
        for e in &self.entries {
            out.extend_from_slice(e.to_string().as_bytes());
            out.push(b',');
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Nonempty ordered set of distinct matrices of uniform dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSet {
    dim: usize,
    members: Vec<ExactMatrix>,
}

impl MatrixSet {
    pub fn new(members: Vec<ExactMatrix>) -> Result<Self> {
        let dim = members.first().ok_or(Error::EmptySet)?.dim();
        for (i, m) in members.iter().enumerate() {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, member: i, got: m.dim() });
            }
        }
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                if members[i] == members[j] {
                    return Err(Error::DuplicateMember { first: i, second: j });
                }
            }
        }
        Ok(MatrixSet { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Sets are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn member(&self, i: usize) -> &ExactMatrix {
        &self.members[i]
    }

    pub fn members(&self) -> &[ExactMatrix] {
        &self.members
    }

    pub fn is_nonneg(&self) -> bool {
        self.members.iter().all(|m| m.is_nonneg())
    }

    pub fn is_integer(&self) -> bool {
        self.members.iter().all(|m| m.is_integer())
    }

    pub fn transposed(&self) -> MatrixSet {
        MatrixSet {
            dim: self.dim,
            members: self.members.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Entrywise scaling of every member; `alpha` must be nonzero so
    /// distinctness is preserved.
    pub fn scaled(&self, alpha: &BigRational) -> MatrixSet {
        assert!(!alpha.is_zero(), "scaling a set by zero collapses members");
        MatrixSet {
            dim: self.dim,
            members: self.members.iter().map(|m| m.scale(alpha)).collect(),
        }
    }

    /// Content hash of the set (dimension and exact entries, order-sensitive).
    pub fn digest(&self) -> String {
        let mut bytes = Vec::new();
        for m in &self.members {
            m.canonical_bytes(&mut bytes);
            bytes.push(b'|');
        }
        let mut hasher = Sha256::new();
        hasher.update(&bytes);
        let out = hasher.finalize();
        out.iter().map(|b| format!("{:02x}", b)).collect()
    }

    /// Least common multiple of all entry denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for m in &self.members {
            for e in m.entries() {
                l = l.lcm(e.denom());
            }
        }
        l
    }
}

/// Word over member labels denoting the product `A_{w[0]} * A_{w[1]} * ...`
/// (leftmost factor first).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductWord {
    indices: Vec<usize>,
}

impl ProductWord {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(ProductWord { indices })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    /// Words are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn concat(&self, other: &ProductWord) -> ProductWord {
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        ProductWord { indices }
    }

    pub fn reversed(&self) -> ProductWord {
        let mut indices = self.indices.clone();
        indices.reverse();
        ProductWord { indices }
    }

    /// Relabels indices through `map` (used when member order changes).
    pub fn relabeled(&self, map: &[usize]) -> ProductWord {
        ProductWord { indices: self.indices.iter().map(|&i| map[i]).collect() }
    }

    /// Lexicographically minimal cyclic rotation.
    pub fn min_rotation(&self) -> ProductWord {
        let n = self.indices.len();
        let mut best = self.indices.clone();
        for s in 1..n {
            let mut rot = Vec::with_capacity(n);
            rot.extend_from_slice(&self.indices[s..]);
            rot.extend_from_slice(&self.indices[..s]);
            if rot < best {
                best = rot;
            }
        }
        ProductWord { indices: best }
    }

    pub fn validate(&self, set: &MatrixSet) -> Result<()> {
        for &i in &self.indices {
            if i >= set.len() {
                return Err(Error::IndexOutOfRange { index: i, members: set.len() });
            }
        }
        Ok(())
    }
}

impl fmt::Display for ProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i)?;
        }
        Ok(())
    }
}

/// Exact product of the word over the set, leftmost factor applied first.
pub fn evaluate_word(set: &MatrixSet, word: &ProductWord) -> Result<ExactMatrix> {
    word.validate(set)?;
    let mut it = word.indices().iter();
    let first = *it.next().expect("words are nonempty");
    let mut acc = set.member(first).clone();
    for &i in it {
        acc = acc.mul(set.member(i));
    }
    Ok(acc)
}
