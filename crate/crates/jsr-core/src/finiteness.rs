//! Finiteness-property certificates, shortcut classifiers for pairs,
//! rho-in-{0,1} detection for nonnegative integer sets, canonical forms for
//! 2x2 pairs, and the stability semi-decider.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bounds::{bounds_report, radius_value, BoundsOptions};
use crate::error::{Error, Result};
use crate::matrix::{evaluate_word, ExactMatrix, MatrixSet, ProductWord};
use crate::value::{compare_values, AlgebraicValue, ValueOrdering};

/// Which argument produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CertificateRule {
    Symmetric,
    Domination,
    SubIdentity,
    RhoAtMostOne,
    RhoZero,
    Search,
    Census,
}

impl fmt::Display for CertificateRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertificateRule::Symmetric => "symmetric",
            CertificateRule::Domination => "domination",
            CertificateRule::SubIdentity => "sub-identity",
            CertificateRule::RhoAtMostOne => "rho-at-most-one",
            CertificateRule::RhoZero => "rho-zero",
            CertificateRule::Search => "search",
            CertificateRule::Census => "census",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateStatus {
    /// A closing argument pins `rho(set) = value` exactly.
    Certified,
    /// Best witness found; only the lower bound is guaranteed.
    CandidateOnly,
}

/// A finiteness-property witness: `value = rho(A_word)^(1/|word|)`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub word: ProductWord,
    pub value: AlgebraicValue,
    pub rule: CertificateRule,
    pub status: CertificateStatus,
}

impl Certificate {
    /// Recomputes the value from the word and checks it matches exactly.
    pub fn revalidate(&self, set: &MatrixSet) -> Result<bool> {
        let product = evaluate_word(set, &self.word)?;
        let recomputed = radius_value(&product, self.word.len() as u32);
        Ok(compare_values(&self.value, &recomputed) == ValueOrdering::Equal)
    }
}

fn require_nonneg(set: &MatrixSet) -> Result<()> {
    for m in set.members() {
        for i in 0..set.dim() {
            for j in 0..set.dim() {
                if m.get(i, j).is_negative() {
                    return Err(Error::NegativeEntry { row: i, col: j });
                }
            }
        }
    }
    Ok(())
}

fn require_nonneg_integer(set: &MatrixSet) -> Result<()> {
    require_nonneg(set)?;
    for m in set.members() {
        for i in 0..set.dim() {
            for j in 0..set.dim() {
                if !m.get(i, j).is_integer() {
                    return Err(Error::NonIntegerEntry { row: i, col: j });
                }
            }
        }
    }
    Ok(())
}

/// True iff the union support graph (entrywise OR of member supports) is
/// acyclic, which for nonnegative integer sets characterizes `rho = 0`:
/// a cycle can be assembled into a product with a unit diagonal entry, and
/// without cycles every product of length `dim` vanishes.
pub fn is_rho_zero(set: &MatrixSet) -> Result<bool> {
    require_nonneg_integer(set)?;
    let n = set.dim();
    let mut adj = vec![vec![false; n]; n];
    for m in set.members() {
        for (i, row) in adj.iter_mut().enumerate() {
            for (j, edge) in row.iter_mut().enumerate() {
                if !m.get(i, j).is_zero() {
                    *edge = true;
                }
            }
        }
    }
    // three-color DFS cycle detection
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    fn dfs(v: usize, adj: &[Vec<bool>], color: &mut [Color]) -> bool {
        color[v] = Color::Gray;
        for (u, &edge) in adj[v].iter().enumerate() {
            if !edge {
                continue;
            }
            match color[u] {
                Color::Gray => return true,
                Color::White => {
                    if dfs(u, adj, color) {
                        return true;
                    }
                }
                Color::Black => {}
            }
        }
        color[v] = Color::Black;
        false
    }
    let mut color = vec![Color::White; n];
    for v in 0..n {
        if color[v] == Color::White && dfs(v, &adj, &mut color) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First word (by length, then lexicographically) of length at most `depth`
/// whose product has a diagonal entry at least `threshold`. Finding one
/// proves `rho >= 1` (threshold 1) or `rho > 1` (threshold 2); absence
/// proves nothing.
pub fn has_diagonal_at_least(
    set: &MatrixSet,
    threshold: u32,
    depth: u32,
) -> Result<Option<ProductWord>> {
    require_nonneg_integer(set)?;
    if threshold != 1 && threshold != 2 {
        return Err(Error::InvalidThreshold(threshold));
    }
    let bound = BigRational::from(num_bigint::BigInt::from(threshold as i64));
    for t in 1..=depth {
        if let Some(w) = diag_scan(set, &bound, t) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Lexicographically first word of exactly length `t` whose product has a
/// diagonal entry `>= bound`.
fn diag_scan(set: &MatrixSet, bound: &BigRational, t: u32) -> Option<ProductWord> {
    fn rec(
        set: &MatrixSet,
        bound: &BigRational,
        prefix: &mut Vec<usize>,
        product: Option<ExactMatrix>,
        remaining: u32,
    ) -> Option<ProductWord> {
        if remaining == 0 {
            let p = product.expect("t >= 1");
            if (0..set.dim()).any(|i| p.get(i, i) >= bound) {
                return Some(ProductWord::new(prefix.clone()).expect("nonempty"));
            }
            return None;
        }
        for i in 0..set.len() {
            prefix.push(i);
            let next = match &product {
                None => set.member(i).clone(),
                Some(p) => p.mul(set.member(i)),
            };
            if let Some(w) = rec(set, bound, prefix, Some(next), remaining - 1) {
                return Some(w);
            }
            prefix.pop();
        }
        None
    }
    rec(set, bound, &mut Vec::new(), None, t)
}

/// Exact maximum of the members' spectral radii with its lex-least witness.
fn max_member_radius(set: &MatrixSet) -> (AlgebraicValue, usize) {
    let mut best = radius_value(set.member(0), 1);
    let mut index = 0;
    for i in 1..set.len() {
        let v = radius_value(set.member(i), 1);
        if compare_values(&v, &best) == ValueOrdering::Greater {
            best = v;
            index = i;
        }
    }
    (best, index)
}

/// Shortcut classifiers for pairs: symmetric members, a member below the
/// identity, and the entrywise domination/commutation rules. Each firing
/// rule certifies `rho(set) = max(rho(A_0), rho(A_1))` with a length-1
/// witness. Domination rules apply to nonnegative pairs only; the exact
/// member comparison needs dim <= 2 or nonnegativity.
pub fn classify_shortcuts(set: &MatrixSet) -> Result<Option<Certificate>> {
    if set.len() != 2 {
        return Err(Error::WrongCardinality { expected: 2, got: set.len() });
    }
    let a0 = set.member(0);
    let a1 = set.member(1);
    let comparable = set.dim() <= 2 || set.is_nonneg();
    if !comparable {
        return Ok(None);
    }
    let rule = if a0.is_symmetric() && a1.is_symmetric() {
        Some(CertificateRule::Symmetric)
    } else if set.is_nonneg() {
        let id = ExactMatrix::identity(set.dim());
        if a0.entrywise_le(&id) || a1.entrywise_le(&id) {
            Some(CertificateRule::SubIdentity)
        } else {
            let p01 = a0.mul(a1);
            let p10 = a1.mul(a0);
            let sq0 = a0.mul(a0);
            let sq1 = a1.mul(a1);
            let dominated = a0.entrywise_le(a1)
                || a1.entrywise_le(a0)
                || p01.entrywise_le(&sq1)
                || p10.entrywise_le(&sq1)
                || p10.entrywise_le(&sq0)
                || p01.entrywise_le(&sq0)
                || p01.entrywise_le(&p10)
                || p10.entrywise_le(&p01);
            dominated.then_some(CertificateRule::Domination)
        }
    } else {
        None
    };
    Ok(rule.map(|rule| {
        let (value, index) = max_member_radius(set);
        Certificate {
            word: ProductWord::new(vec![index]).expect("nonempty"),
            value,
            rule,
            status: CertificateStatus::Certified,
        }
    }))
}

/// Element of the order-8 symmetry group on 2x2 pairs: optional transpose of
/// both members, optional conjugation of both by the swap permutation, and
/// optional exchange of the member order. All three commute and are
/// involutions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PairTransform {
    pub transpose: bool,
    pub conj: bool,
    pub swap: bool,
}

impl PairTransform {
    pub fn is_identity(&self) -> bool {
        !self.transpose && !self.conj && !self.swap
    }

    pub fn compose(&self, other: &PairTransform) -> PairTransform {
        PairTransform {
            transpose: self.transpose ^ other.transpose,
            conj: self.conj ^ other.conj,
            swap: self.swap ^ other.swap,
        }
    }

    fn apply_member(&self, m: &ExactMatrix) -> ExactMatrix {
        let mut out = m.clone();
        if self.transpose {
            out = out.transpose();
        }
        if self.conj {
            out = conj_by_swap(&out);
        }
        out
    }

    pub fn apply(&self, pair: &MatrixSet) -> MatrixSet {
        let mut members: Vec<ExactMatrix> =
            pair.members().iter().map(|m| self.apply_member(m)).collect();
        if self.swap {
            members.reverse();
        }
        MatrixSet::new(members).expect("group action preserves set validity")
    }

    /// Transports a witness word across the transform: transposition
    /// reverses products, swapping relabels members, conjugation is silent.
    pub fn apply_to_word(&self, word: &ProductWord) -> ProductWord {
        let mut w = word.clone();
        if self.transpose {
            w = w.reversed();
        }
        if self.swap {
            w = w.relabeled(&[1, 0]);
        }
        w
    }
}

impl fmt::Display for PairTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let mut parts = Vec::new();
        if self.transpose {
            parts.push("transpose");
        }
        if self.conj {
            parts.push("conj");
        }
        if self.swap {
            parts.push("swap");
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// `S A S` for the swap permutation `S = [[0,1],[1,0]]`.
fn conj_by_swap(m: &ExactMatrix) -> ExactMatrix {
    ExactMatrix::from_rows(vec![
        vec![m.get(1, 1).clone(), m.get(1, 0).clone()],
        vec![m.get(0, 1).clone(), m.get(0, 0).clone()],
    ])
    .expect("2x2")
}

const PAIR_TRANSFORMS: [PairTransform; 8] = {
    let mut out = [PairTransform { transpose: false, conj: false, swap: false }; 8];
    let mut i = 0;
    while i < 8 {
        out[i] = PairTransform { transpose: i & 4 != 0, conj: i & 2 != 0, swap: i & 1 != 0 };
        i += 1;
    }
    out
};

fn pair_key(pair: &MatrixSet) -> Vec<BigRational> {
    let mut key = Vec::with_capacity(8);
    for m in pair.members() {
        key.extend(m.entries().iter().cloned());
    }
    key
}

/// Minimum of the pair's orbit under the order-8 group, under the
/// lexicographic order on flattened entries, together with the transform
/// that maps the input onto the canonical representative. Certificates
/// transport through [`PairTransform::apply_to_word`].
pub fn canonical_pair(pair: &MatrixSet) -> Result<(MatrixSet, PairTransform)> {
    if pair.len() != 2 {
        return Err(Error::WrongCardinality { expected: 2, got: pair.len() });
    }
    if pair.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: pair.dim() });
    }
    let mut best: Option<(Vec<BigRational>, MatrixSet, PairTransform)> = None;
    for g in PAIR_TRANSFORMS {
        let image = g.apply(pair);
        let key = pair_key(&image);
        let replace = match &best {
            None => true,
            Some((bk, _, _)) => key < *bk,
        };
        if replace {
            best = Some((key, image, g));
        }
    }
    let (_, canon, g) = best.expect("orbit is nonempty");
    Ok((canon, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilityOutcome {
    Stable,
    Unstable,
    Undecided,
}

impl fmt::Display for StabilityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityOutcome::Stable => write!(f, "stable"),
            StabilityOutcome::Unstable => write!(f, "unstable"),
            StabilityOutcome::Undecided => write!(f, "undecided"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum StabilityWitness {
    /// Norm bound proving `rho < 1` at the recorded depth.
    UpperBound { t: u32, value: AlgebraicValue },
    /// Product witnessing `rho >= 1`.
    Lower(Box<Certificate>),
    /// Best bracket when the search was exhausted.
    Bracket { lower: AlgebraicValue, upper: AlgebraicValue },
}

#[derive(Clone, Debug)]
pub struct StabilityVerdict {
    pub outcome: StabilityOutcome,
    pub depth_reached: u32,
    pub witness: StabilityWitness,
}

/// Iterates depths `1..=t_max`: stable as soon as some `upper_t < 1`,
/// unstable as soon as some `lower_t >= 1`, undecided at exhaustion (the
/// underlying question is undecidable at `rho = 1`, so no deeper fallback is
/// attempted).
pub fn semi_decide_stability(
    set: &MatrixSet,
    t_max: u32,
    opts: &BoundsOptions,
) -> Result<StabilityVerdict> {
    require_nonneg(set)?;
    if t_max < 1 {
        return Err(Error::DepthZero);
    }
    let one = AlgebraicValue::one();
    let report = bounds_report(set, t_max, opts)?;
    for (lower, upper) in report.lower_per_t.iter().zip(&report.upper_per_t) {
        if upper.norm_max < BigRational::one() {
            return Ok(StabilityVerdict {
                outcome: StabilityOutcome::Stable,
                depth_reached: upper.t,
                witness: StabilityWitness::UpperBound { t: upper.t, value: upper.value.clone() },
            });
        }
        match compare_values(&lower.value, &one) {
            ValueOrdering::Greater | ValueOrdering::Equal => {
                return Ok(StabilityVerdict {
                    outcome: StabilityOutcome::Unstable,
                    depth_reached: lower.t,
                    witness: StabilityWitness::Lower(Box::new(Certificate {
                        word: lower.witness.clone(),
                        value: lower.value.clone(),
                        rule: CertificateRule::Search,
                        status: CertificateStatus::CandidateOnly,
                    })),
                });
            }
            _ => {}
        }
    }
    Ok(StabilityVerdict {
        outcome: StabilityOutcome::Undecided,
        depth_reached: t_max,
        witness: StabilityWitness::Bracket {
            lower: report.best_lower.value.clone(),
            upper: report.best_upper.value.clone(),
        },
    })
}
