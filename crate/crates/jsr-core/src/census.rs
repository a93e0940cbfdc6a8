//! Complete census of the 120 unordered pairs of distinct 2x2 binary
//! matrices: every pair is classified through canonical reduction, the
//! shortcut classifiers, rho-in-{0,1} detection, a golden-case table for the
//! handful of genuinely hard classes, and a bounded certificate search as
//! the last resort. Every certified value is cross-checked against the
//! bracketing engine before a record is emitted.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::bounds::{bounds_report, radius_value, BoundsOptions, BoundsReport};
use crate::error::{Error, Result};
use crate::finiteness::{
    canonical_pair, classify_shortcuts, has_diagonal_at_least, is_rho_zero, Certificate,
    CertificateRule, CertificateStatus, PairTransform,
};
use crate::matrix::{evaluate_word, ExactMatrix, MatrixSet, ProductWord};
use crate::value::{compare_values, AlgebraicValue, ValueOrdering};

/// The 2x2 binary matrix encoded by the low four bits of `bits`, row-major:
/// `8*a00 + 4*a01 + 2*a10 + 1*a11`.
pub fn matrix_from_bits(bits: u8) -> ExactMatrix {
    let b = |k: u8| ((bits >> k) & 1) as i64;
    ExactMatrix::from_i64(&[&[b(3), b(2)], &[b(1), b(0)]])
}

/// Inverse of [`matrix_from_bits`]; None unless all entries are 0 or 1.
pub fn matrix_to_bits(m: &ExactMatrix) -> Option<u8> {
    if m.dim() != 2 {
        return None;
    }
    let mut bits = 0u8;
    for i in 0..2 {
        for j in 0..2 {
            let e = m.get(i, j);
            bits <<= 1;
            if e.is_one() {
                bits |= 1;
            } else if !num_traits::Zero::is_zero(e) {
                return None;
            }
        }
    }
    Some(bits)
}

/// Row-major 0/1 string, e.g. `"0110"` for the swap matrix.
pub fn bits_string(m: &ExactMatrix) -> Option<String> {
    matrix_to_bits(m).map(|b| format!("{:04b}", b))
}

fn pair_key_string(pair: &MatrixSet) -> String {
    format!(
        "{}|{}",
        bits_string(pair.member(0)).expect("binary member"),
        bits_string(pair.member(1)).expect("binary member"),
    )
}

/// All 120 unordered pairs of distinct 2x2 binary matrices, ordered by the
/// bit encodings of their members.
pub fn enumerate_pairs() -> Vec<MatrixSet> {
    let mut out = Vec::with_capacity(120);
    for i in 0..16u8 {
        for j in (i + 1)..16 {
            out.push(
                MatrixSet::new(vec![matrix_from_bits(i), matrix_from_bits(j)])
                    .expect("distinct members"),
            );
        }
    }
    out
}

/// Run-length form `A1^t1 A0 A1^t2 A0 ... A1^tl` of a word over a pair,
/// with label 0 the separator matrix and label 1 the run matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFactorization {
    pub exponents: Vec<u32>,
}

impl BFactorization {
    pub fn from_word(word: &ProductWord) -> BFactorization {
        let mut exponents = Vec::new();
        let mut run = 0u32;
        for &i in word.indices() {
            if i == 0 {
                exponents.push(run);
                run = 0;
            } else {
                run += 1;
            }
        }
        exponents.push(run);
        BFactorization { exponents }
    }

    /// Rebuilds the word; fails only for the empty encoding `[0]`.
    pub fn to_word(&self) -> Result<ProductWord> {
        let mut indices = Vec::new();
        for (k, &t) in self.exponents.iter().enumerate() {
            indices.extend(std::iter::repeat_n(1, t as usize));
            if k + 1 < self.exponents.len() {
                indices.push(0);
            }
        }
        ProductWord::new(indices)
    }
}

/// One census row. The certificate value always equals the engine's best
/// lower bound at the census depth; construction fails otherwise.
#[derive(Clone, Debug)]
pub struct CensusRecord {
    pub pair: MatrixSet,
    pub canonical_key: String,
    pub transform: PairTransform,
    pub rule_chain: Vec<String>,
    pub certificate: Certificate,
    pub exact_value: AlgebraicValue,
    pub lower_at_depth: AlgebraicValue,
    pub upper_at_depth: AlgebraicValue,
    /// Outward-rounded rational bound on `upper_at_depth - exact_value`.
    pub bounds_gap: BigRational,
    pub depth: u32,
}

struct GoldenCase {
    name: &'static str,
    members: [u8; 2],
    /// Certificate word in this orientation. For the class the paper calls
    /// Sigma_2 the stored word is A1^2 A0: the published A1^3 A0 does not
    /// attain the joint spectral radius (rho(A1^2 A0) = 3 gives 3^(1/3),
    /// strictly above sqrt(2)), and the value cross-check below would
    /// reject it.
    word: &'static [usize],
}

const GOLDEN: [GoldenCase; 5] = [
    // {[[0,1],[0,0]], [[1,0],[1,1]]} -> 4^(1/5) by A1^4 A0
    GoldenCase { name: "sigma0", members: [0b0100, 0b1011], word: &[1, 1, 1, 1, 0] },
    // {[[1,1],[0,0]], [[1,0],[1,0]]} -> sqrt(2) by A0 A1
    GoldenCase { name: "sigma1", members: [0b1100, 0b1010], word: &[0, 1] },
    // {[[1,0],[1,0]], [[1,1],[0,1]]} -> 3^(1/3) by A1^2 A0
    GoldenCase { name: "sigma2", members: [0b1010, 0b1101], word: &[1, 1, 0] },
    // {[[0,1],[1,0]], [[1,1],[0,1]]} -> ((3+sqrt(13))/2)^(1/4) by A1^3 A0
    GoldenCase { name: "sigma3", members: [0b0110, 0b1101], word: &[1, 1, 1, 0] },
    // {[[1,1],[0,1]], [[1,0],[1,1]]} -> (1+sqrt(5))/2 by A0 A1
    GoldenCase { name: "pascal", members: [0b1101, 0b1011], word: &[0, 1] },
];

impl GoldenCase {
    fn pair(&self) -> MatrixSet {
        MatrixSet::new(vec![matrix_from_bits(self.members[0]), matrix_from_bits(self.members[1])])
            .expect("distinct members")
    }

    fn word(&self) -> ProductWord {
        ProductWord::new(self.word.to_vec()).expect("nonempty")
    }
}

fn require_binary_pair(pair: &MatrixSet) -> Result<()> {
    if pair.len() != 2 {
        return Err(Error::WrongCardinality { expected: 2, got: pair.len() });
    }
    if pair.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: pair.dim() });
    }
    for m in pair.members() {
        if matrix_to_bits(m).is_none() {
            return Err(Error::Unsupported(
                "census classification requires binary entries".into(),
            ));
        }
    }
    Ok(())
}

fn certificate_value(pair: &MatrixSet, word: &ProductWord) -> Result<AlgebraicValue> {
    let product = evaluate_word(pair, word)?;
    Ok(radius_value(&product, word.len() as u32))
}

/// Classifies one pair through the full decision cascade and cross-checks
/// the certified value against the bracketing report at `depth`.
pub fn classify_pair(pair: &MatrixSet, depth: u32, opts: &BoundsOptions) -> Result<CensusRecord> {
    require_binary_pair(pair)?;
    let (canon, transform) = canonical_pair(pair)?;
    let mut rule_chain = vec![format!("canonical({})", transform)];
    let report = bounds_report(pair, depth, opts)?;
    let one = BigRational::one();

    let certificate = if let Some(cert) = classify_shortcuts(&canon)? {
        rule_chain.push(cert.rule.to_string());
        let word = transform.apply_to_word(&cert.word);
        let value = certificate_value(pair, &word)?;
        Certificate { word, value, rule: cert.rule, status: CertificateStatus::Certified }
    } else if is_rho_zero(&canon)? {
        rule_chain.push(CertificateRule::RhoZero.to_string());
        let word = ProductWord::new(vec![0]).expect("nonempty");
        let value = certificate_value(pair, &word)?;
        Certificate { word, value, rule: CertificateRule::RhoZero, status: CertificateStatus::Certified }
    } else if report.upper_per_t.iter().any(|u| u.norm_max <= one) {
        // some norm maximum at depth t is <= 1, so rho <= 1; a cycle exists
        // (rho-zero did not fire), so a unit-diagonal product pins rho = 1
        rule_chain.push(CertificateRule::RhoAtMostOne.to_string());
        let word = has_diagonal_at_least(pair, 1, 4)?.ok_or_else(|| {
            Error::IdentityViolation(
                "cycle present but no unit-diagonal product of length <= 4".into(),
            )
        })?;
        let value = certificate_value(pair, &word)?;
        if compare_values(&value, &AlgebraicValue::one()) != ValueOrdering::Equal {
            return Err(Error::IdentityViolation(
                "unit-diagonal witness does not have spectral radius 1".into(),
            ));
        }
        Certificate {
            word,
            value,
            rule: CertificateRule::RhoAtMostOne,
            status: CertificateStatus::Certified,
        }
    } else if let Some(golden) =
        GOLDEN.iter().find(|g| canonical_key_of(&g.pair()) == pair_key_string(&canon))
    {
        rule_chain.push(format!("golden({})", golden.name));
        let (_, g_gold) = canonical_pair(&golden.pair())?;
        let word_canon = g_gold.apply_to_word(&golden.word());
        let word = transform.apply_to_word(&word_canon);
        let value = certificate_value(pair, &word)?;
        Certificate { word, value, rule: CertificateRule::Census, status: CertificateStatus::Certified }
    } else {
        let closed = compare_values(&report.best_lower.value, &report.best_upper.value)
            == ValueOrdering::Equal;
        rule_chain.push(if closed { "search-closed".into() } else { "search-open".into() });
        Certificate {
            word: report.best_lower.witness.clone(),
            value: report.best_lower.value.clone(),
            rule: CertificateRule::Search,
            status: if closed {
                CertificateStatus::Certified
            } else {
                CertificateStatus::CandidateOnly
            },
        }
    };

    // every certificate, whatever produced it, must agree with the engine
    if compare_values(&certificate.value, &report.best_lower.value) != ValueOrdering::Equal {
        return Err(Error::IdentityViolation(format!(
            "certificate value {} disagrees with best lower bound {} for pair {}",
            certificate.value,
            report.best_lower.value,
            pair_key_string(pair),
        )));
    }
    let upper_at_depth = report.upper_per_t.last().expect("depth >= 1").value.clone();
    if compare_values(&certificate.value, &upper_at_depth) == ValueOrdering::Greater {
        return Err(Error::IdentityViolation(format!(
            "certificate value exceeds the depth-{} upper bound for pair {}",
            depth,
            pair_key_string(pair),
        )));
    }
    let bounds_gap = gap_bound(&upper_at_depth, &certificate.value);
    Ok(CensusRecord {
        pair: pair.clone(),
        canonical_key: pair_key_string(&canon),
        transform,
        rule_chain,
        exact_value: certificate.value.clone(),
        lower_at_depth: report.best_lower.value.clone(),
        upper_at_depth,
        bounds_gap,
        depth,
        certificate,
    })
}

fn canonical_key_of(pair: &MatrixSet) -> String {
    let (canon, _) = canonical_pair(pair).expect("2x2 pair");
    pair_key_string(&canon)
}

/// Outward rational bound on `upper - value` from fine enclosures.
fn gap_bound(upper: &AlgebraicValue, value: &AlgebraicValue) -> BigRational {
    let eps = BigRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 15));
    let u = upper.enclosure(&eps);
    let v = value.enclosure(&eps);
    let g = &u.hi - &v.lo;
    if g < BigRational::from(num_bigint::BigInt::from(0)) {
        BigRational::from(num_bigint::BigInt::from(0))
    } else {
        g
    }
}

#[derive(Clone, Debug)]
pub struct CensusSummary {
    pub total: usize,
    pub per_rule: BTreeMap<String, usize>,
    pub candidate_only: usize,
    pub max_certificate_len: usize,
}

/// Classifies all 120 pairs. `jobs > 1` distributes pairs across threads;
/// the output order and content are independent of scheduling.
pub fn run_census(
    depth: u32,
    opts: &BoundsOptions,
    jobs: usize,
) -> Result<(Vec<CensusRecord>, CensusSummary)> {
    let pairs = enumerate_pairs();
    let records: Result<Vec<CensusRecord>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool construction");
        pool.install(|| pairs.par_iter().map(|p| classify_pair(p, depth, opts)).collect())
    } else {
        pairs.iter().map(|p| classify_pair(p, depth, opts)).collect()
    };
    let records = records?;
    let mut per_rule = BTreeMap::new();
    let mut candidate_only = 0;
    let mut max_certificate_len = 0;
    for r in &records {
        *per_rule.entry(r.certificate.rule.to_string()).or_insert(0) += 1;
        if r.certificate.status == CertificateStatus::CandidateOnly {
            candidate_only += 1;
        }
        max_certificate_len = max_certificate_len.max(r.certificate.word.len());
    }
    let summary = CensusSummary {
        total: records.len(),
        per_rule,
        candidate_only,
        max_certificate_len,
    };
    Ok((records, summary))
}

/// One entrywise rewrite inequality from the analysis of the hardest pair.
#[derive(Clone, Debug)]
pub struct RewriteCheck {
    pub name: String,
    pub holds: bool,
    /// Set when strictness matters: whether the inequality is strict in
    /// every entry.
    pub strict: Option<bool>,
}

fn entrywise_ge(a: &ExactMatrix, b: &ExactMatrix) -> bool {
    b.entrywise_le(a)
}

fn entrywise_gt(a: &ExactMatrix, b: &ExactMatrix) -> bool {
    (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.get(i, j) > b.get(i, j)))
}

/// Verifies the entrywise replacement inequalities behind the value
/// `((3+sqrt(13))/2)^(1/4)` with exact rationals: products of the form
/// `B_t = A1^t A0` over the pair {swap, upper-triangular}.
pub fn sigma3_rewrite_checks() -> Vec<RewriteCheck> {
    let sigma3 = MatrixSet::new(vec![
        ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        ExactMatrix::from_i64(&[&[1, 1], &[0, 1]]),
    ])
    .expect("distinct members");
    let b = |t: u32| -> ExactMatrix {
        let word = BFactorization { exponents: vec![t, 0] }.to_word().expect("nonempty");
        evaluate_word(&sigma3, &word).expect("valid word")
    };
    let rat = |p: i64, q: i64| BigRational::new(p.into(), q.into());
    let mut out = Vec::new();
    // (a) B_{t-3} B_2 >= B_t kills runs longer than four
    for t in 5..=10 {
        let lhs = b(t - 3).mul(&b(2));
        out.push(RewriteCheck {
            name: format!("B{}*B2 >= B{}", t - 3, t),
            holds: entrywise_ge(&lhs, &b(t)),
            strict: None,
        });
    }
    // (b) factors B_4 are rare: B3 >= (3/4) B4 and B3^3 >= (33/4) B4
    out.push(RewriteCheck {
        name: "B3 >= (3/4)*B4".into(),
        holds: entrywise_ge(&b(3), &b(4).scale(&rat(3, 4))),
        strict: None,
    });
    let b3cubed = b(3).mul(&b(3)).mul(&b(3));
    out.push(RewriteCheck {
        name: "B3^3 >= (33/4)*B4".into(),
        holds: entrywise_ge(&b3cubed, &b(4).scale(&rat(33, 4))),
        strict: None,
    });
    // (c) displayed replacement rules removing B_1 factors
    for i in [2u32, 3] {
        for j in [2u32, 3] {
            let lhs = b(i).mul(&b(1)).mul(&b(1)).mul(&b(j));
            let rhs = b(i).mul(&b(3)).mul(&b(j));
            out.push(RewriteCheck {
                name: format!("B{}*B1*B1*B{} <= B{}*B3*B{}", i, j, i, j),
                holds: entrywise_ge(&rhs, &lhs),
                strict: None,
            });
        }
    }
    let b2 = b(2);
    let b3 = b(3);
    let b2cubed = b2.mul(&b2).mul(&b2);
    out.push(RewriteCheck {
        name: "B2*B1*B2 <= B3*B3".into(),
        holds: entrywise_ge(&b3.mul(&b3), &b2.mul(&b(1)).mul(&b2)),
        strict: None,
    });
    out.push(RewriteCheck {
        name: "B3*B1*B2 <= B2*B2*B2".into(),
        holds: entrywise_ge(&b2cubed, &b3.mul(&b(1)).mul(&b2)),
        strict: None,
    });
    out.push(RewriteCheck {
        name: "B2*B1*B3 <= B2*B2*B2".into(),
        holds: entrywise_ge(&b2cubed, &b2.mul(&b(1)).mul(&b3)),
        strict: None,
    });
    // (d) B2^3 >= (4/5) B3 B1 B3
    out.push(RewriteCheck {
        name: "B2^3 >= (4/5)*B3*B1*B3".into(),
        holds: entrywise_ge(&b2cubed, &b3.mul(&b(1)).mul(&b3).scale(&rat(4, 5))),
        strict: None,
    });
    // (e) B3^2 X > (27/20) B3 B2 X, and B3^2 B2 X <= (24349/10000) B3^2 X
    for (label, x) in [("B2", b2.clone()), ("B3", b3.clone())] {
        let lhs = b3.mul(&b3).mul(&x);
        let rhs = b3.mul(&b2).mul(&x).scale(&rat(27, 20));
        out.push(RewriteCheck {
            name: format!("B3^2*{} >= (27/20)*B3*B2*{}", label, label),
            holds: entrywise_ge(&lhs, &rhs),
            strict: Some(entrywise_gt(&lhs, &rhs)),
        });
        let lhs2 = b3.mul(&b3).mul(&x).scale(&rat(24349, 10000));
        let rhs2 = b3.mul(&b3).mul(&b2).mul(&x);
        out.push(RewriteCheck {
            name: format!("(24349/10000)*B3^2*{} >= B3^2*B2*{}", label, label),
            holds: entrywise_ge(&lhs2, &rhs2),
            strict: None,
        });
    }
    out
}

/// Brute-force bracketing rows for pairs of binary matrices of a given
/// dimension; no classification is attempted. This backs the exploratory
/// census for dimension 3, where only the bracketing is meaningful.
pub fn bracket_pair(
    pair: &MatrixSet,
    depth: u32,
    opts: &BoundsOptions,
) -> Result<BoundsReport> {
    bounds_report(pair, depth, opts)
}

/// Row-major 0/1 string for a binary matrix of any dimension.
pub fn binary_string(m: &ExactMatrix) -> Option<String> {
    let n = m.dim();
    let mut s = String::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            if e.is_one() {
                s.push('1');
            } else if num_traits::Zero::is_zero(e) {
                s.push('0');
            } else {
                return None;
            }
        }
    }
    Some(s)
}

/// The 3x3 binary matrix encoded by the low nine bits, row-major.
pub fn matrix3_from_bits(bits: u16) -> ExactMatrix {
    let b = |k: u16| ((bits >> k) & 1) as i64;
    ExactMatrix::from_i64(&[
        &[b(8), b(7), b(6)],
        &[b(5), b(4), b(3)],
        &[b(2), b(1), b(0)],
    ])
}

/// First `limit` unordered pairs of distinct 3x3 binary matrices in bit
/// order, for the exploratory bracketing census.
pub fn census_dim3_pairs(limit: usize) -> Vec<MatrixSet> {
    let mut out = Vec::with_capacity(limit);
    'outer: for i in 0..512u16 {
        for j in (i + 1)..512 {
            if out.len() >= limit {
                break 'outer;
            }
            out.push(
                MatrixSet::new(vec![matrix3_from_bits(i), matrix3_from_bits(j)])
                    .expect("distinct members"),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surd::QuadSurd;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn pair_enumeration() {
        let pairs = enumerate_pairs();
        assert_eq!(pairs.len(), 120);
        for p in &pairs {
            assert_ne!(p.member(0), p.member(1));
        }
        // each matrix appears in exactly 15 pairs
        for b in 0..16u8 {
            let m = matrix_from_bits(b);
            let count = pairs
                .iter()
                .filter(|p| *p.member(0) == m || *p.member(1) == m)
                .count();
            assert_eq!(count, 15);
        }
    }

    #[test]
    fn bits_roundtrip() {
        for b in 0..16u8 {
            assert_eq!(matrix_to_bits(&matrix_from_bits(b)), Some(b));
        }
        assert_eq!(matrix_to_bits(&ExactMatrix::from_i64(&[&[2, 0], &[0, 0]])), None);
        assert_eq!(bits_string(&matrix_from_bits(0b0110)).unwrap(), "0110");
    }

    #[test]
    fn bfactorization_roundtrip() {
        let w = ProductWord::new(vec![1, 1, 1, 1, 0]).unwrap();
        let f = BFactorization::from_word(&w);
        assert_eq!(f.exponents, vec![4, 0]);
        assert_eq!(f.to_word().unwrap(), w);
        let w = ProductWord::new(vec![0, 0]).unwrap();
        let f = BFactorization::from_word(&w);
        assert_eq!(f.exponents, vec![0, 0, 0]);
        assert_eq!(f.to_word().unwrap(), w);
        let w = ProductWord::new(vec![1, 0, 1, 1]).unwrap();
        let f = BFactorization::from_word(&w);
        assert_eq!(f.exponents, vec![1, 2]);
        assert_eq!(f.to_word().unwrap(), w);
    }

    #[test]
    fn golden_classifications() {
        let opts = BoundsOptions::default();
        // Sigma_0 -> 4^(1/5) with a length-5 certificate
        let g = &GOLDEN[0];
        let rec = classify_pair(&g.pair(), 12, &opts).unwrap();
        let expect = AlgebraicValue::nth_root_of_rational(rat(4, 1), 5);
        assert_eq!(compare_values(&rec.exact_value, &expect), ValueOrdering::Equal);
        assert_eq!(rec.certificate.word.len(), 5);
        assert_eq!(rec.certificate.rule, CertificateRule::Census);
        assert!(rec.certificate.revalidate(&g.pair()).unwrap());

        // Sigma_2 -> 3^(1/3) with a length-3 certificate (see GoldenCase)
        let g = &GOLDEN[2];
        let rec = classify_pair(&g.pair(), 12, &opts).unwrap();
        let expect = AlgebraicValue::nth_root_of_rational(rat(3, 1), 3);
        assert_eq!(compare_values(&rec.exact_value, &expect), ValueOrdering::Equal);
        assert_eq!(rec.certificate.word.len(), 3);

        // Pascal pair -> (1+sqrt(5))/2 with a length-2 certificate
        let g = &GOLDEN[4];
        let rec = classify_pair(&g.pair(), 12, &opts).unwrap();
        let phi = AlgebraicValue::nth_root_of_surd(
            QuadSurd::new(rat(1, 2), rat(1, 2), BigInt::from(5)),
            1,
        );
        assert_eq!(compare_values(&rec.exact_value, &phi), ValueOrdering::Equal);
        assert_eq!(rec.certificate.word.len(), 2);
    }

    #[test]
    fn golden_orbits_classify_like_their_representatives() {
        let opts = BoundsOptions::default();
        // a transposed-and-swapped copy of Sigma_3 lands in the same class
        let sigma3 = GOLDEN[3].pair();
        let moved = MatrixSet::new(vec![
            sigma3.member(1).transpose(),
            sigma3.member(0).transpose(),
        ])
        .unwrap();
        let a = classify_pair(&sigma3, 10, &opts).unwrap();
        let b = classify_pair(&moved, 10, &opts).unwrap();
        assert_eq!(a.canonical_key, b.canonical_key);
        assert_eq!(compare_values(&a.exact_value, &b.exact_value), ValueOrdering::Equal);
        assert!(b.certificate.revalidate(&moved).unwrap());
    }

    #[test]
    fn rewrite_checks_all_pass() {
        let checks = sigma3_rewrite_checks();
        assert_eq!(checks.len(), 6 + 2 + 4 + 3 + 1 + 4);
        for c in &checks {
            assert!(c.holds, "failed: {}", c.name);
        }
        // the (27/20) replacements are strict in every entry
        for c in checks.iter().filter(|c| c.name.contains("(27/20)")) {
            assert_eq!(c.strict, Some(true));
        }
    }

    #[test]
    fn b_products_match_closed_form() {
        // B_t = [[t,1],[1,0]] for Sigma_3
        let sigma3 = GOLDEN[3].pair();
        for t in 1..=6u32 {
            let word = BFactorization { exponents: vec![t, 0] }.to_word().unwrap();
            let p = evaluate_word(&sigma3, &word).unwrap();
            assert_eq!(p, ExactMatrix::from_i64(&[&[t as i64, 1], &[1, 0]]));
        }
    }

    #[test]
    fn rejects_non_binary_input() {
        let pair = MatrixSet::new(vec![
            ExactMatrix::from_i64(&[&[2, 0], &[0, 0]]),
            ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        ])
        .unwrap();
        assert!(matches!(
            classify_pair(&pair, 4, &BoundsOptions::default()),
            Err(Error::Unsupported(_))
        ));
    }
}
