//! The three structure-preserving reductions: rational sets to integer sets
//! by scaling, integer sets to binary sets by graph expansion (signed
//! entries expand to weight -1 edges), and m-matrix sets to a pair of block
//! matrices built on a (2m-1)-node transit graph. Each construction ships
//! with verifiers for the identities its correctness rests on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{evaluate_word, ExactMatrix, MatrixSet, ProductWord};

/// Result of clearing denominators: `scaled = alpha * set` entrywise.
#[derive(Clone, Debug)]
pub struct ScaleResult {
    pub alpha: BigInt,
    pub scaled: MatrixSet,
}

/// Minimal positive integer scaling that makes every entry an integer.
/// The joint spectral radius satisfies `rho(set) = rho(scaled) / alpha`.
pub fn scale_to_integer(set: &MatrixSet) -> ScaleResult {
    let alpha = set.denominator_lcm();
    let scaled = set.scaled(&BigRational::from(alpha.clone()));
    debug_assert!(scaled.is_integer());
    ScaleResult { alpha, scaled }
}

/// Binary (or signed-binary) expansion of an integer set: every original
/// node becomes `m_max` nodes, and an entry `A[i][j] = k` becomes edges from
/// the first `|k|` nodes of group `i` to all `m_max` nodes of group `j`,
/// weighted by the sign of `k`.
#[derive(Clone, Debug)]
pub struct BinaryExpansion {
    pub m_max: usize,
    /// True when the source had negative entries; expanded entries then lie
    /// in {0, 1, -1} instead of {0, 1}.
    pub signed: bool,
    pub source: MatrixSet,
    pub expanded: MatrixSet,
}

impl BinaryExpansion {
    /// Row/column index of auxiliary node `s` of original node `i`.
    pub fn node_index(&self, i: usize, s: usize) -> usize {
        i * self.m_max + s
    }
}

fn require_integer(set: &MatrixSet) -> Result<()> {
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

pub fn integer_to_binary(set: &MatrixSet) -> Result<BinaryExpansion> {
    require_integer(set)?;
    let n = set.dim();
    let mut m_max = BigInt::one();
    let mut signed = false;
    for mem in set.members() {
        for e in mem.entries() {
            if e.is_negative() {
                signed = true;
            }
            let mag = e.numer().abs();
            if mag > m_max {
                m_max = mag;
            }
        }
    }
    // all-zero sets expand with m clamped to 1
    let m: usize = m_max.to_usize().ok_or_else(|| {
        Error::Unsupported(format!("largest entry magnitude {} is too big to expand", m_max))
    })?;
    if m <= 1 {
        return Ok(BinaryExpansion {
            m_max: 1,
            signed,
            source: set.clone(),
            expanded: set.clone(),
        });
    }
    let dim = n * m;
    let mut members = Vec::with_capacity(set.len());
    for mem in set.members() {
        let mut rows = vec![vec![BigRational::zero(); dim]; dim];
        for i in 0..n {
            for j in 0..n {
                let k = mem.get(i, j).to_integer();
                if k.is_zero() {
                    continue;
                }
                let weight = if k.is_negative() { -BigRational::one() } else { BigRational::one() };
                let count = k.abs().to_usize().expect("entry magnitude bounded by m_max");
                for s in 0..count {
                    for t in 0..m {
                        rows[i * m + s][j * m + t] = weight.clone();
                    }
                }
            }
        }
        members.push(ExactMatrix::from_rows(rows).expect("square by construction"));
    }
    let expanded = MatrixSet::new(members).expect("expansion preserves distinctness");
    Ok(BinaryExpansion { m_max: m, signed, source: set.clone(), expanded })
}

/// Checked identities tying a product over the source set to the same word
/// over the expansion.
#[derive(Clone, Debug)]
pub struct ProjectionCheck {
    pub word: ProductWord,
    pub source_product: ExactMatrix,
    pub expanded_product: ExactMatrix,
    /// For every (i, j, s): `A_w[i][j] = sum_r Atilde_w[(i,r)][(j,s)]`.
    pub column_sums_match: bool,
    /// `||A_w||_1 = ||Atilde_w||_1`. Signed sources are compared after
    /// taking absolute values of the generators (products of signed
    /// generators cancel differently on the two sides, so the literal
    /// product-norm identity only holds for nonnegative sources).
    pub norms_match: bool,
}

fn abs_matrix(m: &ExactMatrix) -> ExactMatrix {
    let n = m.dim();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).abs()).collect())
        .collect();
    ExactMatrix::from_rows(rows).expect("square")
}

/// Product over raw generators (which may contain duplicates after taking
/// absolute values, so a MatrixSet cannot carry them).
fn product_over(members: &[ExactMatrix], word: &ProductWord) -> ExactMatrix {
    let mut acc: Option<ExactMatrix> = None;
    for &i in word.indices() {
        acc = Some(match acc {
            None => members[i].clone(),
            Some(p) => p.mul(&members[i]),
        });
    }
    acc.expect("words are nonempty")
}

/// Verifies the expansion identities for a word; a violation is an
/// implementation-bug signal, not a data error.
pub fn integer_to_binary_project(
    exp: &BinaryExpansion,
    word: &ProductWord,
) -> Result<ProjectionCheck> {
    let a = evaluate_word(&exp.source, word)?;
    let b = evaluate_word(&exp.expanded, word)?;
    let n = exp.source.dim();
    let m = exp.m_max;
    let mut column_sums_match = true;
    'scan: for i in 0..n {
        for j in 0..n {
            for s in 0..m {
                let sum: BigRational =
                    (0..m).map(|r| b.get(exp.node_index(i, r), exp.node_index(j, s))).sum();
                if &sum != a.get(i, j) {
                    column_sums_match = false;
                    break 'scan;
                }
            }
        }
    }
    let norms_match = if exp.signed {
        let abs_source: Vec<ExactMatrix> = exp.source.members().iter().map(abs_matrix).collect();
        let abs_expanded: Vec<ExactMatrix> =
            exp.expanded.members().iter().map(abs_matrix).collect();
        product_over(&abs_source, word).norm_col_sum()
            == product_over(&abs_expanded, word).norm_col_sum()
    } else {
        a.norm_col_sum() == b.norm_col_sum()
    };
    if !column_sums_match || !norms_match {
        return Err(Error::IdentityViolation(format!(
            "binary expansion identities failed for word {} (column sums: {}, norms: {})",
            word, column_sums_match, norms_match
        )));
    }
    Ok(ProjectionCheck {
        word: word.clone(),
        source_product: a,
        expanded_product: b,
        column_sums_match,
        norms_match,
    })
}

/// The m-to-pair lift: two block matrices of dimension `(2m-1)n` whose pair
/// has joint spectral radius `rho(set)^(1/m)`. Edges are 1-based as in the
/// underlying transit graph: `g0` walks `i -> i+1`, `g1` jumps
/// `m+i-1 -> i` carrying the block `A_i`.
#[derive(Clone, Debug)]
pub struct PairLift {
    pub m_count: usize,
    pub block_dim: usize,
    pub source: MatrixSet,
    pub a0: ExactMatrix,
    pub a1: ExactMatrix,
    pub g0_edges: Vec<(usize, usize)>,
    pub g1_edges: Vec<(usize, usize)>,
}

pub fn set_to_pair(set: &MatrixSet) -> PairLift {
    let m = set.len();
    let n = set.dim();
    let nodes = 2 * m - 1;
    let dim = nodes * n;
    let mut a0 = vec![vec![BigRational::zero(); dim]; dim];
    let mut g0_edges = Vec::new();
    for i in 1..=(2 * m).saturating_sub(2) {
        g0_edges.push((i, i + 1));
        for d in 0..n {
            a0[(i - 1) * n + d][i * n + d] = BigRational::one();
        }
    }
    let mut a1 = vec![vec![BigRational::zero(); dim]; dim];
    let mut g1_edges = Vec::new();
    for i in 1..=m {
        let row_block = m + i - 2; // 0-based block row of the 1-based node m+i-1
        let col_block = i - 1;
        g1_edges.push((m + i - 1, i));
        let mat = set.member(i - 1);
        for r in 0..n {
            for c in 0..n {
                a1[row_block * n + r][col_block * n + c] = mat.get(r, c).clone();
            }
        }
    }
    PairLift {
        m_count: m,
        block_dim: n,
        source: set.clone(),
        a0: ExactMatrix::from_rows(a0).expect("square"),
        a1: ExactMatrix::from_rows(a1).expect("square"),
        g0_edges,
        g1_edges,
    }
}

impl PairLift {
    /// The lifted pair as a matrix set; fails only in the degenerate case
    /// where both lifted matrices coincide (a single all-zero source).
    pub fn pair_set(&self) -> Result<MatrixSet> {
        MatrixSet::new(vec![self.a0.clone(), self.a1.clone()])
    }

    pub fn member(&self, index: usize) -> &ExactMatrix {
        if index == 0 {
            &self.a0
        } else {
            &self.a1
        }
    }

    /// Evaluates a word over the lifted pair (indices 0 and 1).
    pub fn evaluate(&self, word: &ProductWord) -> Result<ExactMatrix> {
        for &i in word.indices() {
            if i >= 2 {
                return Err(Error::IndexOutOfRange { index: i, members: 2 });
            }
        }
        let mut acc: Option<ExactMatrix> = None;
        for &i in word.indices() {
            let f = self.member(i);
            acc = Some(match acc {
                None => f.clone(),
                Some(p) => p.mul(f),
            });
        }
        Ok(acc.expect("words are nonempty"))
    }

    /// `n x n` block at block position (bi, bj), 0-based.
    pub fn block_of(&self, m: &ExactMatrix, bi: usize, bj: usize) -> ExactMatrix {
        let n = self.block_dim;
        let rows = (0..n)
            .map(|r| (0..n).map(|c| m.get(bi * n + r, bj * n + c).clone()).collect())
            .collect();
        ExactMatrix::from_rows(rows).expect("square block")
    }
}

/// `B_i = A0^(i-1) A1 A0^(m-i)` (1-based member index), the canonical
/// length-m pair word whose block (m, m) is the source matrix `A_i`.
pub fn build_b(lift: &PairLift, i: usize) -> Result<ExactMatrix> {
    if i < 1 || i > lift.m_count {
        return Err(Error::MemberOutOfRange { index: i, members: lift.m_count });
    }
    lift.evaluate(&b_word(lift.m_count, i))
}

fn b_word(m: usize, i: usize) -> ProductWord {
    let mut indices = Vec::with_capacity(m);
    indices.extend(std::iter::repeat_n(0, i - 1));
    indices.push(1);
    indices.extend(std::iter::repeat_n(0, m - i));
    ProductWord::new(indices).expect("m >= 1")
}

/// Concatenated B-factorizations of a source word: the lifted word has
/// length `m * |w|` and its product's block (m, m) equals the source
/// product.
pub fn lift_word(lift: &PairLift, word: &ProductWord) -> Result<ProductWord> {
    word.validate(&lift.source)?;
    let mut indices = Vec::with_capacity(lift.m_count * word.len());
    for &j in word.indices() {
        indices.extend_from_slice(b_word(lift.m_count, j + 1).indices());
    }
    ProductWord::new(indices)
}

/// What became of one block-row in a length-km pair product.
#[derive(Clone, Debug)]
pub struct BlockRow {
    /// 1-based start node.
    pub node: usize,
    /// Surviving walk: 1-based end node and the collected source factors
    /// (empty means the block is an identity). None when the walk died.
    pub walk: Option<(usize, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct BlockStructureCheck {
    pub word: ProductWord,
    pub k: usize,
    pub rows: Vec<BlockRow>,
}

/// Verifies that a pair product of length `km` has at most one nonzero block
/// per block-row, located where the graph walk ends, equal to the product of
/// the collected source factors, of length `k-1`, `k`, or `k+1`.
pub fn check_block_structure(
    lift: &PairLift,
    word: &ProductWord,
) -> Result<BlockStructureCheck> {
    let m = lift.m_count;
    if !word.len().is_multiple_of(m) {
        return Err(Error::NotMultipleOfM { len: word.len(), m });
    }
    let k = word.len() / m;
    let product = lift.evaluate(word)?;
    let nodes = 2 * m - 1;
    let mut rows = Vec::with_capacity(nodes);
    for start in 1..=nodes {
        let mut node = Some(start);
        let mut collected = Vec::new();
        for &sym in word.indices() {
            node = match node {
                None => None,
                Some(v) => {
                    if sym == 0 {
                        if v < nodes {
                            Some(v + 1)
                        } else {
                            None
                        }
                    } else if v >= m {
                        collected.push(v - m); // 0-based source index of A_{v-m+1}
                        Some(v - m + 1)
                    } else {
                        None
                    }
                }
            };
            if node.is_none() {
                break;
            }
        }
        let row = BlockRow {
            node: start,
            walk: node.map(|end| (end, collected.clone())),
        };
        // verify the product's blocks against the walk
        for bj in 0..nodes {
            let blk = lift.block_of(&product, start - 1, bj);
            match &row.walk {
                Some((end, factors)) if bj == end - 1 => {
                    let expected = if factors.is_empty() {
                        ExactMatrix::identity(lift.block_dim)
                    } else {
                        let w = ProductWord::new(factors.clone()).expect("nonempty");
                        evaluate_word(&lift.source, &w)?
                    };
                    if blk != expected {
                        return Err(Error::StructureViolation(format!(
                            "block ({}, {}) does not equal its walk product",
                            start, bj + 1
                        )));
                    }
                }
                _ => {
                    if !blk.is_zero() {
                        return Err(Error::StructureViolation(format!(
                            "unexpected nonzero block at ({}, {})",
                            start,
                            bj + 1
                        )));
                    }
                }
            }
        }
        if let Some((_, factors)) = &row.walk {
            let len = factors.len();
            if len + 1 < k || len > k + 1 {
                return Err(Error::StructureViolation(format!(
                    "walk from node {} collected {} factors; expected k-1..=k+1 with k={}",
                    start, len, k
                )));
            }
        }
        rows.push(row);
    }
    Ok(BlockStructureCheck { word: word.clone(), k, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{bounds_report, BoundsOptions};
    use crate::value::{compare_values, AlgebraicValue, ValueOrdering};

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn scaling_clears_denominators() {
        let set = MatrixSet::new(vec![ExactMatrix::from_rows(vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(0, 1), rat(1, 3)],
        ])
        .unwrap()])
        .unwrap();
        let r = scale_to_integer(&set);
        assert_eq!(r.alpha, BigInt::from(6));
        assert_eq!(*r.scaled.member(0), ExactMatrix::from_i64(&[&[3, 0], &[0, 2]]));

        let ints = MatrixSet::new(vec![ExactMatrix::from_i64(&[&[1, 2], &[3, 4]])]).unwrap();
        let r = scale_to_integer(&ints);
        assert_eq!(r.alpha, BigInt::one());
        assert_eq!(r.scaled, ints);

        let two = MatrixSet::new(vec![
            ExactMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 2)], vec![rat(0, 1), rat(1, 2)]])
                .unwrap(),
            ExactMatrix::from_rows(vec![vec![rat(0, 1), rat(1, 3)], vec![rat(1, 3), rat(0, 1)]])
                .unwrap(),
        ])
        .unwrap();
        let r = scale_to_integer(&two);
        assert_eq!(r.alpha, BigInt::from(6));
        assert_eq!(*r.scaled.member(0), ExactMatrix::from_i64(&[&[3, 3], &[0, 3]]));
        assert_eq!(*r.scaled.member(1), ExactMatrix::from_i64(&[&[0, 2], &[2, 0]]));
    }

    #[test]
    fn binary_expansion_examples() {
        // {[[2]]} expands to the 2x2 all-ones matrix
        let set = MatrixSet::new(vec![ExactMatrix::from_i64(&[&[2]])]).unwrap();
        let exp = integer_to_binary(&set).unwrap();
        assert_eq!(exp.m_max, 2);
        assert!(!exp.signed);
        assert_eq!(*exp.expanded.member(0), ExactMatrix::from_i64(&[&[1, 1], &[1, 1]]));

        // {[[0,2],[1,0]]}: all-ones block rows {0,1} x cols {2,3}, ones at
        // row 2, cols {0,1}
        let set = MatrixSet::new(vec![ExactMatrix::from_i64(&[&[0, 2], &[1, 0]])]).unwrap();
        let exp = integer_to_binary(&set).unwrap();
        assert_eq!(
            *exp.expanded.member(0),
            ExactMatrix::from_i64(&[
                &[0, 0, 1, 1],
                &[0, 0, 1, 1],
                &[1, 1, 0, 0],
                &[0, 0, 0, 0],
            ])
        );

        // binary input is returned unchanged
        let set = MatrixSet::new(vec![ExactMatrix::from_i64(&[&[0, 1], &[1, 1]])]).unwrap();
        let exp = integer_to_binary(&set).unwrap();
        assert_eq!(exp.m_max, 1);
        assert_eq!(exp.expanded, set);

        // non-integer entries are rejected
        let set = MatrixSet::new(vec![ExactMatrix::from_rows(vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1)],
        ])
        .unwrap()])
        .unwrap();
        assert!(matches!(integer_to_binary(&set), Err(Error::NonIntegerEntry { .. })));
    }

    #[test]
    fn signed_expansion_uses_minus_one_edges() {
        let set = MatrixSet::new(vec![ExactMatrix::from_i64(&[&[-2, 0], &[0, 1]])]).unwrap();
        let exp = integer_to_binary(&set).unwrap();
        assert!(exp.signed);
        for e in exp.expanded.member(0).entries() {
            let v = e.to_integer();
            assert!(v == BigInt::from(-1) || v.is_zero() || v.is_one());
        }
        // norm identity holds with absolute values
        let w = ProductWord::new(vec![0, 0]).unwrap();
        let check = integer_to_binary_project(&exp, &w).unwrap();
        assert!(check.norms_match && check.column_sums_match);
    }

    #[test]
    fn projection_identities() {
        let set = MatrixSet::new(vec![ExactMatrix::from_i64(&[&[2]])]).unwrap();
        let exp = integer_to_binary(&set).unwrap();
        let w = ProductWord::new(vec![0, 0]).unwrap();
        let check = integer_to_binary_project(&exp, &w).unwrap();
        assert_eq!(check.source_product, ExactMatrix::from_i64(&[&[4]]));
        assert_eq!(check.expanded_product, ExactMatrix::from_i64(&[&[2, 2], &[2, 2]]));
        assert_eq!(check.source_product.norm_col_sum(), rat(4, 1));
    }

    #[test]
    fn pair_lift_shapes() {
        // m = 1: A0 is the zero matrix, A1 the single member
        let single = MatrixSet::new(vec![ExactMatrix::from_i64(&[&[2, 1], &[1, 1]])]).unwrap();
        let lift = set_to_pair(&single);
        assert!(lift.a0.is_zero());
        assert_eq!(lift.a1, *single.member(0));
        assert!(lift.g0_edges.is_empty());
        assert_eq!(lift.g1_edges, vec![(1, 1)]);

        // m = 2, n = 1, {[2],[3]}
        let set = MatrixSet::new(vec![
            ExactMatrix::from_i64(&[&[2]]),
            ExactMatrix::from_i64(&[&[3]]),
        ])
        .unwrap();
        let lift = set_to_pair(&set);
        assert_eq!(lift.a0, ExactMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]));
        assert_eq!(lift.a1, ExactMatrix::from_i64(&[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0]]));
        assert_eq!(lift.g0_edges, vec![(1, 2), (2, 3)]);
        assert_eq!(lift.g1_edges, vec![(2, 1), (3, 2)]);
    }

    #[test]
    fn pair_lift_m5_block_pattern() {
        let members: Vec<ExactMatrix> =
            (1..=5).map(|v| ExactMatrix::from_i64(&[&[v]])).collect();
        let set = MatrixSet::new(members).unwrap();
        let lift = set_to_pair(&set);
        assert_eq!(lift.a0.dim(), 9);
        for i in 0..9 {
            for j in 0..9 {
                let expect_a0 = if j == i + 1 { rat(1, 1) } else { rat(0, 1) };
                assert_eq!(*lift.a0.get(i, j), expect_a0, "A0 at ({},{})", i, j);
                let expect_a1 = if i >= 4 && j == i - 4 {
                    rat((j + 1) as i64, 1)
                } else {
                    rat(0, 1)
                };
                assert_eq!(*lift.a1.get(i, j), expect_a1, "A1 at ({},{})", i, j);
            }
        }
        // block (5,5) of B_3 equals A_3
        let b3 = build_b(&lift, 3).unwrap();
        assert_eq!(lift.block_of(&b3, 4, 4), *set.member(2));
    }

    #[test]
    fn b_products_and_word_lifting() {
        let set = MatrixSet::new(vec![
            ExactMatrix::from_i64(&[&[2]]),
            ExactMatrix::from_i64(&[&[3]]),
        ])
        .unwrap();
        let lift = set_to_pair(&set);
        let b1 = build_b(&lift, 1).unwrap();
        // B1 = A1 A0 has the entry 2 at block (2,2)
        assert_eq!(*b1.get(1, 1), rat(2, 1));
        assert!(matches!(build_b(&lift, 3), Err(Error::MemberOutOfRange { .. })));

        let w = ProductWord::new(vec![0, 1]).unwrap();
        let lifted = lift_word(&lift, &w).unwrap();
        assert_eq!(lifted, ProductWord::new(vec![1, 0, 0, 1]).unwrap());

        // block (m,m) of the lifted product equals the source product
        let src = evaluate_word(&set, &w).unwrap();
        let prod = lift.evaluate(&lifted).unwrap();
        assert_eq!(lift.block_of(&prod, 1, 1), src);

        // m = 1 lift word
        let single = MatrixSet::new(vec![ExactMatrix::from_i64(&[&[5]])]).unwrap();
        let l1 = set_to_pair(&single);
        assert_eq!(
            lift_word(&l1, &ProductWord::new(vec![0]).unwrap()).unwrap(),
            ProductWord::new(vec![1]).unwrap()
        );
    }

    #[test]
    fn block_structure_checks() {
        let set = MatrixSet::new(vec![
            ExactMatrix::from_i64(&[&[2]]),
            ExactMatrix::from_i64(&[&[3]]),
        ])
        .unwrap();
        let lift = set_to_pair(&set);
        // lifted word passes by construction
        let w = lift_word(&lift, &ProductWord::new(vec![0, 1]).unwrap()).unwrap();
        let check = check_block_structure(&lift, &w).unwrap();
        assert_eq!(check.k, 2);
        // dead word [1,1,1,1]: zero matrix, vacuously fine
        let dead = ProductWord::new(vec![1, 1, 1, 1]).unwrap();
        let check = check_block_structure(&lift, &dead).unwrap();
        assert!(check.rows.iter().all(|r| r.walk.is_none()));
        assert!(lift.evaluate(&dead).unwrap().is_zero());
        // length not a multiple of m
        assert!(matches!(
            check_block_structure(&lift, &ProductWord::new(vec![0]).unwrap()),
            Err(Error::NotMultipleOfM { .. })
        ));
    }

    #[test]
    fn lift_value_relation_for_two_scalars() {
        // best_lower(pair, 4) = sqrt(3), consistent with rho(pair)^m = rho(set)
        let set = MatrixSet::new(vec![
            ExactMatrix::from_i64(&[&[2]]),
            ExactMatrix::from_i64(&[&[3]]),
        ])
        .unwrap();
        let lift = set_to_pair(&set);
        let pair = lift.pair_set().unwrap();
        let report = bounds_report(&pair, 4, &BoundsOptions::default()).unwrap();
        let sqrt3 = AlgebraicValue::nth_root_of_rational(rat(3, 1), 2);
        assert_eq!(compare_values(&report.best_lower.value, &sqrt3), ValueOrdering::Equal);
    }

    #[test]
    fn outdegree_of_lifted_matrices() {
        let members: Vec<ExactMatrix> =
            (1..=4).map(|v| ExactMatrix::from_i64(&[&[v, 0], &[1, v]])).collect();
        let set = MatrixSet::new(members).unwrap();
        let lift = set_to_pair(&set);
        let nodes = 2 * lift.m_count - 1;
        for mat in [&lift.a0, &lift.a1] {
            for bi in 0..nodes {
                let nonzero_row =
                    (0..nodes).filter(|&bj| !lift.block_of(mat, bi, bj).is_zero()).count();
                assert!(nonzero_row <= 1);
                let nonzero_col =
                    (0..nodes).filter(|&bj| !lift.block_of(mat, bj, bi).is_zero()).count();
                assert!(nonzero_col <= 1);
            }
        }
    }
}
