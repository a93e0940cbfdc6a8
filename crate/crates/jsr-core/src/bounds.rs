//! Bracketing bounds for the joint spectral radius: per-depth lower bounds
//! from spectral radii of products, upper bounds from submultiplicative
//! norms, with domination pruning on nonnegative sets.
//!
//! Two enumeration strategies back the lower bounds and cross-validate each
//! other: the pruned mode ranks the domination frontier (every word's
//! product is entrywise dominated by some frontier product, and entrywise
//! order implies spectral-radius order for nonnegative matrices); the
//! unpruned mode enumerates one word per cyclic rotation class, since the
//! spectral radius is invariant under cyclic shifts.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, MatrixSet, ProductWord};
use crate::value::{compare_values, radius_surd_from_char, AlgebraicValue, ValueOrdering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormKind {
    RowSum,
    ColSum,
}

impl NormKind {
    pub fn apply(&self, m: &ExactMatrix) -> BigRational {
        match self {
            NormKind::RowSum => m.norm_row_sum(),
            NormKind::ColSum => m.norm_col_sum(),
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormKind::RowSum => write!(f, "row-sum"),
            NormKind::ColSum => write!(f, "col-sum"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BoundsOptions {
    pub norm: NormKind,
    /// Domination pruning and duplicate merging (nonnegative sets only; the
    /// flag is ignored where pruning would be unsound).
    pub prune: bool,
    /// Hard cap on the number of exact matrix products evaluated.
    pub budget: u64,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions { norm: NormKind::RowSum, prune: true, budget: 10_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct DepthLower {
    pub t: u32,
    pub value: AlgebraicValue,
    pub witness: ProductWord,
}

#[derive(Clone, Debug)]
pub struct DepthUpper {
    pub t: u32,
    pub value: AlgebraicValue,
    /// Exact norm maximum over products of length `t` (the value is its
    /// t-th root).
    pub norm_max: BigRational,
}

/// Per-depth brackets plus the cumulative best lower bound and the running
/// minimum of the per-depth upper bounds (each is a valid upper bound).
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub set_digest: String,
    pub depth: u32,
    pub norm_used: NormKind,
    pub lower_per_t: Vec<DepthLower>,
    pub upper_per_t: Vec<DepthUpper>,
    pub best_lower: DepthLower,
    pub best_upper: DepthUpper,
    pub pruned: bool,
    pub products_evaluated: u64,
}

struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    fn new(cap: u64) -> Self {
        Budget { used: 0, cap }
    }

    fn charge(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            Err(Error::ResourceBudget { evaluated: self.used, budget: self.cap })
        } else {
            Ok(())
        }
    }
}

/// `rho(m)^(1/t)` as an algebraic value: exact surd for 2x2, symbolic
/// Perron root otherwise.
pub(crate) fn radius_value(m: &ExactMatrix, t: u32) -> AlgebraicValue {
    if m.dim() == 2 {
        let tr = m.trace();
        let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
        AlgebraicValue::nth_root_of_surd(radius_surd_from_char(&tr, &det), t)
    } else {
        AlgebraicValue::nth_root_of_radius(m.clone(), t)
    }
}

fn strictly_greater(candidate: &AlgebraicValue, best: &AlgebraicValue) -> bool {
    compare_values(candidate, best) == ValueOrdering::Greater
}

/// Visits one representative word (the lexicographically minimal rotation)
/// per cyclic class of length-`n` words, together with its exact product.
fn for_each_necklace<F>(set: &MatrixSet, n: usize, budget: &mut Budget, f: &mut F) -> Result<()>
where
    F: FnMut(&[usize], &ExactMatrix),
{
    struct Walk<'a, F> {
        set: &'a MatrixSet,
        n: usize,
        a: Vec<usize>,
        stack: Vec<ExactMatrix>,
        budget: &'a mut Budget,
        f: &'a mut F,
    }
    impl<F: FnMut(&[usize], &ExactMatrix)> Walk<'_, F> {
        fn gen(&mut self, t: usize, p: usize) -> Result<()> {
            if t > self.n {
                if self.n.is_multiple_of(p) {
                    (self.f)(&self.a[1..=self.n], self.stack.last().expect("n >= 1"));
                }
                return Ok(());
            }
            let base = self.a[t - p];
            for j in base..self.set.len() {
                self.a[t] = j;
                self.budget.charge()?;
                let prod = match self.stack.last() {
                    None => self.set.member(j).clone(),
                    Some(prev) => prev.mul(self.set.member(j)),
                };
                self.stack.push(prod);
                let p_next = if j == base { p } else { t };
                self.gen(t + 1, p_next)?;
                self.stack.pop();
            }
            Ok(())
        }
    }
    let mut walk = Walk {
        set,
        n,
        a: vec![0usize; n + 1],
        stack: Vec::with_capacity(n + 1),
        budget,
        f,
    };
    walk.gen(1, 1)
}

/// Lower bound at exactly depth `t` by necklace enumeration.
fn necklace_lower(
    set: &MatrixSet,
    t: u32,
    budget: &mut Budget,
) -> Result<(AlgebraicValue, ProductWord)> {
    let mut best: Option<(AlgebraicValue, ProductWord)> = None;
    for_each_necklace(set, t as usize, budget, &mut |word, product| {
        let value = radius_value(product, t);
        let replace = match &best {
            None => true,
            Some((bv, _)) => strictly_greater(&value, bv),
        };
        if replace {
            best = Some((value, ProductWord::new(word.to_vec()).expect("t >= 1")));
        }
    })?;
    Ok(best.expect("necklace enumeration is nonempty"))
}

struct FrontierDepth {
    t: u32,
    norm_max: BigRational,
    lower: (AlgebraicValue, ProductWord),
}

/// Breadth-first scan over products of length 1..=depth. With pruning, the
/// frontier is merged by exact value and reduced to the maximal antichain
/// under entrywise order, which preserves both the norm maximum and the
/// spectral-radius maximum on nonnegative sets.
fn frontier_scan(
    set: &MatrixSet,
    depth: u32,
    norm: NormKind,
    prune: bool,
    budget: &mut Budget,
) -> Result<Vec<FrontierDepth>> {
    let prune = prune && set.is_nonneg();
    let mut frontier: Vec<(ExactMatrix, ProductWord)> = (0..set.len())
        .map(|i| (set.member(i).clone(), ProductWord::new(vec![i]).expect("nonempty")))
        .collect();
    let mut out = Vec::with_capacity(depth as usize);
    for t in 1..=depth {
        if t > 1 {
            let mut extended: Vec<(ExactMatrix, ProductWord)> =
                Vec::with_capacity(frontier.len() * set.len());
            for (m, w) in &frontier {
                for i in 0..set.len() {
                    budget.charge()?;
                    let mut indices = w.indices().to_vec();
                    indices.push(i);
                    extended
                        .push((m.mul(set.member(i)), ProductWord::new(indices).expect("nonempty")));
                }
            }
            frontier = if prune { prune_frontier(extended) } else { extended };
        } else if prune {
            frontier = prune_frontier(frontier);
        }
        let norm_max = frontier
            .iter()
            .map(|(m, _)| norm.apply(m))
            .max()
            .expect("frontier never empties");
        let mut items: Vec<&(ExactMatrix, ProductWord)> = frontier.iter().collect();
        items.sort_by(|a, b| a.1.cmp(&b.1));
        let mut best: Option<(AlgebraicValue, ProductWord)> = None;
        for (m, w) in items {
            let value = radius_value(m, t);
            let replace = match &best {
                None => true,
                Some((bv, _)) => strictly_greater(&value, bv),
            };
            if replace {
                best = Some((value, w.clone()));
            }
        }
        out.push(FrontierDepth { t, norm_max, lower: best.expect("nonempty frontier") });
    }
    Ok(out)
}

/// Merges duplicates (keeping the lexicographically smallest word) and drops
/// strictly dominated products.
fn prune_frontier(items: Vec<(ExactMatrix, ProductWord)>) -> Vec<(ExactMatrix, ProductWord)> {
    let mut merged: HashMap<ExactMatrix, ProductWord> = HashMap::new();
    for (m, w) in items {
        merged
            .entry(m)
            .and_modify(|old| {
                if w < *old {
                    *old = w.clone();
                }
            })
            .or_insert(w);
    }
    let all: Vec<(ExactMatrix, ProductWord)> = merged.into_iter().collect();
    let mut keep = Vec::with_capacity(all.len());
    'outer: for (i, (m, w)) in all.iter().enumerate() {
        for (j, (other, _)) in all.iter().enumerate() {
            if i != j && m.entrywise_le(other) && m != other {
                continue 'outer;
            }
        }
        keep.push((m.clone(), w.clone()));
    }
    keep.sort_by(|a, b| a.1.cmp(&b.1));
    keep
}

/// Maximum of `rho(A_w)^(1/t)` over all words of length `t <= depth`, with
/// the deterministically tie-broken witness word.
pub fn lower_bound(
    set: &MatrixSet,
    depth: u32,
    opts: &BoundsOptions,
) -> Result<(AlgebraicValue, ProductWord)> {
    let report = bounds_report(set, depth, opts)?;
    Ok((report.best_lower.value, report.best_lower.witness))
}

/// Maximum of `||A_w||^(1/T)` over words of length exactly `depth`, under
/// the configured norm.
pub fn upper_bound(set: &MatrixSet, depth: u32, opts: &BoundsOptions) -> Result<AlgebraicValue> {
    let report = bounds_report(set, depth, opts)?;
    Ok(report.upper_per_t.last().expect("depth >= 1").value.clone())
}

/// Full per-depth bracketing report for depths `1..=depth`.
pub fn bounds_report(set: &MatrixSet, depth: u32, opts: &BoundsOptions) -> Result<BoundsReport> {
    if depth < 1 {
        return Err(Error::DepthZero);
    }
    let mut budget = Budget::new(opts.budget);
    let pruned = opts.prune && set.is_nonneg();
    let scans = frontier_scan(set, depth, opts.norm, opts.prune, &mut budget)?;
    let mut lower_per_t = Vec::with_capacity(depth as usize);
    let mut upper_per_t = Vec::with_capacity(depth as usize);
    for scan in &scans {
        let t = scan.t;
        let lower = if pruned {
            let (value, witness) = scan.lower.clone();
            DepthLower { t, value, witness }
        } else {
            let (value, witness) = necklace_lower(set, t, &mut budget)?;
            DepthLower { t, value, witness }
        };
        lower_per_t.push(lower);
        let value = AlgebraicValue::nth_root_of_rational(scan.norm_max.clone(), t);
        upper_per_t.push(DepthUpper { t, value, norm_max: scan.norm_max.clone() });
    }
    let mut best_lower = lower_per_t[0].clone();
    for l in &lower_per_t[1..] {
        if strictly_greater(&l.value, &best_lower.value) {
            best_lower = l.clone();
        }
    }
    let mut best_upper = upper_per_t[0].clone();
    for u in &upper_per_t[1..] {
        if compare_values(&u.value, &best_upper.value) == ValueOrdering::Less {
            best_upper = u.clone();
        }
    }
    Ok(BoundsReport {
        set_digest: set.digest(),
        depth,
        norm_used: opts.norm,
        lower_per_t,
        upper_per_t,
        best_lower,
        best_upper,
        pruned,
        products_evaluated: budget.used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surd::QuadSurd;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn set(ms: &[&[&[i64]]]) -> MatrixSet {
        MatrixSet::new(ms.iter().map(|m| ExactMatrix::from_i64(m)).collect()).unwrap()
    }

    fn sigma0() -> MatrixSet {
        set(&[&[&[0, 1], &[0, 0]], &[&[1, 0], &[1, 1]]])
    }

    fn sigma1() -> MatrixSet {
        set(&[&[&[1, 1], &[0, 0]], &[&[1, 0], &[1, 0]]])
    }

    fn sigma3() -> MatrixSet {
        set(&[&[&[0, 1], &[1, 0]], &[&[1, 1], &[0, 1]]])
    }

    fn sqrt2() -> AlgebraicValue {
        AlgebraicValue::nth_root_of_rational(rat(2, 1), 2)
    }

    #[test]
    fn lower_bound_examples() {
        let opts = BoundsOptions::default();
        let (v, w) = lower_bound(&sigma1(), 2, &opts).unwrap();
        assert_eq!(compare_values(&v, &sqrt2()), ValueOrdering::Equal);
        assert_eq!(w, ProductWord::new(vec![0, 1]).unwrap());

        // 4^(1/5) at depth 5; the witness is the minimal rotation of A1^4 A0
        let (v, w) = lower_bound(&sigma0(), 5, &opts).unwrap();
        let expect = AlgebraicValue::nth_root_of_rational(rat(4, 1), 5);
        assert_eq!(compare_values(&v, &expect), ValueOrdering::Equal);
        assert_eq!(w.len(), 5);
        assert_eq!(w, ProductWord::new(vec![0, 1, 1, 1, 1]).unwrap());

        // ((3+sqrt(13))/2)^(1/4) at depth 4
        let (v, w) = lower_bound(&sigma3(), 4, &opts).unwrap();
        let expect = AlgebraicValue::nth_root_of_surd(
            QuadSurd::new(rat(3, 2), rat(1, 2), BigInt::from(13)),
            4,
        );
        assert_eq!(compare_values(&v, &expect), ValueOrdering::Equal);
        assert_eq!(w.len(), 4);

        assert!(matches!(lower_bound(&sigma1(), 0, &opts), Err(Error::DepthZero)));
    }

    #[test]
    fn upper_bound_examples() {
        let opts = BoundsOptions::default();
        // single triangular matrix: ||A^4|| = 5, strictly above rho = 1
        let single = set(&[&[&[1, 1], &[0, 1]]]);
        let v = upper_bound(&single, 4, &opts).unwrap();
        let expect = AlgebraicValue::nth_root_of_rational(rat(5, 1), 4);
        assert_eq!(compare_values(&v, &expect), ValueOrdering::Equal);
        assert_eq!(compare_values(&v, &AlgebraicValue::one()), ValueOrdering::Greater);

        let v = upper_bound(&sigma1(), 2, &opts).unwrap();
        assert_eq!(compare_values(&v, &sqrt2()), ValueOrdering::Equal);

        let zero = set(&[&[&[0, 0], &[0, 0]]]);
        let v = upper_bound(&zero, 3, &opts).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn report_examples() {
        let opts = BoundsOptions::default();
        // gap closes at t = 2 for Sigma_1
        let r = bounds_report(&sigma1(), 2, &opts).unwrap();
        assert_eq!(
            compare_values(&r.best_lower.value, &r.upper_per_t[1].value),
            ValueOrdering::Equal
        );

        // singleton at depth 1: lower = rho(A), upper = ||A||
        let single = set(&[&[&[2, 1], &[1, 1]]]);
        let r = bounds_report(&single, 1, &opts).unwrap();
        let rho = crate::value::spectral_radius_exact_2x2(single.member(0)).unwrap();
        assert_eq!(compare_values(&r.best_lower.value, &rho), ValueOrdering::Equal);
        assert_eq!(r.upper_per_t[0].norm_max, rat(3, 1));

        // Sigma_3 at depth 8: best lower attained at t = 4, upper strictly larger
        let r = bounds_report(&sigma3(), 8, &opts).unwrap();
        let expect = AlgebraicValue::nth_root_of_surd(
            QuadSurd::new(rat(3, 2), rat(1, 2), BigInt::from(13)),
            4,
        );
        assert_eq!(compare_values(&r.best_lower.value, &expect), ValueOrdering::Equal);
        assert_eq!(r.best_lower.t, 4);
        assert_eq!(
            compare_values(&r.best_upper.value, &r.best_lower.value),
            ValueOrdering::Greater
        );
    }

    #[test]
    fn per_depth_bracketing_holds() {
        for s in [sigma0(), sigma1(), sigma3()] {
            let r = bounds_report(&s, 8, &BoundsOptions::default()).unwrap();
            for (l, u) in r.lower_per_t.iter().zip(&r.upper_per_t) {
                assert_ne!(
                    compare_values(&l.value, &u.value),
                    ValueOrdering::Greater,
                    "bracket violated at t={}",
                    l.t
                );
            }
        }
    }

    #[test]
    fn pruned_and_unpruned_agree() {
        for s in [sigma0(), sigma1(), sigma3()] {
            let pruned = bounds_report(&s, 7, &BoundsOptions::default()).unwrap();
            let unpruned = bounds_report(
                &s,
                7,
                &BoundsOptions { prune: false, ..BoundsOptions::default() },
            )
            .unwrap();
            for (a, b) in pruned.lower_per_t.iter().zip(&unpruned.lower_per_t) {
                assert_eq!(compare_values(&a.value, &b.value), ValueOrdering::Equal);
            }
            for (a, b) in pruned.upper_per_t.iter().zip(&unpruned.upper_per_t) {
                assert_eq!(a.norm_max, b.norm_max);
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let opts = BoundsOptions { budget: 10, ..BoundsOptions::default() };
        assert!(matches!(
            bounds_report(&sigma3(), 12, &opts),
            Err(Error::ResourceBudget { .. })
        ));
    }

    #[test]
    fn col_norm_selectable() {
        let opts = BoundsOptions { norm: NormKind::ColSum, ..BoundsOptions::default() };
        let single = set(&[&[&[1, 1], &[0, 1]]]);
        // col-sum of A^4 = [[1,4],[0,1]] is 5 as well
        let v = upper_bound(&single, 4, &opts).unwrap();
        let expect = AlgebraicValue::nth_root_of_rational(rat(5, 1), 4);
        assert_eq!(compare_values(&v, &expect), ValueOrdering::Equal);
    }
}
