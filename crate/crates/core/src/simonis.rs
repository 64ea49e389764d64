//! Basis-insertion transforms: starting from a linear code whose weight-d
//! codewords are exactly the scalar multiples of t independent basis rows
//! (and whose next weights are empty), modify the last minimum-weight basis
//! row in one or two fresh positions. The result keeps the parameters
//! [n, k, d] while dropping the number of independent minimum-weight
//! codewords to t - 1, which disconnects the relevant distance graph and
//! opens the code up for strict function correction.

use num_bigint::BigUint;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{self, EchelonBasis, Vector};
use crate::Budgets;

/// A basis of a linear code split into t independent weight-d rows and
/// k - t completion rows of weight > d.
#[derive(Clone)]
pub struct MinWeightBasis {
    pub min_rows: Vec<Vector>,
    pub completion: Vec<Vector>,
    pub d: usize,
    pub t: usize,
}

/// How many fresh positions the insertion touches.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InsertMode {
    One,
    Two,
}

/// Measured weight facts against the insertion preconditions.
#[derive(Clone, Debug)]
pub struct InsertionConditions {
    pub d: usize,
    pub t: usize,
    pub a_d: u64,
    /// A_{d+1}, and for the two-position mode also A_{d+2}, A_{d+3}.
    pub tail_counts: Vec<u64>,
    /// A_d = t(q - 1)?
    pub count_matches: bool,
    /// All measured tail counts are zero?
    pub tail_empty: bool,
}

impl InsertionConditions {
    pub fn all_hold(&self) -> bool {
        self.count_matches && self.tail_empty
    }
}

/// Result of an insertion, with the verification data.
#[derive(Clone)]
pub struct InsertionResult {
    pub output: Code,
    /// The modified basis vector b.
    pub modified_row: Vector,
    /// Inserted position(s), ascending.
    pub positions: Vec<usize>,
    /// Inserted scalar(s); the transform fixes them to 1.
    pub scalars: Vec<FieldElement>,
    pub d: usize,
    pub t_before: usize,
    pub t_after: usize,
}

/// Greedy maximal independent set of weight-d codewords in canonical order,
/// completed to a full basis with reduced-echelon generator rows (smallest
/// pivot first); every completion row has weight > d.
pub fn min_weight_basis(code: &Code, budgets: &Budgets) -> Result<MinWeightBasis> {
    if !code.is_linear() {
        return Err(Error::Invalid("insertion transforms need a linear code".into()));
    }
    let d = code.min_distance(budgets)?;
    let s_d = code.low_weight_codewords(d, budgets)?;
    let mut basis = EchelonBasis::new(code.field().clone(), code.len());
    let mut min_rows = Vec::new();
    for c in &s_d {
        if basis.add(c) {
            min_rows.push(c.clone());
        }
    }
    let t = min_rows.len();
    let completion = code.complete_basis(&min_rows)?;
    for e in &completion {
        if linalg::weight(e) <= d {
            return Err(Error::PostconditionFailed(
                "completion row of weight <= d".into(),
            ));
        }
    }
    Ok(MinWeightBasis {
        min_rows,
        completion,
        d,
        t,
    })
}

/// Measure the weight-distribution preconditions for the given mode:
/// A_d must equal t(q - 1), and A_{d+1} (one-position) respectively
/// A_{d+1}, A_{d+2}, A_{d+3} (two-position) must vanish.
pub fn insertion_conditions(
    code: &Code,
    mode: InsertMode,
    budgets: &Budgets,
) -> Result<InsertionConditions> {
    let basis = min_weight_basis(code, budgets)?;
    insertion_conditions_with(code, &basis, mode, budgets)
}

fn insertion_conditions_with(
    code: &Code,
    basis: &MinWeightBasis,
    mode: InsertMode,
    budgets: &Budgets,
) -> Result<InsertionConditions> {
    let d = basis.d;
    let tail = match mode {
        InsertMode::One => 1usize,
        InsertMode::Two => 3usize,
    };
    let wd = code.weight_distribution(Some(d + tail), budgets)?;
    let q = code.field().order();
    let a_d = wd.count(d);
    let tail_counts: Vec<u64> = (1..=tail).map(|i| wd.count(d + i)).collect();
    Ok(InsertionConditions {
        d,
        t: basis.t,
        a_d,
        count_matches: a_d == basis.t as u64 * (q - 1),
        tail_empty: tail_counts.iter().all(|&c| c == 0),
        tail_counts,
    })
}

pub fn one_position_insert(
    code: &Code,
    basis: Option<MinWeightBasis>,
    budgets: &Budgets,
) -> Result<InsertionResult> {
    insert(code, basis, InsertMode::One, budgets)
}

pub fn two_position_insert(
    code: &Code,
    basis: Option<MinWeightBasis>,
    budgets: &Budgets,
) -> Result<InsertionResult> {
    insert(code, basis, InsertMode::Two, budgets)
}

fn insert(
    code: &Code,
    basis: Option<MinWeightBasis>,
    mode: InsertMode,
    budgets: &Budgets,
) -> Result<InsertionResult> {
    let f = code.field().clone();
    let k = code
        .dimension()
        .ok_or_else(|| Error::Invalid("insertion transforms need a linear code".into()))?;
    let n = code.len();
    let basis = match basis {
        Some(b) => b,
        None => min_weight_basis(code, budgets)?,
    };
    let d = basis.d;
    let t = basis.t;
    let fresh = match mode {
        InsertMode::One => 1usize,
        InsertMode::Two => 2usize,
    };

    match mode {
        InsertMode::One => {
            if k < 2 || d < 2 {
                return Err(Error::ConditionsViolated("needs k >= 2 and d >= 2".into()));
            }
        }
        InsertMode::Two => {
            if n < 3 || d < 3 {
                return Err(Error::ConditionsViolated("needs n >= 3 and d >= 3".into()));
            }
        }
    }
    if t <= 1 {
        return Err(Error::ConditionsViolated(
            "needs more than one independent minimum-weight codeword".into(),
        ));
    }
    if d == n {
        return Err(Error::ConditionsViolated(
            "minimum weight equals the block length; no free position".into(),
        ));
    }
    let conds = insertion_conditions_with(code, &basis, mode, budgets)?;
    if !conds.all_hold() {
        return Err(Error::ConditionsViolated(format!(
            "weight distribution: A_{d} = {} (want t(q-1) = {}), tail counts {:?}",
            conds.a_d,
            t as u64 * (f.order() - 1),
            conds.tail_counts
        )));
    }

    // fresh positions: the smallest indices outside the support of the last
    // minimum-weight basis row; inserted scalars fixed to 1
    let a_t = basis.min_rows[t - 1].clone();
    let supp: std::collections::HashSet<usize> = linalg::support(&a_t).into_iter().collect();
    let positions: Vec<usize> = (0..n).filter(|i| !supp.contains(i)).take(fresh).collect();
    if positions.len() < fresh {
        return Err(Error::ConditionsViolated(
            "not enough positions outside the modified row's support".into(),
        ));
    }
    let mut b = a_t;
    for &p in &positions {
        b[p] = f.one();
    }

    let mut rows: Vec<Vector> = basis.min_rows[..t - 1].to_vec();
    rows.push(b.clone());
    rows.extend(basis.completion.iter().cloned());
    let output = Code::from_generator(f.clone(), rows)?;

    // postconditions are always verified; a violation here is a bug
    if output.dimension() != Some(k) {
        return Err(Error::PostconditionFailed("output dimension changed".into()));
    }
    let low = output.low_weight_codewords(d, budgets)?;
    if low.iter().any(|c| linalg::weight(c) < d) {
        return Err(Error::PostconditionFailed(
            "output minimum distance dropped".into(),
        ));
    }
    if low.is_empty() {
        return Err(Error::PostconditionFailed(
            "output minimum distance grew".into(),
        ));
    }
    let mut span = EchelonBasis::new(f.clone(), n);
    for c in &low {
        span.add(c);
    }
    if span.dim() != t - 1 {
        return Err(Error::PostconditionFailed(format!(
            "span of minimum-weight codewords has dim {} (want {})",
            span.dim(),
            t - 1
        )));
    }
    if mode == InsertMode::Two {
        let low1 = output.low_weight_codewords(d + 1, budgets)?;
        if low1.iter().any(|c| linalg::weight(c) == d + 1) {
            return Err(Error::PostconditionFailed(
                "output has weight d+1 codewords".into(),
            ));
        }
        let mut span1 = EchelonBasis::new(f.clone(), n);
        for c in &low1 {
            span1.add(c);
        }
        if span1.dim() != t - 1 {
            return Err(Error::PostconditionFailed(
                "span of weight <= d+1 codewords has the wrong dimension".into(),
            ));
        }
    }

    let scalars = vec![f.one(); fresh];
    Ok(InsertionResult {
        output,
        modified_row: b,
        positions,
        scalars,
        d,
        t_before: t,
        t_after: t - 1,
    })
}

/// Function-correction capability of a linear code at function distance d_f:
/// the components of the (d_f - 1)-distance graph are cosets of the span of
/// the weight-< d_f codewords, so gamma = q^t' and the component count
/// (which caps the image size of a usable function) is q^(k - t').
#[derive(Clone, Debug)]
pub struct CapabilityReport {
    pub q: u64,
    pub k: usize,
    pub d_d: usize,
    pub d_f: usize,
    pub span_dim: usize,
    pub gamma: BigUint,
    pub component_count: BigUint,
    pub max_image_size: BigUint,
    pub strict_possible: bool,
}

pub fn fcc_capability(code: &Code, d_f: usize, budgets: &Budgets) -> Result<CapabilityReport> {
    let k = code
        .dimension()
        .ok_or_else(|| Error::Invalid("capability report needs a linear code".into()))?;
    let q = code.field().order();
    let d_d = code.min_distance(budgets)?;
    let span_dim = code.subcode_span_dim(d_f.saturating_sub(1), budgets)?;
    let gamma = BigUint::from(q).pow(span_dim as u32);
    let component_count = BigUint::from(q).pow((k - span_dim) as u32);
    Ok(CapabilityReport {
        q,
        k,
        d_d,
        d_f,
        span_dim,
        gamma,
        component_count: component_count.clone(),
        max_image_size: component_count,
        strict_possible: span_dim < k && d_f > d_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{chain_generate, ChainSpec, ChainVariant};
    use crate::field::Field;
    use std::sync::Arc;

    fn open_chain(k: usize, d: usize, s: usize, q: u64) -> Code {
        let f = Field::prime(q).unwrap();
        chain_generate(&ChainSpec::new(ChainVariant::Open, k, d, s, f)).unwrap()
    }

    fn closed_chain(k: usize, d: usize, s: usize, q: u64) -> Code {
        let f = Field::prime(q).unwrap();
        chain_generate(&ChainSpec::new(ChainVariant::Closed, k, d, s, f)).unwrap()
    }

    fn example_binary_code() -> Code {
        let f = Field::prime(2).unwrap();
        let rows = [
            [1, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0],
            [0, 0, 0, 1, 1, 1],
        ]
        .iter()
        .map(|r| r.iter().map(|&v| f.from_int(v)).collect())
        .collect();
        Code::from_generator(f, rows).unwrap()
    }

    /// Oracle: enumerate the span of `rows` by nested scalar loops with raw
    /// field operations and return (weight -> count).
    fn brute_weights(field: &Arc<Field>, rows: &[Vector]) -> std::collections::BTreeMap<usize, u64> {
        let q = field.order();
        let k = rows.len();
        let n = rows[0].len();
        let mut counts = std::collections::BTreeMap::new();
        let total = (0..k).fold(1u64, |acc, _| acc * q);
        for m in 0..total {
            let mut digits = Vec::with_capacity(k);
            let mut rem = m;
            for _ in 0..k {
                digits.push(rem % q);
                rem /= q;
            }
            let mut v = vec![field.zero(); n];
            for (digit, row) in digits.iter().zip(rows) {
                if *digit == 0 {
                    continue;
                }
                let c = field.from_index(*digit).unwrap();
                for (vi, &ri) in v.iter_mut().zip(row) {
                    *vi = field.add(*vi, field.mul(c, ri));
                }
            }
            *counts.entry(linalg::weight(&v)).or_insert(0u64) += 1;
        }
        counts
    }

    #[test]
    fn min_weight_basis_of_chain_codes() {
        let b = Budgets::default();
        let code = open_chain(3, 6, 1, 3);
        let basis = min_weight_basis(&code, &b).unwrap();
        assert_eq!(basis.t, 3);
        assert_eq!(basis.d, 6);
        assert!(basis.completion.is_empty());
        // each basis row is a scalar multiple of a generator row
        for a in &basis.min_rows {
            let sup = linalg::support(a);
            assert_eq!(sup.len(), 6);
            assert_eq!(sup, (sup[0]..sup[0] + 6).collect::<Vec<_>>());
        }

        let code = open_chain(2, 6, 1, 5);
        assert_eq!(min_weight_basis(&code, &b).unwrap().t, 2);
    }

    #[test]
    fn repetition_code_has_t_one() {
        let f = Field::prime(3).unwrap();
        let code = Code::from_generator(f.clone(), vec![vec![f.one(); 5]]).unwrap();
        let basis = min_weight_basis(&code, &Budgets::default()).unwrap();
        assert_eq!(basis.t, 1);
        assert!(matches!(
            one_position_insert(&code, Some(basis), &Budgets::default()),
            Err(Error::ConditionsViolated(_))
        ));
    }

    #[test]
    fn conditions_hold_for_chain_instances() {
        let b = Budgets::default();
        let c = insertion_conditions(&open_chain(2, 6, 1, 5), InsertMode::One, &b).unwrap();
        assert!(c.all_hold());
        assert_eq!((c.a_d, c.t), (8, 2));
        let c = insertion_conditions(&closed_chain(3, 6, 1, 3), InsertMode::One, &b).unwrap();
        assert!(c.all_hold());
        assert_eq!((c.a_d, c.t), (6, 3));
    }

    #[test]
    fn conditions_fail_for_binary_example() {
        // oracle: the 8 codewords have A_3 = 2 > 0, so the d+1 gap fails
        let code = example_binary_code();
        let counts = brute_weights(code.field(), &code.generator().unwrap().rows_vec());
        assert_eq!(counts.get(&3), Some(&2));
        let c = insertion_conditions(&code, InsertMode::One, &Budgets::default()).unwrap();
        assert!(c.count_matches);
        assert!(!c.tail_empty);
        assert!(matches!(
            one_position_insert(&code, None, &Budgets::default()),
            Err(Error::ConditionsViolated(_))
        ));
    }

    #[test]
    fn one_position_insert_on_2_6_1_over_gf5() {
        let b = Budgets::default();
        let code = open_chain(2, 6, 1, 5);
        let res = one_position_insert(&code, None, &b).unwrap();
        assert_eq!(res.output.len(), 11);
        assert_eq!(res.output.dimension(), Some(2));
        assert_eq!(res.positions, vec![0]);
        assert_eq!((res.t_before, res.t_after), (2, 1));
        // oracle: enumerate the 25 codewords of the output span directly
        let rows = res.output.generator().unwrap().rows_vec();
        let counts = brute_weights(code.field(), &rows);
        assert_eq!(counts.get(&6), Some(&4)); // A_6(D) = 4
        assert!(!counts.contains_key(&5));
        assert_eq!(res.output.min_distance(&b).unwrap(), 6);
        assert_eq!(res.output.subcode_span_dim(6, &b).unwrap(), 1);
    }

    #[test]
    fn one_position_insert_on_3_6_1_over_gf3() {
        let b = Budgets::default();
        let code = open_chain(3, 6, 1, 3);
        let res = one_position_insert(&code, None, &b).unwrap();
        assert_eq!(res.output.len(), 16);
        assert_eq!(res.output.dimension(), Some(3));
        assert_eq!(res.t_after, 2);
        // components of the distance graph at alpha = 6: 3 cosets of size 9
        let part =
            crate::distgraph::components_cayley(&res.output, 6, &b, 1 << 16).unwrap();
        assert_eq!(part.count(), BigUint::from(3u32));
        assert_eq!(part.gamma(), Some(BigUint::from(9u32)));
    }

    #[test]
    fn two_position_insert_on_2_8_2_over_gf5() {
        let b = Budgets::default();
        let code = open_chain(2, 8, 2, 5);
        let res = two_position_insert(&code, None, &b).unwrap();
        assert_eq!(res.output.len(), 14);
        assert_eq!(res.output.dimension(), Some(2));
        assert_eq!(res.positions, vec![0, 1]);
        let rows = res.output.generator().unwrap().rows_vec();
        let counts = brute_weights(code.field(), &rows);
        assert_eq!(counts.get(&8), Some(&4));
        assert_eq!(counts.get(&9), None); // A_9(D) = 0
        assert_eq!(res.output.subcode_span_dim(9, &b).unwrap(), 1);
    }

    #[test]
    fn two_position_insert_on_3_8_1_over_gf3() {
        let b = Budgets::default();
        let code = open_chain(3, 8, 1, 3);
        let res = two_position_insert(&code, None, &b).unwrap();
        assert_eq!(res.output.len(), 22);
        assert_eq!(res.output.dimension(), Some(3));
        assert_eq!(res.t_after, 2);
        let rows = res.output.generator().unwrap().rows_vec();
        let counts = brute_weights(code.field(), &rows);
        assert_eq!(counts.get(&9), None);
    }

    #[test]
    fn two_position_insert_rejects_weaker_overlap() {
        // s = 2 = (6-2)/2 passes the first-level bound but exceeds (6-4)/2,
        // and the measured tail is indeed nonzero
        let b = Budgets::default();
        let code = open_chain(2, 6, 2, 5);
        let c = insertion_conditions(&code, InsertMode::Two, &b).unwrap();
        assert!(!c.tail_empty);
        assert!(matches!(
            two_position_insert(&code, None, &b),
            Err(Error::ConditionsViolated(_))
        ));
    }

    #[test]
    fn capability_before_and_after_insertion() {
        let b = Budgets::default();
        let code = open_chain(3, 6, 1, 3);
        let pre = fcc_capability(&code, 7, &b).unwrap();
        assert_eq!(pre.max_image_size, BigUint::from(1u32)); // k = t
        assert!(!pre.strict_possible);

        let res = one_position_insert(&code, None, &b).unwrap();
        let post = fcc_capability(&res.output, 7, &b).unwrap();
        assert_eq!(post.max_image_size, BigUint::from(3u32));
        assert_eq!(post.component_count, BigUint::from(3u32));
        assert_eq!((post.d_d, post.d_f), (6, 7));
        assert!(post.strict_possible);
    }

    #[test]
    fn weight_d_words_of_output_are_multiples_of_kept_rows() {
        let b = Budgets::default();
        let code = closed_chain(3, 6, 1, 3);
        let basis = min_weight_basis(&code, &b).unwrap();
        let res = one_position_insert(&code, Some(basis.clone()), &b).unwrap();
        let low = res.output.low_weight_codewords(6, &b).unwrap();
        let f = code.field();
        for c in &low {
            let is_multiple = basis.min_rows[..basis.t - 1].iter().any(|a| {
                f.nonzero_elements()
                    .any(|s| linalg::scaled(f, a, s) == *c)
            });
            assert!(is_multiple);
        }
    }
}
