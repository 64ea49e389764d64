//! Function-correcting encodings with data protection: feasibility against
//! the component-grouping condition, deterministic encoding construction,
//! verification (exhaustive, structural, sampled), nearest-codeword
//! decoding and seeded channel trials.
//!
//! An (f : d_d, d_f) encoding maps messages injectively into a code so that
//! all distinct codewords are at distance >= d_d and codewords of messages
//! with different function values are at distance >= d_f.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codes::{self, Code};
use crate::distgraph::{self, ComponentPartition};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{self, EchelonBasis, Matrix, Vector};
use crate::Budgets;

/// A function value, canonicalized to a token string so that table-valued,
/// linear-map and projection functions compare uniformly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct FuncValue(pub String);

pub fn value_of_vector(field: &Field, v: &[FieldElement]) -> FuncValue {
    let parts: Vec<String> = v.iter().map(|e| field.fmt_element(*e)).collect();
    FuncValue(format!("[{}]", parts.join(",")))
}

#[derive(Clone)]
pub enum FunctionRepr {
    /// Explicit complete table message -> value.
    Table(Vec<(Vector, FuncValue)>),
    /// f(u) = u A for a k x l matrix A.
    LinearMap(Matrix),
    /// f(u) = the restriction of u to a coordinate subset.
    Projection(Vec<usize>),
}

/// A function on the message space F_q^k.
#[derive(Clone)]
pub struct FunctionSpec {
    field: Arc<Field>,
    k: usize,
    repr: FunctionRepr,
}

impl FunctionSpec {
    pub fn table(field: Arc<Field>, k: usize, pairs: Vec<(Vector, FuncValue)>) -> Result<FunctionSpec> {
        let expected = codes::checked_pow(field.order(), k as u32);
        if expected != Some(pairs.len() as u128) {
            return Err(Error::Invalid(format!(
                "table must cover the whole domain of {} messages",
                expected.map(|e| e.to_string()).unwrap_or_else(|| "q^k".into())
            )));
        }
        let mut seen = HashSet::new();
        for (m, _) in &pairs {
            if m.len() != k {
                return Err(Error::LengthMismatch {
                    expected: k,
                    got: m.len(),
                });
            }
            if !seen.insert(m.clone()) {
                return Err(Error::Invalid("table repeats a message".into()));
            }
        }
        Ok(FunctionSpec {
            field,
            k,
            repr: FunctionRepr::Table(pairs),
        })
    }

    pub fn linear_map(matrix: Matrix) -> FunctionSpec {
        FunctionSpec {
            field: matrix.field().clone(),
            k: matrix.nrows(),
            repr: FunctionRepr::LinearMap(matrix),
        }
    }

    pub fn projection(field: Arc<Field>, k: usize, coords: Vec<usize>) -> Result<FunctionSpec> {
        if coords.iter().any(|&c| c >= k) {
            return Err(Error::Invalid("projection coordinate out of range".into()));
        }
        Ok(FunctionSpec {
            field,
            k,
            repr: FunctionRepr::Projection(coords),
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// Message length k.
    pub fn message_len(&self) -> usize {
        self.k
    }

    pub fn repr(&self) -> &FunctionRepr {
        &self.repr
    }

    pub fn eval(&self, u: &[FieldElement]) -> Result<FuncValue> {
        if u.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: u.len(),
            });
        }
        match &self.repr {
            FunctionRepr::Table(pairs) => pairs
                .iter()
                .find(|(m, _)| m[..] == *u)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::Invalid("message missing from function table".into())),
            FunctionRepr::LinearMap(a) => Ok(value_of_vector(&self.field, &a.row_times(u))),
            FunctionRepr::Projection(coords) => {
                let picked: Vector = coords.iter().map(|&c| u[c]).collect();
                Ok(value_of_vector(&self.field, &picked))
            }
        }
    }

    /// The function as a matrix when it is linear (linear map or
    /// projection).
    pub fn linear_matrix(&self) -> Option<Matrix> {
        match &self.repr {
            FunctionRepr::LinearMap(a) => Some(a.clone()),
            FunctionRepr::Projection(coords) => {
                let mut a = Matrix::zero(self.field.clone(), self.k, coords.len());
                for (j, &c) in coords.iter().enumerate() {
                    a.set(c, j, self.field.one());
                }
                Some(a)
            }
            FunctionRepr::Table(_) => None,
        }
    }

    /// Image values with exact preimage sizes, in canonical (sorted token)
    /// order. Works symbolically for linear functions on huge domains.
    pub fn image_summary(&self, budgets: &Budgets) -> Result<Vec<(FuncValue, BigUint)>> {
        let q = self.field.order();
        let enumerable = codes::checked_pow(q, self.k as u32)
            .map(|t| t <= budgets.enumeration as u128)
            .unwrap_or(false);
        if enumerable {
            let groups = self.tabulate(budgets)?;
            return Ok(groups
                .into_iter()
                .map(|(v, msgs)| (v, BigUint::from(msgs.len())))
                .collect());
        }
        let Some(a) = self.linear_matrix() else {
            return Err(Error::BudgetExceeded {
                stage: "function tabulation",
                needed: codes::checked_pow(q, self.k as u32).unwrap_or(u128::MAX),
                budget: budgets.enumeration,
            });
        };
        // image = row space of A; preimages all have size q^(k - rank)
        let (rref, pivots) = a.rref();
        let r = pivots.len();
        let image_size = codes::checked_pow(q, r as u32).unwrap_or(u128::MAX);
        if image_size > (1 << 20) {
            return Err(Error::BudgetExceeded {
                stage: "image enumeration",
                needed: image_size,
                budget: 1 << 20,
            });
        }
        let basis: Vec<Vector> = (0..r).map(|i| rref.row(i).to_vec()).collect();
        let preimage = BigUint::from(q).pow((self.k - r) as u32);
        let mut values = Vec::with_capacity(image_size as usize);
        let f = &self.field;
        let mut digits = vec![0u64; r];
        loop {
            let mut v = linalg::zero_vector(f, a.ncols());
            for (d, row) in digits.iter().zip(&basis) {
                if *d == 0 {
                    continue;
                }
                let c = f.from_index(*d).unwrap();
                for (vi, &ri) in v.iter_mut().zip(row) {
                    *vi = f.add(*vi, f.mul(c, ri));
                }
            }
            values.push((value_of_vector(f, &v), preimage.clone()));
            let mut pos = r;
            let mut done = false;
            loop {
                if pos == 0 {
                    done = true;
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
            }
            if done {
                break;
            }
        }
        values.sort_by(|a, b| a.0.cmp(&b.0));
        values.dedup_by(|a, b| a.0 == b.0);
        Ok(values)
    }

    /// Group the whole (enumerable) domain by value: values in canonical
    /// order, messages within a value in lexicographic order.
    pub fn tabulate(&self, budgets: &Budgets) -> Result<Vec<(FuncValue, Vec<Vector>)>> {
        let mut groups: BTreeMap<FuncValue, Vec<Vector>> = BTreeMap::new();
        let mut err = None;
        codes::enumerate_tuples(&self.field, self.k, budgets.enumeration, |u| {
            if err.is_some() {
                return;
            }
            match self.eval(u) {
                Ok(v) => groups.entry(v).or_default().push(u.to_vec()),
                Err(e) => err = Some(e),
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        Ok(groups.into_iter().collect())
    }
}

/// Outcome of the component-grouping search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupingOutcome {
    /// Component indices per function value, parallel to the feasibility
    /// report's value list.
    Feasible(Vec<Vec<usize>>),
    /// Uniform component sizes divide every preimage size (linear fast
    /// path); a grouping exists without being materialized.
    FeasibleUniform,
    /// The sufficient grouping condition cannot be met. (The encoding may
    /// still exist by other means; this verdict is about the grouping
    /// condition only.)
    Infeasible,
    /// Node budget exhausted before a decision.
    Unknown,
}

/// Serialize an exact count as a JSON number when it fits u64, as a
/// decimal string otherwise.
pub fn serialize_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(n) => s.serialize_u64(n),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearFastPath {
    #[serde(serialize_with = "serialize_biguint")]
    pub gamma: BigUint,
    #[serde(serialize_with = "serialize_biguint")]
    pub component_count: BigUint,
    /// component count >= number of function values
    pub l1: bool,
    /// every preimage size is a multiple of gamma
    pub l2: bool,
}

#[derive(Clone)]
pub struct FeasibilityReport {
    pub d_d: usize,
    pub d_f: usize,
    pub c1_holds: bool,
    /// Values in canonical order with exact preimage sizes.
    pub values: Vec<(FuncValue, BigUint)>,
    pub c2: GroupingOutcome,
    pub linear_fast_path: Option<LinearFastPath>,
    pub components: Option<ComponentPartition>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.c1_holds
            && matches!(
                self.c2,
                GroupingOutcome::Feasible(_) | GroupingOutcome::FeasibleUniform
            )
    }
}

/// Minimum distance with a low-weight fallback: when full enumeration is
/// out of budget, decide d_min = cap exactly from the weight-<= cap search.
fn min_distance_bounded(code: &Code, cap: usize, budgets: &Budgets) -> Result<Option<usize>> {
    match code.min_distance(budgets) {
        Ok(d) => Ok(Some(d)),
        Err(Error::BudgetExceeded { .. }) => {
            let low = code.low_weight_codewords(cap, budgets)?;
            Ok(low.iter().map(|c| linalg::weight(c)).min())
        }
        Err(e) => Err(e),
    }
}

/// Check the two encoding-existence conditions: the code's minimum distance
/// equals d_d, and the components of the (d_f - 1)-distance graph can be
/// grouped to match the function's preimage sizes exactly.
pub fn check_feasibility(
    code: &Code,
    f: &FunctionSpec,
    d_d: usize,
    d_f: usize,
    budgets: &Budgets,
) -> Result<FeasibilityReport> {
    if d_f < d_d {
        return Err(Error::Invalid("d_f must be at least d_d".into()));
    }
    let c1_holds = min_distance_bounded(code, d_d, budgets)? == Some(d_d);
    let values = f.image_summary(budgets)?;

    let alpha = d_f - 1;
    let components = if code.is_linear() {
        distgraph::components_cayley(code, alpha, budgets, 1 << 16)?
    } else {
        distgraph::components_explicit(code, alpha, budgets)?
    };

    let linear_fast_path = match &components {
        ComponentPartition::Cayley { .. } => {
            let gamma = components.gamma().unwrap();
            let count = components.count();
            let l1 = count >= BigUint::from(values.len());
            let l2 = values
                .iter()
                .all(|(_, size)| (size % &gamma) == BigUint::from(0u32));
            Some(LinearFastPath {
                gamma,
                component_count: count,
                l1,
                l2,
            })
        }
        ComponentPartition::Explicit { .. } => None,
    };

    // exact grouping over materialized components when possible
    let c2 = match components.blocks_members(budgets.enumeration) {
        Ok(blocks) => {
            let sizes: Vec<u128> = blocks.iter().map(|b| b.len() as u128).collect();
            let targets: Option<Vec<u128>> =
                values.iter().map(|(_, s)| u128::try_from(s).ok()).collect();
            match targets {
                Some(targets) => group_components(&sizes, &targets, budgets.grouping_nodes),
                None => fast_path_outcome(&linear_fast_path),
            }
        }
        Err(_) => fast_path_outcome(&linear_fast_path),
    };

    Ok(FeasibilityReport {
        d_d,
        d_f,
        c1_holds,
        values,
        c2,
        linear_fast_path,
        components: Some(components),
    })
}

fn fast_path_outcome(fast: &Option<LinearFastPath>) -> GroupingOutcome {
    match fast {
        Some(fp) if fp.l1 && fp.l2 => GroupingOutcome::FeasibleUniform,
        Some(_) => GroupingOutcome::Infeasible,
        None => GroupingOutcome::Unknown,
    }
}

/// Exact-sum assignment of components to targets: depth-first over targets
/// (largest first), components scanned in descending-size order, memoized
/// failure states, bounded by a node budget.
fn group_components(sizes: &[u128], targets: &[u128], node_budget: u64) -> GroupingOutcome {
    if sizes.len() > 64 {
        return GroupingOutcome::Unknown;
    }
    let mut order: Vec<usize> = (0..sizes.len()).collect();
    order.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
    let sorted_sizes: Vec<u128> = order.iter().map(|&i| sizes[i]).collect();

    let mut target_order: Vec<usize> = (0..targets.len()).collect();
    target_order.sort_by(|&a, &b| targets[b].cmp(&targets[a]).then(a.cmp(&b)));

    struct Dfs<'a> {
        sizes: &'a [u128],
        nodes: u64,
        budget: u64,
        failed: HashSet<(usize, u64)>,
    }

    impl Dfs<'_> {
        /// Pick an unused subset (as a mask over sorted components) summing
        /// to each remaining target in turn.
        fn solve(
            &mut self,
            t: usize,
            targets: &[u128],
            used: u64,
            picks: &mut Vec<u64>,
        ) -> Option<bool> {
            if t == targets.len() {
                return Some(true);
            }
            if self.failed.contains(&(t, used)) {
                return Some(false);
            }
            if self.nodes >= self.budget {
                return None; // budget exhausted
            }
            self.nodes += 1;
            let mut mask = 0u64;
            let found = self.subset(t, targets, used, 0, targets[t], &mut mask, picks);
            match found {
                Some(true) => Some(true),
                Some(false) => {
                    self.failed.insert((t, used));
                    Some(false)
                }
                None => None,
            }
        }

        #[allow(clippy::too_many_arguments)]
        fn subset(
            &mut self,
            t: usize,
            targets: &[u128],
            used: u64,
            from: usize,
            remaining: u128,
            mask: &mut u64,
            picks: &mut Vec<u64>,
        ) -> Option<bool> {
            if remaining == 0 {
                picks.push(*mask);
                match self.solve(t + 1, targets, used | *mask, picks) {
                    Some(true) => return Some(true),
                    Some(false) => {
                        picks.pop();
                        return Some(false);
                    }
                    None => return None,
                }
            }
            if self.nodes >= self.budget {
                return None;
            }
            self.nodes += 1;
            for i in from..self.sizes.len() {
                if used & (1 << i) != 0 || *mask & (1 << i) != 0 {
                    continue;
                }
                if self.sizes[i] > remaining {
                    continue;
                }
                *mask |= 1 << i;
                match self.subset(t, targets, used, i + 1, remaining - self.sizes[i], mask, picks) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
                *mask &= !(1 << i);
            }
            Some(false)
        }
    }

    let mut dfs = Dfs {
        sizes: &sorted_sizes,
        nodes: 0,
        budget: node_budget,
        failed: HashSet::new(),
    };
    let ordered_targets: Vec<u128> = target_order.iter().map(|&i| targets[i]).collect();
    let mut picks: Vec<u64> = Vec::new();
    match dfs.solve(0, &ordered_targets, 0, &mut picks) {
        Some(true) => {
            // translate masks back to original component indices per value
            let mut grouping = vec![Vec::new(); targets.len()];
            for (slot, mask) in picks.iter().enumerate() {
                let value_idx = target_order[slot];
                for (pos, &orig) in order.iter().enumerate() {
                    if mask & (1 << pos) != 0 {
                        grouping[value_idx].push(orig);
                    }
                }
                grouping[value_idx].sort_unstable();
            }
            GroupingOutcome::Feasible(grouping)
        }
        Some(false) => GroupingOutcome::Infeasible,
        None => GroupingOutcome::Unknown,
    }
}

/// An encoding together with its declared distances and grouping.
#[derive(Clone)]
pub struct FccEncoding {
    pub code: Code,
    pub d_d: usize,
    pub d_f: usize,
    pub assignment: Assignment,
}

#[derive(Clone)]
pub enum Assignment {
    Table {
        /// message -> codeword, grouped by value, injective.
        pairs: Vec<(Vector, Vector)>,
        /// declared grouping: value -> codewords serving it.
        groups: Vec<(FuncValue, Vec<Vector>)>,
    },
    Structured(StructuredAssignment),
}

/// Coset-structured encoding for a linear code and a linear function:
/// messages split along (kernel basis | complement basis); the kernel part
/// selects a codeword inside the subcode D, the complement part selects the
/// coset of D, and the function value depends on the coset alone.
#[derive(Clone)]
pub struct StructuredAssignment {
    pub subcode: Code,
    /// Rows completing the subcode's basis inside the ambient code.
    pub complement_rows: Vec<Vector>,
    /// Basis of the kernel of the function matrix in message space.
    pub kernel_msg_basis: Vec<Vector>,
    /// Completion of the kernel basis in message space, one row per coset
    /// coordinate.
    pub complement_msg_basis: Vec<Vector>,
    /// Value of each coset, indexed by the complement coordinate tuple in
    /// lexicographic order.
    pub value_map: Vec<(Vector, FuncValue)>,
}

impl FccEncoding {
    pub fn strict(&self) -> bool {
        self.d_f > self.d_d
    }

    /// Encode a message (explicit tables only).
    pub fn encode(&self, u: &[FieldElement]) -> Result<Vector> {
        match &self.assignment {
            Assignment::Table { pairs, .. } => pairs
                .iter()
                .find(|(m, _)| m[..] == *u)
                .map(|(_, c)| c.clone())
                .ok_or_else(|| Error::Invalid("message missing from assignment".into())),
            Assignment::Structured(_) => Err(Error::Invalid(
                "structured encodings encode via coordinates; use encode_coords".into(),
            )),
        }
    }

    /// Encode from split coordinates (structured assignments): `a` selects
    /// within the subcode, `b` selects the coset.
    pub fn encode_coords(&self, a: &[FieldElement], b: &[FieldElement]) -> Result<(Vector, Vector)> {
        let Assignment::Structured(sa) = &self.assignment else {
            return Err(Error::Invalid("not a structured assignment".into()));
        };
        let f = self.code.field();
        let gd = sa.subcode.generator().unwrap();
        if a.len() != gd.nrows() || b.len() != sa.complement_rows.len() {
            return Err(Error::LengthMismatch {
                expected: gd.nrows() + sa.complement_rows.len(),
                got: a.len() + b.len(),
            });
        }
        let mut cw = gd.row_times(a);
        for (bi, row) in b.iter().zip(&sa.complement_rows) {
            if bi.is_zero() {
                continue;
            }
            for (ci, &ri) in cw.iter_mut().zip(row) {
                *ci = f.add(*ci, f.mul(*bi, ri));
            }
        }
        // the corresponding message
        let mut msg = linalg::zero_vector(f, sa.kernel_msg_basis.first().map(|v| v.len()).unwrap_or(0));
        for (ai, row) in a.iter().zip(&sa.kernel_msg_basis) {
            if ai.is_zero() {
                continue;
            }
            for (mi, &ri) in msg.iter_mut().zip(row) {
                *mi = f.add(*mi, f.mul(*ai, ri));
            }
        }
        for (bi, row) in b.iter().zip(&sa.complement_msg_basis) {
            if bi.is_zero() {
                continue;
            }
            for (mi, &ri) in msg.iter_mut().zip(row) {
                *mi = f.add(*mi, f.mul(*bi, ri));
            }
        }
        Ok((msg, cw))
    }
}

/// Deterministic explicit encoding from a feasible report: the i-th
/// preimage (messages in lexicographic order) maps onto the i-th group
/// (codewords in canonical order).
pub fn build_encoding(
    code: &Code,
    f: &FunctionSpec,
    d_d: usize,
    d_f: usize,
    report: &FeasibilityReport,
    budgets: &Budgets,
) -> Result<FccEncoding> {
    if !report.feasible() {
        return Err(Error::InfeasibleReport);
    }
    let GroupingOutcome::Feasible(grouping) = &report.c2 else {
        return Err(Error::StructuredPathUnavailable(
            "uniform fast-path feasibility needs the structured builder".into(),
        ));
    };
    let components = report
        .components
        .as_ref()
        .ok_or_else(|| Error::Invalid("report carries no components".into()))?;
    let blocks = components.blocks_members(budgets.enumeration)?;
    let tab = f.tabulate(budgets)?;
    if tab.len() != report.values.len() {
        return Err(Error::Invalid("function changed since feasibility".into()));
    }

    let mut pairs = Vec::new();
    let mut groups = Vec::new();
    for (vi, (value, msgs)) in tab.iter().enumerate() {
        let mut group_words: Vec<Vector> = grouping[vi]
            .iter()
            .flat_map(|&ci| blocks[ci].iter().cloned())
            .collect();
        group_words.sort();
        if group_words.len() != msgs.len() {
            return Err(Error::PostconditionFailed(
                "group size mismatches preimage size".into(),
            ));
        }
        for (m, c) in msgs.iter().zip(&group_words) {
            pairs.push((m.clone(), c.clone()));
        }
        groups.push((value.clone(), group_words));
    }

    Ok(FccEncoding {
        code: code.clone(),
        d_d,
        d_f,
        assignment: Assignment::Table { pairs, groups },
    })
}

/// Coset-structured encoding for a linear code, a linear function and a
/// subcode D containing all codewords of weight < d_f, with
/// codim(D) = rank of the function matrix.
pub fn build_structured(
    code: &Code,
    f: &FunctionSpec,
    d_d: usize,
    d_f: usize,
    subcode: &Code,
    budgets: &Budgets,
) -> Result<FccEncoding> {
    let Some(k) = code.dimension() else {
        return Err(Error::StructuredPathUnavailable(
            "the structured path needs a linear code".into(),
        ));
    };
    let Some(a) = f.linear_matrix() else {
        return Err(Error::StructuredPathUnavailable(
            "the structured path needs a linear function".into(),
        ));
    };
    if f.message_len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: f.message_len(),
        });
    }
    let Some(kd) = subcode.dimension() else {
        return Err(Error::StructuredPathUnavailable("subcode must be linear".into()));
    };
    let field = code.field().clone();
    let q = field.order();

    // subcode containment and codimension against the function rank
    let gd = subcode.generator().unwrap();
    let mut code_basis = EchelonBasis::new(field.clone(), code.len());
    let gen = code.generator().unwrap();
    for r in 0..gen.nrows() {
        code_basis.add(gen.row(r));
    }
    for r in 0..gd.nrows() {
        if !code_basis.contains(gd.row(r)) {
            return Err(Error::NotASubcode);
        }
    }
    let codim = k - kd;
    let (_, pivots) = a.rref();
    let rank = pivots.len();
    if rank != codim {
        return Err(Error::StructuredPathUnavailable(format!(
            "function rank {rank} must equal the subcode codimension {codim}"
        )));
    }
    let e_count = codes::checked_pow(q, rank as u32).unwrap_or(u128::MAX);
    if e_count > (1 << 20) {
        return Err(Error::BudgetExceeded {
            stage: "value map enumeration",
            needed: e_count,
            budget: 1 << 20,
        });
    }

    // complement of D inside the code: generator RREF rows independent of D,
    // smallest pivot first
    let mut d_basis = EchelonBasis::new(field.clone(), code.len());
    for r in 0..gd.nrows() {
        d_basis.add(gd.row(r));
    }
    let (code_rref, _) = gen.rref();
    let mut complement_rows = Vec::new();
    for r in 0..code_rref.nrows() {
        if d_basis.add(code_rref.row(r)) {
            complement_rows.push(code_rref.row(r).to_vec());
        }
    }
    if complement_rows.len() != codim {
        return Err(Error::PostconditionFailed(
            "complement basis has the wrong size".into(),
        ));
    }

    // message-space split: kernel of A, completed by identity rows
    let at = transpose(&a);
    let kernel = at.kernel_basis();
    if kernel.len() != k - rank {
        return Err(Error::PostconditionFailed("kernel dimension mismatch".into()));
    }
    let mut msg_basis = EchelonBasis::new(field.clone(), k);
    for v in &kernel {
        msg_basis.add(v);
    }
    let mut complement_msg = Vec::new();
    for i in 0..k {
        let mut e = linalg::zero_vector(&field, k);
        e[i] = field.one();
        if msg_basis.add(&e) {
            complement_msg.push(e);
        }
        if complement_msg.len() == rank {
            break;
        }
    }
    if complement_msg.len() != rank {
        return Err(Error::PostconditionFailed(
            "message complement basis has the wrong size".into(),
        ));
    }

    // value map: b -> f(sum b_j w_j), must be injective
    let w_images: Vec<Vector> = complement_msg.iter().map(|w| a.row_times(w)).collect();
    let mut img_rank = EchelonBasis::new(field.clone(), a.ncols());
    for wi in &w_images {
        img_rank.add(wi);
    }
    if img_rank.dim() != rank {
        return Err(Error::PostconditionFailed(
            "complement images are dependent; the value map is not injective".into(),
        ));
    }
    let mut value_map = Vec::with_capacity(e_count as usize);
    let mut digits = vec![0u64; rank];
    loop {
        let b: Vector = digits
            .iter()
            .map(|&d| field.from_index(d).unwrap())
            .collect();
        let mut img = linalg::zero_vector(&field, a.ncols());
        for (bi, wi) in b.iter().zip(&w_images) {
            if bi.is_zero() {
                continue;
            }
            for (ii, &w) in img.iter_mut().zip(wi) {
                *ii = field.add(*ii, field.mul(*bi, w));
            }
        }
        value_map.push((b, value_of_vector(&field, &img)));
        let mut pos = rank;
        let mut done = false;
        loop {
            if pos == 0 {
                done = true;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
        }
        if done {
            break;
        }
    }

    let enc = FccEncoding {
        code: code.clone(),
        d_d,
        d_f,
        assignment: Assignment::Structured(StructuredAssignment {
            subcode: subcode.clone(),
            complement_rows,
            kernel_msg_basis: kernel,
            complement_msg_basis: complement_msg,
            value_map,
        }),
    };
    let _ = budgets;
    Ok(enc)
}

fn transpose(m: &Matrix) -> Matrix {
    let mut t = Matrix::zero(m.field().clone(), m.ncols(), m.nrows());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            t.set(c, r, m.at(r, c));
        }
    }
    t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Structural,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub mode: String,
    /// Some(pass/fail) for exhaustive and structural runs; None for sampled
    /// runs, which never count as verification.
    pub verified: Option<bool>,
    pub checks: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
    pub strict: bool,
}

/// Verify the two defining distance conditions of an encoding.
pub fn verify_encoding(
    enc: &FccEncoding,
    f: &FunctionSpec,
    mode: VerifyMode,
    budgets: &Budgets,
) -> Result<VerifyReport> {
    match mode {
        VerifyMode::Exhaustive => verify_exhaustive(enc, f, budgets),
        VerifyMode::Structural => verify_structural(enc, budgets),
        VerifyMode::Sampled { samples, seed } => verify_sampled(enc, f, samples, seed),
    }
}

fn verify_exhaustive(enc: &FccEncoding, f: &FunctionSpec, budgets: &Budgets) -> Result<VerifyReport> {
    let Assignment::Table { pairs, groups } = &enc.assignment else {
        return Err(Error::Invalid(
            "exhaustive verification needs an explicit assignment table".into(),
        ));
    };
    let m = pairs.len();
    let total = (m as u128) * (m as u128);
    if total > budgets.pairs as u128 {
        return Err(Error::BudgetExceeded {
            stage: "exhaustive pair verification",
            needed: total,
            budget: budgets.pairs,
        });
    }
    // group lookup: codeword -> declared value
    let mut declared: HashMap<&Vector, &FuncValue> = HashMap::new();
    for (v, words) in groups {
        for w in words {
            declared.insert(w, v);
        }
    }
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut first = None;
    let mut values = Vec::with_capacity(m);
    for (u, c) in pairs {
        let val = f.eval(u)?;
        if declared.get(c).map(|v| **v != val).unwrap_or(true) {
            violations += 1;
            if first.is_none() {
                first = Some(format!("codeword group mismatch for message {:?}", u));
            }
        }
        values.push(val);
    }
    for i in 0..m {
        for j in i + 1..m {
            checks += 1;
            let (u1, c1) = &pairs[i];
            let (u2, c2) = &pairs[j];
            let dist = linalg::hamming_distance(c1, c2);
            if c1 == c2 {
                violations += 1;
                if first.is_none() {
                    first = Some(format!("messages {:?} and {:?} share a codeword", u1, u2));
                }
                continue;
            }
            if dist < enc.d_d {
                violations += 1;
                if first.is_none() {
                    first = Some(format!(
                        "distance {dist} < d_d between codewords of {:?} and {:?}",
                        u1, u2
                    ));
                }
            }
            if values[i] != values[j] && dist < enc.d_f {
                violations += 1;
                if first.is_none() {
                    first = Some(format!(
                        "distance {dist} < d_f across values for {:?} and {:?}",
                        u1, u2
                    ));
                }
            }
        }
    }
    Ok(VerifyReport {
        mode: "exhaustive".into(),
        verified: Some(violations == 0),
        checks,
        violations,
        first_violation: first,
        strict: enc.strict(),
    })
}

/// Structural certificate: (i) the code's minimum distance is d_d;
/// (ii) every codeword of weight < d_f lies in the subcode D, so distinct
/// cosets of D are >= d_f apart; (iii) the assignment respects cosets and
/// the value map is injective.
fn verify_structural(enc: &FccEncoding, budgets: &Budgets) -> Result<VerifyReport> {
    let Assignment::Structured(sa) = &enc.assignment else {
        return Err(Error::Invalid(
            "structural verification needs a structured assignment".into(),
        ));
    };
    let code = &enc.code;
    let field = code.field().clone();
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut first: Option<String> = None;
    let fail = |msg: String, violations: &mut u64, first: &mut Option<String>| {
        *violations += 1;
        if first.is_none() {
            *first = Some(msg);
        }
    };

    // (i) minimum distance d_d
    checks += 1;
    let low = code.low_weight_codewords(enc.d_d, budgets)?;
    let dmin = low.iter().map(|c| linalg::weight(c)).min();
    if dmin != Some(enc.d_d) {
        fail(
            format!("minimum distance is {:?}, want {}", dmin, enc.d_d),
            &mut violations,
            &mut first,
        );
    }

    // (ii) all codewords of weight <= d_f - 1 lie in D
    checks += 1;
    let mut d_basis = EchelonBasis::new(field.clone(), code.len());
    let gd = sa.subcode.generator().unwrap();
    for r in 0..gd.nrows() {
        d_basis.add(gd.row(r));
    }
    let low_f = code.low_weight_codewords(enc.d_f - 1, budgets)?;
    for w in &low_f {
        if !d_basis.contains(w) {
            fail(
                "a low-weight codeword escapes the subcode".into(),
                &mut violations,
                &mut first,
            );
            break;
        }
    }

    // (iii) assignment respects cosets: subcode rows and complement rows are
    // codewords, the complement is independent of D, the message split is a
    // basis, and the declared value map is injective
    checks += 1;
    for r in 0..gd.nrows() {
        if !code.membership(gd.row(r))? {
            fail("subcode row outside the code".into(), &mut violations, &mut first);
            break;
        }
    }
    for row in &sa.complement_rows {
        if !code.membership(row)? {
            fail("complement row outside the code".into(), &mut violations, &mut first);
        }
        if !d_basis.add(row) {
            fail(
                "complement row is not independent of the subcode".into(),
                &mut violations,
                &mut first,
            );
        }
    }
    checks += 1;
    let k = code.dimension().unwrap_or(0);
    let mut msg_basis = EchelonBasis::new(field.clone(), k);
    for v in sa.kernel_msg_basis.iter().chain(&sa.complement_msg_basis) {
        if !msg_basis.add(v) {
            fail("message split is not a basis".into(), &mut violations, &mut first);
            break;
        }
    }
    if msg_basis.dim() != k {
        fail("message split misses the full space".into(), &mut violations, &mut first);
    }
    checks += 1;
    let mut seen = HashSet::new();
    for (_, v) in &sa.value_map {
        if !seen.insert(v.clone()) {
            fail("value map repeats a value".into(), &mut violations, &mut first);
            break;
        }
    }
    let expected_entries = codes::checked_pow(field.order(), sa.complement_rows.len() as u32);
    if Some(sa.value_map.len() as u128) != expected_entries {
        fail("value map does not cover all cosets".into(), &mut violations, &mut first);
    }

    Ok(VerifyReport {
        mode: "structural".into(),
        verified: Some(violations == 0),
        checks,
        violations,
        first_violation: first,
        strict: enc.strict(),
    })
}

fn verify_sampled(enc: &FccEncoding, f: &FunctionSpec, samples: u64, seed: u64) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0u64;
    let mut violations = 0u64;
    let mut first = None;
    match &enc.assignment {
        Assignment::Table { pairs, .. } => {
            let m = pairs.len();
            for _ in 0..samples {
                let i = rng.gen_range(0..m);
                let j = rng.gen_range(0..m);
                if i == j {
                    continue;
                }
                checks += 1;
                let (u1, c1) = &pairs[i];
                let (u2, c2) = &pairs[j];
                let dist = linalg::hamming_distance(c1, c2);
                if dist < enc.d_d {
                    violations += 1;
                    if first.is_none() {
                        first = Some(format!("sampled pair below d_d: {:?} {:?}", u1, u2));
                    }
                }
                if f.eval(u1)? != f.eval(u2)? && dist < enc.d_f {
                    violations += 1;
                    if first.is_none() {
                        first = Some(format!("sampled pair below d_f: {:?} {:?}", u1, u2));
                    }
                }
            }
        }
        Assignment::Structured(sa) => {
            let field = enc.code.field().clone();
            let q = field.order();
            let kd = sa.subcode.dimension().unwrap_or(0);
            let r = sa.complement_rows.len();
            let sample_vec = |rng: &mut ChaCha8Rng, len: usize| -> Vector {
                (0..len)
                    .map(|_| field.from_index(rng.gen_range(0..q)).unwrap())
                    .collect()
            };
            for _ in 0..samples {
                let a1 = sample_vec(&mut rng, kd);
                let b1 = sample_vec(&mut rng, r);
                let a2 = sample_vec(&mut rng, kd);
                let b2 = sample_vec(&mut rng, r);
                if a1 == a2 && b1 == b2 {
                    continue;
                }
                checks += 1;
                let (u1, c1) = enc.encode_coords(&a1, &b1)?;
                let (u2, c2) = enc.encode_coords(&a2, &b2)?;
                let dist = linalg::hamming_distance(&c1, &c2);
                if dist < enc.d_d {
                    violations += 1;
                    if first.is_none() {
                        first = Some("sampled structured pair below d_d".into());
                    }
                }
                if f.eval(&u1)? != f.eval(&u2)? && dist < enc.d_f {
                    violations += 1;
                    if first.is_none() {
                        first = Some("sampled structured pair below d_f".into());
                    }
                }
            }
        }
    }
    Ok(VerifyReport {
        mode: "sampled".into(),
        verified: None, // sampling never upgrades to a verdict
        checks,
        violations,
        first_violation: first,
        strict: enc.strict(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodeTarget {
    Data,
    Function,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Message(Vector),
    Value(FuncValue),
}

/// Nearest-codeword decoding over the assignment table. Data decoding
/// requires a unique nearest codeword; function decoding requires all
/// nearest codewords to agree on the value. Ties otherwise report
/// ambiguity.
pub fn decode(enc: &FccEncoding, received: &[FieldElement], target: DecodeTarget) -> Result<Decoded> {
    let Assignment::Table { pairs, groups } = &enc.assignment else {
        return Err(Error::Invalid(
            "decoding is supported for explicit assignment tables".into(),
        ));
    };
    if received.len() != enc.code.len() {
        return Err(Error::LengthMismatch {
            expected: enc.code.len(),
            got: received.len(),
        });
    }
    let mut best = usize::MAX;
    let mut candidates: Vec<usize> = Vec::new();
    for (i, (_, c)) in pairs.iter().enumerate() {
        let dist = linalg::hamming_distance(c, received);
        if dist < best {
            best = dist;
            candidates.clear();
            candidates.push(i);
        } else if dist == best {
            candidates.push(i);
        }
    }
    match target {
        DecodeTarget::Data => {
            if candidates.len() != 1 {
                return Err(Error::Ambiguous);
            }
            Ok(Decoded::Message(pairs[candidates[0]].0.clone()))
        }
        DecodeTarget::Function => {
            let mut value: Option<&FuncValue> = None;
            for &i in &candidates {
                let c = &pairs[i].1;
                let v = groups
                    .iter()
                    .find(|(_, words)| words.contains(c))
                    .map(|(v, _)| v)
                    .ok_or_else(|| Error::Invalid("codeword missing from groups".into()))?;
                match value {
                    None => value = Some(v),
                    Some(prev) if prev == v => {}
                    Some(_) => return Err(Error::Ambiguous),
                }
            }
            Ok(Decoded::Value(value.expect("at least one candidate").clone()))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChannelStats {
    pub trials: u64,
    pub error_weight: usize,
    pub seed: u64,
    pub data_recovered: u64,
    pub function_recovered: u64,
}

/// Monte-Carlo channel trials: uniform random messages, random errors of
/// exactly the given weight, nearest-codeword decoding. Deterministic under
/// a fixed seed.
pub fn channel_trial(
    enc: &FccEncoding,
    f: &FunctionSpec,
    error_weight: usize,
    trials: u64,
    seed: u64,
) -> Result<ChannelStats> {
    let Assignment::Table { pairs, .. } = &enc.assignment else {
        return Err(Error::Invalid(
            "channel trials are supported for explicit assignment tables".into(),
        ));
    };
    if error_weight > enc.code.len() {
        return Err(Error::Invalid("error weight exceeds the block length".into()));
    }
    let field = enc.code.field().clone();
    let q = field.order();
    let n = enc.code.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let positions: Vec<usize> = (0..n).collect();
    let mut data_recovered = 0u64;
    let mut function_recovered = 0u64;
    for _ in 0..trials {
        let (u, c) = &pairs[rng.gen_range(0..pairs.len())];
        let mut received = c.clone();
        let mut chosen = positions.clone();
        chosen.shuffle(&mut rng);
        for &pos in chosen.iter().take(error_weight) {
            let delta = field.from_index(rng.gen_range(1..q)).unwrap();
            received[pos] = field.add(received[pos], delta);
        }
        if let Ok(Decoded::Message(m)) = decode(enc, &received, DecodeTarget::Data) {
            if m == *u {
                data_recovered += 1;
            }
        }
        if let Ok(Decoded::Value(v)) = decode(enc, &received, DecodeTarget::Function) {
            if v == f.eval(u)? {
                function_recovered += 1;
            }
        }
    }
    Ok(ChannelStats {
        trials,
        error_weight,
        seed,
        data_recovered,
        function_recovered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecf(f: &Field, vals: &[i64]) -> Vector {
        vals.iter().map(|&v| f.from_int(v)).collect()
    }

    fn bits(f: &Field, s: &str) -> Vector {
        s.chars()
            .map(|c| f.from_int(c.to_digit(10).unwrap() as i64))
            .collect()
    }

    /// Nine-bit eight-codeword demonstration code and its nonlinear
    /// two-bit function.
    fn demo_code_and_fn() -> (Arc<Field>, Code, FunctionSpec) {
        let f = Field::prime(2).unwrap();
        let words: Vec<Vector> = [
            "000000000",
            "100110110",
            "010101110",
            "001011110",
            "110011101",
            "101101101",
            "011110101",
            "111000011",
        ]
        .iter()
        .map(|s| bits(&f, s))
        .collect();
        let code = Code::explicit(f.clone(), words).unwrap();
        let func = demo_fn(&f);
        (f, code, func)
    }

    /// f(x1, x2, x3) = (x1 x2, x3 (1 + x1 x2)) as a table.
    fn demo_fn(f: &Arc<Field>) -> FunctionSpec {
        let mut pairs = Vec::new();
        for x1 in 0..2i64 {
            for x2 in 0..2i64 {
                for x3 in 0..2i64 {
                    let v1 = x1 * x2;
                    let v2 = x3 * (1 + v1) % 2;
                    pairs.push((
                        vecf(f, &[x1, x2, x3]),
                        value_of_vector(f, &vecf(f, &[v1, v2])),
                    ));
                }
            }
        }
        FunctionSpec::table(f.clone(), 3, pairs).unwrap()
    }

    #[test]
    fn demo_function_preimages() {
        let (_, _, func) = demo_code_and_fn();
        let summary = func.image_summary(&Budgets::default()).unwrap();
        let sizes: Vec<(String, u64)> = summary
            .iter()
            .map(|(v, s)| (v.0.clone(), u64::try_from(s).unwrap()))
            .collect();
        assert_eq!(
            sizes,
            vec![
                ("[0,0]".to_string(), 3),
                ("[0,1]".to_string(), 3),
                ("[1,0]".to_string(), 2)
            ]
        );
    }

    #[test]
    fn demo_feasibility_and_grouping() {
        let (_, code, func) = demo_code_and_fn();
        let b = Budgets::default();
        let rep = check_feasibility(&code, &func, 4, 5, &b).unwrap();
        assert!(rep.c1_holds);
        assert!(rep.feasible());
        let GroupingOutcome::Feasible(grouping) = &rep.c2 else {
            panic!("expected explicit grouping");
        };
        // blocks in canonical order: {0^9}, {001011110,..}, {011110101,..},
        // {111000011}; value [0,0] takes the first triangle, [0,1] the
        // second, [1,0] the two singletons
        assert_eq!(grouping[0], vec![1]);
        assert_eq!(grouping[1], vec![2]);
        assert_eq!(grouping[2], vec![0, 3]);
    }

    #[test]
    fn demo_constructed_encoding_verifies() {
        let (_, code, func) = demo_code_and_fn();
        let b = Budgets::default();
        let rep = check_feasibility(&code, &func, 4, 5, &b).unwrap();
        let enc = build_encoding(&code, &func, 4, 5, &rep, &b).unwrap();
        assert!(enc.strict());
        let v = verify_encoding(&enc, &func, VerifyMode::Exhaustive, &b).unwrap();
        assert_eq!(v.verified, Some(true));
        assert_eq!(v.violations, 0);
    }

    #[test]
    fn infeasible_preimages_detected() {
        // binary [6,3] code with components {4,4}: preimages {5,3} cannot
        // be hit by unions of components
        let f = Field::prime(2).unwrap();
        let code = Code::from_generator(
            f.clone(),
            vec![
                bits(&f, "110000"),
                bits(&f, "001100"),
                bits(&f, "000111"),
            ],
        )
        .unwrap();
        let b = Budgets::default();
        // a function with preimage sizes 5 and 3: threshold on weight
        let mut pairs = Vec::new();
        let mut count = 0;
        codes::enumerate_tuples(&f, 3, b.enumeration, |u| {
            let heavy = linalg::weight(u) >= 2 && count < 3;
            if heavy {
                count += 1;
            }
            pairs.push((
                u.to_vec(),
                FuncValue(if heavy { "hi".into() } else { "lo".into() }),
            ));
        })
        .unwrap();
        let func = FunctionSpec::table(f.clone(), 3, pairs).unwrap();
        let rep = check_feasibility(&code, &func, 2, 3, &b).unwrap();
        assert_eq!(rep.c2, GroupingOutcome::Infeasible);
        assert!(matches!(
            build_encoding(&code, &func, 2, 3, &rep, &b),
            Err(Error::InfeasibleReport)
        ));

        // balanced preimages {4,4} are feasible for any such function
        let func = FunctionSpec::projection(f.clone(), 3, vec![0]).unwrap();
        let rep = check_feasibility(&code, &func, 2, 3, &b).unwrap();
        assert!(rep.feasible());
        let fp = rep.linear_fast_path.as_ref().unwrap();
        assert!(fp.l1 && fp.l2);
        let enc = build_encoding(&code, &func, 2, 3, &rep, &b).unwrap();
        let v = verify_encoding(&enc, &func, VerifyMode::Exhaustive, &b).unwrap();
        assert_eq!(v.verified, Some(true));
    }

    #[test]
    fn constant_function_uses_whole_code() {
        let f = Field::prime(2).unwrap();
        let code = Code::from_generator(
            f.clone(),
            vec![bits(&f, "110000"), bits(&f, "001100"), bits(&f, "000111")],
        )
        .unwrap();
        let b = Budgets::default();
        let pairs: Vec<(Vector, FuncValue)> = {
            let mut out = Vec::new();
            codes::enumerate_tuples(&f, 3, b.enumeration, |u| {
                out.push((u.to_vec(), FuncValue("const".into())));
            })
            .unwrap();
            out
        };
        let func = FunctionSpec::table(f.clone(), 3, pairs).unwrap();
        let rep = check_feasibility(&code, &func, 2, 3, &b).unwrap();
        assert!(rep.feasible());
        let enc = build_encoding(&code, &func, 2, 3, &rep, &b).unwrap();
        let Assignment::Table { groups, .. } = &enc.assignment else {
            panic!()
        };
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].1.len(), 8);
    }

    #[test]
    fn mutated_assignment_fails_verification() {
        let (_, code, func) = demo_code_and_fn();
        let b = Budgets::default();
        let rep = check_feasibility(&code, &func, 4, 5, &b).unwrap();
        let enc = build_encoding(&code, &func, 4, 5, &rep, &b).unwrap();
        let Assignment::Table { pairs, groups } = &enc.assignment else {
            panic!()
        };
        // swap the all-zero codeword into the first triangle's group
        let mut bad_groups = groups.clone();
        let zero = bits(code.field(), "000000000");
        let donor = bad_groups
            .iter()
            .position(|(_, ws)| ws.contains(&zero))
            .unwrap();
        bad_groups[donor].1.retain(|w| *w != zero);
        let target = (donor + 1) % bad_groups.len();
        let stolen = bad_groups[target].1.pop().unwrap();
        bad_groups[donor].1.push(stolen.clone());
        bad_groups[target].1.push(zero.clone());
        let mut bad_pairs = pairs.clone();
        for (_, c) in bad_pairs.iter_mut() {
            if *c == stolen {
                *c = zero.clone();
            } else if *c == zero {
                *c = stolen.clone();
            }
        }
        let bad = FccEncoding {
            code: code.clone(),
            d_d: 4,
            d_f: 5,
            assignment: Assignment::Table {
                pairs: bad_pairs,
                groups: bad_groups,
            },
        };
        let v = verify_encoding(&bad, &func, VerifyMode::Exhaustive, &b).unwrap();
        assert_eq!(v.verified, Some(false));
        assert!(v.violations > 0);
    }

    #[test]
    fn monotone_in_declared_distances() {
        let (_, code, func) = demo_code_and_fn();
        let b = Budgets::default();
        let rep = check_feasibility(&code, &func, 4, 5, &b).unwrap();
        let enc = build_encoding(&code, &func, 4, 5, &rep, &b).unwrap();
        for dd in 1..=4 {
            for df in dd..=5 {
                let weaker = FccEncoding {
                    code: enc.code.clone(),
                    d_d: dd,
                    d_f: df,
                    assignment: enc.assignment.clone(),
                };
                let v = verify_encoding(&weaker, &func, VerifyMode::Exhaustive, &b).unwrap();
                assert_eq!(v.verified, Some(true), "dd={dd} df={df}");
            }
        }
    }

    #[test]
    fn decode_within_radii() {
        let (f, code, func) = demo_code_and_fn();
        let b = Budgets::default();
        let rep = check_feasibility(&code, &func, 4, 5, &b).unwrap();
        let enc = build_encoding(&code, &func, 4, 5, &rep, &b).unwrap();
        let Assignment::Table { pairs, .. } = &enc.assignment else {
            panic!()
        };
        // all weight-<=1 errors recover the data; all weight-<=2 errors
        // recover the function value
        for (u, c) in pairs {
            let fu = func.eval(u).unwrap();
            for flip1 in 0..=9usize {
                let mut r1 = c.clone();
                if flip1 > 0 {
                    r1[flip1 - 1] = f.add(r1[flip1 - 1], f.one());
                }
                let got = decode(&enc, &r1, DecodeTarget::Data).unwrap();
                assert_eq!(got, Decoded::Message(u.clone()));
                for flip2 in flip1..=9usize {
                    if flip2 == flip1 {
                        continue;
                    }
                    let mut r2 = r1.clone();
                    if flip2 > 0 {
                        r2[flip2 - 1] = f.add(r2[flip2 - 1], f.one());
                    }
                    let got = decode(&enc, &r2, DecodeTarget::Function).unwrap();
                    assert_eq!(got, Decoded::Value(fu.clone()), "message {u:?}");
                }
            }
        }
    }

    #[test]
    fn zero_errors_round_trip() {
        let (_, code, func) = demo_code_and_fn();
        let b = Budgets::default();
        let rep = check_feasibility(&code, &func, 4, 5, &b).unwrap();
        let enc = build_encoding(&code, &func, 4, 5, &rep, &b).unwrap();
        let stats = channel_trial(&enc, &func, 0, 256, 7).unwrap();
        assert_eq!(stats.data_recovered, 256);
        assert_eq!(stats.function_recovered, 256);
    }

    #[test]
    fn channel_rates_at_guaranteed_radii() {
        let (_, code, func) = demo_code_and_fn();
        let b = Budgets::default();
        let rep = check_feasibility(&code, &func, 4, 5, &b).unwrap();
        let enc = build_encoding(&code, &func, 4, 5, &rep, &b).unwrap();
        let stats = channel_trial(&enc, &func, 1, 2000, 11).unwrap();
        assert_eq!(stats.data_recovered, 2000);
        let stats = channel_trial(&enc, &func, 2, 2000, 13).unwrap();
        assert_eq!(stats.function_recovered, 2000);
        // deterministic under a fixed seed
        let again = channel_trial(&enc, &func, 2, 2000, 13).unwrap();
        assert_eq!(stats.data_recovered, again.data_recovered);
    }

    #[test]
    fn structured_pipeline_small_linear_case() {
        // [6,3] binary code, D = <S_2> of dim 2, f = projection onto the
        // coordinate that distinguishes cosets
        let f = Field::prime(2).unwrap();
        let code = Code::from_generator(
            f.clone(),
            vec![bits(&f, "110000"), bits(&f, "001100"), bits(&f, "000111")],
        )
        .unwrap();
        let b = Budgets::default();
        let s2 = code.low_weight_codewords(2, &b).unwrap();
        let sub = codes::span(f.clone(), 6, &s2).unwrap();
        let func = FunctionSpec::projection(f.clone(), 3, vec![2]).unwrap();
        let enc = build_structured(&code, &func, 2, 3, &sub, &b).unwrap();
        let v = verify_encoding(&enc, &func, VerifyMode::Structural, &b).unwrap();
        assert_eq!(v.verified, Some(true));
        // sampled mode reports but never verifies
        let s = verify_encoding(
            &enc,
            &func,
            VerifyMode::Sampled {
                samples: 500,
                seed: 3,
            },
            &b,
        )
        .unwrap();
        assert_eq!(s.verified, None);
        assert_eq!(s.violations, 0);
    }

    #[test]
    fn structured_rejects_rank_mismatch() {
        let f = Field::prime(2).unwrap();
        let code = Code::from_generator(
            f.clone(),
            vec![bits(&f, "110000"), bits(&f, "001100"), bits(&f, "000111")],
        )
        .unwrap();
        let b = Budgets::default();
        let s2 = code.low_weight_codewords(2, &b).unwrap();
        let sub = codes::span(f.clone(), 6, &s2).unwrap();
        // rank-2 function against codim-1 subcode
        let func = FunctionSpec::projection(f.clone(), 3, vec![0, 2]).unwrap();
        assert!(matches!(
            build_structured(&code, &func, 2, 3, &sub, &b),
            Err(Error::StructuredPathUnavailable(_))
        ));
    }
}
