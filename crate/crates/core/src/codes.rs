//! Block codes over a finite field: linear codes via generator matrices,
//! generic codes via explicit codeword lists. Weight distributions, minimum
//! distance, low-weight codeword search, spans and coset partitions.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{self, EchelonBasis, Matrix, Vector};
use crate::Budgets;

#[derive(Clone)]
pub enum CodeKind {
    Linear { generator: Matrix },
    Explicit { codewords: Vec<Vector> },
}

/// A block code of length n over a finite field.
#[derive(Clone)]
pub struct Code {
    field: Arc<Field>,
    n: usize,
    kind: CodeKind,
}

impl Code {
    /// Linear code from spanning rows. Row-reduces to a full-rank generator;
    /// the caller's basis order is preserved when the rows are already
    /// independent.
    pub fn from_generator(field: Arc<Field>, rows: Vec<Vector>) -> Result<Code> {
        if rows.is_empty() {
            return Err(Error::RankZero);
        }
        let n = rows[0].len();
        let m = Matrix::from_rows(field.clone(), rows)?;
        let rank = m.rank();
        if rank == 0 {
            return Err(Error::RankZero);
        }
        let generator = if rank == m.nrows() {
            m
        } else {
            let (r, _) = m.rref();
            Matrix::from_rows(field.clone(), r.rows_vec().into_iter().take(rank).collect())?
        };
        Ok(Code {
            field,
            n,
            kind: CodeKind::Linear { generator },
        })
    }

    /// The zero code {0} of length n.
    pub fn zero_code(field: Arc<Field>, n: usize) -> Code {
        Code {
            field: field.clone(),
            n,
            kind: CodeKind::Linear {
                generator: Matrix::zero(field, 0, n),
            },
        }
    }

    /// Explicit code from a list of distinct codewords of equal length.
    pub fn explicit(field: Arc<Field>, codewords: Vec<Vector>) -> Result<Code> {
        if codewords.is_empty() {
            return Err(Error::Invalid(
                "explicit code needs at least one codeword".into(),
            ));
        }
        let n = codewords[0].len();
        for c in &codewords {
            if c.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: c.len(),
                });
            }
            for &e in c {
                if !field.owns(e) {
                    return Err(Error::FieldMismatch);
                }
            }
        }
        let mut sorted = codewords.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCodeword);
        }
        Ok(Code {
            field,
            n,
            kind: CodeKind::Explicit { codewords },
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_linear(&self) -> bool {
        matches!(self.kind, CodeKind::Linear { .. })
    }

    pub fn kind(&self) -> &CodeKind {
        &self.kind
    }

    /// Dimension k for linear codes.
    pub fn dimension(&self) -> Option<usize> {
        match &self.kind {
            CodeKind::Linear { generator } => Some(generator.nrows()),
            CodeKind::Explicit { .. } => None,
        }
    }

    pub fn generator(&self) -> Option<&Matrix> {
        match &self.kind {
            CodeKind::Linear { generator } => Some(generator),
            CodeKind::Explicit { .. } => None,
        }
    }

    /// Number of codewords, exact.
    pub fn size(&self) -> BigUint {
        match &self.kind {
            CodeKind::Linear { generator } => {
                BigUint::from(self.field.order()).pow(generator.nrows() as u32)
            }
            CodeKind::Explicit { codewords } => BigUint::from(codewords.len()),
        }
    }

    /// Number of codewords when it fits in u64.
    pub fn size_u64(&self) -> Option<u64> {
        u64::try_from(&self.size()).ok()
    }

    /// Visit every codeword within the enumeration budget. Linear codes are
    /// visited in lexicographic message order (first message coordinate most
    /// significant); the closure receives the message digits (empty for
    /// explicit codes) and the codeword.
    pub fn for_each_codeword<F>(&self, budget: u64, mut visit: F) -> Result<()>
    where
        F: FnMut(&[u64], &[FieldElement]),
    {
        match &self.kind {
            CodeKind::Explicit { codewords } => {
                if codewords.len() as u64 > budget {
                    return Err(Error::BudgetExceeded {
                        stage: "explicit enumeration",
                        needed: codewords.len() as u128,
                        budget,
                    });
                }
                for c in codewords {
                    visit(&[], c);
                }
                Ok(())
            }
            CodeKind::Linear { generator } => {
                let f = &self.field;
                let k = generator.nrows();
                let q = f.order();
                let total = checked_pow(q, k as u32);
                match total {
                    Some(t) if t <= budget as u128 => {}
                    _ => {
                        return Err(Error::BudgetExceeded {
                            stage: "linear enumeration",
                            needed: total.unwrap_or(u128::MAX),
                            budget,
                        })
                    }
                }
                let mut digits = vec![0u64; k];
                let mut cw = linalg::zero_vector(f, self.n);
                // increment deltas per row: inc[i][c] = (c+1 - c)*row_i,
                // reset[i] = (0 - (q-1))*row_i
                let mut inc: Vec<Vec<Vector>> = Vec::with_capacity(k);
                let mut reset: Vec<Vector> = Vec::with_capacity(k);
                for i in 0..k {
                    let row = generator.row(i);
                    let mut per = Vec::with_capacity((q - 1) as usize);
                    for c in 0..q - 1 {
                        let lo = f.from_index(c).unwrap();
                        let hi = f.from_index(c + 1).unwrap();
                        let d = f.sub(hi, lo);
                        per.push(linalg::scaled(f, row, d));
                    }
                    let top = f.from_index(q - 1).unwrap();
                    reset.push(linalg::scaled(f, row, f.neg(top)));
                    inc.push(per);
                }
                loop {
                    visit(&digits, &cw);
                    // odometer: last digit varies fastest
                    let mut pos = k;
                    loop {
                        if pos == 0 {
                            return Ok(());
                        }
                        pos -= 1;
                        if digits[pos] < q - 1 {
                            linalg::add_assign(f, &mut cw, &inc[pos][digits[pos] as usize]);
                            digits[pos] += 1;
                            break;
                        }
                        linalg::add_assign(f, &mut cw, &reset[pos]);
                        digits[pos] = 0;
                    }
                }
            }
        }
    }

    /// Materialize all codewords in enumeration order.
    pub fn codewords(&self, budget: u64) -> Result<Vec<Vector>> {
        let mut out = Vec::new();
        self.for_each_codeword(budget, |_, c| out.push(c.to_vec()))?;
        Ok(out)
    }

    /// Exact minimum Hamming distance. For linear codes this is the minimum
    /// nonzero weight, computed by full enumeration within the budget.
    pub fn min_distance(&self, budgets: &Budgets) -> Result<usize> {
        match &self.kind {
            CodeKind::Linear { generator } => {
                if generator.nrows() == 0 {
                    return Err(Error::Invalid("zero code has no minimum distance".into()));
                }
                let mut best = usize::MAX;
                self.for_each_codeword(budgets.enumeration, |_, c| {
                    let w = linalg::weight(c);
                    if w > 0 && w < best {
                        best = w;
                    }
                })?;
                Ok(best)
            }
            CodeKind::Explicit { codewords } => {
                if codewords.len() < 2 {
                    return Err(Error::Invalid(
                        "explicit code needs two codewords for a distance".into(),
                    ));
                }
                let pairs = (codewords.len() as u128) * (codewords.len() as u128);
                if pairs > budgets.pairs as u128 {
                    return Err(Error::BudgetExceeded {
                        stage: "pairwise distance",
                        needed: pairs,
                        budget: budgets.pairs,
                    });
                }
                let mut best = usize::MAX;
                for (i, a) in codewords.iter().enumerate() {
                    for b in codewords.iter().skip(i + 1) {
                        best = best.min(linalg::hamming_distance(a, b));
                    }
                }
                Ok(best)
            }
        }
    }

    /// Exact weight counts: full enumeration when the code fits the budget,
    /// otherwise truncated support-search counts up to `w_max`.
    pub fn weight_distribution(
        &self,
        w_max: Option<usize>,
        budgets: &Budgets,
    ) -> Result<WeightDistribution> {
        let full = match self.size_u64() {
            Some(sz) => sz <= budgets.enumeration,
            None => false,
        };
        if full {
            let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
            self.for_each_codeword(budgets.enumeration, |_, c| {
                let w = linalg::weight(c);
                if w_max.map(|cap| w <= cap).unwrap_or(true) {
                    *counts.entry(w).or_insert(0) += 1;
                }
            })?;
            return Ok(WeightDistribution {
                counts,
                truncated_at: w_max,
            });
        }
        let Some(cap) = w_max else {
            return Err(Error::BudgetExceeded {
                stage: "weight distribution",
                needed: u128::try_from(&self.size()).unwrap_or(u128::MAX),
                budget: budgets.enumeration,
            });
        };
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        if self.is_linear() {
            counts.insert(0, 1);
        }
        for c in self.low_weight_codewords(cap, budgets)? {
            *counts.entry(linalg::weight(&c)).or_insert(0) += 1;
        }
        Ok(WeightDistribution {
            counts,
            truncated_at: Some(cap),
        })
    }

    /// Exactly the nonzero codewords of weight <= w_max of a linear code, in
    /// canonical order (sorted by support, then by coefficients).
    ///
    /// Routes through whichever of the two exact methods is cheaper: support
    /// enumeration solving the parity-check constraints per support, or full
    /// codeword enumeration with a weight filter.
    pub fn low_weight_codewords(&self, w_max: usize, budgets: &Budgets) -> Result<Vec<Vector>> {
        let CodeKind::Linear { generator } = &self.kind else {
            return Err(Error::Invalid(
                "low-weight search requires a linear code".into(),
            ));
        };
        let f = &self.field;
        let n = self.n;
        let q = f.order();
        let w_max = w_max.min(n);
        if w_max == 0 || generator.nrows() == 0 {
            return Ok(Vec::new());
        }

        let mut search_cost: u128 = 0;
        for w in 1..=w_max {
            search_cost = search_cost.saturating_add(
                binomial(n as u128, w as u128).saturating_mul((q as u128 - 1).pow(w as u32)),
            );
        }
        let enum_cost = checked_pow(q, generator.nrows() as u32).unwrap_or(u128::MAX);
        let enum_fits = enum_cost <= budgets.enumeration as u128;
        let search_fits = search_cost <= budgets.search as u128;
        if enum_fits && (enum_cost <= search_cost || !search_fits) {
            let mut out: Vec<Vector> = Vec::new();
            self.for_each_codeword(budgets.enumeration, |_, c| {
                let w = linalg::weight(c);
                if w > 0 && w <= w_max {
                    out.push(c.to_vec());
                }
            })?;
            out.sort_by(|a, b| {
                linalg::support(a)
                    .cmp(&linalg::support(b))
                    .then_with(|| a.cmp(b))
            });
            return Ok(out);
        }
        if !search_fits {
            return Err(Error::SearchBudgetExceeded {
                needed: search_cost,
                budget: budgets.search,
            });
        }

        let h = generator.parity_check();
        let mut out: Vec<Vector> = Vec::new();
        for w in 1..=w_max {
            for_each_support(n, w, |sup| {
                let mut hs = Matrix::zero(f.clone(), h.nrows(), w);
                for r in 0..h.nrows() {
                    for (c, &j) in sup.iter().enumerate() {
                        hs.set(r, c, h.at(r, j));
                    }
                }
                let kernel = hs.kernel_basis();
                if kernel.is_empty() {
                    return;
                }
                // enumerate nonzero kernel combinations, keep full-support ones
                let dim = kernel.len();
                let mut digits = vec![0u64; dim];
                loop {
                    let mut pos = dim;
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
                    let mut v = linalg::zero_vector(f, w);
                    for (d, kv) in digits.iter().zip(&kernel) {
                        if *d == 0 {
                            continue;
                        }
                        let c = f.from_index(*d).unwrap();
                        for (vi, &ki) in v.iter_mut().zip(kv) {
                            *vi = f.add(*vi, f.mul(c, ki));
                        }
                    }
                    if v.iter().all(|x| !x.is_zero()) {
                        let mut full = linalg::zero_vector(f, n);
                        for (&j, &val) in sup.iter().zip(&v) {
                            full[j] = val;
                        }
                        out.push(full);
                    }
                }
            });
        }
        out.sort_by(|a, b| {
            linalg::support(a)
                .cmp(&linalg::support(b))
                .then_with(|| a.cmp(b))
        });
        out.dedup();
        Ok(out)
    }

    /// Dimension of the span of all nonzero codewords of weight <= w_max.
    pub fn subcode_span_dim(&self, w_max: usize, budgets: &Budgets) -> Result<usize> {
        let words = self.low_weight_codewords(w_max, budgets)?;
        let mut basis = EchelonBasis::new(self.field.clone(), self.n);
        for w in &words {
            basis.add(w);
        }
        Ok(basis.dim())
    }

    /// True iff the vector is a codeword: syndrome test for linear codes,
    /// lookup for explicit codes.
    pub fn membership(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        match &self.kind {
            CodeKind::Linear { generator } => {
                let mut basis = EchelonBasis::new(self.field.clone(), self.n);
                for r in 0..generator.nrows() {
                    basis.add(generator.row(r));
                }
                Ok(basis.contains(v))
            }
            CodeKind::Explicit { codewords } => Ok(codewords.iter().any(|c| c[..] == *v)),
        }
    }

    /// Complete a set of independent vectors inside this linear code to a
    /// full basis using the reduced-echelon rows of the generator, smallest
    /// pivot first. Returns only the completion vectors.
    pub fn complete_basis(&self, given: &[Vector]) -> Result<Vec<Vector>> {
        let CodeKind::Linear { generator } = &self.kind else {
            return Err(Error::Invalid(
                "basis completion requires a linear code".into(),
            ));
        };
        let mut basis = EchelonBasis::new(self.field.clone(), self.n);
        for v in given {
            if !self.membership(v)? {
                return Err(Error::Invalid(
                    "completion seed vector is not a codeword".into(),
                ));
            }
            if !basis.add(v) {
                return Err(Error::Invalid("completion seed vectors are dependent".into()));
            }
        }
        let (rref, _) = generator.rref();
        let mut completion = Vec::new();
        for r in 0..rref.nrows() {
            let row = rref.row(r);
            if row.iter().all(|x| x.is_zero()) {
                continue;
            }
            if basis.add(row) {
                completion.push(row.to_vec());
            }
        }
        Ok(completion)
    }
}

/// Linear span of a set of vectors as a code (the zero code when the set is
/// empty or all-zero).
pub fn span(field: Arc<Field>, n: usize, vectors: &[Vector]) -> Result<Code> {
    let mut basis = EchelonBasis::new(field.clone(), n);
    for v in vectors {
        if v.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: v.len(),
            });
        }
        basis.add(v);
    }
    if basis.dim() == 0 {
        return Ok(Code::zero_code(field, n));
    }
    Code::from_generator(field, basis.rows())
}

/// Weight counts A_w, possibly truncated at a declared maximum weight.
#[derive(Clone, Debug)]
pub struct WeightDistribution {
    pub counts: BTreeMap<usize, u64>,
    pub truncated_at: Option<usize>,
}

impl WeightDistribution {
    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// A partition of a linear code into cosets of a linear subcode.
#[derive(Clone)]
pub struct CosetPartition {
    pub parent: Code,
    pub subcode: Code,
    /// One representative per coset, the zero vector first, enumerated by
    /// ranging over a complement basis in lexicographic coefficient order.
    pub representatives: Vec<Vector>,
    pub codim: usize,
}

impl CosetPartition {
    /// |subcode| as an exact integer.
    pub fn coset_size(&self) -> BigUint {
        self.subcode.size()
    }

    pub fn coset_count(&self) -> BigUint {
        BigUint::from(self.parent.field().order()).pow(self.codim as u32)
    }

    /// Materialize the full coset of a representative, sorted.
    pub fn coset_members(&self, rep: &Vector, budget: u64) -> Result<Vec<Vector>> {
        let f = self.parent.field();
        let mut members = Vec::new();
        self.subcode.for_each_codeword(budget, |_, c| {
            let mut v = rep.clone();
            linalg::add_assign(f, &mut v, c);
            members.push(v);
        })?;
        members.sort();
        Ok(members)
    }
}

/// Partition `parent` into cosets of `subcode`; at most `max_reps`
/// representatives are materialized.
pub fn coset_partition(parent: &Code, subcode: &Code, max_reps: u64) -> Result<CosetPartition> {
    let (Some(_), Some(gs)) = (parent.generator(), subcode.generator()) else {
        return Err(Error::Invalid("coset partition requires linear codes".into()));
    };
    if parent.len() != subcode.len() {
        return Err(Error::LengthMismatch {
            expected: parent.len(),
            got: subcode.len(),
        });
    }
    for r in 0..gs.nrows() {
        if !parent.membership(gs.row(r))? {
            return Err(Error::NotASubcode);
        }
    }
    let kp = parent.dimension().unwrap();
    let ks = subcode.dimension().unwrap();
    let codim = kp - ks;
    let f = parent.field().clone();
    let q = f.order();

    let reps_needed = checked_pow(q, codim as u32);
    if reps_needed.map(|r| r > max_reps as u128).unwrap_or(true) {
        return Err(Error::BudgetExceeded {
            stage: "coset representatives",
            needed: reps_needed.unwrap_or(u128::MAX),
            budget: max_reps,
        });
    }

    // complement basis: parent RREF rows independent of the subcode,
    // smallest pivot first
    let mut basis = EchelonBasis::new(f.clone(), parent.len());
    for r in 0..gs.nrows() {
        basis.add(gs.row(r));
    }
    let (rref, _) = parent.generator().unwrap().rref();
    let mut complement: Vec<Vector> = Vec::new();
    for r in 0..rref.nrows() {
        if basis.add(rref.row(r)) {
            complement.push(rref.row(r).to_vec());
        }
    }
    debug_assert_eq!(complement.len(), codim);

    let mut representatives = Vec::with_capacity(reps_needed.unwrap() as usize);
    let mut digits = vec![0u64; codim];
    loop {
        let mut rep = linalg::zero_vector(&f, parent.len());
        for (d, c) in digits.iter().zip(&complement) {
            if *d == 0 {
                continue;
            }
            let s = f.from_index(*d).unwrap();
            for (ri, &ci) in rep.iter_mut().zip(c) {
                *ri = f.add(*ri, f.mul(s, ci));
            }
        }
        representatives.push(rep);
        let mut pos = codim;
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

    Ok(CosetPartition {
        parent: parent.clone(),
        subcode: subcode.clone(),
        representatives,
        codim,
    })
}

/// Visit all size-w subsets of {0..n-1} in lexicographic order.
pub fn for_each_support<F: FnMut(&[usize])>(n: usize, w: usize, mut visit: F) {
    if w == 0 || w > n {
        return;
    }
    let mut idx: Vec<usize> = (0..w).collect();
    loop {
        visit(&idx);
        let mut i = w;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - (w - i) {
                idx[i] += 1;
                for j in i + 1..w {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

/// Iterate all tuples of F_q^k in lexicographic order (first coordinate most
/// significant) within a budget.
pub fn enumerate_tuples<F>(field: &Arc<Field>, k: usize, budget: u64, mut visit: F) -> Result<()>
where
    F: FnMut(&[FieldElement]),
{
    let q = field.order();
    let total = checked_pow(q, k as u32);
    match total {
        Some(t) if t <= budget as u128 => {}
        _ => {
            return Err(Error::BudgetExceeded {
                stage: "tuple enumeration",
                needed: total.unwrap_or(u128::MAX),
                budget,
            })
        }
    }
    let mut digits = vec![0u64; k];
    loop {
        let tup: Vector = digits
            .iter()
            .map(|&d| field.from_index(d).unwrap())
            .collect();
        visit(&tup);
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
        }
    }
}
