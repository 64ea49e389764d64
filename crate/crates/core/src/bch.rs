//! Narrow-sense BCH codes of length p^m - 1 over GF(p) with designed
//! distance three, and the subcode obtained by adjoining the cyclotomic
//! cosets of p^r + 1. The weight-3 codewords of the designed-distance-3
//! code all lie in that subcode, which makes the code usable for strict
//! function correction with (d_d, d_f) = (3, 4).

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{EchelonBasis, Matrix};
use crate::Budgets;

/// The p-cyclotomic coset of i modulo n: the orbit of i under
/// multiplication by p.
pub fn cyclotomic_coset(i: u64, p: u64, n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut cur = i % n;
    loop {
        if !out.insert(cur) {
            break;
        }
        cur = (cur * p) % n;
    }
    out
}

/// A cyclic code over GF(p) of length n = p^m - 1, given by the union of
/// the cyclotomic cosets of its base exponents.
#[derive(Clone)]
pub struct CyclicCodeSpec {
    pub field: Arc<Field>,
    pub p: u64,
    pub m: usize,
    pub n: usize,
    pub alpha: FieldElement,
    pub base_exponents: Vec<u64>,
    pub defining_set: BTreeSet<u64>,
}

impl CyclicCodeSpec {
    pub fn dimension(&self) -> usize {
        self.n - self.defining_set.len()
    }

    /// c(alpha^e) for a sparse codeword given as (position, coefficient)
    /// terms with coefficients in [1, p).
    pub fn eval_at(&self, terms: &[(usize, u64)], e: u64) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for &(pos, c) in terms {
            let power = f.primitive_pow(e * pos as u64);
            acc = f.add(acc, f.mul(f.from_int(c as i64), power));
        }
        acc
    }

    /// Root test against the whole defining set.
    pub fn is_codeword_sparse(&self, terms: &[(usize, u64)]) -> bool {
        self.defining_set
            .iter()
            .all(|&e| self.eval_at(terms, e).is_zero())
    }

    /// Generator polynomial: the monic product of (x - alpha^e) over the
    /// defining set; its coefficients lie in GF(p). Constant term first.
    pub fn generator_polynomial(&self) -> Vec<u64> {
        let f = &self.field;
        let mut g = vec![f.one()];
        for &e in &self.defining_set {
            let root = f.primitive_pow(e);
            // multiply g by (x - root)
            let mut next = vec![f.zero(); g.len() + 1];
            for (i, &c) in g.iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], c);
                next[i] = f.sub(next[i], f.mul(c, root));
            }
            g = next;
        }
        g.iter()
            .map(|&c| {
                let idx = c.index();
                debug_assert!(idx < self.p, "generator coefficient outside GF(p)");
                idx
            })
            .collect()
    }

    /// The code as a generator matrix over GF(p): rows are the cyclic
    /// shifts x^i g(x), i = 0..k-1.
    pub fn to_code(&self) -> Result<Code> {
        let prime = Field::prime(self.p)?;
        let g = self.generator_polynomial();
        let k = self.dimension();
        let mut rows = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = vec![prime.zero(); self.n];
            for (t, &c) in g.iter().enumerate() {
                row[i + t] = prime.from_int(c as i64);
            }
            rows.push(row);
        }
        Code::from_generator(prime, rows)
    }
}

/// Narrow-sense style cyclic code from base exponents; the defining set is
/// the union of their cyclotomic cosets. Optional modulus and primitive
/// element override the lexicographic defaults.
pub fn bch_create(
    p: u64,
    m: usize,
    base_exponents: &[u64],
    modulus: Option<Vec<u64>>,
    alpha: Option<Vec<u64>>,
) -> Result<CyclicCodeSpec> {
    let field = Field::with_primitive(p, m, modulus, alpha)?;
    let n = (field.order() - 1) as usize;
    let mut defining_set = BTreeSet::new();
    for &b in base_exponents {
        defining_set.extend(cyclotomic_coset(b, p, n as u64));
    }
    Ok(CyclicCodeSpec {
        alpha: field.primitive(),
        field,
        p,
        m,
        n,
        base_exponents: base_exponents.to_vec(),
        defining_set,
    })
}

/// Base exponents of the low-weight-capturing subcode: {1, 2} together
/// with p^r + 1 for 1 <= r <= (m-1)/2.
pub fn subcode_exponents(p: u64, m: usize) -> Vec<u64> {
    let mut exps = vec![1, 2];
    let mut pr = 1u64;
    for _ in 1..=(m - 1) / 2 {
        pr *= p;
        exps.push(pr + 1);
    }
    exps
}

/// The subcode D of the designed-distance-3 code obtained by adjoining the
/// cosets of p^r + 1. Requires p >= 5 and odd m >= 3; when m is prime the
/// dimension is checked against the closed form p^m - 1 - m(m+3)/2.
pub fn bch_subcode_d(
    p: u64,
    m: usize,
    modulus: Option<Vec<u64>>,
    alpha: Option<Vec<u64>>,
) -> Result<CyclicCodeSpec> {
    if p < 5 {
        return Err(Error::HypothesisViolated(format!("p = {p} must be >= 5")));
    }
    if m < 3 || m % 2 == 0 {
        return Err(Error::HypothesisViolated(format!(
            "m = {m} must be odd and >= 3"
        )));
    }
    let spec = bch_create(p, m, &subcode_exponents(p, m), modulus, alpha)?;
    if crate::field::is_prime(m as u64) {
        let expected = spec.n - (m * (m + 3)) / 2;
        if spec.dimension() != expected {
            return Err(Error::PostconditionFailed(format!(
                "subcode dimension {} differs from the closed form {}",
                spec.dimension(),
                expected
            )));
        }
    }
    Ok(spec)
}

/// A weight-3 codeword of the designed-distance-3 code, normalized by
/// cyclic shift and scalar to 1 + a x^i + b x^j with 0 < i < j < n.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Weight3Witness {
    pub i: usize,
    pub j: usize,
    pub a: u64,
    pub b: u64,
}

impl Weight3Witness {
    pub fn terms(&self) -> [(usize, u64); 3] {
        [(0, 1), (self.i, self.a), (self.j, self.b)]
    }
}

/// All weight-3 codewords of the designed-distance-3 code up to cyclic
/// shift and scalar: for each pair 0 < i < j < n the two parity checks at
/// alpha and alpha^2 determine (a, b) uniquely over the big field; the pair
/// yields a witness exactly when both values land in GF(p)*. Deterministic
/// order by (i, j).
pub fn weight3_enumerate(spec: &CyclicCodeSpec, budgets: &Budgets) -> Result<Vec<Weight3Witness>> {
    if spec.base_exponents != [1, 2] {
        return Err(Error::Invalid(
            "weight-3 enumeration expects the designed-distance-3 code".into(),
        ));
    }
    let n = spec.n as u64;
    let pairs = (n as u128) * (n as u128);
    if pairs > budgets.pairs as u128 {
        return Err(Error::BudgetExceeded {
            stage: "weight-3 pair enumeration",
            needed: pairs,
            budget: budgets.pairs,
        });
    }
    let f = &spec.field;
    let mut out = Vec::new();
    for i in 1..n {
        let ai = f.primitive_pow(i);
        let a2i = f.primitive_pow(2 * i);
        for j in i + 1..n {
            let aj = f.primitive_pow(j);
            let a2j = f.primitive_pow(2 * j);
            // [ai aj; a2i a2j] (a b)^T = (-1 -1)^T
            let det = f.sub(f.mul(ai, a2j), f.mul(aj, a2i));
            let det_inv = f.inv(det).expect("distinct powers of a primitive element");
            let a = f.mul(f.sub(aj, a2j), det_inv);
            let b = f.mul(f.sub(a2i, ai), det_inv);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            if !f.in_prime_subfield(a) || !f.in_prime_subfield(b) {
                continue;
            }
            let w = Weight3Witness {
                i: i as usize,
                j: j as usize,
                a: a.index(),
                b: b.index(),
            };
            if !spec.is_codeword_sparse(&w.terms()) {
                return Err(Error::PostconditionFailed(
                    "weight-3 witness fails a parity check".into(),
                ));
            }
            out.push(w);
        }
    }
    Ok(out)
}

/// Dimension of the span of all weight-3 codewords: witnesses closed under
/// cyclic shifts (scalars do not change the span).
pub fn weight3_span_dim(spec: &CyclicCodeSpec, witnesses: &[Weight3Witness]) -> Result<usize> {
    let prime = Field::prime(spec.p)?;
    let mut basis = EchelonBasis::new(prime.clone(), spec.n);
    for w in witnesses {
        for shift in 0..spec.n {
            let mut v = vec![prime.zero(); spec.n];
            for (pos, c) in w.terms() {
                v[(pos + shift) % spec.n] = prime.from_int(c as i64);
            }
            basis.add(&v);
        }
    }
    Ok(basis.dim())
}

/// No codewords of weight 1 or 2 exist in the designed-distance-3 code;
/// checked directly from the two parity equations.
pub fn weight_le2_empty(spec: &CyclicCodeSpec) -> bool {
    let f = &spec.field;
    // weight 1: c x^i with c != 0 never has alpha^i as a root
    // weight 2 normalized: 1 + a x^i needs 1 + a alpha^i = 1 + a alpha^2i = 0,
    // forcing alpha^i = 1, impossible for 0 < i < n
    for i in 1..spec.n as u64 {
        let ai = f.primitive_pow(i);
        let a2i = f.primitive_pow(2 * i);
        let a = f.neg(f.inv(ai).unwrap());
        if f.add(f.one(), f.mul(a, a2i)).is_zero() {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, Serialize)]
pub struct ContainmentReport {
    pub p: u64,
    pub m: usize,
    pub n: usize,
    pub witness_count: usize,
    pub dim_c12: usize,
    pub dim_d: usize,
    pub codim: usize,
    /// Exponents p^r + 1, 1 <= r <= (m-1)/2, checked as roots of every
    /// witness.
    pub checked_exponents: Vec<u64>,
    pub all_roots_pass: bool,
    /// alpha^i and alpha^j lie in GF(p) for every witness.
    pub all_in_prime_subfield: bool,
    pub span_dim: usize,
    pub pass: bool,
}

/// Verify that every weight-3 codeword of the designed-distance-3 code is
/// a codeword of the subcode D, and that its support powers alpha^i,
/// alpha^j are prime-subfield elements.
pub fn verify_weight3_containment(
    p: u64,
    m: usize,
    modulus: Option<Vec<u64>>,
    budgets: &Budgets,
) -> Result<ContainmentReport> {
    let c12 = bch_create(p, m, &[1, 2], modulus.clone(), None)?;
    let d = bch_subcode_d(p, m, modulus, None)?;
    let witnesses = weight3_enumerate(&c12, budgets)?;
    let f = &c12.field;

    let mut all_roots_pass = true;
    let mut all_in_prime_subfield = true;
    let exps: Vec<u64> = subcode_exponents(p, m)[2..].to_vec();
    for w in &witnesses {
        for &e in &exps {
            if !c12.eval_at(&w.terms(), e).is_zero() {
                all_roots_pass = false;
            }
        }
        let ai = f.primitive_pow(w.i as u64);
        let aj = f.primitive_pow(w.j as u64);
        if !f.in_prime_subfield(ai) || !f.in_prime_subfield(aj) {
            all_in_prime_subfield = false;
        }
    }
    let span_dim = weight3_span_dim(&c12, &witnesses)?;
    let pass = all_roots_pass && all_in_prime_subfield && span_dim <= d.dimension();
    Ok(ContainmentReport {
        p,
        m,
        n: c12.n,
        witness_count: witnesses.len(),
        dim_c12: c12.dimension(),
        dim_d: d.dimension(),
        codim: c12.dimension() - d.dimension(),
        checked_exponents: exps,
        all_roots_pass,
        all_in_prime_subfield,
        span_dim,
        pass,
    })
}

/// A weight-4 codeword of the designed-distance-3 code that fails a parity
/// check of the subcode, certifying the subcode is proper at weight 4.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Weight4Witness {
    pub positions: [usize; 4],
    pub coefficients: [u64; 4],
    pub failing_exponent: u64,
}

impl Weight4Witness {
    pub fn terms(&self) -> [(usize, u64); 4] {
        [
            (self.positions[0], self.coefficients[0]),
            (self.positions[1], self.coefficients[1]),
            (self.positions[2], self.coefficients[2]),
            (self.positions[3], self.coefficients[3]),
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StrictnessReport {
    pub p: u64,
    pub m: usize,
    /// p + 1 lies outside Cl(1) and Cl(2), so the subcode is proper.
    pub properness: bool,
    pub codim: usize,
    pub codim_expected: usize,
    pub witness: Option<Weight4Witness>,
    /// False when the search exhausted its range without a witness; the
    /// result is then inconclusive rather than a failure.
    pub conclusive: bool,
}

/// Certify that d_f = 4 is tight: (a) the subcode is proper, and (b) some
/// weight-4 codeword of the designed-distance-3 code fails one of the
/// subcode's parity checks. The support search fixes position 0 and scans
/// triples 0 < i < j < k < n in order, solving the two parity equations
/// coordinate-wise over GF(p).
pub fn verify_strictness(
    p: u64,
    m: usize,
    modulus: Option<Vec<u64>>,
    budgets: &Budgets,
) -> Result<StrictnessReport> {
    let c12 = bch_create(p, m, &[1, 2], modulus.clone(), None)?;
    let d = bch_subcode_d(p, m, modulus, None)?;
    let n = c12.n;
    let f = c12.field.clone();
    let prime = Field::prime(p)?;

    let cl1 = cyclotomic_coset(1, p, n as u64);
    let cl2 = cyclotomic_coset(2, p, n as u64);
    let properness = !cl1.contains(&(p + 1)) && !cl2.contains(&(p + 1));
    let codim = c12.dimension() - d.dimension();
    let codim_expected = m * (m - 1) / 2;

    let triples = crate::codes::binomial((n - 1) as u128, 3);
    if triples > budgets.search as u128 {
        return Err(Error::SearchBudgetExceeded {
            needed: triples,
            budget: budgets.search,
        });
    }
    let d_exps: Vec<u64> = subcode_exponents(p, m)[2..].to_vec();

    // precompute GF(p) coordinate vectors of alpha^(e*pos) for e = 1, 2
    let coords = |e: u64, pos: usize| -> Vec<u64> { f.coeffs(f.primitive_pow(e * pos as u64)) };

    let mut witness: Option<Weight4Witness> = None;
    'outer: for i in 1..n - 2 {
        let ci1 = coords(1, i);
        let ci2 = coords(2, i);
        for j in i + 1..n - 1 {
            let cj1 = coords(1, j);
            let cj2 = coords(2, j);
            for k in j + 1..n {
                let ck1 = coords(1, k);
                let ck2 = coords(2, k);
                // 2m GF(p)-equations in (a, b, c): parity at alpha, alpha^2
                let mut rows = Vec::with_capacity(2 * m);
                let mut rhs = Vec::with_capacity(2 * m);
                for r in 0..m {
                    rows.push(vec![
                        prime.from_int(ci1[r] as i64),
                        prime.from_int(cj1[r] as i64),
                        prime.from_int(ck1[r] as i64),
                    ]);
                    rhs.push(if r == 0 { prime.from_int(-1) } else { prime.zero() });
                }
                for r in 0..m {
                    rows.push(vec![
                        prime.from_int(ci2[r] as i64),
                        prime.from_int(cj2[r] as i64),
                        prime.from_int(ck2[r] as i64),
                    ]);
                    rhs.push(if r == 0 { prime.from_int(-1) } else { prime.zero() });
                }
                let mat = Matrix::from_rows(prime.clone(), rows)?;
                let Some((x0, kernel)) = mat.solve_affine(&rhs) else {
                    continue;
                };
                // enumerate the affine solution set
                let mut solutions = vec![x0];
                for kv in &kernel {
                    let mut next = Vec::new();
                    for sol in &solutions {
                        for s in 1..p {
                            let c = prime.from_int(s as i64);
                            let cand: Vec<FieldElement> = sol
                                .iter()
                                .zip(kv)
                                .map(|(&a, &b)| prime.add(a, prime.mul(c, b)))
                                .collect();
                            next.push(cand);
                        }
                    }
                    solutions.extend(next);
                }
                for sol in solutions {
                    if sol.iter().any(|x| x.is_zero()) {
                        continue;
                    }
                    let terms = [
                        (0usize, 1u64),
                        (i, sol[0].index()),
                        (j, sol[1].index()),
                        (k, sol[2].index()),
                    ];
                    debug_assert!(c12.is_codeword_sparse(&terms));
                    if let Some(&e) = d_exps
                        .iter()
                        .find(|&&e| !c12.eval_at(&terms, e).is_zero())
                    {
                        witness = Some(Weight4Witness {
                            positions: [0, i, j, k],
                            coefficients: [1, terms[1].1, terms[2].1, terms[3].1],
                            failing_exponent: e,
                        });
                        break 'outer;
                    }
                }
            }
        }
    }

    Ok(StrictnessReport {
        p,
        m,
        properness,
        codim,
        codim_expected,
        conclusive: witness.is_some(),
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetStructureReport {
    pub p: u64,
    pub m: usize,
    /// |Cl(p^r + 1)| for r = 1..(m-1)/2.
    pub coset_sizes: Vec<usize>,
    pub sizes_all_m: bool,
    pub pairwise_distinct: bool,
    pub disjoint_from_cl1_cl2: bool,
    pub dim_computed: usize,
    pub dim_formula: usize,
    pub pass: bool,
}

/// Check the coset facts behind the subcode dimension formula for prime m:
/// each adjoined coset has size m, the cosets are pairwise distinct, and
/// they avoid Cl(1) and Cl(2); the dimension then matches
/// p^m - 1 - m(m+3)/2.
pub fn verify_coset_structure(p: u64, m: usize) -> Result<CosetStructureReport> {
    if !crate::field::is_prime(m as u64) {
        return Err(Error::HypothesisViolated(format!("m = {m} must be prime")));
    }
    if p < 5 || m < 3 {
        return Err(Error::HypothesisViolated(
            "needs p >= 5 and m >= 3".into(),
        ));
    }
    let n = crate::codes::checked_pow(p, m as u32)
        .and_then(|q| u64::try_from(q).ok())
        .ok_or(Error::NoPrimitiveFound(u64::MAX))?
        - 1;
    let cl1 = cyclotomic_coset(1, p, n);
    let cl2 = cyclotomic_coset(2, p, n);
    let mut adjoined: Vec<BTreeSet<u64>> = Vec::new();
    let mut pr = 1u64;
    for _ in 1..=(m - 1) / 2 {
        pr *= p;
        adjoined.push(cyclotomic_coset(pr + 1, p, n));
    }
    let coset_sizes: Vec<usize> = adjoined.iter().map(|c| c.len()).collect();
    let sizes_all_m = coset_sizes.iter().all(|&s| s == m);
    let pairwise_distinct = adjoined
        .iter()
        .enumerate()
        .all(|(idx, a)| adjoined.iter().skip(idx + 1).all(|b| a != b));
    let disjoint_from_cl1_cl2 = adjoined
        .iter()
        .all(|c| c.is_disjoint(&cl1) && c.is_disjoint(&cl2));

    let mut union: BTreeSet<u64> = cl1.union(&cl2).copied().collect();
    for c in &adjoined {
        union.extend(c.iter().copied());
    }
    let dim_computed = n as usize - union.len();
    let dim_formula = n as usize - (m * (m + 3)) / 2;
    let pass = sizes_all_m && pairwise_distinct && disjoint_from_cl1_cl2
        && dim_computed == dim_formula;
    Ok(CosetStructureReport {
        p,
        m,
        coset_sizes,
        sizes_all_m,
        pairwise_distinct,
        disjoint_from_cl1_cl2,
        dim_computed,
        dim_formula,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_cosets_mod_124() {
        let cl1 = cyclotomic_coset(1, 5, 124);
        assert_eq!(cl1, BTreeSet::from([1, 5, 25]));
        let cl2 = cyclotomic_coset(2, 5, 124);
        assert_eq!(cl2, BTreeSet::from([2, 10, 50]));
        let cl6 = cyclotomic_coset(6, 5, 124);
        assert_eq!(cl6, BTreeSet::from([6, 26, 30]));
        assert_eq!(cyclotomic_coset(0, 5, 124), BTreeSet::from([0]));
    }

    #[test]
    fn coset_identity_under_exponent_reflection() {
        // Cl(p^r + 1) = Cl(p^(m-r) + 1)
        for (p, m) in [(5u64, 3usize), (7, 3), (5, 5)] {
            let n = crate::codes::checked_pow(p, m as u32).unwrap() as u64 - 1;
            for r in 1..m {
                let a = cyclotomic_coset(p.pow(r as u32) + 1, p, n);
                let b = cyclotomic_coset(p.pow((m - r) as u32) + 1, p, n);
                assert_eq!(a, b, "p={p} m={m} r={r}");
            }
        }
    }

    #[test]
    fn designed_distance_3_dimensions() {
        let c = bch_create(5, 3, &[1, 2], None, None).unwrap();
        assert_eq!(c.n, 124);
        assert_eq!(c.dimension(), 118);
        let d = bch_create(5, 3, &[1, 2, 6], None, None).unwrap();
        assert_eq!(d.dimension(), 115);
        let full = bch_create(5, 3, &[], None, None).unwrap();
        assert_eq!(full.dimension(), 124);
    }

    #[test]
    fn subcode_examples() {
        let d = bch_subcode_d(5, 3, None, None).unwrap();
        assert_eq!(d.base_exponents, vec![1, 2, 6]);
        assert_eq!(d.dimension(), 115);

        // oracle: direct coset union for (7, 3)
        let n = 342u64;
        let mut union = cyclotomic_coset(1, 7, n);
        union.extend(cyclotomic_coset(2, 7, n));
        union.extend(cyclotomic_coset(8, 7, n));
        assert_eq!(342 - union.len(), 333);
        let d = bch_subcode_d(7, 3, None, None).unwrap();
        assert_eq!(d.dimension(), 333);

        assert!(matches!(
            bch_subcode_d(5, 4, None, None),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            bch_subcode_d(3, 3, None, None),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn generator_polynomial_and_code_view() {
        let c = bch_create(5, 3, &[1, 2], None, None).unwrap();
        let g = c.generator_polynomial();
        assert_eq!(g.len(), 7); // degree 6, monic
        assert_eq!(*g.last().unwrap(), 1);
        let code = c.to_code().unwrap();
        assert_eq!(code.len(), 124);
        assert_eq!(code.dimension(), Some(118));
        // every generator row passes the defining-set root checks
        let gen = code.generator().unwrap();
        for r in 0..gen.nrows() {
            let terms: Vec<(usize, u64)> = gen
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(i, e)| (i, e.index()))
                .collect();
            assert!(c.is_codeword_sparse(&terms));
        }
    }

    #[test]
    fn weight3_witnesses_exist_for_p5() {
        let b = Budgets::default();
        let c = bch_create(5, 3, &[1, 2], None, None).unwrap();
        let ws = weight3_enumerate(&c, &b).unwrap();
        assert!(!ws.is_empty());
        for w in &ws {
            assert!(c.is_codeword_sparse(&w.terms()));
            assert!(w.a > 0 && w.a < 5 && w.b > 0 && w.b < 5);
        }
        assert!(weight_le2_empty(&c));
    }

    #[test]
    fn weight3_empty_for_p3() {
        let b = Budgets::default();
        let c = bch_create(3, 3, &[1, 2], None, None).unwrap();
        assert!(weight3_enumerate(&c, &b).unwrap().is_empty());
    }

    #[test]
    fn containment_at_5_3() {
        let b = Budgets::default();
        let rep = verify_weight3_containment(5, 3, None, &b).unwrap();
        assert!(rep.pass);
        assert!(rep.witness_count > 0);
        assert_eq!((rep.dim_c12, rep.dim_d, rep.codim), (118, 115, 3));
        assert_eq!(rep.checked_exponents, vec![6]);
    }

    #[test]
    fn containment_at_7_3() {
        let b = Budgets::default();
        let rep = verify_weight3_containment(7, 3, None, &b).unwrap();
        assert!(rep.pass);
        assert_eq!((rep.dim_c12, rep.dim_d), (336, 333));
    }

    #[test]
    fn strictness_at_5_3() {
        let b = Budgets::default();
        let rep = verify_strictness(5, 3, None, &b).unwrap();
        assert!(rep.properness);
        assert_eq!(rep.codim, 3);
        assert_eq!(rep.codim_expected, 3);
        assert!(rep.conclusive);
        let w = rep.witness.unwrap();
        // definitional re-check of the witness
        let c12 = bch_create(5, 3, &[1, 2], None, None).unwrap();
        assert!(c12.is_codeword_sparse(&w.terms()));
        assert!(!c12.eval_at(&w.terms(), w.failing_exponent).is_zero());
    }

    #[test]
    fn coset_structure_at_5_3_and_7_3() {
        let rep = verify_coset_structure(5, 3).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.coset_sizes, vec![3]);
        assert_eq!(rep.dim_computed, 115);

        let rep = verify_coset_structure(7, 3).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.dim_computed, 333);

        assert!(matches!(
            verify_coset_structure(5, 9),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn designed_distance_3_dim_formula() {
        // dim = p^m - 1 - 2m whenever Cl(1), Cl(2) are disjoint size-m cosets
        for (p, m) in [(5u64, 3usize), (7, 3), (11, 3)] {
            let c = bch_create(p, m, &[1, 2], None, None).unwrap();
            assert_eq!(c.dimension() as u64, (c.n as u64) - 2 * m as u64);
        }
    }
}
