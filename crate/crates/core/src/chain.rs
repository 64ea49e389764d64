//! Chain codes: linear codes generated by weight-d rows whose supports are
//! consecutive intervals overlapping in s positions, in an open or a closed
//! (cyclically wrapping) arrangement.

use std::sync::Arc;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{self, Vector};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainVariant {
    Open,
    Closed,
}

/// Per-row nonzero entry pattern; the default all-ones pattern can be
/// replaced by arbitrary nonzero values without changing the weight facts.
#[derive(Clone, Debug)]
pub enum Fill {
    Ones,
    /// One nonzero scalar per row.
    RowScalars(Vec<FieldElement>),
    /// An explicit length-d vector of nonzero values per row.
    RowVectors(Vec<Vector>),
}

/// Overlap-bound levels. `GapTwo` guarantees every codeword mixing two or
/// more rows has weight at least d+2 (so A_{d+1} = 0); `GapFour` pushes the
/// guarantee to d+4 (so A_{d+1} = A_{d+2} = A_{d+3} = 0) and needs d >= 4.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OverlapLevel {
    GapTwo,
    GapFour,
}

#[derive(Clone)]
pub struct ChainSpec {
    pub variant: ChainVariant,
    pub k: usize,
    pub d: usize,
    pub s: usize,
    pub field: Arc<Field>,
    pub fill: Fill,
}

impl ChainSpec {
    pub fn new(variant: ChainVariant, k: usize, d: usize, s: usize, field: Arc<Field>) -> ChainSpec {
        ChainSpec {
            variant,
            k,
            d,
            s,
            field,
            fill: Fill::Ones,
        }
    }

    pub fn with_fill(mut self, fill: Fill) -> ChainSpec {
        self.fill = fill;
        self
    }

    /// Block length: kd - (k-1)s open, k(d-s) closed.
    pub fn length(&self) -> usize {
        match self.variant {
            ChainVariant::Open => self.k * self.d - (self.k - 1) * self.s,
            ChainVariant::Closed => self.k * (self.d - self.s),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.k < 2 || self.d < 2 {
            return Err(Error::Invalid("chain codes need k >= 2 and d >= 2".into()));
        }
        if self.s >= self.d {
            return Err(Error::InvalidOverlap {
                s: self.s,
                d: self.d,
            });
        }
        if self.variant == ChainVariant::Closed && self.d >= self.length() {
            return Err(Error::DegenerateClosed {
                d: self.d,
                n: self.length(),
            });
        }
        match &self.fill {
            Fill::Ones => {}
            Fill::RowScalars(v) => {
                if v.len() != self.k {
                    return Err(Error::Invalid("fill needs one scalar per row".into()));
                }
                if v.iter().any(|x| x.is_zero()) {
                    return Err(Error::Invalid("fill scalars must be nonzero".into()));
                }
            }
            Fill::RowVectors(rows) => {
                if rows.len() != self.k {
                    return Err(Error::Invalid("fill needs one vector per row".into()));
                }
                for r in rows {
                    if r.len() != self.d {
                        return Err(Error::LengthMismatch {
                            expected: self.d,
                            got: r.len(),
                        });
                    }
                    if r.iter().any(|x| x.is_zero()) {
                        return Err(Error::Invalid("fill values must be nonzero".into()));
                    }
                }
            }
        }
        Ok(())
    }

    fn fill_value(&self, row: usize, slot: usize) -> FieldElement {
        match &self.fill {
            Fill::Ones => self.field.one(),
            Fill::RowScalars(v) => v[row],
            Fill::RowVectors(rows) => rows[row][slot],
        }
    }
}

/// Generator rows as defined: row i is supported on the interval
/// [i(d-s), i(d-s)+d), taken modulo n in the closed variant.
pub fn chain_rows(spec: &ChainSpec) -> Result<Vec<Vector>> {
    spec.validate()?;
    let n = spec.length();
    let f = &spec.field;
    let mut rows = Vec::with_capacity(spec.k);
    for i in 0..spec.k {
        let start = i * (spec.d - spec.s);
        let mut row = linalg::zero_vector(f, n);
        for t in 0..spec.d {
            let pos = match spec.variant {
                ChainVariant::Open => start + t,
                ChainVariant::Closed => (start + t) % n,
            };
            row[pos] = spec.fill_value(i, t);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Generate the chain code.
pub fn chain_generate(spec: &ChainSpec) -> Result<Code> {
    let rows = chain_rows(spec)?;
    let code = Code::from_generator(spec.field.clone(), rows)?;
    if code.dimension() != Some(spec.k) {
        return Err(Error::Invalid(
            "chain rows are dependent at this overlap".into(),
        ));
    }
    Ok(code)
}

/// Maximum admissible overlap for the given level, if any.
pub fn max_overlap(variant: ChainVariant, k: usize, d: usize, level: OverlapLevel) -> Option<usize> {
    let gap = match level {
        OverlapLevel::GapTwo => 2usize,
        OverlapLevel::GapFour => 4usize,
    };
    if level == OverlapLevel::GapFour && d < 4 {
        return None;
    }
    if d < gap {
        return None;
    }
    let open_bound = (d - gap) / 2;
    match variant {
        ChainVariant::Open => Some(open_bound),
        ChainVariant::Closed => {
            let num = (k - 1) * d;
            if num < gap {
                return None;
            }
            Some(open_bound.min((num - gap) / (2 * k)))
        }
    }
}

/// True iff the spec's overlap satisfies the stated bound for its variant
/// and level. Out-of-range specs return false rather than erroring.
pub fn chain_check_overlap(spec: &ChainSpec, level: OverlapLevel) -> bool {
    if spec.k < 2 || spec.d < 2 || spec.s >= spec.d {
        return false;
    }
    match max_overlap(spec.variant, spec.k, spec.d, level) {
        Some(bound) => spec.s <= bound,
        None => false,
    }
}

/// Closed-form predicted parameters for a spec within the first-level
/// overlap bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub a_d: u64,
    pub a_d_plus_1: u64,
}

pub fn chain_expected_params(spec: &ChainSpec) -> Result<ChainParams> {
    spec.validate()?;
    if !chain_check_overlap(spec, OverlapLevel::GapTwo) {
        let bound = max_overlap(spec.variant, spec.k, spec.d, OverlapLevel::GapTwo).unwrap_or(0);
        return Err(Error::OverlapBoundViolated { s: spec.s, bound });
    }
    Ok(ChainParams {
        n: spec.length(),
        k: spec.k,
        d: spec.d,
        a_d: spec.k as u64 * (spec.field.order() - 1),
        a_d_plus_1: 0,
    })
}
