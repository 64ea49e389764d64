//! Distance graphs of codes: vertices are codewords, edges join pairs at
//! Hamming distance at most alpha. Components come from an explicit
//! pairwise search, or, for linear codes, as cosets of the subcode spanned
//! by the codewords of weight at most alpha.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::codes::{self, Code, CosetPartition};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::Budgets;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Explicit,
    Cayley,
}

/// The connected components of the alpha-distance graph of a code.
#[derive(Clone)]
pub enum ComponentPartition {
    Explicit {
        alpha: usize,
        /// Blocks ordered by lexicographically smallest member; members
        /// sorted within each block.
        blocks: Vec<Vec<Vector>>,
    },
    Cayley {
        alpha: usize,
        /// The subcode spanned by the nonzero codewords of weight <= alpha.
        subcode: Code,
        /// dim of the subcode (gamma = q^span_dim).
        span_dim: usize,
        parent_dim: usize,
        q: u64,
        /// Representatives, ordered by lexicographically smallest
        /// representative; absent when the coset count exceeds the cap.
        partition: Option<CosetPartition>,
    },
}

impl ComponentPartition {
    pub fn alpha(&self) -> usize {
        match self {
            ComponentPartition::Explicit { alpha, .. } => *alpha,
            ComponentPartition::Cayley { alpha, .. } => *alpha,
        }
    }

    pub fn method(&self) -> Method {
        match self {
            ComponentPartition::Explicit { .. } => Method::Explicit,
            ComponentPartition::Cayley { .. } => Method::Cayley,
        }
    }

    /// Number of connected components, exact.
    pub fn count(&self) -> BigUint {
        match self {
            ComponentPartition::Explicit { blocks, .. } => BigUint::from(blocks.len()),
            ComponentPartition::Cayley {
                span_dim,
                parent_dim,
                q,
                ..
            } => BigUint::from(*q).pow((parent_dim - span_dim) as u32),
        }
    }

    /// Component sizes. Explicit partitions list all block sizes; Cayley
    /// partitions have uniform size gamma = q^span_dim.
    pub fn sizes(&self) -> Vec<BigUint> {
        match self {
            ComponentPartition::Explicit { blocks, .. } => {
                blocks.iter().map(|b| BigUint::from(b.len())).collect()
            }
            ComponentPartition::Cayley {
                span_dim,
                q,
                parent_dim,
                ..
            } => {
                let gamma = BigUint::from(*q).pow(*span_dim as u32);
                let count = BigUint::from(*q).pow((parent_dim - span_dim) as u32);
                match u64::try_from(&count) {
                    Ok(c) if c <= (1 << 20) => vec![gamma; c as usize],
                    _ => vec![gamma],
                }
            }
        }
    }

    /// Common component size for the Cayley method.
    pub fn gamma(&self) -> Option<BigUint> {
        match self {
            ComponentPartition::Cayley { span_dim, q, .. } => {
                Some(BigUint::from(*q).pow(*span_dim as u32))
            }
            ComponentPartition::Explicit { .. } => None,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.count() == BigUint::from(1u32)
    }

    /// Materialize every component as a sorted member list (blocks ordered
    /// by smallest member). For Cayley partitions this expands each coset.
    pub fn blocks_members(&self, budget: u64) -> Result<Vec<Vec<Vector>>> {
        match self {
            ComponentPartition::Explicit { blocks, .. } => Ok(blocks.clone()),
            ComponentPartition::Cayley { partition, .. } => {
                let Some(part) = partition else {
                    return Err(Error::BudgetExceeded {
                        stage: "coset expansion",
                        needed: u128::MAX,
                        budget,
                    });
                };
                let mut blocks = Vec::with_capacity(part.representatives.len());
                for rep in &part.representatives {
                    blocks.push(part.coset_members(rep, budget)?);
                }
                blocks.sort_by(|a, b| a[0].cmp(&b[0]));
                Ok(blocks)
            }
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Connected components by union-find over all codeword pairs at distance
/// at most alpha.
pub fn components_explicit(
    code: &Code,
    alpha: usize,
    budgets: &Budgets,
) -> Result<ComponentPartition> {
    let words = code.codewords(budgets.enumeration)?;
    let m = words.len();
    let pairs = (m as u128) * (m as u128);
    if pairs > budgets.pairs as u128 {
        return Err(Error::BudgetExceeded {
            stage: "pairwise distance",
            needed: pairs,
            budget: budgets.pairs,
        });
    }

    let edges: Vec<(usize, usize)> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let words = &words;
            (i + 1..m).filter_map(move |j| {
                if linalg::hamming_distance(&words[i], &words[j]) <= alpha {
                    Some((i, j))
                } else {
                    None
                }
            })
        })
        .collect();

    let mut uf = UnionFind::new(m);
    for (i, j) in edges {
        uf.union(i, j);
    }

    let mut groups: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
    for i in 0..m {
        let root = uf.find(i);
        groups.entry(root).or_default().push(i);
    }
    let mut blocks: Vec<Vec<Vector>> = groups
        .into_values()
        .map(|idxs| {
            let mut b: Vec<Vector> = idxs.into_iter().map(|i| words[i].clone()).collect();
            b.sort();
            b
        })
        .collect();
    blocks.sort_by(|a, b| a[0].cmp(&b[0]));
    Ok(ComponentPartition::Explicit { alpha, blocks })
}

/// Components of a linear code as the cosets of the span of its weight-<=
/// alpha codewords. Cosets larger than `rep_cap` representatives are not
/// materialized; the partition then carries sizes only.
pub fn components_cayley(
    code: &Code,
    alpha: usize,
    budgets: &Budgets,
    rep_cap: u64,
) -> Result<ComponentPartition> {
    if !code.is_linear() {
        return Err(Error::Invalid(
            "the Cayley component method requires a linear code".into(),
        ));
    }
    let s_alpha = code.low_weight_codewords(alpha, budgets)?;
    let subcode = codes::span(code.field().clone(), code.len(), &s_alpha)?;
    let span_dim = subcode.dimension().unwrap();
    let parent_dim = code.dimension().unwrap();
    let partition = match codes::coset_partition(code, &subcode, rep_cap) {
        Ok(mut part) => {
            part.representatives.sort();
            Some(part)
        }
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ComponentPartition::Cayley {
        alpha,
        subcode,
        span_dim,
        parent_dim,
        q: code.field().order(),
        partition,
    })
}

/// True iff the alpha-distance graph has a single component. Linear codes
/// reduce to whether the weight-<= alpha codewords span the whole code.
pub fn is_connected(code: &Code, alpha: usize, budgets: &Budgets) -> Result<bool> {
    if code.is_linear() {
        let dim = code.subcode_span_dim(alpha, budgets)?;
        return Ok(dim == code.dimension().unwrap());
    }
    Ok(components_explicit(code, alpha, budgets)?.is_connected())
}

/// Render the alpha-distance graph in DOT format, vertices labeled by
/// codeword strings, deterministic ordering.
pub fn emit_dot(code: &Code, alpha: usize, budgets: &Budgets) -> Result<String> {
    let mut words = code.codewords(budgets.enumeration)?;
    words.sort();
    let field = code.field();
    let label = |v: &Vector| -> String {
        if field.m() == 1 && field.p() <= 10 {
            v.iter().map(|e| e.index().to_string()).collect::<String>()
        } else {
            v.iter()
                .map(|e| field.fmt_element(*e))
                .collect::<Vec<_>>()
                .join(",")
        }
    };
    let mut out = String::from("graph G {\n");
    for w in &words {
        out.push_str(&format!("  \"{}\";\n", label(w)));
    }
    for (i, a) in words.iter().enumerate() {
        for b in words.iter().skip(i + 1) {
            if linalg::hamming_distance(a, b) <= alpha {
                out.push_str(&format!("  \"{}\" -- \"{}\";\n", label(a), label(b)));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use std::sync::Arc;

    fn vecf(f: &Field, vals: &[i64]) -> Vector {
        vals.iter().map(|&v| f.from_int(v)).collect()
    }

    fn two_triangles_code() -> Code {
        let f = Field::prime(2).unwrap();
        let words = ["00000", "00001", "00010", "01111", "10111", "11111"]
            .iter()
            .map(|s| {
                s.chars()
                    .map(|c| f.from_int(c.to_digit(10).unwrap() as i64))
                    .collect()
            })
            .collect();
        Code::explicit(f, words).unwrap()
    }

    fn binary_6_3_code() -> Code {
        let f = Field::prime(2).unwrap();
        Code::from_generator(
            f.clone(),
            vec![
                vecf(&f, &[1, 1, 0, 0, 0, 0]),
                vecf(&f, &[0, 0, 1, 1, 0, 0]),
                vecf(&f, &[0, 0, 0, 1, 1, 1]),
            ],
        )
        .unwrap()
    }

    fn ternary_4_2_code() -> Code {
        let f = Field::prime(3).unwrap();
        Code::from_generator(
            f.clone(),
            vec![vecf(&f, &[1, 1, 0, 0]), vecf(&f, &[0, 1, 1, 1])],
        )
        .unwrap()
    }

    #[test]
    fn six_codeword_code_splits_into_two_triangles() {
        let code = two_triangles_code();
        let part = components_explicit(&code, 2, &Budgets::default()).unwrap();
        let ComponentPartition::Explicit { blocks, .. } = &part else {
            panic!("explicit expected");
        };
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 3));
        assert!(!part.is_connected());
    }

    #[test]
    fn complete_graph_at_full_length() {
        let code = two_triangles_code();
        let part = components_explicit(&code, 5, &Budgets::default()).unwrap();
        assert!(part.is_connected());
    }

    #[test]
    fn binary_6_3_cayley_matches_explicit() {
        let code = binary_6_3_code();
        let b = Budgets::default();
        let exp = components_explicit(&code, 2, &b).unwrap();
        let cay = components_cayley(&code, 2, &b, 1 << 16).unwrap();
        assert_eq!(cay.count(), BigUint::from(2u32));
        assert_eq!(cay.gamma(), Some(BigUint::from(4u32)));
        let eb = exp.blocks_members(b.enumeration).unwrap();
        let cb = cay.blocks_members(b.enumeration).unwrap();
        assert_eq!(eb, cb);
    }

    #[test]
    fn ternary_4_2_has_three_triangle_components() {
        let code = ternary_4_2_code();
        let b = Budgets::default();
        let cay = components_cayley(&code, 2, &b, 1 << 16).unwrap();
        assert_eq!(cay.count(), BigUint::from(3u32));
        assert_eq!(cay.gamma(), Some(BigUint::from(3u32)));
        let exp = components_explicit(&code, 2, &b).unwrap();
        assert_eq!(
            exp.blocks_members(b.enumeration).unwrap(),
            cay.blocks_members(b.enumeration).unwrap()
        );
    }

    #[test]
    fn connectivity_examples() {
        let b = Budgets::default();
        let code = binary_6_3_code();
        assert!(!is_connected(&code, 2, &b).unwrap());
        assert!(is_connected(&code, 6, &b).unwrap());
        let tri = two_triangles_code();
        assert!(!is_connected(&tri, 2, &b).unwrap());
    }

    #[test]
    fn monotone_refinement() {
        let code = binary_6_3_code();
        let b = Budgets::default();
        for alpha in 2..5 {
            let fine = components_explicit(&code, alpha, &b).unwrap();
            let coarse = components_explicit(&code, alpha + 1, &b).unwrap();
            let fb = fine.blocks_members(b.enumeration).unwrap();
            let cb = coarse.blocks_members(b.enumeration).unwrap();
            for block in &fb {
                assert!(cb
                    .iter()
                    .any(|big| block.iter().all(|w| big.contains(w))));
            }
        }
    }

    #[test]
    fn dot_output_contains_vertices_and_edges() {
        let code = two_triangles_code();
        let dot = emit_dot(&code, 2, &Budgets::default()).unwrap();
        assert!(dot.contains("\"00000\""));
        assert!(dot.contains("\"00000\" -- \"00001\""));
        assert!(!dot.contains("\"00000\" -- \"11111\""));
    }

    #[test]
    fn connected_when_span_is_whole_code() {
        // repetition-like code whose minimum-weight words generate it
        let f = Field::prime(2).unwrap();
        let code = Code::from_generator(
            Arc::clone(&f),
            vec![vecf(&f, &[1, 1, 0, 0]), vecf(&f, &[0, 0, 1, 1])],
        )
        .unwrap();
        let b = Budgets::default();
        assert!(is_connected(&code, 2, &b).unwrap());
        let cay = components_cayley(&code, 2, &b, 1 << 16).unwrap();
        assert!(cay.is_connected());
    }
}
