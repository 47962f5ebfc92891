//! Audit of which length-3 factors of a fixed point have the shape
//! `x σ(x) σ²(x)`. The outcome is recorded, not asserted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::morphism::CyclicShiftMorphism;
use crate::perm::Permutation;
use crate::word::{Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Length3Factor {
    pub factor: Vec<u32>,
    pub first_position: usize,
    pub conforms: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureAuditReport {
    pub alphabet_size: usize,
    pub sigma: Vec<u32>,
    pub seed: u32,
    pub prefix_length: usize,
    /// Distinct factors in lexicographic order.
    pub factors: Vec<Length3Factor>,
}

impl StructureAuditReport {
    pub fn conforming(&self) -> impl Iterator<Item = &Length3Factor> {
        self.factors.iter().filter(|f| f.conforms)
    }

    pub fn non_conforming(&self) -> impl Iterator<Item = &Length3Factor> {
        self.factors.iter().filter(|f| !f.conforms)
    }

    /// Regenerates the prefix and re-derives every entry: each factor
    /// occurs at its recorded position, no earlier, and its classification
    /// matches a direct check. The factor list must also be complete.
    pub fn recheck(&self, psi: &CyclicShiftMorphism) -> bool {
        let fresh = audit_length3_structure(psi, self.prefix_length);
        fresh.factors == self.factors
            && self.factors.iter().all(|f| {
                let at = &psi.generate_prefix(f.first_position + 3)[f.first_position..];
                at.iter().map(|s| s.0).eq(f.factor.iter().copied())
                    && f.conforms == has_shift_shape(&f.factor, psi.sigma())
            })
    }
}

/// `u = x σ(x) σ²(x)` for `x = u[0]`.
pub fn has_shift_shape(u: &[u32], sigma: &Permutation) -> bool {
    if u.len() != 3 {
        return false;
    }
    let sx = sigma.apply(Symbol(u[0]));
    u[1] == sx.0 && u[2] == sigma.apply(sx).0
}

pub fn audit_length3_structure(psi: &CyclicShiftMorphism, prefix_length: usize) -> StructureAuditReport {
    let prefix: Word = psi.generate_prefix(prefix_length);
    let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for (pos, window) in prefix.windows(3).enumerate() {
        seen.entry(window.iter().map(|s| s.0).collect()).or_insert(pos);
    }
    let factors = seen
        .into_iter()
        .map(|(factor, first_position)| Length3Factor {
            conforms: has_shift_shape(&factor, psi.sigma()),
            factor,
            first_position,
        })
        .collect();
    StructureAuditReport {
        alphabet_size: psi.alphabet().size(),
        sigma: psi.sigma().image().to_vec(),
        seed: psi.seed().0,
        prefix_length,
        factors,
    }
}
