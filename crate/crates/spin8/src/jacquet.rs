//! Multiplicities of torus characters in the semisimplified Jacquet module of a
//! principal series, counted through the Weyl orbit of the inducing character.

use crate::characters::{equal_at, key_at, twist, TorusCharacter};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::rootdata::{RelativeDatum, WeylElement};
use serde::Serialize;
use std::collections::BTreeMap;

/// Which Weyl elements are summed over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeylScope {
    /// The full relative Weyl group.
    Full,
    /// Minimal-length representatives of `W_M \\ W` for the Levi generated by the letters.
    CosetReps(Vec<u8>),
}

/// A request for the multiplicity of `target` in the Jacquet module of the
/// representation induced from `inducing` at `s = s0`.
#[derive(Debug, Clone)]
pub struct MultiplicityQuery {
    pub inducing: TorusCharacter,
    pub target: TorusCharacter,
    pub s0: Q,
    pub scope: WeylScope,
}

fn scope_elements(datum: &RelativeDatum, scope: &WeylScope) -> Result<Vec<WeylElement>> {
    match scope {
        WeylScope::Full => Ok(datum.elements().to_vec()),
        WeylScope::CosetReps(levi) => datum.coset_reps(levi),
    }
}

/// `|{w ∈ scope : w⁻¹·inducing = target at s0}|`.
pub fn multiplicity(q: &MultiplicityQuery) -> Result<usize> {
    if q.inducing.etype != q.target.etype {
        return Err(Error::Input(format!(
            "characters over {} and {}",
            q.inducing.etype.name(),
            q.target.etype.name()
        )));
    }
    let datum = RelativeDatum::get(q.inducing.etype);
    let base = q.inducing.at(q.s0);
    Ok(scope_elements(datum, &q.scope)?
        .iter()
        .filter(|w| equal_at(&twist(w, &base), &q.target, q.s0))
        .count())
}

/// One distinct twist in an orbit with the number of Weyl elements producing it.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitEntry {
    /// Canonical word of the first element producing this twist.
    pub representative: WeylElement,
    pub character: crate::characters::RenderedCharacter,
    pub multiplicity: usize,
}

/// The distinct twists of `inducing` over the scope, in order of first appearance.
pub fn orbit(inducing: &TorusCharacter, s0: Q, scope: &WeylScope) -> Result<Vec<OrbitEntry>> {
    let datum = RelativeDatum::get(inducing.etype);
    let base = inducing.at(s0);
    let mut index: BTreeMap<_, usize> = BTreeMap::new();
    let mut out: Vec<OrbitEntry> = Vec::new();
    for w in scope_elements(datum, scope)? {
        let t = twist(&w, &base);
        let key = key_at(&t, s0);
        match index.get(&key) {
            Some(&i) => out[i].multiplicity += 1,
            None => {
                index.insert(key, out.len());
                out.push(OrbitEntry { representative: w, character: t.render(), multiplicity: 1 });
            }
        }
    }
    Ok(out)
}

/// `|Stab_W(χ)|` at `s0` in the full relative Weyl group.
pub fn stabilizer_size(chi: &TorusCharacter, s0: Q) -> usize {
    let datum = RelativeDatum::get(chi.etype);
    let base = chi.at(s0);
    datum.elements().iter().filter(|w| equal_at(&twist(w, &base), &base, s0)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{chi_s, CharTag};
    use crate::rational::q;
    use crate::rootdata::EType;

    #[test]
    fn orbit_counts_sum_to_group_order() {
        let chi = chi_s(EType::FxK, CharTag::QuadKNormTrivial).unwrap();
        let o = orbit(&chi, q(1, 2), &WeylScope::Full).unwrap();
        assert_eq!(o.iter().map(|e| e.multiplicity).sum::<usize>(), 48);
    }
}
