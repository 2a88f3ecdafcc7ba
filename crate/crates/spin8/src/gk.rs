//! Gindikin–Karpelevich factors `J(w, χ)` as formal L-products, with their orders
//! and leading coefficients at a point.

use crate::affine::Affine;
use crate::characters::{twist, TorusCharacter};
use crate::error::Result;
use crate::lfun::{order_and_leading, LAtom, LChar, LProduct, SymbolicConstant};
use crate::rational::{fmt_q, qi, Q};
use crate::rootdata::{RelativeDatum, WeylElement};
use serde::Serialize;

/// `J(w, χ)` evaluated at a point.
#[derive(Debug, Clone, Serialize)]
pub struct GKResult {
    /// Canonical word of `w`.
    pub word: WeylElement,
    #[serde(serialize_with = "ser_display")]
    pub product: LProduct,
    /// Vanishing order at the point; poles are negative.
    pub order: i64,
    /// `max(0, −order)`.
    pub pole_order: i64,
    pub leading: SymbolicConstant,
    /// Every pairing `⟨λ, α̌⟩` over the inversion set exceeds −1 at the point, so the
    /// normalized local operators are holomorphic there.
    pub normalized_holomorphic: bool,
    /// The pairings `⟨λ, α̌⟩` at the point, one per inversion-set root.
    #[serde(serialize_with = "ser_q_vec")]
    pub pairings: Vec<Q>,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    x: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_q_vec<S: serde::Serializer>(x: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::rational::serde_q_vec::serialize(x, s)
}

/// One numerator/denominator atom pair per inversion-set root.
pub fn j_product(w: &WeylElement, chi: &TorusCharacter) -> LProduct {
    let datum = RelativeDatum::get(chi.etype);
    let mut p = LProduct::one();
    for idx in datum.inversion_indices(w) {
        let root = &datum.relative_positive[idx];
        let gamma = datum.absolute.positive_roots[root.rep].simple;
        let arg = chi.affine.pair(&gamma);
        let k = chi.finite_pairing(&gamma);
        let chr = if chi.tag.power_trivial(root.field, k) {
            None
        } else {
            Some(LChar { tag: chi.tag, power: k })
        };
        p.push_atom(LAtom { field: root.field, arg, chr }, 1);
        p.push_atom(LAtom { field: root.field, arg: arg + qi(1), chr }, -1);
    }
    p
}

/// The pairings `⟨λ, α̌⟩` over the inversion set as affine forms.
pub fn inversion_pairings(w: &WeylElement, chi: &TorusCharacter) -> Vec<Affine> {
    let datum = RelativeDatum::get(chi.etype);
    datum
        .inversion_indices(w)
        .into_iter()
        .map(|idx| {
            let root = &datum.relative_positive[idx];
            chi.affine.pair(&datum.absolute.positive_roots[root.rep].simple)
        })
        .collect()
}

/// `J(w, χ)` with its order and leading coefficient at `s = s0`.
pub fn j_factor(w: &WeylElement, chi: &TorusCharacter, s0: Q) -> Result<GKResult> {
    let datum = RelativeDatum::get(chi.etype);
    let product = j_product(w, chi);
    let data = order_and_leading(&product, s0)?;
    let pairings: Vec<Q> = inversion_pairings(w, chi).iter().map(|a| a.eval_s(s0)).collect();
    Ok(GKResult {
        word: datum.reduce(w),
        product,
        order: data.order,
        pole_order: (-data.order).max(0),
        leading: data.leading,
        normalized_holomorphic: pairings.iter().all(|p| *p > qi(-1)),
        pairings,
    })
}

/// `J(u, w⁻¹·χ)`: the factor of `u` applied after `w`.
pub fn j_factor_after(u: &WeylElement, w: &WeylElement, chi: &TorusCharacter, s0: Q) -> Result<GKResult> {
    j_factor(u, &twist(w, chi), s0)
}

/// Leading coefficient of `(s−s0)^{−order}·J(w, χ)` at `s0`.
pub fn leading_operator_coefficient(w: &WeylElement, chi: &TorusCharacter, s0: Q) -> Result<SymbolicConstant> {
    Ok(j_factor(w, chi, s0)?.leading)
}

impl GKResult {
    /// Short one-line summary.
    pub fn summary(&self) -> String {
        let pairs: Vec<String> = self.pairings.iter().map(fmt_q).collect();
        format!(
            "{}: J = {} ; order {} ; leading {} ; pairings [{}]",
            self.word,
            self.product,
            self.order,
            self.leading,
            pairs.join(", ")
        )
    }
}
