//! Constant-term analysis for a maximal parabolic: Σ-sets, equivalence classes of
//! twisted characters, cancellation rules, and the net pole order of the series.

use crate::characters::{chi_s_levi, key_at, twist, CharTag, RenderedCharacter, TorusCharacter};
use crate::error::{Error, Result};
use crate::gk::j_factor;
use crate::lfun::SymbolicConstant;
use crate::rational::{q, serde_q, Q};
use crate::rootdata::{parse_word, EType, RelativeDatum, WeylElement};
use serde::Serialize;
use std::collections::HashMap;

/// Parameters of a constant-term computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CtParams {
    pub etype: EType,
    /// Relative letters of the Levi.
    pub levi: Vec<u8>,
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
}

impl CtParams {
    /// Parameters for the Heisenberg parabolic.
    pub fn heisenberg(etype: EType, tag: CharTag, s0: Q) -> Self {
        CtParams { etype, levi: etype.heisenberg_levi(), tag, s0 }
    }

    /// True for the Heisenberg parabolic.
    pub fn is_heisenberg(&self) -> bool {
        self.levi == self.etype.heisenberg_levi()
    }

    /// `χ_s` for these parameters.
    pub fn character(&self) -> Result<TorusCharacter> {
        chi_s_levi(self.etype, self.tag, &self.levi)
    }
}

/// One coset representative with its pole order and twisted character.
#[derive(Debug, Clone, Serialize)]
pub struct SigmaRow {
    pub word: WeylElement,
    /// Pole order of `J(w, χ_s)` at `s0`.
    pub order: i64,
    /// `w⁻¹·χ_{s0}` in torus coordinates.
    pub twisted_char: RenderedCharacter,
    /// Leading coefficient of `J` at `s0`.
    pub leading: SymbolicConstant,
    /// Index into the class list of the table.
    pub class_id: usize,
}

/// A set of representatives with equal twisted characters at `s0`.
#[derive(Debug, Clone, Serialize)]
pub struct EquivClass {
    pub members: Vec<WeylElement>,
    pub orders: Vec<i64>,
    pub twisted_char: RenderedCharacter,
    /// For each later member `w′`, the element `u` with `w′ = w₀·u` where `w₀` is the
    /// first member.
    pub factorization: Vec<Factorization>,
}

/// `target = base·u`.
#[derive(Debug, Clone, Serialize)]
pub struct Factorization {
    pub base: WeylElement,
    pub target: WeylElement,
    pub u: WeylElement,
    /// `ℓ(target) = ℓ(base) + ℓ(u)`.
    pub length_additive: bool,
}

impl EquivClass {
    /// Largest member order.
    pub fn max_order(&self) -> i64 {
        self.orders.iter().copied().max().unwrap_or(0)
    }

    /// Member words as strings.
    pub fn names(&self) -> Vec<String> {
        self.members.iter().map(|w| w.name()).collect()
    }
}

/// All representatives of `W(M,G)` with orders, twists and classes at `s0`.
#[derive(Debug, Clone, Serialize)]
pub struct SigmaTable {
    pub params: CtParams,
    pub rows: Vec<SigmaRow>,
    pub classes: Vec<EquivClass>,
}

/// Builds the table over every representative, with classes over the whole set.
pub fn sigma_table(p: &CtParams) -> Result<SigmaTable> {
    let datum = RelativeDatum::get(p.etype);
    let chi = p.character()?;
    let reps = datum.coset_reps(&p.levi)?;
    let mut rows = Vec::new();
    let mut keys = Vec::new();
    for w in reps {
        let j = j_factor(&w, &chi, p.s0)?;
        let tw = twist(&w, &chi).at(p.s0);
        keys.push(key_at(&tw, p.s0));
        rows.push(SigmaRow {
            word: w,
            order: j.pole_order,
            twisted_char: tw.render(),
            leading: j.leading,
            class_id: 0,
        });
    }
    let classes = group_rows(datum, &mut rows, &keys, |_| true);
    Ok(SigmaTable { params: p.clone(), rows, classes })
}

fn group_rows<K: std::hash::Hash + Eq + Clone>(
    datum: &RelativeDatum,
    rows: &mut [SigmaRow],
    keys: &[K],
    include: impl Fn(&SigmaRow) -> bool,
) -> Vec<EquivClass> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<EquivClass> = Vec::new();
    for (row, key) in rows.iter_mut().zip(keys) {
        if !include(row) {
            continue;
        }
        let id = *index.entry(key.clone()).or_insert_with(|| {
            classes.push(EquivClass {
                members: Vec::new(),
                orders: Vec::new(),
                twisted_char: row.twisted_char.clone(),
                factorization: Vec::new(),
            });
            classes.len() - 1
        });
        row.class_id = id;
        let c = &mut classes[id];
        if let Some(base) = c.members.first() {
            let u = datum.reduce(&datum.mul(&datum.inverse(base), &row.word));
            c.factorization.push(Factorization {
                base: base.clone(),
                target: row.word.clone(),
                length_additive: datum.length(base) + u.word.len() == datum.length(&row.word),
                u,
            });
        }
        c.members.push(row.word.clone());
        c.orders.push(row.order);
    }
    classes
}

/// `Σ_m`: representatives whose operator has pole order at least `m`.
pub fn sigma(p: &CtParams, m: i64) -> Result<Vec<WeylElement>> {
    Ok(sigma_table(p)?.rows.into_iter().filter(|r| r.order >= m).map(|r| r.word).collect())
}

/// Partition of `Σ_m` by equality of twisted characters at `s0`.
pub fn classes(p: &CtParams, m: i64) -> Result<Vec<EquivClass>> {
    let datum = RelativeDatum::get(p.etype);
    let chi = p.character()?;
    let mut table = sigma_table(p)?;
    let keys: Vec<_> = table
        .rows
        .iter()
        .map(|r| key_at(&twist(&r.word, &chi).at(p.s0), p.s0))
        .collect();
    Ok(group_rows(datum, &mut table.rows, &keys, |r| r.order >= m))
}

/// A stated cancellation inside one equivalence class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CancellationRule {
    pub etype: EType,
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
    /// Member words of the class the rule applies to.
    pub class: Vec<String>,
    /// Net pole order of the sum of the class operators.
    pub net_order: i64,
    pub citation: &'static str,
}

const LEADING_SUM: &str = "leading terms of the top-order operators cancel in the class sum";
const GROUPED: &str = "grouped (Id + M) expansion of the class sum lowers the order by one";
const TOP_DROP: &str = "class sum of the top-order pair loses its leading term";
const NON_SPHERICAL: &str = "top-order terms cancel on every vector of the image";

fn rule(etype: EType, tag: CharTag, s0: Q, class: &[&str], net: i64, cite: &'static str) -> CancellationRule {
    CancellationRule {
        etype,
        tag,
        s0,
        class: class.iter().map(|s| s.to_string()).collect(),
        net_order: net,
        citation: cite,
    }
}

/// The built-in cancellation rules.
pub fn cancellation_rules() -> Vec<CancellationRule> {
    use CharTag::*;
    use EType::*;
    let h = q(1, 2);
    let th = q(3, 2);
    vec![
        rule(Cubic, Trivial, h, &["w212", "w2121"], 1, LEADING_SUM),
        rule(Cubic, Trivial, th, &["w2121", "w21212"], 0, LEADING_SUM),
        rule(Cubic, CubicE, h, &["w21", "w21212"], 0, NON_SPHERICAL),
        rule(Cubic, CubicE, h, &["w212", "w2121"], 0, NON_SPHERICAL),
        rule(FxK, Trivial, h, &["w213", "w2321", "w2132132"], 1, GROUPED),
        rule(FxK, Trivial, h, &["w2132", "w21321", "w21323", "w213213"], 1, GROUPED),
        rule(FxK, Trivial, th, &["w213213", "w2132132"], 1, LEADING_SUM),
        rule(FxK, QuadKNormTrivial, h, &["w2132", "w21323"], 1, GROUPED),
        rule(FxK, QuadKNormTrivial, h, &["w2321", "w2132132"], 1, GROUPED),
        rule(FxK, QuadKNormTrivial, h, &["w21321", "w213213"], 1, GROUPED),
        rule(FxK, QuadKNormNontrivial, h, &["w2132", "w21323"], 0, TOP_DROP),
        rule(Split, Trivial, h, &["w213", "w2132"], 1, GROUPED),
        rule(Split, Trivial, h, &["w214", "w2142"], 1, GROUPED),
        rule(Split, Trivial, h, &["w234", "w2342"], 1, GROUPED),
        rule(Split, Trivial, h, &["w2134", "w21324", "w21423", "w23421", "w213242132"], 1, GROUPED),
        rule(
            Split,
            Trivial,
            h,
            &["w21342", "w213242", "w213421", "w213423", "w2132421", "w2132423", "w2134213", "w21324213"],
            1,
            GROUPED,
        ),
        rule(Split, Trivial, th, &["w21324213", "w213242132"], 2, LEADING_SUM),
    ]
}

/// The rule for a class, if one applies.
pub fn rule_for(etype: EType, tag: CharTag, s0: Q, class: &EquivClass) -> Option<CancellationRule> {
    let mut names = class.names();
    names.sort();
    cancellation_rules().into_iter().find(|r| {
        let mut c = r.class.clone();
        c.sort();
        r.etype == etype && r.tag == tag && r.s0 == s0 && c == names
    })
}

/// Net order of one class after applying any matching rule.
#[derive(Debug, Clone, Serialize)]
pub struct ClassOrder {
    pub class: EquivClass,
    pub max_order: i64,
    pub net_order: i64,
    pub rule: Option<CancellationRule>,
}

/// Full pole-order report for the Heisenberg series.
#[derive(Debug, Clone, Serialize)]
pub struct PoleReport {
    pub params: CtParams,
    pub classes: Vec<ClassOrder>,
    pub net_order: i64,
    /// False for configurations whose class data are derived here rather than
    /// read off a published table.
    pub tabulated: bool,
}

/// Configurations whose Σ output is derived rather than taken from a table.
pub fn is_tabulated(etype: EType, tag: CharTag, s0: Q) -> bool {
    !(etype == EType::Split && tag == CharTag::Trivial && s0 == q(1, 2))
}

/// Pole order of the Heisenberg Eisenstein series with the class breakdown.
pub fn pole_report(etype: EType, tag: CharTag, s0: Q) -> Result<PoleReport> {
    let p = CtParams::heisenberg(etype, tag, s0);
    let cls = classes(&p, 1)?;
    let mut out = Vec::new();
    let mut net = 0;
    for c in cls {
        let r = rule_for(etype, tag, s0, &c);
        let max = c.max_order();
        let n = r.as_ref().map_or(max, |r| r.net_order);
        if n > max {
            return Err(Error::Unsupported(format!("rule raises the order of {:?}", c.names())));
        }
        net = net.max(n);
        out.push(ClassOrder { class: c, max_order: max, net_order: n, rule: r });
    }
    Ok(PoleReport { params: p, classes: out, net_order: net, tabulated: is_tabulated(etype, tag, s0) })
}

/// Net pole order of the Heisenberg Eisenstein series at `s0`.
pub fn eisenstein_pole_order(etype: EType, tag: CharTag, s0: Q) -> Result<i64> {
    Ok(pole_report(etype, tag, s0)?.net_order)
}

/// Parses a list of words.
pub fn words(datum: &RelativeDatum, names: &[&str]) -> Result<Vec<WeylElement>> {
    names.iter().map(|n| datum.element(&parse_word(n)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(ws: &[WeylElement]) -> Vec<String> {
        ws.iter().map(|w| w.name()).collect()
    }

    #[test]
    fn cubic_trivial_half() {
        let p = CtParams::heisenberg(EType::Cubic, CharTag::Trivial, q(1, 2));
        assert_eq!(names(&sigma(&p, 2).unwrap()), ["w212", "w2121"]);
        assert_eq!(names(&sigma(&p, 1).unwrap()), ["w21", "w212", "w2121", "w21212"]);
        let cls: Vec<_> = classes(&p, 1).unwrap().iter().map(|c| c.names()).collect();
        assert_eq!(cls, vec![vec!["w21", "w21212"], vec!["w212", "w2121"]]);
    }

    #[test]
    fn every_rule_matches_an_actual_class() {
        for r in cancellation_rules() {
            let p = CtParams::heisenberg(r.etype, r.tag, r.s0);
            let found = classes(&p, 1).unwrap().into_iter().any(|c| {
                let mut a = c.names();
                a.sort();
                let mut b = r.class.clone();
                b.sort();
                a == b
            });
            assert!(found, "{r:?}");
        }
    }
}
