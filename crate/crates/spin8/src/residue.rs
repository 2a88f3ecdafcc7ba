//! Local quotient eigenvalue data and the global appearance predicates for the
//! constituents `π_Ṡ` of the residue at `s0 = 1/2`.
//!
//! The oracle forms, for every top-order equivalence class, the class sum of
//! leading scalars: each term is a rational coefficient times a named operator,
//! and an operator acts on `π_Ṡ` by the product of its local eigenvalues over the
//! places of `S`. A constituent appears when some class sum is nonzero.

use crate::characters::{chi_s, CharTag};
use crate::ctan::pole_report;
use crate::error::{Error, Result};
use crate::gk::leading_operator_coefficient;
use crate::rational::{fmt_q, q, qi, serde_q, Q};
use crate::rootdata::{EType, RelativeDatum};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Local étale algebra at a place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalAlgebra {
    /// `E_ν` is a cubic field.
    InertField,
    /// `E_ν = F_ν × K_ν` with `K_ν` a field.
    FxkField,
    /// `E_ν = F_ν × F_ν × F_ν`.
    Split,
}

/// Local component of the global character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalChar {
    Trivial,
    /// Quadratic with `χ_ν∘Nm_{E_ν/F_ν}` trivial.
    QuadNormtrivial,
    /// Quadratic with `χ_ν∘Nm_{E_ν/F_ν}` nontrivial.
    QuadNormnontrivial,
}

impl FromStr for LocalAlgebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::UnknownName { kind: "local algebra", value: s.to_string() })
    }
}

impl FromStr for LocalChar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::UnknownName { kind: "local character", value: s.to_string() })
    }
}

/// The four place classes of the parity analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlaceClass {
    /// Unique spherical quotient.
    Sph,
    /// Field places with trivial character: quotients `π₁ ⊕ π₋₂`.
    V1,
    /// `F×K` field places with `χ∘Nm` nontrivial: quotients `π₁ ⊕ π₋₁`.
    V2,
    /// Split places with `χ∘Nm` nontrivial: four quotients `π_(ε,δ)`.
    V3,
}

/// One irreducible local quotient with its eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalQuotientTag {
    pub label: String,
    /// Eigenvalues of named normalized operators; operators not listed act by 1.
    #[serde(with = "eigen_serde")]
    pub eigenvalues: BTreeMap<String, Q>,
    pub spherical: bool,
}

mod eigen_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<String, Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let out: BTreeMap<&String, String> = m.iter().map(|(k, v)| (k, fmt_q(v))).collect();
        out.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<String, Q>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| crate::rational::parse_q(&v).map(|q| (k, q)).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl LocalQuotientTag {
    /// Eigenvalue of an operator (1 when not listed).
    pub fn eigenvalue(&self, op: &str) -> Q {
        self.eigenvalues.get(op).copied().unwrap_or_else(Q::one)
    }
}

fn tag(label: &str, spherical: bool, eig: &[(&str, Q)]) -> LocalQuotientTag {
    LocalQuotientTag {
        label: label.to_string(),
        eigenvalues: eig.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        spherical,
    }
}

/// Operator acting by `−1` on exactly the quotient `π_(ε,δ)`.
pub fn sign_operator(eps: i64, delta: i64) -> String {
    format!("sgn({eps},{delta})")
}

/// The label of the split quotient `π_(ε,δ)`.
pub fn split_label(eps: i64, delta: i64) -> String {
    format!("π({eps},{delta})")
}

/// Class of a place for a global configuration at `s0 = 1/2`.
pub fn place_class(alg: LocalAlgebra, chr: LocalChar) -> PlaceClass {
    match (alg, chr) {
        (LocalAlgebra::InertField, LocalChar::Trivial) => PlaceClass::V1,
        (LocalAlgebra::FxkField, LocalChar::QuadNormnontrivial) => PlaceClass::V2,
        (LocalAlgebra::Split, LocalChar::QuadNormnontrivial) => PlaceClass::V3,
        _ => PlaceClass::Sph,
    }
}

/// The irreducible quotients of the local degenerate principal series at `s0`.
pub fn local_quotients(alg: LocalAlgebra, chr: LocalChar, s0: Q) -> Result<Vec<LocalQuotientTag>> {
    if alg == LocalAlgebra::InertField && chr == LocalChar::QuadNormtrivial {
        return Err(Error::Places("a quadratic character never becomes trivial on a cubic field norm".into()));
    }
    if ![q(1, 2), q(3, 2), q(5, 2)].contains(&s0) {
        return Err(Error::Unsupported(format!("local quotients at s0 = {}", fmt_q(&s0))));
    }
    if s0 != q(1, 2) {
        return Ok(vec![tag("π1", true, &[])]);
    }
    Ok(match place_class(alg, chr) {
        PlaceClass::Sph => vec![tag("π1", true, &[])],
        PlaceClass::V1 => vec![tag("π1", true, &[("w212", qi(1))]), tag("π-2", false, &[("w212", qi(-2))])],
        PlaceClass::V2 => vec![tag("π1", true, &[("w3", qi(1))]), tag("π-1", false, &[("w3", qi(-1))])],
        PlaceClass::V3 => [(1, 1), (1, -1), (-1, 1), (-1, -1)]
            .iter()
            .map(|&(e, d)| {
                let mut eig: Vec<(String, Q)> =
                    vec![("w13".into(), qi(e)), ("w14".into(), qi(d)), ("w34".into(), qi(e * d))];
                for &(a, b) in &[(1, -1), (-1, 1), (-1, -1)] {
                    eig.push((sign_operator(a, b), if (a, b) == (e, d) { qi(-1) } else { qi(1) }));
                }
                LocalQuotientTag {
                    label: split_label(e, d),
                    eigenvalues: eig.into_iter().collect(),
                    spherical: (e, d) == (1, 1),
                }
            })
            .collect(),
    })
}

/// A place with its local type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceProfile {
    pub id: String,
    pub local_algebra: LocalAlgebra,
    pub local_char: LocalChar,
}

/// Global data of the residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GlobalConfig {
    pub etype: EType,
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
}

/// Checks that a place profile is compatible with the global data.
pub fn check_profile(p: &PlaceProfile, g: &GlobalConfig) -> Result<()> {
    let algebras: &[LocalAlgebra] = match g.etype {
        EType::Cubic => &[LocalAlgebra::InertField, LocalAlgebra::Split],
        EType::FxK => &[LocalAlgebra::FxkField, LocalAlgebra::Split],
        EType::Split => &[LocalAlgebra::Split],
    };
    if !algebras.contains(&p.local_algebra) {
        return Err(Error::Places(format!("place {} has a local algebra impossible for {}", p.id, g.etype)));
    }
    if g.tag == CharTag::Trivial && p.local_char != LocalChar::Trivial {
        return Err(Error::Places(format!("place {} has a nontrivial component of a trivial character", p.id)));
    }
    if p.local_algebra == LocalAlgebra::InertField && p.local_char == LocalChar::QuadNormtrivial {
        return Err(Error::Places(format!("place {} is inadmissible", p.id)));
    }
    Ok(())
}

/// Non-spherical choices at finitely many places.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DottedPlaceSet {
    /// Place id to the label of its chosen non-spherical quotient.
    pub assignments: BTreeMap<String, String>,
}

impl DottedPlaceSet {
    /// `|S|`.
    pub fn size(&self) -> usize {
        self.assignments.len()
    }

    /// Number of places carrying the given label.
    pub fn count(&self, label: &str) -> usize {
        self.assignments.values().filter(|l| *l == label).count()
    }
}

impl fmt::Display for DottedPlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.assignments.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn resolve_tags(
    dotted: &DottedPlaceSet,
    profiles: &[PlaceProfile],
    g: &GlobalConfig,
) -> Result<Vec<LocalQuotientTag>> {
    let mut out = Vec::new();
    for (id, label) in &dotted.assignments {
        let p = profiles
            .iter()
            .find(|p| &p.id == id)
            .ok_or_else(|| Error::Places(format!("unknown place {id}")))?;
        check_profile(p, g)?;
        let tags = local_quotients(p.local_algebra, p.local_char, g.s0)?;
        let t = tags
            .into_iter()
            .find(|t| &t.label == label && !t.spherical)
            .ok_or_else(|| Error::Places(format!("{label} is not a non-spherical quotient at {id}")))?;
        out.push(t);
    }
    Ok(out)
}

/// One term of a class sum: a coefficient times an operator (`None` is the identity).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    #[serde(with = "serde_q")]
    pub coeff: Q,
    pub op: Option<String>,
}

/// The class-sum model of one top-order class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassModel {
    pub members: Vec<String>,
    pub terms: Vec<Term>,
    /// The class lost its top-order part to a cancellation, so only the spherical
    /// vector survives in its image.
    pub spherical_only: bool,
}

fn gk_ratio(etype: EType, tag: CharTag, s0: Q, a: &str, b: &str) -> Result<Q> {
    let d = RelativeDatum::get(etype);
    let chi = chi_s(etype, tag)?;
    let la = leading_operator_coefficient(&d.parse(a)?, &chi, s0)?;
    let lb = leading_operator_coefficient(&d.parse(b)?, &chi, s0)?;
    let r = lb.div(&la);
    if !r.is_rational() {
        return Err(Error::Unsupported(format!("leading coefficients of {a} and {b} differ by {r}")));
    }
    Ok(r.scalar)
}

fn term(coeff: Q, op: Option<&str>) -> Term {
    Term { coeff, op: op.map(str::to_string) }
}

/// Class-sum models of the top-order classes for a global configuration.
pub fn class_models(g: &GlobalConfig) -> Result<Vec<ClassModel>> {
    let h = q(1, 2);
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let report = pole_report(g.etype, g.tag, g.s0)?;
    if report.net_order == 0 {
        return Err(Error::Unsupported(format!("no pole at s0 = {} for {} {}", fmt_q(&g.s0), g.etype, g.tag)));
    }
    if g.s0 != h {
        return Ok(vec![ClassModel { members: Vec::new(), terms: vec![term(qi(1), None)], spherical_only: false }]);
    }
    match (g.etype, g.tag) {
        (EType::Cubic, CharTag::Trivial) => {
            let c = gk_ratio(g.etype, g.tag, h, "w21", "w21212")?;
            Ok(vec![
                ClassModel {
                    members: names(&["w21", "w21212"]),
                    terms: vec![term(qi(1), None), term(c, Some("w212"))],
                    spherical_only: false,
                },
                ClassModel {
                    members: names(&["w212", "w2121"]),
                    terms: vec![term(qi(1), None)],
                    spherical_only: true,
                },
            ])
        }
        (EType::Cubic, CharTag::QuadF) => Ok(["w212", "w2121", "w21212"]
            .iter()
            .map(|w| ClassModel { members: names(&[w]), terms: vec![term(qi(1), None)], spherical_only: false })
            .collect()),
        (EType::FxK, CharTag::QuadKNormNontrivial) => {
            let mut out = Vec::new();
            for (a, b) in [("w2321", "w2132132"), ("w21321", "w213213")] {
                let c = gk_ratio(g.etype, g.tag, h, a, b)?;
                out.push(ClassModel {
                    members: names(&[a, b]),
                    terms: vec![term(qi(1), None), term(c, Some("w3"))],
                    spherical_only: false,
                });
            }
            Ok(out)
        }
        (EType::Split, CharTag::QuadF) => {
            let classes = [
                ["w21324", "w21423", "w23421", "w213242132"],
                ["w21342", "w2132421", "w2132423", "w2134213"],
                ["w213242", "w213421", "w213423", "w21324213"],
            ];
            Ok(classes
                .iter()
                .map(|m| {
                    let mut terms = vec![term(qi(1), None)];
                    for &(a, b) in &[(1, -1), (-1, 1), (-1, -1)] {
                        terms.push(Term { coeff: qi(1), op: Some(sign_operator(a, b)) });
                    }
                    ClassModel { members: names(m), terms, spherical_only: false }
                })
                .collect())
        }
        _ => Err(Error::Unsupported(format!(
            "no class-sum model for {} {} at s0 = {}",
            g.etype,
            g.tag,
            fmt_q(&g.s0)
        ))),
    }
}

/// Local operator name carrying a global operator at a place class.
fn local_operator(etype: EType, class: PlaceClass, op: &str) -> String {
    match (etype, class, op) {
        (EType::FxK, PlaceClass::V3, "w3") => "w34".to_string(),
        _ => op.to_string(),
    }
}

/// Verdict of the oracle with the class sums that witness it.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub appears: bool,
    #[serde(with = "crate::rational::serde_q_vec")]
    pub class_sums: Vec<Q>,
}

/// The oracle: `π_Ṡ` appears iff some top class sum is nonzero on it.
pub fn appears(dotted: &DottedPlaceSet, profiles: &[PlaceProfile], g: &GlobalConfig) -> Result<Verdict> {
    appears_with_models(&class_models(g)?, dotted, profiles, g)
}

/// The oracle with precomputed class models.
pub fn appears_with_models(
    models: &[ClassModel],
    dotted: &DottedPlaceSet,
    profiles: &[PlaceProfile],
    g: &GlobalConfig,
) -> Result<Verdict> {
    let tags = resolve_tags(dotted, profiles, g)?;
    let classes: Vec<PlaceClass> = dotted
        .assignments
        .keys()
        .map(|id| {
            let p = profiles.iter().find(|p| &p.id == id).expect("resolved above");
            place_class(p.local_algebra, p.local_char)
        })
        .collect();
    let mut sums = Vec::new();
    for m in models {
        if m.spherical_only {
            sums.push(if tags.is_empty() { qi(1) } else { Q::zero() });
            continue;
        }
        let mut total = Q::zero();
        for t in &m.terms {
            let mut v = t.coeff;
            if let Some(op) = &t.op {
                for (tag, cls) in tags.iter().zip(&classes) {
                    v *= tag.eigenvalue(&local_operator(g.etype, *cls, op));
                }
            }
            total += v;
        }
        sums.push(total);
    }
    Ok(Verdict { appears: sums.iter().any(|x| !x.is_zero()), class_sums: sums })
}

/// The closed-form conditions of the parity theorem.
pub fn appears_closed_form(dotted: &DottedPlaceSet, profiles: &[PlaceProfile], g: &GlobalConfig) -> Result<bool> {
    resolve_tags(dotted, profiles, g)?;
    if g.s0 != q(1, 2) {
        if eisenstein_has_pole(g)? {
            return Ok(dotted.size() == 0);
        }
        return Err(Error::Unsupported("no pole".into()));
    }
    match (g.etype, g.tag) {
        (EType::Cubic, CharTag::Trivial) => Ok(dotted.size() != 1),
        (EType::Cubic, CharTag::QuadF) => Ok(true),
        (EType::FxK, CharTag::QuadKNormNontrivial) => {
            let star = dotted.count("π-1") + dotted.count(&split_label(-1, 1)) + dotted.count(&split_label(1, -1));
            Ok(star.is_multiple_of(2))
        }
        (EType::Split, CharTag::QuadF) => {
            let a = dotted.count(&split_label(-1, 1));
            let b = dotted.count(&split_label(1, -1));
            let c = dotted.count(&split_label(-1, -1));
            Ok((a * b) % 2 == (a * c) % 2 && (a * c) % 2 == (b * c) % 2)
        }
        _ => Err(Error::Unsupported(format!("no closed form for {} {}", g.etype, g.tag))),
    }
}

fn eisenstein_has_pole(g: &GlobalConfig) -> Result<bool> {
    Ok(pole_report(g.etype, g.tag, g.s0)?.net_order > 0)
}

/// One enumerated dotted set with both verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct EnumeratedCase {
    pub dotted: DottedPlaceSet,
    pub appears: bool,
    pub closed_form: bool,
    #[serde(with = "crate::rational::serde_q_vec")]
    pub class_sums: Vec<Q>,
}

/// Every admissible dotted set with at most `bound` non-spherical places.
pub fn enumerate_admissible(profiles: &[PlaceProfile], bound: usize, g: &GlobalConfig) -> Result<Vec<EnumeratedCase>> {
    let mut options: Vec<Vec<Option<String>>> = Vec::new();
    for p in profiles {
        check_profile(p, g)?;
        let mut o = vec![None];
        for t in local_quotients(p.local_algebra, p.local_char, g.s0)? {
            if !t.spherical {
                o.push(Some(t.label));
            }
        }
        options.push(o);
    }
    let models = class_models(g)?;
    let mut out = Vec::new();
    let mut current = DottedPlaceSet::default();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        models: &[ClassModel],
        profiles: &[PlaceProfile],
        options: &[Vec<Option<String>>],
        bound: usize,
        g: &GlobalConfig,
        cur: &mut DottedPlaceSet,
        out: &mut Vec<EnumeratedCase>,
    ) -> Result<()> {
        if i == profiles.len() {
            let v = appears_with_models(models, cur, profiles, g)?;
            let closed = appears_closed_form(cur, profiles, g)?;
            out.push(EnumeratedCase { dotted: cur.clone(), appears: v.appears, closed_form: closed, class_sums: v.class_sums });
            return Ok(());
        }
        for o in &options[i] {
            match o {
                None => rec(i + 1, models, profiles, options, bound, g, cur, out)?,
                Some(label) if cur.size() < bound => {
                    cur.assignments.insert(profiles[i].id.clone(), label.clone());
                    rec(i + 1, models, profiles, options, bound, g, cur, out)?;
                    cur.assignments.remove(&profiles[i].id);
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
    rec(0, &models, profiles, &options, bound, g, &mut current, &mut out)?;
    Ok(out)
}

/// Reads a place-profile list from JSON text.
pub fn parse_profiles(text: &str) -> Result<Vec<PlaceProfile>> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("place profiles: {e}")))
}

/// Synthetic profiles: `n` places of each given local type.
pub fn synthetic_profiles(kinds: &[(LocalAlgebra, LocalChar)], n: usize) -> Vec<PlaceProfile> {
    let mut out = Vec::new();
    for (k, (alg, chr)) in kinds.iter().enumerate() {
        for i in 0..n {
            out.push(PlaceProfile { id: format!("v{k}_{i}"), local_algebra: *alg, local_char: *chr });
        }
    }
    out
}

/// The local types that occur for a global configuration.
pub fn admissible_local_types(g: &GlobalConfig) -> Vec<(LocalAlgebra, LocalChar)> {
    use LocalAlgebra::*;
    use LocalChar::*;
    let chars: &[LocalChar] = if g.tag == CharTag::Trivial { &[Trivial] } else { &[Trivial, QuadNormtrivial, QuadNormnontrivial] };
    let mut out = Vec::new();
    for alg in [InertField, FxkField, Split] {
        for &c in chars {
            let p = PlaceProfile { id: String::new(), local_algebra: alg, local_char: c };
            if check_profile(&p, g).is_ok() {
                out.push((alg, c));
            }
        }
    }
    out
}
