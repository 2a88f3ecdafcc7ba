//! Torus characters with an affine part and a finite-order part, Weyl twisting,
//! equality at a point, stabilizers, and rendering in torus coordinates.

use crate::affine::{Affine, S};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, qi, Q};
use crate::rootdata::{pair, EType, FieldLabel, RelativeDatum, Vec4, WeylElement};
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// The finite-order character a degenerate principal series is twisted by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharTag {
    /// The trivial character.
    Trivial,
    /// A quadratic character of `F`.
    QuadF,
    /// The quadratic character `χ_K` attached to `K`, so `χ∘Nm_{K/F}` is trivial.
    QuadKNormTrivial,
    /// A quadratic character with `χ∘Nm_{K/F}` nontrivial.
    QuadKNormNontrivial,
    /// A cubic character `χ_E` attached to the cubic field `E`.
    CubicE,
}

impl CharTag {
    /// All tags.
    pub const ALL: [CharTag; 5] = [
        CharTag::Trivial,
        CharTag::QuadF,
        CharTag::QuadKNormTrivial,
        CharTag::QuadKNormNontrivial,
        CharTag::CubicE,
    ];

    /// Order of the character.
    pub fn order(self) -> i64 {
        match self {
            CharTag::Trivial => 1,
            CharTag::CubicE => 3,
            _ => 2,
        }
    }

    /// True for the quadratic tags.
    pub fn is_quadratic(self) -> bool {
        self.order() == 2
    }

    /// Stored flag: `χ∘Nm_{L/F}` is trivial for the field `L`.
    pub fn trivial_after_norm(self, field: FieldLabel) -> bool {
        matches!(
            (self, field),
            (CharTag::Trivial, _) | (CharTag::QuadKNormTrivial, FieldLabel::K) | (CharTag::CubicE, FieldLabel::E)
        )
    }

    /// True when `χ^k∘Nm_{L/F}` is trivial.
    pub fn power_trivial(self, field: FieldLabel, k: i64) -> bool {
        k.rem_euclid(self.order()) == 0 || self.trivial_after_norm(field)
    }

    /// Tags admissible for an algebra.
    pub fn admissible(etype: EType) -> &'static [CharTag] {
        match etype {
            EType::Split => &[CharTag::Trivial, CharTag::QuadF],
            EType::FxK => &[CharTag::Trivial, CharTag::QuadKNormTrivial, CharTag::QuadKNormNontrivial],
            EType::Cubic => &[CharTag::Trivial, CharTag::QuadF, CharTag::CubicE],
        }
    }

    /// Errors unless the tag is admissible for the algebra.
    pub fn check(self, etype: EType) -> Result<()> {
        if CharTag::admissible(etype).contains(&self) {
            Ok(())
        } else {
            Err(Error::IncompatibleTag { etype: etype.to_string(), tag: self.to_string() })
        }
    }

    /// Machine name.
    pub fn name(self) -> &'static str {
        match self {
            CharTag::Trivial => "trivial",
            CharTag::QuadF => "quad-f",
            CharTag::QuadKNormTrivial => "quad-k-normtrivial",
            CharTag::QuadKNormNontrivial => "quad-k-normnontrivial",
            CharTag::CubicE => "cubic-e",
        }
    }

    /// Symbol used when rendering the finite part.
    pub fn symbol(self) -> &'static str {
        match self {
            CharTag::Trivial => "1",
            CharTag::QuadF | CharTag::QuadKNormNontrivial => "χ",
            CharTag::QuadKNormTrivial => "χ_K",
            CharTag::CubicE => "χ_E",
        }
    }
}

impl fmt::Display for CharTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CharTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_' && !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase();
        match norm.as_str() {
            "trivial" | "triv" | "id" => Ok(CharTag::Trivial),
            "quadf" | "quad" | "quadratic" => Ok(CharTag::QuadF),
            "quadknormtrivial" | "chik" | "χk" => Ok(CharTag::QuadKNormTrivial),
            "quadknormnontrivial" | "quadknn" => Ok(CharTag::QuadKNormNontrivial),
            "cubice" | "cubic" | "chie" | "χe" => Ok(CharTag::CubicE),
            _ => Err(Error::UnknownName { kind: "character", value: s.to_string() }),
        }
    }
}

impl Serialize for CharTag {
    fn serialize<S2: Serializer>(&self, s: S2) -> std::result::Result<S2::Ok, S2::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for CharTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight whose coordinates are affine forms, in fundamental-weight coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineWeight(pub [Affine; 4]);

impl AffineWeight {
    /// A weight with constant integer coordinates.
    pub fn constant(v: Vec4) -> Self {
        AffineWeight(v.map(Affine::from))
    }

    /// A weight with constant rational coordinates.
    pub fn constant_q(v: [Q; 4]) -> Self {
        AffineWeight(v.map(Affine::constant))
    }

    /// Evaluates every coordinate at `s = s0`.
    pub fn at(&self, s0: Q) -> Self {
        AffineWeight(self.0.map(|a| a.subst(S, s0)))
    }

    /// Pairing with the coroot of a root given in simple-root coordinates.
    pub fn pair(&self, root_simple: &Vec4) -> Affine {
        crate::rootdata::pair_affine(&self.0, root_simple)
    }

    /// Fixed by the Galois permutation of the algebra.
    pub fn is_galois_invariant(&self, etype: EType) -> bool {
        let p = etype.galois_perm();
        (0..4).all(|i| self.0[i] == self.0[p[i]])
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The weight `ρ = (1,1,1,1)`.
pub fn rho() -> AffineWeight {
    AffineWeight::constant([1, 1, 1, 1])
}

/// The Heisenberg weight `λ_s = (−1, s+3/2, −1, −1)`.
pub fn lambda_s() -> AffineWeight {
    let mut w = AffineWeight::constant([-1, 0, -1, -1]);
    w.0[1] = Affine::in_s(qi(1), q(3, 2));
    w
}

/// The weight `η_s = (1, s−3/2, 1, 1)`.
pub fn eta_s() -> AffineWeight {
    let mut w = AffineWeight::constant([1, 0, 1, 1]);
    w.0[1] = Affine::in_s(qi(1), q(-3, 2));
    w
}

/// Absolute nodes of a set of relative letters.
fn nodes_of(etype: EType, letters: &[u8]) -> Result<Vec<usize>> {
    let map = etype.letter_map();
    let mut out = Vec::new();
    for &l in letters {
        if l == 0 || l as usize > map.len() {
            return Err(Error::LetterOutOfRange { letter: l, rank: map.len() });
        }
        out.extend_from_slice(&map[l as usize - 1]);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Validates that the complement of `levi` is a single relative letter.
pub fn complement_letters(etype: EType, levi: &[u8]) -> Result<Vec<u8>> {
    nodes_of(etype, levi)?;
    let comp: Vec<u8> = (1..=etype.rank() as u8).filter(|l| !levi.contains(l)).collect();
    if comp.len() != 1 {
        return Err(Error::InvalidParabolic(format!(
            "levi letters {levi:?} do not define a maximal parabolic of the {etype} system"
        )));
    }
    Ok(comp)
}

/// `λ_s = s·ω_P − ρ_M` for the maximal parabolic whose Levi has the given relative letters.
pub fn lambda_for_levi(etype: EType, levi: &[u8]) -> Result<AffineWeight> {
    let comp = complement_letters(etype, levi)?;
    let levi_nodes = nodes_of(etype, levi)?;
    let comp_nodes = nodes_of(etype, &comp)?;
    let datum = RelativeDatum::get(etype);
    let mut two_rho = [0i64; 4];
    for r in &datum.absolute.positive_roots {
        if (0..4).all(|i| r.simple[i] == 0 || levi_nodes.contains(&i)) {
            for (acc, x) in two_rho.iter_mut().zip(r.weight) {
                *acc += x;
            }
        }
    }
    let mut w = AffineWeight::constant_q(two_rho.map(|x| q(-x, 2)));
    for n in comp_nodes {
        w.0[n] = w.0[n] + Affine::in_s(qi(1), qi(0));
    }
    Ok(w)
}

/// `ω_P` for the maximal parabolic with the given Levi letters.
pub fn omega_for_levi(etype: EType, levi: &[u8]) -> Result<Vec4> {
    let comp = complement_letters(etype, levi)?;
    let mut e = [0; 4];
    for n in nodes_of(etype, &comp)? {
        e[n] = 1;
    }
    Ok(e)
}

/// A character of the maximal torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusCharacter {
    pub etype: EType,
    pub tag: CharTag,
    /// Unramified part.
    pub affine: AffineWeight,
    /// Exponent vector of the finite part, reduced mod the character order.
    pub finite: Vec4,
}

impl TorusCharacter {
    /// Builds a character, reducing the finite exponents.
    pub fn new(etype: EType, tag: CharTag, affine: AffineWeight, finite: Vec4) -> Result<Self> {
        tag.check(etype)?;
        Ok(TorusCharacter { etype, tag, affine, finite: finite.map(|x| x.rem_euclid(tag.order())) })
    }

    /// The finite exponents at the coordinates where the character is visible.
    ///
    /// A coordinate whose field makes `χ∘Nm` trivial carries no information.
    pub fn visible_finite(&self) -> Vec4 {
        let mut f = self.finite;
        for (j, x) in f.iter_mut().enumerate() {
            if self.tag.trivial_after_norm(coordinate_field(self.etype, j)) {
                *x = 0;
            }
        }
        f
    }

    /// The character at `s = s0`.
    pub fn at(&self, s0: Q) -> Self {
        TorusCharacter { affine: self.affine.at(s0), ..self.clone() }
    }

    /// The exponent `⟨e, γ̌⟩` of the finite part along a coroot.
    pub fn finite_pairing(&self, root_simple: &Vec4) -> i64 {
        pair(&self.finite, root_simple).rem_euclid(self.tag.order())
    }

    /// Renders the character in torus coordinates.
    pub fn render(&self) -> RenderedCharacter {
        render(self)
    }
}

/// Field attached to an absolute coordinate by its Galois orbit.
pub fn coordinate_field(etype: EType, node: usize) -> FieldLabel {
    let p = etype.galois_perm();
    let mut orbit = vec![node];
    let mut cur = p[node];
    while cur != node {
        orbit.push(cur);
        cur = p[cur];
    }
    FieldLabel::from_orbit_size(orbit.len())
}

/// `χ_s = μ_χ ⊗ λ_s` for the Heisenberg parabolic.
pub fn chi_s(etype: EType, tag: CharTag) -> Result<TorusCharacter> {
    chi_s_levi(etype, tag, &etype.heisenberg_levi())
}

/// `χ_s` for the maximal parabolic with the given Levi letters.
pub fn chi_s_levi(etype: EType, tag: CharTag, levi: &[u8]) -> Result<TorusCharacter> {
    tag.check(etype)?;
    let affine = lambda_for_levi(etype, levi)?;
    let finite = if tag == CharTag::Trivial { [0; 4] } else { omega_for_levi(etype, levi)? };
    TorusCharacter::new(etype, tag, affine, finite)
}

/// `w⁻¹·χ`.
pub fn twist(w: &WeylElement, chi: &TorusCharacter) -> TorusCharacter {
    let datum = RelativeDatum::get(chi.etype);
    let affine = AffineWeight(datum.act_inv(w, &chi.affine.0));
    let finite = datum.act_inv_vec(w, &chi.finite).map(|x| x.rem_euclid(chi.tag.order()));
    TorusCharacter { etype: chi.etype, tag: chi.tag, affine, finite }
}

/// True when the two characters agree at `s = s0`.
pub fn equal_at(a: &TorusCharacter, b: &TorusCharacter, s0: Q) -> bool {
    a.etype == b.etype
        && a.tag == b.tag
        && a.affine.at(s0) == b.affine.at(s0)
        && a.visible_finite() == b.visible_finite()
}

/// A hashable key identifying a character at a point, used to group twists.
pub fn key_at(chi: &TorusCharacter, s0: Q) -> (AffineWeight, Vec4) {
    (chi.affine.at(s0), chi.visible_finite())
}

/// Elements of the subgroup generated by `letters` that fix `χ` at `s0`.
pub fn stabilizer(chi: &TorusCharacter, s0: Q, letters: &[u8]) -> Result<Vec<WeylElement>> {
    let datum = RelativeDatum::get(chi.etype);
    let base = chi.at(s0);
    Ok(datum
        .subgroup(letters)?
        .into_iter()
        .filter(|w| equal_at(&twist(w, &base), &base, s0))
        .collect())
}

/// The quotient `(w′⁻¹·χ)/(w⁻¹·χ)` together with the connecting element `u = w⁻¹w′`.
#[derive(Debug, Clone)]
pub struct CharRatio {
    pub connecting: WeylElement,
    pub ratio: TorusCharacter,
}

/// Quotient of two twists where `w′ = w·u` with lengths adding.
pub fn char_ratio(w: &WeylElement, w2: &WeylElement, chi: &TorusCharacter) -> Result<CharRatio> {
    let datum = RelativeDatum::get(chi.etype);
    let u = datum.reduce(&datum.mul(&datum.inverse(w), w2));
    if datum.length(w) + u.word.len() != datum.length(w2) {
        return Err(Error::NotLengthAdditive(w2.name(), w.name()));
    }
    let a = twist(w, chi);
    let b = twist(w2, chi);
    let mut affine = b.affine;
    for j in 0..4 {
        affine.0[j] = b.affine.0[j] - a.affine.0[j];
    }
    let finite = [0, 1, 2, 3].map(|j| (b.finite[j] - a.finite[j]).rem_euclid(chi.tag.order()));
    Ok(CharRatio { connecting: u, ratio: TorusCharacter { affine, finite, ..chi.clone() } })
}

/// A character written in the relative torus coordinates `t1, t2, …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderedCharacter {
    /// Nonzero finite exponents by coordinate.
    pub finite: BTreeMap<String, i64>,
    /// Affine exponents `[a, b]` (meaning `a·s+b`) by coordinate, as `"p/q"` strings.
    pub affine: BTreeMap<String, [String; 2]>,
    /// Plain-text form such as `χ_K(t1t2)·|t1|_F/|t3|_K`.
    pub text: String,
}

fn exponent_suffix(e: &Affine) -> String {
    if e.is_constant() {
        if e.c.is_one() {
            String::new()
        } else if e.c.is_integer() {
            format!("^{}", e.c.numer())
        } else {
            format!("^({})", fmt_q(&e.c))
        }
    } else {
        format!("^({e})")
    }
}

fn render(chi: &TorusCharacter) -> RenderedCharacter {
    let map = chi.etype.letter_map();
    let vis = chi.visible_finite();
    let mut finite = BTreeMap::new();
    let mut affine = BTreeMap::new();
    let mut fin_parts = String::new();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (j, nodes) in map.iter().enumerate() {
        let node = nodes[0];
        let coord = format!("t{}", j + 1);
        let field = coordinate_field(chi.etype, node);
        let k = vis[node];
        if k != 0 {
            finite.insert(coord.clone(), k);
            fin_parts.push_str(&coord);
            if k != 1 {
                fin_parts.push_str(&format!("^{k}"));
            }
        }
        let e = chi.affine.0[node];
        if e != Affine::zero() {
            affine.insert(coord.clone(), [fmt_q(&e.s_coeff()), fmt_q(&e.c)]);
            let base = format!("|{coord}|_{field}");
            if e.is_positive_like() {
                num.push(format!("{base}{}", exponent_suffix(&e)));
            } else {
                den.push(format!("{base}{}", exponent_suffix(&-e)));
            }
        }
    }
    let mut frac = String::new();
    if !num.is_empty() || !den.is_empty() {
        frac = if num.is_empty() { "1".to_string() } else { num.concat() };
        if den.len() == 1 {
            frac.push('/');
            frac.push_str(&den[0]);
        } else if den.len() > 1 {
            frac.push_str(&format!("/({})", den.concat()));
        }
    }
    let text = match (fin_parts.is_empty(), frac.is_empty()) {
        (true, true) => "1".to_string(),
        (true, false) => frac,
        (false, true) => format!("{}({fin_parts})", chi.tag.symbol()),
        (false, false) => format!("{}({fin_parts})·{frac}", chi.tag.symbol()),
    };
    RenderedCharacter { finite, affine, text }
}

/// Stabilizer base character: affine part zero and every finite exponent one.
pub fn generic_finite_character(etype: EType, tag: CharTag) -> Result<TorusCharacter> {
    TorusCharacter::new(etype, tag, AffineWeight::constant([0; 4]), [1, 1, 1, 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_weights() {
        assert_eq!(lambda_s().to_string(), "(-1, s+3/2, -1, -1)");
        assert_eq!(eta_s().to_string(), "(1, s-3/2, 1, 1)");
        assert_eq!(lambda_for_levi(EType::Split, &[1, 3, 4]).unwrap(), lambda_s());
        assert_eq!(lambda_s().at(q(5, 2)).to_string(), "(-1, 4, -1, -1)");
    }

    #[test]
    fn p234_weight() {
        let w = lambda_for_levi(EType::FxK, &[2, 3]).unwrap();
        assert_eq!(w.to_string(), "(s+2, -1, -1, -1)");
    }

    #[test]
    fn tags_are_checked_against_the_algebra() {
        assert!(chi_s(EType::Split, CharTag::CubicE).is_err());
        assert!(chi_s(EType::Cubic, CharTag::QuadKNormTrivial).is_err());
        assert!(chi_s(EType::FxK, CharTag::QuadKNormNontrivial).is_ok());
    }

    #[test]
    fn tag_names_parse() {
        for t in CharTag::ALL {
            assert_eq!(t.name().parse::<CharTag>().unwrap(), t);
        }
        assert_eq!("chiK".parse::<CharTag>().unwrap(), CharTag::QuadKNormTrivial);
    }
}
