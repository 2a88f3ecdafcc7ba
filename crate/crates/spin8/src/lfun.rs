//! Formal products of completed L-functions and affine factors, their orders at a
//! point, and symbolic Laurent leading coefficients.

use crate::affine::{Affine, Point, NVARS};
use crate::characters::CharTag;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, q, qi, Q};
use crate::rootdata::FieldLabel;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A nontrivial Hecke character `χ^k∘Nm_{L/F}` attached to an atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LChar {
    pub tag: CharTag,
    /// Power of the base character, in `1..order`.
    pub power: i64,
}

impl LChar {
    /// Quadratic characters satisfy `L(s,ψ) = L(1−s,ψ)` with trivial root number.
    pub fn self_dual_fe(&self) -> bool {
        self.tag.is_quadratic()
    }

    fn render(&self, field: FieldLabel) -> String {
        let mut s = self.tag.symbol().to_string();
        if self.power != 1 {
            s.push_str(&format!("^{}", self.power));
        }
        if field != FieldLabel::F {
            s.push_str(&format!("∘Nm_{{{field}/F}}"));
        }
        s
    }
}

/// A free generator of the constant ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `ζ_L(t)` at a regular point.
    Zeta { field: FieldLabel, arg: Q },
    /// `L_L(t, ψ)` for a nontrivial character.
    L { field: FieldLabel, arg: Q, chr: LChar },
    /// `R_L`, the residue of `ζ_L` at 1.
    R { field: FieldLabel },
}

impl Generator {
    /// Maps the argument into `[1/2, ∞)` when the functional equation allows it.
    pub fn canonical(self) -> Self {
        let half = q(1, 2);
        match self {
            Generator::Zeta { field, arg } if arg < half => Generator::Zeta { field, arg: qi(1) - arg },
            Generator::L { field, arg, chr } if arg < half && chr.self_dual_fe() => {
                Generator::L { field, arg: qi(1) - arg, chr }
            }
            g => g,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Zeta { field, arg } => write!(f, "ζ_{field}({})", fmt_q(arg)),
            Generator::L { field, arg, chr } => {
                write!(f, "L_{field}({},{})", fmt_q(arg), chr.render(*field))
            }
            Generator::R { field } => write!(f, "R_{field}"),
        }
    }
}

/// A rational times a monomial in the free generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ConstantRepr", try_from = "ConstantRepr")]
pub struct SymbolicConstant {
    pub scalar: Q,
    pub gens: BTreeMap<Generator, i64>,
}

impl SymbolicConstant {
    /// The constant 1.
    pub fn one() -> Self {
        SymbolicConstant { scalar: Q::one(), gens: BTreeMap::new() }
    }

    /// A rational constant.
    pub fn scalar(x: Q) -> Self {
        SymbolicConstant { scalar: x, gens: BTreeMap::new() }
    }

    /// A single generator.
    pub fn gen(g: Generator) -> Self {
        SymbolicConstant::one().times_gen(g, 1)
    }

    /// `R_L`.
    pub fn residue(field: FieldLabel) -> Self {
        Self::gen(Generator::R { field })
    }

    /// `ζ_L(t)`.
    pub fn zeta(field: FieldLabel, arg: Q) -> Self {
        Self::gen(Generator::Zeta { field, arg })
    }

    /// Multiplies by `g^e`, canonicalizing `g`.
    pub fn times_gen(mut self, g: Generator, e: i64) -> Self {
        let g = g.canonical();
        let x = self.gens.entry(g).or_insert(0);
        *x += e;
        if *x == 0 {
            self.gens.remove(&g);
        }
        self
    }

    /// Product.
    pub fn mul(&self, o: &SymbolicConstant) -> Self {
        let mut out = self.clone();
        out.scalar *= o.scalar;
        for (g, e) in &o.gens {
            out = out.times_gen(*g, *e);
        }
        out
    }

    /// Integer power. The scalar must be nonzero when `e < 0`.
    pub fn pow(&self, e: i64) -> Self {
        let mut out = SymbolicConstant::scalar(crate::rational::qpow(self.scalar, e as i32));
        for (g, x) in &self.gens {
            out = out.times_gen(*g, x * e);
        }
        out
    }

    /// Quotient.
    pub fn div(&self, o: &SymbolicConstant) -> Self {
        self.mul(&o.pow(-1))
    }

    /// True for the constant 1.
    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.gens.is_empty()
    }

    /// True when no generator appears.
    pub fn is_rational(&self) -> bool {
        self.gens.is_empty()
    }

    /// Exponent of a generator.
    pub fn exponent(&self, g: &Generator) -> i64 {
        self.gens.get(g).copied().unwrap_or(0)
    }
}

/// Applies the functional equation to every generator.
pub fn fe_canonicalize(c: &SymbolicConstant) -> SymbolicConstant {
    let mut out = SymbolicConstant::scalar(c.scalar);
    for (g, e) in &c.gens {
        out = out.times_gen(*g, *e);
    }
    out
}

fn factor_int(mut n: i64) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn power_text(base: String, e: i64) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

impl fmt::Display for SymbolicConstant {
    /// Renders as e.g. `2^7·3·ζ_F(2)^2·ζ_F(3)·ζ_K(2)·R_F^3·R_K^2` or `R_F/(2·ζ_F(3))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scalar.is_zero() {
            return f.write_str("0");
        }
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (p, k) in factor_int(self.scalar.numer().abs()) {
            num.push(power_text(p.to_string(), k as i64));
        }
        for (p, k) in factor_int(*self.scalar.denom()) {
            den.push(power_text(p.to_string(), k as i64));
        }
        for (g, e) in &self.gens {
            if *e > 0 {
                num.push(power_text(g.to_string(), *e));
            } else {
                den.push(power_text(g.to_string(), -e));
            }
        }
        let sign = if self.scalar.is_negative() { "-" } else { "" };
        let n = if num.is_empty() { "1".to_string() } else { num.join("·") };
        let d = match den.len() {
            0 => String::new(),
            1 => format!("/{}", den[0]),
            _ => format!("/({})", den.join("·")),
        };
        write!(f, "{sign}{n}{d}")
    }
}

/// Serialized form of a constant.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstantRepr {
    pub scalar: String,
    pub factors: Vec<FactorRepr>,
    pub text: String,
}

/// One generator power in serialized form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorRepr {
    pub kind: String,
    pub field: FieldLabel,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arg: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<LChar>,
    pub exp: i64,
}

impl From<SymbolicConstant> for ConstantRepr {
    fn from(c: SymbolicConstant) -> Self {
        let factors = c
            .gens
            .iter()
            .map(|(g, e)| match g {
                Generator::Zeta { field, arg } => FactorRepr {
                    kind: "zeta".into(),
                    field: *field,
                    arg: Some(fmt_q(arg)),
                    character: None,
                    exp: *e,
                },
                Generator::L { field, arg, chr } => FactorRepr {
                    kind: "L".into(),
                    field: *field,
                    arg: Some(fmt_q(arg)),
                    character: Some(*chr),
                    exp: *e,
                },
                Generator::R { field } => {
                    FactorRepr { kind: "R".into(), field: *field, arg: None, character: None, exp: *e }
                }
            })
            .collect();
        ConstantRepr { scalar: fmt_q(&c.scalar), text: c.to_string(), factors }
    }
}

impl TryFrom<ConstantRepr> for SymbolicConstant {
    type Error = Error;
    fn try_from(r: ConstantRepr) -> Result<Self> {
        let mut c = SymbolicConstant::scalar(parse_q(&r.scalar)?);
        for f in r.factors {
            let arg = || -> Result<Q> {
                parse_q(f.arg.as_deref().ok_or_else(|| Error::Input("missing argument".into()))?)
            };
            let g = match f.kind.as_str() {
                "zeta" => Generator::Zeta { field: f.field, arg: arg()? },
                "L" => Generator::L {
                    field: f.field,
                    arg: arg()?,
                    chr: f.character.ok_or_else(|| Error::Input("missing character".into()))?,
                },
                "R" => Generator::R { field: f.field },
                other => return Err(Error::UnknownName { kind: "generator", value: other.into() }),
            };
            c = c.times_gen(g, f.exp);
        }
        Ok(c)
    }
}

/// A completed L-function `L_L(ℓ, ψ)` with an affine argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LAtom {
    pub field: FieldLabel,
    pub arg: Affine,
    /// `None` for the Dedekind zeta function.
    pub chr: Option<LChar>,
}

impl LAtom {
    /// `ζ_L(ℓ)`.
    pub fn zeta(field: FieldLabel, arg: Affine) -> Self {
        LAtom { field, arg, chr: None }
    }

    /// True when the functional equation may reflect the argument.
    fn reflectable(&self) -> bool {
        self.chr.is_none_or(|c| c.self_dual_fe())
    }

    /// Representative of `{ℓ, 1−ℓ}` under the functional equation.
    pub fn canonical(self) -> Self {
        if !self.reflectable() {
            return self;
        }
        let refl = -self.arg + qi(1);
        let keep = match self.arg.leading_coeff() {
            Some(a) => a.is_positive(),
            None => self.arg.c >= q(1, 2),
        };
        if keep {
            self
        } else {
            LAtom { arg: refl, ..self }
        }
    }
}

impl fmt::Display for LAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.chr {
            None => write!(f, "ζ_{}({})", self.field, self.arg),
            Some(c) => write!(f, "L_{}({},{})", self.field, self.arg, c.render(self.field)),
        }
    }
}

/// A formal product `scalar · ∏ atom^e · ∏ poly^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LProduct {
    pub atoms: BTreeMap<LAtom, i64>,
    pub poly: BTreeMap<Affine, i64>,
    pub scalar: Q,
}

impl Default for LProduct {
    fn default() -> Self {
        LProduct::one()
    }
}

impl LProduct {
    /// The empty product.
    pub fn one() -> Self {
        LProduct { atoms: BTreeMap::new(), poly: BTreeMap::new(), scalar: Q::one() }
    }

    /// Multiplies in `atom^e` without canonicalizing.
    pub fn push_atom(&mut self, atom: LAtom, e: i64) {
        let x = self.atoms.entry(atom).or_insert(0);
        *x += e;
        if *x == 0 {
            self.atoms.remove(&atom);
        }
    }

    /// Multiplies in `poly^e`.
    pub fn push_poly(&mut self, p: Affine, e: i64) {
        let x = self.poly.entry(p).or_insert(0);
        *x += e;
        if *x == 0 {
            self.poly.remove(&p);
        }
    }

    /// Product of two formal products.
    pub fn mul(&self, o: &LProduct) -> LProduct {
        let mut out = self.clone();
        out.scalar *= o.scalar;
        for (a, e) in &o.atoms {
            out.push_atom(*a, *e);
        }
        for (p, e) in &o.poly {
            out.push_poly(*p, *e);
        }
        out
    }

    /// Reflects atoms into canonical form, makes polynomial factors monic, and cancels.
    pub fn canonicalize(&self) -> LProduct {
        let mut out = LProduct { scalar: self.scalar, ..LProduct::one() };
        for (a, e) in &self.atoms {
            out.push_atom(a.canonical(), *e);
        }
        for (p, e) in &self.poly {
            match p.leading_coeff() {
                Some(c) => {
                    out.scalar *= crate::rational::qpow(c, *e as i32);
                    out.push_poly(p.scale(c.recip()), *e);
                }
                None => out.scalar *= crate::rational::qpow(p.c, *e as i32),
            }
        }
        out
    }

    /// Equality after canonicalization.
    pub fn equivalent(&self, o: &LProduct) -> bool {
        self.canonicalize() == o.canonicalize()
    }

    /// Number of atoms counted with multiplicity.
    pub fn atom_count(&self) -> i64 {
        self.atoms.values().map(|e| e.abs()).sum()
    }

    /// Number of polynomial factors counted with multiplicity.
    pub fn poly_count(&self) -> i64 {
        self.poly.values().map(|e| e.abs()).sum()
    }
}

impl fmt::Display for LProduct {
    /// Renders as a fraction of atoms and parenthesized affine factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = Vec::new();
        let mut den = Vec::new();
        if !self.scalar.is_one() {
            num.push(fmt_q(&self.scalar));
        }
        for (p, e) in &self.poly {
            let t = power_text(format!("({p})"), e.abs());
            if *e > 0 {
                num.push(t)
            } else {
                den.push(t)
            }
        }
        for (a, e) in &self.atoms {
            let t = power_text(a.to_string(), e.abs());
            if *e > 0 {
                num.push(t)
            } else {
                den.push(t)
            }
        }
        let n = if num.is_empty() { "1".to_string() } else { num.join("·") };
        match den.len() {
            0 => write!(f, "{n}"),
            1 => write!(f, "{n}/{}", den[0]),
            _ => write!(f, "{n}/({})", den.join("·")),
        }
    }
}

/// Vanishing order (poles negative) and leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentData {
    pub order: i64,
    pub leading: SymbolicConstant,
}

/// Local behaviour of one factor: order and leading coefficient in its own direction.
fn factor_data(
    arg: &Affine,
    point: &Point,
    kind: FactorKind,
) -> Result<(Option<[Q; NVARS]>, i64, SymbolicConstant)> {
    let t0 = arg.eval(point);
    let dir = arg.direction();
    let c = arg.leading_coeff().unwrap_or_else(Q::one);
    match kind {
        FactorKind::Poly => {
            if t0.is_zero() {
                if dir.is_none() {
                    return Err(Error::Degenerate("a constant factor vanishes identically".into()));
                }
                Ok((dir, 1, SymbolicConstant::scalar(c)))
            } else {
                Ok((dir, 0, SymbolicConstant::scalar(t0)))
            }
        }
        FactorKind::Zeta(field) => {
            if t0 == qi(1) || t0.is_zero() {
                if dir.is_none() {
                    return Err(Error::Degenerate(format!("ζ_{field} evaluated at its pole {}", fmt_q(&t0))));
                }
                let sign = if t0.is_zero() { -Q::one() } else { Q::one() };
                Ok((dir, -1, SymbolicConstant::scalar(sign / c).mul(&SymbolicConstant::residue(field))))
            } else {
                Ok((dir, 0, SymbolicConstant::zeta(field, t0)))
            }
        }
        FactorKind::L(field, chr) => Ok((dir, 0, SymbolicConstant::gen(Generator::L { field, arg: t0, chr }))),
    }
}

#[derive(Clone, Copy)]
enum FactorKind {
    Poly,
    Zeta(FieldLabel),
    L(FieldLabel, LChar),
}

/// Order and leading coefficient of a product approaching `point`.
///
/// Factors are grouped by the direction of their linear part. A single direction
/// gives a one-variable Laurent expansion in the normalized local parameter. Several
/// directions are accepted only when each group has order zero, in which case the
/// iterated limits agree and the leading coefficients multiply.
pub fn order_and_leading_at(p: &LProduct, point: &Point) -> Result<LaurentData> {
    let mut groups: BTreeMap<Option<[Q; NVARS]>, (i64, SymbolicConstant)> = BTreeMap::new();
    let mut acc = |dir, ord: i64, lead: SymbolicConstant, e: i64| {
        let g = groups.entry(dir).or_insert((0, SymbolicConstant::one()));
        g.0 += ord * e;
        g.1 = g.1.mul(&lead.pow(e));
    };
    for (a, e) in &p.atoms {
        let kind = match a.chr {
            None => FactorKind::Zeta(a.field),
            Some(c) => FactorKind::L(a.field, c),
        };
        let (dir, ord, lead) = factor_data(&a.arg, point, kind)?;
        acc(dir, ord, lead, *e);
    }
    for (poly, e) in &p.poly {
        let (dir, ord, lead) = factor_data(poly, point, FactorKind::Poly)?;
        acc(dir, ord, lead, *e);
    }
    let moving: Vec<_> = groups.iter().filter(|(d, _)| d.is_some()).collect();
    if moving.len() > 1 && moving.iter().any(|(_, (o, _))| *o != 0) {
        let detail: Vec<String> = moving.iter().map(|(_, (o, _))| o.to_string()).collect();
        return Err(Error::NonFactoring(format!(
            "{} independent directions with orders [{}]",
            moving.len(),
            detail.join(", ")
        )));
    }
    let mut order = 0;
    let mut leading = SymbolicConstant::scalar(p.scalar);
    for (_, (o, l)) in groups {
        order += o;
        leading = leading.mul(&l);
    }
    Ok(LaurentData { order, leading: fe_canonicalize(&leading) })
}

/// Order and leading coefficient of a product in `s` at `s = s0`.
pub fn order_and_leading(p: &LProduct, s0: Q) -> Result<LaurentData> {
    let mut point = [Q::zero(); NVARS];
    point[crate::affine::S] = s0;
    order_and_leading_at(p, &point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::S;

    fn s_plus(b: Q) -> Affine {
        Affine::in_s(qi(1), b)
    }

    #[test]
    fn zeta_pole_times_linear_factor() {
        let mut p = LProduct::one();
        p.push_atom(LAtom::zeta(FieldLabel::F, Affine::var(S)), 1);
        p.push_poly(s_plus(qi(-1)), 1);
        let d = order_and_leading(&p, qi(1)).unwrap();
        assert_eq!(d.order, 0);
        assert_eq!(d.leading.to_string(), "R_F");
    }

    #[test]
    fn pole_at_zero_against_pole_at_one() {
        let mut p = LProduct::one();
        p.push_atom(LAtom::zeta(FieldLabel::F, s_plus(q(-1, 2))), 1);
        p.push_atom(LAtom::zeta(FieldLabel::F, s_plus(q(1, 2))), -1);
        let d = order_and_leading(&p, q(1, 2)).unwrap();
        assert_eq!(d.order, 0);
        assert_eq!(d.leading.to_string(), "-1");
    }

    #[test]
    fn generators_render_in_canonical_order() {
        let c = SymbolicConstant::scalar(qi(384))
            .mul(&SymbolicConstant::residue(FieldLabel::K).pow(2))
            .mul(&SymbolicConstant::zeta(FieldLabel::F, qi(2)).pow(2))
            .mul(&SymbolicConstant::residue(FieldLabel::F).pow(3))
            .mul(&SymbolicConstant::zeta(FieldLabel::K, qi(2)))
            .mul(&SymbolicConstant::zeta(FieldLabel::F, qi(3)));
        assert_eq!(c.to_string(), "2^7·3·ζ_F(2)^2·ζ_F(3)·ζ_K(2)·R_F^3·R_K^2");
        let r = SymbolicConstant::residue(FieldLabel::F)
            .div(&SymbolicConstant::scalar(qi(2)).mul(&SymbolicConstant::zeta(FieldLabel::F, qi(3))));
        assert_eq!(r.to_string(), "R_F/(2·ζ_F(3))");
    }

    #[test]
    fn constants_round_trip_through_json() {
        let c = SymbolicConstant::scalar(q(-3, 2))
            .mul(&SymbolicConstant::zeta(FieldLabel::E, qi(2)))
            .mul(&SymbolicConstant::residue(FieldLabel::F).pow(-1));
        let s = serde_json::to_string(&c).unwrap();
        let back: SymbolicConstant = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn two_independent_poles_do_not_factor() {
        let mut p = LProduct::one();
        p.push_atom(LAtom::zeta(FieldLabel::F, Affine::var(3)), 1);
        p.push_atom(LAtom::zeta(FieldLabel::F, Affine::var(4)), 1);
        let mut pt = [Q::zero(); NVARS];
        pt[3] = qi(1);
        pt[4] = qi(1);
        assert!(matches!(order_and_leading_at(&p, &pt), Err(Error::NonFactoring(_))));
    }
}
