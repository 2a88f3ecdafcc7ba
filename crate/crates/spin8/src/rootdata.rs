//! The absolute D4 root datum, its three Galois foldings, and Weyl-word machinery.
//!
//! Weights are written in fundamental-weight coordinates and roots in simple-root
//! coordinates. Node 2 is the central node. A relative letter acts through the
//! product of the absolute simple reflections in its Galois orbit.

use crate::affine::Affine;
use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// An integer 4-vector (a weight or a root).
pub type Vec4 = [i64; 4];

/// A 4×4 integer matrix acting on column vectors.
pub type Mat4 = [[i64; 4]; 4];

/// The Cartan matrix of D4 with node 2 (index 1) central.
pub const CARTAN: Mat4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]];

/// The identity matrix.
pub const IDENTITY: Mat4 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut m = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    m
}

fn mat_vec(a: &Mat4, v: &Vec4) -> Vec4 {
    let mut out = [0; 4];
    for (i, row) in a.iter().enumerate() {
        out[i] = row.iter().zip(v.iter()).map(|(x, y)| x * y).sum();
    }
    out
}

/// Pairing of a weight (fundamental-weight coordinates) with the coroot of a root
/// given in simple-root coordinates. D4 is simply laced, so the coroot has the same
/// coordinates in the simple coroots.
pub fn pair(weight: &Vec4, root_simple: &Vec4) -> i64 {
    weight.iter().zip(root_simple.iter()).map(|(a, c)| a * c).sum()
}

/// Pairing of an affine weight with a coroot.
pub fn pair_affine(weight: &[Affine; 4], root_simple: &Vec4) -> Affine {
    let mut acc = Affine::zero();
    for j in 0..4 {
        acc = acc + weight[j].scale(crate::rational::qi(root_simple[j]));
    }
    acc
}

/// Fundamental-weight coordinates of a root given in simple-root coordinates.
pub fn root_weight(simple: &Vec4) -> Vec4 {
    let mut w = [0; 4];
    for (j, c) in simple.iter().enumerate() {
        for k in 0..4 {
            w[k] += c * CARTAN[j][k];
        }
    }
    w
}

/// An absolute positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsRoot {
    /// Coordinates in the simple roots.
    pub simple: Vec4,
    /// Coordinates in the fundamental weights.
    pub weight: Vec4,
}

/// The absolute root datum of type D4.
#[derive(Debug, Clone)]
pub struct RootDatumD4 {
    /// Simple roots in fundamental-weight coordinates (rows of the Cartan matrix).
    pub simple_roots: [Vec4; 4],
    /// The Cartan matrix.
    pub cartan: Mat4,
    /// Positive roots sorted by height, then lexicographically.
    pub positive_roots: Vec<AbsRoot>,
}

impl RootDatumD4 {
    /// Builds the datum by closing the simple roots under the simply-laced string rule.
    pub fn new() -> Self {
        let mut simple: Vec<Vec4> = (0..4)
            .map(|i| {
                let mut v = [0; 4];
                v[i] = 1;
                v
            })
            .collect();
        let mut k = 0;
        while k < simple.len() {
            let beta = simple[k];
            for i in 0..4 {
                let mut e = [0; 4];
                e[i] = 1;
                if beta != e && pair(&root_weight(&beta), &e) == -1 {
                    let mut next = beta;
                    next[i] += 1;
                    if !simple.contains(&next) {
                        simple.push(next);
                    }
                }
            }
            k += 1;
        }
        simple.sort_by_key(|r| (r.iter().sum::<i64>(), *r));
        RootDatumD4 {
            simple_roots: CARTAN,
            cartan: CARTAN,
            positive_roots: simple
                .into_iter()
                .map(|s| AbsRoot { simple: s, weight: root_weight(&s) })
                .collect(),
        }
    }

    /// Coroot of the `idx`-th positive root in simple-coroot coordinates.
    pub fn coroot(&self, idx: usize) -> Vec4 {
        self.positive_roots[idx].simple
    }

    /// Index of the positive root with the given simple coordinates.
    pub fn index_of(&self, simple: &Vec4) -> Option<usize> {
        self.positive_roots.iter().position(|r| &r.simple == simple)
    }
}

impl Default for RootDatumD4 {
    fn default() -> Self {
        Self::new()
    }
}

/// The three isomorphism classes of étale cubic algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EType {
    /// `F×F×F`.
    Split,
    /// `F×K` with `K` a quadratic field.
    FxK,
    /// A Galois cubic field.
    Cubic,
}

impl EType {
    /// All three algebras.
    pub const ALL: [EType; 3] = [EType::Split, EType::FxK, EType::Cubic];

    /// Galois permutation of the absolute nodes (0-based), fixing the central node.
    pub fn galois_perm(self) -> [usize; 4] {
        match self {
            EType::Split => [0, 1, 2, 3],
            EType::FxK => [0, 1, 3, 2],
            EType::Cubic => [2, 1, 3, 0],
        }
    }

    /// Order of the Galois permutation.
    pub fn perm_order(self) -> usize {
        match self {
            EType::Split => 1,
            EType::FxK => 2,
            EType::Cubic => 3,
        }
    }

    /// Relative letter to absolute nodes (0-based).
    pub fn letter_map(self) -> Vec<Vec<usize>> {
        match self {
            EType::Split => vec![vec![0], vec![1], vec![2], vec![3]],
            EType::FxK => vec![vec![0], vec![1], vec![2, 3]],
            EType::Cubic => vec![vec![0, 2, 3], vec![1]],
        }
    }

    /// Relative rank.
    pub fn rank(self) -> usize {
        self.letter_map().len()
    }

    /// Short machine name.
    pub fn name(self) -> &'static str {
        match self {
            EType::Split => "split",
            EType::FxK => "fxk",
            EType::Cubic => "cubic",
        }
    }

    /// The relative letters of the Heisenberg Levi.
    pub fn heisenberg_levi(self) -> Vec<u8> {
        match self {
            EType::Split => vec![1, 3, 4],
            EType::FxK => vec![1, 3],
            EType::Cubic => vec![1],
        }
    }
}

impl fmt::Display for EType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "split" | "fxfxf" | "f×f×f" => Ok(EType::Split),
            "fxk" | "f×k" => Ok(EType::FxK),
            "cubic" | "field" | "e" => Ok(EType::Cubic),
            _ => Err(Error::UnknownName { kind: "algebra", value: s.to_string() }),
        }
    }
}

impl Serialize for EType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for EType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Field of definition of a relative root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldLabel {
    F,
    K,
    E,
}

impl FieldLabel {
    /// Field label for a Galois orbit of the given size.
    pub fn from_orbit_size(n: usize) -> Self {
        match n {
            1 => FieldLabel::F,
            2 => FieldLabel::K,
            _ => FieldLabel::E,
        }
    }

    /// Subscript used in rendered formulas.
    pub fn name(self) -> &'static str {
        match self {
            FieldLabel::F => "F",
            FieldLabel::K => "K",
            FieldLabel::E => "E",
        }
    }
}

impl fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A relative root: a Galois orbit of absolute positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelRoot {
    /// Indices into the absolute positive roots.
    pub members: Vec<usize>,
    /// Index of the chosen representative (the first member).
    pub rep: usize,
    /// Field of definition.
    pub field: FieldLabel,
    /// Coefficients on the relative simple roots.
    pub rel_coords: Vec<i64>,
}

impl RelRoot {
    /// Renders the relative root as e.g. `α1+α2` or `α2+2α3`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        for (j, c) in self.rel_coords.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("α{}", j + 1)),
                c => parts.push(format!("{c}α{}", j + 1)),
            }
        }
        parts.join("+")
    }
}

/// An element of a relative Weyl group.
#[derive(Debug, Clone)]
pub struct WeylElement {
    /// Relative letters, 1-based.
    pub word: Vec<u8>,
    /// Action `v ↦ w·v` on fundamental-weight coordinates.
    pub matrix: Mat4,
}

impl WeylElement {
    /// Renders the word as `w2132`, or `1` for the identity word.
    pub fn name(&self) -> String {
        word_name(&self.word)
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, o: &Self) -> bool {
        self.matrix == o.matrix
    }
}

impl Eq for WeylElement {}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

/// Renders a letter sequence as `w…` or `1`.
pub fn word_name(word: &[u8]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        let mut s = String::from("w");
        for l in word {
            s.push_str(&l.to_string());
        }
        s
    }
}

/// Parses `w2132`, `2132`, `1` (identity) or the empty string into letters.
pub fn parse_word(s: &str) -> Result<Vec<u8>> {
    let t = s.trim();
    let t = t.strip_prefix('w').unwrap_or(t);
    if t.is_empty() || (s.trim() == "1") {
        return Ok(Vec::new());
    }
    t.chars()
        .map(|c| {
            c.to_digit(10)
                .filter(|d| *d >= 1)
                .map(|d| d as u8)
                .ok_or_else(|| Error::UnknownName { kind: "word", value: s.to_string() })
        })
        .collect()
}

/// The folded datum of one étale cubic algebra, with its full Weyl group.
#[derive(Debug)]
pub struct RelativeDatum {
    pub etype: EType,
    pub absolute: RootDatumD4,
    /// Relative simple roots in letter order.
    pub relative_simple: Vec<RelRoot>,
    /// Relative positive roots.
    pub relative_positive: Vec<RelRoot>,
    /// Relative letter to absolute nodes (0-based).
    pub letter_map: Vec<Vec<usize>>,
    letter_mats: Vec<Mat4>,
    /// Group elements with their shortest lexicographically smallest words, in
    /// breadth-first order.
    elements: Vec<WeylElement>,
    index: HashMap<Mat4, usize>,
    root_lookup: HashMap<Vec4, (Vec4, bool)>,
}

fn abs_reflection(i: usize) -> Mat4 {
    let mut m = IDENTITY;
    for (k, row) in m.iter_mut().enumerate() {
        row[i] -= CARTAN[i][k];
    }
    m
}

impl RelativeDatum {
    /// Builds the folded datum for an algebra.
    pub fn build(etype: EType) -> Self {
        let absolute = RootDatumD4::new();
        let perm = etype.galois_perm();
        let letter_map = etype.letter_map();
        let act = |r: &Vec4| {
            let mut out = [0; 4];
            for i in 0..4 {
                out[perm[i]] = r[i];
            }
            out
        };
        let mut seen = vec![false; absolute.positive_roots.len()];
        let mut orbits = Vec::new();
        for start in 0..absolute.positive_roots.len() {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut cur = absolute.positive_roots[start].simple;
            loop {
                cur = act(&cur);
                let idx = absolute.index_of(&cur).expect("Galois image of a root is a root");
                if seen[idx] {
                    break;
                }
                seen[idx] = true;
                members.push(idx);
            }
            members.sort();
            let rep_simple = absolute.positive_roots[members[0]].simple;
            let rel_coords = letter_map
                .iter()
                .map(|nodes| nodes.iter().map(|&n| rep_simple[n]).sum())
                .collect();
            orbits.push(RelRoot {
                rep: members[0],
                field: FieldLabel::from_orbit_size(members.len()),
                members,
                rel_coords,
            });
        }
        let relative_simple = letter_map
            .iter()
            .map(|nodes| {
                let mut e = [0; 4];
                e[nodes[0]] = 1;
                let idx = absolute.index_of(&e).unwrap();
                orbits.iter().find(|o| o.members.contains(&idx)).unwrap().clone()
            })
            .collect();
        let letter_mats: Vec<Mat4> = letter_map
            .iter()
            .map(|nodes| nodes.iter().fold(IDENTITY, |m, &n| mat_mul(&m, &abs_reflection(n))))
            .collect();

        let mut root_lookup = HashMap::new();
        for r in &absolute.positive_roots {
            root_lookup.insert(r.weight, (r.simple, true));
            root_lookup.insert(r.weight.map(|x| -x), (r.simple.map(|x| -x), false));
        }

        let mut elements = Vec::new();
        let mut index = HashMap::new();
        let mut queue = VecDeque::new();
        queue.push_back(WeylElement { word: Vec::new(), matrix: IDENTITY });
        while let Some(w) = queue.pop_front() {
            if index.contains_key(&w.matrix) {
                continue;
            }
            index.insert(w.matrix, elements.len());
            for (l, m) in letter_mats.iter().enumerate() {
                let next = mat_mul(&w.matrix, m);
                if !index.contains_key(&next) {
                    let mut word = w.word.clone();
                    word.push(l as u8 + 1);
                    queue.push_back(WeylElement { word, matrix: next });
                }
            }
            elements.push(w);
        }

        RelativeDatum {
            etype,
            absolute,
            relative_simple,
            relative_positive: orbits,
            letter_map,
            letter_mats,
            elements,
            index,
            root_lookup,
        }
    }

    /// The cached datum for an algebra.
    pub fn get(etype: EType) -> &'static RelativeDatum {
        static CACHE: [OnceLock<RelativeDatum>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let slot = match etype {
            EType::Split => &CACHE[0],
            EType::FxK => &CACHE[1],
            EType::Cubic => &CACHE[2],
        };
        slot.get_or_init(|| RelativeDatum::build(etype))
    }

    /// Relative rank.
    pub fn rank(&self) -> usize {
        self.letter_map.len()
    }

    /// Order of the relative Weyl group.
    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    /// All group elements with canonical words.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Matrix of a single relative letter.
    pub fn letter_matrix(&self, letter: u8) -> Result<Mat4> {
        self.check_letter(letter)?;
        Ok(self.letter_mats[letter as usize - 1])
    }

    fn check_letter(&self, letter: u8) -> Result<()> {
        if letter == 0 || letter as usize > self.rank() {
            Err(Error::LetterOutOfRange { letter, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    /// The element with the given (not necessarily reduced) word.
    pub fn element(&self, word: &[u8]) -> Result<WeylElement> {
        let mut m = IDENTITY;
        for &l in word {
            m = mat_mul(&m, &self.letter_matrix(l)?);
        }
        Ok(WeylElement { word: word.to_vec(), matrix: m })
    }

    /// Parses a word string such as `w2132` into an element.
    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        self.element(&parse_word(s)?)
    }

    /// Shortest, lexicographically smallest word for the same element.
    pub fn reduce(&self, w: &WeylElement) -> WeylElement {
        self.elements[self.index[&w.matrix]].clone()
    }

    /// True when the two words define the same element.
    pub fn words_equal(&self, a: &WeylElement, b: &WeylElement) -> bool {
        a.matrix == b.matrix
    }

    /// Length of the element.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.elements[self.index[&w.matrix]].word.len()
    }

    /// Product `a·b`.
    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        WeylElement { word, matrix: mat_mul(&a.matrix, &b.matrix) }
    }

    /// Inverse element (reversed word).
    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let word: Vec<u8> = w.word.iter().rev().copied().collect();
        self.element(&word).expect("letters already validated")
    }

    /// `w·v` on an integer weight.
    pub fn act_vec(&self, w: &WeylElement, v: &Vec4) -> Vec4 {
        mat_vec(&w.matrix, v)
    }

    /// `w⁻¹·v` on an integer weight.
    pub fn act_inv_vec(&self, w: &WeylElement, v: &Vec4) -> Vec4 {
        mat_vec(&self.inverse(w).matrix, v)
    }

    /// `w·λ` on an affine weight.
    pub fn act(&self, w: &WeylElement, lambda: &[Affine; 4]) -> [Affine; 4] {
        apply_mat(&w.matrix, lambda)
    }

    /// `w⁻¹·λ` on an affine weight.
    pub fn act_inv(&self, w: &WeylElement, lambda: &[Affine; 4]) -> [Affine; 4] {
        apply_mat(&self.inverse(w).matrix, lambda)
    }

    /// True when the root with the given weight coordinates is positive.
    pub fn is_positive_weight(&self, weight: &Vec4) -> bool {
        self.root_lookup.get(weight).expect("vector is a root").1
    }

    /// Simple-root coordinates of the root with the given weight coordinates.
    pub fn root_from_weight(&self, weight: &Vec4) -> Vec4 {
        self.root_lookup.get(weight).expect("vector is a root").0
    }

    /// Indices of relative positive roots `α` with `w⁻¹α < 0`.
    pub fn inversion_indices(&self, w: &WeylElement) -> Vec<usize> {
        let inv = self.inverse(w);
        self.relative_positive
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                let wt = self.absolute.positive_roots[r.rep].weight;
                !self.is_positive_weight(&mat_vec(&inv.matrix, &wt))
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// The inversion set `{α > 0 : w⁻¹α < 0}` with field labels.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<(RelRoot, FieldLabel)> {
        self.inversion_indices(w)
            .into_iter()
            .map(|i| (self.relative_positive[i].clone(), self.relative_positive[i].field))
            .collect()
    }

    /// True when `w⁻¹α_i > 0` for the relative simple root of `letter`.
    fn keeps_simple_positive(&self, w: &WeylElement, letter: u8) -> bool {
        let node = self.letter_map[letter as usize - 1][0];
        let wt = CARTAN[node];
        self.is_positive_weight(&self.act_inv_vec(w, &wt))
    }

    /// Minimal-length representatives of the cosets `W_Ψ·w`, sorted by length then word.
    pub fn coset_reps(&self, psi: &[u8]) -> Result<Vec<WeylElement>> {
        for &l in psi {
            self.check_letter(l)?;
        }
        let mut reps: Vec<WeylElement> = self
            .elements
            .iter()
            .filter(|w| psi.iter().all(|&l| self.keeps_simple_positive(w, l)))
            .cloned()
            .collect();
        reps.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
        Ok(reps)
    }

    /// All elements of the subgroup generated by the given letters.
    pub fn subgroup(&self, letters: &[u8]) -> Result<Vec<WeylElement>> {
        for &l in letters {
            self.check_letter(l)?;
        }
        let mut out: Vec<WeylElement> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        queue.push_back(WeylElement { word: Vec::new(), matrix: IDENTITY });
        while let Some(w) = queue.pop_front() {
            if !seen.insert(w.matrix) {
                continue;
            }
            for &l in letters {
                let next = self.mul(&w, &self.element(&[l])?);
                if !seen.contains(&next.matrix) {
                    queue.push_back(next);
                }
            }
            out.push(w);
        }
        Ok(out)
    }

    /// The longest element.
    pub fn longest(&self) -> WeylElement {
        self.elements.last().expect("nonempty group").clone()
    }
}

fn apply_mat(m: &Mat4, v: &[Affine; 4]) -> [Affine; 4] {
    let mut out = [Affine::zero(); 4];
    for i in 0..4 {
        for j in 0..4 {
            if m[i][j] != 0 {
                out[i] = out[i] + v[j].scale(crate::rational::qi(m[i][j]));
            }
        }
    }
    out
}

/// Convenience: the cached datum for an algebra.
pub fn build_relative(etype: EType) -> &'static RelativeDatum {
    RelativeDatum::get(etype)
}
