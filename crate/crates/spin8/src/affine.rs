//! Affine forms `a·s + b` (and their multi-parameter analogues) with exact coefficients.
//!
//! Variable 0 is the Eisenstein parameter `s`; variables 1 to 4 are the
//! coordinate parameters `s1..s4` used along weight paths.

use crate::rational::{fmt_q, qi, Q};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of variables an affine form may depend on.
pub const NVARS: usize = 5;

/// Display names of the variables.
pub const VAR_NAMES: [&str; NVARS] = ["s", "s1", "s2", "s3", "s4"];

/// Index of the Eisenstein parameter `s`.
pub const S: usize = 0;

/// An affine form `Σ lin[i]·x_i + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Affine {
    pub lin: [Q; NVARS],
    pub c: Q,
}

/// A point of evaluation: a value for every variable the forms use.
pub type Point = [Q; NVARS];

impl Affine {
    /// The constant form `c`.
    pub fn constant(c: Q) -> Self {
        Affine { lin: [Q::zero(); NVARS], c }
    }

    /// The form `x_var`.
    pub fn var(var: usize) -> Self {
        let mut a = Affine::constant(Q::zero());
        a.lin[var] = Q::one();
        a
    }

    /// The form `a·s + b` in the Eisenstein parameter.
    pub fn in_s(a: Q, b: Q) -> Self {
        let mut f = Affine::constant(b);
        f.lin[S] = a;
        f
    }

    /// The zero form.
    pub fn zero() -> Self {
        Affine::constant(Q::zero())
    }

    /// True when no variable appears.
    pub fn is_constant(&self) -> bool {
        self.lin.iter().all(|x| x.is_zero())
    }

    /// Coefficient of `s`.
    pub fn s_coeff(&self) -> Q {
        self.lin[S]
    }

    /// Evaluates at a full point.
    pub fn eval(&self, p: &Point) -> Q {
        self.lin.iter().zip(p.iter()).fold(self.c, |acc, (a, x)| acc + a * x)
    }

    /// Evaluates a form that depends on `s` only.
    pub fn eval_s(&self, s0: Q) -> Q {
        let mut p = [Q::zero(); NVARS];
        p[S] = s0;
        self.eval(&p)
    }

    /// Substitutes `x_var = value`.
    pub fn subst(&self, var: usize, value: Q) -> Self {
        let mut f = *self;
        f.c += f.lin[var] * value;
        f.lin[var] = Q::zero();
        f
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, k: Q) -> Self {
        let mut f = *self;
        for x in f.lin.iter_mut() {
            *x *= k;
        }
        f.c *= k;
        f
    }

    /// Variables with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..NVARS).filter(|&i| !self.lin[i].is_zero()).collect()
    }

    /// First nonzero linear coefficient, if any.
    pub fn leading_coeff(&self) -> Option<Q> {
        self.lin.iter().copied().find(|x| !x.is_zero())
    }

    /// The linear part divided by its first nonzero coefficient.
    ///
    /// Two forms share a direction exactly when their normalized linear parts agree.
    pub fn direction(&self) -> Option<[Q; NVARS]> {
        let lead = self.leading_coeff()?;
        let mut d = self.lin;
        for x in d.iter_mut() {
            *x /= lead;
        }
        Some(d)
    }

    /// Sign used to place a power in the numerator or denominator of a rendered fraction.
    ///
    /// The `s` coefficient decides first and the constant breaks ties.
    pub fn is_positive_like(&self) -> bool {
        match self.leading_coeff() {
            Some(a) => a.is_positive(),
            None => self.c.is_positive(),
        }
    }
}

impl Add for Affine {
    type Output = Affine;
    fn add(self, o: Affine) -> Affine {
        let mut f = self;
        for i in 0..NVARS {
            f.lin[i] += o.lin[i];
        }
        f.c += o.c;
        f
    }
}

impl Sub for Affine {
    type Output = Affine;
    fn sub(self, o: Affine) -> Affine {
        self + (-o)
    }
}

impl Neg for Affine {
    type Output = Affine;
    fn neg(self) -> Affine {
        self.scale(-Q::one())
    }
}

impl Add<Q> for Affine {
    type Output = Affine;
    fn add(self, k: Q) -> Affine {
        let mut f = self;
        f.c += k;
        f
    }
}

impl Mul<Q> for Affine {
    type Output = Affine;
    fn mul(self, k: Q) -> Affine {
        self.scale(k)
    }
}

impl From<Q> for Affine {
    fn from(c: Q) -> Self {
        Affine::constant(c)
    }
}

impl From<i64> for Affine {
    fn from(c: i64) -> Self {
        Affine::constant(qi(c))
    }
}

impl fmt::Display for Affine {
    /// Renders as e.g. `s+1/2`, `2s-2`, `s1+2s2+s3+s4+1`, `-s+3`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, a) in self.lin.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            let sign = if a.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
            let coef = if mag.is_one() { String::new() } else { fmt_q(&mag) };
            out.push_str(&format!("{sign}{coef}{}", VAR_NAMES[i]));
        }
        if !self.c.is_zero() || out.is_empty() {
            let sign = if self.c.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
            out.push_str(&format!("{sign}{}", fmt_q(&self.c.abs())));
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn display_matches_conventional_notation() {
        assert_eq!(Affine::in_s(qi(1), q(1, 2)).to_string(), "s+1/2");
        assert_eq!(Affine::in_s(qi(2), qi(-2)).to_string(), "2s-2");
        assert_eq!(Affine::in_s(qi(-1), qi(3)).to_string(), "-s+3");
        assert_eq!(Affine::zero().to_string(), "0");
        let f = Affine::var(1) + Affine::var(2).scale(qi(2)) + qi(1);
        assert_eq!(f.to_string(), "s1+2s2+1");
    }

    #[test]
    fn substitution_and_evaluation_agree() {
        let f = Affine::var(3) + Affine::var(4) - Affine::constant(qi(2));
        let g = f.subst(3, qi(1));
        assert_eq!(g.to_string(), "s4-1");
        let mut p = [Q::zero(); NVARS];
        p[3] = qi(1);
        p[4] = qi(1);
        assert_eq!(f.eval(&p), qi(0));
    }

    #[test]
    fn directions_ignore_scaling() {
        let a = Affine::in_s(qi(2), qi(-2));
        let b = Affine::in_s(qi(1), qi(5));
        assert_eq!(a.direction(), b.direction());
        assert!(Affine::constant(qi(3)).direction().is_none());
    }
}
