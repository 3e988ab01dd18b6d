//! Sparse multivariate polynomials with exact coefficients.
//!
//! Variables are named and kept sorted; monomials are ordered graded
//! lexicographically by variable index. Terms with zero coefficient are never
//! stored, so `==` is structural equality of canonical forms and the zero
//! polynomial has no terms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use crate::field::Field;
use crate::GaussianScalar;

/// Exponent vector, ordered graded-lex (total degree first, then lex).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial over `F`.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(F::int(n))
    }

    /// The variable `name`, as a degree-1 polynomial.
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), F::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Variable names, sorted; the i-th name corresponds to exponent slot i.
    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Coefficient of the monomial given as `(name, exponent)` pairs.
    pub fn coefficient(&self, mono: &[(&str, u32)]) -> F {
        let mut exps = vec![0u32; self.vars.len()];
        for (name, e) in mono {
            match self.vars.iter().position(|v| v == name) {
                Some(k) => exps[k] = *e,
                None if *e == 0 => {}
                None => return F::zero(),
            }
        }
        self.terms
            .get(&Monomial(exps))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Evaluates at the given point, one value per variable (in `variables()` order).
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.vars.len(), "point arity");
        let mut acc = F::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[k].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Evaluates with named bindings; every variable of the polynomial must
    /// be bound.
    pub fn eval_named(&self, bindings: &[(&str, F)]) -> F {
        let point: Vec<F> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .iter()
                    .find(|(name, _)| name == v)
                    .map(|(_, val)| val.clone())
                    .unwrap_or_else(|| panic!("unbound variable {v:?}"))
            })
            .collect();
        self.eval(&point)
    }

    /// Drops variables that no term uses, keeping the form canonical.
    fn prune(vars: Vec<String>, terms: BTreeMap<Monomial, F>) -> Self {
        let used: Vec<usize> = (0..vars.len())
            .filter(|&k| terms.keys().any(|m| m.0[k] != 0))
            .collect();
        if used.len() == vars.len() {
            return MultiPoly { vars, terms };
        }
        let vars: Vec<String> = used.iter().map(|&k| vars[k].clone()).collect();
        let terms = terms
            .into_iter()
            .map(|(m, c)| (Monomial(used.iter().map(|&k| m.0[k]).collect()), c))
            .collect();
        MultiPoly { vars, terms }
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, F>, mono: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Rewrites both operands over the sorted union of their variable sets.
    fn unify(a: &Self, b: &Self) -> (Vec<String>, BTreeMap<Monomial, F>, BTreeMap<Monomial, F>) {
        let mut vars: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        let remap = |p: &Self| -> BTreeMap<Monomial, F> {
            let slots: Vec<usize> = p
                .vars
                .iter()
                .map(|v| vars.binary_search(v).expect("variable in union"))
                .collect();
            p.terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = vec![0u32; vars.len()];
                    for (k, &e) in m.0.iter().enumerate() {
                        exps[slots[k]] = e;
                    }
                    (Monomial(exps), c.clone())
                })
                .collect()
        };
        let ta = remap(a);
        let tb = remap(b);
        (vars, ta, tb)
    }

    fn binop(a: &Self, b: &Self, sub: bool) -> Self {
        let (vars, ta, tb) = Self::unify(a, b);
        let mut terms = ta;
        for (m, c) in tb {
            Self::insert_term(&mut terms, m, if sub { -c } else { c });
        }
        Self::prune(vars, terms)
    }

    /// Iterates terms in display order: total degree ascending, and within a
    /// degree the variable earliest in the ordering first.
    fn display_order(&self) -> Vec<(&Monomial, &F)> {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|(ma, _), (mb, _)| {
            ma.degree()
                .cmp(&mb.degree())
                .then_with(|| mb.0.cmp(&ma.0))
        });
        items
    }

    fn mono_str(&self, mono: &Monomial) -> String {
        let mut parts = Vec::new();
        for (k, &e) in mono.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[k].clone()),
                _ => parts.push(format!("{}^{}", self.vars[k], e)),
            }
        }
        parts.join("*")
    }
}

impl<F: Field> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: Self) -> MultiPoly<F> {
        MultiPoly::binop(self, rhs, false)
    }
}

impl<F: Field> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: Self) -> MultiPoly<F> {
        MultiPoly::binop(self, rhs, true)
    }
}

impl<F: Field> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: Self) -> MultiPoly<F> {
        let (vars, ta, tb) = MultiPoly::unify(self, rhs);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &ta {
            for (mb, cb) in &tb {
                MultiPoly::insert_term(&mut terms, ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        MultiPoly::prune(vars, terms)
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// Cofactor expansion of a symbolic 3x3 determinant.
pub fn symbolic_det3<F: Field>(m: &[[MultiPoly<F>; 3]; 3]) -> MultiPoly<F> {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

impl fmt::Display for MultiPoly<GaussianScalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = GaussianScalar::from_int(1);
        for (idx, (mono, c)) in self.display_order().into_iter().enumerate() {
            let (neg, mag) = if c.is_negative_real() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coef = if mag.is_real() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if mono.is_constant() {
                write!(f, "{coef}")?;
            } else if mag == one {
                write!(f, "{}", self.mono_str(mono))?;
            } else {
                write!(f, "{}*{}", coef, self.mono_str(mono))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Poly = MultiPoly<GaussianScalar>;

    fn v(name: &str) -> Poly {
        Poly::var(name)
    }

    #[test]
    fn add_cancels() {
        let p = &(&v("x") + &v("y")) + &-&v("x");
        assert_eq!(p, v("y"));
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&v("alpha") + &v("beta")) * &(&v("alpha") - &v("beta"));
        let rhs = &(&v("alpha") * &v("alpha")) - &(&v("beta") * &v("beta"));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn self_subtraction_is_zero() {
        let p = &(&v("x") * &v("y")) + &Poly::from_int(7);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn variable_unification_by_name() {
        let p = &v("b") + &v("a");
        assert_eq!(p.variables(), ["a".to_string(), "b".to_string()]);
        let q = &v("a") + &v("b");
        assert_eq!(p, q);
    }

    #[test]
    fn det3_of_identity() {
        let z = Poly::zero;
        let o = || Poly::from_int(1);
        let m = [
            [o(), z(), z()],
            [z(), o(), z()],
            [z(), z(), o()],
        ];
        assert_eq!(symbolic_det3(&m), Poly::from_int(1));
    }

    #[test]
    fn display_is_paper_shaped() {
        let a = v("alpha");
        let bg = &v("beta") * &v("gamma");
        let p = &(&Poly::from_int(1) - &(&a * &a).scale(&GaussianScalar::from_int(4)))
            - &bg.scale(&GaussianScalar::from_int(4));
        assert_eq!(p.to_string(), "1 - 4*alpha^2 - 4*beta*gamma");
        let q = &Poly::from_int(-2) + &(&a * &a).scale(&GaussianScalar::from_int(2));
        assert_eq!(q.to_string(), "-2 + 2*alpha^2");
        assert_eq!(Poly::zero().to_string(), "0");
        let c = Poly::constant(GaussianScalar::i());
        assert_eq!((&c * &v("x")).to_string(), "(1*i)*x");
    }

    #[test]
    fn eval_substitutes() {
        let p = &(&v("x") * &v("x")) + &v("y");
        let val = p.eval(&[GaussianScalar::from_int(3), GaussianScalar::from_int(-2)]);
        assert_eq!(val, GaussianScalar::from_int(7));
    }
}
