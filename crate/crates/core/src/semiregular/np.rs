//! The module `U(n) ⊗_{U(n-)} U(n-)*` for a splitting `n = n+ ⊕ n-` (of `n`
//! or of a subalgebra spanned by basis vectors) with
//! `n-` an ideal and `n+` a subalgebra, and the action of `n+` on it by
//! `a ⊗ f -> a x ⊗ f + a ⊗ [x, f]`, where `[x, f](u) = f([u, x])`.
//!
//! Vectors are kept in the normal form `Σ a+ ⊗ f` with `a+` a PBW monomial
//! of `U(n+)`; the order on `n` puts `n+` first so that any PBW monomial
//! splits as `a+ a-`, and `a+ a- ⊗ f = a+ ⊗ a- · f`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Check, Env, GradedLieAlgebra, UElt, Word};
use crate::cartan::Q;
use crate::error::{Error, Result};

/// `(U(n) word, dual label in U(n-))` pairs with coefficients.
pub type SVec = BTreeMap<(Word, Word), Q>;

fn add_s(t: &mut SVec, key: (Word, Word), c: Q) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(key.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&key);
    }
}

pub fn basis_vec(a: &[u16], f: &[u16]) -> SVec {
    SVec::from([((a.to_vec(), f.to_vec()), Q::one())])
}

pub struct NpModule<'a> {
    pub alg: &'a GradedLieAlgebra,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    /// `U(n)` with `n+` ordered first.
    pub n: Env<'a>,
    pub n_minus: Env<'a>,
}

impl<'a> NpModule<'a> {
    pub fn new(alg: &'a GradedLieAlgebra, plus: Vec<usize>, minus: Vec<usize>) -> Result<Self> {
        let mut all: Vec<usize> = plus.iter().chain(&minus).copied().collect();
        all.sort();
        all.dedup();
        if all.len() != plus.len() + minus.len() || all.iter().any(|&i| !alg.in_n(i)) {
            return Err(Error::InvalidAlgebra("n+ and n- must be disjoint sets of basis vectors of n".into()));
        }
        for &x in &all {
            for &y in &minus {
                if alg.bracket(x, y).iter().any(|(k, _)| !minus.contains(k)) {
                    return Err(Error::InvalidAlgebra(format!(
                        "n- is not an ideal: [{}, {}]",
                        alg.labels[x], alg.labels[y]
                    )));
                }
            }
        }
        for &x in &plus {
            for &y in &plus {
                if alg.bracket(x, y).iter().any(|(k, _)| !plus.contains(k)) {
                    return Err(Error::InvalidAlgebra(format!(
                        "n+ is not a subalgebra: [{}, {}]",
                        alg.labels[x], alg.labels[y]
                    )));
                }
            }
        }
        let order: Vec<usize> = plus.iter().chain(&minus).copied().collect();
        Ok(NpModule { alg, n: Env::new(alg, order), n_minus: Env::new(alg, minus.clone()), plus, minus })
    }

    fn is_minus(&self, i: u16) -> bool {
        self.minus.contains(&(i as usize))
    }

    /// Brings representatives `a ⊗ f` (any words `a` in `n`) to normal form.
    pub fn reduce(&self, t: &SVec) -> SVec {
        let mut out = SVec::new();
        for ((a, f), &c) in t {
            for (w, d) in self.n.straighten(a.clone(), c) {
                let cut = w.iter().position(|&i| self.is_minus(i)).unwrap_or(w.len());
                let mut func = UElt::from([(f.clone(), d)]);
                for &y in w[cut..].iter().rev() {
                    func = self.n_minus.coregular_elt(y as usize, &func);
                }
                for (g, e) in func {
                    add_s(&mut out, (w[..cut].to_vec(), g), e);
                }
            }
        }
        out
    }

    /// `[x, f_b]` for `x` in `n+`: the functional `u -> f_b([u, x])` on `U(n-)`.
    pub fn bracket_functional(&self, x: usize, b: &[u16]) -> UElt {
        let target = self.n_minus.degree(b) - self.alg.degrees[x];
        let mut out = UElt::new();
        for c in self.n_minus.monomials_of_degree(target) {
            let mc = self.n.word(&c);
            let comm = self.n.commutator(&mc, &self.n.gen(x));
            debug_assert!(comm.keys().all(|w| w.iter().all(|&i| self.is_minus(i))));
            let coeff = comm.get(b).copied().unwrap_or_else(Q::zero);
            super::add_into(&mut out, c, coeff);
        }
        out
    }

    /// Action of `x` in `n+` on a representative, then normal form.
    pub fn act_plus(&self, x: usize, t: &SVec) -> SVec {
        let mut rep = SVec::new();
        for ((a, f), &c) in t {
            add_s(&mut rep, ([a.clone(), vec![x as u16]].concat(), f.clone()), c);
            for (g, d) in self.bracket_functional(x, f) {
                add_s(&mut rep, (a.clone(), g), c * d);
            }
        }
        self.reduce(&rep)
    }

    /// Endomorphism `a ⊗ f -> a ⊗ y·f` for `y` in `n-`.
    pub fn act_minus(&self, y: usize, t: &SVec) -> SVec {
        let mut out = SVec::new();
        for ((a, f), &c) in t {
            for (g, d) in self.n_minus.coregular(y, f) {
                add_s(&mut out, (a.clone(), g), c * d);
            }
        }
        self.reduce(&out)
    }

    /// Well-definedness on `a y ⊗ f ~ a ⊗ y·f` and the commutator identity
    /// `[x, y]`-action, for `|deg a|, |deg f| <= bound`.
    pub fn check(&self, bound: i64) -> Check {
        let name = "np_action";
        let reps = self.n.monomials_up_to(bound);
        let funcs = self.n_minus.monomials_up_to(bound);
        for a in &reps {
            for f in &funcs {
                let s = basis_vec(a, f);
                for &x in &self.plus {
                    for &y in &self.minus {
                        let lhs = self.act_plus(x, &self.reduce(&basis_vec(&[a.clone(), vec![y as u16]].concat(), f)));
                        let moved = self.reduce(&SVec::from_iter(
                            self.n_minus.coregular(y, f).into_iter().map(|(g, d)| ((a.clone(), g), d)),
                        ));
                        let rhs = self.act_plus(x, &moved);
                        if lhs != rhs {
                            return Check::fail(
                                name,
                                format!(
                                    "not well defined at {} ⊗ {}",
                                    self.n.word_string(a),
                                    self.n_minus.word_string(f)
                                ),
                            );
                        }
                        let norm = self.reduce(&s);
                        let mut comm = self.act_plus(x, &self.act_minus(y, &norm));
                        for (k, v) in self.act_minus(y, &self.act_plus(x, &norm)) {
                            add_s(&mut comm, k, -v);
                        }
                        let mut expect = SVec::new();
                        for &(k, c) in self.alg.bracket(x, y) {
                            for (key, v) in self.act_minus(k, &norm) {
                                add_s(&mut expect, key, c * v);
                            }
                        }
                        if comm != expect {
                            return Check::fail(
                                name,
                                format!(
                                    "commutator identity fails for ({}, {})",
                                    self.alg.labels[x], self.alg.labels[y]
                                ),
                            );
                        }
                    }
                }
            }
        }
        Check::pass(name)
    }
}
