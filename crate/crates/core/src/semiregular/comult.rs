//! The comultiplication isomorphism between `X ⊗ U(n)` with the right
//! `n`-action on the second factor only and with the action through the
//! coproduct. `X` is `U(g)` with right multiplication.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Check, Env, GradedLieAlgebra, UElt, Word};
use crate::cartan::Q;

pub type Pair = BTreeMap<(Word, Word), Q>;

fn add_p(t: &mut Pair, key: (Word, Word), c: Q) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(key.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&key);
    }
}

pub fn basis_pair(x: &[u16], u: &[u16]) -> Pair {
    Pair::from([((x.to_vec(), u.to_vec()), Q::one())])
}

/// Coproduct of a PBW monomial: the split into complementary subwords.
pub fn coproduct(u: &[u16]) -> Vec<(Word, Word)> {
    let k = u.len();
    (0u32..1 << k)
        .map(|mask| {
            let left = (0..k).filter(|p| mask >> p & 1 == 1).map(|p| u[p]).collect();
            let right = (0..k).filter(|p| mask >> p & 1 == 0).map(|p| u[p]).collect();
            (left, right)
        })
        .collect()
}

pub struct Comult<'a> {
    pub g: Env<'a>,
    pub n: Env<'a>,
}

impl<'a> Comult<'a> {
    pub fn new(alg: &'a GradedLieAlgebra) -> Self {
        Comult { g: Env::of_g(alg), n: Env::of_n(alg) }
    }

    fn x_times(&self, x: &[u16], u: &UElt, c: Q) -> UElt {
        let mut out = UElt::new();
        for (w, &d) in u {
            for (r, v) in self.g.straighten([x, w.as_slice()].concat(), c * d) {
                super::add_into(&mut out, r, v);
            }
        }
        out
    }

    fn transform(&self, t: &Pair, antipode: bool) -> Pair {
        let mut out = Pair::new();
        for ((x, u), &c) in t {
            for (a, b) in coproduct(u) {
                let mut left = self.n.word(&a);
                if antipode {
                    left = self.n.antipode(&left);
                }
                for (r, v) in self.x_times(x, &left, c) {
                    add_p(&mut out, (r, b.clone()), v);
                }
            }
        }
        out
    }

    /// `x ⊗ u -> Σ x·u' ⊗ u''` over the full coproduct of `u`.
    pub fn phi(&self, t: &Pair) -> Pair {
        self.transform(t, false)
    }

    /// `x ⊗ u -> Σ x·S(u') ⊗ u''` with the antipode `S`.
    pub fn phi_inv(&self, t: &Pair) -> Pair {
        self.transform(t, true)
    }

    fn right_u(&self, t: &Pair, e: usize) -> Pair {
        let mut out = Pair::new();
        for ((x, u), &c) in t {
            for (r, v) in self.n.straighten([u.clone(), vec![e as u16]].concat(), c) {
                add_p(&mut out, (x.clone(), r), v);
            }
        }
        out
    }

    /// Action on the second factor only.
    pub fn act_trivial(&self, t: &Pair, e: usize) -> Pair {
        self.right_u(t, e)
    }

    /// Action through the coproduct: `(x ⊗ u) e = x e ⊗ u + x ⊗ u e`.
    pub fn act_coproduct(&self, t: &Pair, e: usize) -> Pair {
        let mut out = self.right_u(t, e);
        for ((x, u), &c) in t {
            for (r, v) in self.g.straighten([x.clone(), vec![e as u16]].concat(), c) {
                add_p(&mut out, (r, u.clone()), v);
            }
        }
        out
    }

    /// Equivariance and invertibility on `x` of length at most `x_len` and
    /// `u` with `|deg u| <= max_deg`.
    pub fn check(&self, max_deg: i64, x_len: usize) -> Check {
        let name = "comult_phi";
        for x in self.g.monomials(x_len) {
            for u in self.n.monomials_up_to(max_deg) {
                let t = basis_pair(&x, &u);
                let p = self.phi(&t);
                if self.phi_inv(&p) != t || self.phi(&self.phi_inv(&t)) != t {
                    return Check::fail(
                        name,
                        format!("not invertible at {} ⊗ {}", self.g.word_string(&x), self.n.word_string(&u)),
                    );
                }
                for &e in &self.g.alg.n_basis {
                    if self.phi(&self.act_trivial(&t, e)) != self.act_coproduct(&p, e) {
                        return Check::fail(
                            name,
                            format!(
                                "not equivariant at {} ⊗ {} under {}",
                                self.g.word_string(&x),
                                self.n.word_string(&u),
                                self.g.alg.labels[e]
                            ),
                        );
                    }
                }
            }
        }
        Check::pass(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_and_unit() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        let c = Comult::new(&g);
        let x = vec![3u16];
        assert_eq!(c.phi(&basis_pair(&x, &[])), basis_pair(&x, &[]));
        for &e in &g.n_basis {
            let e = e as u16;
            let mut expect = basis_pair(&x, &[e]);
            for (r, v) in c.g.word(&[3, e]) {
                add_p(&mut expect, (r, vec![]), v);
            }
            assert_eq!(c.phi(&basis_pair(&x, &[e])), expect);
        }
    }

    #[test]
    fn coproduct_counts() {
        assert_eq!(coproduct(&[5, 5, 6]).len(), 8);
        assert_eq!(coproduct(&[]), vec![(vec![], vec![])]);
    }

    #[test]
    fn heisenberg_equivariance() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        assert!(Comult::new(&g).check(4, 1).passed());
    }

    #[test]
    fn identity_map_is_not_equivariant() {
        // the two actions really differ, so the check has content
        let g = GradedLieAlgebra::sl3_heisenberg();
        let c = Comult::new(&g);
        let t = basis_pair(&[0], &[]);
        let e = g.n_basis[0];
        assert_ne!(c.act_trivial(&t, e), c.act_coproduct(&t, e));
    }
}
