//! The exponential-formula endomorphisms of `U(g) ⊗ U(n)*` for abelian `n`.
//!
//! `U(n)*` is the polynomial ring in the dual coordinates `x_i`, with `e_i`
//! acting as `d/dx_i`. For `u` in `U(g)` the operator is
//! `v ⊗ p -> v · exp(Σ ad e_i ⊗ x_i)(u) · p`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{add_into, Check, Env, GradedLieAlgebra, UElt, Word};
use crate::cartan::Q;
use crate::error::{Error, Result};
use crate::linalg;

/// Element of `U(g) ⊗ C[x]`: PBW word and exponent vector.
pub type Tensor = BTreeMap<(Word, Vec<u32>), Q>;

fn add_t(t: &mut Tensor, key: (Word, Vec<u32>), c: Q) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(key.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&key);
    }
}

pub fn basis_tensor(v: &[u16], p: &[u32]) -> Tensor {
    Tensor::from([((v.to_vec(), p.to_vec()), Q::one())])
}

pub struct ExpAction<'a> {
    pub env: Env<'a>,
    /// Cap on the number of `ad` iterations before reporting overflow.
    pub max_iter: usize,
}

impl<'a> ExpAction<'a> {
    pub fn new(alg: &'a GradedLieAlgebra) -> Result<Self> {
        if !alg.n_is_abelian() {
            return Err(Error::InvalidAlgebra("the exponential formula needs abelian n".into()));
        }
        Ok(ExpAction { env: Env::of_g(alg), max_iter: 64 })
    }

    fn n(&self) -> usize {
        self.env.alg.n_dim()
    }

    fn ad(&self, i: usize, u: &UElt) -> UElt {
        self.env.commutator(&self.env.gen(self.env.alg.n_basis[i]), u)
    }

    /// `exp(Σ ad e_i ⊗ x_i)(u)`; the series stops by ad-nilpotence.
    pub fn exponential(&self, u: &UElt) -> Result<Tensor> {
        let n = self.n();
        let mut out = Tensor::new();
        let mut layer: BTreeMap<Vec<u32>, UElt> = BTreeMap::from([(vec![0; n], u.clone())]);
        for k in 0..=self.max_iter {
            if layer.is_empty() {
                return Ok(out);
            }
            for (exps, x) in &layer {
                for (w, &c) in x {
                    add_t(&mut out, (w.clone(), exps.clone()), c);
                }
            }
            if k == self.max_iter {
                break;
            }
            let mut next: BTreeMap<Vec<u32>, UElt> = BTreeMap::new();
            let scale = Q::new(1, k as i64 + 1);
            for (exps, x) in &layer {
                for i in 0..n {
                    let y = self.ad(i, x);
                    if y.is_empty() {
                        continue;
                    }
                    let mut e = exps.clone();
                    e[i] += 1;
                    let slot = next.entry(e).or_default();
                    for (w, c) in y {
                        add_into(slot, w, c * scale);
                    }
                }
            }
            next.retain(|_, v| !v.is_empty());
            layer = next;
        }
        Err(Error::Truncation(format!("ad series did not terminate within {} steps", self.max_iter)))
    }

    /// The operator attached to `u`, applied to `t`.
    pub fn apply(&self, u: &UElt, t: &Tensor) -> Result<Tensor> {
        let e = self.exponential(u)?;
        Ok(self.right_multiply(t, &e))
    }

    fn right_multiply(&self, t: &Tensor, e: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for ((v, p), &c) in t {
            for ((w, q), &d) in e {
                let prod = self.env.mul(&UElt::from([(v.clone(), c)]), &UElt::from([(w.clone(), d)]));
                let exps: Vec<u32> = p.iter().zip(q).map(|(a, b)| a + b).collect();
                for (r, x) in prod {
                    add_t(&mut out, (r, exps.clone()), x);
                }
            }
        }
        out
    }

    /// Left multiplication by the basis vector `i` of `g`.
    pub fn left(&self, i: usize, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for ((v, p), &c) in t {
            for (r, x) in self.env.straighten([vec![i as u16], v.clone()].concat(), c) {
                add_t(&mut out, (r, p.clone()), x);
            }
        }
        out
    }

    /// The diagonal action of `e_j` (position `j` in `n`):
    /// `v ⊗ p -> v e_j ⊗ p + v ⊗ dp/dx_j`.
    pub fn diagonal(&self, j: usize, t: &Tensor) -> Tensor {
        self.diagonal_signed(j, t, Q::one())
    }

    fn diagonal_signed(&self, j: usize, t: &Tensor, sign: Q) -> Tensor {
        let ej = self.env.alg.n_basis[j] as u16;
        let mut out = Tensor::new();
        for ((v, p), &c) in t {
            for (r, x) in self.env.straighten([v.clone(), vec![ej]].concat(), c) {
                add_t(&mut out, (r, p.clone()), x);
            }
            if p[j] > 0 {
                let mut q = p.clone();
                q[j] -= 1;
                add_t(&mut out, (v.clone(), q), sign * c * Q::from(p[j] as i64));
            }
        }
        out
    }

    fn test_vectors(&self, max_len: usize, max_deg: u32) -> Vec<Tensor> {
        let n = self.n();
        let mut polys = vec![vec![0u32; n]];
        for _ in 0..max_deg {
            let mut next = polys.clone();
            for p in &polys {
                for i in 0..n {
                    let mut q = p.clone();
                    q[i] += 1;
                    next.push(q);
                }
            }
            next.sort();
            next.dedup();
            polys = next;
        }
        let mut out = Vec::new();
        for v in self.env.monomials(max_len) {
            for p in &polys {
                out.push(basis_tensor(&v, p));
            }
        }
        out
    }

    /// Each operator commutes with left multiplication by `g` and with the
    /// diagonal `n`-action, on all test vectors.
    pub fn check_act(&self, u_len: usize, v_len: usize, p_deg: u32) -> Check {
        let name = "exp_act";
        let vs = self.test_vectors(v_len, p_deg);
        for uw in self.env.monomials(u_len) {
            let u = self.env.word(&uw);
            let e = match self.exponential(&u) {
                Ok(e) => e,
                Err(err) => return Check::fail(name, err.to_string()),
            };
            for v in &vs {
                for i in 0..self.env.alg.dim() {
                    if self.right_multiply(&self.left(i, v), &e) != self.left(i, &self.right_multiply(v, &e)) {
                        return Check::fail(
                            name,
                            format!("u = {} against left {}", self.env.word_string(&uw), self.env.alg.labels[i]),
                        );
                    }
                }
                for j in 0..self.n() {
                    if self.right_multiply(&self.diagonal(j, v), &e) != self.diagonal(j, &self.right_multiply(v, &e)) {
                        return Check::fail(
                            name,
                            format!("u = {} against diagonal x{}", self.env.word_string(&uw), j + 1),
                        );
                    }
                }
            }
        }
        Check::pass(name)
    }

    /// `sigma(u1 u2)` equals `sigma(u1)` followed by `sigma(u2)`: the
    /// operators act on the right, so the composite is taken in that order.
    pub fn check_homomorphism(&self, max_len: usize) -> Check {
        let name = "exp_homomorphism";
        let vs = self.test_vectors(1, 1);
        let words = self.env.monomials(max_len);
        let mut exps = Vec::new();
        for w in &words {
            match self.exponential(&self.env.word(w)) {
                Ok(e) => exps.push(e),
                Err(err) => return Check::fail(name, err.to_string()),
            }
        }
        for (a, ea) in words.iter().zip(&exps) {
            for (b, eb) in words.iter().zip(&exps) {
                let prod = self.env.mul(&self.env.word(a), &self.env.word(b));
                let ep = match self.exponential(&prod) {
                    Ok(e) => e,
                    Err(err) => return Check::fail(name, err.to_string()),
                };
                for v in &vs {
                    let lhs = self.right_multiply(v, &ep);
                    let rhs = self.right_multiply(&self.right_multiply(v, ea), eb);
                    if lhs != rhs {
                        return Check::fail(
                            name,
                            format!("u1 = {}, u2 = {}", self.env.word_string(a), self.env.word_string(b)),
                        );
                    }
                }
            }
        }
        Check::pass(name)
    }

    /// Per degree: the number of PBW monomials of `U(g)` with at most
    /// `max_len` factors, and the rank of their operators. Equal numbers
    /// mean the map into endomorphisms is injective on that piece.
    pub fn endomorphism_dims(&self, max_len: usize) -> Result<Vec<(i64, usize, usize)>> {
        let mut by_deg: BTreeMap<i64, Vec<Tensor>> = BTreeMap::new();
        for w in self.env.monomials(max_len) {
            by_deg.entry(self.env.degree(&w)).or_default().push(self.exponential(&self.env.word(&w))?);
        }
        let mut out = Vec::new();
        for (d, ts) in by_deg {
            let keys: Vec<_> = {
                let mut k: Vec<_> = ts.iter().flat_map(|t| t.keys().cloned()).collect();
                k.sort();
                k.dedup();
                k
            };
            let rows: Vec<Vec<_>> = ts
                .iter()
                .map(|t| keys.iter().map(|k| linalg::from_q64(t.get(k).copied().unwrap_or_else(Q::zero))).collect())
                .collect();
            out.push((d, ts.len(), linalg::rank(&rows)));
        }
        Ok(out)
    }
}
