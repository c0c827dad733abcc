//! Finite models of the DG algebras `U(g) ⊗ cl ⊗ End(U(n)*)` and
//! `U(g) ⊗ cl ⊗ End(U(n))`, their differentials `D`, and the map between
//! them built from the antipode, the Clifford reversal and transposition.
//!
//! `U(n)*` is truncated to dual monomials with `|deg| <= K`, which the
//! coregular action preserves; `U(n)` is taken modulo monomials of
//! `|deg| > K`, a right ideal. Both spaces have the same labels, and the
//! truncated right multiplication is exactly the transpose of the
//! truncated coregular action. The `U(g)` factor acts on resolutions by
//! right multiplication, so it multiplies in reverse order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Check, Env, GradedLieAlgebra, Word};
use crate::cartan::Q;
use crate::clifford::CliffordElt;

pub type Mat = Vec<Vec<Q>>;

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn transpose(a: &Mat) -> Mat {
    crate::linalg::transpose(a)
}

fn is_zero_mat(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

type Key = (Word, (u32, u32));

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgElt {
    terms: BTreeMap<Key, Mat>,
}

impl DgElt {
    fn add_term(&mut self, key: Key, m: Mat, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(acc) => {
                for (ra, rm) in acc.iter_mut().zip(&m) {
                    for (x, y) in ra.iter_mut().zip(rm) {
                        *x += *y * c;
                    }
                }
                if is_zero_mat(acc) {
                    self.terms.remove(&key);
                }
            }
            None => {
                if !is_zero_mat(&m) {
                    let m = if c.is_one() {
                        m
                    } else {
                        m.into_iter().map(|r| r.into_iter().map(|x| x * c).collect()).collect()
                    };
                    self.terms.insert(key, m);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, m) in &o.terms {
            out.add_term(k.clone(), m.clone(), Q::one());
        }
        out
    }

    pub fn scale(&self, c: Q) -> Self {
        let mut out = DgElt { terms: BTreeMap::new() };
        for (k, m) in &self.terms {
            out.add_term(k.clone(), m.clone(), c);
        }
        out
    }

    /// Parity of the Clifford factor, when homogeneous.
    pub fn parity(&self) -> Option<u32> {
        let mut ps = self.terms.keys().map(|(_, (i, j))| (i.count_ones() + j.count_ones()) % 2);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }
}

/// One of the two DG algebras at a fixed truncation.
pub struct DgAlgebra<'a> {
    pub g: Env<'a>,
    pub n_env: Env<'a>,
    /// Labels of the truncated `U(n)` and `U(n)*` bases.
    pub labels: Vec<Word>,
    index: BTreeMap<Word, usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `End(U(n)*)` with the coregular action.
    Dual,
    /// `End(U(n))` with right multiplication.
    Regular,
}

impl<'a> DgAlgebra<'a> {
    pub fn new(alg: &'a GradedLieAlgebra, bound: i64) -> Self {
        let n_env = Env::of_n(alg);
        let labels = n_env.monomials_up_to(bound);
        let index = labels.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        DgAlgebra { g: Env::of_g(alg), n_env, labels, index }
    }

    fn n(&self) -> usize {
        self.g.alg.n_dim()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn elt(&self, u: &[u16], cl: &CliffordElt, m: Mat) -> DgElt {
        let mut out = DgElt { terms: BTreeMap::new() };
        for (k, c) in cl.terms() {
            out.add_term((u.to_vec(), k), m.clone(), Q::from(c));
        }
        out
    }

    pub fn scalar_cl(&self, cl: &CliffordElt) -> DgElt {
        self.elt(&[], cl, identity(self.dim()))
    }

    pub fn one(&self) -> DgElt {
        self.scalar_cl(&CliffordElt::one(self.n()))
    }

    /// Coregular action of the `i`-th basis vector of `n` on the truncated dual.
    pub fn left_matrix(&self, i: usize) -> Mat {
        let x = self.g.alg.n_basis[i];
        let d = self.dim();
        let mut m = vec![vec![Q::zero(); d]; d];
        for (col, b) in self.labels.iter().enumerate() {
            for (c, v) in self.n_env.coregular(x, b) {
                m[self.index[&c]][col] = v;
            }
        }
        m
    }

    /// Right multiplication by the `i`-th basis vector of `n` modulo high degree.
    pub fn right_matrix(&self, i: usize) -> Mat {
        let x = self.g.alg.n_basis[i] as u16;
        let d = self.dim();
        let mut m = vec![vec![Q::zero(); d]; d];
        for (col, c) in self.labels.iter().enumerate() {
            for (b, v) in self.n_env.straighten([c.clone(), vec![x]].concat(), Q::one()) {
                if let Some(&row) = self.index.get(&b) {
                    m[row][col] = v;
                }
            }
        }
        m
    }

    pub fn mul(&self, a: &DgElt, b: &DgElt) -> DgElt {
        let n = self.n();
        let mut out = DgElt { terms: BTreeMap::new() };
        for ((ua, ca), ma) in &a.terms {
            for ((ub, cb), mb) in &b.terms {
                let u = self.g.mul(&self.g.word(ub), &self.g.word(ua));
                let c = CliffordElt::monomial(n, ca.0, ca.1).mul(&CliffordElt::monomial(n, cb.0, cb.1));
                if u.is_empty() || c.is_zero() {
                    continue;
                }
                let m = mat_mul(ma, mb);
                if is_zero_mat(&m) {
                    continue;
                }
                for (w, x) in &u {
                    for (k, y) in c.terms() {
                        out.add_term((w.clone(), k), m.clone(), *x * Q::from(y));
                    }
                }
            }
        }
        out
    }

    /// Supercommutator `{a, b} = ab - (-1)^{|a||b|} ba` for homogeneous `a`, `b`.
    pub fn supercommutator(&self, a: &DgElt, b: &DgElt) -> DgElt {
        let sign = if a.parity().unwrap_or(0) * b.parity().unwrap_or(0) == 1 { Q::one() } else { -Q::one() };
        self.mul(a, b).add(&self.mul(b, a).scale(sign))
    }

    /// `Σ_{i<j, k} c_ij^k e*_i e*_j e_k` in the Clifford algebra.
    pub fn cubic_term(&self) -> CliffordElt {
        let n = self.n();
        let mut c = CliffordElt::zero(n);
        for (i, j, k, v) in self.g.alg.n_constants() {
            if i < j {
                assert!(v.is_integer(), "Clifford coefficients are integral");
                let t =
                    CliffordElt::e_star(n, i + 1).mul(&CliffordElt::e_star(n, j + 1)).mul(&CliffordElt::e(n, k + 1));
                c = c.add(&t.scale(v.to_integer()));
            }
        }
        c
    }

    /// `Σ e_i ⊗ e*_i ⊗ 1` plus the cubic term.
    pub fn first_part(&self) -> DgElt {
        let n = self.n();
        let mut d = self.scalar_cl(&self.cubic_term());
        for i in 0..n {
            let u = [self.g.alg.n_basis[i] as u16];
            d = d.add(&self.elt(&u, &CliffordElt::e_star(n, i + 1), identity(self.dim())));
        }
        d
    }

    /// `sign · Σ 1 ⊗ e*_i ⊗ (l or r)(e_i)`.
    pub fn second_part(&self, side: Side, sign: Q) -> DgElt {
        let n = self.n();
        let mut d = DgElt { terms: BTreeMap::new() };
        for i in 0..n {
            let m = match side {
                Side::Dual => self.left_matrix(i),
                Side::Regular => self.right_matrix(i),
            };
            d = d.add(&self.elt(&[], &CliffordElt::e_star(n, i + 1), m).scale(sign));
        }
        d
    }

    /// The differential element; on the dual side the endomorphism term
    /// carries a minus sign.
    pub fn differential(&self, side: Side) -> DgElt {
        let sign = if side == Side::Dual { -Q::one() } else { Q::one() };
        self.first_part().add(&self.second_part(side, sign))
    }

    /// Antipode on `U(g)`, reversal on `cl`, transpose on the endomorphisms.
    pub fn eta_theta(&self, b: &DgElt) -> DgElt {
        let n = self.n();
        let mut out = DgElt { terms: BTreeMap::new() };
        for ((u, c), m) in &b.terms {
            let su = self.g.antipode(&self.g.word(u));
            let sc = CliffordElt::monomial(n, c.0, c.1).sigma();
            let mt = transpose(m);
            for (w, x) in &su {
                for (k, y) in sc.terms() {
                    out.add_term((w.clone(), k), mt.clone(), *x * Q::from(y));
                }
            }
        }
        out
    }

    /// Generators used as test elements: basis of `g`, Clifford generators,
    /// the endomorphisms of the side, and a few matrix units.
    pub fn samples(&self, side: Side) -> Vec<(String, DgElt)> {
        let n = self.n();
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..self.g.alg.dim() {
            out.push((self.g.alg.labels[i].clone(), self.elt(&[i as u16], &CliffordElt::one(n), identity(d))));
        }
        for i in 1..=n {
            out.push((format!("ebar{i}"), self.scalar_cl(&CliffordElt::e(n, i))));
            out.push((format!("ebar*{i}"), self.scalar_cl(&CliffordElt::e_star(n, i))));
        }
        for i in 0..n {
            let m = match side {
                Side::Dual => self.left_matrix(i),
                Side::Regular => self.right_matrix(i),
            };
            out.push((format!("end{}", i + 1), self.elt(&[], &CliffordElt::one(n), m)));
        }
        for (p, q) in [(0, 0), (0, d - 1), (d - 1, 0), (1.min(d - 1), 2.min(d - 1))] {
            let mut m = vec![vec![Q::zero(); d]; d];
            m[p][q] = Q::one();
            out.push((format!("E{p},{q}"), self.elt(&[], &CliffordElt::one(n), m)));
        }
        // a mixed element of odd parity
        let u = [self.g.alg.n_basis[0] as u16];
        out.push(("mixed".into(), self.elt(&u, &CliffordElt::e(n, 1), self.left_or_right(side, 0))));
        out
    }

    fn left_or_right(&self, side: Side, i: usize) -> Mat {
        match side {
            Side::Dual => self.left_matrix(i),
            Side::Regular => self.right_matrix(i),
        }
    }
}

/// Antipode-times-reversal on `U(g) ⊗ cl`, modelled with a one-point
/// endomorphism factor.
fn sigma_check(alg: &GradedLieAlgebra) -> std::result::Result<(), String> {
    let a = DgAlgebra::new(alg, 0);
    let d1 = a.first_part();
    if a.eta_theta(&d1) != d1.scale(-Q::one()) {
        return Err("sigma(D1) != -D1".into());
    }
    for (name, x) in a.samples(Side::Dual) {
        let lhs = a.eta_theta(&a.supercommutator(&d1, &x));
        let sign = if x.parity() == Some(1) { -Q::one() } else { Q::one() };
        let rhs = a.supercommutator(&d1, &a.eta_theta(&x)).scale(sign);
        if lhs != rhs {
            return Err(format!("sigma does not intertwine d1 at {name}"));
        }
    }
    Ok(())
}

fn square_check(a: &DgAlgebra, side: Side) -> std::result::Result<(), String> {
    let d = a.differential(side);
    if !a.mul(&d, &d).is_zero() {
        return Err("D^2 != 0".into());
    }
    for (name, x) in a.samples(side) {
        if !a.supercommutator(&d, &a.supercommutator(&d, &x)).is_zero() {
            return Err(format!("{{D, {{D, a}}}} != 0 at a = {name}"));
        }
    }
    Ok(())
}

fn eta_theta_check(a: &DgAlgebra) -> std::result::Result<(), String> {
    let one = Q::one();
    let db2 = a.second_part(Side::Regular, one);
    let da2 = a.second_part(Side::Dual, -one);
    if a.eta_theta(&db2) != da2.scale(-one) {
        return Err("eta theta (D_B^(2)) != -D_A^(2)".into());
    }
    let (db, da) = (a.differential(Side::Regular), a.differential(Side::Dual));
    if a.eta_theta(&db) != da.scale(-one) {
        return Err("eta theta (D_B) != -D_A".into());
    }
    for (name, b) in a.samples(Side::Regular) {
        let lhs = a.eta_theta(&a.supercommutator(&db, &b));
        let sign = if b.parity() == Some(1) { -one } else { one };
        let rhs = a.supercommutator(&da, &a.eta_theta(&b)).scale(sign);
        if lhs != rhs {
            return Err(format!("eta theta does not intertwine the differentials at {name}"));
        }
    }
    Ok(())
}

/// The three identities: (a) both differentials square to zero, (b) the
/// reversal negates the first part of `D`, (c) `eta theta` carries `D_B`
/// to `-D_A` and intertwines the differentials.
pub fn dg_checks(alg: &GradedLieAlgebra, bound: i64) -> Vec<Check> {
    let a = DgAlgebra::new(alg, bound);
    vec![
        Check::from_result("dg_square_dual", square_check(&a, Side::Dual)),
        Check::from_result("dg_square_regular", square_check(&a, Side::Regular)),
        Check::from_result("dg_sigma", sigma_check(alg)),
        Check::from_result("dg_eta_theta", eta_theta_check(&a)),
    ]
}
