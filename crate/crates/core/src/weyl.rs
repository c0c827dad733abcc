//! The affine Weyl group as a semidirect product of translations by the
//! coroot lattice and the finite Weyl group, with ordinary, twisted and
//! semi-infinite lengths, root sets and the two Bruhat-type orders.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_traits::Zero;

use crate::cartan::{AffineCartan, AffineRoot, AffineWeight, Q};
use crate::error::{Error, Result};

/// Group element `theta_z * w_bar`.
///
/// `perm` is the action of `w_bar` on the finite root list of the Cartan
/// datum; `z` holds the translation in the basis `alpha_1..alpha_r`
/// (it always lies in the sublattice spanned by `d_hat_i alpha_i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    pub perm: Vec<u16>,
    pub z: Vec<i64>,
}

/// Element with its length and semi-infinite length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthRecord {
    pub element: WeylElt,
    pub ell: i64,
    pub si_ell: i64,
}

/// Ball element produced by [`WeylGroup::enumerate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumerated {
    pub elt: WeylElt,
    pub len: usize,
    pub word: Vec<usize>,
}

/// Three-valued answer of the semi-infinite order search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SiVerdict {
    /// Holds; `witness` is the least `lambda_0` (basis `d_hat_i alpha_i`) found.
    Leq {
        witness: Vec<i64>,
    },
    NotLeq,
    Unstable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaincombOutcome {
    /// `mu0` in the basis `d_hat_i alpha_i` (nonpositive entries).
    Found {
        mu0: Vec<i64>,
        value: i64,
    },
    Violated {
        mu0: Vec<i64>,
        mu: Vec<i64>,
        got: i64,
        expected: i64,
    },
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub cartan: AffineCartan,
    simple_perm: Vec<Vec<u16>>,
    neg: Vec<usize>,
    simple_idx: Vec<usize>,
}

fn compose(p: &[u16], q: &[u16]) -> Vec<u16> {
    q.iter().map(|&k| p[k as usize]).collect()
}

fn invert(p: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16; p.len()];
    for (k, &v) in p.iter().enumerate() {
        out[v as usize] = k as u16;
    }
    out
}

pub fn word_to_string(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(".")
    }
}

pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t == "e" || t.is_empty() {
        return Ok(Vec::new());
    }
    t.split('.')
        .map(|s| {
            s.trim()
                .strip_prefix('s')
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad generator {s:?}")))
        })
        .collect()
}

/// Enumerates nonnegative integer vectors of length `r` with entries `<= bound`,
/// ordered by (sum, lexicographic).
pub fn box_vectors(r: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    out
}

impl WeylGroup {
    pub fn new(cartan: AffineCartan) -> Self {
        let roots = cartan.finite_roots();
        let nroots = roots.len();
        let neg: Vec<usize> = roots
            .iter()
            .map(|x| {
                let m: Vec<i64> = x.coroot.iter().map(|v| -v).collect();
                cartan.finite_root_index(&m).unwrap()
            })
            .collect();
        let simple_idx: Vec<usize> = (1..=cartan.rank).map(|i| cartan.simple_index(i)).collect();
        let mut g = WeylGroup { cartan, simple_perm: Vec::new(), neg, simple_idx };
        let mut simple_perm = vec![Vec::new()];
        for i in 1..=g.cartan.rank {
            simple_perm.push(g.reflection_perm(g.simple_idx[i - 1]));
        }
        simple_perm[0] = (0..nroots as u16).collect();
        g.simple_perm = simple_perm;
        g
    }

    pub fn from_type(name: &str) -> Result<Self> {
        Ok(Self::new(AffineCartan::from_type(name)?))
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    /// `<y, z>` for `y` in `h_1..h_r` and `z` in `alpha_1..alpha_r`.
    fn pair_fin(&self, y: &[i64], z: &[i64]) -> i64 {
        let a = &self.cartan.a;
        let mut s = 0;
        for (i, &yi) in y.iter().enumerate() {
            if yi != 0 {
                for (j, &zj) in z.iter().enumerate() {
                    s += yi * a[i + 1][j + 1] * zj;
                }
            }
        }
        s
    }

    /// Permutation of the finite roots induced by the reflection in root `b`.
    fn reflection_perm(&self, b: usize) -> Vec<u16> {
        let roots = self.cartan.finite_roots();
        let beta = &roots[b];
        roots
            .iter()
            .map(|g| {
                let p = self.pair_fin(&g.coroot, &beta.root);
                let img: Vec<i64> = g.coroot.iter().zip(&beta.coroot).map(|(x, y)| x - p * y).collect();
                self.cartan.finite_root_index(&img).unwrap() as u16
            })
            .collect()
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt { perm: (0..self.cartan.finite_roots().len() as u16).collect(), z: vec![0; self.rank()] }
    }

    /// `w_bar` applied to a vector of the finite root lattice (alpha-coordinates).
    fn fin_apply_roots(&self, perm: &[u16], z: &[i64]) -> Vec<i64> {
        let roots = self.cartan.finite_roots();
        let mut out = vec![0; self.rank()];
        for (j, &zj) in z.iter().enumerate() {
            if zj != 0 {
                let img = &roots[perm[self.simple_idx[j]] as usize].root;
                for (o, x) in out.iter_mut().zip(img) {
                    *o += zj * x;
                }
            }
        }
        out
    }

    /// `w_bar` applied to a vector of `span(h_1..h_r)`.
    fn fin_apply_coroots(&self, perm: &[u16], y: &[i64]) -> Vec<i64> {
        let roots = self.cartan.finite_roots();
        let mut out = vec![0; self.rank()];
        for (j, &yj) in y.iter().enumerate() {
            if yj != 0 {
                let img = &roots[perm[self.simple_idx[j]] as usize].coroot;
                for (o, x) in out.iter_mut().zip(img) {
                    *o += yj * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &WeylElt, b: &WeylElt) -> WeylElt {
        let shifted = self.fin_apply_roots(&a.perm, &b.z);
        WeylElt { perm: compose(&a.perm, &b.perm), z: a.z.iter().zip(&shifted).map(|(x, y)| x + y).collect() }
    }

    pub fn inv(&self, a: &WeylElt) -> WeylElt {
        let pinv = invert(&a.perm);
        let z = self.fin_apply_roots(&pinv, &a.z).into_iter().map(|x| -x).collect();
        WeylElt { perm: pinv, z }
    }

    /// Finite part only (translation dropped).
    pub fn finite_part(&self, a: &WeylElt) -> WeylElt {
        WeylElt { perm: a.perm.clone(), z: vec![0; self.rank()] }
    }

    /// Translation coordinates in the basis `d_hat_i alpha_i`.
    pub fn translation(&self, a: &WeylElt) -> Vec<i64> {
        a.z.iter().enumerate().map(|(i, x)| x / self.cartan.d_hat[i + 1]).collect()
    }

    /// `theta_z` for `z` given in the basis `d_hat_i alpha_i`.
    pub fn theta(&self, z: &[i64]) -> WeylElt {
        let z = z.iter().enumerate().map(|(i, x)| x * self.cartan.d_hat[i + 1]).collect();
        WeylElt { perm: self.identity().perm, z }
    }

    /// `theta_z` for `z` given in the basis `alpha_i`; rejects points outside
    /// the sublattice spanned by `d_hat_i alpha_i`.
    pub fn theta_root_coords(&self, z: &[i64]) -> Result<WeylElt> {
        if z.len() != self.rank() || z.iter().enumerate().any(|(i, x)| x % self.cartan.d_hat[i + 1] != 0) {
            return Err(Error::NotInLattice(z.to_vec()));
        }
        Ok(WeylElt { perm: self.identity().perm, z: z.to_vec() })
    }

    /// Translation used by the semi-infinite constructions: `theta_{-z}`.
    /// With `theta` and the semi-infinite length both taken literally, the
    /// length-difference stabilization holds along the cone `theta(-Q''+)`,
    /// so the stabilizing cone is addressed through this map.
    pub fn si_translation(&self, z: &[i64]) -> WeylElt {
        let neg: Vec<i64> = z.iter().map(|x| -x).collect();
        self.theta(&neg)
    }

    pub fn simple(&self, i: usize) -> WeylElt {
        if i == 0 {
            // s_0 = theta_{theta'} s_theta
            let th = self.cartan.highest_root();
            let z = self.cartan.finite_roots()[th].root.clone();
            WeylElt { perm: self.reflection_perm(th), z }
        } else {
            WeylElt { perm: self.simple_perm[i].clone(), z: vec![0; self.rank()] }
        }
    }

    /// The reflection `s_{beta, m}` in the affine coroot `beta + d_hat m c`.
    pub fn affine_reflection(&self, beta: usize, m: i64) -> WeylElt {
        // s_{beta,m} = s_{beta,0} theta_{d_hat m beta'}
        let fr = &self.cartan.finite_roots()[beta];
        let s = WeylElt { perm: self.reflection_perm(beta), z: vec![0; self.rank()] };
        let t = WeylElt { perm: self.identity().perm, z: fr.root.iter().map(|x| x * fr.d_hat * m).collect() };
        self.mul(&s, &t)
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElt {
        word.iter().fold(self.identity(), |acc, &i| self.mul(&acc, &self.simple(i)))
    }

    pub fn is_identity(&self, a: &WeylElt) -> bool {
        a.z.iter().all(|&x| x == 0) && a.perm.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    /// Image of the affine root `(fin, k)` = `beta + k c`.
    fn act_pair(&self, w: &WeylElt, fin: usize, k: i64) -> (usize, i64) {
        let img = w.perm[fin] as usize;
        let p = self.pair_fin(&self.cartan.finite_roots()[img].coroot, &w.z);
        (img, k - p)
    }

    fn pair_positive(&self, fin: usize, k: i64) -> bool {
        k > 0 || (k == 0 && self.cartan.finite_roots()[fin].is_positive())
    }

    /// Action on `V` in h-coordinates.
    pub fn act_coroot(&self, w: &WeylElt, y: &[i64]) -> Vec<i64> {
        let c = &self.cartan;
        let k = y[0];
        let ybar: Vec<i64> = (1..c.size()).map(|i| y[i] - k * c.comarks[i]).collect();
        let img = self.fin_apply_coroots(&w.perm, &ybar);
        let k2 = k - self.pair_fin(&img, &w.z);
        let mut out = vec![k2];
        out.extend((1..c.size()).map(|i| img[i - 1] + k2 * c.comarks[i]));
        out
    }

    pub fn act_root(&self, w: &WeylElt, r: &AffineRoot) -> AffineRoot {
        AffineRoot { b: self.act_coroot(w, &r.b) }
    }

    /// Action on extended weights.
    pub fn act_weight(&self, w: &WeylElt, x: &AffineWeight) -> AffineWeight {
        let c = &self.cartan;
        let roots = c.finite_roots();
        let pinv = invert(&w.perm);
        let k = c.level(x);
        let mut m = vec![0i64; c.size()];
        for i in 1..c.size() {
            let y = &roots[pinv[self.simple_idx[i - 1]] as usize].coroot;
            m[i] = (1..c.size()).map(|j| y[j - 1] * x.m[j]).sum();
        }
        m[0] = k - (1..c.size()).map(|i| c.comarks[i] * m[i]).sum::<i64>();
        let moved = AffineWeight { m, n: x.n };
        let shift = c.finite_pair_weight_root(&moved, &w.z) + c.finite_root_norm(&w.z) * Q::new(k, 2);
        let mut m = moved.m;
        for (i, mi) in m.iter_mut().enumerate() {
            *mi += k * (1..c.size()).map(|j| c.a[i][j] * w.z[j - 1]).sum::<i64>();
        }
        AffineWeight { m, n: moved.n - shift }
    }

    pub fn dot_action(&self, w: &WeylElt, l: &AffineWeight) -> AffineWeight {
        let rho = self.cartan.rho();
        self.act_weight(w, &l.add(&rho)).sub(&rho)
    }

    /// Matrix of `w` on `V'` in the coordinates `m_i = <h_i, x>`; entry
    /// `[i][j]` is the `i`-th coordinate of the image of `omega_j`.
    pub fn vprime_matrix(&self, w: &WeylElt) -> Vec<Vec<i64>> {
        let n = self.cartan.size();
        let cols: Vec<Vec<i64>> = (0..n).map(|j| self.act_weight(w, &self.cartan.fundamental(j)).m).collect();
        (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect()
    }

    /// Matrix of the reflection `x -> x - <h, x> h'` on `V'` for an affine coroot `h`.
    pub fn coroot_reflection_matrix(&self, h: &[i64]) -> Result<Vec<Vec<i64>>> {
        let c = &self.cartan;
        let (fin, _) = c.root_decompose(h).ok_or_else(|| Error::Parse(format!("{h:?} is not a root")))?;
        let hp = c.coroot_to_root(fin, 0).m;
        let n = c.size();
        Ok((0..n).map(|i| (0..n).map(|j| i64::from(i == j) - hp[i] * h[j]).collect()).collect())
    }

    /// Matrix of `x -> x + <c, x> z` on `V'`, `z` in alpha-coordinates.
    pub fn transvection_matrix(&self, z: &[i64]) -> Vec<Vec<i64>> {
        let c = &self.cartan;
        let n = c.size();
        let q: Vec<i64> = (0..n).map(|i| (1..n).map(|j| c.a[i][j] * z[j - 1]).sum()).collect();
        (0..n).map(|i| (0..n).map(|j| i64::from(i == j) + q[i] * c.comarks[j]).collect()).collect()
    }

    fn k_bound(&self, w: &WeylElt) -> i64 {
        let roots = self.cartan.finite_roots();
        let p = roots.iter().map(|r| self.pair_fin(&r.coroot, &w.z).abs()).max().unwrap_or(0);
        p + self.cartan.d_max
    }

    /// Number of positive roots `alpha` with `w^{-1} alpha` negative.
    pub fn length(&self, w: &WeylElt) -> i64 {
        let u = self.inv(w);
        let bound = self.k_bound(&u);
        let mut count = 0;
        for (f, fr) in self.cartan.finite_roots().iter().enumerate() {
            let step = fr.d_hat;
            let mut k = -(bound / step) * step;
            while k <= bound {
                if self.pair_positive(f, k) {
                    let (g, k2) = self.act_pair(&u, f, k);
                    if !self.pair_positive(g, k2) {
                        count += 1;
                    }
                }
                k += step;
            }
        }
        count
    }

    /// `R_w`: negative roots sent to positive roots by `w`.
    pub fn r_set(&self, w: &WeylElt) -> Vec<AffineRoot> {
        let bound = self.k_bound(w);
        let mut out = Vec::new();
        for (f, fr) in self.cartan.finite_roots().iter().enumerate() {
            let step = fr.d_hat;
            let mut k = -(bound / step) * step;
            while k <= bound {
                if !self.pair_positive(f, k) {
                    let (g, k2) = self.act_pair(w, f, k);
                    if self.pair_positive(g, k2) {
                        out.push(AffineRoot { b: self.cartan.affine_coroot(f, k) });
                    }
                }
                k += step;
            }
        }
        out.sort();
        out
    }

    /// Signed count of semi-infinite roots `beta + d_hat m c` sent to
    /// negative roots by `w`: those with `beta > 0, m >= 0` count `+1`, those
    /// with `beta < 0, m > 0` count `-1`.
    pub fn si_length_direct(&self, w: &WeylElt) -> i64 {
        let bound = self.k_bound(w);
        let mut total = 0;
        for (f, fr) in self.cartan.finite_roots().iter().enumerate() {
            let step = fr.d_hat;
            let (start, sign) = if fr.is_positive() { (0, 1) } else { (step, -1) };
            let mut k = start;
            while k <= bound {
                let (g, k2) = self.act_pair(w, f, k);
                if !self.pair_positive(g, k2) {
                    total += sign;
                }
                k += step;
            }
        }
        total
    }

    /// Semi-infinite length: the signed count above for `w^{-1}`, the same
    /// convention as [`Self::length`]. This is the value the twisted lengths
    /// `ell^t(w)` settle at as `t` runs deep into the stabilizing cone; the
    /// count through `w` itself differs from it on translations.
    pub fn si_length(&self, w: &WeylElt) -> i64 {
        self.si_length_direct(&self.inv(w))
    }

    pub fn length_record(&self, w: &WeylElt) -> LengthRecord {
        LengthRecord { element: w.clone(), ell: self.length(w), si_ell: self.si_length(w) }
    }

    /// `ell(w^{-1} u) - ell(w^{-1})`.
    pub fn twisted_length(&self, w: &WeylElt, u: &WeylElt) -> i64 {
        let wi = self.inv(w);
        self.length(&self.mul(&wi, u)) - self.length(&wi)
    }

    /// `ell(s_i w) < ell(w)`, decided by the sign of `w^{-1} h_i`.
    pub fn is_left_descent(&self, w: &WeylElt, i: usize) -> bool {
        let u = self.inv(w);
        let (f, k) = if i == 0 { (self.neg[self.cartan.highest_root()], 1) } else { (self.simple_idx[i - 1], 0) };
        let (g, k2) = self.act_pair(&u, f, k);
        !self.pair_positive(g, k2)
    }

    /// Reduced word by greedy left descent, smallest index first.
    pub fn reduced_word(&self, w: &WeylElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        while !self.is_identity(&cur) {
            let i = (0..self.cartan.size()).find(|&i| self.is_left_descent(&cur, i)).expect("descent exists");
            word.push(i);
            cur = self.mul(&self.simple(i), &cur);
        }
        word
    }

    pub fn word_string(&self, w: &WeylElt) -> String {
        word_to_string(&self.reduced_word(w))
    }

    /// `(perm; z)` with `z` in the basis `d_hat_i alpha_i`.
    pub fn pair_string(&self, w: &WeylElt) -> String {
        let p: Vec<String> = w.perm.iter().map(|x| x.to_string()).collect();
        let z: Vec<String> = self.translation(w).iter().map(|x| x.to_string()).collect();
        format!("({}; {})", p.join(" "), z.join(" "))
    }

    /// Bruhat order `u <= w` via descent recursion (equivalent to the
    /// subword property on a reduced word of `w`).
    pub fn bruhat_leq(&self, u: &WeylElt, w: &WeylElt) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        let mut lu = self.length(&u);
        let mut lw = self.length(&w);
        loop {
            if lu > lw {
                return false;
            }
            if lu == lw {
                return u == w;
            }
            if lu == 0 {
                return true;
            }
            let i = (0..self.cartan.size()).find(|&i| self.is_left_descent(&w, i)).unwrap();
            let s = self.simple(i);
            w = self.mul(&s, &w);
            lw -= 1;
            if self.is_left_descent(&u, i) {
                u = self.mul(&s, &u);
                lu -= 1;
            }
        }
    }

    /// Bruhat order by the literal subword criterion: `u` is the product of
    /// a subword of the greedy reduced word of `w`.
    pub fn bruhat_leq_subword(&self, u: &WeylElt, w: &WeylElt) -> bool {
        let word = self.reduced_word(w);
        let mut reach: HashSet<WeylElt> = HashSet::from([self.identity()]);
        for &i in &word {
            let s = self.simple(i);
            let next: Vec<WeylElt> = reach.iter().map(|x| self.mul(x, &s)).collect();
            reach.extend(next);
        }
        reach.contains(u)
    }

    /// Breadth-first ball of radius `max_len`, sorted by (length, word).
    pub fn enumerate(&self, max_len: usize) -> Vec<Enumerated> {
        let mut seen: HashSet<WeylElt> = HashSet::new();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        let mut out = Vec::new();
        for len in 0..=max_len {
            let mut recs: Vec<Enumerated> =
                layer.iter().map(|w| Enumerated { elt: w.clone(), len, word: self.reduced_word(w) }).collect();
            recs.sort_by(|a, b| a.word.cmp(&b.word));
            out.extend(recs);
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for w in &layer {
                for i in 0..self.cartan.size() {
                    let x = self.mul(&self.simple(i), w);
                    if seen.insert(x.clone()) {
                        next.push(x);
                    }
                }
            }
            layer = next;
        }
        out
    }

    /// Cover relations of the Bruhat order inside a list of elements, as
    /// `(index of w, indices of the elements w covers)`.
    pub fn bruhat_covers(&self, ball: &[Enumerated]) -> Vec<(usize, Vec<usize>)> {
        (0..ball.len())
            .map(|j| {
                let below: Vec<usize> = (0..ball.len())
                    .filter(|&i| ball[i].len + 1 == ball[j].len && self.bruhat_leq(&ball[i].elt, &ball[j].elt))
                    .collect();
                (j, below)
            })
            .collect()
    }

    /// Semi-infinite order `u <=si w`: searches `lambda_0` in the box of
    /// coefficients `<= bound` and requires a constant verdict over all
    /// `lambda` in the same box at the deepest `lambda_0`.
    pub fn si_bruhat_leq(&self, u: &WeylElt, w: &WeylElt, bound: i64) -> SiVerdict {
        assert!(bound >= 1, "search bound must be at least 1");
        let boxv = box_vectors(self.rank(), bound);
        let verdict_at = |l0: &[i64]| -> Vec<bool> {
            boxv.iter()
                .map(|l| {
                    let z: Vec<i64> = l.iter().zip(l0).map(|(a, b)| a + b).collect();
                    let t = self.si_translation(&z);
                    self.bruhat_leq(&self.mul(&t, u), &self.mul(&t, w))
                })
                .collect()
        };
        let deep = vec![bound; self.rank()];
        let v = verdict_at(&deep);
        if v.iter().all(|&x| x) {
            let witness = boxv.iter().find(|l0| verdict_at(l0).iter().all(|&x| x)).unwrap().clone();
            SiVerdict::Leq { witness }
        } else if v.iter().all(|&x| !x) {
            SiVerdict::NotLeq
        } else {
            SiVerdict::Unstable
        }
    }

    /// Searches `mu_0` in `-Q''+` (box of size `bound`) such that the length
    /// difference of `w1, w2` after the translation `-mu - mu_0` (through
    /// [`Self::si_translation`]) equals the difference of semi-infinite
    /// lengths for every tested `mu` in `-Q''+`.
    pub fn maincomb_verify(&self, w1: &WeylElt, w2: &WeylElt, bound: i64) -> MaincombOutcome {
        self.maincomb_search(w1, w2, bound, false)
    }

    /// As [`Self::maincomb_verify`], with `mu` restricted to the
    /// antidominant chamber. In rank one the two agree; in higher rank the
    /// cone `-Q''+` leaves the chamber and only this form holds.
    pub fn maincomb_verify_chamber(&self, w1: &WeylElt, w2: &WeylElt, bound: i64) -> MaincombOutcome {
        self.maincomb_search(w1, w2, bound, true)
    }

    /// Whether `-c` (basis `d_hat_i alpha_i`) is antidominant, i.e. `c` pairs
    /// nonnegatively with every finite simple coroot.
    fn is_dominant_translation(&self, c: &[i64]) -> bool {
        let a = &self.cartan.a;
        let d = &self.cartan.d_hat;
        (1..=self.rank()).all(|i| (1..=self.rank()).map(|j| a[i][j] * d[j] * c[j - 1]).sum::<i64>() >= 0)
    }

    fn maincomb_search(&self, w1: &WeylElt, w2: &WeylElt, bound: i64, chamber: bool) -> MaincombOutcome {
        let expected = self.si_length(w1) - self.si_length(w2);
        let boxv = box_vectors(self.rank(), bound);
        let tested: Vec<&Vec<i64>> = boxv.iter().filter(|m| !chamber || self.is_dominant_translation(m)).collect();
        let mut cache: HashMap<Vec<i64>, i64> = HashMap::new();
        let mut diff = |nu: Vec<i64>| -> i64 {
            *cache.entry(nu.clone()).or_insert_with(|| {
                let t = self.si_translation(&nu);
                self.length(&self.mul(&t, w1)) - self.length(&self.mul(&t, w2))
            })
        };
        let mut last = None;
        for m0 in &boxv {
            let bad = tested.iter().find_map(|m| {
                let nu: Vec<i64> = m.iter().zip(m0).map(|(a, b)| a + b).collect();
                let got = diff(nu);
                (got != expected).then(|| ((*m).clone(), got))
            });
            match bad {
                None => {
                    return MaincombOutcome::Found { mu0: m0.iter().map(|x| -x).collect(), value: expected };
                }
                Some((m, got)) => last = Some((m0.clone(), m, got)),
            }
        }
        let (m0, m, got) = last.unwrap();
        MaincombOutcome::Violated {
            mu0: m0.iter().map(|x| -x).collect(),
            mu: m.iter().map(|x| -x).collect(),
            got,
            expected,
        }
    }

    /// `sum of R_w` lifted to extended weights, to compare with `w^{-1} rho - rho`.
    pub fn r_set_weight_sum(&self, w: &WeylElt) -> AffineWeight {
        let c = &self.cartan;
        let mut acc = AffineWeight { m: vec![0; c.size()], n: Q::zero() };
        for r in self.r_set(w) {
            let (f, k) = c.root_decompose(&r.b).expect("root");
            acc = acc.add(&c.coroot_to_root(f, k));
        }
        acc
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.perm.iter().map(|x| x.to_string()).collect();
        let z: Vec<String> = self.z.iter().map(|x| x.to_string()).collect();
        write!(f, "({}; {})", p.join(" "), z.join(" "))
    }
}

/// Adjacency-list text of Bruhat covers: `word: covered words`.
pub fn poset_dump(g: &WeylGroup, ball: &[Enumerated]) -> String {
    let mut lines = BTreeMap::new();
    for (j, below) in g.bruhat_covers(ball) {
        let words: Vec<String> = below.iter().map(|&i| word_to_string(&ball[i].word)).collect();
        lines.insert(
            (ball[j].len, ball[j].word.clone()),
            format!("{}: {}", word_to_string(&ball[j].word), words.join(" ")),
        );
    }
    lines.into_values().map(|l| l.trim_end().to_string() + "\n").collect()
}
