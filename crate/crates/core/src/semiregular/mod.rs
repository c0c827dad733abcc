//! Finite graded Lie algebras given by structure constants, their
//! enveloping algebras by PBW straightening, and the endomorphism identities
//! of the semiregular module checked as finite computations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cartan::Q;
use crate::error::{Error, Result};
use crate::linalg;

pub mod comult;
pub mod dg;
pub mod exp;
pub mod iterate;
pub mod koszul;
pub mod np;

/// A PBW word: basis indices, sorted by the ordering of the enveloping
/// algebra it belongs to.
pub type Word = Vec<u16>;

/// Element of an enveloping algebra in its PBW basis.
pub type UElt = BTreeMap<Word, Q>;

pub fn add_into(acc: &mut UElt, w: Word, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(w.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&w);
    }
}

pub fn scaled(x: &UElt, c: Q) -> UElt {
    if c.is_zero() {
        return UElt::new();
    }
    x.iter().map(|(w, &v)| (w.clone(), v * c)).collect()
}

pub fn sum(a: &UElt, b: &UElt, cb: Q) -> UElt {
    let mut out = a.clone();
    for (w, &v) in b {
        add_into(&mut out, w.clone(), v * cb);
    }
    out
}

pub fn unit() -> UElt {
    UElt::from([(Vec::new(), Q::one())])
}

#[derive(Clone, Debug)]
pub struct GradedLieAlgebra {
    pub labels: Vec<String>,
    pub degrees: Vec<i64>,
    /// `bracket[i][j]` lists `(k, c_ij^k)`.
    bracket: Vec<Vec<Vec<(usize, Q)>>>,
    /// Basis of the negatively graded subalgebra `n`, as indices into `g`.
    pub n_basis: Vec<usize>,
}

fn parse_q(s: &str) -> Result<Q> {
    s.trim().parse::<Q>().map_err(|_| Error::Parse(format!("bad rational '{s}'")))
}

impl GradedLieAlgebra {
    /// Builds an algebra without validating it.
    pub fn from_constants(
        labels: Vec<String>,
        degrees: Vec<i64>,
        constants: &[(usize, usize, usize, Q)],
        n_basis: Vec<usize>,
    ) -> Self {
        let d = labels.len();
        let mut table: Vec<Vec<BTreeMap<usize, Q>>> = vec![vec![BTreeMap::new(); d]; d];
        for &(i, j, k, c) in constants {
            *table[i][j].entry(k).or_insert_with(Q::zero) += c;
        }
        let bracket = table
            .into_iter()
            .map(|row| row.into_iter().map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect()).collect())
            .collect();
        GradedLieAlgebra { labels, degrees, bracket, n_basis }
    }

    /// Structure constants from a basis of traceless-or-not square matrices
    /// closed under the commutator.
    pub fn from_matrices(labels: &[&str], mats: &[Vec<Vec<i64>>], degrees: &[i64], n_labels: &[&str]) -> Self {
        let flat: Vec<Vec<i64>> = mats.iter().map(|m| m.concat()).collect();
        let cols = linalg::transpose(&linalg::int_matrix(&flat));
        let mut constants = Vec::new();
        for (i, a) in mats.iter().enumerate() {
            for (j, b) in mats.iter().enumerate() {
                let s = a.len();
                let comm: Vec<i64> = (0..s)
                    .flat_map(|r| (0..s).map(move |c| (r, c)))
                    .map(|(r, c)| (0..s).map(|t| a[r][t] * b[t][c] - b[r][t] * a[t][c]).sum())
                    .collect();
                let rhs: Vec<_> = comm.iter().map(|&x| linalg::big(x)).collect();
                let sol = linalg::solve(&cols, &rhs).expect("matrix basis is not closed under the commutator");
                for (k, v) in sol.iter().enumerate() {
                    if !v.is_zero() {
                        let q = Q::new(
                            num_traits::ToPrimitive::to_i64(v.numer()).unwrap(),
                            num_traits::ToPrimitive::to_i64(v.denom()).unwrap(),
                        );
                        constants.push((i, j, k, q));
                    }
                }
            }
        }
        let n_basis = n_labels.iter().map(|l| labels.iter().position(|x| x == l).unwrap()).collect();
        Self::from_constants(labels.iter().map(|s| s.to_string()).collect(), degrees.to_vec(), &constants, n_basis)
    }

    /// `sl2` with `deg e = 1`, `deg h = 0`, `deg f = -1` and `n = C f`.
    pub fn sl2() -> Self {
        let e = vec![vec![0, 1], vec![0, 0]];
        let h = vec![vec![1, 0], vec![0, -1]];
        let f = vec![vec![0, 0], vec![1, 0]];
        Self::from_matrices(&["e", "h", "f"], &[e, h, f], &[1, 0, -1], &["f"])
    }

    fn sl3_with(n_labels: &[&str]) -> Self {
        let unit = |r: usize, c: usize| {
            let mut m = vec![vec![0; 3]; 3];
            m[r][c] = 1;
            m
        };
        let diag = |a: i64, b: i64, c: i64| vec![vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]];
        Self::from_matrices(
            &["e1", "e2", "e12", "h1", "h2", "f1", "f2", "f12"],
            &[unit(0, 1), unit(1, 2), unit(0, 2), diag(1, -1, 0), diag(0, 1, -1), unit(1, 0), unit(2, 1), unit(2, 0)],
            &[1, 1, 2, 0, 0, -1, -1, -2],
            n_labels,
        )
    }

    /// `sl3` with the principal grading and `n` the lower nilpotent
    /// subalgebra, a Heisenberg algebra.
    pub fn sl3_heisenberg() -> Self {
        Self::sl3_with(&["f1", "f2", "f12"])
    }

    /// `sl3` with the abelian `n = span(f2, f12)`.
    pub fn sl3_abelian() -> Self {
        Self::sl3_with(&["f2", "f12"])
    }

    /// Reads `deg <label> : <d>`, `bracket <a> <b> : (<c>, <coef>) ...` and
    /// `n : <labels>` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut degrees = Vec::new();
        let mut raw_brackets = Vec::new();
        let mut n_labels: Option<Vec<String>> = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: &str| Error::Parse(format!("line {}: {m}", lineno + 1));
            let (head, tail) = line.split_once(':').ok_or_else(|| err("missing ':'"))?;
            let words: Vec<&str> = head.split_whitespace().collect();
            match words.as_slice() {
                ["deg", l] => {
                    if labels.iter().any(|x| x == l) {
                        return Err(err("duplicate label"));
                    }
                    labels.push(l.to_string());
                    degrees.push(tail.trim().parse::<i64>().map_err(|_| err("bad degree"))?);
                }
                ["bracket", a, b] => {
                    let mut terms = Vec::new();
                    for chunk in tail.split(')') {
                        let chunk = chunk.trim().trim_start_matches(',').trim();
                        if chunk.is_empty() {
                            continue;
                        }
                        let inner = chunk.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
                        let (k, c) = inner.split_once(',').ok_or_else(|| err("expected (label, coefficient)"))?;
                        terms.push((k.trim().to_string(), parse_q(c).map_err(|_| err("bad coefficient"))?));
                    }
                    raw_brackets.push((a.to_string(), b.to_string(), terms, lineno + 1));
                }
                ["n"] => n_labels = Some(tail.split_whitespace().map(str::to_string).collect()),
                _ => return Err(err("unknown directive")),
            }
        }
        let find = |l: &str, line: usize| {
            labels.iter().position(|x| x == l).ok_or_else(|| Error::Parse(format!("line {line}: unknown label '{l}'")))
        };
        let mut constants = Vec::new();
        for (a, b, terms, line) in &raw_brackets {
            let (i, j) = (find(a, *line)?, find(b, *line)?);
            for (k, c) in terms {
                let k = find(k, *line)?;
                constants.push((i, j, k, *c));
                constants.push((j, i, k, -*c));
            }
        }
        let n_labels = n_labels.ok_or_else(|| Error::Parse("missing 'n :' line".into()))?;
        let n_basis = n_labels.iter().map(|l| find(l, 0)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_constants(labels, degrees, &constants, n_basis))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn n_dim(&self) -> usize {
        self.n_basis.len()
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.bracket[i][j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Q {
        self.bracket[i][j].iter().find(|(t, _)| *t == k).map(|&(_, c)| c).unwrap_or_else(Q::zero)
    }

    /// Bracket of two vectors of `g` in coordinates.
    pub fn bracket_vec(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, &b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for &(k, c) in &self.bracket[i][j] {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    pub fn in_n(&self, i: usize) -> bool {
        self.n_basis.contains(&i)
    }

    /// Complement `b`: the basis vectors of `g` outside `n`.
    pub fn b_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.in_n(i)).collect()
    }

    pub fn n_is_abelian(&self) -> bool {
        self.n_basis.iter().all(|&i| self.n_basis.iter().all(|&j| self.bracket[i][j].is_empty()))
    }

    /// The restriction of `c_ij^k` to `n`, indexed by positions in `n_basis`.
    pub fn n_constants(&self) -> Vec<(usize, usize, usize, Q)> {
        let pos: HashMap<usize, usize> = self.n_basis.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut out = Vec::new();
        for (pi, &i) in self.n_basis.iter().enumerate() {
            for (pj, &j) in self.n_basis.iter().enumerate() {
                for &(k, c) in &self.bracket[i][j] {
                    out.push((pi, pj, pos[&k], c));
                }
            }
        }
        out
    }

    /// Checks every hypothesis on `(g, n)`; the error names the first
    /// violated identity.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        let bad = |m: String| Err(Error::InvalidAlgebra(m));
        if self.degrees.len() != d {
            return bad("degree count differs from basis size".into());
        }
        let basis = |i: usize| {
            let mut v = vec![Q::zero(); d];
            v[i] = Q::one();
            v
        };
        for i in 0..d {
            for j in 0..d {
                let (x, y) = (basis(i), basis(j));
                let xy = self.bracket_vec(&x, &y);
                let yx = self.bracket_vec(&y, &x);
                if xy.iter().zip(&yx).any(|(a, b)| *a != -*b) {
                    return bad(format!("antisymmetry fails for [{}, {}]", self.labels[i], self.labels[j]));
                }
                for &(k, _) in &self.bracket[i][j] {
                    if self.degrees[k] != self.degrees[i] + self.degrees[j] {
                        return bad(format!(
                            "grading mismatch: [{}, {}] has a {} component",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (basis(i), basis(j), basis(k));
                    let a = self.bracket_vec(&x, &self.bracket_vec(&y, &z));
                    let b = self.bracket_vec(&y, &self.bracket_vec(&z, &x));
                    let c = self.bracket_vec(&z, &self.bracket_vec(&x, &y));
                    if (0..d).any(|t| !(a[t] + b[t] + c[t]).is_zero()) {
                        return bad(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        let mut seen = self.n_basis.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.n_basis.len() || self.n_basis.is_empty() {
            return bad("n must be a nonempty set of distinct basis vectors".into());
        }
        for &i in &self.n_basis {
            if self.degrees[i] >= 0 {
                return bad(format!("n element {} has degree {} >= 0", self.labels[i], self.degrees[i]));
            }
            for &j in &self.n_basis {
                if let Some(&(k, _)) = self.bracket[i][j].iter().find(|(k, _)| !self.in_n(*k)) {
                    return bad(format!(
                        "n is not closed: [{}, {}] has a {} component",
                        self.labels[i], self.labels[j], self.labels[k]
                    ));
                }
            }
            // ad-nilpotence on g: dim g + 1 iterations must vanish
            for j in 0..d {
                let mut v = basis(j);
                for _ in 0..=d {
                    v = self.bracket_vec(&basis(i), &v);
                }
                if v.iter().any(|c| !c.is_zero()) {
                    return bad(format!("ad {} is not nilpotent", self.labels[i]));
                }
            }
        }
        let c = self.n_constants();
        let m = self.n_dim();
        for k in 0..m {
            let s: Q = c.iter().filter(|t| t.2 == k).map(|t| t.3).sum();
            if !s.is_zero() {
                return bad(format!("sum of c_ij^k over i, j is nonzero for k = {}", self.labels[self.n_basis[k]]));
            }
        }
        for i in 0..m {
            let tr: Q = c.iter().filter(|t| t.0 == i && t.2 == t.1).map(|t| t.3).sum();
            if !tr.is_zero() {
                return bad(format!("ad {} has nonzero trace on n", self.labels[self.n_basis[i]]));
            }
        }
        Ok(())
    }

    /// `[ [n, n], ... ]` series restricted to `n`, as coordinate subspaces
    /// given by spanning vectors in `g` coordinates.
    pub fn lower_central_series(&self) -> Vec<Vec<Vec<Q>>> {
        let d = self.dim();
        let basis = |i: usize| {
            let mut v = vec![Q::zero(); d];
            v[i] = Q::one();
            v
        };
        let mut series = vec![self.n_basis.iter().map(|&i| basis(i)).collect::<Vec<_>>()];
        loop {
            let last = series.last().unwrap();
            let mut next = Vec::new();
            for &i in &self.n_basis {
                for v in last {
                    next.push(self.bracket_vec(&basis(i), v));
                }
            }
            let next = span_basis(&next);
            if next.is_empty() {
                series.push(next);
                return series;
            }
            if next.len() == last.len() {
                return series;
            }
            series.push(next);
        }
    }
}

/// Reduced row echelon basis of the span of some vectors.
pub fn span_basis(vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if vs.is_empty() {
        return Vec::new();
    }
    let mut m: Vec<Vec<_>> = vs.iter().map(|v| v.iter().map(|&q| linalg::from_q64(q)).collect()).collect();
    let piv = linalg::rref(&mut m);
    m.truncate(piv.len());
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    Q::new(
                        num_traits::ToPrimitive::to_i64(x.numer()).unwrap(),
                        num_traits::ToPrimitive::to_i64(x.denom()).unwrap(),
                    )
                })
                .collect()
        })
        .collect()
}

/// Enveloping algebra of the subalgebra spanned by `basis` (indices into
/// `g`), with PBW order given by the order of `basis`.
#[derive(Clone, Debug)]
pub struct Env<'a> {
    pub alg: &'a GradedLieAlgebra,
    pub basis: Vec<usize>,
    rank: Vec<Option<usize>>,
}

impl<'a> Env<'a> {
    pub fn new(alg: &'a GradedLieAlgebra, basis: Vec<usize>) -> Self {
        let mut rank = vec![None; alg.dim()];
        for (r, &i) in basis.iter().enumerate() {
            rank[i] = Some(r);
        }
        Env { alg, basis, rank }
    }

    /// `U(g)` with the complement before `n`, so that `n` sits on the right.
    pub fn of_g(alg: &'a GradedLieAlgebra) -> Self {
        let mut basis = alg.b_basis();
        basis.extend(&alg.n_basis);
        Self::new(alg, basis)
    }

    pub fn of_n(alg: &'a GradedLieAlgebra) -> Self {
        Self::new(alg, alg.n_basis.clone())
    }

    fn rank_of(&self, i: u16) -> usize {
        self.rank[i as usize].expect("generator outside the subalgebra")
    }

    pub fn degree(&self, w: &[u16]) -> i64 {
        w.iter().map(|&i| self.alg.degrees[i as usize]).sum()
    }

    /// Rewrites an arbitrary word into the PBW basis.
    pub fn straighten(&self, word: Word, coeff: Q) -> UElt {
        let mut out = UElt::new();
        let mut stack = vec![(word, coeff)];
        while let Some((w, c)) = stack.pop() {
            let descent = (0..w.len().saturating_sub(1)).find(|&p| self.rank_of(w[p]) > self.rank_of(w[p + 1]));
            match descent {
                None => add_into(&mut out, w, c),
                Some(p) => {
                    let (a, b) = (w[p] as usize, w[p + 1] as usize);
                    let mut swapped = w.clone();
                    swapped.swap(p, p + 1);
                    stack.push((swapped, c));
                    for &(k, ck) in self.alg.bracket(a, b) {
                        let mut nw = Vec::with_capacity(w.len() - 1);
                        nw.extend_from_slice(&w[..p]);
                        nw.push(k as u16);
                        nw.extend_from_slice(&w[p + 2..]);
                        stack.push((nw, c * ck));
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &UElt, b: &UElt) -> UElt {
        let mut out = UElt::new();
        for (wa, &ca) in a {
            for (wb, &cb) in b {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                for (r, c) in self.straighten(w, ca * cb) {
                    add_into(&mut out, r, c);
                }
            }
        }
        out
    }

    pub fn gen(&self, i: usize) -> UElt {
        UElt::from([(vec![i as u16], Q::one())])
    }

    pub fn word(&self, w: &[u16]) -> UElt {
        self.straighten(w.to_vec(), Q::one())
    }

    pub fn commutator(&self, a: &UElt, b: &UElt) -> UElt {
        sum(&self.mul(a, b), &self.mul(b, a), -Q::one())
    }

    /// Antipode: `g -> -g`, extended as an antiautomorphism.
    pub fn antipode(&self, x: &UElt) -> UElt {
        let mut out = UElt::new();
        for (w, &c) in x {
            let sign = if w.len() % 2 == 0 { c } else { -c };
            let rev: Word = w.iter().rev().copied().collect();
            for (r, v) in self.straighten(rev, sign) {
                add_into(&mut out, r, v);
            }
        }
        out
    }

    /// PBW monomials with at most `max_len` factors.
    pub fn monomials(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                let start = w.last().map(|&l| self.rank_of(l)).unwrap_or(0);
                for &i in &self.basis[start..] {
                    let mut nw: Word = w.clone();
                    nw.push(i as u16);
                    next.push(nw);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// PBW monomials of total degree `deg`; needs all generators negative.
    pub fn monomials_of_degree(&self, deg: i64) -> Vec<Word> {
        assert!(
            self.basis.iter().all(|&i| self.alg.degrees[i] < 0),
            "degree enumeration needs a negatively graded basis"
        );
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.fill_degree(deg, 0, &mut cur, &mut out);
        out
    }

    fn fill_degree(&self, rest: i64, start: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for r in start..self.basis.len() {
            let i = self.basis[r];
            let d = self.alg.degrees[i];
            if d >= rest {
                cur.push(i as u16);
                self.fill_degree(rest - d, r, cur, out);
                cur.pop();
            }
        }
    }

    /// Monomials with `|degree| <= bound`, by decreasing degree.
    pub fn monomials_up_to(&self, bound: i64) -> Vec<Word> {
        (0..=bound).flat_map(|d| self.monomials_of_degree(-d)).collect()
    }

    /// Coregular action `(x . f)(u) = f(u x)` on the dual PBW basis:
    /// returns `x . f_b` as a combination of dual basis vectors.
    pub fn coregular(&self, x: usize, b: &[u16]) -> UElt {
        let target = self.degree(b) - self.alg.degrees[x];
        let mut out = UElt::new();
        for c in self.monomials_of_degree(target) {
            let mut w = c.clone();
            w.push(x as u16);
            let coeff = self.straighten(w, Q::one()).get(b).copied().unwrap_or_else(Q::zero);
            add_into(&mut out, c, coeff);
        }
        out
    }

    /// Extends `coregular` to functionals.
    pub fn coregular_elt(&self, x: usize, f: &UElt) -> UElt {
        let mut out = UElt::new();
        for (b, &c) in f {
            for (w, v) in self.coregular(x, b) {
                add_into(&mut out, w, v * c);
            }
        }
        out
    }

    pub fn word_string(&self, w: &[u16]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&i| self.alg.labels[i as usize].as_str()).collect::<Vec<_>>().join(".")
    }

    pub fn elt_string(&self, x: &UElt) -> String {
        if x.is_empty() {
            return "0".into();
        }
        x.iter()
            .map(|(w, c)| {
                let sign = if *c < Q::zero() { "-" } else { "+" };
                let mag = c.abs();
                if mag.is_one() {
                    format!("{sign}{}", self.word_string(w))
                } else {
                    format!("{sign}{mag}*{}", self.word_string(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// One identity check: a name and an optional witness of failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub failure: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), failure: None }
    }

    pub fn fail(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check { name: name.into(), failure: Some(why.into()) }
    }

    pub fn from_result(name: impl Into<String>, r: std::result::Result<(), String>) -> Self {
        Check { name: name.into(), failure: r.err() }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{} PASS", self.name),
            Some(w) => write!(f, "{} FAIL {}", self.name, w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_algebras_validate() {
        GradedLieAlgebra::sl2().validate().unwrap();
        let h = GradedLieAlgebra::sl3_heisenberg();
        h.validate().unwrap();
        assert!(!h.n_is_abelian());
        GradedLieAlgebra::sl3_abelian().validate().unwrap();
        assert!(GradedLieAlgebra::sl3_abelian().n_is_abelian());
    }

    #[test]
    fn heisenberg_derived_algebra_is_center() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        let lcs = g.lower_central_series();
        assert_eq!(lcs.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 1, 0]);
        let f12 = g.labels.iter().position(|l| l == "f12").unwrap();
        assert!(lcs[1][0].iter().enumerate().all(|(i, c)| (i == f12) != c.is_zero()));
    }

    #[test]
    fn corrupted_jacobi_rejected() {
        let mut g = GradedLieAlgebra::sl3_heisenberg();
        let (e1, f1) = (0, 5);
        let h1 = 3;
        // [e1, f1] = h1 doubled breaks Jacobi
        g.bracket[e1][f1] = vec![(h1, Q::from(2))];
        g.bracket[f1][e1] = vec![(h1, Q::from(-2))];
        let err = g.validate().unwrap_err();
        assert!(err.to_string().contains("Jacobi"), "{err}");
    }

    #[test]
    fn other_rejections() {
        let mut g = GradedLieAlgebra::sl2();
        g.n_basis = vec![1];
        assert!(g.validate().unwrap_err().to_string().contains("degree"));
        let mut g = GradedLieAlgebra::sl2();
        g.degrees = vec![1, 0, -2];
        assert!(g.validate().unwrap_err().to_string().contains("grading"));
    }

    #[test]
    fn parse_roundtrip() {
        let text = "deg e : 1\ndeg h : 0\ndeg f : -1\n\
                    bracket e f : (h, 1)\nbracket h e : (e, 2)\nbracket h f : (f, -2)\nn : f\n";
        let g = GradedLieAlgebra::parse(text).unwrap();
        g.validate().unwrap();
        let s = GradedLieAlgebra::sl2();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(g.structure_constant(i, j, k), s.structure_constant(i, j, k));
                }
            }
        }
        assert!(GradedLieAlgebra::parse("deg e : 1\nn : x\n").is_err());
        assert!(GradedLieAlgebra::parse("deg e 1\n").is_err());
    }

    #[test]
    fn straightening_in_sl2() {
        let g = GradedLieAlgebra::sl2();
        let u = Env::of_g(&g);
        let (e, h, f) = (0u16, 1u16, 2u16);
        // order e < h < f
        let fe = u.word(&[f, e]);
        let expect = UElt::from([(vec![e, f], Q::one()), (vec![h], -Q::one())]);
        assert_eq!(fe, expect);
        // associativity on short words
        let ws = u.monomials(2);
        for a in &ws {
            for b in &ws {
                for c in &ws {
                    let (x, y, z) = (u.word(a), u.word(b), u.word(c));
                    assert_eq!(u.mul(&u.mul(&x, &y), &z), u.mul(&x, &u.mul(&y, &z)));
                }
            }
        }
    }

    #[test]
    fn pbw_dimensions_match_symmetric_algebra() {
        // dim U(n)_{-d} equals the number of multisets of generators of degree sum -d
        let g = GradedLieAlgebra::sl3_heisenberg();
        let n = Env::of_n(&g);
        let counts: Vec<usize> = (0..=6).map(|d| n.monomials_of_degree(-d).len()).collect();
        // generating function 1 / ((1-t)^2 (1-t^2))
        assert_eq!(counts, vec![1, 2, 4, 6, 9, 12, 16]);
        // straightening any word of degree -d lands in that span
        for w in Env::of_g(&g).monomials(3) {
            if w.iter().all(|&i| g.in_n(i as usize)) {
                let rev: Word = w.iter().rev().copied().collect();
                for (r, _) in n.word(&rev) {
                    assert_eq!(n.degree(&r), n.degree(&w));
                }
            }
        }
    }

    #[test]
    fn coregular_is_a_left_action() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        let n = Env::of_n(&g);
        for b in n.monomials_up_to(4) {
            let f = UElt::from([(b.clone(), Q::one())]);
            for &x in &g.n_basis {
                for &y in &g.n_basis {
                    let xy = n.coregular_elt(x, &n.coregular_elt(y, &f));
                    let yx = n.coregular_elt(y, &n.coregular_elt(x, &f));
                    let lhs = sum(&xy, &yx, -Q::one());
                    let mut rhs = UElt::new();
                    for &(k, c) in g.bracket(x, y) {
                        rhs = sum(&rhs, &n.coregular_elt(k, &f), c);
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn antipode_is_antiautomorphism() {
        let g = GradedLieAlgebra::sl2();
        let u = Env::of_g(&g);
        let ws = u.monomials(2);
        for a in &ws {
            for b in &ws {
                let (x, y) = (u.word(a), u.word(b));
                assert_eq!(u.antipode(&u.mul(&x, &y)), u.mul(&u.antipode(&y), &u.antipode(&x)));
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word() -> impl Strategy<Value = Word> {
            proptest::collection::vec(0u16..8, 0..4)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn straightening_is_associative(a in word(), b in word(), c in word()) {
                let g = GradedLieAlgebra::sl3_heisenberg();
                let env = Env::of_g(&g);
                let (a, b, c) = (env.word(&a), env.word(&b), env.word(&c));
                prop_assert_eq!(env.mul(&env.mul(&a, &b), &c), env.mul(&a, &env.mul(&b, &c)));
            }

            #[test]
            fn antipode_reverses_products(a in word(), b in word()) {
                let g = GradedLieAlgebra::sl3_heisenberg();
                let env = Env::of_g(&g);
                let (a, b) = (env.word(&a), env.word(&b));
                prop_assert_eq!(env.antipode(&env.mul(&a, &b)), env.mul(&env.antipode(&b), &env.antipode(&a)));
                prop_assert_eq!(env.antipode(&env.antipode(&a)), a);
            }

            #[test]
            fn coregular_is_a_left_action(x in 0usize..3, y in 0usize..3, b in proptest::collection::vec(5u16..8, 0..4)) {
                let g = GradedLieAlgebra::sl3_heisenberg();
                let env = Env::of_n(&g);
                let b = env.word(&b).into_keys().next().unwrap_or_default();
                let (x, y) = (g.n_basis[x], g.n_basis[y]);
                let f = UElt::from([(b, Q::one())]);
                let lhs = sum(
                    &env.coregular_elt(x, &env.coregular_elt(y, &f)),
                    &env.coregular_elt(y, &env.coregular_elt(x, &f)),
                    -Q::one(),
                );
                let mut rhs = UElt::new();
                for &(k, c) in g.bracket(x, y) {
                    rhs = sum(&rhs, &env.coregular_elt(k, &f), c);
                }
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
