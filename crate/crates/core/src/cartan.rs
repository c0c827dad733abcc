//! Affine Cartan data: marks, the finite (co)root system, weights with an
//! explicit δ-coefficient, the invariant form and root-lattice offsets.
//!
//! Conventions: `a[i][j] = <h_i, alpha_j>` for `i, j` in `0..=r`. Coroots
//! live in `V` with basis `h_0..h_r`; weights are recorded by their values
//! `m_i = <h_i, lambda>` plus the coefficient of δ. The simple root
//! `alpha_0` is lifted as `delta - theta`, so it carries δ-coefficient 1.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;

pub type Q = Rational64;

/// One root of the finite system, stored together with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRoot {
    /// Coordinates in `h_1..h_r`.
    pub coroot: Vec<i64>,
    /// Coordinates in `alpha_1..alpha_r` (the image `h'` of the coroot).
    pub root: Vec<i64>,
    pub d: i64,
    pub d_hat: i64,
}

impl FiniteRoot {
    pub fn is_positive(&self) -> bool {
        self.coroot.iter().all(|&x| x >= 0)
    }

    pub fn height(&self) -> i64 {
        self.root.iter().sum()
    }
}

/// Irreducible untwisted affine Cartan matrix with its marks.
#[derive(Clone, Debug)]
pub struct AffineCartan {
    pub rank: usize,
    pub a: Vec<Vec<i64>>,
    /// Symmetrizer `d_i`: `d_i a_ij = d_j a_ji`, smallest entry 1.
    pub sym: Vec<i64>,
    /// Left kernel `r_i`; the central element is `c = sum r_i h_i`.
    pub comarks: Vec<i64>,
    /// Right kernel `r'_i`; `delta = sum r'_i alpha_i`.
    pub marks: Vec<i64>,
    pub d_max: i64,
    pub d_hat: Vec<i64>,
    roots: Vec<FiniteRoot>,
    root_index: HashMap<Vec<i64>, usize>,
    highest: usize,
    /// `(varpi_i, varpi_j)` for `i, j` in `1..=r`, normalized by `(theta, theta) = 2`.
    fund_gram: Vec<Vec<Q>>,
}

/// `(coroot, root, d)` for each finite root.
type RootPair = (Vec<i64>, Vec<i64>, i64);

fn finite_pairs(f: &[Vec<i64>], sym: &[i64]) -> Result<Vec<RootPair>> {
    let r = f.len();
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut origin: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        if seen.insert(e.clone(), e.clone()).is_none() {
            origin.insert(e.clone(), sym[i]);
            queue.push_back(e);
        }
    }
    while let Some(x) = queue.pop_front() {
        let y = seen[&x].clone();
        let d = origin[&x];
        for j in 0..r {
            let px: i64 = (0..r).map(|k| f[j][k] * x[k]).sum();
            let py: i64 = (0..r).map(|k| y[k] * f[k][j]).sum();
            let mut x2 = x.clone();
            x2[j] -= px;
            let mut y2 = y.clone();
            y2[j] -= py;
            if !seen.contains_key(&x2) {
                if seen.len() > 2000 {
                    return Err(Error::NotAffine("finite submatrix is not of finite type".into()));
                }
                seen.insert(x2.clone(), y2);
                origin.insert(x2.clone(), d);
                queue.push_back(x2);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().map(|(x, y)| (y, x.clone(), origin[&x])).collect();
    for (y, x, _) in &out {
        let sx = x.iter().all(|&v| v >= 0) || x.iter().all(|&v| v <= 0);
        let sy = y.iter().all(|&v| v >= 0) || y.iter().all(|&v| v <= 0);
        if !sx || !sy {
            return Err(Error::NotAffine("finite submatrix is not of finite type".into()));
        }
    }
    out.sort_by_key(|(_, x, _)| {
        let h: i64 = x.iter().sum();
        (h <= 0, h.abs(), if h > 0 { x.clone() } else { x.iter().map(|v| -v).collect() })
    });
    Ok(out)
}

fn finite_cartan(letter: char, n: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::Parse(format!("unsupported type {letter}{n}"));
    let mut f = vec![vec![0i64; n]; n];
    for i in 0..n {
        f[i][i] = 2;
    }
    let chain = |f: &mut Vec<Vec<i64>>, len: usize| {
        for i in 0..len.saturating_sub(1) {
            f[i][i + 1] = -1;
            f[i + 1][i] = -1;
        }
    };
    match letter {
        'A' if n >= 1 => chain(&mut f, n),
        'B' if n >= 2 => {
            chain(&mut f, n);
            f[n - 1][n - 2] = -2;
        }
        'C' if n >= 2 => {
            chain(&mut f, n);
            f[n - 2][n - 1] = -2;
        }
        'D' if n >= 4 => {
            chain(&mut f, n - 1);
            f[n - 3][n - 1] = -1;
            f[n - 1][n - 3] = -1;
        }
        'E' if (6..=8).contains(&n) => {
            // Bourbaki numbering: 1-3-4-5-6(-7-8) with 2 attached to 4.
            let edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
            for &(i, j) in &edges {
                if i <= n && j <= n {
                    f[i - 1][j - 1] = -1;
                    f[j - 1][i - 1] = -1;
                }
            }
        }
        'F' if n == 4 => {
            chain(&mut f, 4);
            f[2][1] = -2;
        }
        'G' if n == 2 => {
            f[0][1] = -3;
            f[1][0] = -1;
        }
        _ => return Err(bad()),
    }
    Ok(f)
}

fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::from_integer(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].unwrap();
        for j in 0..n {
            if j == i || a[i][j] == 0 {
                continue;
            }
            let dj = di * Q::from_integer(a[i][j]) / Q::from_integer(a[j][i]);
            match d[j] {
                None => {
                    d[j] = Some(dj);
                    queue.push_back(j);
                }
                Some(old) if old != dj => {
                    return Err(Error::NotAffine("matrix is not symmetrizable".into()));
                }
                _ => {}
            }
        }
    }
    if d.iter().any(|x| x.is_none()) {
        return Err(Error::NotAffine("Dynkin diagram is not connected".into()));
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.unwrap()).collect();
    let l = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * Q::from_integer(l)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    let ints: Vec<i64> = ints.iter().map(|x| x / g).collect();
    if ints.iter().any(|&x| x <= 0) {
        return Err(Error::NotAffine("symmetrizer is not positive".into()));
    }
    Ok(ints)
}

fn kernel_vector(m: &[Vec<i64>], what: &str) -> Result<Vec<i64>> {
    let n = m.len();
    let big = linalg::int_matrix(m);
    let ker = linalg::nullspace(&big, n);
    if ker.len() != 1 {
        return Err(Error::NotAffine(format!("{what} kernel has dimension {}", ker.len())));
    }
    let v = linalg::primitive_integer(&ker[0]);
    let v: Vec<i64> = v.iter().map(|x| x.to_i64().unwrap()).collect();
    if v.iter().any(|&x| x <= 0) {
        return Err(Error::NotAffine(format!("{what} kernel is not strictly positive")));
    }
    if v[0] != 1 {
        return Err(Error::NotAffine(format!("{what} kernel has entry {} at node 0", v[0])));
    }
    Ok(v)
}

impl AffineCartan {
    /// Computes the marks of an irreducible untwisted affine Cartan matrix.
    pub fn solve_marks(a: Vec<Vec<i64>>) -> Result<Self> {
        let n = a.len();
        if n < 2 || a.iter().any(|row| row.len() != n) {
            return Err(Error::NotAffine("matrix must be square of size at least 2".into()));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::NotAffine(format!("diagonal entry a[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                    return Err(Error::NotAffine(format!("bad off-diagonal pair at ({i},{j})")));
                }
            }
        }
        let sym = symmetrizer(&a)?;
        let at = linalg::transpose(&a);
        let comarks = kernel_vector(&at, "left")?;
        let marks = kernel_vector(&a, "right")?;
        let d_max = *sym.iter().max().unwrap();
        if !(1..=3).contains(&d_max) || sym.iter().any(|&d| d != 1 && d != d_max) {
            return Err(Error::NotAffine(format!("unexpected symmetrizer {sym:?}")));
        }
        let d_hat: Vec<i64> = sym.iter().map(|d| d_max / d).collect();
        let r = n - 1;
        let fin: Vec<Vec<i64>> = (1..n).map(|i| a[i][1..].to_vec()).collect();
        let pairs = finite_pairs(&fin, &sym[1..])?;
        let roots: Vec<FiniteRoot> =
            pairs.into_iter().map(|(coroot, root, d)| FiniteRoot { coroot, root, d, d_hat: d_max / d }).collect();
        let root_index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, x)| (x.coroot.clone(), k)).collect();
        let theta_coroot = comarks[1..].to_vec();
        let highest = *root_index.get(&theta_coroot).ok_or_else(|| {
            Error::NotAffine("sum of r_i h_i over finite nodes is not a coroot (twisted type?)".into())
        })?;
        if roots[highest].root != marks[1..] || roots[highest].d_hat != 1 {
            return Err(Error::NotAffine("node 0 does not extend by the highest root".into()));
        }
        let fin_big = linalg::int_matrix(&fin);
        let mut inv = Vec::new();
        for j in 0..r {
            let mut e = vec![linalg::big(0); r];
            e[j] = linalg::big(1);
            let col = linalg::solve(&fin_big, &e).ok_or_else(|| Error::NotAffine("finite part is singular".into()))?;
            inv.push(col);
        }
        // inv[j][i] = (A^-1)_{ij}
        let to_q = |x: &linalg::BigQ| Q::new(x.numer().to_i64().unwrap(), x.denom().to_i64().unwrap());
        let fund_gram: Vec<Vec<Q>> =
            (0..r).map(|i| (0..r).map(|j| to_q(&inv[i][j]) * Q::new(sym[j + 1], d_max)).collect()).collect();
        Ok(AffineCartan { rank: r, a, sym, comarks, marks, d_max, d_hat, roots, root_index, highest, fund_gram })
    }

    /// Untwisted affinization of a finite type such as `A1`, `C2`, `G2`.
    pub fn from_type(name: &str) -> Result<Self> {
        let name = name.trim();
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(|| Error::Parse("empty type name".into()))?.to_ascii_uppercase();
        let n: usize = chars
            .as_str()
            .trim_end_matches("(1)")
            .parse()
            .map_err(|_| Error::Parse(format!("bad type name {name:?}")))?;
        let f = finite_cartan(letter, n)?;
        let ones = vec![1; n];
        let pairs = finite_pairs(&f, &ones)?;
        let (theta_co, theta) =
            pairs.iter().max_by_key(|(_, x, _)| x.iter().sum::<i64>()).map(|(y, x, _)| (y.clone(), x.clone())).unwrap();
        let mut a = vec![vec![0i64; n + 1]; n + 1];
        a[0][0] = 2;
        for j in 1..=n {
            a[0][j] = -(0..n).map(|i| theta_co[i] * f[i][j - 1]).sum::<i64>();
            a[j][0] = -(0..n).map(|k| f[j - 1][k] * theta[k]).sum::<i64>();
            a[j][1..].copy_from_slice(&f[j - 1]);
        }
        Self::solve_marks(a)
    }

    /// Parses a whitespace-separated integer grid, one row per line.
    pub fn parse_matrix(text: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::solve_marks(rows)
    }

    pub fn size(&self) -> usize {
        self.rank + 1
    }

    pub fn finite_roots(&self) -> &[FiniteRoot] {
        &self.roots
    }

    pub fn finite_root_index(&self, coroot: &[i64]) -> Option<usize> {
        self.root_index.get(coroot).copied()
    }

    /// Index of the highest root θ in the finite root list.
    pub fn highest_root(&self) -> usize {
        self.highest
    }

    /// Index of the finite simple coroot `h_i`, `i` in `1..=r`.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut e = vec![0; self.rank];
        e[i - 1] = 1;
        self.root_index[&e]
    }

    /// `<y, alpha_j>` for `y` in h-coordinates.
    pub fn pair_coroot_root(&self, y: &[i64], j: usize) -> i64 {
        (0..self.size()).map(|i| y[i] * self.a[i][j]).sum()
    }

    pub fn level(&self, w: &AffineWeight) -> i64 {
        self.comarks.iter().zip(&w.m).map(|(r, m)| r * m).sum()
    }

    pub fn rho(&self) -> AffineWeight {
        AffineWeight { m: vec![1; self.size()], n: Q::zero() }
    }

    pub fn fundamental(&self, i: usize) -> AffineWeight {
        let mut m = vec![0; self.size()];
        m[i] = 1;
        AffineWeight { m, n: Q::zero() }
    }

    pub fn delta(&self) -> AffineWeight {
        AffineWeight { m: vec![0; self.size()], n: Q::from_integer(1) }
    }

    /// The simple root `alpha_j` as an extended weight.
    pub fn simple_root(&self, j: usize) -> AffineWeight {
        AffineWeight {
            m: (0..self.size()).map(|i| self.a[i][j]).collect(),
            n: Q::from_integer(if j == 0 { 1 } else { 0 }),
        }
    }

    /// `lambda - sum b_i alpha_i`.
    pub fn sub_roots(&self, lambda: &AffineWeight, b: &[i64]) -> AffineWeight {
        let mut m = lambda.m.clone();
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                for (i, mi) in m.iter_mut().enumerate() {
                    *mi -= bj * self.a[i][j];
                }
            }
        }
        AffineWeight { m, n: lambda.n - Q::from_integer(b[0]) }
    }

    /// `s_i` on `V`: `y - <y, alpha_i> h_i`.
    pub fn reflect_coroot(&self, i: usize, y: &[i64]) -> Vec<i64> {
        let p = self.pair_coroot_root(y, i);
        let mut out = y.to_vec();
        out[i] -= p;
        out
    }

    /// `s_i` on extended weights: `x - <h_i, x> alpha_i`.
    pub fn reflect_weight(&self, i: usize, x: &AffineWeight) -> AffineWeight {
        let p = x.m[i];
        let mut b = vec![0; self.size()];
        b[i] = p;
        self.sub_roots(x, &b)
    }

    /// Membership of `y` (h-coordinates) in the affine root system, returned
    /// as (finite root index, coefficient of `c`).
    pub fn root_decompose(&self, y: &[i64]) -> Option<(usize, i64)> {
        let k = y[0];
        let fin: Vec<i64> = (1..self.size()).map(|i| y[i] - k * self.comarks[i]).collect();
        let idx = *self.root_index.get(&fin)?;
        (k % self.roots[idx].d_hat == 0).then_some((idx, k))
    }

    pub fn is_root(&self, y: &[i64]) -> bool {
        self.root_decompose(y).is_some()
    }

    /// h-coordinates of `beta + k c`.
    pub fn affine_coroot(&self, fin: usize, k: i64) -> Vec<i64> {
        let mut y = vec![k; 1];
        y.extend((1..self.size()).map(|i| self.roots[fin].coroot[i - 1] + k * self.comarks[i]));
        y
    }

    /// The lift `(beta + d_hat m c)' = beta' + m delta` as an extended weight.
    pub fn coroot_to_root(&self, fin: usize, k: i64) -> AffineWeight {
        let fr = &self.roots[fin];
        let m = (0..self.size()).map(|i| (1..self.size()).map(|j| self.a[i][j] * fr.root[j - 1]).sum()).collect();
        AffineWeight { m, n: Q::new(k, fr.d_hat) }
    }

    fn finite_form_labels(&self, x: &[i64], y: &[i64]) -> Q {
        let mut s = Q::zero();
        for i in 1..self.size() {
            if x[i] == 0 {
                continue;
            }
            for j in 1..self.size() {
                if y[j] != 0 {
                    s += self.fund_gram[i - 1][j - 1] * Q::from_integer(x[i] * y[j]);
                }
            }
        }
        s
    }

    /// `(varpi_bar, z)` for `z` in alpha-coordinates of the finite root lattice.
    pub fn finite_pair_weight_root(&self, x: &AffineWeight, z: &[i64]) -> Q {
        (1..self.size()).map(|j| Q::new(x.m[j] * z[j - 1] * self.sym[j], self.d_max)).sum()
    }

    /// `(z, z)` for `z` in alpha-coordinates of the finite root lattice.
    pub fn finite_root_norm(&self, z: &[i64]) -> Q {
        let mut s = Q::zero();
        for i in 1..self.size() {
            for j in 1..self.size() {
                s += Q::new(z[i - 1] * z[j - 1] * self.a[i][j] * self.sym[i], self.d_max);
            }
        }
        s
    }

    /// Invariant form with `(theta, theta) = 2`:
    /// `(l, m) = (l_bar, m_bar) + k_l n_m + k_m n_l`.
    pub fn invariant_form(&self, l: &AffineWeight, m: &AffineWeight) -> Q {
        self.finite_form_labels(&l.m, &m.m)
            + Q::from_integer(self.level(l)) * m.n
            + Q::from_integer(self.level(m)) * l.n
    }

    pub fn casimir_eigenvalue(&self, nu: &AffineWeight) -> Q {
        let x = nu.add(&self.rho());
        self.invariant_form(&x, &x)
    }

    pub fn is_dominant(&self, lambda: &AffineWeight, k: i64) -> bool {
        self.level(lambda) == k && lambda.m.iter().all(|&x| x >= 0)
    }

    /// Solves `lambda - mu = sum b_i alpha_i` with `b` nonnegative integral.
    pub fn weight_diff(&self, lambda: &AffineWeight, mu: &AffineWeight) -> Result<RootLatticeVector> {
        let diff = lambda.sub(mu);
        let err = || Error::NotInRootCone(format!("({lambda}) - ({mu})"));
        if !diff.n.is_integer() || self.level(&diff) != 0 {
            return Err(err());
        }
        let b0 = diff.n.to_integer();
        let fin: Vec<Vec<linalg::BigQ>> =
            (1..self.size()).map(|i| self.a[i][1..].iter().map(|&x| linalg::big(x)).collect()).collect();
        let rhs: Vec<linalg::BigQ> = (1..self.size()).map(|i| linalg::big(diff.m[i])).collect();
        let x = linalg::solve(&fin, &rhs).ok_or_else(err)?;
        let mut b = vec![b0];
        for (j, v) in x.iter().enumerate() {
            if !v.is_integer() {
                return Err(err());
            }
            b.push(v.to_integer().to_i64().unwrap() + b0 * self.marks[j + 1]);
        }
        if b.iter().any(|&v| v < 0) {
            return Err(err());
        }
        let v = RootLatticeVector { b };
        debug_assert_eq!(&self.sub_roots(lambda, &v.b), mu);
        Ok(v)
    }

    /// Parses `m0,m1,...,mr[;n]` or a sum of fundamental weights such as
    /// `2L0`, `Λ0+Λ1`, `rho`.
    pub fn parse_weight(&self, text: &str) -> Result<AffineWeight> {
        let t = text.trim();
        if t.contains(',') || t.chars().all(|c| c.is_ascii_digit() || c == '-') {
            let w: AffineWeight = t.replace(',', " ").parse()?;
            if w.m.len() != self.size() {
                return Err(Error::Parse(format!("weight needs {} entries", self.size())));
            }
            return Ok(w);
        }
        let mut m = vec![0i64; self.size()];
        for term in t.split('+') {
            let term = term.trim();
            if term.eq_ignore_ascii_case("rho") || term == "ρ" {
                m.iter_mut().for_each(|x| *x += 1);
                continue;
            }
            let split = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let coef: i64 = if split == 0 { 1 } else { term[..split].parse().unwrap() };
            let rest = &term[split..];
            let idx = ["Λ", "Lambda", "L"]
                .iter()
                .find_map(|p| rest.strip_prefix(p))
                .ok_or_else(|| Error::Parse(format!("bad weight term {term:?}")))?;
            let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad weight index {idx:?}")))?;
            if i >= self.size() {
                return Err(Error::Parse(format!("weight index {i} out of range")));
            }
            m[i] += coef;
        }
        Ok(AffineWeight { m, n: Q::zero() })
    }
}

/// Extended affine weight: values on `h_0..h_r` and the δ-coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    pub m: Vec<i64>,
    pub n: Q,
}

impl AffineWeight {
    pub fn add(&self, o: &Self) -> Self {
        AffineWeight { m: self.m.iter().zip(&o.m).map(|(a, b)| a + b).collect(), n: self.n + o.n }
    }

    pub fn sub(&self, o: &Self) -> Self {
        AffineWeight { m: self.m.iter().zip(&o.m).map(|(a, b)| a - b).collect(), n: self.n - o.n }
    }

    pub fn scale(&self, k: i64) -> Self {
        AffineWeight { m: self.m.iter().map(|a| a * k).collect(), n: self.n * Q::from_integer(k) }
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.m.iter().map(|x| x.to_string()).collect();
        write!(f, "{} ; {}", parts.join(" "), self.n)
    }
}

impl FromStr for AffineWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (ms, ns) = match s.split_once(';') {
            Some((a, b)) => (a, b.trim()),
            None => (s, "0"),
        };
        let m = ms
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad weight entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if m.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        let n = match ns.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad rational {ns:?}")))?;
                let q: i64 = q.trim().parse().map_err(|_| Error::Parse(format!("bad rational {ns:?}")))?;
                if q == 0 {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Q::new(p, q)
            }
            None => Q::from_integer(ns.parse().map_err(|_| Error::Parse(format!("bad rational {ns:?}")))?),
        };
        Ok(AffineWeight { m, n })
    }
}

/// Coordinates of a difference of weights in the simple roots `alpha_0..alpha_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootLatticeVector {
    pub b: Vec<i64>,
}

impl RootLatticeVector {
    pub fn zero(size: usize) -> Self {
        RootLatticeVector { b: vec![0; size] }
    }

    pub fn hgt(&self) -> i64 {
        self.b.iter().sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        RootLatticeVector { b: self.b.iter().zip(&o.b).map(|(x, y)| x + y).collect() }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.b.iter().all(|&x| x >= 0)
    }
}

impl fmt::Display for RootLatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Coordinates `b` of an affine coroot in `h_0..h_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub b: Vec<i64>,
}

impl AffineRoot {
    pub fn is_positive(&self) -> bool {
        self.b.iter().all(|&x| x >= 0)
    }

    pub fn neg(&self) -> Self {
        AffineRoot { b: self.b.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Checks the three defining identities of the marks.
pub fn marks_conditions_hold(c: &AffineCartan) -> bool {
    let n = c.size();
    let sym_ok =
        (0..n).all(|i| (0..n).all(|j| c.sym[i] * c.a[i][j] == c.sym[j] * c.a[j][i])) && c.sym.iter().min() == Some(&1);
    let left_ok = (0..n).all(|j| (0..n).map(|i| c.comarks[i] * c.a[i][j]).sum::<i64>() == 0) && c.comarks[0] == 1;
    let right_ok = (0..n).all(|i| (0..n).map(|j| c.marks[j] * c.a[i][j]).sum::<i64>() == 0) && c.marks[0] == 1;
    let positive = c.sym.iter().chain(&c.comarks).chain(&c.marks).all(|&x| x > 0);
    let d_ok = (1..=3).contains(&c.d_max) && (0..n).all(|i| c.sym[i] * c.d_hat[i] == c.d_max);
    sym_ok && left_ok && right_ok && positive && d_ok
}
