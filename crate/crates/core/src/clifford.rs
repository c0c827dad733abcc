//! The Clifford algebra of `n + n*` with its canonical pairing, its two
//! induced modules and the reversal antiautomorphism.
//!
//! Monomials are normal ordered as `e_I e*_J` with both index sets
//! ascending; subsets of `{1..n}` are bitmasks with bit `i-1` for index `i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordElt {
    pub n: usize,
    terms: BTreeMap<(u32, u32), i64>,
}

/// Sign of moving a generator with index `i` past the members of `set`
/// below it.
fn below_sign(set: u32, i: usize) -> i64 {
    if (set & ((1u32 << i) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn parity(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn indices(mask: u32) -> impl DoubleEndedIterator<Item = usize> {
    (0..32).filter(move |b| mask >> b & 1 == 1)
}

pub fn full_set(n: usize) -> u32 {
    (1u32 << n) - 1
}

/// Generator of the algebra: `e_i` or `e*_i` (0-based index).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gen {
    E(usize),
    Star(usize),
}

impl CliffordElt {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N, "n = {n} exceeds {MAX_N}");
        CliffordElt { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, 0)
    }

    pub fn monomial(n: usize, i: u32, j: u32) -> Self {
        let mut x = Self::zero(n);
        x.add_term(i, j, 1);
        x
    }

    /// `e_i`, 1-based.
    pub fn e(n: usize, i: usize) -> Self {
        Self::monomial(n, 1 << (i - 1), 0)
    }

    /// `e*_i`, 1-based.
    pub fn e_star(n: usize, i: usize) -> Self {
        Self::monomial(n, 0, 1 << (i - 1))
    }

    /// Ordered product `e_I` of the indices in `set`.
    pub fn e_set(n: usize, set: u32) -> Self {
        Self::monomial(n, set, 0)
    }

    pub fn e_star_set(n: usize, set: u32) -> Self {
        Self::monomial(n, 0, set)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, i: u32, j: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), &c) in &o.terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), &c) in &self.terms {
            out.add_term(i, j, k * c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    /// Left multiplication by a generator.
    fn gen_left(&self, g: Gen) -> Self {
        let mut out = Self::zero(self.n);
        for (&(k, l), &c) in &self.terms {
            match g {
                Gen::E(i) => {
                    if k >> i & 1 == 0 {
                        out.add_term(k | 1 << i, l, c * below_sign(k, i));
                    }
                }
                Gen::Star(i) => {
                    // e*_i e_K = [i in K] (+-) e_{K\i} + (-1)^{|K|} e_K e*_i
                    if k >> i & 1 == 1 {
                        out.add_term(k & !(1 << i), l, c * below_sign(k, i));
                    }
                    if l >> i & 1 == 0 {
                        out.add_term(k, l | 1 << i, c * parity(k.count_ones()) * below_sign(l, i));
                    }
                }
            }
        }
        out
    }

    fn generators(i: u32, j: u32) -> Vec<Gen> {
        indices(i).map(Gen::E).chain(indices(j).map(Gen::Star)).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let mut out = Self::zero(self.n);
        for (&(i, j), &c) in &self.terms {
            let mut acc = o.clone();
            for g in Self::generators(i, j).into_iter().rev() {
                acc = acc.gen_left(g);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Reversal of generator words; on `Lambda^k` it is `(-1)^{[k/2]}`.
    pub fn sigma(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), &c) in &self.terms {
            let mut acc = Self::one(self.n);
            for g in Self::generators(i, j) {
                acc = acc.gen_left(g);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Action on the module induced from the trivial `Lambda(n*)`-module
    /// (basis `e_K`): multiply, then drop terms containing some `e*`.
    pub fn act_stan(&self, v: &BTreeMap<u32, i64>) -> BTreeMap<u32, i64> {
        let mut out = BTreeMap::new();
        for (&k, &c) in v {
            let prod = self.mul(&Self::monomial(self.n, k, 0).scale(c));
            for ((i, j), d) in prod.terms() {
                if j == 0 {
                    *out.entry(i).or_insert(0) += d;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Action on the module induced from the trivial `Lambda(n)`-module
    /// (basis `e*_L`), by generator rules.
    pub fn act_cost(&self, v: &BTreeMap<u32, i64>) -> BTreeMap<u32, i64> {
        let mut out = BTreeMap::new();
        for (&(i, j), &c) in &self.terms {
            let mut cur: BTreeMap<u32, i64> = v.iter().map(|(&k, &x)| (k, x * c)).collect();
            for g in Self::generators(i, j).into_iter().rev() {
                let mut next = BTreeMap::new();
                for (&l, &x) in &cur {
                    match g {
                        Gen::Star(t) if l >> t & 1 == 0 => {
                            *next.entry(l | 1 << t).or_insert(0) += x * below_sign(l, t);
                        }
                        Gen::E(t) if l >> t & 1 == 1 => {
                            *next.entry(l & !(1 << t)).or_insert(0) += x * below_sign(l, t);
                        }
                        _ => {}
                    }
                }
                cur = next;
            }
            for (l, x) in cur {
                *out.entry(l).or_insert(0) += x;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Matrix on the `e_K` basis: entry `[J][I]` is the `e_J` coefficient of `x e_I`.
    pub fn stan_matrix(&self) -> Vec<Vec<i64>> {
        module_matrix(self.n, |v| self.act_stan(v))
    }

    pub fn cost_matrix(&self) -> Vec<Vec<i64>> {
        module_matrix(self.n, |v| self.act_cost(v))
    }
}

fn module_matrix(n: usize, act: impl Fn(&BTreeMap<u32, i64>) -> BTreeMap<u32, i64>) -> Vec<Vec<i64>> {
    let d = 1usize << n;
    let mut m = vec![vec![0; d]; d];
    for col in 0..d {
        let img = act(&BTreeMap::from([(col as u32, 1)]));
        for (row, c) in img {
            m[row as usize][col] = c;
        }
    }
    m
}

/// Rank of the span of all basis monomials inside `End` of the `e_K` module.
pub fn stan_image_rank(n: usize) -> usize {
    let d = 1u32 << n;
    let rows: Vec<Vec<i64>> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| CliffordElt::monomial(n, i, j).stan_matrix().concat())
        .collect();
    crate::linalg::rank(&crate::linalg::int_matrix(&rows))
}

/// Degree of `e_I e*_J` when `e_i` has degree `degs[i]` and `e*_i` the opposite.
pub fn monomial_degree(degs: &[i64], i: u32, j: u32) -> i64 {
    indices(i).map(|t| degs[t]).sum::<i64>() - indices(j).map(|t| degs[t]).sum::<i64>()
}

/// `e_J e*_{1..n} e_I`.
pub fn matrix_unit(n: usize, i: u32, j: u32) -> CliffordElt {
    CliffordElt::e_set(n, j).mul(&CliffordElt::e_star_set(n, full_set(n))).mul(&CliffordElt::e_set(n, i))
}

/// The single nonzero entry `(row, col, value)` of a matrix, if there is
/// exactly one.
pub fn single_entry(m: &[Vec<i64>]) -> Option<(usize, usize, i64)> {
    let mut found = None;
    for (r, row) in m.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v != 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((r, c, v));
            }
        }
    }
    found
}

/// Outcome of checking the matrix-unit identity at one `(I, J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCheck {
    pub i: u32,
    pub j: u32,
    /// Stan: single entry at `e_{complement I} -> e_J`; the value is its sign.
    pub stan_sign: Option<i64>,
    /// Cost: single entry at `e*_I -> e*_{complement J}`.
    pub cost_sign: Option<i64>,
}

pub fn check_matrix_unit(n: usize, i: u32, j: u32) -> UnitCheck {
    let u = matrix_unit(n, i, j);
    let full = full_set(n);
    let at = |m: &[Vec<i64>], row: u32, col: u32| {
        single_entry(m).and_then(|(r, c, v)| (r == row as usize && c == col as usize && v.abs() == 1).then_some(v))
    };
    UnitCheck { i, j, stan_sign: at(&u.stan_matrix(), j, full & !i), cost_sign: at(&u.cost_matrix(), full & !j, i) }
}

/// Inverse of the representation on `e*` basis: takes the matrix with entry
/// `[L][K]` = coefficient of `e*_L` in the image of `e*_K`.
pub struct CostInverse {
    n: usize,
    units: HashMap<(u32, u32), CliffordElt>,
}

impl CostInverse {
    pub fn new(n: usize) -> Self {
        CostInverse { n, units: HashMap::new() }
    }

    /// Element acting exactly as `e*_K -> e*_L`.
    fn unit(&mut self, k: u32, l: u32) -> Result<CliffordElt> {
        if let Some(u) = self.units.get(&(k, l)) {
            return Ok(u.clone());
        }
        let n = self.n;
        let comp = full_set(n) & !l;
        let sign = check_matrix_unit(n, k, comp)
            .cost_sign
            .ok_or_else(|| Error::Mismatch(format!("no matrix unit for ({k:b}, {l:b})")))?;
        let u = matrix_unit(n, k, comp).scale(sign);
        self.units.insert((k, l), u.clone());
        Ok(u)
    }

    pub fn apply(&mut self, m: &[Vec<i64>]) -> Result<CliffordElt> {
        let mut out = CliffordElt::zero(self.n);
        for (l, row) in m.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                if v != 0 {
                    out = out.add(&self.unit(k as u32, l as u32)?.scale(v));
                }
            }
        }
        Ok(out)
    }
}

/// Checks `gamma(beta(alpha(x))) = sigma(x)` on every basis monomial, where
/// `alpha` is the representation on the `e_K` basis, `beta` sends the matrix
/// unit `e_I -> e_J` to `e*_J -> e*_I`, and `gamma` inverts the
/// representation on the `e*_K` basis. Returns the first violating monomial.
pub fn ident_check(n: usize) -> std::result::Result<(), (u32, u32)> {
    let mut gamma = CostInverse::new(n);
    let d = 1u32 << n;
    for i in 0..d {
        for j in 0..d {
            let x = CliffordElt::monomial(n, i, j);
            let a = x.stan_matrix();
            let b: Vec<Vec<i64>> = (0..d as usize).map(|r| (0..d as usize).map(|c| a[c][r]).collect()).collect();
            match gamma.apply(&b) {
                Ok(g) if g == x.sigma() => {}
                _ => return Err((i, j)),
            }
        }
    }
    Ok(())
}

fn set_word(prefix: &str, mask: u32) -> Vec<String> {
    indices(mask).map(|i| format!("{prefix}{}", i + 1)).collect()
}

pub fn monomial_string(i: u32, j: u32) -> String {
    let mut parts = set_word("e", i);
    parts.extend(set_word("e*", j));
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(".")
    }
}

impl fmt::Display for CliffordElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|((i, j), _)| (i.count_ones() + j.count_ones(), *i, *j));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|(&(i, j), &c)| {
                let sign = if c < 0 { '-' } else { '+' };
                let mag = c.abs();
                let m = monomial_string(i, j);
                if mag == 1 {
                    format!("{sign}{m}")
                } else {
                    format!("{sign}{mag}*{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
