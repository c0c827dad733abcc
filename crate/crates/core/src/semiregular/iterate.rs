//! Filtrations `n = F^0 ⊃ F^1 ⊃ ... ⊃ F^top = 0` with each step an ideal
//! in the previous one and abelian complements, and the comparison of the
//! semiregular module with the iterated tensor product along them.
//!
//! Filtration steps are spanned by basis vectors of `n`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::np::NpModule;
use super::{Check, Env, GradedLieAlgebra, UElt, Word};
use crate::cartan::Q;
use crate::error::{Error, Result};
use crate::linalg;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    /// `F^0, F^1, ...`, ending with the empty step.
    pub steps: Vec<Vec<usize>>,
}

impl Filtration {
    pub fn complement(&self, k: usize) -> Vec<usize> {
        self.steps[k].iter().copied().filter(|i| !self.steps[k + 1].contains(i)).collect()
    }

    pub fn top(&self) -> usize {
        self.steps.len() - 1
    }

    /// The lower central series refined to a complete flag: inside each
    /// layer, basis vectors are peeled off in basis order, so every
    /// complement is one-dimensional.
    pub fn refined_lower_central(alg: &GradedLieAlgebra) -> Result<Self> {
        let series = alg.lower_central_series();
        let mut layers: Vec<Vec<usize>> = Vec::new();
        for space in &series {
            let coords: Vec<usize> = space
                .iter()
                .map(|v| {
                    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
                    if nz.len() == 1 && alg.in_n(nz[0]) {
                        Ok(nz[0])
                    } else {
                        Err(Error::InvalidAlgebra("lower central series is not spanned by basis vectors".into()))
                    }
                })
                .collect::<Result<_>>()?;
            layers.push(alg.n_basis.iter().copied().filter(|i| coords.contains(i)).collect());
        }
        let mut steps = Vec::new();
        for w in layers.windows(2) {
            let (big, small) = (&w[0], &w[1]);
            let mut cur = big.clone();
            for &i in big.iter().filter(|i| !small.contains(i)) {
                steps.push(cur.clone());
                cur.retain(|&j| j != i);
            }
        }
        steps.push(Vec::new());
        Ok(Filtration { steps })
    }

    /// Hypotheses of the iteration: `F^0 = n`, nested ideals, abelian
    /// complements, ending at 0. Returns every violation found.
    pub fn problems(&self, alg: &GradedLieAlgebra) -> Vec<String> {
        let mut out = Vec::new();
        let mut n = alg.n_basis.clone();
        n.sort();
        let mut f0 = self.steps.first().cloned().unwrap_or_default();
        f0.sort();
        if f0 != n {
            out.push("F^0 is not n".to_string());
        }
        if self.steps.last().map(|s| !s.is_empty()).unwrap_or(true) {
            out.push("last step is not 0".to_string());
        }
        for k in 0..self.steps.len().saturating_sub(1) {
            let (big, small) = (&self.steps[k], &self.steps[k + 1]);
            if small.iter().any(|i| !big.contains(i)) || small.len() >= big.len() {
                out.push(format!("F^{} is not a proper subspace of F^{}", k + 1, k));
                continue;
            }
            let ideal =
                big.iter().all(|&x| small.iter().all(|&y| alg.bracket(x, y).iter().all(|(z, _)| small.contains(z))));
            if !ideal {
                out.push(format!("F^{} is not an ideal in F^{}", k + 1, k));
            }
            let comp = self.complement(k);
            if comp.iter().any(|&x| comp.iter().any(|&y| !alg.bracket(x, y).is_empty())) {
                out.push(format!("complement n^{k} is not abelian"));
            }
        }
        out
    }
}

/// Counts by `(degree, length)`.
pub type Series = BTreeMap<(i64, usize), u64>;

fn convolve(a: &Series, b: &Series, max_len: usize) -> Series {
    let mut out = Series::new();
    for (&(da, la), &ca) in a {
        for (&(db, lb), &cb) in b {
            if la + lb <= max_len {
                *out.entry((da + db, la + lb)).or_insert(0) += ca * cb;
            }
        }
    }
    out
}

/// PBW monomial counts of the symmetric algebra on `basis`, degrees
/// multiplied by `sign` (use -1 for a dual).
fn symmetric_series(alg: &GradedLieAlgebra, basis: &[usize], sign: i64, max_len: usize) -> Series {
    let env = Env::new(alg, basis.to_vec());
    let mut out = Series::new();
    for w in env.monomials(max_len) {
        *out.entry((sign * env.degree(&w), w.len())).or_insert(0) += 1;
    }
    out
}

/// Graded dimensions of `U(n)*` by `(degree, length)`, from the ranks of
/// straightened words of each length: the length filtration of `U(n)`.
fn dual_envelope_series(alg: &GradedLieAlgebra, max_len: usize) -> Series {
    let env = Env::of_n(alg);
    let mut words: Vec<Word> = vec![Vec::new()];
    let mut by_len: Vec<Vec<Word>> = vec![words.clone()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in by_len.last().unwrap() {
            for &i in &alg.n_basis {
                let mut nw = w.clone();
                nw.push(i as u16);
                next.push(nw);
            }
        }
        words.extend(next.iter().cloned());
        by_len.push(next);
    }
    let mut rank_le: BTreeMap<(i64, usize), usize> = BTreeMap::new();
    let degrees: Vec<i64> = {
        let mut d: Vec<i64> = words.iter().map(|w| env.degree(w)).collect();
        d.sort();
        d.dedup();
        d
    };
    for &d in &degrees {
        for l in 0..=max_len {
            let elts: Vec<UElt> =
                words.iter().filter(|w| w.len() <= l && env.degree(w) == d).map(|w| env.word(w)).collect();
            let mut keys: Vec<&Word> = elts.iter().flat_map(|e| e.keys()).collect();
            keys.sort();
            keys.dedup();
            let rows: Vec<Vec<_>> = elts
                .iter()
                .map(|e| keys.iter().map(|k| linalg::from_q64(e.get(*k).copied().unwrap_or_else(Q::zero))).collect())
                .collect();
            rank_le.insert((d, l), if rows.is_empty() { 0 } else { linalg::rank(&rows) });
        }
    }
    let mut out = Series::new();
    for &d in &degrees {
        for l in 0..=max_len {
            let below = if l == 0 { 0 } else { rank_le[&(d, l - 1)] };
            let dim = rank_le[&(d, l)] - below;
            if dim > 0 {
                out.insert((-d, l), dim as u64);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct IterateReport {
    pub filtration: Filtration,
    pub problems: Vec<String>,
    /// `(degree, length, direct, iterated)` where the counts differ.
    pub mismatches: Vec<(i64, usize, u64, u64)>,
    pub compared: usize,
    pub compat: Check,
}

impl IterateReport {
    pub fn passed(&self) -> bool {
        self.problems.is_empty() && self.mismatches.is_empty() && self.compat.passed()
    }
}

/// Coregular action of `U(F^k)` on its dual against the two-factor formula
/// along `F^k = n^k ⊕ F^{k+1}`, on dual monomials with `|deg| <= bound`.
fn step_compat(alg: &GradedLieAlgebra, plus: &[usize], minus: &[usize], bound: i64) -> std::result::Result<(), String> {
    let m = NpModule::new(alg, plus.to_vec(), minus.to_vec()).map_err(|e| e.to_string())?;
    let env_plus = Env::new(alg, plus.to_vec());
    let is_plus = |i: u16| plus.contains(&(i as usize));
    let split = |w: &[u16]| {
        let cut = w.iter().position(|&i| !is_plus(i)).unwrap_or(w.len());
        (w[..cut].to_vec(), w[cut..].to_vec())
    };
    for label in m.n.monomials_up_to(bound) {
        let (a, b) = split(&label);
        for &z in plus.iter().chain(minus) {
            let direct = m.n.coregular(z, &label);
            let mut formula = UElt::new();
            if minus.contains(&z) {
                for (g, c) in m.n_minus.coregular(z, &b) {
                    super::add_into(&mut formula, [a.clone(), g].concat(), c);
                }
            } else {
                for (g, c) in env_plus.coregular(z, &a) {
                    super::add_into(&mut formula, [g, b.clone()].concat(), c);
                }
                for (g, c) in m.bracket_functional(z, &b) {
                    super::add_into(&mut formula, [a.clone(), g].concat(), c);
                }
            }
            if direct != formula {
                return Err(format!("action of {} on the dual of {}", alg.labels[z], m.n.word_string(&label)));
            }
        }
    }
    Ok(())
}

/// Compares graded dimensions of `S_n = S(b) ⊗ U(n)*` with the iterated
/// product `S(b) ⊗ U(n^0)* ⊗ ... ⊗ U(n^{top-1})*` for degree and length up
/// to `bound`, after validating the filtration.
pub fn iterate_check(alg: &GradedLieAlgebra, filtration: &Filtration, bound: usize) -> IterateReport {
    let problems = filtration.problems(alg);
    let b = alg.b_basis();
    let sb = symmetric_series(alg, &b, 1, bound);
    let direct = convolve(&sb, &dual_envelope_series(alg, bound), bound);
    let mut iterated = sb;
    if problems.is_empty() {
        for k in 0..filtration.top() {
            iterated = convolve(&iterated, &symmetric_series(alg, &filtration.complement(k), -1, bound), bound);
        }
    }
    let within = |k: &(i64, usize)| k.0.unsigned_abs() as usize <= bound;
    let mut keys: Vec<(i64, usize)> = direct.keys().chain(iterated.keys()).copied().filter(within).collect();
    keys.sort();
    keys.dedup();
    let mut mismatches = Vec::new();
    if problems.is_empty() {
        for k in &keys {
            let (x, y) = (direct.get(k).copied().unwrap_or(0), iterated.get(k).copied().unwrap_or(0));
            if x != y {
                mismatches.push((k.0, k.1, x, y));
            }
        }
    }
    let compat = if problems.is_empty() {
        let r = (0..filtration.top()).try_for_each(|k| {
            step_compat(alg, &filtration.complement(k), &filtration.steps[k + 1], bound.min(4) as i64)
                .map_err(|e| format!("step {k}: {e}"))
        });
        Check::from_result("iterate_action", r)
    } else {
        Check::fail("iterate_action", "filtration rejected")
    };
    IterateReport { filtration: filtration.clone(), problems, mismatches, compared: keys.len(), compat }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(g: &GradedLieAlgebra, l: &str) -> usize {
        g.labels.iter().position(|x| x == l).unwrap()
    }

    #[test]
    fn heisenberg_default_filtration() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        let f = Filtration::refined_lower_central(&g).unwrap();
        let (f1, f2, f12) = (idx(&g, "f1"), idx(&g, "f2"), idx(&g, "f12"));
        assert_eq!(f.steps, vec![vec![f1, f2, f12], vec![f2, f12], vec![f12], vec![]]);
        assert!(f.problems(&g).is_empty());
        let r = iterate_check(&g, &f, 6);
        assert!(r.passed(), "{:?} {:?} {}", r.problems, r.mismatches, r.compat);
        assert!(r.compared > 20);
    }

    #[test]
    fn center_step_has_nonabelian_complement() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        let (f1, f2, f12) = (idx(&g, "f1"), idx(&g, "f2"), idx(&g, "f12"));
        let f = Filtration { steps: vec![vec![f1, f2, f12], vec![f12], vec![]] };
        assert_eq!(f.problems(&g), vec!["complement n^0 is not abelian".to_string()]);
    }

    #[test]
    fn non_ideal_step_fails() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        let (f1, f2, f12) = (idx(&g, "f1"), idx(&g, "f2"), idx(&g, "f12"));
        // any step containing the center is an ideal; span(f1) is not
        let ok = Filtration { steps: vec![vec![f1, f2, f12], vec![f1, f12], vec![f12], vec![]] };
        assert!(ok.problems(&g).is_empty());
        let f = Filtration { steps: vec![vec![f1, f2, f12], vec![f1], vec![]] };
        let r = iterate_check(&g, &f, 4);
        assert!(!r.passed());
        assert_eq!(r.problems, vec!["F^1 is not an ideal in F^0".to_string()]);
    }

    #[test]
    fn abelian_trivial_filtration() {
        let g = GradedLieAlgebra::sl2();
        let f = Filtration::refined_lower_central(&g).unwrap();
        assert_eq!(f.steps.len(), 2);
        assert!(iterate_check(&g, &f, 5).passed());
    }

    #[test]
    fn dual_envelope_matches_pbw() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        let s = dual_envelope_series(&g, 4);
        let p = symmetric_series(&g, &g.n_basis, -1, 4);
        assert_eq!(s, p);
    }
}
