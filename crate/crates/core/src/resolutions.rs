//! Terms of the BGG, twisted BGG and semi-infinite BGG complexes at the
//! level of characters, their Euler characteristics, and the stabilization
//! of twisted lengths along translation schedules.

use std::fmt;

use crate::cartan::AffineWeight;
use crate::charlib::{contributing_elements, shifted_verma_under, simple_char_freudenthal, wakimoto_char, Character};
use crate::error::{Error, Result};
use crate::weyl::{box_vectors, word_to_string, WeylElt, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    Untwisted,
    /// Twisted by the given element.
    Twisted(WeylElt),
    SemiInfinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTerm {
    pub elt: WeylElt,
    pub word: Vec<usize>,
    pub hom_degree: i64,
    /// `w . lambda`
    pub weight: AffineWeight,
    /// `-hgt(lambda - w . lambda)`
    pub q_shift: i64,
}

#[derive(Clone, Debug)]
pub struct EulerReport {
    pub label: String,
    pub lambda: String,
    pub n: i64,
    pub expected_sign: i64,
    pub difference: Character,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.difference.is_zero()
    }

    pub fn line(&self) -> String {
        format!("EULER {} {} {} {}", self.label, self.lambda, self.n, if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Sequence `w_1, w_2, ...` of translations; the `m`-th prefix product is
/// `w_m ... w_1`.
#[derive(Clone, Debug)]
pub struct LimitSchedule {
    pub steps: Vec<WeylElt>,
    pub prefixes: Vec<WeylElt>,
    pub prefix_lengths: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub target: i64,
    pub trajectory: Vec<i64>,
    /// Least 1-based prefix index from which the trajectory stays at the
    /// target; `None` means unstable within the horizon.
    pub m0: Option<usize>,
}

impl LimitSchedule {
    /// Schedule of translations by the given vectors of `-Q''+` (basis
    /// `d_hat_i alpha_i`, nonpositive entries), taken through the
    /// semi-infinite translation convention.
    pub fn from_translations(g: &WeylGroup, zs: &[Vec<i64>]) -> Result<Self> {
        let mut steps = Vec::new();
        for z in zs {
            if z.len() != g.rank() || z.iter().any(|&x| x > 0) {
                return Err(Error::Mismatch(format!("schedule step {z:?} is not in the negative cone")));
            }
            steps.push(g.si_translation(z));
        }
        Self::new(g, steps)
    }

    /// `horizon` copies of the same translation.
    pub fn repeated(g: &WeylGroup, z: &[i64], horizon: usize) -> Result<Self> {
        Self::from_translations(g, &vec![z.to_vec(); horizon])
    }

    /// Repeats the least regular antidominant translation (basis
    /// `d_hat_i alpha_i`, least coefficient sum). For `A1` this is
    /// `-alpha'`; in types with unequal marks `-(1, .., 1)` lies on a wall.
    pub fn regular(g: &WeylGroup, horizon: usize) -> Result<Self> {
        let (a, d, r) = (&g.cartan.a, &g.cartan.d_hat, g.rank());
        let c = box_vectors(r, 6)
            .into_iter()
            .find(|c| (1..=r).all(|i| (1..=r).map(|j| a[i][j] * d[j] * c[j - 1]).sum::<i64>() > 0))
            .ok_or_else(|| Error::Parse("no regular translation in the search box".into()))?;
        let z: Vec<i64> = c.iter().map(|x| -x).collect();
        Self::repeated(g, &z, horizon)
    }

    pub fn new(g: &WeylGroup, steps: Vec<WeylElt>) -> Result<Self> {
        let mut prefixes = Vec::new();
        let mut prefix_lengths = Vec::new();
        let mut acc = g.identity();
        let mut total = 0;
        for s in &steps {
            acc = g.mul(s, &acc);
            total += g.length(s);
            let l = g.length(&acc);
            if l != total {
                return Err(Error::Mismatch(format!("schedule not length-additive at step {}", prefixes.len() + 1)));
            }
            prefixes.push(acc.clone());
            prefix_lengths.push(l);
        }
        Ok(LimitSchedule { steps, prefixes, prefix_lengths })
    }

    pub fn horizon(&self) -> usize {
        self.steps.len()
    }
}

/// Twisted-length trajectory of `v` along the schedule and the prefix index
/// where it settles at the semi-infinite length.
pub fn limit_stabilization(g: &WeylGroup, schedule: &LimitSchedule, v: &WeylElt) -> Stabilization {
    let target = g.si_length(v);
    let trajectory: Vec<i64> = schedule.prefixes.iter().map(|p| g.twisted_length(p, v)).collect();
    let m0 = match trajectory.iter().rposition(|&x| x != target) {
        None if !trajectory.is_empty() => Some(1),
        None => None,
        Some(i) if i + 1 < trajectory.len() => Some(i + 2),
        Some(_) => None,
    };
    Stabilization { target, trajectory, m0 }
}

fn make_term(g: &WeylGroup, lambda: &AffineWeight, w: &WeylElt, hgt: i64, hom_degree: i64) -> ResolutionTerm {
    ResolutionTerm {
        elt: w.clone(),
        word: g.reduced_word(w),
        hom_degree,
        weight: g.dot_action(w, lambda),
        q_shift: -hgt,
    }
}

/// All terms of the chosen complex within the truncation, sorted by
/// (degree, length, word).
pub fn all_terms(g: &WeylGroup, variant: &Variant, lambda: &AffineWeight, n: i64) -> Result<Vec<ResolutionTerm>> {
    let mut out: Vec<ResolutionTerm> = contributing_elements(g, lambda, n)?
        .into_iter()
        .map(|(v, len, h)| {
            let deg = match variant {
                Variant::Untwisted => -len,
                Variant::Twisted(w) => -g.twisted_length(w, &v),
                Variant::SemiInfinite => g.si_length(&v),
            };
            make_term(g, lambda, &v, h, deg)
        })
        .collect();
    out.sort_by(|a, b| (a.hom_degree, a.word.len(), &a.word).cmp(&(b.hom_degree, b.word.len(), &b.word)));
    Ok(out)
}

/// `w` with `ell(w) = m` and `hgt(lambda - w.lambda) <= n`.
pub fn bgg_terms(g: &WeylGroup, lambda: &AffineWeight, m: i64, n: i64) -> Result<Vec<ResolutionTerm>> {
    Ok(all_terms(g, &Variant::Untwisted, lambda, n)?.into_iter().filter(|t| t.hom_degree == -m).collect())
}

/// `v` with `ell^w(v) = m` within the truncation.
pub fn twisted_bgg_terms(
    g: &WeylGroup,
    w: &WeylElt,
    lambda: &AffineWeight,
    m: i64,
    n: i64,
) -> Result<Vec<ResolutionTerm>> {
    Ok(all_terms(g, &Variant::Twisted(w.clone()), lambda, n)?.into_iter().filter(|t| t.hom_degree == -m).collect())
}

/// Terms `W(w.lambda)<-hgt>` grouped by semi-infinite length in `[m_min, m_max]`.
pub fn si_bgg_window(
    g: &WeylGroup,
    lambda: &AffineWeight,
    m_min: i64,
    m_max: i64,
    n: i64,
) -> Result<Vec<ResolutionTerm>> {
    Ok(all_terms(g, &Variant::SemiInfinite, lambda, n)?
        .into_iter()
        .filter(|t| (m_min..=m_max).contains(&t.hom_degree))
        .collect())
}

fn term_char(g: &WeylGroup, variant: &Variant, t: &ResolutionTerm, lambda: &AffineWeight, n: i64) -> Result<Character> {
    match variant {
        Variant::SemiInfinite => {
            let c = &g.cartan;
            let h = -t.q_shift;
            wakimoto_char(c, &t.weight, n - h).shift(-h).rebase(c, lambda, n)
        }
        _ => shifted_verma_under(g, &t.elt, lambda, n),
    }
}

/// Cohomological degree used for the alternating sum. The twisted complex is
/// the image of the untwisted one, so its degrees are `-ell(w^{-1} v)`.
fn euler_degree(g: &WeylGroup, variant: &Variant, t: &ResolutionTerm) -> i64 {
    match variant {
        Variant::Twisted(w) => t.hom_degree - g.length(w),
        _ => t.hom_degree,
    }
}

/// Degree where the cohomology `L(lambda)` sits.
fn expected_degree(g: &WeylGroup, variant: &Variant) -> i64 {
    match variant {
        Variant::Twisted(w) => -g.length(w),
        _ => 0,
    }
}

/// `m0,m1,...,mr[;n]`, the weight literal syntax of the command line.
pub fn weight_literal(l: &AffineWeight) -> String {
    let m: Vec<String> = l.m.iter().map(|x| x.to_string()).collect();
    if l.n == num_traits::Zero::zero() {
        m.join(",")
    } else {
        format!("{};{}", m.join(","), l.n)
    }
}

pub fn variant_label(g: &WeylGroup, variant: &Variant) -> String {
    match variant {
        Variant::Untwisted => "bgg".to_string(),
        Variant::Twisted(w) => format!("twisted[{}]", word_to_string(&g.reduced_word(w))),
        Variant::SemiInfinite => "semi-infinite".to_string(),
    }
}

/// Alternating character sum of the given terms minus the expected
/// multiple of `ch L(lambda)` (computed by the independent recursion).
pub fn euler_check(
    g: &WeylGroup,
    variant: &Variant,
    terms: &[ResolutionTerm],
    lambda: &AffineWeight,
    n: i64,
) -> Result<EulerReport> {
    let c = &g.cartan;
    let mut sum = Character::zero(lambda.clone(), n);
    for t in terms {
        let sign = if euler_degree(g, variant, t).rem_euclid(2) == 0 { 1 } else { -1 };
        sum = sum.add(&term_char(g, variant, t, lambda, n)?.scale(sign))?;
    }
    let expected_sign = if expected_degree(g, variant).rem_euclid(2) == 0 { 1 } else { -1 };
    let target = simple_char_freudenthal(c, lambda, n)?.scale(expected_sign);
    Ok(EulerReport {
        label: variant_label(g, variant),
        lambda: weight_literal(lambda),
        n,
        expected_sign,
        difference: sum.sub(&target)?,
    })
}

/// Full Euler check of a variant at truncation `n`.
pub fn euler_for(g: &WeylGroup, variant: &Variant, lambda: &AffineWeight, n: i64) -> Result<EulerReport> {
    let terms = all_terms(g, variant, lambda, n)?;
    euler_check(g, variant, &terms, lambda, n)
}

impl fmt::Display for ResolutionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}  {:<24} {}  <{}>", self.hom_degree, word_to_string(&self.word), self.weight, self.q_shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn a1() -> WeylGroup {
        WeylGroup::from_type("A1").unwrap()
    }

    #[test]
    fn bgg_term_counts() {
        let g = a1();
        let l = g.cartan.fundamental(0);
        let t0 = bgg_terms(&g, &l, 0, 8).unwrap();
        assert_eq!(t0.len(), 1);
        assert_eq!(t0[0].weight, l);
        let t1 = bgg_terms(&g, &l, 1, 8).unwrap();
        assert_eq!(t1.len(), 2);
        let words: Vec<String> = t1.iter().map(|t| word_to_string(&t.word)).collect();
        assert_eq!(words, vec!["s0", "s1"]);
        for t in &t1 {
            assert_eq!(g.cartan.casimir_eigenvalue(&t.weight), g.cartan.casimir_eigenvalue(&l));
        }
    }

    #[test]
    fn untwisted_euler() {
        for (t, l, n) in [("A1", "L0", 8), ("A1", "2L0", 8), ("A1", "L0+L1", 8), ("A2", "L0", 8)] {
            let g = WeylGroup::from_type(t).unwrap();
            let lambda = g.cartan.parse_weight(l).unwrap();
            let r = euler_for(&g, &Variant::Untwisted, &lambda, n).unwrap();
            assert!(r.passed(), "{t} {l}: {}", r.difference);
        }
        let g = a1();
        let r = euler_for(&g, &Variant::Untwisted, &g.cartan.fundamental(0), 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.line(), "EULER bgg 1,0 0 PASS");
    }

    #[test]
    fn twisted_reduces_to_untwisted_for_identity() {
        let g = a1();
        let l = g.cartan.fundamental(0);
        for m in 0..4 {
            assert_eq!(twisted_bgg_terms(&g, &g.identity(), &l, m, 6).unwrap(), bgg_terms(&g, &l, m, 6).unwrap());
        }
    }

    #[test]
    fn twisted_bottom_term_and_euler() {
        let g = a1();
        let l = g.cartan.fundamental(0);
        for x in g.enumerate(3) {
            let w = &x.elt;
            let variant = Variant::Twisted(w.clone());
            let terms = all_terms(&g, &variant, &l, 6).unwrap();
            let h = g.cartan.weight_diff(&l, &g.dot_action(w, &l)).unwrap().hgt();
            let top = terms.iter().map(|t| t.hom_degree).max().unwrap();
            assert!(top <= x.len as i64);
            if h > 6 {
                assert!(terms.iter().all(|t| &t.elt != w));
                let r = euler_check(&g, &variant, &terms, &l, 6).unwrap();
                assert!(r.passed(), "{}", r.line());
                continue;
            }
            assert_eq!(top, x.len as i64);
            let bottom: Vec<_> = terms.iter().filter(|t| t.hom_degree == top).collect();
            assert_eq!(bottom.len(), 1);
            assert_eq!(&bottom[0].elt, w);
            let r = euler_check(&g, &variant, &terms, &l, 6).unwrap();
            assert_eq!(r.expected_sign, if x.len % 2 == 0 { 1 } else { -1 });
            assert!(r.passed(), "{}", r.line());
            let seen: HashSet<_> = terms.iter().map(|t| t.elt.clone()).collect();
            assert_eq!(seen.len(), terms.len());
        }
        let s0 = g.simple(0);
        for t in twisted_bgg_terms(&g, &s0, &l, 0, 6).unwrap() {
            assert_eq!(g.length(&g.mul(&s0, &t.elt)), 1);
        }
    }

    #[test]
    fn semi_infinite_window() {
        let g = a1();
        let l = g.cartan.fundamental(0);
        let zero = si_bgg_window(&g, &l, 0, 0, 6).unwrap();
        assert!(zero.iter().any(|t| g.is_identity(&t.elt)));
        let s0 = si_bgg_window(&g, &l, -1, -1, 6).unwrap();
        assert!(s0.iter().any(|t| t.elt == g.simple(0)));
        let s1 = si_bgg_window(&g, &l, 1, 1, 6).unwrap();
        assert!(s1.iter().any(|t| t.elt == g.simple(1)));
        let full = euler_for(&g, &Variant::SemiInfinite, &l, 6).unwrap();
        assert!(full.passed());
        let wide = si_bgg_window(&g, &l, -20, 20, 6).unwrap();
        let wider = si_bgg_window(&g, &l, -40, 40, 6).unwrap();
        assert_eq!(wide, wider);
        assert!(euler_check(&g, &Variant::SemiInfinite, &wide, &l, 6).unwrap().passed());
    }

    #[test]
    fn stabilization_a1() {
        let g = a1();
        let sched = LimitSchedule::repeated(&g, &[-1], 6).unwrap();
        assert_eq!(sched.prefix_lengths, vec![2, 4, 6, 8, 10, 12]);
        let e = limit_stabilization(&g, &sched, &g.identity());
        assert_eq!(e.m0, Some(1));
        assert_eq!(e.target, 0);
        let s0 = limit_stabilization(&g, &sched, &g.simple(0));
        assert_eq!(*s0.trajectory.last().unwrap(), -1);
        for x in g.enumerate(4) {
            let r = limit_stabilization(&g, &sched, &x.elt);
            assert!(r.m0.is_some(), "{:?}", r);
        }
        assert!(LimitSchedule::repeated(&g, &[1], 3).is_err());
    }

    #[test]
    fn regular_schedules() {
        let g = a1();
        assert_eq!(
            LimitSchedule::regular(&g, 6).unwrap().prefixes,
            LimitSchedule::repeated(&g, &[-1], 6).unwrap().prefixes
        );
        for t in ["C2", "G2"] {
            let g = WeylGroup::from_type(t).unwrap();
            let sched = LimitSchedule::regular(&g, 6).unwrap();
            for x in g.enumerate(3) {
                let r = limit_stabilization(&g, &sched, &x.elt);
                assert!(r.m0.is_some(), "{t} {:?}", r);
            }
        }
    }

    #[test]
    fn stabilization_a2() {
        let g = WeylGroup::from_type("A2").unwrap();
        let sched = LimitSchedule::repeated(&g, &[-1, -1], 6).unwrap();
        for x in g.enumerate(4) {
            let r = limit_stabilization(&g, &sched, &x.elt);
            assert!(r.m0.is_some(), "{:?}", r);
        }
    }
}
