//! Chevalley-Eilenberg chains `U(n)* ⊗ Λ^k n` of the right module
//! `U(n)*`, where `f·x = -x·f` with the coregular action. The complex
//! splits by total weight `t = -deg b + Σ deg x_i` (for `f = f_b`), and
//! each piece is finite. Homology should be one-dimensional, in top
//! exterior degree and weight `Σ deg e_i`, and zero elsewhere.

use num_traits::Zero;

use super::{Check, Env, GradedLieAlgebra, Word};
use crate::cartan::Q;
use crate::linalg::{self, BigQ};

pub struct Koszul<'a> {
    pub env: Env<'a>,
}

fn wedge_weight(env: &Env, mask: u32) -> i64 {
    (0..env.alg.n_dim()).filter(|i| mask >> i & 1 == 1).map(|i| env.alg.degrees[env.alg.n_basis[i]]).sum()
}

impl<'a> Koszul<'a> {
    pub fn new(alg: &'a GradedLieAlgebra) -> Self {
        Koszul { env: Env::of_n(alg) }
    }

    pub fn top(&self) -> usize {
        self.env.alg.n_dim()
    }

    /// Weight of the generator of `Λ^top n`.
    pub fn bottom_weight(&self) -> i64 {
        wedge_weight(&self.env, (1 << self.top()) - 1)
    }

    /// Basis `(b, mask)` of the chains in exterior degree `k` and weight `t`.
    pub fn chains(&self, k: usize, t: i64) -> Vec<(Word, u32)> {
        let mut out = Vec::new();
        for mask in 0u32..1 << self.top() {
            if mask.count_ones() as usize != k {
                continue;
            }
            let deg_b = wedge_weight(&self.env, mask) - t;
            if deg_b > 0 {
                continue;
            }
            for b in self.env.monomials_of_degree(deg_b) {
                out.push((b, mask));
            }
        }
        out
    }

    /// Boundary of one basis chain as `((b, mask), coeff)` terms.
    pub fn boundary(&self, b: &[u16], mask: u32) -> Vec<((Word, u32), Q)> {
        let alg = self.env.alg;
        let pos: Vec<usize> = (0..self.top()).filter(|i| mask >> i & 1 == 1).collect();
        let mut out = Vec::new();
        for (j, &x) in pos.iter().enumerate() {
            let sign = if j % 2 == 0 { Q::from(1) } else { Q::from(-1) };
            for (c, v) in self.env.coregular(alg.n_basis[x], b) {
                out.push(((c, mask & !(1 << x)), -sign * v));
            }
        }
        for (a, &xa) in pos.iter().enumerate() {
            for (bi, &xb) in pos.iter().enumerate().skip(a + 1) {
                let rest = mask & !(1 << xa) & !(1 << xb);
                let sign = if (a + bi) % 2 == 0 { Q::from(1) } else { Q::from(-1) };
                for &(k, c) in alg.bracket(alg.n_basis[xa], alg.n_basis[xb]) {
                    let kp = alg.n_basis.iter().position(|&i| i == k).expect("n is closed");
                    if rest >> kp & 1 == 1 {
                        continue;
                    }
                    let before = (rest & ((1 << kp) - 1)).count_ones();
                    let s = if before.is_multiple_of(2) { sign } else { -sign };
                    out.push(((b.to_vec(), rest | 1 << kp), s * c));
                }
            }
        }
        out
    }

    /// Matrix of `d : C_k -> C_{k-1}` in weight `t`, columns indexed by `C_k`.
    pub fn matrix(&self, k: usize, t: i64) -> Vec<Vec<BigQ>> {
        let src = self.chains(k, t);
        let dst = if k == 0 { Vec::new() } else { self.chains(k - 1, t) };
        let mut m = vec![vec![BigQ::zero(); src.len()]; dst.len()];
        for (col, (b, mask)) in src.iter().enumerate() {
            for (key, v) in self.boundary(b, *mask) {
                let row = dst.iter().position(|d| *d == key).expect("boundary stays in weight");
                m[row][col] += linalg::from_q64(v);
            }
        }
        m
    }

    fn rank(&self, k: usize, t: i64) -> usize {
        if k == 0 || k > self.top() {
            return 0;
        }
        linalg::rank(&self.matrix(k, t))
    }

    pub fn homology(&self, k: usize, t: i64) -> usize {
        self.chains(k, t).len() - self.rank(k, t) - self.rank(k + 1, t)
    }

    pub fn square_is_zero(&self, k: usize, t: i64) -> bool {
        if k < 2 {
            return true;
        }
        let p = linalg::mat_mul(&self.matrix(k - 1, t), &self.matrix(k, t));
        p.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

/// Homology of every weight piece from the bottom weight up to `extra`
/// above it: `C` in top degree at the bottom weight, zero otherwise.
pub fn koszul_check(alg: &GradedLieAlgebra, extra: i64) -> Check {
    let name = "koszul";
    let kz = Koszul::new(alg);
    let bottom = kz.bottom_weight();
    for t in bottom..=bottom + extra {
        for k in 0..=kz.top() {
            if !kz.square_is_zero(k, t) {
                return Check::fail(name, format!("d^2 != 0 at k = {k}, t = {t}"));
            }
            let h = kz.homology(k, t);
            let expect = usize::from(k == kz.top() && t == bottom);
            if h != expect {
                return Check::fail(name, format!("H_{k} in weight {t} has dimension {h}, expected {expect}"));
            }
        }
    }
    Check::pass(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homology_concentrated_for_small_nilpotent_algebras() {
        for g in [GradedLieAlgebra::sl2(), GradedLieAlgebra::sl3_abelian(), GradedLieAlgebra::sl3_heisenberg()] {
            let c = koszul_check(&g, 5);
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn heisenberg_chain_counts() {
        let g = GradedLieAlgebra::sl3_heisenberg();
        let kz = Koszul::new(&g);
        assert_eq!(kz.bottom_weight(), -4);
        // top exterior power alone in the bottom weight
        assert_eq!(kz.chains(3, -4), vec![(vec![], 0b111)]);
        // weight 0 has f_∅ ⊗ 1 and nothing else in degree 0
        assert_eq!(kz.chains(0, 0).len(), 1);
        assert_eq!(kz.homology(0, 0), 0);
    }

    #[test]
    fn top_homology_only_at_bottom_weight() {
        // the bottom weight piece is C in top degree, not zero
        let g = GradedLieAlgebra::sl3_heisenberg();
        let kz = Koszul::new(&g);
        assert_eq!(kz.homology(3, -4), 1);
        assert_eq!(kz.homology(3, -3), 0);
        assert!(!kz.chains(3, -3).is_empty());
    }
}
