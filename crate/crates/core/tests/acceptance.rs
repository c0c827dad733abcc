//! Acceptance suite: one PASS/FAIL line per criterion. The process fails
//! only when a criterion deviates from its recorded outcome; the one
//! criterion whose literal statement is false prints FAIL and instead
//! asserts that the literal form fails and the corrected form holds.

use std::collections::HashSet;
use std::process::ExitCode;
use std::thread;

use semiinf::cartan::{marks_conditions_hold, AffineCartan, AffineRoot};
use semiinf::clifford::{check_matrix_unit, ident_check, stan_image_rank, CliffordElt};
use semiinf::resolutions::{euler_check, euler_for, limit_stabilization, si_bgg_window, LimitSchedule, Variant};
use semiinf::semiregular::comult::Comult;
use semiinf::semiregular::dg::dg_checks;
use semiinf::semiregular::exp::ExpAction;
use semiinf::semiregular::iterate::{iterate_check, Filtration};
use semiinf::semiregular::GradedLieAlgebra;
use semiinf::weyl::MaincombOutcome;
use semiinf::WeylGroup;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok_detail: &str) -> Outcome {
    if failures.is_empty() {
        Outcome { passed: true, detail: ok_detail.to_string() }
    } else {
        Outcome { passed: false, detail: failures.join("; ") }
    }
}

fn group(t: &str) -> WeylGroup {
    WeylGroup::from_type(t).unwrap()
}

fn marks() -> Outcome {
    let mut bad = Vec::new();
    for (t, d) in [("A1", 1), ("A2", 1), ("C2", 2), ("G2", 3)] {
        let c = AffineCartan::from_type(t).unwrap();
        let again = AffineCartan::solve_marks(c.a.clone()).unwrap();
        if !marks_conditions_hold(&again) || again.d_max != d {
            bad.push(format!("{t}: conditions or D = {} (expected {d})", again.d_max));
        }
    }
    outcome(bad, "A1 A2 C2 G2, D = 1 1 2 3")
}

fn length_agreement() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for t in ["A1", "A2"] {
        let g = group(t);
        for x in g.enumerate(8) {
            count += 1;
            if g.length(&x.elt) != x.len as i64 {
                bad.push(format!("{t} {}", g.word_string(&x.elt)));
            }
        }
    }
    outcome(bad, &format!("{count} elements"))
}

/// Whether the literal statements hold, and the failures of the corrected ones.
fn r_sets() -> (bool, Vec<String>) {
    let mut literal = true;
    let mut bad = Vec::new();
    for t in ["A1", "A2"] {
        let g = group(t);
        let ball = g.enumerate(4);
        let rho = g.cartan.rho();
        for x in &ball {
            let sum = g.r_set_weight_sum(&x.elt);
            let w_inv_rho = g.act_weight(&g.inv(&x.elt), &rho);
            literal &= sum == rho.sub(&w_inv_rho);
            if sum != w_inv_rho.sub(&rho) {
                bad.push(format!("{t} sum over R_w at {}", g.word_string(&x.elt)));
            }
        }
        for a in &ball {
            for b in &ball {
                let (w1, w2) = (&a.elt, &b.elt);
                let w = g.mul(w2, w1);
                if g.length(&w) as usize != a.len + b.len {
                    continue;
                }
                let (r1, r2) = (g.r_set(w1), g.r_set(w2));
                let mut plain: Vec<AffineRoot> = r2.iter().chain(&r1).cloned().collect();
                plain.sort();
                let distinct = plain.iter().collect::<HashSet<_>>().len() == plain.len();
                literal &= distinct && g.r_set(&w) == plain;
                let w1i = g.inv(w1);
                let mut glued: Vec<AffineRoot> = r1.clone();
                glued.extend(r2.iter().map(|r| g.act_root(&w1i, r)));
                glued.sort();
                if g.r_set(&w) != glued {
                    bad.push(format!("{t} R of {}", g.word_string(&w)));
                }
            }
        }
    }
    (literal, bad)
}

fn transvection() -> Outcome {
    let mut bad = Vec::new();
    for t in ["A1", "A2", "C2", "G2"] {
        let g = group(t);
        for (b, fr) in g.cartan.finite_roots().iter().enumerate() {
            for m in -3..=3 {
                let h0 = g.cartan.affine_coroot(b, 0);
                let hm = g.cartan.affine_coroot(b, fr.d_hat * m);
                let p = g.coroot_reflection_matrix(&h0).unwrap();
                let q = g.coroot_reflection_matrix(&hm).unwrap();
                let lhs: Vec<Vec<i64>> = (0..p.len())
                    .map(|i| (0..q[0].len()).map(|j| (0..q.len()).map(|k| p[i][k] * q[k][j]).sum()).collect())
                    .collect();
                let z: Vec<i64> = fr.root.iter().map(|x| x * fr.d_hat * m).collect();
                if lhs != g.transvection_matrix(&z) {
                    bad.push(format!("{t} root {b} m = {m}"));
                }
            }
        }
    }
    outcome(bad, "A1 A2 C2 G2, |m| <= 3")
}

fn si_length() -> Outcome {
    let mut bad = Vec::new();
    let g = group("A1");
    if g.si_length(&g.simple(1)) != 1 || g.si_length(&g.simple(0)) != -1 {
        bad.push("values at s1, s0".into());
    }
    for x in g.enumerate(6) {
        if (x.len as i64 - g.si_length(&x.elt)).rem_euclid(2) != 0 {
            bad.push(format!("parity at {}", g.word_string(&x.elt)));
        }
    }
    let ball = g.enumerate(3);
    let mut pairs = 0;
    for a in &ball {
        for b in &ball {
            pairs += 1;
            if let MaincombOutcome::Violated { mu0, mu, got, expected } = g.maincomb_verify(&a.elt, &b.elt, 4) {
                bad.push(format!(
                    "maincomb ({}, {}): mu0 {mu0:?} mu {mu:?} got {got} expected {expected}",
                    g.word_string(&a.elt),
                    g.word_string(&b.elt)
                ));
            }
        }
    }
    outcome(bad, &format!("maincomb on {pairs} pairs"))
}

fn bgg_euler() -> Outcome {
    let mut bad = Vec::new();
    for (t, l) in [("A1", "L0"), ("A1", "2L0"), ("A2", "L0")] {
        let g = group(t);
        let lambda = g.cartan.parse_weight(l).unwrap();
        let r = euler_for(&g, &Variant::Untwisted, &lambda, 8).unwrap();
        if !r.passed() {
            bad.push(r.line());
        }
    }
    outcome(bad, "A1 L0, A1 2L0, A2 L0 at N = 8")
}

fn twisted_bgg() -> Outcome {
    let mut bad = Vec::new();
    let g = group("A1");
    let mut count = 0;
    for l in ["L0", "2L0"] {
        let lambda = g.cartan.parse_weight(l).unwrap();
        let plain = euler_for(&g, &Variant::Untwisted, &lambda, 6).unwrap();
        if !plain.passed() {
            bad.push(plain.line());
        }
        for x in g.enumerate(3) {
            count += 1;
            let r = euler_for(&g, &Variant::Twisted(x.elt.clone()), &lambda, 6).unwrap();
            let sign = if x.len % 2 == 0 { 1 } else { -1 };
            if !r.passed() || r.expected_sign != sign {
                bad.push(r.line());
            }
        }
    }
    outcome(bad, &format!("{count} twists at N = 6"))
}

fn si_window() -> Outcome {
    let mut bad = Vec::new();
    for (t, z) in [("A1", vec![-1]), ("A2", vec![-1, -1])] {
        let g = group(t);
        let lambda = g.cartan.fundamental(0);
        let r = euler_for(&g, &Variant::SemiInfinite, &lambda, 6).unwrap();
        if !r.passed() {
            bad.push(r.line());
        }
        let wide = si_bgg_window(&g, &lambda, -20, 20, 6).unwrap();
        let wider = si_bgg_window(&g, &lambda, -40, 40, 6).unwrap();
        if wide != wider || !euler_check(&g, &Variant::SemiInfinite, &wide, &lambda, 6).unwrap().passed() {
            bad.push(format!("{t}: window not stable"));
        }
        let sched = LimitSchedule::repeated(&g, &z, 6).unwrap();
        for x in g.enumerate(4) {
            if limit_stabilization(&g, &sched, &x.elt).m0.is_none() {
                bad.push(format!("{t}: {} does not stabilize", g.word_string(&x.elt)));
            }
        }
    }
    outcome(bad, "A1 and A2 at N = 6, horizon 6")
}

fn clifford() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3 {
        if stan_image_rank(n) != 1 << (2 * n) {
            bad.push(format!("n = {n}: dimension"));
        }
        let d = 1u32 << n;
        let basis: Vec<CliffordElt> =
            (0..d).flat_map(|i| (0..d).map(move |j| CliffordElt::monomial(n, i, j))).collect();
        let prods: Vec<Vec<CliffordElt>> = basis.iter().map(|x| basis.iter().map(|y| x.mul(y)).collect()).collect();
        'assoc: for (a, x) in basis.iter().enumerate() {
            for (b, _) in basis.iter().enumerate() {
                for (c, z) in basis.iter().enumerate() {
                    if prods[a][b].mul(z) != x.mul(&prods[b][c]) {
                        bad.push(format!("n = {n}: associativity"));
                        break 'assoc;
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let u = check_matrix_unit(n, i, j);
                if u.stan_sign.is_none() || u.cost_sign.is_none() {
                    bad.push(format!("n = {n}: matrix unit ({i}, {j})"));
                }
            }
        }
        if let Err((k, l)) = ident_check(n) {
            bad.push(format!("n = {n}: composite differs from the reversal at ({k}, {l})"));
        }
    }
    outcome(bad, "n = 1, 2, 3")
}

fn semiregular() -> Outcome {
    let mut bad = Vec::new();
    let sl2 = GradedLieAlgebra::sl2();
    let exp = ExpAction::new(&sl2).unwrap();
    for c in [exp.check_homomorphism(3), exp.check_act(2, 2, 2)] {
        if !c.passed() {
            bad.push(c.to_string());
        }
    }
    let h = GradedLieAlgebra::sl3_heisenberg();
    let c = Comult::new(&h).check(4, 1);
    if !c.passed() {
        bad.push(c.to_string());
    }
    let f = Filtration::refined_lower_central(&h).unwrap();
    let r = iterate_check(&h, &f, 6);
    if !r.passed() {
        bad.push(format!("iterate: {:?} {:?} {}", r.problems, r.mismatches, r.compat));
    }
    for c in dg_checks(&h, 4) {
        if !c.passed() {
            bad.push(c.to_string());
        }
    }
    outcome(bad, "exp, comult, iterate, dg")
}

fn main() -> ExitCode {
    type Job = fn() -> Outcome;
    let jobs: Vec<(u32, &str, Job)> = vec![
        (1, "marks", marks),
        (2, "length agreement", length_agreement),
        (4, "transvection", transvection),
        (5, "semi-infinite length", si_length),
        (6, "BGG Euler characteristic", bgg_euler),
        (7, "twisted BGG", twisted_bgg),
        (8, "semi-infinite window", si_window),
        (9, "Clifford", clifford),
        (10, "semiregular", semiregular),
    ];
    let (mut results, r3) = thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|&(k, name, f)| (k, name, s.spawn(f))).collect();
        let r3 = s.spawn(r_sets);
        let results: Vec<(u32, String, Outcome)> =
            handles.into_iter().map(|(k, name, h)| (k, name.to_string(), h.join().unwrap())).collect();
        (results, r3.join().unwrap())
    });

    // Criterion 3: the literal disjoint-union and sum statements are false;
    // the corrected forms must hold everywhere.
    let (literal, corrected_failures) = r3;
    let r3_expected = !literal && corrected_failures.is_empty();
    let r3_detail = if r3_expected {
        "literal identities fail; corrected R_{w2 w1} = R_{w1} ⊔ w1^{-1} R_{w2} and sum = w^{-1}rho - rho hold"
            .to_string()
    } else if literal {
        "literal identities unexpectedly hold".to_string()
    } else {
        format!("corrected identities fail: {}", corrected_failures.join("; "))
    };
    results.push((3, "R_w identities".into(), Outcome { passed: literal, detail: r3_detail }));
    results.sort_by_key(|r| r.0);

    let mut ok = r3_expected;
    for (k, name, o) in &results {
        println!("ACCEPTANCE {k:>2} {} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if *k != 3 {
            ok &= o.passed;
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
