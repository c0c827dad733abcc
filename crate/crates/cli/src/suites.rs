use std::fs;
use std::path::PathBuf;

use semiinf::charlib::{simple_char_freudenthal, simple_char_kac};
use semiinf::clifford::{check_matrix_unit, ident_check, stan_image_rank, CliffordElt};
use semiinf::resolutions::{
    all_terms, euler_check, euler_for, limit_stabilization, si_bgg_window, weight_literal, LimitSchedule, Variant,
};
use semiinf::semiregular::comult::Comult;
use semiinf::semiregular::dg::dg_checks;
use semiinf::semiregular::exp::ExpAction;
use semiinf::semiregular::iterate::{iterate_check, Filtration};
use semiinf::semiregular::koszul::koszul_check;
use semiinf::semiregular::{Check, GradedLieAlgebra};
use semiinf::weyl::{word_to_string, MaincombOutcome};
use semiinf::{AffineCartan, AffineWeight, Result, WeylGroup};

use crate::Suite;

pub struct Config {
    pub type_name: String,
    pub matrix_file: Option<PathBuf>,
    pub lambda: String,
    pub n_trunc: i64,
    pub maxlen: usize,
    pub search_bound: i64,
    pub horizon: usize,
    pub clifford_n: usize,
    pub algebra: String,
    pub degree: i64,
}

#[derive(Default)]
pub struct Report {
    lines: Vec<String>,
    first_failure: Option<String>,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        self.lines.push(format!("{key} {value}"));
    }

    fn check(&mut self, c: Check) {
        if !c.passed() && self.first_failure.is_none() {
            self.first_failure = Some(c.to_string());
        }
        self.lines.push(format!("CHECK {c}"));
    }

    fn euler(&mut self, line: String, passed: bool) {
        if !passed && self.first_failure.is_none() {
            self.first_failure = Some(line.clone());
        }
        self.lines.push(line);
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn finish(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        match &self.first_failure {
            None => out.push_str("RESULT PASS\n"),
            Some(f) => out.push_str(&format!("RESULT FAIL\nFIRST_FAILURE {f}\n")),
        }
        out
    }
}

fn failures_to_check(name: &str, failures: Vec<String>) -> Check {
    match failures.into_iter().next() {
        None => Check::pass(name),
        Some(f) => Check::fail(name, f),
    }
}

fn group(cfg: &Config) -> Result<(String, WeylGroup)> {
    match &cfg.matrix_file {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| semiinf::Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            Ok((path.display().to_string(), WeylGroup::new(AffineCartan::parse_matrix(&text)?)))
        }
        None => Ok((cfg.type_name.clone(), WeylGroup::from_type(&cfg.type_name)?)),
    }
}

fn lambda(cfg: &Config, g: &WeylGroup) -> Result<AffineWeight> {
    let l = g.cartan.parse_weight(&cfg.lambda)?;
    let level = g.cartan.level(&l);
    if !g.cartan.is_dominant(&l, level) {
        return Err(semiinf::Error::Parse(format!("weight {} is not dominant integral", cfg.lambda)));
    }
    Ok(l)
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn marks(cfg: &Config, r: &mut Report) -> Result<()> {
    let (name, g) = group(cfg)?;
    let c = &g.cartan;
    r.kv("SUITE", "marks");
    r.kv("TYPE", name);
    r.kv("D", c.d_max);
    r.kv("SYMMETRIZER", join(&c.sym));
    r.kv("DHAT", join(&c.d_hat));
    r.kv("COMARKS", join(&c.comarks));
    r.kv("MARKS", join(&c.marks));
    r.check(if semiinf::cartan::marks_conditions_hold(c) {
        Check::pass("marks")
    } else {
        Check::fail("marks", "conditions violated")
    });
    Ok(())
}

fn weyl(cfg: &Config, r: &mut Report) -> Result<()> {
    let (name, g) = group(cfg)?;
    let ball = g.enumerate(cfg.maxlen);
    r.kv("SUITE", "weyl");
    r.kv("TYPE", name);
    r.kv("MAXLEN", cfg.maxlen);
    r.kv("COUNT", ball.len());
    let mut length_bad = Vec::new();
    let mut parity_bad = Vec::new();
    for x in &ball {
        let (ell, si) = (g.length(&x.elt), g.si_length(&x.elt));
        r.line(format!("ELT {} LEN {} SILEN {} PAIR {}", word_to_string(&x.word), ell, si, g.pair_string(&x.elt)));
        if ell != x.len as i64 {
            length_bad.push(format!("{}: root count {ell}, word length {}", word_to_string(&x.word), x.len));
        }
        if (ell - si).rem_euclid(2) != 0 || si.abs() > ell {
            parity_bad.push(word_to_string(&x.word));
        }
    }
    r.check(failures_to_check("length_agreement", length_bad));
    r.check(failures_to_check("si_length_parity", parity_bad));
    let mut mc_bad = Vec::new();
    let mut root_cone_bad = Vec::new();
    for a in &ball {
        for b in &ball {
            let pair = format!("({}, {})", word_to_string(&a.word), word_to_string(&b.word));
            if let MaincombOutcome::Violated { mu0, mu, got, expected } =
                g.maincomb_verify_chamber(&a.elt, &b.elt, cfg.search_bound)
            {
                mc_bad.push(format!("{pair} mu0 {mu0:?} mu {mu:?} got {got} expected {expected}"));
            }
            if let MaincombOutcome::Violated { mu, .. } = g.maincomb_verify(&a.elt, &b.elt, cfg.search_bound) {
                root_cone_bad.push(format!("{pair} mu {mu:?}"));
            }
        }
    }
    // the whole cone -Q''+ is only inside one chamber in rank one
    r.kv("MAINCOMB_ROOT_CONE", root_cone_bad.first().map_or("holds".to_string(), |f| format!("fails at {f}")));
    r.check(failures_to_check("maincomb", mc_bad));
    Ok(())
}

fn character(cfg: &Config, r: &mut Report) -> Result<()> {
    let (name, g) = group(cfg)?;
    let l = lambda(cfg, &g)?;
    let ch = simple_char_freudenthal(&g.cartan, &l, cfg.n_trunc)?;
    r.kv("SUITE", "char");
    r.kv("TYPE", name);
    r.kv("LAMBDA", weight_literal(&l));
    r.kv("N", cfg.n_trunc);
    for line in ch.dump().lines() {
        r.kv("MULT", line);
    }
    let kac = simple_char_kac(&g, &l, cfg.n_trunc)?;
    r.check(if kac == ch {
        Check::pass("char_kac_vs_freudenthal")
    } else {
        Check::fail("char_kac_vs_freudenthal", "characters differ")
    });
    Ok(())
}

fn bgg(cfg: &Config, r: &mut Report) -> Result<()> {
    let (name, g) = group(cfg)?;
    let l = lambda(cfg, &g)?;
    r.kv("SUITE", "bgg");
    r.kv("TYPE", name);
    let terms = all_terms(&g, &Variant::Untwisted, &l, cfg.n_trunc)?;
    for t in &terms {
        r.line(format!(
            "TERM {} {} {} {}",
            t.hom_degree,
            word_to_string(&t.word),
            weight_literal(&t.weight),
            t.q_shift
        ));
    }
    let rep = euler_check(&g, &Variant::Untwisted, &terms, &l, cfg.n_trunc)?;
    r.euler(rep.line(), rep.passed());
    Ok(())
}

fn twisted_bgg(cfg: &Config, r: &mut Report) -> Result<()> {
    let (name, g) = group(cfg)?;
    let l = lambda(cfg, &g)?;
    r.kv("SUITE", "twisted-bgg");
    r.kv("TYPE", name);
    for x in g.enumerate(cfg.maxlen) {
        let rep = euler_for(&g, &Variant::Twisted(x.elt.clone()), &l, cfg.n_trunc)?;
        r.euler(rep.line(), rep.passed());
    }
    Ok(())
}

fn si_window(cfg: &Config, r: &mut Report) -> Result<()> {
    let (name, g) = group(cfg)?;
    let l = lambda(cfg, &g)?;
    r.kv("SUITE", "si-window");
    r.kv("TYPE", name);
    let rep = euler_for(&g, &Variant::SemiInfinite, &l, cfg.n_trunc)?;
    r.euler(rep.line(), rep.passed());
    let wide = si_bgg_window(&g, &l, -20, 20, cfg.n_trunc)?;
    let wider = si_bgg_window(&g, &l, -40, 40, cfg.n_trunc)?;
    let stable = wide == wider && euler_check(&g, &Variant::SemiInfinite, &wide, &l, cfg.n_trunc)?.passed();
    r.check(if stable { Check::pass("window_stable") } else { Check::fail("window_stable", "window sum changes") });
    let sched = LimitSchedule::regular(&g, cfg.horizon)?;
    let mut bad = Vec::new();
    for x in g.enumerate(cfg.maxlen) {
        let s = limit_stabilization(&g, &sched, &x.elt);
        let m0 = s.m0.map_or("none".to_string(), |m| m.to_string());
        r.line(format!(
            "STAB {} TARGET {} M0 {} TRAJECTORY {}",
            word_to_string(&x.word),
            s.target,
            m0,
            join(&s.trajectory)
        ));
        if s.m0.is_none() {
            bad.push(format!("{} does not stabilize", word_to_string(&x.word)));
        }
    }
    r.check(failures_to_check("limit_stabilization", bad));
    Ok(())
}

fn clifford(cfg: &Config, r: &mut Report) -> Result<()> {
    let n = cfg.clifford_n;
    if n == 0 || n > semiinf::clifford::MAX_N {
        return Err(semiinf::Error::Parse(format!("--n must be in 1..={}", semiinf::clifford::MAX_N)));
    }
    r.kv("SUITE", "clifford");
    r.kv("GENERATORS", n);
    let dim = stan_image_rank(n);
    r.kv("DIM", dim);
    r.check(if dim == 1 << (2 * n) {
        Check::pass("clifford_dimension")
    } else {
        Check::fail("clifford_dimension", format!("rank {dim}"))
    });
    let d = 1u32 << n;
    let basis: Vec<CliffordElt> = (0..d).flat_map(|i| (0..d).map(move |j| CliffordElt::monomial(n, i, j))).collect();
    let prods: Vec<Vec<CliffordElt>> = basis.iter().map(|x| basis.iter().map(|y| x.mul(y)).collect()).collect();
    let mut assoc = Vec::new();
    'outer: for (a, x) in basis.iter().enumerate() {
        for b in 0..basis.len() {
            for (c, z) in basis.iter().enumerate() {
                if prods[a][b].mul(z) != x.mul(&prods[b][c]) {
                    assoc.push(format!("({x})({})({z})", basis[b]));
                    break 'outer;
                }
            }
        }
    }
    r.check(failures_to_check("clifford_associativity", assoc));
    let mut units = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let u = check_matrix_unit(n, i, j);
            if u.stan_sign.is_none() || u.cost_sign.is_none() {
                units.push(format!("I = {i:#b}, J = {j:#b}"));
            }
        }
    }
    r.check(failures_to_check("clifford_matrix_units", units));
    let ident = ident_check(n).err().map(|(k, l)| format!("differs from the reversal at ({k:#b}, {l:#b})"));
    r.check(failures_to_check("clifford_ident", ident.into_iter().collect()));
    Ok(())
}

fn algebra(cfg: &Config) -> Result<GradedLieAlgebra> {
    match cfg.algebra.as_str() {
        "sl2" => Ok(GradedLieAlgebra::sl2()),
        "heisenberg" => Ok(GradedLieAlgebra::sl3_heisenberg()),
        "abelian" => Ok(GradedLieAlgebra::sl3_abelian()),
        path => {
            let text =
                fs::read_to_string(path).map_err(|e| semiinf::Error::Parse(format!("cannot read {path}: {e}")))?;
            GradedLieAlgebra::parse(&text)
        }
    }
}

fn semiregular(cfg: &Config, r: &mut Report) -> Result<()> {
    let alg = algebra(cfg)?;
    r.kv("SUITE", "semiregular");
    r.kv("ALGEBRA", &cfg.algebra);
    r.kv("DIM_G", alg.dim());
    r.kv("DIM_N", alg.n_dim());
    r.kv("DEGREE", cfg.degree);
    let valid = alg.validate();
    r.check(Check::from_result("validate", valid.as_ref().map(|_| ()).map_err(|e| e.to_string())));
    if valid.is_err() {
        return Ok(());
    }
    if alg.n_is_abelian() {
        let exp = ExpAction::new(&alg)?;
        r.check(exp.check_homomorphism(cfg.maxlen));
        r.check(exp.check_act(cfg.maxlen.min(2), 2, 2));
    } else {
        r.kv("SKIP", "exp_action (n is not abelian)");
    }
    r.check(Comult::new(&alg).check(cfg.degree, 1));
    let f = Filtration::refined_lower_central(&alg)?;
    let it = iterate_check(&alg, &f, cfg.degree.max(0) as usize);
    r.kv("FILTRATION_STEPS", f.steps.len());
    r.kv("ITERATE_COMPARED", it.compared);
    let mut bad: Vec<String> = it.problems.clone();
    bad.extend(it.mismatches.iter().map(|(d, l, a, b)| format!("degree {d} length {l}: {a} vs {b}")));
    r.check(failures_to_check("iterate_dimensions", bad));
    r.check(it.compat);
    for c in dg_checks(&alg, cfg.degree) {
        r.check(c);
    }
    r.check(koszul_check(&alg, cfg.degree));
    Ok(())
}

pub fn run(suite: Suite, cfg: &Config, r: &mut Report) -> Result<()> {
    match suite {
        Suite::Marks => marks(cfg, r),
        Suite::Weyl => weyl(cfg, r),
        Suite::Char => character(cfg, r),
        Suite::Bgg => bgg(cfg, r),
        Suite::TwistedBgg => twisted_bgg(cfg, r),
        Suite::SiWindow => si_window(cfg, r),
        Suite::Clifford => clifford(cfg, r),
        Suite::Semiregular => semiregular(cfg, r),
        Suite::All => {
            for s in [
                Suite::Marks,
                Suite::Weyl,
                Suite::Char,
                Suite::Bgg,
                Suite::TwistedBgg,
                Suite::SiWindow,
                Suite::Clifford,
                Suite::Semiregular,
            ] {
                run(s, cfg, r)?;
            }
            Ok(())
        }
    }
}
