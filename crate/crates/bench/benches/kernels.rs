use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use semiinf::charlib::simple_char_freudenthal;
use semiinf::clifford::{ident_check, CliffordElt};
use semiinf::resolutions::{euler_for, Variant};
use semiinf::semiregular::dg::dg_checks;
use semiinf::semiregular::koszul::koszul_check;
use semiinf::semiregular::Env;
use semiinf_bench::{basic_weight, group, heisenberg, sample_words};

fn weyl(c: &mut Criterion) {
    let mut grp = c.benchmark_group("weyl");
    for t in ["A1", "A2", "C2"] {
        let g = group(t);
        grp.bench_with_input(BenchmarkId::new("enumerate_6", t), &g, |b, g| b.iter(|| g.enumerate(black_box(6))));
        let ball = g.enumerate(5);
        grp.bench_with_input(BenchmarkId::new("length_ball_5", t), &ball, |b, ball| {
            b.iter(|| ball.iter().map(|x| g.length(&x.elt) + g.si_length(&x.elt)).sum::<i64>())
        });
    }
    grp.finish();
}

fn characters(c: &mut Criterion) {
    let mut grp = c.benchmark_group("characters");
    grp.sample_size(20);
    for (t, n) in [("A1", 8), ("A2", 6)] {
        let g = group(t);
        let l = basic_weight(&g);
        grp.bench_function(BenchmarkId::new("freudenthal", format!("{t}/N{n}")), |b| {
            b.iter(|| simple_char_freudenthal(&g.cartan, black_box(&l), n).unwrap())
        });
        grp.bench_function(BenchmarkId::new("bgg_euler", format!("{t}/N{n}")), |b| {
            b.iter(|| euler_for(&g, &Variant::Untwisted, black_box(&l), n).unwrap())
        });
    }
    grp.finish();
}

fn clifford(c: &mut Criterion) {
    let mut grp = c.benchmark_group("clifford");
    for n in [3usize, 4] {
        let d = 1u32 << n;
        let basis: Vec<CliffordElt> =
            (0..d).flat_map(|i| (0..d).map(move |j| CliffordElt::monomial(n, i, j))).collect();
        grp.bench_with_input(BenchmarkId::new("basis_products", n), &basis, |b, basis| {
            b.iter(|| basis.iter().zip(basis.iter().rev()).map(|(x, y)| x.mul(y)).filter(|p| !p.is_zero()).count())
        });
    }
    grp.sample_size(10);
    grp.bench_function("ident_check/3", |b| b.iter(|| ident_check(black_box(3)).unwrap()));
    grp.finish();
}

fn semiregular(c: &mut Criterion) {
    let alg = heisenberg();
    let env = Env::of_g(&alg);
    let mut grp = c.benchmark_group("semiregular");
    for len in [4usize, 6] {
        let words = sample_words(len, 64);
        grp.bench_with_input(BenchmarkId::new("straighten", len), &words, |b, words| {
            b.iter(|| words.iter().map(|w| env.word(w).len()).sum::<usize>())
        });
    }
    grp.sample_size(10);
    grp.bench_function("dg_checks/heisenberg/3", |b| b.iter(|| dg_checks(&alg, black_box(3))));
    grp.bench_function("koszul/heisenberg/4", |b| b.iter(|| koszul_check(&alg, black_box(4))));
    grp.finish();
}

criterion_group!(benches, weyl, characters, clifford, semiregular);
criterion_main!(benches);
