use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dodgreed_core::dodgson::all_scores;
use dodgreed_core::generate::random_graph;
use dodgreed_core::greedy::mdg_max;
use dodgreed_core::mis::alpha;
use dodgreed_core::reduction::{double_subdivision, s1_reduction, verify_reduction};
use dodgreed_core::{fixtures, Election, Graph, StateBudget};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn random_election(m: usize, voters: usize, seed: u64) -> Election {
    let mut rng = StdRng::seed_from_u64(seed);
    let rankings = (0..voters)
        .map(|_| {
            let mut r: Vec<usize> = (0..m).collect();
            r.shuffle(&mut rng);
            r
        })
        .collect();
    Election::new((0..m).map(|i| format!("c{i}")).collect(), rankings).unwrap()
}

fn dodgson(c: &mut Criterion) {
    let e = fixtures::four_voter();
    c.bench_function("dodgson scores, worked example", |b| b.iter(|| all_scores(black_box(&e))));
    let big = random_election(5, 15, 7);
    c.bench_function("dodgson scores, 5 candidates x 15 voters", |b| {
        b.iter(|| all_scores(black_box(&big)))
    });
}

fn greedy(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(11);
    let g = random_graph(24, 0.2, &mut rng);
    c.bench_function("mdg_max, random 24-vertex graph", |b| {
        b.iter(|| mdg_max(black_box(&g), StateBudget::default()).unwrap())
    });
    let k6 = double_subdivision(&Graph::complete(6));
    c.bench_function("mdg_max, subdivided K6", |b| {
        b.iter(|| mdg_max(black_box(&k6), StateBudget::default()).unwrap())
    });
    c.bench_function("alpha, subdivided K6", |b| b.iter(|| alpha(black_box(&k6))));
}

fn reduction(c: &mut Criterion) {
    let g = Graph::complete(3);
    let h = Graph::new(1);
    let art = s1_reduction(&g, &h);
    c.bench_function("alpha, joined graph for (K3, K1)", |b| b.iter(|| alpha(black_box(&art.ghat))));
    c.bench_function("verify_reduction (K3, K1)", |b| {
        b.iter(|| verify_reduction(black_box(&g), black_box(&h), StateBudget::default()).unwrap())
    });
}

criterion_group!(benches, dodgson, greedy, reduction);
criterion_main!(benches);
