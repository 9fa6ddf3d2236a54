use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use homreg::batch::{match_all, match_all_seq, wordbreak_all, wordbreak_all_seq};
use homreg::matcher::Matcher;
use homreg::regex::{parse_regex, SyntaxMode, Text};
use homreg::synth::{chain_dict, chain_text, planted_wb_instance, rand_text, sample_match};
use homreg::wordbreak::{wordbreak, Algo, WordBreakInstance};

fn wordbreak_algos(c: &mut Criterion) {
    let mut g = c.benchmark_group("wordbreak");
    g.sample_size(10);
    let n = 1 << 13;
    for m in [1 << 8, 1 << 12] {
        let inst = WordBreakInstance::new(chain_text(n, m), chain_dict(m));
        for algo in [Algo::Dp, Algo::Q2, Algo::Sumset, Algo::Auto] {
            g.bench_with_input(
                BenchmarkId::new(format!("{algo:?}").to_lowercase(), m),
                &inst,
                |b, inst| b.iter(|| wordbreak(black_box(inst), algo)),
            );
        }
    }
    g.finish();
}

fn batch_match(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let r = parse_regex("(ab|ba|b)+", SyntaxMode::Ascii).unwrap();
    let m = Matcher::new(&r).unwrap();
    let texts: Vec<Text> = (0..64)
        .map(|i| {
            if i % 2 == 0 {
                let mut t = Text(vec![]);
                while t.len() < 1 << 11 {
                    t.0.extend(sample_match(&mut rng, &r).0);
                }
                t
            } else {
                rand_text(&mut rng, 1 << 11, 2)
            }
        })
        .collect();
    let mut g = c.benchmark_group("batch-match");
    g.sample_size(10);
    g.bench_function("parallel", |b| b.iter(|| match_all(&m, black_box(&texts))));
    g.bench_function("sequential", |b| {
        b.iter(|| match_all_seq(&m, black_box(&texts)))
    });
    g.finish();
}

fn batch_wordbreak(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let insts: Vec<WordBreakInstance> = (0..16)
        .map(|_| planted_wb_instance(&mut rng, 1 << 11, 16, 12, 3))
        .collect();
    let mut g = c.benchmark_group("batch-wordbreak");
    g.sample_size(10);
    g.bench_function("parallel", |b| {
        b.iter(|| wordbreak_all(black_box(&insts), Algo::Auto))
    });
    g.bench_function("sequential", |b| {
        b.iter(|| wordbreak_all_seq(black_box(&insts), Algo::Auto))
    });
    g.finish();
}

criterion_group!(benches, wordbreak_algos, batch_match, batch_wordbreak);
criterion_main!(benches);
