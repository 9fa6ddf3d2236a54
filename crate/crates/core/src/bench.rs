//! Wall-clock sweeps over the chain family and log-log slope fitting.
//!
//! Not a statistics package: three repeats, take the median, fit a least
//! squares line through (ln m, ln time). Good enough to tell square-root
//! growth from cube-root growth over a few doublings.

use std::time::Instant;

use crate::synth::{chain_dict, chain_text};
use crate::wordbreak::{wordbreak, Algo, WordBreakInstance};

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub algo: Algo,
    pub n: usize,
    pub m: usize,
    pub seconds: f64,
    pub answer: bool,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<SweepRow>,
}

impl BenchReport {
    /// Fitted log-log slope of time against m for one algorithm.
    pub fn slope(&self, algo: Algo) -> f64 {
        let pts: Vec<(f64, f64)> = self
            .rows
            .iter()
            .filter(|r| r.algo == algo)
            .map(|r| (r.m as f64, r.seconds.max(1e-9)))
            .collect();
        loglog_slope(&pts)
    }

    /// All algorithms returned the same answer on every instance.
    pub fn answers_agree(&self) -> bool {
        self.rows.iter().all(|r| {
            self.rows
                .iter()
                .all(|o| o.n != r.n || o.m != r.m || o.answer == r.answer)
        })
    }
}

/// Least squares slope through (ln x, ln y).
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    assert!(points.len() >= 2, "need at least two points for a slope");
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let xm = xs.iter().sum::<f64>() / xs.len() as f64;
    let ym = ys.iter().sum::<f64>() / ys.len() as f64;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - xm) * (y - ym)).sum();
    let den: f64 = xs.iter().map(|x| (x - xm) * (x - xm)).sum();
    num / den
}

/// Median wall time of `repeats` runs and the (stable) answer.
pub fn median_time(repeats: usize, mut f: impl FnMut() -> bool) -> (f64, bool) {
    assert!(repeats >= 1);
    let mut times = Vec::with_capacity(repeats);
    let mut answer = false;
    for _ in 0..repeats {
        let start = Instant::now();
        answer = f();
        times.push(start.elapsed().as_secs_f64());
    }
    times.sort_by(f64::total_cmp);
    (times[times.len() / 2], answer)
}

/// Solves the chain-family instance at every `m` with every algorithm.
pub fn wordbreak_sweep(n: usize, ms: &[usize], algos: &[Algo], repeats: usize) -> BenchReport {
    let mut report = BenchReport::default();
    for &m in ms {
        let inst = WordBreakInstance::new(chain_text(n, m), chain_dict(m));
        for &algo in algos {
            let (seconds, answer) = median_time(repeats, || wordbreak(&inst, algo));
            report.rows.push(SweepRow {
                algo,
                n,
                m,
                seconds,
                answer,
            });
        }
    }
    report
}
