use std::fmt;
use std::time::Instant;

use artin_rrs::reducer::Reducer;
use artin_rrs::{Gen, GroupParams, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct BenchReport {
    pub n: u32,
    pub len: usize,
    pub repeat: usize,
    pub seed: u64,
    pub mean_ms: f64,
    pub median_ms: f64,
    /// Mean letters visited per reduction.
    pub mean_visited: f64,
    /// `mean_visited / len^2`.
    pub c: f64,
    /// Largest letters visited by one push divided by the length before it, plus one.
    pub c_push: f64,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bench: n={} len={} repeat={} seed={}\nmean {:.3} ms, median {:.3} ms\nletters visited {:.0} (c = {:.4} per L^2, c' = {:.2} per push letter)",
            self.n, self.len, self.repeat, self.seed, self.mean_ms, self.median_ms, self.mean_visited, self.c, self.c_push
        )
    }
}

pub fn run(len: usize, repeat: usize, seed: u64, params: &GroupParams) -> BenchReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut times = Vec::with_capacity(repeat);
    let mut visited = 0u64;
    let mut c_push = 0f64;
    for _ in 0..repeat {
        let w: Word = (0..len)
            .map(|_| Gen::ALL[rng.gen_range(0..3)].signed(rng.gen_bool(0.5)))
            .collect();
        let mut r = Reducer::new(*params);
        let start = Instant::now();
        for &x in w.iter() {
            let before = (r.visited(), r.word().len());
            r.push(x);
            c_push = c_push.max((r.visited() - before.0) as f64 / (before.1 + 1) as f64);
        }
        times.push(start.elapsed().as_secs_f64() * 1e3);
        visited += r.visited();
    }
    times.sort_by(f64::total_cmp);
    let mean_visited = visited as f64 / repeat as f64;
    BenchReport {
        n: params.n(),
        len,
        repeat,
        seed,
        mean_ms: times.iter().sum::<f64>() / repeat as f64,
        median_ms: times[repeat / 2],
        mean_visited,
        c: mean_visited / (len.max(1) * len.max(1)) as f64,
        c_push,
    }
}
