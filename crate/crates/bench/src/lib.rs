//! Instance builders and timing helpers shared by the benchmarks.

use std::time::Instant;

use wedmatch::gen::{generate, GenParams};
use wedmatch::{Algo, Cost, Sym, WeightTable};

/// A planted unit-weight instance over four letters, mutated at rate
/// `k/(4m)` so it carries a few real occurrences.
pub struct Workload {
    pub pattern: Vec<Sym>,
    pub text: Vec<Sym>,
    pub k: Cost,
    pub weights: WeightTable,
}

impl Workload {
    pub fn planted(n: usize, m: usize, k: u64, seed: u64) -> Workload {
        let inst = generate(&GenParams {
            length: n,
            pattern_length: m,
            alphabet_size: 4,
            mutation_rate: (k as f64 / (4.0 * m as f64)).min(1.0),
            seed,
        })
        .expect("valid parameters");
        Workload {
            pattern: inst.pattern,
            text: inst.text,
            k: Cost::units(k),
            weights: WeightTable::unit(inst.alphabet),
        }
    }

    /// Runs `algo` single-threaded and returns the number of starts found.
    pub fn run(&self, algo: Algo) -> usize {
        algo.run(&self.pattern, &self.text, self.k, &self.weights, 1).len()
    }

    /// Median wall time in milliseconds over `repeats` runs, with the count.
    pub fn median_ms(&self, algo: Algo, repeats: usize) -> (f64, usize) {
        let mut times = Vec::with_capacity(repeats);
        let mut count = 0;
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            count = self.run(algo);
            times.push(start.elapsed().as_secs_f64() * 1e3);
        }
        times.sort_by(f64::total_cmp);
        (times[times.len() / 2], count)
    }
}
