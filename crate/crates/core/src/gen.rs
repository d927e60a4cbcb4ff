//! Seeded random instances and weight tables.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::text::{Alphabet, Cost, Sym, WeightTable};

/// Parameters of a planted instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub length: usize,
    pub pattern_length: usize,
    pub alphabet_size: usize,
    /// Per-character probability of an edit when copying the pattern out.
    pub mutation_rate: f64,
    pub seed: u64,
}

/// A text with a pattern cut from it and then mutated.
#[derive(Clone, Debug)]
pub struct Instance {
    pub alphabet: Alphabet,
    pub text: Vec<Sym>,
    pub pattern: Vec<Sym>,
    /// Where the pattern was cut from.
    pub planted_at: usize,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random string over symbols `1..=σ`.
pub fn random_string(rng: &mut impl Rng, len: usize, sigma: usize) -> Vec<Sym> {
    (0..len).map(|_| rng.gen_range(1..=sigma as Sym)).collect()
}

/// Copies `src`, substituting, deleting or inserting at each position with
/// probability `rate`.
pub fn mutate(rng: &mut impl Rng, src: &[Sym], sigma: usize, rate: f64) -> Vec<Sym> {
    let mut out = Vec::with_capacity(src.len() + 4);
    for &c in src {
        if rate > 0.0 && rng.gen_bool(rate.min(1.0)) {
            match rng.gen_range(0..3) {
                0 => out.push(rng.gen_range(1..=sigma as Sym)),
                1 => {}
                _ => {
                    out.push(rng.gen_range(1..=sigma as Sym));
                    out.push(c);
                }
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// A planted instance: random text, pattern = mutated substring of it.
pub fn generate(params: &GenParams) -> Result<Instance> {
    let GenParams {
        length,
        pattern_length,
        alphabet_size,
        mutation_rate,
        seed,
    } = *params;
    if !(1..=26).contains(&alphabet_size) {
        return Err(Error::Range(format!("alphabet size {alphabet_size} is outside 1..=26")));
    }
    if pattern_length == 0 || pattern_length > length {
        return Err(Error::Range(format!(
            "pattern length {pattern_length} must be in 1..={length}"
        )));
    }
    if !(0.0..=1.0).contains(&mutation_rate) {
        return Err(Error::Range(format!("mutation rate {mutation_rate} is outside [0, 1]")));
    }
    let mut r = rng(seed);
    let text = random_string(&mut r, length, alphabet_size);
    let planted_at = r.gen_range(0..=length - pattern_length);
    let pattern = mutate(
        &mut r,
        &text[planted_at..planted_at + pattern_length],
        alphabet_size,
        mutation_rate,
    );
    Ok(Instance {
        alphabet: Alphabet::lowercase(alphabet_size),
        text,
        pattern,
        planted_at,
    })
}

/// A normalized table whose off-diagonal entries are drawn from
/// `{1, 2, 3, 5}` or six-digit decimals in `[1, 4]`; a draw of `0` keeps the
/// entry at the unit default.
pub fn random_weights(rng: &mut impl Rng, alphabet: &Alphabet) -> WeightTable {
    let sigma = alphabet.len() as Sym;
    let mut entries = Vec::new();
    for a in 0..=sigma {
        for b in 0..=sigma {
            if a == b {
                continue;
            }
            let c = if rng.gen_bool(0.5) {
                let units = *[0u64, 1, 2, 3, 5].choose(rng).unwrap();
                if units == 0 {
                    continue;
                }
                Cost::units(units)
            } else {
                Cost::from_micros(rng.gen_range(1_000_000..=4_000_000))
            };
            entries.push((a, b, c));
        }
    }
    WeightTable::from_sym_entries(alphabet.clone(), Cost::units(1), &entries).expect("entries are at least 1")
}

/// A small random instance for oracle tests: `|T| ≤ max_n`, `1 ≤ |P| ≤ max_m`,
/// `|Σ| ≤ max_sigma`; half of the patterns are planted in the text.
pub fn random_small(rng: &mut impl Rng, max_n: usize, max_m: usize, max_sigma: usize) -> (Alphabet, Vec<Sym>, Vec<Sym>) {
    let sigma = rng.gen_range(1..=max_sigma);
    let n = rng.gen_range(0..=max_n);
    let text = random_string(rng, n, sigma);
    let m = rng.gen_range(1..=max_m);
    let pattern = if n >= m && rng.gen_bool(0.5) {
        let at = rng.gen_range(0..=n - m);
        let rate = rng.gen_range(0.0..0.3);
        let mut p = mutate(rng, &text[at..at + m], sigma, rate);
        if p.is_empty() {
            p.push(1);
        }
        p
    } else {
        random_string(rng, m, sigma)
    };
    (Alphabet::lowercase(sigma), text, pattern)
}
