//! Subcommand bodies.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use thiserror::Error;
use wedmatch::gen::{generate, GenParams};
use wedmatch::{list_all_occs, min_end, verify, Algo, Alphabet, Cost, Sym, WeightTable};

use crate::{Command, Input, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid weight table: {0}")]
    Weights(wedmatch::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Weights(_) => 2,
            CliError::Io { .. } | CliError::Output(_) => 3,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cmd: Command) -> Result<()> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cmd {
        Command::Match { input, algo, report } => {
            let job = Job::load(&input)?;
            let found = Algo::from(algo).run(&job.p, &job.t, job.k, &job.w, job.threads);
            for (i, dist) in found.to_starts() {
                match report {
                    Report::Starts => writeln!(out, "{i}")?,
                    Report::Full => {
                        let (j, d) = min_end(&job.p, &job.t, i, job.k, &job.w).expect("reported starts have an end");
                        debug_assert_eq!(d, dist);
                        writeln!(out, "{i}\t{j}\t{d}")?;
                    }
                }
            }
        }
        Command::List { input } => {
            let job = Job::load(&input)?;
            if let wedmatch::OccReport::Triples(all) = list_all_occs(&job.p, &job.t, job.k, &job.w) {
                for (i, j, d) in all {
                    writeln!(out, "{i}\t{j}\t{d}")?;
                }
            }
        }
        Command::Verify { input, interval } => {
            let (lo, hi) = parse_interval(&interval)?;
            let job = Job::load(&input)?;
            for (i, d) in verify(&job.p, &job.t, job.k, lo, hi, &job.w).to_starts() {
                writeln!(out, "{i}\t{d}")?;
            }
        }
        Command::Bench {
            sizes,
            repeats,
            algos,
            seed,
            threads,
            alphabet_size,
        } => {
            let sizes = parse_sizes(&sizes)?;
            let algos = algos
                .split(',')
                .map(|a| a.trim().parse::<Algo>().map_err(|e| CliError::Usage(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            writeln!(out, "algo,n,m,k,seed,wall_ms,occ_count")?;
            for (n, m, k) in sizes {
                let inst = generate(&GenParams {
                    length: n,
                    pattern_length: m,
                    alphabet_size,
                    mutation_rate: (k as f64 / (4.0 * m as f64)).min(1.0),
                    seed,
                })
                .map_err(|e| CliError::Usage(e.to_string()))?;
                let w = WeightTable::unit(inst.alphabet.clone());
                for &algo in &algos {
                    for _ in 0..repeats {
                        let start = Instant::now();
                        let found = algo.run(&inst.pattern, &inst.text, Cost::units(k as u64), &w, threads);
                        let ms = start.elapsed().as_secs_f64() * 1e3;
                        writeln!(out, "{algo},{n},{m},{k},{seed},{ms:.3},{}", found.len())?;
                        out.flush()?;
                    }
                }
            }
        }
        Command::Gen {
            length,
            pattern_length,
            alphabet_size,
            mutation_rate,
            seed,
            pattern,
            text,
        } => {
            let inst = generate(&GenParams {
                length,
                pattern_length,
                alphabet_size,
                mutation_rate,
                seed,
            })
            .map_err(|e| CliError::Usage(e.to_string()))?;
            write_file(&pattern, &inst.alphabet.decode(&inst.pattern))?;
            write_file(&text, &inst.alphabet.decode(&inst.text))?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Encoded inputs of one matching run.
struct Job {
    p: Vec<Sym>,
    t: Vec<Sym>,
    k: Cost,
    w: WeightTable,
    threads: usize,
}

impl Job {
    fn load(input: &Input) -> Result<Job> {
        let k: Cost = input
            .k
            .parse()
            .map_err(|_| CliError::Usage(format!("-k: `{}` is not a non-negative decimal with at most 6 fractional digits", input.k)))?;
        let p = read_input(&input.pattern)?;
        let t = read_input(&input.text)?;
        let alphabet = Alphabet::new(p.chars().chain(t.chars()));
        let w = match &input.weights {
            Some(path) => WeightTable::parse(&read_file(path)?, &alphabet).map_err(CliError::Weights)?,
            None => WeightTable::unit(alphabet),
        };
        let enc = |s: &str| w.alphabet().encode(s).expect("alphabet covers both inputs");
        Ok(Job {
            p: enc(&p),
            t: enc(&t),
            k,
            threads: input.threads as usize,
            w,
        })
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// File contents with one trailing newline removed.
fn read_input(path: &Path) -> Result<String> {
    let mut s = read_file(path)?;
    if s.ends_with('\n') {
        s.pop();
        if s.ends_with('\r') {
            s.pop();
        }
    }
    Ok(s)
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    fs::write(path, format!("{body}\n")).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parse_interval(s: &str) -> Result<(usize, usize)> {
    let bad = || CliError::Usage(format!("--interval: expected L:R with L ≤ R, got `{s}`"));
    let (l, r) = s.split_once(':').ok_or_else(bad)?;
    let (l, r): (usize, usize) = (l.trim().parse().map_err(|_| bad())?, r.trim().parse().map_err(|_| bad())?);
    if l > r {
        return Err(bad());
    }
    Ok((l, r))
}

fn parse_sizes(s: &str) -> Result<Vec<(usize, usize, usize)>> {
    s.split(',')
        .map(|item| {
            let bad = || CliError::Usage(format!("--sizes: expected n:m:k, got `{item}`"));
            let parts: Vec<usize> = item
                .trim()
                .split(':')
                .map(|x| x.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            match parts[..] {
                [n, m, k] if m >= 1 && m <= n => Ok((n, m, k)),
                _ => Err(bad()),
            }
        })
        .collect()
}
