//! Alphabets and normalized weight tables.

use std::collections::HashMap;

use super::cost::{Cost, SCALE};
use crate::error::{Error, Result};

/// Encoded character. `0` is reserved for ε; letters are `1..=σ`.
pub type Sym = u32;

/// The empty symbol ε.
pub const EPS: Sym = 0;

/// Ordered character set Σ with a dense encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    chars: Vec<char>,
    index: HashMap<char, Sym>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(chars: I) -> Alphabet {
        let mut chars: Vec<char> = chars.into_iter().collect();
        chars.sort_unstable();
        chars.dedup();
        let index = chars.iter().enumerate().map(|(i, &c)| (c, i as Sym + 1)).collect();
        Alphabet { chars, index }
    }

    /// The first `sigma` lowercase letters; handy for generated instances.
    pub fn lowercase(sigma: usize) -> Alphabet {
        Alphabet::new((0..sigma as u8).map(|i| (b'a' + i) as char))
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn sym(&self, c: char) -> Option<Sym> {
        self.index.get(&c).copied()
    }

    /// Character for a letter symbol; `None` for ε or unknown codes.
    pub fn char_of(&self, s: Sym) -> Option<char> {
        (s as usize).checked_sub(1).and_then(|i| self.chars.get(i)).copied()
    }

    pub fn encode(&self, s: &str) -> Result<Vec<Sym>> {
        s.chars().map(|c| self.sym(c).ok_or(Error::UnknownSymbol(c))).collect()
    }

    pub fn decode(&self, syms: &[Sym]) -> String {
        syms.iter().filter_map(|&s| self.char_of(s)).collect()
    }
}

/// A normalized weight function over (Σ∪{ε})².
///
/// Stored densely, so every lookup is a single index.
#[derive(Clone, Debug)]
pub struct WeightTable {
    alphabet: Alphabet,
    stride: usize,
    table: Vec<Cost>,
    default_mismatch: Cost,
    cap: Cost,
}

impl WeightTable {
    /// All indels and substitutions cost one unit.
    pub fn unit(alphabet: Alphabet) -> WeightTable {
        Self::build(alphabet, Cost::units(1), &[]).expect("unit table is normalized")
    }

    /// Builds a table from explicit entries (`None` is ε); later entries win.
    pub fn from_entries(
        alphabet: Alphabet,
        default_mismatch: Cost,
        entries: &[(Option<char>, Option<char>, Cost)],
    ) -> Result<WeightTable> {
        let mut alphabet = alphabet;
        let extra: Vec<char> = entries
            .iter()
            .flat_map(|&(a, b, _)| [a, b])
            .flatten()
            .filter(|&c| alphabet.sym(c).is_none())
            .collect();
        if !extra.is_empty() {
            alphabet = Alphabet::new(alphabet.chars().iter().copied().chain(extra));
        }
        let coded: Vec<(Sym, Sym, Cost)> = entries
            .iter()
            .map(|&(a, b, c)| {
                let enc = |x: Option<char>| x.map_or(EPS, |ch| alphabet.sym(ch).unwrap());
                (enc(a), enc(b), c)
            })
            .collect();
        Self::build(alphabet, default_mismatch, &coded)
    }

    /// Builds a table over symbol codes directly (ε = 0); later entries win.
    pub fn from_sym_entries(
        alphabet: Alphabet,
        default_mismatch: Cost,
        entries: &[(Sym, Sym, Cost)],
    ) -> Result<WeightTable> {
        let sigma = alphabet.len() as Sym;
        if let Some(&(a, b, _)) = entries.iter().find(|&&(a, b, _)| a > sigma || b > sigma) {
            return Err(Error::Precondition(format!("symbol pair ({a}, {b}) outside alphabet")));
        }
        Self::build(alphabet, default_mismatch, entries)
    }

    fn build(alphabet: Alphabet, default_mismatch: Cost, entries: &[(Sym, Sym, Cost)]) -> Result<WeightTable> {
        if default_mismatch < Cost::units(1) || default_mismatch.is_inf() {
            return Err(Error::Normalization(format!("default mismatch {default_mismatch} is below 1")));
        }
        let stride = alphabet.len() + 1;
        let mut table = vec![default_mismatch; stride * stride];
        for a in 0..stride {
            table[a * stride + a] = Cost::ZERO;
        }
        for &(a, b, c) in entries {
            table[a as usize * stride + b as usize] = c;
        }
        let name = |s: Sym| alphabet.char_of(s).map_or_else(|| "EPS".to_string(), |c| c.to_string());
        for a in 0..stride {
            for b in 0..stride {
                let c = table[a * stride + b];
                if a == b && c != Cost::ZERO {
                    return Err(Error::Normalization(format!(
                        "w({0},{0}) = {c}, expected 0",
                        name(a as Sym)
                    )));
                }
                if a != b && (c < Cost::units(1) || c.is_inf()) {
                    return Err(Error::Normalization(format!(
                        "w({},{}) = {c}, expected at least 1",
                        name(a as Sym),
                        name(b as Sym)
                    )));
                }
            }
        }
        let cap = table.iter().copied().max().unwrap_or(Cost::ZERO);
        Ok(WeightTable {
            alphabet,
            stride,
            table,
            default_mismatch,
            cap,
        })
    }

    /// Parses the line-oriented weight-file format.
    ///
    /// Characters named in the file but missing from `alphabet` are added to
    /// the table's alphabet; encode texts with [`WeightTable::alphabet`].
    pub fn parse(spec: &str, alphabet: &Alphabet) -> Result<WeightTable> {
        let mut entries = Vec::new();
        for (no, raw) in spec.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected SRC<TAB>DST<TAB>COST, got {} field(s)", fields.len()),
                });
            }
            let sym = |f: &str| -> Result<Option<char>> {
                if f == "EPS" {
                    return Ok(None);
                }
                let mut it = f.chars();
                match (it.next(), it.next()) {
                    (Some(c), None) => Ok(Some(c)),
                    _ => Err(Error::Parse {
                        line: line_no,
                        msg: format!("`{f}` is neither a single character nor EPS"),
                    }),
                }
            };
            let cost: Cost = fields[2].trim().parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: line_no, msg },
                other => other,
            })?;
            entries.push((sym(fields[0])?, sym(fields[1])?, cost));
        }
        Self::from_entries(alphabet.clone(), Cost::units(1), &entries)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.len()
    }

    /// w(a, b) with ε encoded as `EPS`.
    #[inline]
    pub fn w(&self, a: Sym, b: Sym) -> Cost {
        self.table[a as usize * self.stride + b as usize]
    }

    /// Deletion cost w(a, ε).
    #[inline]
    pub fn del(&self, a: Sym) -> Cost {
        self.table[a as usize * self.stride]
    }

    /// Insertion cost w(ε, b).
    #[inline]
    pub fn ins(&self, b: Sym) -> Cost {
        self.table[b as usize]
    }

    /// Substitution row for `a`, indexable by the text symbol.
    #[inline]
    pub fn sub_row(&self, a: Sym) -> &[Cost] {
        let s = a as usize * self.stride;
        &self.table[s..s + self.stride]
    }

    pub fn default_mismatch(&self) -> Cost {
        self.default_mismatch
    }

    /// The cap W: the largest entry.
    pub fn cap(&self) -> Cost {
        self.cap
    }

    /// Weight of a back edge in the augmented graph, W + 1.
    pub fn back_edge(&self) -> Cost {
        self.cap + Cost::units(1)
    }

    /// True when every off-diagonal entry is exactly one unit.
    pub fn is_unit(&self) -> bool {
        (0..self.stride).all(|a| (0..self.stride).all(|b| a == b || self.table[a * self.stride + b] == Cost::from_micros(SCALE)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(['a', 'b'])
    }

    #[test]
    fn empty_spec_is_unit() {
        let w = WeightTable::parse("", &ab()).unwrap();
        assert!(w.is_unit());
        for a in 0..=2 {
            for b in 0..=2 {
                let want = if a == b { Cost::ZERO } else { Cost::units(1) };
                assert_eq!(w.w(a, b), want);
            }
        }
    }

    #[test]
    fn sub_unit_cost_rejected() {
        let err = WeightTable::parse("a\tb\t0.5\n", &ab()).unwrap_err();
        assert!(matches!(err, Error::Normalization(_)));
    }

    #[test]
    fn deletion_entry_with_defaults() {
        let sigma = Alphabet::new(['a']);
        let w = WeightTable::parse("# comment\na\tEPS\t2\n", &sigma).unwrap();
        let a = w.alphabet().sym('a').unwrap();
        assert_eq!(w.del(a), Cost::units(2));
        assert_eq!(w.ins(a), Cost::units(1));
        assert_eq!(w.w(a, a), Cost::ZERO);
        assert_eq!(w.cap(), Cost::units(2));
    }

    #[test]
    fn last_duplicate_wins_and_alphabet_grows() {
        let w = WeightTable::parse("a\tc\t3\na\tc\t2.25\n", &ab()).unwrap();
        let (a, c) = (w.alphabet().sym('a').unwrap(), w.alphabet().sym('c').unwrap());
        assert_eq!(w.w(a, c), Cost::from_micros(2_250_000));
        assert_eq!(w.sigma(), 3);
    }

    #[test]
    fn nonzero_diagonal_rejected() {
        assert!(matches!(WeightTable::parse("a\ta\t1\n", &ab()), Err(Error::Normalization(_))));
        assert!(matches!(WeightTable::parse("EPS\tEPS\t1\n", &ab()), Err(Error::Normalization(_))));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(WeightTable::parse("a b 1\n", &ab()), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(WeightTable::parse("ab\tb\t1\n", &ab()), Err(Error::Parse { .. })));
        assert!(matches!(WeightTable::parse("\n\na\tb\tx\n", &ab()), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn codec_round_trip() {
        let s = Alphabet::new("hello world".chars());
        let enc = s.encode("hello").unwrap();
        assert_eq!(s.decode(&enc), "hello");
        assert_eq!(s.encode("xyz"), Err(Error::UnknownSymbol('x')));
    }
}
