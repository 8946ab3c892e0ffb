//! Plain-text algebra files.
//!
//! ```text
//! # comment
//! field = Q                  # or F2, F3, F5, ...
//! dim = 2
//! basis = [x, x2]            # optional, defaults to e1..en
//! table = [
//!   [0, 0, [1, 1]],          # [e_0, e_0] = 1·e_1
//!   [1, 0, [1, 1, 1]],       # coefficient as numerator, denominator
//! ]
//! ```
//!
//! Indices are 0-based. Each table entry is `[i, j, term, ...]` and each
//! term is `[k, num]` or `[k, num, den]`. Products not listed are zero.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, FieldDesc};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub k: usize,
    pub num: BigInt,
    pub den: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

/// A parsed file before conversion to a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: FieldDesc,
    pub labels: Vec<String>,
    pub entries: Vec<Entry>,
}

impl AlgebraFile {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Canonical form of an algebra: nonzero products in `(i, j)` order,
    /// nonzero terms in `k` order, coefficients in lowest terms.
    pub fn from_algebra<F: Field>(l: &LeibnizAlgebra<F>) -> Self {
        let n = l.dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<Term> = l
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        let (num, den) = c.to_ratio();
                        Term { k, num, den }
                    })
                    .collect();
                if !terms.is_empty() {
                    entries.push(Entry { i, j, terms });
                }
            }
        }
        AlgebraFile {
            field: l.field(),
            labels: l.labels().to_vec(),
            entries,
        }
    }

    /// Builds the algebra over `F` without checking the identity. A file
    /// over Q may be read into a prime field; any other field change is a
    /// mismatch.
    pub fn to_algebra_unchecked<F: Field>(&self) -> Result<LeibnizAlgebra<F>> {
        let target = F::descriptor();
        if self.field != target && self.field != FieldDesc::Rationals {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: target,
            });
        }
        let n = self.dim();
        let mut table = vec![F::zero(); n * n * n];
        for e in &self.entries {
            for t in &e.terms {
                let c = F::from_ratio(&t.num, &t.den).ok_or_else(|| {
                    Error::Reduction(format!(
                        "coefficient {}/{} of [{}, {}] has no value in {target}",
                        t.num, t.den, e.i, e.j
                    ))
                })?;
                table[(e.i * n + e.j) * n + t.k] = c;
            }
        }
        LeibnizAlgebra::new_unchecked(self.labels.clone(), table)
    }

    /// As [`to_algebra_unchecked`](Self::to_algebra_unchecked), then
    /// rejects tables violating the Leibniz identity.
    pub fn to_algebra<F: Field>(&self) -> Result<LeibnizAlgebra<F>> {
        let l = self.to_algebra_unchecked::<F>()?;
        let check = l.check_leibniz();
        if !check.passed() {
            return Err(Error::NotLeibniz {
                failures: check.failures.len(),
            });
        }
        Ok(l)
    }
}

/// Parses and builds a checked algebra over `F`.
pub fn parse_algebra<F: Field>(text: &str) -> Result<LeibnizAlgebra<F>> {
    text.parse::<AlgebraFile>()?.to_algebra()
}

/// Canonical text of an algebra.
pub fn print_algebra<F: Field>(l: &LeibnizAlgebra<F>) -> String {
    AlgebraFile::from_algebra(l).to_string()
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field = {}", self.field)?;
        writeln!(f, "dim = {}", self.dim())?;
        writeln!(f, "basis = [{}]", self.labels.join(", "))?;
        if self.entries.is_empty() {
            return writeln!(f, "table = []");
        }
        writeln!(f, "table = [")?;
        for e in &self.entries {
            write!(f, "  [{}, {}", e.i, e.j)?;
            for t in &e.terms {
                if t.den.is_one() {
                    write!(f, ", [{}, {}]", t.k, t.num)?;
                } else {
                    write!(f, ", [{}, {}, {}]", t.k, t.num, t.den)?;
                }
            }
            writeln!(f, "],")?;
        }
        writeln!(f, "]")
    }
}

impl FromStr for AlgebraFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Parser::new(text)?.file()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut c = 0;
        while c < chars.len() {
            let pos = Pos {
                line: li + 1,
                column: c + 1,
            };
            let ch = chars[c];
            if ch == '#' {
                break;
            } else if ch.is_whitespace() {
                c += 1;
            } else if "=[],".contains(ch) {
                out.push((Tok::Punct(ch), pos));
                c += 1;
            } else if ch.is_ascii_digit() || (ch == '-' && chars.get(c + 1).is_some_and(|d| d.is_ascii_digit())) {
                let start = c;
                c += 1;
                while c < chars.len() && chars[c].is_ascii_digit() {
                    c += 1;
                }
                let s: String = chars[start..c].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), pos));
            } else if ch.is_alphabetic() || ch == '_' {
                let start = c;
                while c < chars.len() && (chars[c].is_alphanumeric() || chars[c] == '_' || chars[c] == '\'') {
                    c += 1;
                }
                out.push((Tok::Ident(chars[start..c].iter().collect()), pos));
            } else {
                return Err(err(pos, format!("unexpected character `{ch}`")));
            }
        }
    }
    let end = Pos {
        line: text.lines().count().max(1),
        column: text.lines().last().map_or(0, |l| l.chars().count()) + 1,
    };
    out.push((Tok::Eof, end));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

struct RawEntry {
    entry: Entry,
    pos: Pos,
    term_pos: Vec<Pos>,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &(Tok, Pos) {
        &self.toks[self.at]
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn punct(&mut self, want: char) -> Result<Pos> {
        match self.next() {
            (Tok::Punct(c), p) if c == want => Ok(p),
            (t, p) => Err(err(p, format!("expected `{want}`, found {t}"))),
        }
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        match self.next() {
            (Tok::Ident(s), p) => Ok((s, p)),
            (t, p) => Err(err(p, format!("expected a name, found {t}"))),
        }
    }

    fn int(&mut self) -> Result<(BigInt, Pos)> {
        match self.next() {
            (Tok::Int(n), p) => Ok((n, p)),
            (t, p) => Err(err(p, format!("expected an integer, found {t}"))),
        }
    }

    fn index(&mut self) -> Result<(usize, Pos)> {
        let (n, p) = self.int()?;
        let i = usize::try_from(&n).map_err(|_| err(p, format!("index {n} is not a nonnegative integer")))?;
        Ok((i, p))
    }

    /// `[ item (, item)* ,? ]` or `[]`.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.punct('[')?;
        let mut out = Vec::new();
        loop {
            if self.peek().0 == Tok::Punct(']') {
                self.next();
                return Ok(out);
            }
            out.push(item(self)?);
            match self.next() {
                (Tok::Punct(','), _) => {}
                (Tok::Punct(']'), _) => return Ok(out),
                (t, p) => return Err(err(p, format!("expected `,` or `]`, found {t}"))),
            }
        }
    }

    fn term(&mut self) -> Result<(Term, Pos)> {
        let pos = self.punct('[')?;
        let (k, _) = self.index()?;
        self.punct(',')?;
        let (num, _) = self.int()?;
        let den = if self.peek().0 == Tok::Punct(',') {
            self.next();
            let (d, dp) = self.int()?;
            if d.is_zero() {
                return Err(err(dp, "zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        self.punct(']')?;
        let (num, den) = BigRational::new(num, den).into_raw();
        Ok((Term { k, num, den }, pos))
    }

    fn entry(&mut self) -> Result<RawEntry> {
        let pos = self.punct('[')?;
        let (i, _) = self.index()?;
        self.punct(',')?;
        let (j, _) = self.index()?;
        let mut terms = Vec::new();
        let mut term_pos = Vec::new();
        while self.peek().0 == Tok::Punct(',') {
            self.next();
            if self.peek().0 == Tok::Punct(']') {
                break;
            }
            let (t, p) = self.term()?;
            terms.push(t);
            term_pos.push(p);
        }
        self.punct(']')?;
        Ok(RawEntry {
            entry: Entry { i, j, terms },
            pos,
            term_pos,
        })
    }

    fn file(&mut self) -> Result<AlgebraFile> {
        let mut field: Option<FieldDesc> = None;
        let mut dim: Option<(usize, Pos)> = None;
        let mut basis: Option<(Vec<(String, Pos)>, Pos)> = None;
        let mut table: Option<Vec<RawEntry>> = None;
        loop {
            if self.peek().0 == Tok::Eof {
                break;
            }
            let (key, kp) = self.ident()?;
            self.punct('=')?;
            let dup = || err(kp, format!("key `{key}` given twice"));
            match key.as_str() {
                "field" => {
                    let (name, p) = self.ident()?;
                    let desc = name.parse::<FieldDesc>().map_err(|e| err(p, e.to_string()))?;
                    if field.replace(desc).is_some() {
                        return Err(dup());
                    }
                }
                "dim" => {
                    let d = self.index()?;
                    if dim.replace(d).is_some() {
                        return Err(dup());
                    }
                }
                "basis" => {
                    let p = self.peek().1;
                    let labels = self.list(|s| s.ident())?;
                    if basis.replace((labels, p)).is_some() {
                        return Err(dup());
                    }
                }
                "table" => {
                    let entries = self.list(|s| s.entry())?;
                    if table.replace(entries).is_some() {
                        return Err(dup());
                    }
                }
                _ => return Err(err(kp, format!("unknown key `{key}`"))),
            }
        }
        let eof = self.peek().1;
        let field = field.ok_or_else(|| err(eof, "missing key `field`"))?;
        let (n, _) = dim.ok_or_else(|| err(eof, "missing key `dim`"))?;
        let table = table.ok_or_else(|| err(eof, "missing key `table`"))?;

        let labels = match basis {
            None => (1..=n).map(|i| format!("e{i}")).collect(),
            Some((labels, p)) => {
                if labels.len() != n {
                    return Err(err(p, format!("basis has {} labels but dim = {n}", labels.len())));
                }
                for (a, (name, lp)) in labels.iter().enumerate() {
                    if labels[..a].iter().any(|(b, _)| b == name) {
                        return Err(err(*lp, format!("duplicate label `{name}`")));
                    }
                }
                labels.into_iter().map(|(s, _)| s).collect()
            }
        };

        let mut entries: Vec<Entry> = Vec::new();
        for raw in table {
            let e = raw.entry;
            if e.i >= n || e.j >= n {
                return Err(err(raw.pos, format!("product [{}, {}] out of range for dim {n}", e.i, e.j)));
            }
            if entries.iter().any(|o| o.i == e.i && o.j == e.j) {
                return Err(err(raw.pos, format!("product [{}, {}] listed twice", e.i, e.j)));
            }
            for (t, (term, tp)) in e.terms.iter().zip(&raw.term_pos).enumerate() {
                if term.k >= n {
                    return Err(err(*tp, format!("index {} out of range for dim {n}", term.k)));
                }
                if e.terms[..t].iter().any(|o| o.k == term.k) {
                    return Err(err(*tp, format!("index {} repeated in product [{}, {}]", term.k, e.i, e.j)));
                }
            }
            entries.push(e);
        }
        Ok(AlgebraFile {
            field,
            labels,
            entries,
        })
    }
}
