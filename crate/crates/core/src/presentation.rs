//! Finite presentations `<g1, ..., gk | r1, ..., rm>` and their text syntax.
//!
//! Grammar:
//!
//! ```text
//! presentation := '<' generators? '|' relators? '>'
//! generators   := symbol (',' symbol)*
//! relators     := relation (',' relation)*
//! relation     := word ('=' word)?          u = v stands for u·v⁻¹
//! word         := '1' | factor+
//! factor       := (symbol | '(' word ')') ('^' integer)?
//! symbol       := letter [0-9_]*
//! ```
//!
//! Juxtaposition is multiplication, so `ab` is `a·b`; a symbol is one letter
//! followed by digits or underscores, which keeps `x1x2` unambiguous.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A word as a sequence of `(generator index, nonzero exponent)` syllables.
/// Adjacent syllables never share a generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![(g, 1)])
    }

    /// Builds a word, merging adjacent powers of the same generator.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i64)>>(syllables: I) -> Self {
        let mut w = Word::identity();
        for (g, e) in syllables {
            w.push(g, e);
        }
        w
    }

    /// Builds a word from single letters `(generator, inverted?)`.
    pub fn from_letters<I: IntoIterator<Item = (usize, bool)>>(letters: I) -> Self {
        Word::from_syllables(letters.into_iter().map(|(g, inv)| (g, if inv { -1 } else { 1 })))
    }

    pub fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((g, e));
    }

    pub fn append(&mut self, other: &Word) {
        for &(g, e) in &other.0 {
            self.push(g, e);
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..n.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total letter count.
    pub fn len(&self) -> usize {
        self.0.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Letters `(generator, inverted?)` in order.
    pub fn letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.0
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e < 0), e.unsigned_abs() as usize))
    }

    pub fn generators_used(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&(g, _)| g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if !is_symbol(g) {
                return Err(Error::InvalidInput(format!("`{g}` is not a valid generator symbol")));
            }
            if seen.insert(g.as_str(), i).is_some() {
                return Err(Error::InvalidInput(format!("generator `{g}` declared twice")));
            }
        }
        for r in &relators {
            if let Some(g) = r.generators_used().find(|&g| g >= generators.len()) {
                return Err(Error::InvalidInput(format!("relator uses undeclared generator {g}")));
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, symbol: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == symbol)
    }

    pub fn format_word(&self, w: &Word) -> String {
        format_word_with(w, |g| self.generators[g].as_str())
    }
}

pub(crate) fn format_word_with<'a>(w: &Word, name: impl Fn(usize) -> &'a str) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut s = String::new();
    for &(g, e) in w.syllables() {
        s.push_str(name(g));
        if e != 1 {
            s.push('^');
            s.push_str(&e.to_string());
        }
    }
    s
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(","))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "{}>", rels.join(", "))
    }
}

fn is_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_digit() || c == '_')
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        symbols: HashMap::new(),
    };
    p.presentation()
}

impl std::str::FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    symbols: HashMap<String, usize>,
}

/// Bound on nesting depth and on repeated expansion so hostile input cannot
/// exhaust the stack or memory.
const MAX_DEPTH: usize = 64;
const MAX_WORD_LEN: usize = 1 << 20;

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::syntax(self.pos, format!("expected `{}`", c as char)))
        }
    }

    fn symbol(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return Err(Error::syntax(start, "expected a generator symbol")),
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn presentation(&mut self) -> Result<Presentation> {
        self.expect(b'<')?;
        let mut generators = Vec::new();
        if self.peek() != Some(b'|') {
            loop {
                let at = self.pos;
                let s = self.symbol()?;
                if self.symbols.contains_key(&s) {
                    return Err(Error::syntax(at, format!("generator `{s}` declared twice")));
                }
                self.symbols.insert(s.clone(), generators.len());
                generators.push(s);
                if self.peek() == Some(b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(b'|')?;
        let mut relators = Vec::new();
        if self.peek() != Some(b'>') {
            loop {
                relators.push(self.relation()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    _ => break,
                }
            }
        }
        self.expect(b'>')?;
        if self.peek().is_some() {
            return Err(Error::syntax(self.pos, "trailing input after `>`"));
        }
        Presentation::new(generators, relators)
    }

    fn relation(&mut self) -> Result<Word> {
        let mut lhs = self.word(0)?;
        if self.peek() == Some(b'=') {
            self.pos += 1;
            let rhs = self.word(0)?;
            lhs.append(&rhs.inverse());
        }
        Ok(lhs)
    }

    fn word(&mut self, depth: usize) -> Result<Word> {
        if depth > MAX_DEPTH {
            return Err(Error::syntax(self.pos, "parentheses nested too deeply"));
        }
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Word::identity());
        }
        let mut w = Word::identity();
        let mut any = false;
        while let Some(c) = self.peek() {
            if !(c.is_ascii_alphabetic() || c == b'(') {
                break;
            }
            any = true;
            let factor = if c == b'(' {
                self.pos += 1;
                let inner = self.word(depth + 1)?;
                self.expect(b')')?;
                inner
            } else {
                let at = self.pos;
                let s = self.symbol()?;
                let g = *self
                    .symbols
                    .get(&s)
                    .ok_or(Error::UndeclaredGenerator { symbol: s, position: at })?;
                Word::generator(g)
            };
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.integer()?
            } else {
                1
            };
            if factor.len().saturating_mul(e.unsigned_abs() as usize) + w.len() > MAX_WORD_LEN {
                return Err(Error::syntax(self.pos, "word too long"));
            }
            if factor.syllables().len() == 1 {
                let (g, f) = factor.syllables()[0];
                w.push(g, f * e);
            } else {
                w.append(&factor.pow(e));
            }
        }
        if !any {
            return Err(Error::syntax(self.pos, "expected a word"));
        }
        Ok(w)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            return Err(Error::syntax(start, "expected an integer exponent"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<i64>().ok())
            .filter(|e| e.unsigned_abs() <= MAX_WORD_LEN as u64)
            .ok_or_else(|| Error::syntax(start, "exponent out of range"))
    }
}

/// Result of [`eliminate_short_relators`]: a smaller presentation plus the
/// word in the new generators that each original generator equals.
#[derive(Clone, Debug)]
pub struct Simplified {
    pub presentation: Presentation,
    pub substitution: Vec<Word>,
}

/// Tietze elimination driven by short relators: after free and cyclic
/// reduction, a relator `g^±1` deletes `g`, and a relator `g^s h^t` with
/// `g ≠ h` replaces the later generator by a power of the earlier one.
/// Repeats to a fixed point and drops duplicate relators (up to cyclic
/// rotation and inversion). The presented group is unchanged.
pub fn eliminate_short_relators(p: &Presentation) -> Simplified {
    #[derive(Clone, Copy)]
    enum Alias {
        Root,
        Identity,
        To(usize, bool),
    }
    let n = p.generators().len();
    let mut alias = vec![Alias::Root; n];

    fn resolve(alias: &[Alias], mut g: usize, mut inv: bool) -> Option<(usize, bool)> {
        loop {
            match alias[g] {
                Alias::Root => return Some((g, inv)),
                Alias::Identity => return None,
                Alias::To(h, flip) => {
                    g = h;
                    inv ^= flip;
                }
            }
        }
    }

    let letter_rels: Vec<Vec<(usize, bool)>> =
        p.relators().iter().map(|r| r.letters().collect()).collect();
    let mut current: Vec<Vec<(usize, bool)>>;
    loop {
        let mut changed = false;
        current = Vec::with_capacity(letter_rels.len());
        for r in &letter_rels {
            let mut w: Vec<(usize, bool)> = Vec::with_capacity(r.len());
            for &(g, inv) in r {
                if let Some(l) = resolve(&alias, g, inv) {
                    if matches!(w.last(), Some(&(h, i)) if h == l.0 && i != l.1) {
                        w.pop();
                    } else {
                        w.push(l);
                    }
                }
            }
            cyclic_reduce(&mut w);
            match w.len() {
                0 => continue,
                1 => {
                    alias[w[0].0] = Alias::Identity;
                    changed = true;
                    continue;
                }
                2 if w[0].0 != w[1].0 => {
                    // g^s h^t = 1  =>  h = g^(-s·t) with s, t = ±1
                    let (g, s) = w[0];
                    let (h, t) = w[1];
                    let (keep, drop, keep_inv, drop_inv) =
                        if g < h { (g, h, s, t) } else { (h, g, t, s) };
                    // drop^d = keep^(-k)  =>  drop = keep^(±1)
                    let flip = !(keep_inv ^ drop_inv);
                    alias[drop] = Alias::To(keep, flip);
                    changed = true;
                    continue;
                }
                _ => {}
            }
            current.push(w);
        }
        if !changed {
            break;
        }
    }

    let mut renumber = vec![usize::MAX; n];
    let mut names = Vec::new();
    for g in 0..n {
        if matches!(alias[g], Alias::Root) {
            renumber[g] = names.len();
            names.push(p.generators()[g].clone());
        }
    }
    let mut rels: Vec<Vec<(usize, bool)>> = current
        .into_iter()
        .map(|w| canonical_rotation(w.into_iter().map(|(g, i)| (renumber[g], i)).collect()))
        .collect();
    rels.sort();
    rels.dedup();
    let relators = rels.into_iter().map(Word::from_letters).collect();
    let substitution = (0..n)
        .map(|g| match resolve(&alias, g, false) {
            None => Word::identity(),
            Some((r, inv)) => Word::from_letters([(renumber[r], inv)]),
        })
        .collect();
    Simplified {
        presentation: Presentation {
            generators: names,
            relators,
        },
        substitution,
    }
}

fn cyclic_reduce(w: &mut Vec<(usize, bool)>) {
    let mut start = 0;
    let mut end = w.len();
    while end - start >= 2 {
        let (a, b) = (w[start], w[end - 1]);
        if a.0 == b.0 && a.1 != b.1 {
            start += 1;
            end -= 1;
        } else {
            break;
        }
    }
    w.truncate(end);
    w.drain(..start);
}

/// Lexicographically least rotation of the word or of its inverse.
fn canonical_rotation(w: Vec<(usize, bool)>) -> Vec<(usize, bool)> {
    let inv: Vec<(usize, bool)> = w.iter().rev().map(|&(g, i)| (g, !i)).collect();
    let mut best = w.clone();
    for base in [&w, &inv] {
        for k in 0..base.len() {
            let rot: Vec<(usize, bool)> = base[k..].iter().chain(&base[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_presentation() {
        let p = parse_presentation("<a,b | a^2, b^3, (ab)^2>").unwrap();
        assert_eq!(p.generators(), ["a", "b"]);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.relators()[2], Word::from_syllables([(0, 1), (1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn expands_equation_sugar() {
        let p = parse_presentation("<x,y | x^2=y^3, xyx^-1=y^-1>").unwrap();
        assert_eq!(p.relators()[0], Word::from_syllables([(0, 2), (1, -3)]));
        assert_eq!(
            p.relators()[1],
            Word::from_syllables([(0, 1), (1, 1), (0, -1), (1, 1)])
        );
        assert_eq!(p.format_word(&p.relators()[1]), "xyx^-1y");
    }

    #[test]
    fn empty_relator_list() {
        let p = parse_presentation("<a | >").unwrap();
        assert_eq!(p.generators().len(), 1);
        assert!(p.relators().is_empty());
        let p = parse_presentation("< | >").unwrap();
        assert!(p.generators().is_empty());
    }

    #[test]
    fn multi_character_symbols() {
        let p = parse_presentation("<x1, x2 | x1x2^-1x1, (x1 x2)^-2>").unwrap();
        assert_eq!(p.relators()[0], Word::from_syllables([(0, 1), (1, -1), (0, 1)]));
        assert_eq!(
            p.relators()[1],
            Word::from_syllables([(1, -1), (0, -1), (1, -1), (0, -1)])
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse_presentation("<a,b | a^2, c>") {
            Err(Error::UndeclaredGenerator { symbol, position }) => {
                assert_eq!(symbol, "c");
                assert_eq!(position, 12);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_presentation("<a | a^>"),
            Err(Error::Syntax { position: 7, .. })
        ));
        assert!(matches!(parse_presentation("a | a"), Err(Error::Syntax { position: 0, .. })));
        assert!(parse_presentation("<a,a | a>").is_err());
        assert!(parse_presentation("<a | a> x").is_err());
        assert!(parse_presentation("<a | a,>").is_err());
    }

    #[test]
    fn identity_word_round_trips() {
        let p = parse_presentation("<a | aa^-1, a^3>").unwrap();
        assert!(p.relators()[0].is_empty());
        let printed = p.to_string();
        assert_eq!(printed, "<a | 1, a^3>");
        assert_eq!(parse_presentation(&printed).unwrap(), p);
    }

    #[test]
    fn simplification_eliminates_short_relators() {
        let p = parse_presentation("<a,b,c,d | b, ca, d^2, ab^3c^-1a^2d>").unwrap();
        let s = eliminate_short_relators(&p);
        // b = 1, c = a^-1; remaining a, d
        assert_eq!(s.presentation.generators(), ["a", "d"]);
        assert_eq!(s.substitution[1], Word::identity());
        assert_eq!(s.substitution[2], Word::from_syllables([(0, -1)]));
        // a·a·a^2·d = a^4 d, plus d^2
        assert_eq!(s.presentation.relators().len(), 2);
    }
}
