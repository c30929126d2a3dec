//! Todd–Coxeter coset enumeration over the trivial subgroup.
//!
//! The table has one column per generator and one per inverse generator
//! (`2g` and `2g + 1`). Coincidences are merged with a union-find forest
//! and processed through a queue; dead rows are dropped by an
//! order-preserving compaction between enumeration steps.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::presentation::{format_word_with, Presentation, Word};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Maximum number of simultaneously live cosets.
    pub max_cosets: usize,
    /// Maximum number of relator-checking sweeps after the table fills up.
    pub max_passes: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_cosets: 1_000_000,
            max_passes: 8,
        }
    }
}

impl EnumerationLimits {
    pub fn new(max_cosets: usize, max_passes: usize) -> Result<Self> {
        if max_cosets == 0 || max_passes == 0 {
            return Err(Error::InvalidInput("enumeration limits must be positive".into()));
        }
        Ok(EnumerationLimits { max_cosets, max_passes })
    }
}

/// How new cosets are defined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Relator tracing: scan every relator from each coset in turn,
    /// defining cosets to complete the scan.
    #[default]
    Hlt,
    /// Define the first empty entry, then chase all deductions it implies.
    Felsch,
}

/// A complete coset table in standard (breadth-first) numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: usize,
    rows: usize,
    entries: Vec<u32>,
    limits: EnumerationLimits,
}

impl CosetTable {
    /// Number of live cosets.
    pub fn len(&self) -> usize {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn limits(&self) -> EnumerationLimits {
        self.limits
    }

    /// `coset · g` (or `coset · g⁻¹` when `inverse`).
    pub fn entry(&self, coset: usize, generator: usize, inverse: bool) -> Option<usize> {
        let col = 2 * generator + inverse as usize;
        match self.entries[coset * 2 * self.generators + col] {
            NONE => None,
            d => Some(d as usize),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|&e| e != NONE)
    }

    /// Every entry has its matching inverse entry.
    pub fn is_consistent(&self) -> bool {
        let cols = 2 * self.generators;
        (0..self.rows).all(|c| {
            (0..cols).all(|x| match self.entries[c * cols + x] {
                NONE => true,
                d => self.entries[d as usize * cols + (x ^ 1)] == c as u32,
            })
        })
    }

    fn trace(&self, coset: usize, w: &Word) -> Option<usize> {
        let mut c = coset;
        for (g, inv) in w.letters() {
            c = self.entry(c, g, inv)?;
        }
        Some(c)
    }

    /// Tracing every relator from every coset returns to the start.
    pub fn satisfies_relators(&self, p: &Presentation) -> bool {
        p.relators()
            .iter()
            .all(|r| (0..self.rows).all(|c| self.trace(c, r) == Some(c)))
    }
}

/// Enumerates the cosets of the trivial subgroup with the relator-tracing
/// strategy. The result is complete, consistent, and satisfies every relator.
pub fn todd_coxeter(p: &Presentation, limits: &EnumerationLimits) -> Result<CosetTable> {
    todd_coxeter_with(p, limits, Strategy::Hlt)
}

pub fn todd_coxeter_with(
    p: &Presentation,
    limits: &EnumerationLimits,
    strategy: Strategy,
) -> Result<CosetTable> {
    let mut e = Enumerator::new(p, *limits, strategy);
    match strategy {
        Strategy::Hlt => e.run_hlt()?,
        Strategy::Felsch => e.run_felsch()?,
    }
    e.verify_passes()?;
    let table = e.standardize();
    if !table.is_complete() || !table.is_consistent() || !table.satisfies_relators(p) {
        return Err(Error::Invariant("completed coset table fails its checks".into()));
    }
    Ok(table)
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    rows: usize,
    live: usize,
    total: usize,
    relators: Vec<Vec<u32>>,
    /// For each column, every `(relator, position)` holding that letter.
    occurrences: Vec<Vec<(u32, u32)>>,
    felsch: bool,
    deductions: Vec<(u32, u32)>,
    queue: Vec<u32>,
    limits: EnumerationLimits,
    coincidences: usize,
}

impl Enumerator {
    fn new(p: &Presentation, limits: EnumerationLimits, strategy: Strategy) -> Self {
        let cols = 2 * p.generators().len();
        let relators: Vec<Vec<u32>> = p
            .relators()
            .iter()
            .map(|r| {
                r.letters()
                    .map(|(g, inv)| (2 * g + inv as usize) as u32)
                    .collect::<Vec<_>>()
            })
            .filter(|r| !r.is_empty())
            .collect();
        let felsch = strategy == Strategy::Felsch;
        let mut occurrences = vec![Vec::new(); cols];
        if felsch {
            for (ri, r) in relators.iter().enumerate() {
                for (pos, &x) in r.iter().enumerate() {
                    occurrences[x as usize].push((ri as u32, pos as u32));
                }
            }
        }
        let mut e = Enumerator {
            cols,
            table: Vec::new(),
            parent: Vec::new(),
            rows: 0,
            live: 0,
            total: 0,
            relators,
            occurrences,
            felsch,
            deductions: Vec::new(),
            queue: Vec::new(),
            limits,
            coincidences: 0,
        };
        e.new_row();
        e
    }

    fn new_row(&mut self) -> u32 {
        let c = self.rows as u32;
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.parent.push(c);
        self.rows += 1;
        self.live += 1;
        self.total += 1;
        c
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.cols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, d: u32) {
        self.table[c as usize * self.cols + x as usize] = d;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn limit_error(&self) -> Error {
        Error::CosetLimit {
            live: self.live,
            total: self.total,
        }
    }

    fn define(&mut self, c: u32, x: u32) -> Result<()> {
        if self.live >= self.limits.max_cosets {
            return Err(self.limit_error());
        }
        let d = self.new_row();
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        if self.felsch {
            self.deductions.push((c, x));
        }
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.coincidences += 1;
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.cols as u32 {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, x ^ 1);
                    if nx != NONE {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                        if self.felsch {
                            self.deductions.push((mu, x));
                        }
                    }
                }
            }
        }
    }

    /// Scans relator `r` (rotated to start at `start`) from coset `c`.
    /// With `fill`, defines cosets until the scan completes; otherwise only
    /// records a deduction when exactly one entry is missing.
    fn scan(&mut self, c: u32, r: usize, start: usize, fill: bool) -> Result<()> {
        let len = self.relators[r].len();
        let letter = |s: &Self, k: usize| s.relators[r][(start + k) % len];
        let mut f = c;
        let mut i = 0;
        let mut b = c;
        let mut j = len;
        loop {
            while i < j {
                let d = self.get(f, letter(self, i));
                if d == NONE {
                    break;
                }
                f = d;
                i += 1;
            }
            if i == len {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j > i {
                let d = self.get(b, letter(self, j - 1) ^ 1);
                if d == NONE {
                    break;
                }
                b = d;
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                let x = letter(self, i);
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                if self.felsch {
                    self.deductions.push((f, x));
                }
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            let x = letter(self, i);
            self.define(f, x)?;
        }
    }

    fn maybe_compact(&mut self) -> Option<Vec<u32>> {
        let dead = self.rows - self.live;
        if self.rows < 4096 || dead < self.live {
            return None;
        }
        Some(self.compact())
    }

    /// Renumbers live cosets in their current order and drops dead rows.
    fn compact(&mut self) -> Vec<u32> {
        let mut map = vec![NONE; self.rows];
        let mut next = 0u32;
        for c in 0..self.rows {
            if self.parent[c] == c as u32 {
                map[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for c in 0..self.rows {
            if map[c] != NONE {
                for &e in &self.table[c * self.cols..(c + 1) * self.cols] {
                    table.push(if e == NONE { NONE } else { map[e as usize] });
                }
            }
        }
        self.table = table;
        self.rows = next as usize;
        self.parent = (0..next).collect();
        let deductions = std::mem::take(&mut self.deductions);
        self.deductions = deductions
            .into_iter()
            .filter(|&(c, _)| map[c as usize] != NONE)
            .map(|(c, x)| (map[c as usize], x))
            .collect();
        map
    }

    fn remap_cursor(map: &[u32], cursor: usize) -> usize {
        map[..cursor].iter().filter(|&&m| m != NONE).count()
    }

    fn run_hlt(&mut self) -> Result<()> {
        let mut c = 0usize;
        while c < self.rows {
            let cc = c as u32;
            if self.is_live(cc) {
                for r in 0..self.relators.len() {
                    self.scan(cc, r, 0, true)?;
                    if !self.is_live(cc) {
                        break;
                    }
                }
                if self.is_live(cc) {
                    for x in 0..self.cols as u32 {
                        if self.get(cc, x) == NONE {
                            self.define(cc, x)?;
                        }
                    }
                }
            }
            c += 1;
            if let Some(map) = self.maybe_compact() {
                c = Self::remap_cursor(&map, c);
            }
        }
        Ok(())
    }

    fn process_deductions(&mut self) -> Result<()> {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let n = self.occurrences[x as usize].len();
            for k in 0..n {
                let (r, pos) = self.occurrences[x as usize][k];
                self.scan(c, r as usize, pos as usize, false)?;
                if !self.is_live(c) {
                    break;
                }
            }
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE {
                continue;
            }
            let n = self.occurrences[(x ^ 1) as usize].len();
            for k in 0..n {
                let (r, pos) = self.occurrences[(x ^ 1) as usize][k];
                self.scan(d, r as usize, pos as usize, false)?;
                if !self.is_live(d) {
                    break;
                }
            }
        }
        Ok(())
    }

    fn run_felsch(&mut self) -> Result<()> {
        // Relators of length one or two can be applied before any definition.
        for r in 0..self.relators.len() {
            self.scan(0, r, 0, false)?;
        }
        self.process_deductions()?;
        let mut c = 0usize;
        let mut x = 0u32;
        while c < self.rows {
            let cc = c as u32;
            if !self.is_live(cc) {
                c += 1;
                x = 0;
                continue;
            }
            while (x as usize) < self.cols && self.get(cc, x) != NONE {
                x += 1;
            }
            if x as usize == self.cols {
                c += 1;
                x = 0;
                continue;
            }
            self.define(cc, x)?;
            self.process_deductions()?;
            if let Some(map) = self.maybe_compact() {
                let new_c = Self::remap_cursor(&map, c);
                if map[c] == NONE {
                    x = 0;
                }
                c = new_c;
            }
        }
        Ok(())
    }

    /// Sweeps every relator over every live coset until a sweep finds no
    /// coincidence. Defines cosets if a sweep leaves holes.
    fn verify_passes(&mut self) -> Result<()> {
        let felsch = std::mem::replace(&mut self.felsch, false);
        let mut result = Err(self.limit_error());
        for _ in 0..self.limits.max_passes {
            let before = self.coincidences;
            let before_total = self.total;
            self.run_hlt()?;
            if self.coincidences == before && self.total == before_total {
                result = Ok(());
                break;
            }
        }
        self.felsch = felsch;
        if result.is_err() {
            result = Err(self.limit_error());
        }
        result
    }

    /// Breadth-first renumbering from coset 0 over columns in order.
    fn standardize(&mut self) -> CosetTable {
        let start = self.rep(0);
        let mut map = vec![NONE; self.rows];
        let mut order = vec![start];
        map[start as usize] = 0;
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for x in 0..self.cols as u32 {
                let d = self.get(c, x);
                if d != NONE && map[d as usize] == NONE {
                    map[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
        }
        let mut entries = Vec::with_capacity(order.len() * self.cols);
        for &c in &order {
            for x in 0..self.cols as u32 {
                let d = self.get(c, x);
                entries.push(if d == NONE { NONE } else { map[d as usize] });
            }
        }
        CosetTable {
            generators: self.cols / 2,
            rows: order.len(),
            entries,
            limits: self.limits,
        }
    }
}

/// Turns a complete table into the group it presents.
///
/// Coset `c` becomes element `c` (coset 0 is the identity) and stands for
/// its breadth-first word `w_c`; the product `c·d` is found by tracing `w_d`
/// from `c`. Also returns the element each presentation generator maps to.
pub fn group_from_cosets(t: &CosetTable, p: &Presentation) -> Result<(FiniteGroup, Vec<usize>)> {
    if !t.is_complete() {
        return Err(Error::IncompleteTable);
    }
    if t.generator_count() != p.generators().len() {
        return Err(Error::Shape {
            expected: format!("{} generators", p.generators().len()),
            found: t.generator_count().to_string(),
        });
    }
    let n = t.len();
    let cols = 2 * t.generators;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for x in 0..cols {
            let d = t.entries[c * cols + x] as usize;
            if !seen[d] {
                seen[d] = true;
                parent[d] = Some((c, x));
                order.push(d);
                queue.push_back(d);
            }
        }
    }
    if order.len() != n {
        return Err(Error::Invariant("coset table is not connected".into()));
    }
    let mut table = vec![0usize; n * n];
    for c in 0..n {
        table[c * n] = c;
        for &d in &order[1..] {
            let (pd, x) = parent[d].unwrap();
            table[c * n + d] = t.entries[table[c * n + pd] * cols + x] as usize;
        }
    }
    let names = (0..n)
        .map(|c| {
            let mut letters = Vec::new();
            let mut cur = c;
            while let Some((pc, x)) = parent[cur] {
                letters.push((x / 2, x % 2 == 1));
                cur = pc;
            }
            letters.reverse();
            format_word_with(&Word::from_letters(letters), |g| p.generators()[g].as_str())
        })
        .collect();
    let gen_map: Vec<usize> = (0..t.generators)
        .map(|g| t.entries[2 * g] as usize)
        .collect();
    let group = FiniteGroup::from_flat(n, table, names, (1..n).collect())?;
    let gens = group.greedy_generators(&gen_map);
    let group = group.with_generators(gens)?;
    Ok((group, gen_map))
}
