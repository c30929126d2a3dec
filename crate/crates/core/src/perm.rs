//! Permutations in cycle notation and permutation-group closure.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A permutation of `{1..m}`, stored zero-based: `images[i]` is the image of
/// point `i + 1`, minus one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// From zero-based images; fails unless `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        if m > u8::MAX as usize {
            return Err(Error::InvalidInput(format!("degree {m} too large")));
        }
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidInput("not a bijection".into()));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the zero-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images.get(i).map_or(i, |&x| x as usize)
    }

    /// Left-to-right composition: first `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        let m = self.degree().max(other.degree());
        Permutation {
            images: (0..m).map(|i| other.apply(self.apply(i)) as u8).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    fn padded(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Permutation { images }
    }

    pub fn is_even(&self) -> bool {
        let cycles = self.cycles();
        cycles.iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Nontrivial cycles, one-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses cycle notation such as `(1 2)(3 4 5)` or `(1,2,3)`; `()` is the
    /// identity. Points are one-based; the degree is at least `min_degree`.
    pub fn parse_cycles(text: &str, min_degree: usize) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == bytes.len() {
            return Err(Error::syntax(0, "empty permutation"));
        }
        while i < bytes.len() {
            if bytes[i] != b'(' {
                return Err(Error::syntax(i, "expected `(`"));
            }
            i += 1;
            let mut cycle = Vec::new();
            loop {
                skip_ws(&mut i);
                if i < bytes.len() && bytes[i] == b',' && !cycle.is_empty() {
                    i += 1;
                    skip_ws(&mut i);
                }
                match bytes.get(i) {
                    Some(b')') => {
                        i += 1;
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let start = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        let point: usize = text[start..i]
                            .parse()
                            .ok()
                            .filter(|&p| (1..=255).contains(&p))
                            .ok_or_else(|| Error::syntax(start, "point must be in 1..=255"))?;
                        cycle.push(point);
                    }
                    Some(_) => return Err(Error::syntax(i, "expected a point or `)`")),
                    None => return Err(Error::syntax(i, "unterminated cycle")),
                }
            }
            cycles.push(cycle);
            skip_ws(&mut i);
        }
        let degree = cycles
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0)
            .max(min_degree);
        if degree > u8::MAX as usize {
            return Err(Error::InvalidInput(format!("degree {degree} too large")));
        }
        // Compose cycles left to right.
        let mut perm = Permutation::identity(degree);
        for cycle in &cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = std::collections::HashSet::new();
            for &p in cycle {
                if !seen.insert(p) {
                    return Err(Error::InvalidInput(format!("point {p} repeated in a cycle")));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            perm = perm.then(&Permutation::from_images(images)?);
        }
        Ok(perm)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a generator file: one cycle-notation permutation per line. Blank
/// lines and lines starting with `#` are ignored.
pub fn parse_generator_list(text: &str) -> Result<Vec<Permutation>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            let p = Permutation::parse_cycles(trimmed, 0).map_err(|e| match e {
                Error::Syntax { position, message } => Error::Syntax {
                    position: position + offset + (line.len() - line.trim_start().len()),
                    message,
                },
                other => other,
            })?;
            out.push(p);
        }
        offset += line.len();
    }
    Ok(out)
}

/// Closes `gens` under composition. Element 0 is the identity, the rest are
/// numbered in breadth-first order; names are cycle notation.
pub fn group_from_permutations(gens: &[Permutation], max_order: usize) -> Result<FiniteGroup> {
    let degree = gens.iter().map(Permutation::degree).max().unwrap_or(0);
    let gens: Vec<Permutation> = gens.iter().map(|g| g.padded(degree)).collect();
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in &gens {
            let y = x.then(g);
            if !index.contains_key(&y) {
                if elements.len() == max_order {
                    return Err(Error::OrderTooLarge {
                        order: elements.len() + 1,
                        max: max_order,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for x in &elements {
        for y in &elements {
            table.push(index[&x.then(y)]);
        }
    }
    let names = elements.iter().map(|p| p.to_string()).collect();
    let mut generators: Vec<usize> = Vec::new();
    for g in &gens {
        let i = index[g];
        if i != 0 && !generators.contains(&i) {
            generators.push(i);
        }
    }
    FiniteGroup::from_flat(n, table, names, generators)
}
