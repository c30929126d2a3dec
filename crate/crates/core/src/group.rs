//! Dense multiplication-table groups.
//!
//! Elements are indices `0..order`; index 0 is always the identity. Every
//! other module in the crate relies on that convention.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite group stored as its full Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    names: Vec<String>,
    generators: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("generators", &self.generator_names())
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a raw table, checking every group axiom.
    ///
    /// `table[i][j]` is the index of `i·j`. The identity must sit at index 0
    /// and `generators` must generate the whole table.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        names: Vec<String>,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidInput("empty multiplication table".into()));
        }
        if names.len() != order {
            return Err(Error::Shape {
                expected: format!("{order} element names"),
                found: format!("{}", names.len()),
            });
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Shape {
                    expected: format!("row of length {order}"),
                    found: format!("row {i} of length {}", row.len()),
                });
            }
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidInput(format!(
                        "table entry {v} out of range in row {i}"
                    )));
                }
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(order, flat, names, generators)
    }

    pub(crate) fn from_flat(
        order: usize,
        table: Vec<usize>,
        names: Vec<String>,
        generators: Vec<usize>,
    ) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        for j in 0..order {
            if table[j] != j || table[j * order] != j {
                return Err(Error::InvalidInput(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            let mut seen = vec![false; order];
            for &v in row {
                if seen[v] {
                    return Err(Error::InvalidInput(format!(
                        "row {i} is not a permutation of the elements"
                    )));
                }
                seen[v] = true;
            }
            inverse[i] = row.iter().position(|&v| v == 0).unwrap();
        }
        for i in 0..order {
            if table[inverse[i] * order + i] != 0 {
                return Err(Error::InvalidInput(format!(
                    "element {i} has no two-sided inverse"
                )));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    let bc = table[b * order + c];
                    if table[ab * order + c] != table[a * order + bc] {
                        return Err(Error::InvalidInput(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= order) {
            return Err(Error::InvalidInput(format!("generator {g} out of range")));
        }
        let group = FiniteGroup {
            order,
            table,
            inverse,
            names,
            generators,
        };
        let closure = group.closure(&group.generators).len();
        if closure != order {
            return Err(Error::NotGenerating { closure, order });
        }
        Ok(group)
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
            inverse: vec![0],
            names: vec!["1".into()],
            generators: vec![],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, elements: I) -> usize {
        elements.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    pub fn pow(&self, a: usize, exponent: i64) -> usize {
        let base = if exponent < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..exponent.unsigned_abs() % self.element_order(a) as u64 {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// `^y x = y·x·y⁻¹`.
    #[inline]
    pub fn conjugate(&self, y: usize, x: usize) -> usize {
        self.mul(self.mul(y, x), self.inv(y))
    }

    /// `[x, y] = x·y·x⁻¹·y⁻¹`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|&g| self.name(g)).collect()
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted member list of the subgroup generated by `seed`.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = VecDeque::from([0]);
        let gens: Vec<usize> = seed.iter().copied().filter(|&g| g != 0).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| member[x]).collect()
    }

    /// Sizes of the conjugacy classes, indexed by element.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut size = vec![0; self.order];
        let mut done = vec![false; self.order];
        for x in self.elements() {
            if done[x] {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|g| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                done[c] = true;
                size[c] = class.len();
            }
        }
        size
    }

    /// Greedy generating set: scan `candidates` in order and keep each one
    /// that enlarges the subgroup generated so far.
    pub fn greedy_generators(&self, candidates: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut size = 1;
        for &c in candidates {
            if size == self.order {
                break;
            }
            if c == 0 {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(c);
            let s = self.closure(&trial).len();
            if s > size {
                gens = trial;
                size = s;
            }
        }
        gens
    }

    /// A small generating set: repeatedly add the element that enlarges the
    /// current subgroup the most (lowest index on ties).
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.closure(&gens);
        while current.len() < self.order {
            let mut best = (0, 0);
            let mut inside = vec![false; self.order];
            for &m in &current {
                inside[m] = true;
            }
            for x in self.elements().filter(|&x| !inside[x]) {
                let mut trial = gens.clone();
                trial.push(x);
                let s = self.closure(&trial).len();
                if s > best.0 {
                    best = (s, x);
                }
            }
            gens.push(best.1);
            current = self.closure(&gens);
        }
        gens
    }

    /// The smallest generating set with at most `max` elements, searched
    /// exhaustively in lexicographic order.
    pub fn minimum_generating_set(&self, max: usize) -> Option<Vec<usize>> {
        if self.order == 1 {
            return Some(vec![]);
        }
        for k in 1..=max {
            let mut chosen = Vec::with_capacity(k);
            if self.search_generating(k, 1, &mut chosen) {
                return Some(chosen);
            }
        }
        None
    }

    fn search_generating(&self, k: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return self.closure(chosen).len() == self.order;
        }
        for x in start..self.order {
            chosen.push(x);
            if self.search_generating(k, x + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Replaces the generator list; the new list must still generate.
    pub fn with_generators(mut self, generators: Vec<usize>) -> Result<Self> {
        let closure = self.closure(&generators).len();
        if closure != self.order {
            return Err(Error::NotGenerating {
                closure,
                order: self.order,
            });
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn subgroup_generated(&self, seed: &[usize]) -> Subgroup {
        Subgroup::from_members(self, self.closure(seed))
    }

    /// `[G, G]`, generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut seed: Vec<usize> = self
            .elements()
            .flat_map(|x| self.elements().map(move |y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        seed.sort_unstable();
        seed.dedup();
        self.subgroup_generated(&seed)
    }

    pub fn center(&self) -> Subgroup {
        let members = self
            .elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup::from_members(self, members)
    }

    /// `G/N` together with the projection `G → G/N`.
    pub fn quotient(&self, normal: &Subgroup) -> Result<(FiniteGroup, crate::hom::GroupHom)> {
        if !normal.is_normal() || normal.parent_order() != self.order {
            return Err(Error::NotNormal(format!(
                "subgroup of order {}",
                normal.order()
            )));
        }
        // Cosets are numbered by first appearance in a BFS over the generators
        // so that the identity coset is 0.
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        let assign = |x: usize, coset_of: &mut Vec<usize>, reps: &mut Vec<usize>| -> bool {
            if coset_of[x] != usize::MAX {
                return false;
            }
            let id = reps.len();
            reps.push(x);
            for &n in normal.members() {
                coset_of[self.mul(x, n)] = id;
            }
            true
        };
        let mut queue = VecDeque::from([0]);
        assign(0, &mut coset_of, &mut reps);
        while let Some(x) = queue.pop_front() {
            for &g in &self.generators {
                let y = self.mul(x, g);
                if assign(y, &mut coset_of, &mut reps) {
                    queue.push_back(y);
                }
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)]);
            }
        }
        let names = reps.iter().map(|&r| format!("[{}]", self.name(r))).collect();
        let mut gens: Vec<usize> = self.generators.iter().map(|&g| coset_of[g]).collect();
        gens.retain(|&g| g != 0);
        gens.dedup();
        let q = FiniteGroup::from_flat(k, table, names, gens)?;
        let q = {
            let reduced = q.greedy_generators(&q.generators.clone());
            q.with_generators(reduced)?
        };
        let projection = crate::hom::GroupHom::from_images(self.order, k, coset_of);
        Ok((q, projection))
    }
}

/// A subgroup given by its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
    is_normal: bool,
}

impl Subgroup {
    /// `members` must be closed; normality is computed here.
    pub fn from_members(parent: &FiniteGroup, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut inside = vec![false; parent.order()];
        for &m in &members {
            inside[m] = true;
        }
        let is_normal = members
            .iter()
            .all(|&h| parent.generators().iter().all(|&g| inside[parent.conjugate(g, h)]));
        Subgroup {
            parent_order: parent.order(),
            members,
            is_normal,
        }
    }

    pub fn trivial(parent: &FiniteGroup) -> Self {
        Subgroup::from_members(parent, vec![0])
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        Subgroup::from_members(parent, parent.elements().collect())
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// The subgroup as a standalone group, with the embedding into the
    /// parent (`embedding[i]` is the parent index of element `i`).
    pub fn to_group(&self, parent: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
        let k = self.members.len();
        let mut local = vec![usize::MAX; parent.order()];
        for (i, &m) in self.members.iter().enumerate() {
            local[m] = i;
        }
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                table.push(local[parent.mul(a, b)]);
            }
        }
        let names = self.members.iter().map(|&m| parent.name(m).to_string()).collect();
        let all: Vec<usize> = (1..k).collect();
        let group = FiniteGroup::from_flat(k, table, names, all)
            .expect("closed subgroup of a valid group is a group");
        let gens = group.small_generating_set();
        let group = group.with_generators(gens).expect("generating set");
        (group, self.members.clone())
    }
}

/// Breadth-first spanning tree of the Cayley graph for a fixed generator
/// list. Gives every element its canonical word: the first path found when
/// generators are tried in order.
#[derive(Clone, Debug)]
pub struct CayleyTree {
    generators: Vec<usize>,
    /// Elements in BFS order, starting with the identity.
    order: Vec<usize>,
    /// `parent[x] = (p, i)` with `x = p·generators[i]`.
    parent: Vec<Option<(usize, usize)>>,
}

impl CayleyTree {
    /// Spanning tree of the subgroup generated by `generators`.
    pub fn new(group: &FiniteGroup, generators: &[usize]) -> Self {
        let mut parent = vec![None; group.order()];
        let mut seen = vec![false; group.order()];
        seen[0] = true;
        let mut order = vec![0];
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (i, &g) in generators.iter().enumerate() {
                let y = group.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, i));
                    order.push(y);
                }
            }
        }
        CayleyTree {
            generators: generators.to_vec(),
            order,
            parent,
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Elements reached, in BFS order.
    pub fn elements(&self) -> &[usize] {
        &self.order
    }

    pub fn spans(&self, group: &FiniteGroup) -> bool {
        self.order.len() == group.order()
    }

    /// Canonical word of `x` as a list of generator positions.
    pub fn word(&self, x: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = x;
        while let Some((p, i)) = self.parent[cur] {
            word.push(i);
            cur = p;
        }
        word.reverse();
        word
    }

    /// Extends generator images along the tree and checks every Cayley-graph
    /// edge. A map that respects all edges `x → x·g` is a homomorphism on
    /// the spanned subgroup. Returns the images indexed by domain element
    /// (`usize::MAX` outside the spanned subgroup).
    pub fn extend(
        &self,
        domain: &FiniteGroup,
        codomain: &FiniteGroup,
        images: &[usize],
    ) -> Option<Vec<usize>> {
        debug_assert_eq!(images.len(), self.generators.len());
        let mut map = vec![usize::MAX; domain.order()];
        map[0] = 0;
        for &x in &self.order[1..] {
            let (p, i) = self.parent[x].unwrap();
            map[x] = codomain.mul(map[p], images[i]);
        }
        for &x in &self.order {
            for (i, &g) in self.generators.iter().enumerate() {
                if map[domain.mul(x, g)] != codomain.mul(map[x], images[i]) {
                    return None;
                }
            }
        }
        Some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{builtin_family, Family};

    fn sym3() -> FiniteGroup {
        builtin_family(Family::Symmetric, &[3]).unwrap()
    }

    #[test]
    fn rejects_non_associative_table() {
        // A loop of order 5 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        assert!(FiniteGroup::from_table(t, names, vec![1, 2]).is_err());
    }

    #[test]
    fn rejects_identity_not_at_zero() {
        let t = vec![vec![1, 0], vec![0, 1]];
        let names = vec!["x".into(), "e".into()];
        assert!(FiniteGroup::from_table(t, names, vec![0]).is_err());
    }

    #[test]
    fn rejects_non_generating_list() {
        let t = vec![vec![0, 1], vec![1, 0]];
        let names = vec!["1".into(), "g".into()];
        assert!(matches!(
            FiniteGroup::from_table(t, names, vec![]),
            Err(Error::NotGenerating { closure: 1, order: 2 })
        ));
    }

    #[test]
    fn conjugate_and_commutator_basics() {
        let d4 = builtin_family(Family::Dihedral, &[4]).unwrap();
        let (a, b) = (d4.generators()[0], d4.generators()[1]);
        assert_eq!(d4.conjugate(0, b), b);
        assert_eq!(d4.conjugate(a, b), d4.pow(b, 3));
        assert_eq!(d4.commutator(a, b), d4.pow(b, -2));
        for x in d4.elements() {
            assert_eq!(d4.commutator(x, x), 0);
        }
        let v4 = builtin_family(Family::Klein, &[]).unwrap();
        for x in v4.elements() {
            for y in v4.elements() {
                assert_eq!(v4.commutator(x, y), 0);
                assert_eq!(v4.conjugate(y, x), x);
            }
        }
    }

    #[test]
    fn subgroup_generated_examples() {
        let d4 = builtin_family(Family::Dihedral, &[4]).unwrap();
        assert!(d4.subgroup_generated(&[]).is_trivial());
        let b = d4.generators()[1];
        let rot = d4.subgroup_generated(&[b]);
        assert_eq!(rot.order(), 4);
        assert!(rot.is_normal());

        let s3 = sym3();
        let t = s3.generators()[0]; // (1 2)
        let h = s3.subgroup_generated(&[t]);
        assert_eq!(h.order(), 2);
        // brute-force normality check
        let brute = s3
            .elements()
            .all(|g| h.members().iter().all(|&x| h.contains(s3.conjugate(g, x))));
        assert!(!brute);
        assert_eq!(h.is_normal(), brute);
    }

    #[test]
    fn derived_subgroups() {
        let d3 = builtin_family(Family::Dihedral, &[3]).unwrap();
        assert_eq!(d3.derived_subgroup().order(), 3);
        let z = builtin_family(Family::CyclicProduct, &[4, 6]).unwrap();
        assert!(z.derived_subgroup().is_trivial());
        let q2 = builtin_family(Family::Quaternion, &[2]).unwrap();
        let mut comms: Vec<usize> = q2
            .elements()
            .flat_map(|x| q2.elements().map(move |y| (x, y)))
            .map(|(x, y)| q2.commutator(x, y))
            .collect();
        comms.sort_unstable();
        comms.dedup();
        // all 64 commutators land in a subgroup of order 2
        assert_eq!(comms.len(), 2);
        assert_eq!(q2.derived_subgroup().order(), 2);
        assert!(q2.derived_subgroup().is_normal());
    }

    #[test]
    fn quotient_examples() {
        let s3 = sym3();
        let (q, _) = s3.quotient(&Subgroup::whole(&s3)).unwrap();
        assert_eq!(q.order(), 1);
        let (q, p) = s3.quotient(&Subgroup::trivial(&s3)).unwrap();
        assert_eq!(q.order(), 6);
        assert!(crate::iso::are_isomorphic(&q, &s3).unwrap());
        assert!(p.is_homomorphism(&s3, &q));
        let (q, p) = s3.quotient(&s3.derived_subgroup()).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(p.kernel(&s3).members(), s3.derived_subgroup().members());
        let t = s3.subgroup_generated(&[s3.generators()[0]]);
        assert!(matches!(s3.quotient(&t), Err(Error::NotNormal(_))));
    }

    #[test]
    fn generating_sets() {
        let s4 = builtin_family(Family::Symmetric, &[4]).unwrap();
        assert_eq!(s4.minimum_generating_set(3).unwrap().len(), 2);
        assert_eq!(s4.closure(&s4.small_generating_set()).len(), 24);
        let e = builtin_family(Family::CyclicProduct, &[2, 2]).unwrap();
        let e3 = crate::perm::group_from_permutations(
            &[
                crate::perm::Permutation::parse_cycles("(1 2)", 6).unwrap(),
                crate::perm::Permutation::parse_cycles("(3 4)", 6).unwrap(),
                crate::perm::Permutation::parse_cycles("(5 6)", 6).unwrap(),
            ],
            64,
        )
        .unwrap();
        assert_eq!(e.minimum_generating_set(3).unwrap().len(), 2);
        assert_eq!(e3.minimum_generating_set(2), None);
        assert_eq!(e3.minimum_generating_set(3).unwrap().len(), 3);
    }

    #[test]
    fn cayley_tree_words_are_shortest_and_ordered() {
        let d4 = builtin_family(Family::Dihedral, &[4]).unwrap();
        let tree = CayleyTree::new(&d4, d4.generators());
        assert!(tree.spans(&d4));
        for &x in tree.elements() {
            let w = tree.word(x);
            let v = d4.product(w.iter().map(|&i| d4.generators()[i]));
            assert_eq!(v, x);
        }
        assert!(tree.word(0).is_empty());
    }
}
