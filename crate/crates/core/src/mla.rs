//! Multiplicative Lie algebra structures: a second operation `*` on a group
//! `G` satisfying, for all `a, b, c`,
//!
//! 1. `a * a = 1`
//! 2. `a * (bc) = (a * b) · ^b(a * c)`
//! 3. `(ab) * c = ^a(b * c) · (a * c)`
//! 4. `((a * b) * ^b c) · ((b * c) * ^c a) · ((c * a) * ^a b) = 1`
//! 5. `^c(a * b) = ^c a * ^c b`
//!
//! Structures correspond to homomorphisms `φ: G ∧ G → G` that kill the
//! Jacobi defects and commute with conjugation, via `x * y = φ(x ∧ y)`.
//! Two structures are counted as distinct when their ideals `G * G` are
//! not isomorphic.

use std::fmt;

use rayon::prelude::*;

use crate::abelian::{abelian_invariants, AbelianInvariants};
use crate::error::{Error, Result};
use crate::group::{CayleyTree, FiniteGroup, Subgroup};
use crate::hom::{search_generators, GroupHom, HomSearch};
use crate::iso::{are_isomorphic_bounded, DEFAULT_ISO_BOUND};
use crate::wedge::{exterior_square, SquareKind, WedgeConfig, WedgeSquare};

/// Default cap on the generating-set size for direct enumeration.
pub const DEFAULT_DIRECT_MAX_GENERATORS: usize = 3;

/// A full `|G|×|G|` star table, `x * y` at `star[x·|G| + y]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MlaStructure {
    order: usize,
    star: Vec<usize>,
}

impl fmt::Debug for MlaStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MlaStructure")
            .field("order", &self.order)
            .field("star", &self.rows())
            .finish()
    }
}

impl MlaStructure {
    pub fn new(order: usize, star: Vec<usize>) -> Result<Self> {
        if star.len() != order * order {
            return Err(Error::Shape {
                expected: format!("{} entries", order * order),
                found: star.len().to_string(),
            });
        }
        if let Some(&v) = star.iter().find(|&&v| v >= order) {
            return Err(Error::InvalidInput(format!("star entry {v} out of range")));
        }
        Ok(MlaStructure { order, star })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Shape {
                    expected: format!("row of length {order}"),
                    found: format!("row {i} of length {}", row.len()),
                });
            }
        }
        Self::new(order, rows.concat())
    }

    /// `a * b = 1`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        MlaStructure {
            order: g.order(),
            star: vec![0; g.order() * g.order()],
        }
    }

    /// `a * b = [a, b]`.
    pub fn commutator(g: &FiniteGroup) -> Self {
        Self::from_fn(g, |a, b| g.commutator(a, b))
    }

    pub fn from_fn(g: &FiniteGroup, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = g.order();
        MlaStructure {
            order: n,
            star: (0..n * n).map(|i| f(i / n, i % n)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.star[a * self.order + b]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.star
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        if self.order == 0 {
            return Vec::new();
        }
        self.star.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Sorted set of values `a * b`.
    pub fn values(&self) -> Vec<usize> {
        let mut v = self.star.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// One failed instance of an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Axiom number, 1 to 5.
    pub axiom: usize,
    /// `[a]` for axiom 1, `[a, b, c]` otherwise.
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub holds: [bool; 5],
    pub witnesses: [Option<Vec<usize>>; 5],
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }

    /// The failure of the lowest-numbered failing axiom.
    pub fn first_violation(&self) -> Option<Violation> {
        (0..5).find(|&i| !self.holds[i]).map(|i| Violation {
            axiom: i + 1,
            elements: self.witnesses[i].clone().unwrap_or_default(),
        })
    }
}

fn check_order(g: &FiniteGroup, s: &MlaStructure) -> Result<()> {
    if s.order() != g.order() {
        return Err(Error::Shape {
            expected: format!("{0}×{0} star table", g.order()),
            found: format!("{0}×{0}", s.order()),
        });
    }
    Ok(())
}

#[inline]
fn axiom_holds(g: &FiniteGroup, s: &MlaStructure, axiom: usize, a: usize, b: usize, c: usize) -> bool {
    let m = |x, y| g.mul(x, y);
    let cj = |y, x| g.conjugate(y, x);
    match axiom {
        2 => s.get(a, m(b, c)) == m(s.get(a, b), cj(b, s.get(a, c))),
        3 => s.get(m(a, b), c) == m(cj(a, s.get(b, c)), s.get(a, c)),
        4 => {
            let x = s.get(s.get(a, b), cj(b, c));
            let y = s.get(s.get(b, c), cj(c, a));
            let z = s.get(s.get(c, a), cj(a, b));
            m(m(x, y), z) == 0
        }
        5 => cj(c, s.get(a, b)) == s.get(cj(c, a), cj(c, b)),
        _ => unreachable!(),
    }
}

/// Checks the five axioms on every element, pair and triple, recording the
/// first witness of each failure.
pub fn verify_axioms(g: &FiniteGroup, s: &MlaStructure) -> Result<AxiomReport> {
    check_order(g, s)?;
    let mut report = AxiomReport {
        holds: [true; 5],
        ..AxiomReport::default()
    };
    if let Some(a) = g.elements().find(|&a| s.get(a, a) != 0) {
        report.holds[0] = false;
        report.witnesses[0] = Some(vec![a]);
    }
    for axiom in 2..=5 {
        'search: for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    if !axiom_holds(g, s, axiom, a, b, c) {
                        report.holds[axiom - 1] = false;
                        report.witnesses[axiom - 1] = Some(vec![a, b, c]);
                        break 'search;
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Early-exit validity test. Antisymmetry follows from the axioms, so it is
/// used as a cheap first filter.
pub fn is_valid_structure(g: &FiniteGroup, s: &MlaStructure) -> bool {
    if s.order() != g.order() {
        return false;
    }
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            if s.get(b, a) != g.inv(s.get(a, b)) {
                return false;
            }
        }
    }
    (0..n).all(|a| s.get(a, a) == 0)
        && [5, 2, 3, 4].iter().all(|&axiom| {
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| axiom_holds(g, s, axiom, a, b, c))))
        })
}

fn require_exterior(ws: &WedgeSquare, phi: &GroupHom) -> Result<()> {
    if ws.kind() != SquareKind::Exterior {
        return Err(Error::InvalidInput("structures come from the exterior square".into()));
    }
    if phi.domain_order() != ws.square().order() || phi.codomain_order() != ws.base().order() {
        return Err(Error::Shape {
            expected: format!("hom of order {} → {}", ws.square().order(), ws.base().order()),
            found: format!("{} → {}", phi.domain_order(), phi.codomain_order()),
        });
    }
    Ok(())
}

/// `x * y = φ(x ∧ y)`. No validity claim.
pub fn structure_from_hom(ws: &WedgeSquare, phi: &GroupHom) -> Result<MlaStructure> {
    require_exterior(ws, phi)?;
    Ok(MlaStructure::from_fn(ws.base(), |x, y| phi.apply(ws.pair(x, y))))
}

/// Whether `φ` kills every Jacobi defect and is equivariant for the
/// conjugation actions.
pub fn check_wedge_conditions(ws: &WedgeSquare, phi: &GroupHom) -> Result<bool> {
    require_exterior(ws, phi)?;
    Ok(wedge_condition_failure(ws, phi).is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rejection {
    Jacobi,
    Equivariance,
}

fn wedge_condition_failure(ws: &WedgeSquare, phi: &GroupHom) -> Option<Rejection> {
    let g = ws.base();
    let w = ws.square();
    let f = |x: usize, y: usize| phi.apply(ws.pair(x, y));
    for x in g.elements() {
        for y in g.elements() {
            let fxy = f(x, y);
            for z in g.elements() {
                if g.conjugate(z, fxy) != f(g.conjugate(z, x), g.conjugate(z, y)) {
                    return Some(Rejection::Equivariance);
                }
            }
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            let fxy = f(x, y);
            for z in g.elements() {
                let j = w.product([
                    ws.pair(fxy, g.conjugate(y, z)),
                    ws.pair(f(y, z), g.conjugate(z, x)),
                    ws.pair(f(z, x), g.conjugate(x, y)),
                ]);
                if phi.apply(j) != 0 {
                    return Some(Rejection::Jacobi);
                }
            }
        }
    }
    None
}

/// The homomorphism `G ∧ G → G` with `φ(a ∧ b) = a * b`. Fails when the
/// table does not factor through the exterior square.
pub fn induced_hom_from_structure(ws: &WedgeSquare, s: &MlaStructure) -> Result<GroupHom> {
    if ws.kind() != SquareKind::Exterior {
        return Err(Error::InvalidInput("structures come from the exterior square".into()));
    }
    check_order(ws.base(), s)?;
    let phi = ws
        .extend_pair_function(ws.base(), |a, b| s.get(a, b))
        .ok_or_else(|| Error::InvalidInput("star table does not induce a homomorphism on G ∧ G".into()))?;
    debug_assert_eq!(structure_from_hom(ws, &phi).ok().as_ref(), Some(s));
    Ok(phi)
}

/// Result of the exterior-square enumeration, with filter statistics.
#[derive(Clone, Debug)]
pub struct WedgeEnumeration {
    pub square: WedgeSquare,
    pub structures: Vec<MlaStructure>,
    /// `|Hom(G ∧ G, G)|`.
    pub hom_count: usize,
    pub rejected_by_equivariance: usize,
    pub rejected_by_jacobi: usize,
}

/// All structures on `g`, from homomorphisms `G ∧ G → G` passing the
/// wedge conditions. Sorted by flattened table.
pub fn enumerate_structures_via_wedge(g: &FiniteGroup, cfg: &WedgeConfig) -> Result<WedgeEnumeration> {
    let ws = exterior_square(g, cfg)?;
    let w = ws.square();
    let gens = search_generators(w);
    let homs = HomSearch::new(w, g, gens, |_, _| true).collect_all();
    let hom_count = homs.len();
    let outcomes: Vec<std::result::Result<MlaStructure, Rejection>> = homs
        .into_par_iter()
        .map(|images| {
            let phi = GroupHom::from_images(w.order(), g.order(), images);
            match wedge_condition_failure(&ws, &phi) {
                Some(r) => Err(r),
                None => Ok(MlaStructure::from_fn(g, |x, y| phi.apply(ws.pair(x, y)))),
            }
        })
        .collect();
    let mut structures = Vec::new();
    let (mut rejected_by_equivariance, mut rejected_by_jacobi) = (0, 0);
    for o in outcomes {
        match o {
            Ok(s) => structures.push(s),
            Err(Rejection::Equivariance) => rejected_by_equivariance += 1,
            Err(Rejection::Jacobi) => rejected_by_jacobi += 1,
        }
    }
    structures.sort();
    structures.dedup();
    if let Some(bad) = structures.par_iter().find_any(|s| !is_valid_structure(g, s)) {
        let v = verify_axioms(g, bad)?.first_violation();
        return Err(Error::Invariant(format!(
            "structure from G ∧ G fails the axioms: {v:?}"
        )));
    }
    Ok(WedgeEnumeration {
        square: ws,
        structures,
        hom_count,
        rejected_by_equivariance,
        rejected_by_jacobi,
    })
}

pub fn enumerate_structures_direct(g: &FiniteGroup) -> Result<Vec<MlaStructure>> {
    enumerate_structures_direct_with(g, DEFAULT_DIRECT_MAX_GENERATORS)
}

/// Enumerates structures without the exterior square.
///
/// Over a minimum generating set `s₀ … s_{k-1}`, the values `sᵢ * sⱼ` for
/// `i < j` are free seeds; `s * s = 1` and `t * s = (s * t)⁻¹` are forced.
/// Axiom (2) along canonical words gives each `s * y`, axiom (3) then
/// gives every `x * y`, and the full table is verified.
pub fn enumerate_structures_direct_with(g: &FiniteGroup, max_generators: usize) -> Result<Vec<MlaStructure>> {
    let gens = g
        .minimum_generating_set(max_generators)
        .ok_or(Error::TooManyGenerators(max_generators))?;
    let k = gens.len();
    let n = g.order();
    let pairs = k * k.saturating_sub(1) / 2;
    let tree = CayleyTree::new(g, &gens);
    let seeds = (n as u128).pow(pairs as u32);
    if seeds > u64::MAX as u128 {
        return Err(Error::InvalidInput("seed space too large".into()));
    }
    let mut structures: Vec<MlaStructure> = (0..seeds as u64)
        .into_par_iter()
        .filter_map(|code| {
            let mut seed = Vec::with_capacity(pairs);
            let mut c = code;
            for _ in 0..pairs {
                seed.push((c % n as u64) as usize);
                c /= n as u64;
            }
            let s = extend_seed(g, &gens, &tree, &seed);
            is_valid_structure(g, &s).then_some(s)
        })
        .collect();
    structures.sort();
    structures.dedup();
    if k == 2 && structures.len() > n {
        return Err(Error::Invariant(format!(
            "{} structures exceed the seed space of size {n}",
            structures.len()
        )));
    }
    Ok(structures)
}

fn extend_seed(g: &FiniteGroup, gens: &[usize], tree: &CayleyTree, seed: &[usize]) -> MlaStructure {
    let n = g.order();
    let k = gens.len();
    // gen_star[i][j] = sᵢ * sⱼ
    let mut gen_star = vec![vec![0; k]; k];
    let mut next = seed.iter();
    for i in 0..k {
        for j in i + 1..k {
            let v = *next.next().unwrap();
            gen_star[i][j] = v;
            gen_star[j][i] = g.inv(v);
        }
    }
    // rows[i][y] = sᵢ * y, by sᵢ * (p·t) = (sᵢ * p) · ^p(sᵢ * t)
    let mut rows = vec![vec![0; n]; k];
    for (i, row) in rows.iter_mut().enumerate() {
        for &y in &tree.elements()[1..] {
            let word = tree.word(y);
            let t = *word.last().unwrap();
            let p = g.product(word[..word.len() - 1].iter().map(|&j| gens[j]));
            row[y] = g.mul(row[p], g.conjugate(p, gen_star[i][t]));
        }
    }
    // (p·t) * y = ^p(t * y) · (p * y)
    let mut star = vec![0; n * n];
    for &x in &tree.elements()[1..] {
        let word = tree.word(x);
        let t = *word.last().unwrap();
        let p = g.product(word[..word.len() - 1].iter().map(|&j| gens[j]));
        for y in 0..n {
            star[x * n + y] = g.mul(g.conjugate(p, rows[t][y]), star[p * n + y]);
        }
    }
    MlaStructure { order: n, star }
}

/// Homomorphisms `[G,G] → G` commuting with conjugation by `G`.
#[derive(Clone, Debug)]
pub struct EquivariantHoms {
    pub derived: FiniteGroup,
    /// `embedding[h]` is the element of `G` that `h ∈ [G,G]` stands for.
    pub embedding: Vec<usize>,
    pub homs: Vec<GroupHom>,
}

/// All `f: [G,G] → G` with `f(^g h) = ^g f(h)`. When `M(G)` is trivial these
/// are in bijection with the homomorphisms `G ∧ G → G` satisfying the
/// equivariance condition.
pub fn enumerate_equivariant_homs(g: &FiniteGroup) -> EquivariantHoms {
    let derived_sub = g.derived_subgroup();
    let (derived, embedding) = derived_sub.to_group(g);
    let mut index = vec![usize::MAX; g.order()];
    for (h, &x) in embedding.iter().enumerate() {
        index[x] = h;
    }
    let gens = search_generators(&derived);
    let homs = HomSearch::new(&derived, g, gens, |_, _| true)
        .collect_all()
        .into_iter()
        .filter(|f| {
            g.elements().all(|z| {
                (0..derived.order()).all(|h| {
                    let conj = index[g.conjugate(z, embedding[h])];
                    f[conj] == g.conjugate(z, f[h])
                })
            })
        })
        .map(|f| GroupHom::from_images(derived.order(), g.order(), f))
        .collect();
    EquivariantHoms {
        derived,
        embedding,
        homs,
    }
}

/// The ideal `G * G`: the subgroup generated by all values. The value set of
/// a valid table is closed under conjugation, so the result is normal.
pub fn star_ideal(g: &FiniteGroup, s: &MlaStructure) -> Result<Subgroup> {
    check_order(g, s)?;
    let values = s.values();
    let mut present = vec![false; g.order()];
    for &v in &values {
        present[v] = true;
    }
    for &v in &values {
        if g.elements().any(|z| !present[g.conjugate(z, v)]) {
            return Err(Error::InvalidInput(
                "star values are not closed under conjugation".into(),
            ));
        }
    }
    let ideal = Subgroup::from_members(g, g.closure(&values));
    if !ideal.is_normal() {
        return Err(Error::Invariant("star ideal is not normal".into()));
    }
    Ok(ideal)
}

/// Isomorphism-class label of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealDescriptor {
    Abelian(AbelianInvariants),
    /// Order and sorted element-order profile; distinct classes may share a
    /// descriptor, told apart by an explicit isomorphism test.
    Nonabelian { order: usize, element_orders: Vec<usize> },
}

impl IdealDescriptor {
    fn of(group: &FiniteGroup) -> Self {
        if group.is_abelian() {
            IdealDescriptor::Abelian(abelian_invariants(group))
        } else {
            let mut element_orders = group.element_orders();
            element_orders.sort_unstable();
            IdealDescriptor::Nonabelian {
                order: group.order(),
                element_orders,
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct StructureClass {
    pub ideal_order: usize,
    pub descriptor: IdealDescriptor,
    /// The first representative's ideal, as a group.
    pub ideal_group: FiniteGroup,
    pub representatives: Vec<MlaStructure>,
    pub is_trivial_class: bool,
    pub is_commutator_class: bool,
}

/// Partitions valid tables by the isomorphism class of `G * G`, ordered by
/// ideal order and then descriptor.
pub fn classify_structures(g: &FiniteGroup, tables: &[MlaStructure]) -> Result<Vec<StructureClass>> {
    let derived = g.derived_subgroup();
    let mut classes: Vec<StructureClass> = Vec::new();
    for s in tables {
        let ideal = star_ideal(g, s)?;
        let (group, _) = ideal.to_group(g);
        let descriptor = IdealDescriptor::of(&group);
        let is_commutator = ideal.members() == derived.members();
        let bound = DEFAULT_ISO_BOUND.max(group.order());
        let mut home = None;
        for (i, c) in classes.iter().enumerate() {
            if c.descriptor == descriptor
                && (matches!(descriptor, IdealDescriptor::Abelian(_))
                    || are_isomorphic_bounded(&c.ideal_group, &group, bound)?)
            {
                home = Some(i);
                break;
            }
        }
        match home {
            Some(i) => {
                classes[i].representatives.push(s.clone());
                classes[i].is_commutator_class |= is_commutator;
            }
            None => classes.push(StructureClass {
                ideal_order: group.order(),
                descriptor,
                is_trivial_class: group.order() == 1,
                ideal_group: group,
                representatives: vec![s.clone()],
                is_commutator_class: is_commutator,
            }),
        }
    }
    // stable: equal descriptors keep first-seen order, which follows the
    // sorted input
    classes.sort_by(|a, b| (a.ideal_order, &a.descriptor).cmp(&(b.ideal_order, &b.descriptor)));
    Ok(classes)
}

/// Lie simple: only the trivial and commutator ideal classes occur.
pub fn classes_are_lie_simple(classes: &[StructureClass]) -> bool {
    classes
        .iter()
        .all(|c| c.is_trivial_class || c.is_commutator_class)
}

pub fn is_lie_simple(g: &FiniteGroup, cfg: &WedgeConfig) -> Result<bool> {
    let e = enumerate_structures_via_wedge(g, cfg)?;
    Ok(classes_are_lie_simple(&classify_structures(g, &e.structures)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{builtin_family, Family};

    fn fam(f: Family, p: &[usize]) -> FiniteGroup {
        builtin_family(f, p).unwrap()
    }

    fn cfg() -> WedgeConfig {
        WedgeConfig::default()
    }

    #[test]
    fn trivial_and_commutator_tables_verify() {
        for g in [
            fam(Family::Symmetric, &[3]),
            fam(Family::Dihedral, &[4]),
            fam(Family::Quaternion, &[3]),
            fam(Family::CyclicProduct, &[2, 4]),
        ] {
            assert!(verify_axioms(&g, &MlaStructure::trivial(&g)).unwrap().is_valid());
            assert!(verify_axioms(&g, &MlaStructure::commutator(&g)).unwrap().is_valid());
            assert!(is_valid_structure(&g, &MlaStructure::commutator(&g)));
        }
    }

    #[test]
    fn power_table_on_z4_fails_first_axiom() {
        let g = fam(Family::CyclicProduct, &[4]);
        let gen = g.generators()[0];
        // exponent of each element with respect to the generator
        let mut exp = [0; 4];
        for e in 0..4 {
            exp[g.pow(gen, e as i64)] = e;
        }
        let s = MlaStructure::from_fn(&g, |x, y| g.pow(gen, (exp[x] * exp[y]) as i64));
        let report = verify_axioms(&g, &s).unwrap();
        assert!(!report.holds[0]);
        assert_eq!(report.witnesses[0], Some(vec![gen]));
        let v = report.first_violation().unwrap();
        assert_eq!(v.axiom, 1);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let g = fam(Family::Dihedral, &[3]);
        let s = MlaStructure::trivial(&fam(Family::CyclicProduct, &[4]));
        assert!(matches!(verify_axioms(&g, &s), Err(Error::Shape { .. })));
        assert!(MlaStructure::from_rows(&[vec![0, 0], vec![0]]).is_err());
        assert!(MlaStructure::new(2, vec![0, 0, 0, 7]).is_err());
    }

    #[test]
    fn d3_structure_with_star_ab_equal_b() {
        let g = fam(Family::Dihedral, &[3]);
        let (a, b) = (g.generators()[0], g.generators()[1]);
        let ws = exterior_square(&g, &cfg()).unwrap();
        let w = ws.square();
        // W is cyclic on a∧b; send it to the rotation b
        let gen = ws.pair(a, b);
        let phi = crate::hom::hom_from_generator_images(w, &[gen], &[b], &g).unwrap().unwrap();
        assert!(check_wedge_conditions(&ws, &phi).unwrap());
        let s = structure_from_hom(&ws, &phi).unwrap();
        assert_eq!(s.get(a, b), b);
        assert!(verify_axioms(&g, &s).unwrap().is_valid());
        let back = induced_hom_from_structure(&ws, &s).unwrap();
        assert_eq!(back, phi);
    }

    #[test]
    fn klein_structure_a_star_b_equals_a() {
        let g = fam(Family::Klein, &[]);
        let (a, b) = (g.generators()[0], g.generators()[1]);
        let ws = exterior_square(&g, &cfg()).unwrap();
        assert_eq!(ws.square().order(), 2);
        let phi = crate::hom::hom_from_generator_images(ws.square(), &[ws.pair(a, b)], &[a], &g)
            .unwrap()
            .unwrap();
        assert!(check_wedge_conditions(&ws, &phi).unwrap());
        let s = structure_from_hom(&ws, &phi).unwrap();
        assert_eq!(s.get(a, b), a);
        let classes = classify_structures(&g, &enumerate_structures_via_wedge(&g, &cfg()).unwrap().structures).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(!classes_are_lie_simple(&classes));
    }

    #[test]
    fn trivial_hom_passes_conditions() {
        let g = fam(Family::Symmetric, &[3]);
        let ws = exterior_square(&g, &cfg()).unwrap();
        let phi = GroupHom::trivial(ws.square(), &g);
        assert!(check_wedge_conditions(&ws, &phi).unwrap());
        assert_eq!(structure_from_hom(&ws, &phi).unwrap(), MlaStructure::trivial(&g));
    }

    #[test]
    fn direct_s3_seeds_are_the_alternating_subgroup() {
        let g = fam(Family::Symmetric, &[3]);
        let gens = g.minimum_generating_set(3).unwrap();
        let tree = CayleyTree::new(&g, &gens);
        let a3 = g.derived_subgroup();
        // the minimum generating set holds one transposition and one 3-cycle
        assert_eq!(gens.len(), 2);
        for v in g.elements() {
            let s = extend_seed(&g, &gens, &tree, &[v]);
            assert_eq!(is_valid_structure(&g, &s), a3.contains(v), "seed {v}");
        }
        assert_eq!(enumerate_structures_direct(&g).unwrap().len(), 3);
    }

    #[test]
    fn cyclic_groups_have_only_the_trivial_structure() {
        for n in [1, 5, 8] {
            let g = fam(Family::CyclicProduct, &[n]);
            let direct = enumerate_structures_direct(&g).unwrap();
            assert_eq!(direct, vec![MlaStructure::trivial(&g)]);
            let via = enumerate_structures_via_wedge(&g, &cfg()).unwrap().structures;
            assert_eq!(via, direct);
        }
    }

    #[test]
    fn q2_enumerators_agree() {
        let g = fam(Family::Quaternion, &[2]);
        let via = enumerate_structures_via_wedge(&g, &cfg()).unwrap().structures;
        assert_eq!(via, enumerate_structures_direct(&g).unwrap());
    }

    #[test]
    fn equivariant_homs() {
        let z6 = fam(Family::CyclicProduct, &[6]);
        assert_eq!(enumerate_equivariant_homs(&z6).homs.len(), 1);
        let d3 = fam(Family::Dihedral, &[3]);
        let e = enumerate_equivariant_homs(&d3);
        assert_eq!(e.homs.len(), 3);
        let mut images: Vec<usize> = e.homs.iter().map(|f| f.image(&d3).order()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images, vec![1, 3]);
        // equivariant exactly when the image lies in ⟨y⟩; there are n of them
        for n in [2, 3, 4, 5] {
            let q = fam(Family::Quaternion, &[n]);
            let y = q.generators()[1];
            let cyclic = q.subgroup_generated(&[y]);
            let e = enumerate_equivariant_homs(&q);
            assert_eq!(e.homs.len(), n);
            let all = crate::hom::enumerate_homs(&e.derived, &q);
            let inside: Vec<_> = all
                .into_iter()
                .filter(|f| f.images().iter().all(|&v| cyclic.contains(v)))
                .collect();
            assert_eq!(inside, e.homs);
        }
    }

    #[test]
    fn d4_classes_and_ideal() {
        let g = fam(Family::Dihedral, &[4]);
        let e = enumerate_structures_via_wedge(&g, &cfg()).unwrap();
        let classes = classify_structures(&g, &e.structures).unwrap();
        let orders: Vec<usize> = classes.iter().map(|c| c.ideal_order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
        assert!(classes[0].is_trivial_class && classes[1].is_commutator_class);
        assert!(!classes_are_lie_simple(&classes));
        // a*b = b gives the rotation subgroup
        let (a, b) = (g.generators()[0], g.generators()[1]);
        let s = e.structures.iter().find(|s| s.get(a, b) == b).expect("structure with a*b = b");
        assert_eq!(star_ideal(&g, s).unwrap().members(), g.closure(&[b]));
    }

    #[test]
    fn trivial_group() {
        let t = FiniteGroup::trivial();
        assert_eq!(enumerate_structures_direct(&t).unwrap().len(), 1);
        assert!(is_lie_simple(&t, &cfg()).unwrap());
    }
}
