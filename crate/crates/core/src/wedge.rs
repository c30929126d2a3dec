//! Nonabelian tensor and exterior squares, the commutator map χ, and the
//! Schur multiplier as its kernel.
//!
//! Both squares are computed from their defining presentations: one
//! generator per ordered pair `(a, b)` of elements of `G`, with relators
//!
//! ```text
//! (ab ⊗ c) = (^a b ⊗ ^a c)(a ⊗ c)
//! (a ⊗ bc) = (a ⊗ b)(^b a ⊗ ^b c)
//! ```
//!
//! for all `a, b, c`, plus `a ∧ a = 1` and `(a ∧ b)(b ∧ a) = 1` for the
//! exterior square. Short relators are eliminated first, then the result is
//! coset-enumerated.

use std::fmt;

use crate::abelian::{abelian_invariants, AbelianInvariants};
use crate::coset::{group_from_cosets, todd_coxeter_with, EnumerationLimits, Strategy};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::hom::{hom_from_generator_images, GroupHom};
use crate::presentation::{eliminate_short_relators, Presentation, Word};

/// Default bound on `|G|` for square computations.
pub const DEFAULT_WEDGE_MAX_ORDER: usize = 36;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareKind {
    Tensor,
    Exterior,
}

impl fmt::Display for SquareKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareKind::Tensor => "tensor",
            SquareKind::Exterior => "exterior",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WedgeConfig {
    pub limits: EnumerationLimits,
    pub max_order: usize,
    pub strategy: Strategy,
}

impl Default for WedgeConfig {
    fn default() -> Self {
        WedgeConfig {
            limits: EnumerationLimits::default(),
            max_order: DEFAULT_WEDGE_MAX_ORDER,
            strategy: Strategy::Felsch,
        }
    }
}

/// `G ⊗ G` or `G ∧ G` with its pair map and the conjugation action of `G`.
#[derive(Clone, Debug)]
pub struct WedgeSquare {
    base: FiniteGroup,
    square: FiniteGroup,
    kind: SquareKind,
    /// `pair_map[a·|G| + b]` is `a ⊗ b` (or `a ∧ b`) in the square.
    pair_map: Vec<usize>,
    /// `action[z·|W| + w]` is `^z w`.
    action: Vec<usize>,
}

impl WedgeSquare {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    /// The square itself, `W`.
    pub fn square(&self) -> &FiniteGroup {
        &self.square
    }

    pub fn kind(&self) -> SquareKind {
        self.kind
    }

    #[inline]
    pub fn pair(&self, a: usize, b: usize) -> usize {
        self.pair_map[a * self.base.order() + b]
    }

    pub fn pair_map(&self) -> &[usize] {
        &self.pair_map
    }

    /// `^z w` for `z ∈ G`, `w ∈ W`.
    #[inline]
    pub fn act(&self, z: usize, w: usize) -> usize {
        self.action[z * self.square.order() + w]
    }

    pub fn action_table(&self) -> &[usize] {
        &self.action
    }

    /// A pair `(a, b)` with `a ∧ b = w` for each generator `w` of `W`.
    pub fn generator_preimages(&self) -> Vec<(usize, usize)> {
        generator_preimages(&self.base, &self.square, &self.pair_map)
    }

    /// Builds the homomorphism `W → target` sending `a ∧ b` to `value(a, b)`,
    /// if it exists: defined on generators of `W`, extended along canonical
    /// words, then checked against `value` on every pair.
    pub fn extend_pair_function(
        &self,
        target: &FiniteGroup,
        value: impl Fn(usize, usize) -> usize,
    ) -> Option<GroupHom> {
        extend_pairs(&self.base, &self.square, &self.pair_map, target, value)
    }

    /// Checks every defining relation under the pair map, that the pair
    /// values generate `W`, and the action properties.
    pub fn check_invariants(&self) -> Result<()> {
        let g = &self.base;
        let w = &self.square;
        let n = g.order();
        let bad = |what: &str| Err(Error::Invariant(format!("{} square: {what}", self.kind)));
        let mut values = self.pair_map.clone();
        values.sort_unstable();
        values.dedup();
        if w.closure(&values).len() != w.order() {
            return bad("pair values do not generate the square");
        }
        if self.kind == SquareKind::Exterior {
            for a in 0..n {
                if self.pair(a, a) != 0 {
                    return bad("a∧a ≠ 1");
                }
                for b in 0..n {
                    if w.mul(self.pair(a, b), self.pair(b, a)) != 0 {
                        return bad("(a∧b)(b∧a) ≠ 1");
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    let lhs = self.pair(ab, c);
                    let rhs = w.mul(self.pair(g.conjugate(a, b), g.conjugate(a, c)), self.pair(a, c));
                    if lhs != rhs {
                        return bad("ab⊗c relation fails");
                    }
                    let lhs = self.pair(a, g.mul(b, c));
                    let rhs = w.mul(self.pair(a, b), self.pair(g.conjugate(b, a), g.conjugate(b, c)));
                    if lhs != rhs {
                        return bad("a⊗bc relation fails");
                    }
                }
            }
        }
        check_action(g, w, &self.pair_map, &self.action)
    }
}

/// The defining presentation; generator `a·|G| + b` is the pair `(a, b)`.
pub fn square_presentation(g: &FiniteGroup, kind: SquareKind) -> Presentation {
    let n = g.order();
    let t = |a: usize, b: usize| a * n + b;
    let names = (0..n * n).map(|i| format!("w{}_{}", i / n, i % n)).collect();
    let mut relators = Vec::with_capacity(2 * n * n * n + 2 * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // t(ab,c) · t(a,c)⁻¹ · t(^a b, ^a c)⁻¹
                relators.push(Word::from_syllables([
                    (t(g.mul(a, b), c), 1),
                    (t(a, c), -1),
                    (t(g.conjugate(a, b), g.conjugate(a, c)), -1),
                ]));
                // t(a,bc) · t(^b a, ^b c)⁻¹ · t(a,b)⁻¹
                relators.push(Word::from_syllables([
                    (t(a, g.mul(b, c)), 1),
                    (t(g.conjugate(b, a), g.conjugate(b, c)), -1),
                    (t(a, b), -1),
                ]));
            }
        }
    }
    if kind == SquareKind::Exterior {
        for a in 0..n {
            relators.push(Word::generator(t(a, a)));
            for b in 0..n {
                relators.push(Word::from_syllables([(t(a, b), 1), (t(b, a), 1)]));
            }
        }
    }
    Presentation::new(names, relators).expect("pair symbols are valid and distinct")
}

pub fn tensor_square(g: &FiniteGroup, cfg: &WedgeConfig) -> Result<WedgeSquare> {
    build_square(g, SquareKind::Tensor, cfg)
}

pub fn exterior_square(g: &FiniteGroup, cfg: &WedgeConfig) -> Result<WedgeSquare> {
    build_square(g, SquareKind::Exterior, cfg)
}

fn build_square(g: &FiniteGroup, kind: SquareKind, cfg: &WedgeConfig) -> Result<WedgeSquare> {
    if g.order() > cfg.max_order {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            max: cfg.max_order,
        });
    }
    let n = g.order();
    let presentation = square_presentation(g, kind);
    let simplified = eliminate_short_relators(&presentation);
    let p = &simplified.presentation;
    let table = todd_coxeter_with(p, &cfg.limits, cfg.strategy)?;
    let (square, gen_map) = group_from_cosets(&table, p)?;
    let pair_map: Vec<usize> = (0..n * n)
        .map(|i| {
            square.product(
                simplified.substitution[i]
                    .letters()
                    .map(|(h, inv)| if inv { square.inv(gen_map[h]) } else { gen_map[h] }),
            )
        })
        .collect();
    let action = conjugation_action(g, &square, &pair_map)?;
    let ws = WedgeSquare {
        base: g.clone(),
        square,
        kind,
        pair_map,
        action,
    };
    ws.check_invariants()?;
    Ok(ws)
}

fn generator_preimages(g: &FiniteGroup, w: &FiniteGroup, pair_map: &[usize]) -> Vec<(usize, usize)> {
    let n = g.order();
    w.generators()
        .iter()
        .map(|&x| {
            let i = pair_map
                .iter()
                .position(|&v| v == x)
                .expect("square generators are pair values");
            (i / n, i % n)
        })
        .collect()
}

fn extend_pairs(
    g: &FiniteGroup,
    w: &FiniteGroup,
    pair_map: &[usize],
    target: &FiniteGroup,
    value: impl Fn(usize, usize) -> usize,
) -> Option<GroupHom> {
    let n = g.order();
    let pre = generator_preimages(g, w, pair_map);
    let images: Vec<usize> = pre.iter().map(|&(a, b)| value(a, b)).collect();
    let hom = hom_from_generator_images(w, w.generators(), &images, target)
        .expect("square generators generate")?;
    for a in 0..n {
        for b in 0..n {
            if hom.apply(pair_map[a * n + b]) != value(a, b) {
                return None;
            }
        }
    }
    Some(hom)
}

/// The action `^z(a ∧ b) = ^z a ∧ ^z b` of `G` on the square, as a dense
/// `|G|×|W|` table. Each `^z` is built on generators, extended along
/// canonical words, and verified to be an automorphism that agrees with the
/// rule on every pair; the action must also compose correctly.
pub fn conjugation_action(g: &FiniteGroup, w: &FiniteGroup, pair_map: &[usize]) -> Result<Vec<usize>> {
    let n = g.order();
    let mut action = Vec::with_capacity(n * w.order());
    for z in g.elements() {
        let hom = extend_pairs(g, w, pair_map, w, |a, b| {
            pair_map[g.conjugate(z, a) * n + g.conjugate(z, b)]
        })
        .ok_or_else(|| Error::Invariant(format!("conjugation by {} does not extend", g.name(z))))?;
        if !hom.is_bijective() {
            return Err(Error::Invariant(format!(
                "conjugation by {} is not an automorphism",
                g.name(z)
            )));
        }
        action.extend_from_slice(hom.images());
    }
    check_action(g, w, pair_map, &action)?;
    Ok(action)
}

fn check_action(g: &FiniteGroup, w: &FiniteGroup, pair_map: &[usize], action: &[usize]) -> Result<()> {
    let n = g.order();
    let m = w.order();
    let act = |z: usize, x: usize| action[z * m + x];
    let bad = |what: String| Err(Error::Invariant(what));
    for x in w.elements() {
        if act(0, x) != x {
            return bad("identity acts nontrivially".into());
        }
    }
    for z in g.elements() {
        let mut seen = vec![false; m];
        for x in w.elements() {
            if std::mem::replace(&mut seen[act(z, x)], true) {
                return bad(format!("action of {} is not bijective", g.name(z)));
            }
        }
        for x in w.elements() {
            for y in w.elements() {
                if act(z, w.mul(x, y)) != w.mul(act(z, x), act(z, y)) {
                    return bad(format!("action of {} is not multiplicative", g.name(z)));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if act(z, pair_map[a * n + b]) != pair_map[g.conjugate(z, a) * n + g.conjugate(z, b)] {
                    return bad("action disagrees with ^z a ∧ ^z b".into());
                }
            }
        }
    }
    for z1 in g.elements() {
        for z2 in g.elements() {
            let z = g.mul(z1, z2);
            if w.elements().any(|x| act(z, x) != act(z1, act(z2, x))) {
                return bad("action does not compose".into());
            }
        }
    }
    Ok(())
}

/// χ, the Schur multiplier `ker χ`, and its invariant factors.
#[derive(Clone, Debug)]
pub struct SchurData {
    pub chi: GroupHom,
    pub multiplier: Subgroup,
    pub invariants: AbelianInvariants,
}

/// `χ: G ∧ G → G` with `χ(a ∧ b) = [a, b]`; its kernel is the Schur
/// multiplier.
pub fn commutator_hom(ws: &WedgeSquare) -> Result<SchurData> {
    if ws.kind != SquareKind::Exterior {
        return Err(Error::InvalidInput("χ is defined on the exterior square".into()));
    }
    let g = &ws.base;
    let w = &ws.square;
    let chi = ws
        .extend_pair_function(g, |a, b| g.commutator(a, b))
        .ok_or_else(|| Error::Invariant("χ does not extend to a homomorphism".into()))?;
    if chi.image(g).members() != g.derived_subgroup().members() {
        return Err(Error::Invariant("χ is not onto [G,G]".into()));
    }
    let multiplier = chi.kernel(w);
    if multiplier.order() * g.derived_subgroup().order() != w.order() {
        return Err(Error::Invariant("|G ∧ G| ≠ |M(G)|·|[G,G]|".into()));
    }
    if g.is_abelian() && (!w.is_abelian() || multiplier.order() != w.order()) {
        return Err(Error::Invariant("exterior square of an abelian group is not M(G)".into()));
    }
    let center = w.center();
    if !multiplier.members().iter().all(|&x| center.contains(x)) {
        return Err(Error::Invariant("Schur multiplier is not central".into()));
    }
    let (mgroup, _) = multiplier.to_group(w);
    let invariants = abelian_invariants(&mgroup);
    Ok(SchurData {
        chi,
        multiplier,
        invariants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{builtin_family, Family};

    fn fam(f: Family, p: &[usize]) -> FiniteGroup {
        builtin_family(f, p).unwrap()
    }

    #[test]
    fn presentation_shape() {
        let g = fam(Family::Dihedral, &[3]);
        let p = square_presentation(&g, SquareKind::Exterior);
        assert_eq!(p.generators().len(), 36);
        assert_eq!(p.relators().len(), 2 * 216 + 6 + 36);
        let p = square_presentation(&g, SquareKind::Tensor);
        assert_eq!(p.relators().len(), 2 * 216);
    }

    #[test]
    fn trivial_group_squares() {
        let t = FiniteGroup::trivial();
        let ws = tensor_square(&t, &WedgeConfig::default()).unwrap();
        assert_eq!(ws.square().order(), 1);
        let ws = exterior_square(&t, &WedgeConfig::default()).unwrap();
        assert_eq!(ws.square().order(), 1);
        assert!(commutator_hom(&ws).unwrap().invariants.is_trivial());
    }

    #[test]
    fn cyclic_exterior_square_is_trivial() {
        for n in [2, 5, 8] {
            let ws = exterior_square(&fam(Family::CyclicProduct, &[n]), &WedgeConfig::default()).unwrap();
            assert_eq!(ws.square().order(), 1);
        }
    }

    #[test]
    fn d3_action_inverts_generator() {
        let g = fam(Family::Dihedral, &[3]);
        let ws = exterior_square(&g, &WedgeConfig::default()).unwrap();
        assert_eq!(ws.square().order(), 3);
        let (a, b) = (g.generators()[0], g.generators()[1]);
        let ab = ws.pair(a, b);
        assert_ne!(ab, 0);
        assert_eq!(ws.act(a, ab), ws.square().inv(ab));
        // brute force: ^a a ∧ ^a b = a ∧ b⁻¹
        assert_eq!(ws.pair(g.conjugate(a, a), g.conjugate(a, b)), ws.pair(a, g.inv(b)));
        assert_eq!(ws.pair(a, g.inv(b)), ws.square().inv(ab));
    }

    #[test]
    fn abelian_groups_act_trivially() {
        let g = fam(Family::CyclicProduct, &[2, 4]);
        let ws = exterior_square(&g, &WedgeConfig::default()).unwrap();
        for z in g.elements() {
            for x in ws.square().elements() {
                assert_eq!(ws.act(z, x), x);
            }
        }
    }

    #[test]
    fn order_bound() {
        let g = fam(Family::Symmetric, &[4]);
        let cfg = WedgeConfig {
            max_order: 12,
            ..WedgeConfig::default()
        };
        assert!(matches!(exterior_square(&g, &cfg), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn abelian_multipliers_are_cyclic_of_gcd_order() {
        for (m, n) in [(2, 2), (2, 4), (3, 6), (4, 6), (6, 6)] {
            let g = fam(Family::CyclicProduct, &[m, n]);
            let ws = exterior_square(&g, &WedgeConfig::default()).unwrap();
            let d = (1..=m).rev().find(|d| m % d == 0 && n % d == 0).unwrap();
            let schur = commutator_hom(&ws).unwrap();
            assert_eq!(schur.invariants, AbelianInvariants::from_cyclic_orders(&[d]), "Z_{m} x Z_{n}");
            assert_eq!(abelian_invariants(ws.square()), schur.invariants);
        }
    }

    #[test]
    fn exterior_square_is_a_quotient_of_tensor_square() {
        for g in [
            fam(Family::Dihedral, &[3]),
            fam(Family::Dihedral, &[4]),
            fam(Family::Quaternion, &[2]),
            fam(Family::Alternating, &[4]),
            fam(Family::CyclicProduct, &[2, 2]),
        ] {
            let t = tensor_square(&g, &WedgeConfig::default()).unwrap();
            let e = exterior_square(&g, &WedgeConfig::default()).unwrap();
            assert_eq!(t.square().order() % e.square().order(), 0);
            // a⊗b ↦ a∧b is a homomorphism onto the exterior square
            let onto = t.extend_pair_function(e.square(), |a, b| e.pair(a, b)).unwrap();
            assert_eq!(onto.image(e.square()).order(), e.square().order());
        }
    }

    #[test]
    fn chi_needs_exterior_kind() {
        let g = fam(Family::Dihedral, &[3]);
        let ws = tensor_square(&g, &WedgeConfig::default()).unwrap();
        assert!(commutator_hom(&ws).is_err());
    }
}
