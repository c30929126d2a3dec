//! Homomorphisms between table groups and their enumeration.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{CayleyTree, FiniteGroup, Subgroup};

/// A map between two groups given by the image of every domain element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupHom {
    domain_order: usize,
    codomain_order: usize,
    images: Vec<usize>,
}

impl GroupHom {
    pub(crate) fn from_images(domain_order: usize, codomain_order: usize, images: Vec<usize>) -> Self {
        debug_assert_eq!(images.len(), domain_order);
        GroupHom {
            domain_order,
            codomain_order,
            images,
        }
    }

    /// Wraps an explicit image table after checking the homomorphism property
    /// over all pairs.
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain.order() {
            return Err(Error::Shape {
                expected: format!("{} images", domain.order()),
                found: images.len().to_string(),
            });
        }
        if images.iter().any(|&x| x >= codomain.order()) {
            return Err(Error::InvalidInput("image index out of range".into()));
        }
        let hom = GroupHom::from_images(domain.order(), codomain.order(), images);
        if !hom.is_homomorphism(domain, codomain) {
            return Err(Error::InvalidInput("map is not a homomorphism".into()));
        }
        Ok(hom)
    }

    pub fn trivial(domain: &FiniteGroup, codomain: &FiniteGroup) -> Self {
        GroupHom::from_images(domain.order(), codomain.order(), vec![0; domain.order()])
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom::from_images(group.order(), group.order(), group.elements().collect())
    }

    pub fn domain_order(&self) -> usize {
        self.domain_order
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|&x| x == 0)
    }

    /// Full pairwise check `f(x·y) = f(x)·f(y)`.
    pub fn is_homomorphism(&self, domain: &FiniteGroup, codomain: &FiniteGroup) -> bool {
        self.images.len() == domain.order()
            && self.images[0] == 0
            && domain.elements().all(|x| {
                domain
                    .elements()
                    .all(|y| self.images[domain.mul(x, y)] == codomain.mul(self.images[x], self.images[y]))
            })
    }

    pub fn kernel(&self, domain: &FiniteGroup) -> Subgroup {
        let members = domain.elements().filter(|&x| self.images[x] == 0).collect();
        Subgroup::from_members(domain, members)
    }

    pub fn image(&self, codomain: &FiniteGroup) -> Subgroup {
        let mut members = self.images.clone();
        members.sort_unstable();
        members.dedup();
        Subgroup::from_members(codomain, members)
    }

    pub fn is_bijective(&self) -> bool {
        if self.domain_order != self.codomain_order {
            return false;
        }
        let mut seen = vec![false; self.codomain_order];
        self.images.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        debug_assert_eq!(self.codomain_order, other.domain_order);
        GroupHom::from_images(
            self.domain_order,
            other.codomain_order,
            self.images.iter().map(|&x| other.images[x]).collect(),
        )
    }
}

/// Extends `images[i]` for `dom_gens[i]` to a homomorphism, if one exists.
///
/// Every domain element gets its canonical breadth-first word over
/// `dom_gens`; the word is evaluated in the codomain and the result is kept
/// only if the map is a homomorphism.
pub fn hom_from_generator_images(
    domain: &FiniteGroup,
    dom_gens: &[usize],
    images: &[usize],
    codomain: &FiniteGroup,
) -> Result<Option<GroupHom>> {
    if dom_gens.len() != images.len() {
        return Err(Error::Shape {
            expected: format!("{} generator images", dom_gens.len()),
            found: images.len().to_string(),
        });
    }
    if images.iter().any(|&x| x >= codomain.order()) {
        return Err(Error::InvalidInput("image index out of range".into()));
    }
    let tree = CayleyTree::new(domain, dom_gens);
    if !tree.spans(domain) {
        return Err(Error::NotGenerating {
            closure: tree.elements().len(),
            order: domain.order(),
        });
    }
    Ok(tree
        .extend(domain, codomain, images)
        .map(|map| GroupHom::from_images(domain.order(), codomain.order(), map)))
}

/// Backtracking search over generator images.
///
/// Each prefix of the generator list spans a subgroup; after choosing the
/// image of generator `k`, the partial map is checked on the subgroup
/// generated by generators `0..=k`, so inconsistent prefixes are pruned
/// early.
pub(crate) struct HomSearch<'a> {
    domain: &'a FiniteGroup,
    codomain: &'a FiniteGroup,
    generators: Vec<usize>,
    prefix_trees: Vec<CayleyTree>,
    candidates: Vec<Vec<usize>>,
}

impl<'a> HomSearch<'a> {
    /// `candidate_filter(domain_generator, codomain_element)` restricts the
    /// images tried beyond the order-divisibility rule.
    pub(crate) fn new(
        domain: &'a FiniteGroup,
        codomain: &'a FiniteGroup,
        generators: Vec<usize>,
        candidate_filter: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let prefix_trees = (0..generators.len())
            .map(|k| CayleyTree::new(domain, &generators[..=k]))
            .collect();
        let cod_orders = codomain.element_orders();
        let candidates = generators
            .iter()
            .map(|&g| {
                let n = domain.element_order(g);
                codomain
                    .elements()
                    .filter(|&y| n.is_multiple_of(cod_orders[y]) && candidate_filter(g, y))
                    .collect()
            })
            .collect();
        HomSearch {
            domain,
            codomain,
            generators,
            prefix_trees,
            candidates,
        }
    }

    fn consistent(&self, chosen: &[usize]) -> Option<Vec<usize>> {
        self.prefix_trees[chosen.len() - 1].extend(self.domain, self.codomain, chosen)
    }

    /// Visits every homomorphism in lexicographic order of generator images.
    /// The visitor returns `false` to stop.
    pub(crate) fn for_each(&self, mut visit: impl FnMut(Vec<usize>) -> bool) {
        if self.generators.is_empty() {
            visit(vec![0; self.domain.order()]);
            return;
        }
        let mut chosen = Vec::with_capacity(self.generators.len());
        self.recurse(&mut chosen, &mut visit);
    }

    fn recurse(&self, chosen: &mut Vec<usize>, visit: &mut impl FnMut(Vec<usize>) -> bool) -> bool {
        let k = chosen.len();
        for &y in &self.candidates[k] {
            chosen.push(y);
            if let Some(map) = self.consistent(chosen) {
                let go_on = if k + 1 == self.generators.len() {
                    visit(map)
                } else {
                    self.recurse(chosen, visit)
                };
                if !go_on {
                    chosen.pop();
                    return false;
                }
            }
            chosen.pop();
        }
        true
    }

    /// Collects all homomorphisms, splitting the first generator's images
    /// across the current rayon pool. Output order is canonical.
    pub(crate) fn collect_all(&self) -> Vec<Vec<usize>> {
        if self.generators.is_empty() {
            return vec![vec![0; self.domain.order()]];
        }
        let mut all: Vec<Vec<usize>> = self.candidates[0]
            .par_iter()
            .flat_map_iter(|&y| {
                let mut out = Vec::new();
                let mut chosen = vec![y];
                if let Some(map) = self.consistent(&chosen) {
                    if self.generators.len() == 1 {
                        out.push(map);
                    } else {
                        self.recurse(&mut chosen, &mut |m| {
                            out.push(m);
                            true
                        });
                    }
                }
                out
            })
            .collect();
        all.sort();
        all.dedup();
        all
    }
}

/// All homomorphisms `domain → codomain`, sorted lexicographically by their
/// image tables.
pub fn enumerate_homs(domain: &FiniteGroup, codomain: &FiniteGroup) -> Vec<GroupHom> {
    let gens = search_generators(domain);
    HomSearch::new(domain, codomain, gens, |_, _| true)
        .collect_all()
        .into_iter()
        .map(|m| GroupHom::from_images(domain.order(), codomain.order(), m))
        .collect()
}

/// The generator list used for searches: the group's own list when it is
/// short, otherwise a greedy small generating set.
pub(crate) fn search_generators(group: &FiniteGroup) -> Vec<usize> {
    let own = group.generators();
    let small = group.small_generating_set();
    if own.len() <= small.len() {
        own.to_vec()
    } else {
        small
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{builtin_family, Family};

    fn cyclic(n: usize) -> FiniteGroup {
        builtin_family(Family::CyclicProduct, &[n]).unwrap()
    }

    /// Brute force over every tuple of generator images, with no pruning.
    fn brute_force_count(dom: &FiniteGroup, cod: &FiniteGroup) -> usize {
        let gens = dom.generators().to_vec();
        let k = gens.len();
        let total = cod.order().pow(k as u32);
        let mut found = std::collections::BTreeSet::new();
        for code in 0..total {
            let mut c = code;
            let imgs: Vec<usize> = (0..k)
                .map(|_| {
                    let v = c % cod.order();
                    c /= cod.order();
                    v
                })
                .collect();
            // evaluate canonical words and test all pairs
            let tree = CayleyTree::new(dom, &gens);
            let map: Vec<usize> = dom
                .elements()
                .map(|x| cod.product(tree.word(x).into_iter().map(|i| imgs[i])))
                .collect();
            let h = GroupHom::from_images(dom.order(), cod.order(), map.clone());
            if h.is_homomorphism(dom, cod) {
                found.insert(map);
            }
        }
        found.len()
    }

    #[test]
    fn generator_image_extension() {
        let s3 = builtin_family(Family::Symmetric, &[3]).unwrap();
        let z3 = cyclic(3);
        let g = z3.generators().to_vec();
        let triv = hom_from_generator_images(&z3, &g, &[0], &s3).unwrap().unwrap();
        assert!(triv.is_trivial());
        let id = hom_from_generator_images(&s3, s3.generators(), s3.generators(), &s3)
            .unwrap()
            .unwrap();
        assert_eq!(id, GroupHom::identity(&s3));
        let transposition = s3.generators()[0];
        assert_eq!(
            hom_from_generator_images(&z3, &g, &[transposition], &s3).unwrap(),
            None
        );
        assert!(matches!(
            hom_from_generator_images(&s3, &[transposition], &[0], &s3),
            Err(Error::NotGenerating { .. })
        ));
    }

    #[test]
    fn hom_counts() {
        let s3 = builtin_family(Family::Symmetric, &[3]).unwrap();
        let homs = enumerate_homs(&cyclic(3), &s3);
        assert_eq!(homs.len(), 3);
        let mut image_orders: Vec<usize> = homs.iter().map(|h| h.image(&s3).order()).collect();
        image_orders.dedup();
        assert_eq!(image_orders.len(), 2);
        assert_eq!(enumerate_homs(&cyclic(7), &FiniteGroup::trivial()).len(), 1);
        assert_eq!(enumerate_homs(&cyclic(4), &cyclic(6)).len(), 2);
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_groups() {
        let groups = [
            cyclic(2),
            cyclic(4),
            cyclic(6),
            builtin_family(Family::Klein, &[]).unwrap(),
            builtin_family(Family::Symmetric, &[3]).unwrap(),
            builtin_family(Family::Dihedral, &[4]).unwrap(),
            builtin_family(Family::Quaternion, &[2]).unwrap(),
            builtin_family(Family::Quaternion, &[3]).unwrap(),
            builtin_family(Family::Dihedral, &[6]).unwrap(),
        ];
        for dom in &groups {
            for cod in &groups {
                let homs = enumerate_homs(dom, cod);
                for h in &homs {
                    assert!(h.is_homomorphism(dom, cod));
                }
                let mut dedup = homs.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), homs.len());
                assert_eq!(homs.len(), brute_force_count(dom, cod), "{dom:?} -> {cod:?}");
            }
        }
    }
}
