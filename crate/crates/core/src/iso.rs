//! Isomorphism testing for small groups.

use crate::abelian::abelian_invariants;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::HomSearch;

/// Default cap on the order of groups compared by [`are_isomorphic`].
pub const DEFAULT_ISO_BOUND: usize = 64;

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    are_isomorphic_bounded(g, h, DEFAULT_ISO_BOUND)
}

/// Backtracks over images of a small generating set of `g`, trying only
/// elements of `h` with the same order and conjugacy-class size. Cheap
/// invariants (order profile, class-size profile, abelian invariants) are
/// compared first.
pub fn are_isomorphic_bounded(g: &FiniteGroup, h: &FiniteGroup, bound: usize) -> Result<bool> {
    for grp in [g, h] {
        if grp.order() > bound {
            return Err(Error::OrderTooLarge {
                order: grp.order(),
                max: bound,
            });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    let (go, ho) = (g.element_orders(), h.element_orders());
    if sorted(&go) != sorted(&ho) {
        return Ok(false);
    }
    let (gc, hc) = (g.class_sizes(), h.class_sizes());
    if sorted(&gc) != sorted(&hc) {
        return Ok(false);
    }
    let (ga, ha) = (g.is_abelian(), h.is_abelian());
    if ga != ha {
        return Ok(false);
    }
    if ga {
        return Ok(abelian_invariants(g) == abelian_invariants(h));
    }
    let gens = g.small_generating_set();
    let search = HomSearch::new(g, h, gens, |x, y| go[x] == ho[y] && gc[x] == hc[y]);
    let mut found = false;
    search.for_each(|map| {
        let mut seen = vec![false; h.order()];
        if map.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
            found = true;
            return false;
        }
        true
    });
    Ok(found)
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{builtin_family, Family};
    use crate::perm::{group_from_permutations, Permutation};

    fn fam(f: Family, p: &[usize]) -> FiniteGroup {
        builtin_family(f, p).unwrap()
    }

    #[test]
    fn examples() {
        assert!(!are_isomorphic(&fam(Family::CyclicProduct, &[4]), &fam(Family::Klein, &[])).unwrap());
        assert!(are_isomorphic(&fam(Family::Dihedral, &[3]), &fam(Family::Symmetric, &[3])).unwrap());
        let s4 = fam(Family::Symmetric, &[4]);
        assert!(are_isomorphic(&s4, &s4).unwrap());
    }

    #[test]
    fn same_profiles_different_groups() {
        // D_4 and Q_2 differ; Z_4×Z_2 vs Z_2×Z_2×Z_2 differ.
        assert!(!are_isomorphic(&fam(Family::Dihedral, &[4]), &fam(Family::Quaternion, &[2])).unwrap());
        // SL(2,3) vs S_4 vs Z_2 × A_4 all have order 24 and are pairwise distinct.
        let sl = fam(Family::Sl23, &[]);
        let s4 = fam(Family::Symmetric, &[4]);
        let p = |s: &str| Permutation::parse_cycles(s, 6).unwrap();
        let z2a4 =
            group_from_permutations(&[p("(1 2 3)"), p("(1 2 4)"), p("(5 6)")], 64).unwrap();
        assert_eq!(z2a4.order(), 24);
        for (a, b) in [(&sl, &s4), (&sl, &z2a4), (&s4, &z2a4)] {
            assert!(!are_isomorphic(a, b).unwrap());
        }
        // D_6 ≅ S_3 × Z_2
        let s3z2 = group_from_permutations(&[p("(1 2)"), p("(1 2 3)"), p("(4 5)")], 64).unwrap();
        assert!(are_isomorphic(&fam(Family::Dihedral, &[6]), &s3z2).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        let s5 = fam(Family::Symmetric, &[5]);
        assert!(matches!(are_isomorphic(&s5, &s5), Err(Error::OrderTooLarge { .. })));
        assert!(are_isomorphic_bounded(&s5, &s5, 120).unwrap());
    }
}
