//! Invariant factors of finite abelian groups, and τ(n).

use std::fmt;

use crate::group::{FiniteGroup, Subgroup};

/// Invariant factors `d₁ | d₂ | … | dₖ`, each greater than one. The empty
/// list is the trivial group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianInvariants(Vec<usize>);

impl AbelianInvariants {
    /// Normalizes an arbitrary list of cyclic orders into invariant factors.
    pub fn from_cyclic_orders(orders: &[usize]) -> Self {
        // Split every order into prime powers, then combine the largest
        // powers of each prime into the last factor, and so on.
        let mut by_prime: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &n in orders {
            let mut n = n;
            let mut p = 2;
            while n > 1 {
                if n % p == 0 {
                    let mut q = 1;
                    while n % p == 0 {
                        n /= p;
                        q *= p;
                    }
                    by_prime.entry(p).or_default().push(q);
                }
                p += 1;
            }
        }
        let k = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1usize; k];
        for powers in by_prime.values_mut() {
            powers.sort_unstable();
            for (i, &q) in powers.iter().rev().enumerate() {
                factors[k - 1 - i] *= q;
            }
        }
        AbelianInvariants(factors)
    }

    pub fn divisors(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.0.len() <= 1
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|d| format!("Z_{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Invariant factors of `G`, or of `G/[G,G]` when `G` is not abelian.
///
/// An element of maximal order in a finite abelian group generates a direct
/// summand, so the largest factor is peeled off and the procedure repeats
/// on the quotient.
pub fn abelian_invariants(g: &FiniteGroup) -> AbelianInvariants {
    if !g.is_abelian() {
        let (ab, _) = g
            .quotient(&g.derived_subgroup())
            .expect("derived subgroup is normal");
        return abelian_invariants(&ab);
    }
    let mut factors = Vec::new();
    let mut current = g.clone();
    while current.order() > 1 {
        let orders = current.element_orders();
        let (x, &m) = orders
            .iter()
            .enumerate()
            .max_by_key(|&(i, &o)| (o, std::cmp::Reverse(i)))
            .unwrap();
        factors.push(m);
        let cyclic = Subgroup::from_members(&current, current.closure(&[x]));
        current = current.quotient(&cyclic).expect("abelian subgroups are normal").0;
    }
    factors.reverse();
    AbelianInvariants(factors)
}

/// τ(n), the number of positive divisors of `n`.
pub fn divisor_count(n: u64) -> u64 {
    assert!(n >= 1, "divisor_count needs n ≥ 1");
    let mut count = 1;
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        count *= e + 1;
        p += 1;
    }
    if n > 1 {
        count *= 2;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{builtin_family, Family};

    /// Diagonal of the Smith normal form of an integer matrix, computed by
    /// plain row/column elimination. Test oracle only.
    fn smith_diagonal(mut m: Vec<Vec<i64>>) -> Vec<i64> {
        let rows = m.len();
        let cols = m[0].len();
        let mut diag = Vec::new();
        for t in 0..rows.min(cols) {
            loop {
                // pivot: smallest nonzero absolute value in the submatrix
                let mut best = None;
                for i in t..rows {
                    for j in t..cols {
                        if m[i][j] != 0 && best.is_none_or(|(_, _, v)| m[i][j].abs() < v) {
                            best = Some((i, j, m[i][j].abs()));
                        }
                    }
                }
                let Some((pi, pj, _)) = best else { return diag };
                m.swap(t, pi);
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
                let p = m[t][t];
                let mut clean = true;
                for i in t + 1..rows {
                    let q = m[i][t] / p;
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                    clean &= m[i][t] == 0;
                }
                for j in t + 1..cols {
                    let q = m[t][j] / p;
                    for i in t..rows {
                        m[i][j] -= q * m[i][t];
                    }
                    clean &= m[t][j] == 0;
                }
                if clean {
                    let divides_rest =
                        (t + 1..rows).all(|i| (t + 1..cols).all(|j| m[i][j] % p == 0));
                    if divides_rest {
                        diag.push(p.abs());
                        break;
                    }
                    // fold a bad row into the pivot row and retry
                    let i = (t + 1..rows)
                        .find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0))
                        .unwrap();
                    for j in t..cols {
                        m[t][j] += m[i][j];
                    }
                }
            }
        }
        diag
    }

    #[test]
    fn smith_oracle_sanity() {
        assert_eq!(smith_diagonal(vec![vec![6, 0], vec![0, 4]]), vec![2, 12]);
        assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn invariants_match_smith_normal_form() {
        for (m, n) in [(6, 4), (2, 2), (3, 6), (4, 6), (6, 6), (2, 4), (5, 7), (1, 8)] {
            let g = builtin_family(Family::CyclicProduct, &[m, n]).unwrap();
            let snf: Vec<usize> = smith_diagonal(vec![vec![m as i64, 0], vec![0, n as i64]])
                .into_iter()
                .filter(|&d| d > 1)
                .map(|d| d as usize)
                .collect();
            assert_eq!(abelian_invariants(&g).divisors(), snf.as_slice(), "Z_{m} x Z_{n}");
        }
    }

    #[test]
    fn named_examples() {
        let g = builtin_family(Family::CyclicProduct, &[6, 4]).unwrap();
        assert_eq!(abelian_invariants(&g).divisors(), [2, 12]);
        let v = builtin_family(Family::Klein, &[]).unwrap();
        assert_eq!(abelian_invariants(&v).divisors(), [2, 2]);
        assert!(abelian_invariants(&FiniteGroup::trivial()).is_trivial());
        // non-abelian input: abelianization of S_4 is Z_2
        let s4 = builtin_family(Family::Symmetric, &[4]).unwrap();
        assert_eq!(abelian_invariants(&s4).divisors(), [2]);
    }

    #[test]
    fn from_cyclic_orders_normalizes() {
        assert_eq!(AbelianInvariants::from_cyclic_orders(&[2, 6, 2, 2]).divisors(), [2, 2, 2, 6]);
        assert_eq!(AbelianInvariants::from_cyclic_orders(&[4, 6]).divisors(), [2, 12]);
        assert!(AbelianInvariants::from_cyclic_orders(&[1]).is_trivial());
    }

    #[test]
    fn tau() {
        assert_eq!(divisor_count(1), 1);
        assert_eq!(divisor_count(4), 3);
        assert_eq!(divisor_count(6), 4);
        for n in 1..200u64 {
            let brute = (1..=n).filter(|d| n % d == 0).count() as u64;
            assert_eq!(divisor_count(n), brute);
        }
    }
}
