//! Built-in group families with their customary generators.

use std::fmt;
use std::str::FromStr;

use crate::coset::{group_from_cosets, todd_coxeter, EnumerationLimits};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::{group_from_permutations, Permutation};
use crate::presentation::parse_presentation;

/// Largest order any family constructor will build.
pub const FAMILY_MAX_ORDER: usize = 720;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `D_n = <a, b | a², bⁿ, abab>`, order `2n`.
    Dihedral,
    /// `Q_n = <x, y | x² = yⁿ, xyx⁻¹ = y⁻¹>`, order `4n`.
    Quaternion,
    Symmetric,
    Alternating,
    /// `Z_m × Z_n` (one parameter gives the cyclic group `Z_n`).
    CyclicProduct,
    Sl23,
    Klein,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "dihedral" => Family::Dihedral,
            "quaternion" => Family::Quaternion,
            "symmetric" => Family::Symmetric,
            "alternating" => Family::Alternating,
            "cyclic-product" => Family::CyclicProduct,
            "sl23" => Family::Sl23,
            "klein" => Family::Klein,
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Dihedral => "dihedral",
            Family::Quaternion => "quaternion",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::CyclicProduct => "cyclic-product",
            Family::Sl23 => "sl23",
            Family::Klein => "klein",
        })
    }
}

fn bad_params(family: Family, params: &[usize]) -> Error {
    Error::InvalidInput(format!("invalid parameters {params:?} for family {family}"))
}

pub fn builtin_family(family: Family, params: &[usize]) -> Result<FiniteGroup> {
    match (family, params) {
        (Family::Dihedral, &[n]) if n >= 1 => {
            check_order(2 * n)?;
            Ok(dihedral(n))
        }
        (Family::Quaternion, &[n]) if n >= 2 => {
            check_order(4 * n)?;
            Ok(quaternion(n))
        }
        (Family::Symmetric, &[n]) if (1..=6).contains(&n) => {
            let mut gens = vec![Permutation::identity(n)];
            if n >= 2 {
                gens = vec![
                    Permutation::parse_cycles("(1 2)", n)?,
                    Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?,
                ];
            }
            group_from_permutations(&gens, FAMILY_MAX_ORDER)
        }
        (Family::Alternating, &[n]) if (1..=6).contains(&n) => {
            let mut gens = vec![Permutation::identity(n)];
            for k in 3..=n {
                gens.push(Permutation::parse_cycles(&format!("(1 2 {k})"), n)?);
            }
            if n >= 3 {
                gens.remove(0);
            }
            group_from_permutations(&gens, FAMILY_MAX_ORDER)
        }
        (Family::CyclicProduct, &[n]) if n >= 1 => {
            check_order(n)?;
            Ok(cyclic_product(1, n))
        }
        (Family::CyclicProduct, &[m, n]) if m >= 1 && n >= 1 => {
            check_order(m.saturating_mul(n))?;
            Ok(cyclic_product(m, n))
        }
        (Family::Sl23, &[]) => sl23(),
        (Family::Klein, &[]) => Ok(cyclic_product(2, 2)),
        _ => Err(bad_params(family, params)),
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > FAMILY_MAX_ORDER {
        Err(Error::OrderTooLarge {
            order,
            max: FAMILY_MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

fn power_name(sym: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{k}"),
    }
}

fn join_name(parts: &[String]) -> String {
    let s: String = parts.concat();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Builds a group whose elements are pairs `(i, j)` with `0 ≤ i < m`,
/// `0 ≤ j < n`, numbered `i·n + j`.
fn from_pairs(
    m: usize,
    n: usize,
    mul: impl Fn((usize, usize), (usize, usize)) -> (usize, usize),
    name: impl Fn(usize, usize) -> String,
    generators: &[(usize, usize)],
) -> FiniteGroup {
    let order = m * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let (i, j) = mul((x / n, x % n), (y / n, y % n));
            table.push(i * n + j);
        }
    }
    let names = (0..order).map(|x| name(x / n, x % n)).collect();
    let mut gens: Vec<usize> = generators.iter().map(|&(i, j)| i * n + j).collect();
    gens.retain(|&g| g != 0);
    gens.dedup();
    FiniteGroup::from_flat(order, table, names, gens).expect("family tables are groups")
}

/// Elements `a^i b^j`; `b^j a = a b^-j`.
fn dihedral(n: usize) -> FiniteGroup {
    from_pairs(
        2,
        n,
        |(i1, j1), (i2, j2)| {
            let j1 = if i2 == 1 { (n - j1) % n } else { j1 };
            ((i1 + i2) % 2, (j1 + j2) % n)
        },
        |i, j| join_name(&[power_name("a", i), power_name("b", j)]),
        &[(1, 0), (0, 1 % n)],
    )
}

/// Elements `x^i y^j` with `y` of order `2n`, `x² = yⁿ`, `y^j x = x y^-j`.
fn quaternion(n: usize) -> FiniteGroup {
    let m = 2 * n;
    from_pairs(
        2,
        m,
        |(i1, j1), (i2, j2)| {
            let j1 = if i2 == 1 { (m - j1) % m } else { j1 };
            let extra = if i1 + i2 == 2 { n } else { 0 };
            ((i1 + i2) % 2, (j1 + j2 + extra) % m)
        },
        |i, j| join_name(&[power_name("x", i), power_name("y", j)]),
        &[(1, 0), (0, 1)],
    )
}

fn cyclic_product(m: usize, n: usize) -> FiniteGroup {
    from_pairs(
        m,
        n,
        |(i1, j1), (i2, j2)| ((i1 + i2) % m, (j1 + j2) % n),
        |i, j| join_name(&[power_name("a", i), power_name("b", j)]),
        &[(1 % m, 0), (0, 1 % n)],
    )
}

/// `SL(2,3) = <x, y, z | x⁴, z³, x² = y², yxy⁻¹ = x⁻¹, zxz⁻¹ = y, zyz⁻¹ = xy>`.
fn sl23() -> Result<FiniteGroup> {
    let p = parse_presentation(
        "<x,y,z | x^4, z^3, x^2=y^2, yxy^-1=x^-1, zxz^-1=y, zyz^-1=xy>",
    )?;
    let table = todd_coxeter(&p, &EnumerationLimits::default())?;
    let (g, _) = group_from_cosets(&table, &p)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let q2 = builtin_family(Family::Quaternion, &[2]).unwrap();
        assert_eq!(q2.order(), 8);
        let d4 = builtin_family(Family::Dihedral, &[4]).unwrap();
        assert_eq!(d4.order(), 8);
        let gen_orders: Vec<usize> = d4.generators().iter().map(|&g| d4.element_order(g)).collect();
        assert_eq!(gen_orders, [2, 4]);
        let z = builtin_family(Family::CyclicProduct, &[4, 6]).unwrap();
        assert_eq!(z.order(), 24);
        assert!(z.is_abelian());
        assert_eq!(builtin_family(Family::Symmetric, &[4]).unwrap().order(), 24);
        assert_eq!(builtin_family(Family::Alternating, &[4]).unwrap().order(), 12);
        assert_eq!(builtin_family(Family::Alternating, &[5]).unwrap().order(), 60);
        assert_eq!(builtin_family(Family::Alternating, &[2]).unwrap().order(), 1);
        assert_eq!(builtin_family(Family::Symmetric, &[1]).unwrap().order(), 1);
        assert_eq!(builtin_family(Family::Klein, &[]).unwrap().order(), 4);
        assert_eq!(builtin_family(Family::Dihedral, &[1]).unwrap().order(), 2);
    }

    #[test]
    fn quaternion_relations_hold() {
        for n in 2..=6 {
            let q = builtin_family(Family::Quaternion, &[n]).unwrap();
            assert_eq!(q.order(), 4 * n);
            let (x, y) = (q.generators()[0], q.generators()[1]);
            assert_eq!(q.pow(x, 2), q.pow(y, n as i64));
            assert_eq!(q.conjugate(x, y), q.inv(y));
            assert_eq!(q.element_order(x), 4);
        }
        // Q_2 has a single involution
        let q2 = builtin_family(Family::Quaternion, &[2]).unwrap();
        assert_eq!(q2.element_orders().iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn sl23_against_matrices() {
        let g = builtin_family(Family::Sl23, &[]).unwrap();
        assert_eq!(g.order(), 24);
        // Oracle: SL(2,3) as 2×2 matrices over F_3.
        type M = [u8; 4];
        let mul = |a: M, b: M| -> M {
            [
                (a[0] * b[0] + a[1] * b[2]) % 3,
                (a[0] * b[1] + a[1] * b[3]) % 3,
                (a[2] * b[0] + a[3] * b[2]) % 3,
                (a[2] * b[1] + a[3] * b[3]) % 3,
            ]
        };
        let mut mats = Vec::new();
        for code in 0..81u32 {
            let m: M = [(code % 3) as u8, (code / 3 % 3) as u8, (code / 9 % 3) as u8, (code / 27) as u8];
            if (m[0] * m[3] + 3 * 3 - m[1] * m[2]) % 3 == 1 {
                mats.push(m);
            }
        }
        assert_eq!(mats.len(), 24);
        mats.sort_by_key(|m| *m != [1, 0, 0, 1]);
        let idx = |m: M| mats.iter().position(|&x| x == m).unwrap();
        let table: Vec<Vec<usize>> = mats
            .iter()
            .map(|&a| mats.iter().map(|&b| idx(mul(a, b))).collect())
            .collect();
        let names = (0..24).map(|i| format!("m{i}")).collect();
        let h = FiniteGroup::from_table(table, names, (1..24).collect()).unwrap();
        assert!(crate::iso::are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn parameter_errors() {
        assert!(builtin_family(Family::Quaternion, &[1]).is_err());
        assert!(builtin_family(Family::Dihedral, &[0]).is_err());
        assert!(builtin_family(Family::Klein, &[2]).is_err());
        assert!(matches!("cube".parse::<Family>(), Err(Error::UnknownFamily(_))));
        assert_eq!("sl23".parse::<Family>().unwrap(), Family::Sl23);
    }
}
