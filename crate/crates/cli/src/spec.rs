//! The group mini-language: `D:n`, `Q:n`, `S:n`, `A:n`, `Z:n`, `Z:mxn`,
//! `SL23`, `V4`, `perm:<file>`, `pres:<presentation>`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use mlaw::{
    builtin_family, group_from_cosets, group_from_permutations, parse_generator_list, parse_presentation,
    todd_coxeter_with, EnumerationLimits, Family, FiniteGroup, Strategy,
};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Dihedral(usize),
    Quaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize, usize),
    Sl23,
    Klein,
    Perm(PathBuf),
    Pres(String),
}

fn number(text: &str, what: &str) -> Result<usize, CliError> {
    text.trim()
        .parse::<usize>()
        .map_err(|_| CliError::Input(format!("`{text}` is not a valid {what}")))
}

impl FromStr for GroupSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        match s {
            "SL23" => return Ok(GroupSpec::Sl23),
            "V4" => return Ok(GroupSpec::Klein),
            _ => {}
        }
        let Some((kind, rest)) = s.split_once(':') else {
            return Err(CliError::Input(format!("unrecognized group spec `{s}`")));
        };
        let spec = match kind {
            "D" => GroupSpec::Dihedral(number(rest, "dihedral parameter")?),
            "Q" => GroupSpec::Quaternion(number(rest, "quaternion parameter")?),
            "S" => GroupSpec::Symmetric(number(rest, "symmetric degree")?),
            "A" => GroupSpec::Alternating(number(rest, "alternating degree")?),
            "Z" => match rest.split_once('x') {
                Some((m, n)) => GroupSpec::Cyclic(number(m, "cyclic order")?, number(n, "cyclic order")?),
                None => GroupSpec::Cyclic(1, number(rest, "cyclic order")?),
            },
            "perm" if !rest.is_empty() => GroupSpec::Perm(PathBuf::from(rest)),
            "pres" if !rest.is_empty() => GroupSpec::Pres(rest.to_string()),
            _ => return Err(CliError::Input(format!("unrecognized group spec `{s}`"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S:{n}"),
            GroupSpec::Alternating(n) => write!(f, "A:{n}"),
            GroupSpec::Cyclic(1, n) => write!(f, "Z:{n}"),
            GroupSpec::Cyclic(m, n) => write!(f, "Z:{m}x{n}"),
            GroupSpec::Sl23 => write!(f, "SL23"),
            GroupSpec::Klein => write!(f, "V4"),
            GroupSpec::Perm(p) => write!(f, "perm:{}", p.display()),
            GroupSpec::Pres(p) => write!(f, "pres:{p}"),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).fold(1usize, |acc, k| acc.saturating_mul(k))
}

impl GroupSpec {
    /// The order of a builtin group, known before construction.
    fn builtin_order(&self) -> Option<usize> {
        Some(match *self {
            GroupSpec::Dihedral(n) => n.saturating_mul(2),
            GroupSpec::Quaternion(n) => n.saturating_mul(4),
            GroupSpec::Symmetric(n) => factorial(n),
            GroupSpec::Alternating(n) => factorial(n).div_ceil(2),
            GroupSpec::Cyclic(m, n) => m.saturating_mul(n),
            GroupSpec::Sl23 => 24,
            GroupSpec::Klein => 4,
            GroupSpec::Perm(_) | GroupSpec::Pres(_) => return None,
        })
    }

    pub fn build(&self, max_order: usize, limits: &EnumerationLimits) -> Result<FiniteGroup, CliError> {
        if let Some(order) = self.builtin_order() {
            if order > max_order {
                return Err(mlaw::Error::OrderTooLarge { order, max: max_order }.into());
            }
        }
        let group = match self {
            GroupSpec::Dihedral(n) => builtin_family(Family::Dihedral, &[*n])?,
            GroupSpec::Quaternion(n) => builtin_family(Family::Quaternion, &[*n])?,
            GroupSpec::Symmetric(n) => builtin_family(Family::Symmetric, &[*n])?,
            GroupSpec::Alternating(n) => builtin_family(Family::Alternating, &[*n])?,
            GroupSpec::Cyclic(1, n) => builtin_family(Family::CyclicProduct, &[*n])?,
            GroupSpec::Cyclic(m, n) => builtin_family(Family::CyclicProduct, &[*m, *n])?,
            GroupSpec::Sl23 => builtin_family(Family::Sl23, &[])?,
            GroupSpec::Klein => builtin_family(Family::Klein, &[])?,
            GroupSpec::Perm(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                group_from_permutations(&parse_generator_list(&text)?, max_order)?
            }
            GroupSpec::Pres(text) => {
                let p = parse_presentation(text)?;
                let table = todd_coxeter_with(&p, limits, Strategy::Felsch)?;
                if table.len() > max_order {
                    return Err(mlaw::Error::OrderTooLarge {
                        order: table.len(),
                        max: max_order,
                    }
                    .into());
                }
                group_from_cosets(&table, &p)?.0
            }
        };
        Ok(group)
    }
}
