use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::groupkit::{close, FiniteGroup, GroupElement};

use super::matrix::{rows_string, MatrixElem};
use super::named::{
    g150_action, h199650_action, make_named, make_semidirect, quaternion_generators,
    semidirect_generators,
};
use super::perm::{DihedralElem, PermElem};
use super::twisted::{make_s, make_twisted_group, twisted_generators, PrincipalUnit};

/// A buildable description of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Named { name: String, param: Option<u32> },
    /// Image lists on `0..degree`.
    Permutation { degree: usize, generators: Vec<Vec<usize>> },
    /// Matrices over GF(p), each a list of rows.
    Matrix { p: u32, n: usize, generators: Vec<Vec<Vec<i64>>> },
    /// `GF(p)^n ⋊ <generators>`.
    Semidirect { p: u32, n: usize, generators: Vec<Vec<Vec<i64>>> },
    PaperG150,
    PaperH199650,
    Twisted(usize),
}

impl GroupSpec {
    pub fn named(name: &str, param: Option<u32>) -> Self {
        GroupSpec::Named {
            name: name.to_string(),
            param,
        }
    }

    /// Short label such as `dihedral:6`, `g150` or `twisted:4`.
    pub fn label(&self) -> String {
        match self {
            GroupSpec::Named { name, param: Some(p) } => format!("{name}:{p}"),
            GroupSpec::Named { name, param: None } => name.clone(),
            GroupSpec::Permutation { degree, generators } => {
                format!("perm:{degree}:{}", generators.len())
            }
            GroupSpec::Matrix { p, n, .. } => format!("matrix:{p}:{n}"),
            GroupSpec::Semidirect { p, n, .. } => format!("semidirect:{p}:{n}"),
            GroupSpec::PaperG150 => "g150".into(),
            GroupSpec::PaperH199650 => "h199650".into(),
            GroupSpec::Twisted(k) => format!("twisted:{k}"),
        }
    }

    fn matrices(p: u32, n: usize, generators: &[Vec<Vec<i64>>]) -> Result<Vec<MatrixElem>> {
        if generators.is_empty() {
            return Err(Error::domain("at least one generator is required"));
        }
        generators
            .iter()
            .map(|rows| {
                if rows.len() != n {
                    return Err(Error::domain(format!(
                        "generator has {} rows, expected {n}",
                        rows.len()
                    )));
                }
                MatrixElem::new(p, rows)
            })
            .collect()
    }

    fn perms(degree: usize, generators: &[Vec<usize>]) -> Result<Vec<PermElem>> {
        if generators.is_empty() {
            return Err(Error::domain("at least one generator is required"));
        }
        generators
            .iter()
            .map(|g| {
                if g.len() != degree {
                    return Err(Error::domain(format!(
                        "image list has {} points, expected {degree}",
                        g.len()
                    )));
                }
                PermElem::new(g.clone())
            })
            .collect()
    }

    /// Enumerate the group, refusing to exceed `cap` elements.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        let g = match self {
            GroupSpec::Named { name, param } => make_named(name, *param)?,
            GroupSpec::Permutation { degree, generators } => {
                close(&Self::perms(*degree, generators)?, cap)?
            }
            GroupSpec::Matrix { p, n, generators } => {
                close(&Self::matrices(*p, *n, generators)?, cap)?
            }
            GroupSpec::Semidirect { p, n, generators } => {
                make_semidirect(&Self::matrices(*p, *n, generators)?, cap)?
            }
            GroupSpec::PaperG150 => make_semidirect(&g150_action(), cap)?,
            GroupSpec::PaperH199650 => {
                let g = super::named::make_h199650()?;
                check_cap(g, cap)?
            }
            GroupSpec::Twisted(k) => make_twisted_group(*k)?,
        };
        check_cap(g, cap)
    }

    /// Generator listing for a computer-algebra system: a header
    /// `order: <n>` then one generator per line, either
    /// `perm: (1 2 3)(4 5)` on points `1..=n` or `mat p=<p> rows=[[..],..]`.
    ///
    /// Affine elements are written as `[[M, v], [0, 1]]`; the twisted group
    /// as permutations of `S` under its natural action.
    pub fn export_gap(&self, cap: usize) -> Result<String> {
        let order = self.build(cap)?.order();
        let mut out = format!("order: {order}\n");
        for line in self.generator_lines()? {
            let _ = writeln!(out, "{line}");
        }
        Ok(out)
    }

    fn generator_lines(&self) -> Result<Vec<String>> {
        let perm = |p: &PermElem| format!("perm: {}", p.cycle_string());
        let mat = |m: &MatrixElem| format!("mat p={} rows={}", m.modulus(), rows_string(&m.rows()));
        let affine = |action: &[MatrixElem]| -> Result<Vec<String>> {
            let p = action[0].modulus();
            Ok(semidirect_generators(action)?
                .iter()
                .map(|a| format!("mat p={p} rows={}", rows_string(&a.augmented_rows())))
                .collect())
        };
        Ok(match self {
            GroupSpec::Named { name, param } => match name.as_str() {
                "cyclic" => {
                    let n = param.unwrap_or(1);
                    vec![perm(&DihedralElem::rotation(n, 1).to_perm())]
                }
                "dihedral" => {
                    let n = param.unwrap_or(3);
                    vec![
                        perm(&DihedralElem::rotation(n, 1).to_perm()),
                        perm(&DihedralElem::reflection(n).to_perm()),
                    ]
                }
                "quaternion" | "quaternion8" => quaternion_generators().iter().map(mat).collect(),
                _ => {
                    let g = make_named(name, *param)?;
                    g.generators()
                        .iter()
                        .map(|&x| perm(g.element::<PermElem>(x).expect("permutation family")))
                        .collect()
                }
            },
            GroupSpec::Permutation { degree, generators } => {
                Self::perms(*degree, generators)?.iter().map(perm).collect()
            }
            GroupSpec::Matrix { p, n, generators } => {
                Self::matrices(*p, *n, generators)?.iter().map(mat).collect()
            }
            GroupSpec::Semidirect { p, n, generators } => {
                affine(&Self::matrices(*p, *n, generators)?)?
            }
            GroupSpec::PaperG150 => affine(&g150_action())?,
            GroupSpec::PaperH199650 => affine(&h199650_action())?,
            GroupSpec::Twisted(k) => {
                let s = make_s(*k)?;
                let units: Vec<PrincipalUnit> = s
                    .elements()
                    .map(|x| *s.element::<PrincipalUnit>(x).expect("built by make_s"))
                    .collect();
                let mut lines = Vec::new();
                for g in twisted_generators(*k)? {
                    let images = units
                        .iter()
                        .map(|u| {
                            let image = PrincipalUnit(g.act_on_unit(&u.0));
                            s.index_of(&image).expect("the action preserves S") as usize
                        })
                        .collect();
                    lines.push(perm(&PermElem::new(images)?));
                }
                lines
            }
        })
    }
}

fn check_cap(g: FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    if g.order() > cap {
        return Err(Error::Resource {
            what: "group enumeration".into(),
            reached: g.order(),
            cap,
        });
    }
    Ok(g)
}

/// One member of the standard test catalog.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    /// Too large for subgroup-lattice checks; used for class-level checks only.
    pub class_level_only: bool,
}

/// Cyclic groups of order 2 to 12, dihedral groups on 3 to 8 points,
/// `Q_8`, `S_3`, `S_4`, `A_4`, the order-150 group, the twisted groups for
/// `k = 2, 4`, and the order-199650 group (class-level only).
pub fn catalog() -> Vec<CatalogEntry> {
    let full = |spec| CatalogEntry {
        spec,
        class_level_only: false,
    };
    let mut out: Vec<CatalogEntry> = (2..=12)
        .map(|n| full(GroupSpec::named("cyclic", Some(n))))
        .chain((3..=8).map(|n| full(GroupSpec::named("dihedral", Some(n)))))
        .collect();
    out.push(full(GroupSpec::named("quaternion8", None)));
    out.push(full(GroupSpec::named("symmetric", Some(3))));
    out.push(full(GroupSpec::named("symmetric", Some(4))));
    out.push(full(GroupSpec::named("alternating", Some(4))));
    out.push(full(GroupSpec::PaperG150));
    out.push(full(GroupSpec::Twisted(2)));
    out.push(full(GroupSpec::Twisted(4)));
    out.push(CatalogEntry {
        spec: GroupSpec::PaperH199650,
        class_level_only: true,
    });
    out
}

/// Elements of `g` as the given concrete kind, in index order.
pub fn concrete_elements<E: GroupElement>(g: &FiniteGroup) -> Option<Vec<E>> {
    g.elements().map(|x| g.element::<E>(x).cloned()).collect()
}
