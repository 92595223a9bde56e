//! Where groups come from: named constructions, group files, and every
//! subgroup of a small symmetric group.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::error::GroupError;
use crate::group::{Elem, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::{PermError, Permutation};
use crate::structure::SubgroupLattice;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown builtin group {0:?}")]
    UnknownBuiltin(String),
    #[error("parameter for {name} out of range: {reason}")]
    ParameterOutOfRange { name: String, reason: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Generator { line: usize, source: PermError },
    #[error("{name}: {source}")]
    Group { name: String, source: GroupError },
    #[error("symmetric-subgroup corpus supports 1..=5 points, got {0}")]
    SymmetricDegree(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Builtin,
    File,
    LatticeEnumeration,
}

/// A named group given by generators in cycle notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub origin: Origin,
}

impl GroupDescriptor {
    pub fn generator_perms(&self) -> Result<Vec<Permutation>, CorpusError> {
        self.generators
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Permutation::parse_cycles(s, self.degree)
                    .map_err(|source| CorpusError::Generator { line: i + 1, source })
            })
            .collect()
    }

    pub fn build(&self) -> Result<FiniteGroup, CorpusError> {
        self.build_capped(DEFAULT_ORDER_CAP)
    }

    pub fn build_capped(&self, cap: usize) -> Result<FiniteGroup, CorpusError> {
        let gens = self.generator_perms()?;
        FiniteGroup::generate_capped(self.degree, &gens, cap).map_err(|source| CorpusError::Group {
            name: self.name.clone(),
            source,
        })
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {}): ", self.name, self.degree)?;
        if self.generators.is_empty() {
            return f.write_str("<no generators>");
        }
        f.write_str(&self.generators.join(", "))
    }
}

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

fn perm(degree: usize, cycles: &[Vec<usize>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("constructed cycles are valid")
}

fn out_of_range(name: &str, reason: impl Into<String>) -> CorpusError {
    CorpusError::ParameterOutOfRange {
        name: name.to_string(),
        reason: reason.into(),
    }
}

/// The 8 nonzero vectors of `F₃²`, in a fixed order.
fn f3_vectors() -> Vec<(u8, u8)> {
    (0..3u8)
        .flat_map(|x| (0..3u8).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect()
}

/// Permutation of the nonzero vectors induced by `v ↦ v·m` over `F₃`.
fn f3_matrix_action(m: [[u8; 2]; 2]) -> Permutation {
    let vecs = f3_vectors();
    let images: Vec<usize> = vecs
        .iter()
        .map(|&(x, y)| {
            let img = ((x * m[0][0] + y * m[1][0]) % 3, (x * m[0][1] + y * m[1][1]) % 3);
            vecs.iter().position(|&v| v == img).unwrap() + 1
        })
        .collect();
    Permutation::from_images(&images).unwrap()
}

/// Quaternion units `±1, ±i, ±j, ±k` as `(negative, unit)`, unit 0..4 for 1, i, j, k.
fn quaternion_mul(a: (bool, u8), b: (bool, u8)) -> (bool, u8) {
    // unit products: row = left, col = right; sign flag set when negative
    const TABLE: [[(bool, u8); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let (neg, unit) = TABLE[a.1 as usize][b.1 as usize];
    (neg ^ a.0 ^ b.0, unit)
}

/// Right regular action of `i` and `j` on the 8 quaternion units.
fn quaternion_generators() -> Vec<Permutation> {
    let units: Vec<(bool, u8)> = [false, true]
        .into_iter()
        .flat_map(|neg| (0..4u8).map(move |u| (neg, u)))
        .collect();
    [(false, 1u8), (false, 2u8)]
        .into_iter()
        .map(|g| {
            let images: Vec<usize> = units
                .iter()
                .map(|&x| units.iter().position(|&y| y == quaternion_mul(x, g)).unwrap() + 1)
                .collect();
            Permutation::from_images(&images).unwrap()
        })
        .collect()
}

fn single_builtin(name: &str, param: Option<usize>) -> Result<(String, usize, Vec<Permutation>), CorpusError> {
    let need = |p: Option<usize>| p.ok_or_else(|| out_of_range(name, "a parameter is required"));
    let none = |p: Option<usize>| match p {
        Some(_) => Err(out_of_range(name, "takes no parameter")),
        None => Ok(()),
    };
    match name {
        "cyclic" => {
            let n = need(param)?;
            if n == 0 {
                return Err(out_of_range(name, "n must be at least 1"));
            }
            let gens = if n == 1 { vec![] } else { vec![perm(n, &[cycle(1..=n)])] };
            Ok((format!("cyclic:{n}"), n, gens))
        }
        "dihedral" => {
            let n = need(param)?;
            if n < 3 {
                return Err(out_of_range(name, "n must be at least 3"));
            }
            let reflection: Vec<Vec<usize>> = (2..=n / 2 + n % 2)
                .filter(|&i| i != n + 2 - i)
                .map(|i| vec![i, n + 2 - i])
                .collect();
            Ok((
                format!("dihedral:{n}"),
                n,
                vec![perm(n, &[cycle(1..=n)]), perm(n, &reflection)],
            ))
        }
        "symmetric" => {
            let n = need(param)?;
            if n == 0 {
                return Err(out_of_range(name, "n must be at least 1"));
            }
            let gens = if n == 1 {
                vec![]
            } else {
                vec![perm(n, &[vec![1, 2]]), perm(n, &[cycle(1..=n)])]
            };
            Ok((format!("symmetric:{n}"), n, gens))
        }
        "alternating" => {
            let n = need(param)?;
            if n == 0 {
                return Err(out_of_range(name, "n must be at least 1"));
            }
            let gens = if n < 3 {
                vec![]
            } else if n % 2 == 1 {
                vec![perm(n, &[vec![1, 2, 3]]), perm(n, &[cycle(1..=n)])]
            } else {
                vec![perm(n, &[vec![1, 2, 3]]), perm(n, &[cycle(2..=n)])]
            };
            Ok((format!("alternating:{n}"), n, gens))
        }
        "quaternion8" => {
            none(param)?;
            Ok(("quaternion8".into(), 8, quaternion_generators()))
        }
        "sl23" => {
            none(param)?;
            let gens = vec![
                f3_matrix_action([[1, 1], [0, 1]]),
                f3_matrix_action([[0, 2], [1, 0]]),
            ];
            Ok(("sl23".into(), 8, gens))
        }
        "klein4" => {
            none(param)?;
            Ok((
                "klein4".into(),
                4,
                vec![perm(4, &[vec![1, 2], vec![3, 4]]), perm(4, &[vec![1, 3], vec![2, 4]])],
            ))
        }
        other => Err(CorpusError::UnknownBuiltin(other.to_string())),
    }
}

/// Moves every point of `p` up by `offset` inside a larger degree.
fn shifted(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    let cycles: Vec<Vec<usize>> = p
        .cycles()
        .into_iter()
        .map(|c| c.into_iter().map(|x| x + offset).collect())
        .collect();
    perm(degree, &cycles)
}

/// A named construction.
///
/// `name` is one of `cyclic`, `dihedral` (order `2n`), `symmetric`,
/// `alternating`, `quaternion8`, `sl23`, `klein4`.
pub fn builtin(name: &str, param: Option<usize>) -> Result<GroupDescriptor, CorpusError> {
    let (name, degree, gens) = single_builtin(name, param)?;
    Ok(GroupDescriptor {
        name,
        degree,
        generators: gens.iter().map(Permutation::to_string).collect(),
        origin: Origin::Builtin,
    })
}

/// Parses `name[:param]`, or a direct product `A x B x …` of such factors
/// acting on disjoint point sets.
pub fn parse_builtin(spec: &str) -> Result<GroupDescriptor, CorpusError> {
    let mut names = Vec::new();
    let mut degree = 0;
    let mut gens: Vec<(usize, Permutation)> = Vec::new();
    for factor in spec.split(" x ") {
        let factor = factor.trim();
        let (name, param) = match factor.split_once(':') {
            Some((n, p)) => {
                let p = p
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| out_of_range(n, format!("{p:?} is not a number")))?;
                (n.trim(), Some(p))
            }
            None => (factor, None),
        };
        let (label, deg, fgens) = single_builtin(name, param)?;
        names.push(label);
        for g in fgens {
            gens.push((degree, g));
        }
        degree += deg;
    }
    Ok(GroupDescriptor {
        name: names.join(" x "),
        degree,
        generators: gens
            .iter()
            .map(|(off, g)| shifted(g, *off, degree).to_string())
            .collect(),
        origin: Origin::Builtin,
    })
}

/// The builtin corpus: small members of every family plus a few products.
pub fn builtin_all() -> Vec<GroupDescriptor> {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((1..=12).map(|n| format!("cyclic:{n}")));
    specs.push("cyclic:30".into());
    specs.extend((3..=10).map(|n| format!("dihedral:{n}")));
    specs.extend((1..=5).map(|n| format!("symmetric:{n}")));
    specs.extend((3..=5).map(|n| format!("alternating:{n}")));
    specs.extend(
        [
            "quaternion8",
            "sl23",
            "klein4",
            "symmetric:3 x cyclic:2",
            "symmetric:3 x cyclic:3",
            "symmetric:3 x symmetric:3",
            "quaternion8 x cyclic:3",
            "alternating:4 x cyclic:2",
            "dihedral:4 x cyclic:3",
            "sl23 x cyclic:2",
        ]
        .map(String::from),
    );
    specs
        .iter()
        .map(|s| parse_builtin(s).expect("builtin corpus entries are valid"))
        .collect()
}

/// Parses the line-oriented group file format.
///
/// ```text
/// # comment
/// name: S3
/// degree: 3
/// gen: (1 2)
/// gen: (1 2 3)
/// ```
pub fn parse_group_str(text: &str, default_name: &str) -> Result<GroupDescriptor, CorpusError> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let syntax = |message: String| CorpusError::Syntax { line, message };
        let (key, value) = trimmed
            .split_once(':')
            .ok_or_else(|| syntax(format!("expected \"key: value\", found {trimmed:?}")))?;
        let value = value.trim();
        match key.trim() {
            "name" => {
                if name.is_some() {
                    return Err(syntax("duplicate name".into()));
                }
                name = Some(value.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(syntax("duplicate degree; one group per file".into()));
                }
                let n: usize = value
                    .parse()
                    .map_err(|_| syntax(format!("degree {value:?} is not a positive integer")))?;
                if n == 0 {
                    return Err(syntax("degree must be positive".into()));
                }
                degree = Some(n);
            }
            "gen" => {
                let n = degree.ok_or_else(|| syntax("gen before degree".into()))?;
                let p = Permutation::parse_cycles(value, n)
                    .map_err(|source| CorpusError::Generator { line, source })?;
                generators.push(p.to_string());
            }
            other => return Err(syntax(format!("unknown key {other:?}"))),
        }
    }
    let degree = degree.ok_or(CorpusError::Syntax {
        line: text.lines().count().max(1),
        message: "missing degree".into(),
    })?;
    Ok(GroupDescriptor {
        name: name.unwrap_or_else(|| default_name.to_string()),
        degree,
        generators,
        origin: Origin::File,
    })
}

/// Reads a group file and eagerly checks that it generates a group within
/// `cap`.
pub fn parse_group_file_capped(path: &Path, cap: usize) -> Result<GroupDescriptor, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let default_name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let desc = parse_group_str(&text, &default_name)?;
    desc.build_capped(cap)?;
    Ok(desc)
}

pub fn parse_group_file(path: &Path) -> Result<GroupDescriptor, CorpusError> {
    parse_group_file_capped(path, DEFAULT_ORDER_CAP)
}

/// Drops generators that are redundant given the others, first to last.
pub fn reduce_generators(g: &FiniteGroup, gens: &[Elem]) -> Vec<Elem> {
    let target = g.closure(gens).order();
    let mut kept: Vec<Elem> = gens.to_vec();
    let mut i = 0;
    while i < kept.len() {
        let mut without = kept.clone();
        without.remove(i);
        if g.closure(&without).order() == target {
            kept = without;
        } else {
            i += 1;
        }
    }
    kept
}

/// Every subgroup of the symmetric group on `n ≤ 5` points, one descriptor
/// each, named `sym<n>-sub<k>` in ascending lattice order.
pub fn subgroups_of_symmetric(n: usize) -> Result<Vec<GroupDescriptor>, CorpusError> {
    if !(1..=5).contains(&n) {
        return Err(CorpusError::SymmetricDegree(n));
    }
    let sym = builtin("symmetric", Some(n))?.build()?;
    let lattice = SubgroupLattice::new(&sym).map_err(|source| CorpusError::Group {
        name: format!("symmetric:{n}"),
        source,
    })?;
    Ok(lattice
        .subgroups()
        .iter()
        .enumerate()
        .map(|(k, h)| GroupDescriptor {
            name: format!("sym{n}-sub{k:03}"),
            degree: n,
            generators: reduce_generators(&sym, h.generators())
                .into_iter()
                .map(|x| sym.element(x).to_string())
                .collect(),
            origin: Origin::LatticeEnumeration,
        })
        .collect())
}
