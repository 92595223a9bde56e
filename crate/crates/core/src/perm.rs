//! Permutations of the points `1..=degree`.
//!
//! Products are read left to right: `p.then(&q)` first applies `p`, then `q`,
//! so `(p·q)(i) = q(p(i))`. Commutators and conjugates elsewhere in the crate
//! are written in this convention.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised by permutation construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("degree {0} is larger than the supported maximum {max}", max = Permutation::MAX_DEGREE)]
    DegreeTooLarge(usize),
    #[error("point {point} at position {pos} is out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize, pos: usize },
    #[error("point {point} at position {pos} is repeated")]
    RepeatedPoint { point: usize, pos: usize },
    #[error("malformed cycle notation at position {pos}: {reason}")]
    Malformed { pos: usize, reason: &'static str },
    #[error("image list is not a bijection on 1..={0}")]
    NotBijection(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

/// A bijection on `{1, ..., degree}`.
///
/// Stored 0-based; the derived ordering is lexicographic on the image
/// sequence, which is the canonical element order used by groups.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub const MAX_DEGREE: usize = u16::MAX as usize;

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let degree = images.len();
        check_degree(degree)?;
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree || seen[img - 1] {
                return Err(PermError::NotBijection(degree));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u16);
        }
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        check_degree(degree)?;
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut seen = vec![false; degree];
        let mut pos = 0;
        for cycle in cycles {
            for &point in cycle {
                pos += 1;
                if point == 0 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree, pos });
                }
                if seen[point - 1] {
                    return Err(PermError::RepeatedPoint { point, pos });
                }
                seen[point - 1] = true;
            }
            for (k, &point) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[point - 1] = (next - 1) as u16;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4 5)"`.
    ///
    /// `"()"` and the empty string denote the identity. Positions in errors
    /// are 1-based character offsets into `text`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        check_degree(degree)?;
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut seen = vec![false; degree];
        let mut chars = text.char_indices().peekable();
        let mut cycle_count = 0usize;
        let mut saw_empty = false;

        while let Some(&(i, c)) = chars.peek() {
            if c.is_whitespace() || c == ',' {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(PermError::Malformed {
                    pos: i + 1,
                    reason: "expected '('",
                });
            }
            chars.next();
            let open_pos = i + 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                match chars.peek().copied() {
                    None => {
                        return Err(PermError::Malformed {
                            pos: open_pos,
                            reason: "unclosed '('",
                        })
                    }
                    Some((_, c)) if c.is_whitespace() || c == ',' => {
                        chars.next();
                    }
                    Some((_, ')')) => {
                        chars.next();
                        break;
                    }
                    Some((start, c)) if c.is_ascii_digit() => {
                        let mut end = start;
                        while let Some(&(j, d)) = chars.peek() {
                            if !d.is_ascii_digit() {
                                break;
                            }
                            end = j + d.len_utf8();
                            chars.next();
                        }
                        let pos = start + 1;
                        let point: usize = text[start..end].parse().map_err(|_| {
                            PermError::Malformed {
                                pos,
                                reason: "point does not fit in an integer",
                            }
                        })?;
                        if point == 0 || point > degree {
                            return Err(PermError::PointOutOfRange { point, degree, pos });
                        }
                        if seen[point - 1] {
                            return Err(PermError::RepeatedPoint { point, pos });
                        }
                        seen[point - 1] = true;
                        cycle.push(point);
                    }
                    Some((j, _)) => {
                        return Err(PermError::Malformed {
                            pos: j + 1,
                            reason: "unexpected character inside cycle",
                        })
                    }
                }
            }
            if cycle.is_empty() {
                saw_empty = true;
            }
            cycle_count += 1;
            for (k, &point) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[point - 1] = (next - 1) as u16;
            }
        }
        if saw_empty && cycle_count > 1 {
            return Err(PermError::Malformed {
                pos: 1,
                reason: "\"()\" must stand alone",
            });
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`, without a degree check.
    ///
    /// Panics if the degrees differ.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u16;
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Conjugate `g⁻¹·self·g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    /// Least `k ≥ 1` with `self^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    /// Nontrivial cycles, each starting at its minimum, sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Canonical cycle notation; the identity is `"()"`.
    pub fn to_cycle_string(&self) -> String {
        self.to_string()
    }
}

fn check_degree(degree: usize) -> Result<(), PermError> {
    if degree == 0 {
        return Err(PermError::ZeroDegree);
    }
    if degree > Permutation::MAX_DEGREE {
        return Err(PermError::DegreeTooLarge(degree));
    }
    Ok(())
}

/// Checked left-to-right product: `compose(p, q)(i) = q(p(i))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    if p.degree() != q.degree() {
        return Err(PermError::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(p.then(q))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}

/// Parses `"<degree>:<cycles>"`, e.g. `"5:(1 2 3)(4 5)"`.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (deg, cycles) = s.split_once(':').ok_or(PermError::Malformed {
            pos: 1,
            reason: "expected \"<degree>:<cycles>\"",
        })?;
        let degree = deg.trim().parse().map_err(|_| PermError::Malformed {
            pos: 1,
            reason: "degree is not an integer",
        })?;
        Permutation::parse_cycles(cycles, degree)
    }
}
