//! Permutations of {1..n} stored as image tables (0-based internally,
//! 1-based in all text I/O).

use std::collections::BTreeSet;
use std::fmt;

use crate::partition::Partition;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Cycle type of a permutation: a partition of n listing cycle lengths,
/// fixed points included as 1-parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType(pub Partition);

impl CycleType {
    /// Number of points moved by any permutation of this cycle type.
    pub fn support(&self) -> usize {
        self.0.n() - self.0.ones()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds from a 0-based image table, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(Error::ParsePerm {
                    text: format!("{images:?}"),
                    reason: "not a bijection".into(),
                });
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// (self ∘ other)(x) = self(other(x)); `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = other.images.iter().map(|&x| self.images[x as usize]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// x · self · x⁻¹
    pub fn conjugate_by(&self, x: &Permutation) -> Result<Permutation> {
        x.compose(self)?.compose(&x.inverse())
    }

    /// Moved points, 1-based.
    pub fn support(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i != x as usize)
            .count()
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
            }
            lens.push(len);
        }
        CycleType(Partition::new(lens).expect("cycle lengths are positive"))
    }

    /// Parses disjoint-cycle notation with 1-based points; `()` is the
    /// identity. Whitespace between points and between cycles is tolerated.
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        let err = |reason: &str| Error::ParsePerm {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if degree < 1 {
            return Err(err("degree must be at least 1"));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(err("empty permutation text"));
        }
        let mut rest = trimmed;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| err("expected '('"))?;
            if !rest[..open].trim().is_empty() {
                return Err(err("unexpected text outside cycles"));
            }
            let close = rest.find(')').ok_or_else(|| err("unbalanced '('"))?;
            if close < open {
                return Err(err("unbalanced ')'"));
            }
            let body = &rest[open + 1..close];
            if body.contains('(') {
                return Err(err("nested '('"));
            }
            let points: Vec<usize> = body
                .split_whitespace()
                .map(|tok| tok.parse::<usize>().map_err(|_| err("bad integer")))
                .collect::<Result<_>>()?;
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(err(&format!("point {p} out of range 1..{degree}")));
                }
                if used[p - 1] {
                    return Err(err(&format!("point {p} repeated across cycles")));
                }
                used[p - 1] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                let q = points[(i + 1) % points.len()];
                images[p - 1] = (q - 1) as u32;
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    /// Disjoint-cycle form with 1-based points; identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.apply(p);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}
