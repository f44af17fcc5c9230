//! Integer partitions. A partition doubles as an irreducible-representation
//! label and as a cycle type, so it carries both the combinatorial helpers
//! (hook lengths, class sizes) and the `a+b+c` text form used by the CLI.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, sorting the parts weakly decreasing.
    /// Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ParsePartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to 1.
    pub fn ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Parses the `3+1+1` text form.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<usize> = text
            .split('+')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::ParsePartition(text.to_string()))?;
        if parts.is_empty() {
            return Err(Error::ParsePartition(text.to_string()));
        }
        Partition::new(parts)
    }

    /// All partitions of `n` in lexicographically decreasing order,
    /// starting with `(n)` and ending with `(1^n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        gen_partitions(n, n, &mut current, &mut out);
        out
    }

    /// Hook-length dimension of the irreducible representation labeled by
    /// this partition: n! divided by the product of all hook lengths.
    pub fn dimension(&self) -> BigUint {
        let n = self.n();
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        factorial(n) / hooks
    }

    /// Size of the S_n conjugacy class with this cycle type:
    /// n! / prod_j j^{a_j} a_j! where a_j is the multiplicity of j.
    pub fn class_size(&self) -> BigUint {
        let n = self.n();
        let mut centralizer = BigUint::one();
        let mut mult: std::collections::BTreeMap<usize, u32> = Default::default();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        for (j, a) in mult {
            centralizer *= BigUint::from(j).pow(a);
            centralizer *= factorial(a as usize);
        }
        factorial(n) / centralizer
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }
}

fn gen_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        gen_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(Partition::all(1), vec![Partition::new(vec![1]).unwrap()]);
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(10).len(), 42);
    }

    #[test]
    fn partitions_are_lex_decreasing_and_distinct() {
        let ps = Partition::all(8);
        for w in ps.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
        assert_eq!(ps[0].parts(), &[8]);
        assert_eq!(ps.last().unwrap().parts(), &[1; 8]);
    }

    #[test]
    fn dimension_trivial_and_sign() {
        for n in 1..=10 {
            assert_eq!(Partition::new(vec![n]).unwrap().dimension(), BigUint::one());
            assert_eq!(Partition::new(vec![1; n]).unwrap().dimension(), BigUint::one());
        }
    }

    #[test]
    fn dimension_standard_rep_counts_tableaux() {
        // (2,1): standard Young tableaux counted by hand: 12/3, 13/2.
        let d = Partition::new(vec![2, 1]).unwrap().dimension();
        assert_eq!(d, BigUint::from(2u32));
    }

    #[test]
    fn dimension_squares_sum_to_factorial() {
        for n in 1..=12 {
            let sum: BigUint = Partition::all(n).iter().map(|p| p.dimension().pow(2)).sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=12 {
            let sum: BigUint = Partition::all(n).iter().map(|p| p.class_size()).sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn class_size_cases() {
        assert_eq!(Partition::new(vec![1; 5]).unwrap().class_size(), BigUint::one());
        // transpositions in S_4
        assert_eq!(
            Partition::new(vec![2, 1, 1]).unwrap().class_size(),
            BigUint::from(6u32)
        );
        // n-cycles
        for n in 2..=9 {
            assert_eq!(Partition::new(vec![n]).unwrap().class_size(), factorial(n - 1));
        }
    }

    #[test]
    fn display_parse_round_trip() {
        let p = Partition::new(vec![3, 1, 1]).unwrap();
        assert_eq!(p.to_string(), "3+1+1");
        assert_eq!(Partition::parse("3+1+1").unwrap(), p);
        assert!(Partition::parse("3+0").is_err());
        assert!(Partition::parse("").is_err());
    }
}
