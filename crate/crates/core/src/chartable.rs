//! Exact S_n character values via the Murnaghan–Nakayama border-strip
//! recursion, plus the class-size helpers the bound machinery needs.
//!
//! Border strips are handled through beta numbers (first-column hook
//! lengths): removing a strip of length t means subtracting t from one beta
//! number so the result stays a set; the strip height is the number of beta
//! numbers jumped over, which carries the sign.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::{Error, Result};

/// Memoized character values for one symmetric group S_n.
///
/// Lazily filled; `freeze` computes the full table up front so the cache
/// can afterwards be shared read-only across threads.
pub struct CharTable {
    n: usize,
    partitions: Vec<Partition>,
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl CharTable {
    pub fn new(n: usize) -> Self {
        CharTable {
            n,
            partitions: Partition::all(n),
            memo: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Irrep labels = class labels, lexicographically decreasing.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// χ_λ(μ), exact. The largest remaining part of μ is removed first.
    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.n() != mu.n() {
            return Err(Error::SizeMismatch(lambda.n(), mu.n()));
        }
        // parts() is already weakly decreasing
        Ok(self.mn(lambda.parts().to_vec(), mu.parts().to_vec()))
    }

    fn mn(&mut self, lambda: Vec<usize>, mu: Vec<usize>) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let t = mu[0];
        let rest = mu[1..].to_vec();
        // beta numbers: λ_i + (ℓ - 1 - i), distinct, here in decreasing order
        let ell = lambda.len();
        let betas: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + ell - 1 - i).collect();
        let mut total = BigInt::zero();
        for (idx, &b) in betas.iter().enumerate() {
            if b < t || betas.contains(&(b - t)) {
                continue;
            }
            let height = betas.iter().filter(|&&c| c < b && c > b - t).count();
            let mut new_betas = betas.clone();
            new_betas[idx] = b - t;
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            // convert back to a partition, dropping trailing zeros of the
            // staircase
            let ell2 = new_betas.len();
            let mut new_lambda: Vec<usize> = new_betas
                .iter()
                .enumerate()
                .map(|(i, &c)| c - (ell2 - 1 - i))
                .collect();
            while new_lambda.last() == Some(&0) {
                new_lambda.pop();
            }
            let sub = self.mn(new_lambda, rest.clone());
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// Fully populates the cache; afterwards the table can be read
    /// concurrently without interior mutation.
    pub fn freeze(&mut self) -> Result<()> {
        let parts = self.partitions.clone();
        for l in &parts {
            for m in &parts {
                self.character(l, m)?;
            }
        }
        Ok(())
    }
}

/// Smallest S_n class size among classes whose elements have support
/// exactly k: minimize over cycle types (ν, 1^{n-k}) with ν a partition of
/// k having no 1-parts.
pub fn min_class_size(n: usize, k: usize) -> Result<BigUint> {
    if k < 2 || k > n {
        return Err(Error::NoSuchClass(k));
    }
    min_support_class(n, k).map(|(_, size)| size)
}

/// As `min_class_size` but also returns the minimizing cycle type.
pub fn min_support_class(n: usize, k: usize) -> Result<(Partition, BigUint)> {
    if k < 2 || k > n {
        return Err(Error::NoSuchClass(k));
    }
    let mut best: Option<(Partition, BigUint)> = None;
    for nu in Partition::all(k) {
        if nu.ones() > 0 {
            continue;
        }
        let mut parts = nu.parts().to_vec();
        parts.extend(std::iter::repeat(1).take(n - k));
        let mu = Partition::new(parts)?;
        let size = mu.class_size();
        match &best {
            Some((_, s)) if *s <= size => {}
            _ => best = Some((mu, size)),
        }
    }
    best.ok_or(Error::NoSuchClass(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;
    use crate::partition::factorial;
    use crate::perm::Permutation;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_character_is_one() {
        let mut t = CharTable::new(6);
        for mu in t.partitions().to_vec() {
            assert_eq!(t.character(&pt(&[6]), &mu).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn sign_character_matches_parity() {
        for n in 2..=7 {
            let mut t = CharTable::new(n);
            let sign_label = pt(&vec![1; n]);
            for mu in t.partitions().to_vec() {
                let expect = if (n - mu.len()) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                assert_eq!(t.character(&sign_label, &mu).unwrap(), expect);
            }
        }
    }

    #[test]
    fn s3_standard_character() {
        let mut t = CharTable::new(3);
        let std_rep = pt(&[2, 1]);
        assert_eq!(t.character(&std_rep, &pt(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(t.character(&std_rep, &pt(&[2, 1])).unwrap(), BigInt::zero());
        assert_eq!(t.character(&std_rep, &pt(&[3])).unwrap(), BigInt::from(-1));
    }

    /// Independent oracle for the full S_3 and S_4 tables: the permutation
    /// character of the natural action minus the trivial one gives the
    /// standard character; verified pointwise by counting fixed points
    /// over explicitly enumerated groups.
    #[test]
    fn standard_character_counts_fixed_points() {
        for n in [3usize, 4, 5] {
            let gens = vec![
                Permutation::parse("(1 2)", n).unwrap(),
                Permutation::parse(
                    &format!(
                        "({})",
                        (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
                    ),
                    n,
                )
                .unwrap(),
            ];
            let sn = PermGroup::from_generators(gens, n).unwrap();
            let mut t = CharTable::new(n);
            let std_label = pt(&[n - 1, 1]);
            for g in sn.elements(1_000_000).unwrap() {
                let fixed = n - g.support_size();
                let chi = t.character(&std_label, &g.cycle_type().0).unwrap();
                assert_eq!(chi, BigInt::from(fixed as i64) - BigInt::one());
            }
        }
    }

    #[test]
    fn character_at_identity_is_hook_dimension() {
        for n in 1..=10 {
            let mut t = CharTable::new(n);
            let id_type = pt(&vec![1; n]);
            for lam in t.partitions().to_vec() {
                let chi = t.character(&lam, &id_type).unwrap();
                assert_eq!(chi, BigInt::from(lam.dimension()));
            }
        }
    }

    #[test]
    fn row_orthogonality_small_n() {
        for n in 1..=6 {
            let mut t = CharTable::new(n);
            let labels = t.partitions().to_vec();
            for a in &labels {
                for b in &labels {
                    let mut sum = BigInt::zero();
                    for mu in &labels {
                        let sz = BigInt::from(mu.class_size());
                        sum += sz * t.character(a, mu).unwrap() * t.character(b, mu).unwrap();
                    }
                    let expect = if a == b {
                        BigInt::from(factorial(n))
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(sum, expect, "rows {a} and {b} of S_{n}");
                }
            }
        }
    }

    #[test]
    fn size_mismatch_rejected() {
        let mut t = CharTable::new(4);
        assert!(t.character(&pt(&[4]), &pt(&[3])).is_err());
    }

    #[test]
    fn min_class_size_examples() {
        assert_eq!(min_class_size(4, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(min_class_size(4, 4).unwrap(), BigUint::from(3u32));
        assert_eq!(min_class_size(6, 4).unwrap(), BigUint::from(45u32));
        assert!(min_class_size(4, 1).is_err());
        assert!(min_class_size(3, 5).is_err());
    }

    /// Oracle: smallest class size among support-k classes by enumerating
    /// all of S_n and bucketing by cycle type.
    #[test]
    fn min_class_size_matches_enumeration() {
        use std::collections::BTreeMap;
        let n = 6;
        let gens = vec![
            Permutation::parse("(1 2)", n).unwrap(),
            Permutation::parse("(1 2 3 4 5 6)", n).unwrap(),
        ];
        let sn = PermGroup::from_generators(gens, n).unwrap();
        let mut by_support: BTreeMap<usize, BigUint> = BTreeMap::new();
        let mut class_counts: BTreeMap<Partition, u64> = BTreeMap::new();
        for g in sn.elements(1_000_000).unwrap() {
            if !g.is_identity() {
                *class_counts.entry(g.cycle_type().0).or_default() += 1;
            }
        }
        for (mu, count) in class_counts {
            let k = crate::perm::CycleType(mu).support();
            let c = BigUint::from(count);
            by_support
                .entry(k)
                .and_modify(|m| {
                    if c < *m {
                        *m = c.clone()
                    }
                })
                .or_insert(c);
        }
        for (k, min_size) in by_support {
            assert_eq!(min_class_size(n, k).unwrap(), min_size);
        }
    }

    #[test]
    fn freeze_populates_full_table() {
        let mut t = CharTable::new(5);
        t.freeze().unwrap();
        assert_eq!(t.memo.len() >= 7 * 7, true);
    }
}
