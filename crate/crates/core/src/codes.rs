//! Binary linear codes over GF(2) and their embedding into S_n.
//!
//! Bit i of a length-ℓ codeword maps to the transposition (2i−1, 2i), so a
//! codeword of Hamming weight w becomes a permutation of support 2w and
//! the code's weight distribution becomes the support distribution of an
//! elementary abelian subgroup of S_{2ℓ}.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::{Error, Result};

const MAX_LEN: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryLinearCode {
    length: usize,
    /// generator rows as bit masks, bit i = coordinate i; rows independent
    rows: Vec<u64>,
}

fn rank(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &row in rows {
        let mut v = row;
        for &b in &basis {
            let pivot = 1u64 << (63 - b.leading_zeros());
            if v & pivot != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
        }
    }
    basis.len()
}

impl BinaryLinearCode {
    /// Code with no generators: the zero code {0} of the given length.
    pub fn zero(length: usize) -> Result<Self> {
        if length < 1 || length > MAX_LEN {
            return Err(Error::BadParameters(format!(
                "code length must be in 1..={MAX_LEN}, got {length}"
            )));
        }
        Ok(BinaryLinearCode { length, rows: vec![] })
    }

    pub fn from_rows(length: usize, rows: Vec<u64>) -> Result<Self> {
        let code = BinaryLinearCode { length, rows };
        if code.length < 1 || code.length > MAX_LEN {
            return Err(Error::BadParameters(format!(
                "code length must be in 1..={MAX_LEN}, got {length}"
            )));
        }
        if rank(&code.rows) != code.rows.len() {
            return Err(Error::DependentRows);
        }
        Ok(code)
    }

    /// Parses one generator row per 0/1 string; all rows must have equal
    /// length and be linearly independent.
    pub fn parse(rows: &[impl AsRef<str>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::RaggedRows);
        }
        let length = rows[0].as_ref().trim().len();
        if length < 1 || length > MAX_LEN {
            return Err(Error::BadParameters(format!(
                "code length must be in 1..={MAX_LEN}, got {length}"
            )));
        }
        let mut masks = Vec::new();
        for row in rows {
            let row = row.as_ref().trim();
            if row.len() != length {
                return Err(Error::RaggedRows);
            }
            let mut mask = 0u64;
            for (i, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => mask |= 1 << i,
                    _ => {
                        return Err(Error::BadParameters(format!(
                            "code rows must be over {{0,1}}, got `{row}`"
                        )))
                    }
                }
            }
            masks.push(mask);
        }
        BinaryLinearCode::from_rows(length, masks)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_rows(&self) -> &[u64] {
        &self.rows
    }

    fn codewords(&self, cap: u64) -> Result<impl Iterator<Item = u64> + '_> {
        let k = self.dimension();
        if k >= 64 || (1u64 << k) > cap {
            return Err(Error::CapExceeded {
                order: num_bigint::BigUint::from(2u32).pow(k as u32),
                cap,
            });
        }
        Ok((0u64..1 << k).map(move |sel| {
            let mut w = 0u64;
            for (i, &row) in self.rows.iter().enumerate() {
                if sel >> i & 1 == 1 {
                    w ^= row;
                }
            }
            w
        }))
    }

    /// Exact weight enumerator {w: A_w} over all 2^k codewords.
    pub fn weight_distribution(&self, cap: u64) -> Result<BTreeMap<usize, u64>> {
        let mut counts = BTreeMap::new();
        for word in self.codewords(cap)? {
            *counts.entry(word.count_ones() as usize).or_insert(0) += 1;
        }
        Ok(counts)
    }

    pub fn min_weight(&self, cap: u64) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::BadParameters("zero code has no nonzero weight".into()));
        }
        Ok(self
            .codewords(cap)?
            .filter(|&w| w != 0)
            .map(|w| w.count_ones() as usize)
            .min()
            .expect("k ≥ 1 gives a nonzero word"))
    }

    /// Elementary abelian subgroup of S_{2ℓ} generated by the images of the
    /// generator rows.
    pub fn embed(&self) -> PermGroup {
        let degree = 2 * self.length;
        let gens = self
            .rows
            .iter()
            .map(|&row| {
                let mut images: Vec<u32> = (0..degree as u32).collect();
                for i in 0..self.length {
                    if row >> i & 1 == 1 {
                        images.swap(2 * i, 2 * i + 1);
                    }
                }
                Permutation::from_images(images).expect("transposition product is a bijection")
            })
            .collect();
        PermGroup::from_generators(gens, degree).expect("degrees agree by construction")
    }

    /// Code file: one generator row per line as a 0/1 string.
    pub fn write_code_file<W: Write>(&self, mut w: W) -> Result<()> {
        for &row in &self.rows {
            let line: String = (0..self.length)
                .map(|i| if row >> i & 1 == 1 { '1' } else { '0' })
                .collect();
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    pub fn read_code_file<R: BufRead>(r: R) -> Result<Self> {
        let mut rows = Vec::new();
        for line in r.lines() {
            let line = line?;
            if !line.trim().is_empty() {
                rows.push(line);
            }
        }
        BinaryLinearCode::parse(&rows)
    }
}

/// Seeded uniform random full-rank k×ℓ generator matrix; the whole matrix
/// is resampled until independent, so the result is deterministic per seed.
pub fn random_gv_code(length: usize, k: usize, seed: u64) -> Result<BinaryLinearCode> {
    if k < 1 || k > length {
        return Err(Error::BadParameters(format!(
            "need 1 ≤ k ≤ ℓ, got k={k} ℓ={length}"
        )));
    }
    if length > MAX_LEN {
        return Err(Error::BadParameters(format!(
            "code length must be ≤ {MAX_LEN}, got {length}"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mask = if length == 63 { !0u64 >> 1 } else { (1u64 << length) - 1 };
    loop {
        let rows: Vec<u64> = (0..k).map(|_| rng.next_u64() & mask).collect();
        if rank(&rows) == k {
            return BinaryLinearCode::from_rows(length, rows);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn parse_examples() {
        let rep = BinaryLinearCode::parse(&["11"]).unwrap();
        assert_eq!((rep.length(), rep.dimension()), (2, 1));
        let full = BinaryLinearCode::parse(&["10", "01"]).unwrap();
        assert_eq!((full.length(), full.dimension()), (2, 2));
        let par = BinaryLinearCode::parse(&["110", "011"]).unwrap();
        assert_eq!((par.length(), par.dimension()), (3, 2));
    }

    #[test]
    fn parse_rejects_bad_rows() {
        assert!(matches!(
            BinaryLinearCode::parse(&["10", "011"]),
            Err(Error::RaggedRows)
        ));
        assert!(matches!(
            BinaryLinearCode::parse(&["11", "11"]),
            Err(Error::DependentRows)
        ));
        assert!(matches!(
            BinaryLinearCode::parse(&["110", "011", "101"]),
            Err(Error::DependentRows)
        ));
        assert!(BinaryLinearCode::parse(&["1a"]).is_err());
        let empty: [&str; 0] = [];
        assert!(BinaryLinearCode::parse(&empty).is_err());
    }

    #[test]
    fn weight_distribution_examples() {
        let rep = BinaryLinearCode::parse(&["11"]).unwrap();
        assert_eq!(
            rep.weight_distribution(100).unwrap(),
            BTreeMap::from([(0, 1), (2, 1)])
        );
        let full = BinaryLinearCode::parse(&["10", "01"]).unwrap();
        assert_eq!(
            full.weight_distribution(100).unwrap(),
            BTreeMap::from([(0, 1), (1, 2), (2, 1)])
        );
        let par = BinaryLinearCode::parse(&["110", "011"]).unwrap();
        assert_eq!(
            par.weight_distribution(100).unwrap(),
            BTreeMap::from([(0, 1), (2, 3)])
        );
    }

    #[test]
    fn min_weight_examples() {
        assert_eq!(BinaryLinearCode::parse(&["1111"]).unwrap().min_weight(100).unwrap(), 4);
        assert_eq!(
            BinaryLinearCode::parse(&["10", "01"]).unwrap().min_weight(100).unwrap(),
            1
        );
    }

    #[test]
    fn cap_applies_to_codewords() {
        let full = BinaryLinearCode::parse(&["10", "01"]).unwrap();
        assert!(matches!(full.weight_distribution(3), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn embed_examples() {
        let rep = BinaryLinearCode::parse(&["11"]).unwrap();
        let g = rep.embed();
        assert_eq!(g.degree(), 4);
        assert_eq!(g.order(), BigUint::from(2u32));
        assert_eq!(g.minimal_degree(100).unwrap(), 4);

        let zero = BinaryLinearCode::zero(3).unwrap();
        assert!(zero.embed().is_trivial());

        let full = BinaryLinearCode::parse(&["100", "010", "001"]).unwrap();
        let g = full.embed();
        assert_eq!(g.order(), BigUint::from(8u32));
        assert_eq!(g.minimal_degree(100).unwrap(), 2);
    }

    #[test]
    fn embedding_dictionary_on_fixed_code() {
        let code = BinaryLinearCode::parse(&["1100", "0110"]).unwrap();
        let g = code.embed();
        assert_eq!(g.order(), BigUint::from(4u32));
        let wd = code.weight_distribution(100).unwrap();
        let sd = g.support_distribution(100).unwrap();
        assert_eq!(g.minimal_degree(100).unwrap(), 2 * code.min_weight(100).unwrap());
        for (w, a) in wd {
            if w > 0 {
                assert_eq!(sd.counts[&(2 * w)], BigUint::from(a));
            }
        }
        // elementary abelian of exponent 2
        for h in g.elements(100).unwrap() {
            assert!(h.compose(&h).unwrap().is_identity());
        }
    }

    #[test]
    fn gv_codes_are_deterministic_and_full_rank() {
        let a = random_gv_code(16, 8, 42).unwrap();
        let b = random_gv_code(16, 8, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dimension(), 8);
        let c = random_gv_code(16, 8, 43).unwrap();
        assert_ne!(a, c);
        let single = random_gv_code(8, 1, 0).unwrap();
        assert!(single.generator_rows()[0] != 0);
        assert!(random_gv_code(4, 5, 0).is_err());
    }

    #[test]
    fn code_file_round_trip() {
        let code = random_gv_code(12, 5, 9).unwrap();
        let mut buf = Vec::new();
        code.write_code_file(&mut buf).unwrap();
        let back = BinaryLinearCode::read_code_file(&buf[..]).unwrap();
        assert_eq!(back, code);
    }
}
