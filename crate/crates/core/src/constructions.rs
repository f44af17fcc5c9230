//! Named subgroup families used as fixtures by the verification harness.

use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::{Error, Result};

/// The symmetric group on 2n/m rigid blocks of size m/2 inside S_n:
/// block j occupies points {(j−1)(m/2)+1, …, j(m/2)}. Order (2n/m)!,
/// minimal degree m. Block size 1 degenerates to the natural S_n.
pub fn block_group(n: usize, m: usize) -> Result<PermGroup> {
    if m < 2 || m % 2 != 0 || n % (m / 2) != 0 || 2 * n / m < 2 || 2 * n % m != 0 {
        return Err(Error::BadParameters(format!(
            "block group needs m even, (m/2) | n, 2n/m ≥ 2; got n={n} m={m}"
        )));
    }
    let block = m / 2;
    let count = n / block; // = 2n/m
    let swap = block_permutation(n, block, &|j| match j {
        0 => 1,
        1 => 0,
        other => other,
    });
    let cycle = block_permutation(n, block, &|j| (j + 1) % count);
    let gens = if count == 2 { vec![swap] } else { vec![swap, cycle] };
    PermGroup::from_generators(gens, n)
}

/// Image in S_n of the block map j ↦ f(j) on blocks of the given size.
fn block_permutation(n: usize, block: usize, f: &dyn Fn(usize) -> usize) -> Permutation {
    let mut images = vec![0u32; n];
    for j in 0..n / block {
        let target = f(j);
        for offset in 0..block {
            images[j * block + offset] = (target * block + offset) as u32;
        }
    }
    Permutation::from_images(images).expect("block map is a bijection")
}

/// Order-2 group generated by (1 2)(3 4)…(n−1 n); minimal degree n.
pub fn fpf_involution(n: usize) -> Result<PermGroup> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::BadParameters(format!(
            "fixed-point-free involution needs even n ≥ 2, got {n}"
        )));
    }
    let mut images: Vec<u32> = (0..n as u32).collect();
    for i in (0..n).step_by(2) {
        images.swap(i, i + 1);
    }
    let gen = Permutation::from_images(images).expect("pairing is a bijection");
    PermGroup::from_generators(vec![gen], n)
}

/// Image of S_l acting on the C(l,2) unordered pairs of {1..l}, pairs
/// ordered lexicographically. Order l!, primitive, minimal degree 2(l−2).
pub fn two_subset_group(l: usize) -> Result<PermGroup> {
    if l < 5 {
        return Err(Error::BadParameters(format!(
            "2-subset action needs l ≥ 5, got {l}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..l)
        .flat_map(|i| (i + 1..l).map(move |j| (i, j)))
        .collect();
    let index_of = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).expect("pair exists")
    };
    let lift = |g: &Permutation| {
        let images = pairs
            .iter()
            .map(|&(a, b)| index_of(g.apply(a), g.apply(b)) as u32)
            .collect();
        Permutation::from_images(images).expect("induced pair action is a bijection")
    };
    let transposition = Permutation::parse("(1 2)", l)?;
    let cycle_text = format!("({})", (1..=l).map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
    let cycle = Permutation::parse(&cycle_text, l)?;
    PermGroup::from_generators(vec![lift(&transposition), lift(&cycle)], pairs.len())
}
