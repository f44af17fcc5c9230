//! Weak-sampling outcome distributions and exact distinguishability data.
//!
//! The outcome distribution of weak Fourier sampling for a hidden subgroup
//! H ≤ S_n is P_H(λ) = d_λ/n! · Σ_{h∈H} χ_λ(h); its total-variation
//! distance D_H to the trivial-subgroup (Plancherel) distribution is kept
//! as an exact rational. Character sums are grouped by conjugacy class, so
//! the cost scales with the number of classes H meets rather than |H|.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::chartable::{min_class_size, CharTable};
use crate::exact::{decimal_string, ln_biguint, SqrtSum};
use crate::group::{ClassVector, PermGroup};
use crate::partition::{binomial, factorial, Partition};
use crate::{Error, Result};

/// Name of the PRNG driving `sample_weak`; recorded in sampler metadata so
/// runs are reproducible bit for bit.
pub const SAMPLER_RNG: &str = "chacha12";

#[derive(Clone, Debug)]
pub struct WeakDistribution {
    pub n: usize,
    /// probabilities in the deterministic partition order of `Partition::all`
    pub probs: Vec<(Partition, BigRational)>,
}

impl WeakDistribution {
    pub fn prob(&self, lambda: &Partition) -> BigRational {
        self.probs
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(BigRational::zero)
    }
}

/// Plancherel distribution P_1(λ) = d_λ²/n!: the weak-sampling outcome for
/// the trivial hidden subgroup.
pub fn plancherel(n: usize) -> WeakDistribution {
    let nf = BigInt::from(factorial(n));
    let probs = Partition::all(n)
        .into_iter()
        .map(|lam| {
            let d = BigInt::from(lam.dimension());
            let p = BigRational::new(&d * &d, nf.clone());
            (lam, p)
        })
        .collect();
    WeakDistribution { n, probs }
}

/// P_H from a class vector: Σ_{h∈H} χ_λ(h) = d_λ + Σ_μ |C_μ∩H|·χ_λ(μ).
pub fn weak_distribution_from_classes(
    cv: &ClassVector,
    table: &mut CharTable,
) -> Result<WeakDistribution> {
    let n = cv.n;
    let nf = BigInt::from(factorial(n));
    let mut probs = Vec::new();
    for lam in Partition::all(n) {
        let d = BigInt::from(lam.dimension());
        let mut sum = d.clone(); // identity contributes χ_λ(1) = d_λ
        for (mu, cnt) in &cv.entries {
            sum += BigInt::from(cnt.clone()) * table.character(&lam, mu)?;
        }
        let p = BigRational::new(&d * sum, nf.clone());
        probs.push((lam, p));
    }
    Ok(WeakDistribution { n, probs })
}

pub fn weak_distribution(group: &PermGroup, cap: u64, table: &mut CharTable) -> Result<WeakDistribution> {
    let cv = group.class_intersections(cap)?;
    weak_distribution_from_classes(&cv, table)
}

/// D_H = (1/n!) Σ_λ d_λ |Σ_μ |C_μ∩H| χ_λ(μ)|, exact.
pub fn total_variation_from_classes(cv: &ClassVector, table: &mut CharTable) -> Result<BigRational> {
    let n = cv.n;
    let nf = BigInt::from(factorial(n));
    let mut acc = BigInt::zero();
    for lam in Partition::all(n) {
        let d = BigInt::from(lam.dimension());
        let mut sum = BigInt::zero();
        for (mu, cnt) in &cv.entries {
            sum += BigInt::from(cnt.clone()) * table.character(&lam, mu)?;
        }
        acc += d * sum.abs();
    }
    Ok(BigRational::new(acc, nf))
}

pub fn total_variation(group: &PermGroup, cap: u64, table: &mut CharTable) -> Result<BigRational> {
    let cv = group.class_intersections(cap)?;
    total_variation_from_classes(&cv, table)
}

/// Lower and upper bound on D_H from the class data:
/// Σ |C∩H|²/(|H||C|) < D_H ≤ Σ |C∩H|/√|C|.
pub fn prop1_bounds(cv: &ClassVector) -> Result<(BigRational, SqrtSum)> {
    if cv.entries.is_empty() {
        return Err(Error::TrivialGroup);
    }
    let mut order = BigInt::one();
    for c in cv.entries.values() {
        order += BigInt::from(c.clone());
    }
    let mut lower = BigRational::zero();
    let mut upper = SqrtSum::zero();
    for (mu, cnt) in &cv.entries {
        let cnt = BigInt::from(cnt.clone());
        let class = mu.class_size();
        lower += BigRational::new(&cnt * &cnt, &order * BigInt::from(class.clone()));
        upper.add_inv_sqrt_term(BigRational::from(cnt), class);
    }
    Ok((lower, upper))
}

/// Bounds through the smallest class meeting H∖{1}:
/// 1/(|H||C_min|) < D_H ≤ (|H|−1)/√|C_min|.
pub fn corollary2_bounds(cv: &ClassVector) -> Result<(BigRational, SqrtSum, Partition)> {
    if cv.entries.is_empty() {
        return Err(Error::TrivialGroup);
    }
    let mut order = BigInt::one();
    for c in cv.entries.values() {
        order += BigInt::from(c.clone());
    }
    let (min_mu, min_size) = cv
        .entries
        .keys()
        .map(|mu| (mu.clone(), mu.class_size()))
        .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)))
        .expect("nonempty class vector");
    let lower = BigRational::new(BigInt::one(), &order * BigInt::from(min_size.clone()));
    let mut upper = SqrtSum::zero();
    upper.add_inv_sqrt_term(BigRational::from(order - BigInt::one()), min_size);
    Ok((lower, upper, min_mu))
}

/// Refined upper bound D_H ≤ Σ_k |H_k| · (min class size at support k)^{−1/2}.
pub fn support_refined_bound(cv: &ClassVector) -> Result<SqrtSum> {
    if cv.entries.is_empty() {
        return Err(Error::TrivialGroup);
    }
    let sd = cv.support_distribution();
    let mut bound = SqrtSum::zero();
    for (k, count) in &sd.counts {
        let min_size = min_class_size(cv.n, *k)?;
        bound.add_inv_sqrt_term(BigRational::from(BigInt::from(count.clone())), min_size);
    }
    Ok(bound)
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub distinguishable: bool,
    pub c: f64,
    pub dh: f64,
    /// (log₂ n!)^{−c}
    pub threshold: f64,
}

/// Distinguishable at c iff D_H ≥ (log₂ n!)^{−c}. The threshold is
/// irrational; it is evaluated in f64, which is display-accurate for the
/// desk-scale n this tool targets.
pub fn classify(dh: &BigRational, n: usize, c: f64) -> Verdict {
    assert!(c > 0.0, "classification exponent must be positive");
    let log2_order = factorial(n)
        .to_f64()
        .map(|x| x.log2())
        .unwrap_or_else(|| {
            // n! beyond f64: sum the logs
            (2..=n).map(|i| (i as f64).log2()).sum()
        });
    let threshold = log2_order.powf(-c);
    let dh_f = dh.to_f64().unwrap_or(f64::NAN);
    Verdict {
        distinguishable: dh_f >= threshold,
        c,
        dh: dh_f,
        threshold,
    }
}

/// Value of n^{−εm}·C(n,k)^{1/2}·(k!)^{1/4}, reported through its natural
/// log carried to well over 50 significant digits.
#[derive(Clone, Debug)]
pub struct TheoremBBound {
    pub ln_value: BigRational,
    pub ln_decimal: String,
    pub value: f64,
}

pub fn theorem_b_rhs(n: usize, k: usize, m: usize, epsilon: f64) -> Result<TheoremBBound> {
    if k < 1 || k > n || m < 1 || epsilon < 0.0 {
        return Err(Error::BadParameters(format!(
            "need 1 ≤ k ≤ n, m ≥ 1, ε ≥ 0; got n={n} k={k} m={m} ε={epsilon}"
        )));
    }
    let bits = 384;
    let eps = BigRational::from_float(epsilon)
        .ok_or_else(|| Error::BadParameters(format!("ε={epsilon} is not finite")))?;
    let ln_n = ln_biguint(&BigUint::from(n), bits);
    let ln_binom = ln_biguint(&binomial(n, k), bits);
    let ln_kfact = ln_biguint(&factorial(k), bits);
    let ln_value = -eps * BigRational::from(BigInt::from(m)) * ln_n
        + ln_binom / BigRational::from(BigInt::from(2))
        + ln_kfact / BigRational::from(BigInt::from(4));
    let value = ln_value.to_f64().map(f64::exp).unwrap_or(f64::NAN);
    Ok(TheoremBBound {
        ln_decimal: decimal_string(&ln_value, 60),
        ln_value,
        value,
    })
}

/// Order bound from the minimal degree, checked in exact integers:
/// when 2^m ≤ n the claim |H| ≤ n^{10n/m} is tested as |H|^m ≤ n^{10n};
/// otherwise |H| ≤ 2^{10n}.
pub fn theorem_a_holds(order: &BigUint, n: usize, m: usize) -> Result<bool> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::BadParameters(format!(
            "need 1 ≤ m ≤ n, got n={n} m={m}"
        )));
    }
    let two_pow_m = BigUint::from(2u32).pow(m as u32);
    if two_pow_m <= BigUint::from(n) {
        let lhs = order.pow(m as u32);
        let rhs = BigUint::from(n).pow(10 * n as u32);
        Ok(lhs <= rhs)
    } else {
        Ok(*order <= BigUint::from(2u32).pow(10 * n as u32))
    }
}

/// One weak-sampling report for a subgroup, with every asserted quantity
/// exact and decimal renderings for display.
#[derive(Clone, Debug, Serialize)]
pub struct DistReport {
    pub n: usize,
    pub order: String,
    pub min_degree: usize,
    pub dh: String,
    pub dh_float: f64,
    pub prop1: BoundPair,
    pub cor2: BoundPair,
    pub verdict: Verdict,
    pub class_vector: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundPair {
    /// exact rational, "p/q"
    pub lower: String,
    /// rational upper rounding of the (generally irrational) bound
    pub upper: String,
    pub lower_float: f64,
    pub upper_float: f64,
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl DistReport {
    pub fn build(group: &PermGroup, c: f64, cap: u64, table: &mut CharTable) -> Result<DistReport> {
        if group.is_trivial() {
            return Err(Error::TrivialGroup);
        }
        let cv = group.class_intersections(cap)?;
        let dh = total_variation_from_classes(&cv, table)?;
        let (p1_lo, p1_hi) = prop1_bounds(&cv)?;
        let (c2_lo, c2_hi, _) = corollary2_bounds(&cv)?;
        let verdict = classify(&dh, group.degree(), c);
        let min_degree = *cv
            .support_distribution()
            .counts
            .keys()
            .next()
            .expect("nontrivial group has moved elements");
        Ok(DistReport {
            n: group.degree(),
            order: group.order().to_string(),
            min_degree,
            dh: rational_string(&dh),
            dh_float: dh.to_f64().unwrap_or(f64::NAN),
            prop1: BoundPair {
                lower: rational_string(&p1_lo),
                upper: rational_string(&p1_hi.upper_rounding(128)),
                lower_float: p1_lo.to_f64().unwrap_or(f64::NAN),
                upper_float: p1_hi.to_f64(),
            },
            cor2: BoundPair {
                lower: rational_string(&c2_lo),
                upper: rational_string(&c2_hi.upper_rounding(128)),
                lower_float: c2_lo.to_f64().unwrap_or(f64::NAN),
                upper_float: c2_hi.to_f64(),
            },
            verdict,
            class_vector: cv
                .entries
                .iter()
                .map(|(mu, cnt)| (mu.to_string(), cnt.to_string()))
                .collect(),
        })
    }
}

/// Draws `count` i.i.d. outcomes from the exact P_H by inverse CDF over the
/// deterministic partition order; reproducible per seed.
pub fn sample_weak(dist: &WeakDistribution, count: usize, seed: u64) -> Result<BTreeMap<Partition, u64>> {
    if count == 0 {
        return Err(Error::BadParameters("sample count must be ≥ 1".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    // cumulative thresholds; a draw u ∈ [0,1) at 64-bit resolution picks the
    // first λ with u < cdf(λ), decided exactly as u·q < 2^64·p
    let mut cdf = Vec::new();
    let mut acc = BigRational::zero();
    for (lam, p) in &dist.probs {
        acc += p;
        cdf.push((lam.clone(), acc.clone()));
    }
    let two64 = BigInt::from(BigUint::one() << 64u32);
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for _ in 0..count {
        let u = BigInt::from(rng.next_u64());
        let chosen = cdf
            .iter()
            .find(|(_, c)| &u * c.denom() < c.numer() * &two64)
            .map(|(lam, _)| lam.clone())
            // only reachable through the 2^-64 rounding sliver at the top
            .unwrap_or_else(|| cdf.last().unwrap().0.clone());
        *counts.entry(chosen).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Exact check D_H = Σ_λ |P_H(λ) − P_1(λ)|.
pub fn sampling_identity_holds(
    cv: &ClassVector,
    table: &mut CharTable,
) -> Result<bool> {
    let dh = total_variation_from_classes(cv, table)?;
    let ph = weak_distribution_from_classes(cv, table)?;
    let p1 = plancherel(cv.n);
    let mut sum = BigRational::zero();
    for ((lam, p), (lam1, q)) in ph.probs.iter().zip(p1.probs.iter()) {
        assert_eq!(lam, lam1);
        sum += (p - q).abs();
    }
    Ok(sum == dh)
}

/// Exact strict-sandwich check: prop1_lower < D_H ≤ prop1_upper and the
/// same for the corollary-2 pair.
pub fn sandwich_holds(cv: &ClassVector, table: &mut CharTable) -> Result<bool> {
    let dh = total_variation_from_classes(cv, table)?;
    let (p1_lo, p1_hi) = prop1_bounds(cv)?;
    let (c2_lo, c2_hi, _) = corollary2_bounds(cv)?;
    Ok(p1_lo < dh
        && p1_hi.cmp_rational(&dh) != Ordering::Less
        && c2_lo < dh
        && c2_hi.cmp_rational(&dh) != Ordering::Less)
}
