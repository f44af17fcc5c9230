//! Verification harness: reruns every checkable claim of the analyzer as a
//! named suite and emits a machine-readable report.
//!
//! Suites whose claim is a theorem applied within its hypotheses assert
//! (violations must be zero); claims involving unspecified absolute
//! constants only report the empirical constants. A cap or parameter error
//! inside one suite is surfaced on that suite's report, never as a process
//! failure.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::chartable::{min_support_class, CharTable};
use crate::codes::random_gv_code;
use crate::constructions::{block_group, fpf_involution, two_subset_group};
use crate::distinguish::{
    corollary2_bounds, plancherel, sample_weak, sampling_identity_holds, sandwich_holds,
    theorem_a_holds, total_variation_from_classes, SAMPLER_RNG,
};
use crate::exact::decimal_string;
use crate::group::PermGroup;
use crate::partition::{binomial, factorial, Partition};
use crate::perm::Permutation;
use crate::{Error, Result};

pub const SUITE_NAMES: &[&str] = &[
    "char_orthogonality",
    "dg_closed_form",
    "prop1_sandwich",
    "conjugation_invariance",
    "sampling_identity",
    "theorem_a",
    "code_dictionary",
    "babai_primitive",
    "fpf_family",
    "sampler_fidelity",
    "binomial",
    "min_class_structure",
    "theorem_bc",
];

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    /// None = all suites, in the order of `SUITE_NAMES`
    pub suites: Option<Vec<String>>,
    pub cap: u64,
    pub seed: u64,
    /// draws for the sampler-fidelity suite
    pub samples: usize,
    /// random 2-generator subgroups for the sandwich suite
    pub random_subgroups: usize,
    pub conjugation_pairs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suites: None,
            cap: 1_000_000,
            seed: 0,
            samples: 100_000,
            random_subgroups: 200,
            conjugation_pairs: 50,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    /// self-contained statement of the checked claim
    pub claim: String,
    /// whether violations are a hard failure (constant-free claims assert;
    /// claims with unspecified constants only report)
    pub asserting: bool,
    pub instances: u64,
    pub violations: u64,
    /// first violating instance, if any
    pub witness: Option<String>,
    pub empirical: BTreeMap<String, String>,
    /// per-suite computational error (e.g. a cap exceeded), not a violation
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyMetadata {
    pub seed: u64,
    pub cap: u64,
    pub samples: u64,
    pub random_subgroups: u64,
    pub conjugation_pairs: u64,
    pub sampler_rng: String,
    pub version: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub metadata: VerifyMetadata,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    /// True iff no asserting suite recorded a violation.
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| !s.asserting || s.violations == 0)
    }
}

pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let selected: Vec<String> = match &config.suites {
        None => SUITE_NAMES.iter().map(|s| s.to_string()).collect(),
        Some(list) => {
            for name in list {
                if !SUITE_NAMES.contains(&name.as_str()) {
                    return Err(Error::BadParameters(format!("unknown suite `{name}`")));
                }
            }
            list.clone()
        }
    };
    let mut suites = Vec::new();
    for name in &selected {
        suites.push(run_suite(name, config));
    }
    Ok(VerifyReport {
        metadata: VerifyMetadata {
            seed: config.seed,
            cap: config.cap,
            samples: config.samples as u64,
            random_subgroups: config.random_subgroups as u64,
            conjugation_pairs: config.conjugation_pairs as u64,
            sampler_rng: SAMPLER_RNG.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        suites,
    })
}

fn run_suite(name: &str, config: &VerifyConfig) -> SuiteReport {
    let (claim, asserting): (&str, bool) = match name {
        "char_orthogonality" => (
            "Σ_μ |C_μ|·χ_λ(μ)·χ_λ′(μ) = n!·[λ=λ′], Σ_λ d_λ² = n!, and χ_λ(1ⁿ) equals the hook-length dimension, exactly, for n ≤ 8",
            true,
        ),
        "dg_closed_form" => (
            "D_G = 2(1 − 1/n!) exactly for the full group H = S_n, n = 3..7",
            true,
        ),
        "prop1_sandwich" => (
            "strict sandwich lower < D_H ≤ upper for both bound pairs (class-sum pair and minimal-class pair) on seeded random 2-generator subgroups of S_n, n ≤ 8, in exact arithmetic",
            true,
        ),
        "conjugation_invariance" => (
            "D_{xHx⁻¹} = D_H exactly on seeded conjugation pairs",
            true,
        ),
        "sampling_identity" => (
            "D_H = Σ_λ |P_H(λ) − P_1(λ)| exactly for the full groups, the seeded random subgroups, and the seeded conjugates",
            true,
        ),
        "theorem_a" => (
            "if 2^m ≤ n then |H|^m ≤ n^{10n}, else |H| ≤ 2^{10n}, in exact integers over all constructed families and the seeded random subgroups",
            true,
        ),
        "code_dictionary" => (
            "m(embed(C)) = 2·min_weight(C), support_distribution(embed(C))[2w] = A_w, no odd supports, |embed(C)| = 2^k, on seeded random full-rank codes",
            true,
        ),
        "babai_primitive" => (
            "the 2-subset action of S_l (l = 5..7) is transitive, primitive, of order l! < n!/2, with m = 2(l−2) and m ≥ (√n − 1)/2",
            true,
        ),
        "fpf_family" => (
            "for H generated by a fixed-point-free involution, exact D_H is strictly decreasing over n ∈ {4,6,8,10} and ≤ |C_(2^{n/2})|^{−1/2}",
            true,
        ),
        "sampler_fidelity" => (
            "empirical total-variation distance of seeded draws from P_{1} in S_6 to the Plancherel distribution is < 0.02",
            true,
        ),
        "binomial" => (
            "C(n,x)·C(n,y) ≤ C(n,x+y)·2^{2(x+y)} for all positive x, y with x+y ≤ n ≤ 60, exhaustively in exact integers",
            true,
        ),
        "min_class_structure" => (
            "for n ≤ 10 and even k the smallest support-k class is (2^{k/2}, 1^{n−k}); the constant min |C|·√k/(C(n,k)·√k!) is reported, not asserted",
            true,
        ),
        "theorem_bc" => (
            "|H_k| ≤ C(n,k)^{1/2}·(k!)^{1/4} on the involution and small block families; the slope/exponent constants are reported, not asserted",
            true,
        ),
        other => {
            return SuiteReport {
                name: other.to_string(),
                claim: String::new(),
                asserting: false,
                instances: 0,
                violations: 0,
                witness: None,
                empirical: BTreeMap::new(),
                error: Some(format!("unknown suite `{other}`")),
            }
        }
    };
    let mut suite = SuiteReport {
        name: name.to_string(),
        claim: claim.to_string(),
        asserting,
        instances: 0,
        violations: 0,
        witness: None,
        empirical: BTreeMap::new(),
        error: None,
    };
    let outcome = match name {
        "char_orthogonality" => suite_char_orthogonality(&mut suite),
        "dg_closed_form" => suite_dg_closed_form(&mut suite, config),
        "prop1_sandwich" => suite_prop1_sandwich(&mut suite, config),
        "conjugation_invariance" => suite_conjugation(&mut suite, config),
        "sampling_identity" => suite_sampling_identity(&mut suite, config),
        "theorem_a" => suite_theorem_a(&mut suite, config),
        "code_dictionary" => suite_code_dictionary(&mut suite, config),
        "babai_primitive" => suite_babai(&mut suite),
        "fpf_family" => suite_fpf_family(&mut suite, config),
        "sampler_fidelity" => suite_sampler_fidelity(&mut suite, config),
        "binomial" => suite_binomial(&mut suite),
        "min_class_structure" => suite_min_class(&mut suite),
        "theorem_bc" => suite_theorem_bc(&mut suite, config),
        _ => unreachable!("matched above"),
    };
    if let Err(e) = outcome {
        suite.error = Some(e.to_string());
    }
    suite
}

fn note_violation(suite: &mut SuiteReport, witness: impl FnOnce() -> String) {
    suite.violations += 1;
    if suite.witness.is_none() {
        suite.witness = Some(witness());
    }
}

fn natural_symmetric(n: usize) -> Result<PermGroup> {
    let cycle = format!(
        "({})",
        (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
    );
    let gens = vec![Permutation::parse("(1 2)", n)?, Permutation::parse(&cycle, n)?];
    PermGroup::from_generators(gens, n)
}

fn random_permutation(n: usize, rng: &mut ChaCha12Rng) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_images(images).expect("shuffle is a bijection")
}

/// The seeded stream of nontrivial 2-generator subgroups shared by the
/// sandwich, sampling-identity and Theorem-A suites: identical seeds give
/// identical groups across suites.
fn random_subgroups(count: usize, seed: u64) -> Vec<PermGroup> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(3..=8usize);
        let gens = vec![random_permutation(n, &mut rng), random_permutation(n, &mut rng)];
        let g = PermGroup::from_generators(gens, n).expect("degrees match");
        if !g.is_trivial() {
            out.push(g);
        }
    }
    out
}

/// Conjugation pairs (H, xHx⁻¹) from the given seed.
fn conjugation_pairs(count: usize, seed: u64) -> Vec<(PermGroup, PermGroup)> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(3..=8usize);
        let gens = vec![random_permutation(n, &mut rng), random_permutation(n, &mut rng)];
        let x = random_permutation(n, &mut rng);
        let h = PermGroup::from_generators(gens.clone(), n).expect("degrees match");
        if h.is_trivial() {
            continue;
        }
        let conj_gens: Vec<Permutation> = gens
            .iter()
            .map(|g| g.conjugate_by(&x).expect("same degree"))
            .collect();
        let hx = PermGroup::from_generators(conj_gens, n).expect("degrees match");
        out.push((h, hx));
    }
    out
}

// seed offsets keeping per-suite streams independent but reproducible
const SEED_SANDWICH: u64 = 0x5a5a_0003;
const SEED_CONJUGATION: u64 = 0x5a5a_0004;

fn suite_char_orthogonality(suite: &mut SuiteReport) -> Result<()> {
    for n in 1..=8usize {
        let mut t = CharTable::new(n);
        let labels = t.partitions().to_vec();
        let id_type = Partition::new(vec![1; n])?;
        let mut dim_sq = BigUint::zero();
        for lam in &labels {
            let chi_id = t.character(lam, &id_type)?;
            if chi_id != BigInt::from(lam.dimension()) {
                note_violation(suite, || format!("dimension mismatch at n={n}, λ={lam}"));
            }
            suite.instances += 1;
            dim_sq += lam.dimension().pow(2);
        }
        suite.instances += 1;
        if dim_sq != factorial(n) {
            note_violation(suite, || format!("Σ d² ≠ n! at n={n}"));
        }
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i..] {
                let mut sum = BigInt::zero();
                for mu in &labels {
                    let sz = BigInt::from(mu.class_size());
                    sum += sz * t.character(a, mu)? * t.character(b, mu)?;
                }
                let expect = if a == b { BigInt::from(factorial(n)) } else { BigInt::zero() };
                suite.instances += 1;
                if sum != expect {
                    note_violation(suite, || format!("orthogonality fails at n={n}, λ={a}, λ′={b}"));
                }
            }
        }
    }
    Ok(())
}

fn suite_dg_closed_form(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    for n in 3..=7usize {
        let g = natural_symmetric(n)?;
        let mut t = CharTable::new(n);
        let cv = g.class_intersections(config.cap)?;
        let dh = total_variation_from_classes(&cv, &mut t)?;
        let nf = BigRational::from(BigInt::from(factorial(n)));
        let expect = BigRational::from(BigInt::from(2)) * (BigRational::one() - nf.recip());
        suite.instances += 1;
        if dh != expect {
            note_violation(suite, || format!("D_G ≠ 2(1 − 1/n!) at n={n}: got {dh}"));
        }
    }
    Ok(())
}

fn gens_string(g: &PermGroup) -> String {
    let parts: Vec<String> = g.generators().iter().map(|p| p.to_cycle_string()).collect();
    format!("degree {} ⟨{}⟩", g.degree(), parts.join(", "))
}

fn suite_prop1_sandwich(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    let mut tables: BTreeMap<usize, CharTable> = BTreeMap::new();
    for g in random_subgroups(config.random_subgroups, config.seed ^ SEED_SANDWICH) {
        let cv = g.class_intersections(config.cap)?;
        let t = tables.entry(g.degree()).or_insert_with(|| CharTable::new(g.degree()));
        suite.instances += 1;
        if !sandwich_holds(&cv, t)? {
            note_violation(suite, || gens_string(&g));
        }
    }
    Ok(())
}

fn suite_conjugation(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    let mut tables: BTreeMap<usize, CharTable> = BTreeMap::new();
    for (h, hx) in conjugation_pairs(config.conjugation_pairs, config.seed ^ SEED_CONJUGATION) {
        let cva = h.class_intersections(config.cap)?;
        let cvb = hx.class_intersections(config.cap)?;
        let t = tables.entry(h.degree()).or_insert_with(|| CharTable::new(h.degree()));
        let da = total_variation_from_classes(&cva, t)?;
        let db = total_variation_from_classes(&cvb, t)?;
        suite.instances += 1;
        if da != db {
            note_violation(suite, || gens_string(&h));
        }
    }
    Ok(())
}

fn suite_sampling_identity(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    let mut tables: BTreeMap<usize, CharTable> = BTreeMap::new();
    let mut check = |g: &PermGroup, suite: &mut SuiteReport| -> Result<()> {
        let cv = g.class_intersections(config.cap)?;
        let t = tables.entry(g.degree()).or_insert_with(|| CharTable::new(g.degree()));
        suite.instances += 1;
        if !sampling_identity_holds(&cv, t)? {
            note_violation(suite, || gens_string(g));
        }
        Ok(())
    };
    for n in 3..=7usize {
        check(&natural_symmetric(n)?, suite)?;
    }
    for g in random_subgroups(config.random_subgroups, config.seed ^ SEED_SANDWICH) {
        check(&g, suite)?;
    }
    for (h, hx) in conjugation_pairs(config.conjugation_pairs, config.seed ^ SEED_CONJUGATION) {
        check(&h, suite)?;
        check(&hx, suite)?;
    }
    Ok(())
}

fn valid_block_parameters(max_n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for m in (2..=2 * n).step_by(2) {
            if n % (m / 2) == 0 && 2 * n / m >= 2 && 2 * n % m == 0 {
                out.push((n, m));
            }
        }
    }
    out
}

fn suite_theorem_a(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    let check = |g: &PermGroup, label: String, suite: &mut SuiteReport| -> Result<()> {
        if g.is_trivial() {
            return Ok(());
        }
        let m = g.minimal_degree_search()?;
        suite.instances += 1;
        if !theorem_a_holds(&g.order(), g.degree(), m)? {
            note_violation(suite, || label);
        }
        Ok(())
    };
    for (n, m) in valid_block_parameters(30) {
        let g = block_group(n, m)?;
        check(&g, format!("block_group({n},{m})"), suite)?;
    }
    for ell in 2..=12usize {
        for k in 1..=ell.min(10) {
            let seed = config.seed ^ ((ell as u64) << 8 | k as u64);
            let code = random_gv_code(ell, k, seed)?;
            let g = code.embed();
            check(&g, format!("embed(gv ℓ={ell} k={k})"), suite)?;
        }
    }
    for l in 5..=7usize {
        let g = two_subset_group(l)?;
        check(&g, format!("two_subset({l})"), suite)?;
    }
    for g in random_subgroups(config.random_subgroups, config.seed ^ SEED_SANDWICH) {
        let label = gens_string(&g);
        check(&g, label, suite)?;
    }
    Ok(())
}

fn suite_code_dictionary(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed ^ 0x5a5a_0007);
    for i in 0..100u64 {
        let ell = rng.gen_range(2..=16usize);
        let k = rng.gen_range(1..=ell.min(10));
        let code = random_gv_code(ell, k, config.seed ^ (0xc0de << 8) ^ i)?;
        let g = code.embed();
        let wd = code.weight_distribution(config.cap)?;
        let sd = g.support_distribution(config.cap)?;
        let label = || format!("gv code ℓ={ell} k={k} i={i}");
        suite.instances += 1;
        let mut ok = g.minimal_degree(config.cap)? == 2 * code.min_weight(config.cap)?;
        ok &= g.order() == BigUint::from(2u32).pow(k as u32);
        ok &= sd.counts.keys().all(|s| s % 2 == 0);
        for (w, a) in &wd {
            if *w > 0 {
                ok &= sd.counts.get(&(2 * w)) == Some(&BigUint::from(*a));
            }
        }
        // and nothing extra in the support distribution
        ok &= sd.counts.len() == wd.len().saturating_sub(1);
        if !ok {
            note_violation(suite, label);
        }
    }
    Ok(())
}

fn suite_babai(suite: &mut SuiteReport) -> Result<()> {
    for l in 5..=7usize {
        let g = two_subset_group(l)?;
        let n = g.degree();
        let m = g.minimal_degree_search()?;
        suite.instances += 1;
        let mut ok = g.is_transitive();
        ok &= g.minimal_blocks()?.is_none();
        ok &= m == 2 * (l - 2);
        // m ≥ (√n − 1)/2 ⇔ (2m + 1)² ≥ n, in integers
        ok &= (2 * m + 1).pow(2) >= n;
        ok &= BigUint::from(2u32) * g.order() < factorial(n);
        if !ok {
            note_violation(suite, || format!("two_subset({l})"));
        }
    }
    Ok(())
}

fn suite_fpf_family(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    let mut prev: Option<BigRational> = None;
    for n in [4usize, 6, 8, 10] {
        let g = fpf_involution(n)?;
        let mut t = CharTable::new(n);
        let cv = g.class_intersections(config.cap)?;
        let dh = total_variation_from_classes(&cv, &mut t)?;
        let (_, upper, min_mu) = corollary2_bounds(&cv)?;
        suite.instances += 1;
        let expected_mu = Partition::new(vec![2; n / 2])?;
        let mut ok = min_mu == expected_mu;
        ok &= upper.cmp_rational(&dh) != std::cmp::Ordering::Less;
        if let Some(p) = &prev {
            ok &= dh < *p;
        }
        if !ok {
            note_violation(suite, || format!("fpf_involution({n})"));
        }
        suite
            .empirical
            .insert(format!("dh_n{n}"), decimal_string(&dh, 12));
        prev = Some(dh);
    }
    Ok(())
}

fn suite_sampler_fidelity(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    let p1 = plancherel(6);
    let counts = sample_weak(&p1, config.samples, config.seed)?;
    let total = BigInt::from(config.samples as u64);
    let mut l1 = BigRational::zero();
    for (lam, p) in &p1.probs {
        let observed = counts.get(lam).copied().unwrap_or(0);
        let emp = BigRational::new(BigInt::from(observed), total.clone());
        l1 += (emp - p).abs();
    }
    let tv = l1 / BigRational::from(BigInt::from(2));
    suite.instances += 1;
    if tv >= BigRational::new(BigInt::from(1), BigInt::from(50)) {
        note_violation(suite, || format!("tv = {}", decimal_string(&tv, 6)));
    }
    suite.empirical.insert("tv".into(), decimal_string(&tv, 8));
    suite
        .empirical
        .insert("draws".into(), config.samples.to_string());
    Ok(())
}

fn suite_binomial(suite: &mut SuiteReport) -> Result<()> {
    for n in 2..=60usize {
        for x in 1..n {
            for y in 1..=(n - x) {
                let lhs = binomial(n, x) * binomial(n, y);
                let rhs = binomial(n, x + y) << (2 * (x + y));
                suite.instances += 1;
                if lhs > rhs {
                    note_violation(suite, || format!("n={n} x={x} y={y}"));
                }
            }
        }
    }
    Ok(())
}

fn suite_min_class(suite: &mut SuiteReport) -> Result<()> {
    let mut best: Option<(f64, String)> = None;
    for n in 2..=10usize {
        for k in (2..=n).step_by(2) {
            let (mu, size) = min_support_class(n, k)?;
            let mut parts = vec![2; k / 2];
            parts.extend(std::iter::repeat(1).take(n - k));
            let expected = Partition::new(parts)?;
            suite.instances += 1;
            if mu != expected {
                note_violation(suite, || format!("n={n} k={k}: minimizer {mu}"));
            }
            let ratio = size.to_f64().unwrap_or(f64::NAN) * (k as f64).sqrt()
                / (binomial(n, k).to_f64().unwrap_or(f64::NAN)
                    * factorial(k).to_f64().unwrap_or(f64::NAN).sqrt());
            if best.as_ref().map_or(true, |(b, _)| ratio < *b) {
                best = Some((ratio, format!("n={n} k={k}")));
            }
        }
    }
    if let Some((ratio, at)) = best {
        suite
            .empirical
            .insert("min_ratio".into(), format!("{ratio:.9}"));
        suite.empirical.insert("min_ratio_at".into(), at);
    }
    Ok(())
}

fn suite_theorem_bc(suite: &mut SuiteReport, config: &VerifyConfig) -> Result<()> {
    let mut groups: Vec<(String, PermGroup)> = Vec::new();
    for n in [4usize, 6, 8, 10] {
        groups.push((format!("fpf({n})"), fpf_involution(n)?));
    }
    for (n, m) in [(4usize, 4usize), (8, 4), (9, 6), (12, 6), (12, 8)] {
        groups.push((format!("block({n},{m})"), block_group(n, m)?));
    }
    let mut max_dist_mindeg: Option<usize> = None;
    for (label, g) in &groups {
        let n = g.degree();
        let sd = g.support_distribution(config.cap)?;
        let m = g.minimal_degree_search()?;
        let mut t = CharTable::new(n);
        let cv = g.class_intersections(config.cap)?;
        let dh = total_variation_from_classes(&cv, &mut t)?;
        let mut eps_hat = f64::INFINITY;
        for (k, hk) in &sd.counts {
            // |H_k| ≤ C(n,k)^{1/2}·(k!)^{1/4} checked as |H_k|⁴ ≤ C(n,k)²·k!
            suite.instances += 1;
            let lhs = hk.pow(4);
            let rhs = binomial(n, *k).pow(2) * factorial(*k);
            if lhs > rhs {
                note_violation(suite, || format!("{label}: k={k}"));
            }
            let bound = 0.5 * binomial(n, *k).to_f64().unwrap_or(f64::NAN).ln()
                + 0.25 * factorial(*k).to_f64().unwrap_or(f64::NAN).ln();
            let eps = -(hk.to_f64().unwrap_or(f64::NAN).ln() - bound)
                / ((m as f64) * (n as f64).ln());
            if eps < eps_hat {
                eps_hat = eps;
            }
        }
        let dh_f = dh.to_f64().unwrap_or(f64::NAN);
        suite
            .empirical
            .insert(format!("{label}.eps_hat"), format!("{eps_hat:.6}"));
        suite
            .empirical
            .insert(format!("{label}.dh_m"), format!("({}, {m})", decimal_string(&dh, 9)));
        // track the largest minimal degree among subgroups distinguishable
        // at c = 1
        let threshold = (factorial(n).to_f64().unwrap_or(f64::NAN).log2()).recip();
        if dh_f >= threshold && max_dist_mindeg.map_or(true, |b| m > b) {
            max_dist_mindeg = Some(m);
        }
    }
    if let Some(m) = max_dist_mindeg {
        suite
            .empirical
            .insert("max_mindeg_distinguishable_c1".into(), m.to_string());
    }
    Ok(())
}
