//! Full verification runs: every identity over every cycle of a tope set,
//! with seeded sampling where exhaustive checking would be too slow.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::committee::{decompose_tope, indicator_vector, min_elements, Committee};
use crate::cycle::{find_symmetric_cycles, SymmetricCycle};
use crate::enumerator::{distance_enumerator, halfspace_form, halfspace_sum, Halfspace};
use crate::error::Result;
use crate::gram::{distance_from_indicators, GramMatrix};
use crate::signal::DistanceVector;
use crate::spectral::cardinality::{
    committee_card_quadratic, decomposition_card_spectral, spectral_value, QuadraticVariant,
    SpectralVariant,
};
use crate::spectral::dft::dft_int;
use crate::spectral::identities::{
    basic_sums, spectrum_checks, translation_invariance, verify_b_spectrum, verify_diagonalization,
    IdentityReport, Tolerances,
};
use crate::spectral::two_cycle::two_cycle_analysis;
use crate::tope::Tope;
use crate::tope_set::{TopeSet, ValidationReport};

const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct CampaignConfig {
    /// Stop cycle enumeration after this many cycles.
    pub cycle_limit: Option<usize>,
    pub tolerances: Tolerances,
    pub seed: u64,
    /// Above this many topes, per-tope checks use a seeded sample.
    pub tope_threshold: usize,
    pub tope_samples: usize,
    /// Above this many cycle pairs, two-cycle checks use a seeded sample.
    pub pair_threshold: usize,
    pub pair_samples: usize,
    /// Cycles whose Gram matrix is checked against tope-graph distances.
    pub gram_cycles: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            cycle_limit: None,
            tolerances: Tolerances::default(),
            seed: 0,
            tope_threshold: 256,
            tope_samples: 50,
            pair_threshold: 20_000,
            pair_samples: 20,
            gram_cycles: 8,
        }
    }
}

/// Pass/fail tally for a family of checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseSummary {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
    pub pass: bool,
}

impl CaseSummary {
    fn new(name: &str) -> Self {
        CaseSummary {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            witnesses: Vec::new(),
            pass: true,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            self.pass = false;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VariantValue<V> {
    pub variant: V,
    pub value: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleReport {
    pub index: usize,
    pub vertices: Vec<Tope>,
    pub flip_order: Vec<usize>,
    pub distance: Vec<i64>,
    pub committee: Option<Committee>,
    pub exact: Vec<VariantValue<QuadraticVariant>>,
    pub spectral: Vec<VariantValue<SpectralVariant>>,
    pub checks: Vec<IdentityReport>,
    pub decomposition: CaseSummary,
}

impl CycleReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.decomposition.pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairSummary {
    pub pair: (usize, usize),
    pub cardinalities: (usize, usize),
    pub combined_spectral: f64,
    pub failed_checks: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub t: usize,
    pub tope_count: usize,
    pub base: Tope,
    pub config: CampaignConfig,
    pub validation: ValidationReport,
    pub global: Vec<IdentityReport>,
    pub cycles: Vec<CycleReport>,
    pub enumerator: Vec<CaseSummary>,
    pub gram: CaseSummary,
    pub two_cycle_pairs_total: usize,
    pub two_cycle: Vec<PairSummary>,
    pub validation_pass: bool,
    pub identities_pass: bool,
    pub overall: bool,
}

/// Enumerates cycles of `set` and verifies every identity over them.
pub fn run_campaign(set: &TopeSet, base: &Tope, config: &CampaignConfig) -> Result<CampaignReport> {
    let cycles = find_symmetric_cycles(set, config.cycle_limit)?;
    run_campaign_with_cycles(set, &cycles, base, config)
}

/// [`run_campaign`] on a given list of cycles.
pub fn run_campaign_with_cycles(
    set: &TopeSet,
    cycles: &[SymmetricCycle],
    base: &Tope,
    config: &CampaignConfig,
) -> Result<CampaignReport> {
    let tol = &config.tolerances;
    let t = set.t();
    let validation = set.validate();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let sampled = sample_topes(set, config, &mut rng);

    let mut global = vec![verify_b_spectrum(t, tol.matrix)];
    global.extend(verify_diagonalization(t, None, tol)?);

    let cycle_reports: Vec<CycleReport> = cycles
        .iter()
        .enumerate()
        .map(|(i, c)| cycle_report(i, c, base, &sampled, tol))
        .collect::<Result<_>>()?;

    let enumerator = enumerator_checks(set, cycles, &sampled)?;
    let gram = gram_checks(set, cycles, config, &mut rng);
    let (two_cycle_pairs_total, two_cycle) = pair_checks(&cycle_reports, config, &mut rng)?;

    let validation_pass = validation.overall();
    let identities_pass = global.iter().all(|r| r.pass)
        && cycle_reports.iter().all(CycleReport::pass)
        && enumerator.iter().all(|s| s.pass)
        && gram.pass
        && two_cycle.iter().all(|p| p.pass);
    Ok(CampaignReport {
        t,
        tope_count: set.len(),
        base: base.clone(),
        config: config.clone(),
        validation,
        global,
        cycles: cycle_reports,
        enumerator,
        gram,
        two_cycle_pairs_total,
        two_cycle,
        validation_pass,
        identities_pass,
        overall: validation_pass && identities_pass,
    })
}

fn sample_topes(set: &TopeSet, config: &CampaignConfig, rng: &mut ChaCha8Rng) -> Vec<Tope> {
    if set.len() <= config.tope_threshold {
        return set.topes().to_vec();
    }
    let mut idx = sample(rng, set.len(), config.tope_samples.min(set.len())).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| set.topes()[i].clone()).collect()
}

fn cycle_report(
    index: usize,
    cycle: &SymmetricCycle,
    base: &Tope,
    topes: &[Tope],
    tol: &Tolerances,
) -> Result<CycleReport> {
    let t = cycle.t();
    let z = DistanceVector::from_cycle(cycle, base)?;
    let mut checks = Vec::new();

    let committee = match min_elements(cycle, base) {
        Ok(c) => {
            checks.push(IdentityReport::exact("committee-certificate", 1, 1));
            checks.push(IdentityReport::exact(
                "committee-odd",
                (c.cardinality % 2) as i64,
                1,
            ));
            Some(c)
        }
        Err(e) => {
            let mut r = IdentityReport::exact("committee-certificate", 0, 1);
            r.exact = Some(e.to_string());
            checks.push(r);
            None
        }
    };
    let reference = committee.as_ref().map(|c| c.cardinality as i64);

    let mut exact = Vec::new();
    for variant in QuadraticVariant::ALL {
        let value = committee_card_quadratic(&z, variant);
        exact.push(VariantValue {
            variant,
            value: value.as_ref().ok().map(|&v| v as f64),
        });
        let name = format!("exact {variant}");
        checks.push(match (value, reference) {
            (Ok(v), Some(r)) => IdentityReport::exact(name, v as i64, r),
            (Ok(v), None) => IdentityReport::exact(name, v as i64, -1),
            (Err(e), _) => {
                let mut r = IdentityReport::exact(name, -1, reference.unwrap_or(0));
                r.exact = Some(e.to_string());
                r
            }
        });
    }

    let spectrum = dft_int(z.values())?;
    let target = reference.unwrap_or(-1) as f64;
    let mut spectral = Vec::new();
    for variant in SpectralVariant::ALL {
        let value = spectral_value(&spectrum, z.norm_squared(), variant);
        spectral.push(VariantValue {
            variant,
            value: Some(value),
        });
        let mut r =
            IdentityReport::approx(format!("spectral {variant}"), value, target, tol.identity);
        r.pass &= value.round() == target;
        checks.push(r);
    }

    checks.extend(spectrum_checks(&z, tol));
    checks.extend(basic_sums(&z)?);
    for j in [1, t as i64] {
        checks.push(translation_invariance(&z, j, tol.spectrum * (t * t) as f64));
    }
    checks.extend(
        verify_diagonalization(t, Some(&z), tol)?
            .into_iter()
            .skip(1),
    );

    let mut decomposition = CaseSummary::new("decomposition-cardinality");
    for tope in topes {
        let outcome = decompose_tope(tope, cycle).and_then(|q| {
            let zt = DistanceVector::from_cycle(cycle, tope)?;
            Ok((q.cardinality, decomposition_card_spectral(&zt)?))
        });
        match outcome {
            Ok((card, spectral)) => decomposition.record(
                card % 2 == 1
                    && spectral.round() == card as f64
                    && (spectral - card as f64).abs() <= tol.identity,
                || format!("{tope}: |Q| = {card}, spectral {spectral}"),
            ),
            Err(e) => decomposition.record(false, || format!("{tope}: {e}")),
        }
    }

    Ok(CycleReport {
        index,
        vertices: cycle.vertices().to_vec(),
        flip_order: cycle.flip_order().to_vec(),
        distance: z.values().to_vec(),
        committee,
        exact,
        spectral,
        checks,
        decomposition,
    })
}

fn enumerator_checks(
    set: &TopeSet,
    cycles: &[SymmetricCycle],
    bases: &[Tope],
) -> Result<Vec<CaseSummary>> {
    let t = set.t();
    let mut full = CaseSummary::new("enumerator-element-selectors");
    let mut shape = CaseSummary::new("enumerator-shape");
    let mut windows = CaseSummary::new("enumerator-cycle-windows");
    for b in bases {
        let d = distance_enumerator(b, set.iter())?;
        let coeffs = d.integer_coefficients().unwrap_or_default();
        let symmetric = coeffs.len() <= t + 1
            && (0..=t).all(|k| coeffs.get(k).unwrap_or(&0) == coeffs.get(t - k).unwrap_or(&0));
        shape.record(d.value_at_one() == set.len() as i64 && symmetric, || {
            format!("base {b}: {d}")
        });
        for e in 1..=t {
            let h = halfspace_form(b, set.topes(), &Halfspace::PositiveOn(e));
            full.record(h.as_ref() == Ok(&d), || {
                format!("base {b}, element {e}: {h:?} vs {d}")
            });
        }
    }
    for (ci, cycle) in cycles.iter().enumerate() {
        let selections: Vec<Result<Vec<Tope>>> = (0..2 * t)
            .map(|j| {
                let window = (j..j + t).map(|i| cycle.vertex(i).clone()).collect();
                Halfspace::Explicit(window).select(cycle.vertices())
            })
            .collect();
        for b in bases {
            let d = distance_enumerator(b, cycle.vertices())?;
            for (j, chosen) in selections.iter().enumerate() {
                let h = chosen
                    .as_ref()
                    .map_err(Clone::clone)
                    .and_then(|c| halfspace_sum(b, c));
                windows.record(h.as_ref() == Ok(&d), || {
                    format!("base {b}, cycle {ci}, window {j}: {h:?} vs {d}")
                });
            }
        }
    }
    Ok(vec![full, shape, windows])
}

fn gram_checks(
    set: &TopeSet,
    cycles: &[SymmetricCycle],
    config: &CampaignConfig,
    rng: &mut ChaCha8Rng,
) -> CaseSummary {
    let mut summary = CaseSummary::new("gram-distance");
    let n = set.len();
    let (sources, targets): (Vec<usize>, Vec<usize>) = if n <= config.tope_threshold {
        ((0..n).collect(), (0..n).collect())
    } else {
        let k = config.tope_samples.min(n);
        (sample(rng, n, k).into_vec(), sample(rng, n, k).into_vec())
    };
    let mut chosen: Vec<usize> = if cycles.len() <= config.gram_cycles {
        (0..cycles.len()).collect()
    } else {
        let mut c = vec![0];
        c.extend(
            sample(rng, cycles.len() - 1, config.gram_cycles.saturating_sub(1))
                .iter()
                .map(|i| i + 1),
        );
        c
    };
    chosen.sort_unstable();
    let graph: Vec<Vec<Option<usize>>> = sources.iter().map(|&s| set.bfs(s)).collect();
    for &ci in &chosen {
        let cycle = &cycles[ci];
        let gram = GramMatrix::new(cycle);
        summary.record(gram.check_invariants(), || {
            format!("cycle {ci}: Gram invariants")
        });
        let indicators: Vec<Result<Vec<u8>>> =
            set.iter().map(|x| indicator_vector(x, cycle)).collect();
        for (si, &s) in sources.iter().enumerate() {
            for &u in &targets {
                let expected = graph[si][u];
                let got = match (&indicators[s], &indicators[u]) {
                    (Ok(qa), Ok(qb)) => Some(distance_from_indicators(qa, qb, &gram)),
                    _ => None,
                };
                summary.record(got.is_some() && got == expected, || {
                    format!(
                        "cycle {ci}: {} to {}: gram {got:?}, graph {expected:?}",
                        set.topes()[s],
                        set.topes()[u]
                    )
                });
            }
        }
    }
    summary
}

fn pair_checks(
    reports: &[CycleReport],
    config: &CampaignConfig,
    rng: &mut ChaCha8Rng,
) -> Result<(usize, Vec<PairSummary>)> {
    let n = reports.len();
    let total = n * n.saturating_sub(1) / 2;
    let pairs: Vec<(usize, usize)> = if total <= config.pair_threshold {
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect()
    } else {
        let mut idx = sample(rng, total, config.pair_samples.min(total)).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|p| decode_pair(p, n)).collect()
    };
    let mut out = Vec::with_capacity(pairs.len());
    for (i, j) in pairs {
        let zi = DistanceVector::new(reports[i].distance.clone())?;
        let zj = DistanceVector::new(reports[j].distance.clone())?;
        let r = two_cycle_analysis(&zi, &zj, &config.tolerances)?;
        out.push(PairSummary {
            pair: (i, j),
            cardinalities: r.cardinalities,
            combined_spectral: r.combined_spectral,
            failed_checks: r
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.name.clone())
                .collect(),
            pass: r.pass(),
        });
    }
    Ok((total, out))
}

/// The `p`-th pair `(i, j)`, `i < j < n`, in lexicographic order.
fn decode_pair(mut p: usize, n: usize) -> (usize, usize) {
    let mut i = 0;
    while p >= n - 1 - i {
        p -= n - 1 - i;
        i += 1;
    }
    (i, i + 1 + p)
}
