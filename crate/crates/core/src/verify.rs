//! Cross-validation of the closed forms against brute force over a grid of
//! small instances.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dowling::{covers_up, enumerate_poset, interval_char_poly, leq, DowlingContext};
use crate::error::Result;
use crate::fixtures::{action_by_name, group_by_name, ACTION_NAMES};
use crate::group::GSetAction;
use crate::invariants::{
    char_poly_factored, dowling_homology_dim, euler_binomial_form, motive_eval, rep_decomposition,
    whitney_hilbert,
};
use crate::layers::{self, orbit_config_count, FiniteGSpace};
use crate::registry::ambient_rank;
use crate::wreath::{label_fibers, orbits_bruteforce};

pub const GRID_GROUPS: &[&str] = &["Z1", "Z2", "Z3", "Z4", "Z6"];

/// One grid point: a group name, an action name and its G-set.
#[derive(Clone, Debug)]
pub struct Instance {
    pub group: String,
    pub action_name: String,
    pub action: GSetAction,
}

impl Instance {
    pub fn context(&self, n: usize) -> Result<DowlingContext> {
        DowlingContext::new(n, self.action.clone())
    }

    pub fn describe(&self, n: usize) -> String {
        format!("D_{n}({}, {})", self.group, self.action_name)
    }
}

/// Every fixture action that makes sense for every grid group.
pub fn grid_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for &g in GRID_GROUPS {
        for &a in ACTION_NAMES {
            let group = group_by_name(g).expect("grid group");
            if let Ok(action) = action_by_name(a, group) {
                out.push(Instance {
                    group: g.to_string(),
                    action_name: a.to_string(),
                    action,
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    pub cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 4,
            seed: 0,
            cap: crate::dowling::DEFAULT_CAP,
        }
    }
}

/// Runs every comparison and reports one line per family of checks.
pub fn run(cfg: &VerifyConfig) -> Result<Report> {
    let mut report = Report::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut failures: Families<Vec<String>> = Families::default();
    let mut counts: Families<usize> = Families::default();
    for inst in grid_instances() {
        let g = inst.action.group().order();
        let s = inst.action.n_points();
        for n in 1..=cfg.max_n {
            let ctx = inst.context(n)?.with_cap(cfg.cap);
            let poset = enumerate_poset(&ctx)?;
            let what = inst.describe(n);

            counts.charpoly += 1;
            let brute = poset.char_poly_bruteforce(ambient_rank(&ctx))?;
            if brute != char_poly_factored(n, g, s) {
                failures.charpoly.push(what.clone());
            }

            counts.covers += 1;
            let mut idx: Vec<usize> = (0..poset.len()).collect();
            if n >= 4 && idx.len() > 200 {
                idx.shuffle(&mut rng);
                idx.truncate(200);
            }
            let law_ok = idx.iter().all(|&x| {
                let l = n - poset.rank(x);
                covers_up(&ctx, poset.label(x)).len() == l * s + l * l.saturating_sub(1) / 2 * g
            });
            if !law_ok {
                failures.covers.push(what.clone());
            }

            counts.order += 1;
            let pairs: Vec<(usize, usize)> = if n <= 3 {
                (0..poset.len())
                    .flat_map(|x| (0..poset.len()).map(move |y| (x, y)))
                    .collect()
            } else {
                (0..2000)
                    .map(|_| {
                        let x = *idx.choose(&mut rng).expect("nonempty");
                        let y = *idx.choose(&mut rng).expect("nonempty");
                        (x, y)
                    })
                    .collect()
            };
            let order_ok = pairs.iter().all(|&(x, y)| {
                leq(&ctx, poset.label(x), poset.label(y)).ok() == Some(poset.leq(x, y))
            });
            if !order_ok {
                failures.order.push(what.clone());
            }

            if s > 0 {
                counts.whitney += 1;
                let ranks = poset.whitney_ranks();
                let series = whitney_hilbert(n, g, s)?;
                let mut ok = true;
                for r in 0..=n {
                    let w = BigInt::from(ranks.get(&r).copied().unwrap_or(0));
                    let reps: BigInt = rep_decomposition(&ctx, r)?
                        .iter()
                        .map(|x| x.induced_dim.clone())
                        .sum();
                    ok &= series.coeff(r) == w && reps == w;
                }
                if !ok {
                    failures.whitney.push(what.clone());
                }
            }

            if n <= 3 {
                counts.orbits += 1;
                let brute: BTreeSet<Vec<usize>> =
                    orbits_bruteforce(&ctx, &poset).into_iter().collect();
                let fibers: BTreeSet<Vec<usize>> =
                    label_fibers(&ctx, &poset).into_values().collect();
                if brute != fibers {
                    failures.orbits.push(what.clone());
                }

                counts.intervals += 1;
                let mut ok = true;
                for x in 0..poset.len() {
                    let iv = poset.interval(poset.bottom(), x)?;
                    ok &= iv.char_poly_bruteforce(poset.rank(x))?
                        == interval_char_poly(&ctx, poset.label(x))?;
                }
                if !ok {
                    failures.intervals.push(what.clone());
                }
            }
        }
    }
    report.push(
        "charpoly brute == factored",
        failures.charpoly.is_empty(),
        summary(counts.charpoly, &failures.charpoly),
    );
    report.push(
        "covering-count law",
        failures.covers.is_empty(),
        summary(counts.covers, &failures.covers),
    );
    report.push(
        "leq == cover reachability",
        failures.order.is_empty(),
        summary(counts.order, &failures.order),
    );
    report.push(
        "Whitney series and representation sums",
        failures.whitney.is_empty(),
        summary(counts.whitney, &failures.whitney),
    );
    report.push(
        "wreath orbits == label fibers",
        failures.orbits.is_empty(),
        summary(counts.orbits, &failures.orbits),
    );
    report.push(
        "lower intervals factor",
        failures.intervals.is_empty(),
        summary(counts.intervals, &failures.intervals),
    );

    let mut bad = Vec::new();
    for n in 1..=cfg.max_n {
        for gs in 1..=6 {
            if dowling_homology_dim(n, gs) != top_mobius_abs(n, gs, cfg.cap)? {
                bad.push(format!("D_{n}(Z{gs})"));
            }
        }
    }
    report.push(
        "Dowling top homology",
        bad.is_empty(),
        summary(cfg.max_n * 6, &bad),
    );

    let (total, bad) = field_counts(cfg.max_n.min(3))?;
    report.push(
        "orbit configuration counts == motive",
        bad.is_empty(),
        summary(total, &bad),
    );

    let mut bad = Vec::new();
    let mut total = 0;
    for n in 0..=6usize {
        for (g, s) in [(2, 2), (2, 4), (6, 6), (4, 4)] {
            total += 1;
            let x = BigInt::from(0);
            if motive_eval(&x, n, g, s) != euler_binomial_form(&x, n, g, s) {
                bad.push(format!("n={n} |G|={g} |S|={s}"));
            }
        }
    }
    for xc in -4i64..=5 {
        for n in 0..=4usize {
            for g in [1usize, 2] {
                total += 1;
                let x = BigInt::from(xc);
                if motive_eval(&x, n, g, 3) != euler_binomial_form(&x, n, g, 3) {
                    bad.push(format!("xc={xc} n={n} |G|={g}"));
                }
            }
        }
    }
    report.push(
        "Euler characteristic identities",
        bad.is_empty(),
        summary(total, &bad),
    );

    let mut bad = Vec::new();
    let mut total = 0;
    let builders: [(&str, fn(usize) -> Result<FiniteGSpace>); 3] = [
        ("F_q^x inversion", layers::multiplicative_inversion),
        ("F_q mu_2", |q| layers::affine_scaling(q, 2)),
        ("F_q mu_3", |q| layers::affine_scaling(q, 3)),
    ];
    for (label, build) in builders {
        for n in 1..=cfg.max_n.min(3) {
            total += 1;
            let (q, r) = layers::verify_incidence_escalating(n, layers::INCIDENCE_PRIMES, build)?;
            if r.status != layers::IncidenceStatus::Confirmed {
                bad.push(format!("{label} n={n} q={q}: {:?}", r.status));
            }
        }
    }
    report.push(
        "layer incidence == poset order",
        bad.is_empty(),
        summary(total, &bad),
    );

    let mut bad = Vec::new();
    let pt = action_by_name("trivial1", group_by_name("Z2")?)?;
    for n in 2..=cfg.max_n {
        let ctx = DowlingContext::new(n, pt.clone())?.with_allowed_singleton_orbits([])?;
        let p = enumerate_poset(&ctx)?;
        if p.atoms().len() != n * (n - 1) {
            bad.push(format!("DD_{n}(Z2) atoms"));
        }
    }
    report.push(
        "type D atoms",
        bad.is_empty(),
        summary(cfg.max_n.saturating_sub(1), &bad),
    );
    Ok(report)
}

#[derive(Default)]
struct Families<T> {
    charpoly: T,
    covers: T,
    order: T,
    whitney: T,
    orbits: T,
    intervals: T,
}

fn summary(total: usize, bad: &[String]) -> String {
    if bad.is_empty() {
        format!("{total} cases")
    } else {
        format!("{} of {total} failed: {}", bad.len(), bad.join("; "))
    }
}

fn top_mobius_abs(n: usize, gs: usize, cap: usize) -> Result<BigInt> {
    let group = group_by_name(&format!("Z{gs}"))?;
    let ctx = DowlingContext::new(n, action_by_name("trivial1", group)?)?.with_cap(cap);
    let p = enumerate_poset(&ctx)?;
    let mu = p.mobius_table();
    let top = p.rank_level(n)[0];
    Ok(BigInt::from(mu.get(top).unsigned_abs()))
}

fn field_counts(max_n: usize) -> Result<(usize, Vec<String>)> {
    let mut spaces: Vec<(String, FiniteGSpace)> = Vec::new();
    for d in [2, 3] {
        for q in [5, 7, 13] {
            if (q - 1) % d == 0 {
                spaces.push((format!("F_{q} mu_{d}"), layers::affine_scaling(q, d)?));
            }
        }
    }
    for q in [7, 11, 13] {
        spaces.push((
            format!("F_{q}^x inversion"),
            layers::multiplicative_inversion(q)?,
        ));
    }
    for (q, d) in [(7, 2), (7, 3), (13, 4)] {
        spaces.push((
            format!("F_{q}^x mu_{d} translation"),
            layers::multiplicative_translation(q, d)?,
        ));
    }
    let mut bad = Vec::new();
    let mut total = 0;
    for (label, space) in &spaces {
        for n in 1..=max_n {
            total += 1;
            let brute = orbit_config_count(space, n, space.singular())?;
            let formula = motive_eval(
                &BigInt::from(space.n_points()),
                n,
                space.group().order(),
                space.singular().len(),
            );
            if BigInt::from(brute) != formula {
                bad.push(format!("{label} n={n}: {brute} vs {formula}"));
            }
        }
    }
    Ok((total, bad))
}
