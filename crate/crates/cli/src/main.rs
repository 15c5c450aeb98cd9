use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use dowlingkit::dowling::{enumerate_poset, DowlingContext, DEFAULT_CAP};
use dowlingkit::fixtures::group_by_name;
use dowlingkit::invariants::{rep_decomposition, whitney_hilbert};
use dowlingkit::layers::{self, FiniteGSpace};
use dowlingkit::registry::{action_registry, charpoly_registry, space_registry, SpaceParams};
use dowlingkit::verify::{self, VerifyConfig};
use dowlingkit::wreath::{label_fibers, orbits_bruteforce, quotient};
use dowlingkit::GSetAction;

#[derive(Parser, Debug)]
#[command(
    name = "dowlingkit",
    version,
    about = "S-Dowling posets and orbit configuration spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// Group: Z<d>
    #[arg(long, global = true, default_value = "Z2")]
    group: String,
    /// Named action or path to a JSON G-set
    #[arg(long, global = true, default_value = "trivial2")]
    action: String,
    /// Named space or path to a JSON G-space
    #[arg(long, global = true, default_value = "gm")]
    space: String,
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Field size for space fixtures (prime)
    #[arg(long, global = true, default_value_t = 7)]
    q: usize,
    /// Order of the roots of unity for space fixtures
    #[arg(long, global = true, default_value_t = 2)]
    d: usize,
    /// Use inversion on the multiplicative group
    #[arg(long, global = true)]
    ginv: bool,
    /// Comma-separated points whose orbits are removed (T); default all of S
    #[arg(long, global = true)]
    remove: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Size cap for enumeration; overrides DOWLINGKIT_CAP
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Rank for `reps`; all ranks when omitted
    #[arg(long, global = true)]
    r: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the elements of the poset
    Enumerate,
    /// Factored and brute-force characteristic polynomials
    Charpoly,
    /// Wreath-product orbits and their labeled partitions
    Orbits,
    /// Whitney homology dimensions
    Whitney,
    /// Dimensions of the induced representations in Whitney homology
    Reps,
    /// Hasse diagram
    Hasse,
    /// Point counts of orbit configuration spaces against the motive
    Count,
    /// Run the full cross-validation suite
    Verify,
    /// List the built-in fixtures
    Fixtures,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn cap(opts: &Opts) -> Result<usize> {
    if let Some(c) = opts.cap {
        return Ok(c);
    }
    match std::env::var("DOWLINGKIT_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("DOWLINGKIT_CAP={v:?} is not an integer")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn read_json(path: &str) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

fn looks_like_path(s: &str) -> bool {
    s.ends_with(".json") || Path::new(s).is_file()
}

fn build_action(opts: &Opts) -> Result<GSetAction> {
    if looks_like_path(&opts.action) {
        let text = read_json(&opts.action)?;
        return GSetAction::from_json(&text).with_context(|| format!("parsing {}", opts.action));
    }
    let group = group_by_name(&opts.group)?;
    Ok(action_registry().get(&opts.action)?.build(group)?)
}

fn build_space(opts: &Opts) -> Result<FiniteGSpace> {
    if looks_like_path(&opts.space) {
        let text = read_json(&opts.space)?;
        return FiniteGSpace::from_json(&text).with_context(|| format!("parsing {}", opts.space));
    }
    let params = SpaceParams {
        q: opts.q,
        d: opts.d,
        ginv: opts.ginv,
    };
    Ok(space_registry().get(&opts.space)?.build(&params)?)
}

fn n_of(opts: &Opts) -> Result<usize> {
    match opts.n {
        Some(0) => bail!("--n must be at least 1"),
        Some(n) => Ok(n),
        None => bail!("--n is required"),
    }
}

fn split_labels(spec: &str) -> Vec<String> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty() && *s != "none")
        .map(String::from)
        .collect()
}

fn build_context(opts: &Opts) -> Result<DowlingContext> {
    let mut ctx = DowlingContext::new(n_of(opts)?, build_action(opts)?)?.with_cap(cap(opts)?);
    if let Some(spec) = &opts.remove {
        ctx = ctx.with_allowed_points(&split_labels(spec))?;
    }
    Ok(ctx)
}

fn orbit_names(ctx: &DowlingContext) -> Vec<String> {
    (0..ctx.orbit_data().n_orbits())
        .map(|o| ctx.orbit_name(o).to_string())
        .collect()
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn emit_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: &Cli) -> Result<bool> {
    let opts = &cli.opts;
    match cli.command {
        Command::Enumerate => enumerate(opts),
        Command::Charpoly => charpoly(opts),
        Command::Orbits => orbits(opts),
        Command::Whitney => whitney(opts),
        Command::Reps => reps(opts),
        Command::Hasse => hasse(opts),
        Command::Count => count(opts),
        Command::Verify => verify_all(opts),
        Command::Fixtures => fixtures(opts),
    }
}

fn enumerate(opts: &Opts) -> Result<bool> {
    let ctx = build_context(opts)?;
    let p = enumerate_poset(&ctx)?;
    let elements: Vec<String> = p.labels().iter().map(|e| ctx.render(e)).collect();
    match opts.format {
        Format::Json => emit_json(&json!({
            "n": ctx.n(),
            "count": p.len(),
            "rank_sizes": p.rank_sizes(),
            "elements": elements,
            "rank": p.ranks(),
        })),
        _ => {
            println!("elements: {}", p.len());
            println!("rank sizes: {:?}", p.rank_sizes());
            for (x, e) in elements.iter().enumerate() {
                println!("{}\t{e}", p.rank(x));
            }
        }
    }
    Ok(true)
}

fn charpoly(opts: &Opts) -> Result<bool> {
    let ctx = build_context(opts)?;
    let methods = charpoly_registry();
    let brute = methods.get("brute")?.compute(&ctx)?;
    let factored = match methods.get("factored")?.compute(&ctx) {
        Ok(p) => Some(p),
        Err(dowlingkit::Error::Unsupported(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let ok = factored.as_ref().is_none_or(|f| *f == brute);
    match opts.format {
        Format::Json => emit_json(&json!({
            "factored": factored.as_ref().map(|f| f.to_string()),
            "factored_coeffs": factored.as_ref().map(|f| f.to_json()),
            "brute": brute.to_string(),
            "brute_coeffs": brute.to_json(),
            "match": factored.as_ref().map(|_| ok),
        })),
        _ => {
            match &factored {
                Some(f) => println!("factored: {f}"),
                None => println!("factored: none (subposet has no product formula)"),
            }
            println!("brute:    {brute}");
            if factored.is_some() {
                println!("{}", verdict(ok));
            }
        }
    }
    Ok(ok)
}

fn orbits(opts: &Opts) -> Result<bool> {
    let ctx = build_context(opts)?;
    let p = enumerate_poset(&ctx)?;
    let names = orbit_names(&ctx);
    let brute: std::collections::BTreeSet<Vec<usize>> =
        orbits_bruteforce(&ctx, &p).into_iter().collect();
    let mut fibers: Vec<_> = label_fibers(&ctx, &p).into_iter().collect();
    fibers.sort_by(|a, b| (a.0.rank(), &a.0).cmp(&(b.0.rank(), &b.0)));
    let ok = brute == fibers.iter().map(|(_, f)| f.clone()).collect();
    match opts.format {
        Format::Json => {
            let rows: Vec<Value> = fibers
                .iter()
                .map(|(l, f)| json!({"label": l.render(&names), "rank": l.rank(), "size": f.len()}))
                .collect();
            emit_json(&json!({"orbits": rows, "brute_orbits": brute.len(), "match": ok}));
        }
        Format::Dot => {
            let q = quotient(&ctx, &p)?;
            print!("{}", q.to_dot(|l| l.render(&names)));
        }
        Format::Text => {
            println!("orbits: {}", fibers.len());
            for (l, f) in &fibers {
                println!("{}\t{}\t{}", l.rank(), l.render(&names), f.len());
            }
            println!("brute-force orbits: {} {}", brute.len(), verdict(ok));
        }
    }
    Ok(ok)
}

fn whitney(opts: &Opts) -> Result<bool> {
    let ctx = build_context(opts)?;
    let p = enumerate_poset(&ctx)?;
    let ranks = p.whitney_ranks();
    let series = if ctx.is_filtered() {
        None
    } else {
        whitney_hilbert(ctx.n(), ctx.group().order(), ctx.action().n_points()).ok()
    };
    let ok = series.as_ref().is_none_or(|s| {
        (0..=ctx.n()).all(|r| s.coeff(r) == ranks.get(&r).copied().unwrap_or(0).into())
    });
    match opts.format {
        Format::Json => emit_json(&json!({
            "mobius_ranks": ranks.values().collect::<Vec<_>>(),
            "series": series.as_ref().map(|s| s.to_json()),
            "match": series.as_ref().map(|_| ok),
        })),
        _ => {
            let list: Vec<String> = ranks.values().map(u64::to_string).collect();
            println!("|mu| sums by rank: {}", list.join(", "));
            match &series {
                Some(s) => println!("series: {s}\n{}", verdict(ok)),
                None => println!("series: none (closed form needs nonempty S and the full poset)"),
            }
        }
    }
    Ok(ok)
}

fn reps(opts: &Opts) -> Result<bool> {
    let ctx = build_context(opts)?;
    let p = enumerate_poset(&ctx)?;
    let ranks = p.whitney_ranks();
    let names = orbit_names(&ctx);
    let rs: Vec<usize> = match opts.r {
        Some(r) => vec![r],
        None => (0..=ctx.n()).collect(),
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for r in rs {
        let summands = rep_decomposition(&ctx, r)?;
        let total: BigInt = summands.iter().map(|s| s.induced_dim.clone()).sum();
        let want = BigInt::from(ranks.get(&r).copied().unwrap_or(0));
        ok &= total == want;
        rows.push((r, summands, total, want));
    }
    match opts.format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(r, s, total, want)| {
                    json!({
                        "r": r,
                        "summands": s.iter().map(|x| json!({
                            "label": x.label.render(&names),
                            "stabilizer_order": x.stabilizer_order.to_string(),
                            "inner_dim": x.inner_dim.to_string(),
                            "induced_dim": x.induced_dim.to_string(),
                        })).collect::<Vec<_>>(),
                        "total": total.to_string(),
                        "mobius": want.to_string(),
                    })
                })
                .collect();
            emit_json(&json!({"ranks": v, "match": ok}));
        }
        _ => {
            for (r, s, total, want) in &rows {
                println!("r = {r}");
                for x in s {
                    println!(
                        "  {}\tstab {}\tinner {}\tinduced {}",
                        x.label.render(&names),
                        x.stabilizer_order,
                        x.inner_dim,
                        x.induced_dim
                    );
                }
                println!(
                    "  total {total}, |mu| sum {want} {}",
                    verdict(total == want)
                );
            }
        }
    }
    Ok(ok)
}

fn hasse(opts: &Opts) -> Result<bool> {
    let ctx = build_context(opts)?;
    let p = enumerate_poset(&ctx)?;
    match opts.format {
        Format::Json => emit_json(&p.to_json_value(|e| ctx.render(e))),
        _ => print!("{}", p.to_dot(|e| ctx.render(e))),
    }
    Ok(true)
}

fn count(opts: &Opts) -> Result<bool> {
    let space = build_space(opts)?;
    let n = n_of(opts)?;
    let removed: Vec<usize> = match &opts.remove {
        None => space.singular().to_vec(),
        Some(spec) => split_labels(spec)
            .iter()
            .map(|l| {
                space
                    .action()
                    .point_index(l)
                    .with_context(|| format!("unknown point {l:?}"))
            })
            .collect::<Result<_>>()?,
    };
    let brute = layers::orbit_config_count(&space, n, &removed)?;
    let formula = layers::predicted_count(&space, n, &removed)?;
    let ok = BigInt::from(brute) == formula;
    match opts.format {
        Format::Json => emit_json(&json!({
            "points": space.n_points(),
            "group_order": space.group().order(),
            "singular": space.singular().len(),
            "removed": removed.len(),
            "n": n,
            "brute": brute,
            "formula": formula.to_string(),
            "match": ok,
        })),
        _ => println!("brute={brute} formula={formula} {}", verdict(ok)),
    }
    Ok(ok)
}

fn verify_all(opts: &Opts) -> Result<bool> {
    let cfg = VerifyConfig {
        max_n: opts.n.unwrap_or(4),
        seed: opts.seed,
        cap: cap(opts)?,
    };
    let report = verify::run(&cfg)?;
    match opts.format {
        Format::Json => emit_json(&serde_json::to_value(&report)?),
        _ => {
            for c in &report.checks {
                println!(
                    "{} {} ({})",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
        }
    }
    Ok(report.all_passed())
}

fn fixtures(opts: &Opts) -> Result<bool> {
    let actions = action_registry();
    let spaces = space_registry();
    let methods = charpoly_registry();
    match opts.format {
        Format::Json => emit_json(&json!({
            "actions": actions.iter().map(|a| json!({"name": a.name(), "description": a.description()})).collect::<Vec<_>>(),
            "spaces": spaces.iter().map(|a| json!({"name": a.name(), "description": a.description()})).collect::<Vec<_>>(),
            "charpoly_methods": methods.names(),
        })),
        _ => {
            println!("actions:");
            for a in actions.iter() {
                println!("  {:<14}{}", a.name(), a.description());
            }
            println!("spaces:");
            for s in spaces.iter() {
                println!("  {:<14}{}", s.name(), s.description());
            }
            println!("charpoly methods: {}", methods.names().join(", "));
        }
    }
    Ok(true)
}
