//! The `bent3` command-line tool.

pub mod format;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use bent3::analysis::{check_bent, check_bent_with, Regularity};
use bent3::families::{
    exceptionality_check, expand_family, make_binomial_general, Exceptional, ExpandableFamily,
    Family, FamilySpec, Sign,
};
use bent3::gf::{parse_modulus, DEFAULT_MAX_DEGREE, HARD_MAX_DEGREE};
use bent3::mm::{
    build_v_binomial, build_v_trinomial, check_prop3, check_thm2, d2_vanishes_on, MMOutcome,
    Subspace,
};
use bent3::spectrum::{spectrum_fast, spectrum_naive, walsh_at};
use bent3::transcript::Transcript;
use bent3::{FieldCtx, FieldElem, TernaryFn};
use clap::{Args, Parser, Subcommand};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use format::{
    read_certificate, read_table, spectrum_sha256, table_sha256, write_certificate, write_spectrum,
    write_table,
};

#[derive(Debug, Parser)]
#[command(
    name = "bent3",
    version,
    about = "Ternary bent functions from binomials and trinomials"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Allow n above the table cap, up to the hard limit.
    #[arg(long, global = true)]
    pub force_large: bool,
    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on n; overridden by --force-large.
    #[arg(long, global = true, env = "BENT3_MAX_N")]
    pub max_n: Option<usize>,
    /// More log output (repeat for debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

impl GlobalOpts {
    pub fn max_degree(&self) -> usize {
        if self.force_large {
            HARD_MAX_DEGREE
        } else {
            self.max_n.unwrap_or(DEFAULT_MAX_DEGREE)
        }
    }

    fn field(&self, n: usize, modulus: Option<&str>) -> Result<Arc<FieldCtx>> {
        let modulus = modulus.map(parse_modulus).transpose()?;
        Ok(Arc::new(FieldCtx::with_max_degree(
            n,
            modulus.as_deref(),
            self.max_degree(),
        )?))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family member, write its table and certificate.
    Construct(ConstructArgs),
    /// Export the Walsh spectrum of a table.
    Spectrum(SpectrumArgs),
    /// Recompute the certificate of a table, with sampled cross-checks.
    Verify(VerifyArgs),
    /// Run the Maiorana-McFarland criteria on a table.
    MmCheck(MmCheckArgs),
    /// Expand a family into its four-variable form over GF(3^k).
    Expand(ExpandArgs),
    /// Sweep all nonsquare a1 and both signs of the general binomial.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// binomial-general, binomial-k3mod4, trinomial, t7-case1, t7-case3, t8 or baseline.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub k: usize,
    /// Nonsquare coefficient, `g^<k>` or `t:<trits>`.
    #[arg(long)]
    pub a1: Option<String>,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub sign: Sign,
    /// Comma-separated trits, constant term first.
    #[arg(long)]
    pub modulus: Option<String>,
    /// Table file (default `<family>-k<k>.tbf`).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Certificate file (default: the table path with `.cert` appended).
    #[arg(long)]
    pub cert: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub table: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Use the direct O(9^n) sum instead of the fast transform.
    #[arg(long)]
    pub naive: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub table: PathBuf,
    /// Where to write the recomputed certificate (default stdout).
    #[arg(long)]
    pub cert: Option<PathBuf>,
    /// A certificate whose table hash must match.
    #[arg(long)]
    pub against: Option<PathBuf>,
    /// Points at which the fast spectrum is checked against a direct sum.
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct MmCheckArgs {
    #[arg(long)]
    pub table: PathBuf,
    /// `lemma1`, `lemma2`, or a file listing a basis of V, one element per line.
    #[arg(long = "v")]
    pub v_source: String,
    #[arg(long)]
    pub a1: Option<String>,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub sign: Sign,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// t3, t7-case1, t7-case3 or t8.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub k: usize,
    /// Further values of k whose expansion must coincide with this one.
    #[arg(long, value_delimiter = ',')]
    pub compare: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// 4 or 8.
    #[arg(long)]
    pub n: usize,
    /// Restrict to this many seeded nonsquares instead of all of them.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// How a command ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Failed
        }
    }
}

/// 0 verified, 1 property fails, 2 usage or parameter error.
pub fn exit_code(result: &Result<Status>) -> u8 {
    match result {
        Ok(Status::Verified) => 0,
        Ok(Status::Failed) => 1,
        Err(e) => match e.downcast_ref::<bent3::Error>() {
            Some(bent3::Error::Inconsistency(_)) => 1,
            _ => 2,
        },
    }
}

pub fn run(cli: Cli) -> ExitCode {
    let result = dispatch(&cli);
    if let Err(e) = &result {
        eprintln!("error: {e:#}");
    }
    ExitCode::from(exit_code(&result))
}

fn dispatch(cli: &Cli) -> Result<Status> {
    if let Some(t) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let g = &cli.global;
    match &cli.command {
        Command::Construct(a) => cmd_construct(g, a),
        Command::Spectrum(a) => cmd_spectrum(g, a),
        Command::Verify(a) => cmd_verify(g, a),
        Command::MmCheck(a) => cmd_mm_check(g, a),
        Command::Expand(a) => cmd_expand(a),
        Command::Sweep(a) => cmd_sweep(g, a),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_table(g: &GlobalOpts, path: &Path) -> Result<TernaryFn> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_table(&text, g.max_degree()).with_context(|| format!("parsing {}", path.display()))
}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(bent3::Error::Domain(msg.into()).into())
}

fn parse_family(name: &str, k: usize, a1: Option<FieldElem>, sign: Sign) -> Result<FamilySpec> {
    let family = match name {
        "binomial-general" | "binomial" => {
            let Some(a1) = a1 else {
                return usage("--a1 is required for binomial-general");
            };
            Family::BinomialGeneral { a1, sign }
        }
        "binomial-k3mod4" | "t3" => Family::BinomialK3Mod4,
        "trinomial" => Family::Trinomial { sign },
        "baseline" => Family::Baseline,
        other => Family::Exceptional(
            other
                .parse::<Exceptional>()
                .map_err(|_| anyhow!(bent3::Error::Domain(format!("unknown family {other:?}"))))?,
        ),
    };
    Ok(FamilySpec::new(family, k))
}

pub fn cmd_construct(g: &GlobalOpts, a: &ConstructArgs) -> Result<Status> {
    if a.k == 0 {
        return usage("k must be positive");
    }
    // the field degree does not depend on a1, so build it from a placeholder
    let n = parse_family(&a.family, a.k, Some(FieldElem::ONE), a.sign)?.field_degree();
    let ctx = g.field(n, a.modulus.as_deref())?;
    let a1 = a.a1.as_deref().map(|s| ctx.parse_elem(s)).transpose()?;
    let spec = parse_family(&a.family, a.k, a1, a.sign)?;
    log::info!("constructing {spec} over GF(3^{n})");
    let f = spec.build(&ctx)?;
    let cert = check_bent(&f);

    let out = a
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}-k{}.tbf", a.family, a.k)));
    let cert_path = a.cert.clone().unwrap_or_else(|| {
        let mut s = out.clone().into_os_string();
        s.push(".cert");
        PathBuf::from(s)
    });
    emit(Some(&out), &write_table(&f))?;
    emit(Some(&cert_path), &write_certificate(&f, &cert))?;
    println!(
        "{spec}: bent={} regularity={} degree={}",
        cert.is_bent, cert.regularity, cert.degree
    );
    Ok(Status::from_bool(cert.is_bent))
}

pub fn cmd_spectrum(g: &GlobalOpts, a: &SpectrumArgs) -> Result<Status> {
    let f = load_table(g, &a.table)?;
    let spec = if a.naive {
        spectrum_naive(&f, g.force_large)?
    } else {
        spectrum_fast(&f)
    };
    emit(a.out.as_deref(), &write_spectrum(&spec))?;
    Ok(Status::Verified)
}

pub fn cmd_verify(g: &GlobalOpts, a: &VerifyArgs) -> Result<Status> {
    let f = load_table(g, &a.table)?;
    let spectrum = spectrum_fast(&f);
    let mut cert = check_bent_with(&f, &spectrum);

    let mut t = Transcript::new();
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let size = f.ctx().size();
    let mismatch = (0..a.samples)
        .map(|_| FieldElem::from_index(rng.gen_range(0..size) as u32))
        .find(|&b| walsh_at(&f, b) != spectrum.at(b));
    match mismatch {
        None => t.pass("walsh_samples", Some(format!("samples={}", a.samples))),
        Some(b) => t.fail("walsh_samples", format!("b={}", b.index())),
    }
    if let Some(path) = &a.against {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let rec = read_certificate(&text)?;
        let hash = table_sha256(f.table());
        t.record(
            "table_sha256",
            rec.table_sha256 == hash,
            format!("expected={} found={hash}", rec.table_sha256),
        );
    }
    let ok = cert.is_bent && t.all_pass();
    cert.transcripts.push(t);
    emit(a.cert.as_deref(), &write_certificate(&f, &cert))?;
    Ok(Status::from_bool(ok))
}

fn read_basis(ctx: &FieldCtx, path: &Path) -> Result<Subspace> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let basis = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| ctx.parse_elem(l))
        .collect::<bent3::Result<Vec<_>>>()?;
    Ok(Subspace::from_basis(ctx, basis)?)
}

pub fn cmd_mm_check(g: &GlobalOpts, a: &MmCheckArgs) -> Result<Status> {
    let f = load_table(g, &a.table)?;
    let ctx = f.ctx();
    let n = ctx.n();
    let mut t = Transcript::new();
    let outcome: MMOutcome = match a.v_source.as_str() {
        "lemma1" => {
            if n % 4 != 0 {
                return usage(format!("lemma1 needs n divisible by 4, got n = {n}"));
            }
            let Some(a1) = &a.a1 else {
                return usage("lemma1 needs --a1");
            };
            let b = build_v_binomial(ctx, n / 4, ctx.parse_elem(a1)?, a.sign)?;
            t.extend(b.transcript);
            check_thm2(&f, &b.v)?
        }
        "lemma2" => {
            if n % 2 != 0 {
                return usage(format!("lemma2 needs even n, got n = {n}"));
            }
            let k = n / 2;
            let b = build_v_trinomial(ctx, k, a.sign)?;
            t.extend(b.transcript);
            if k % 2 == 1 {
                check_prop3(&f, &b.v, &Subspace::subfield(ctx, k)?)?
            } else {
                check_thm2(&f, &b.v)?
            }
        }
        path => {
            let v = read_basis(ctx, Path::new(path))?;
            if 2 * v.dim() != n {
                return usage(format!("V has dimension {}, expected {}", v.dim(), n / 2));
            }
            if v.meets_trivially(ctx, &v.orthogonal(ctx)) {
                check_thm2(&f, &v)?
            } else {
                // completed class: a bent f with second derivatives vanishing on V
                let cert = check_bent(&f);
                let mut pt = Transcript::new();
                pt.record("bent", cert.is_bent, "f is not bent");
                let (affine, d2) = d2_vanishes_on(&f, &v);
                pt.extend(d2);
                MMOutcome {
                    holds: cert.is_bent && affine,
                    witness: None,
                    transcript: pt,
                }
            }
        }
    };
    t.extend(outcome.transcript);
    let ok = outcome.holds && t.all_pass();
    let mut text = t.to_string();
    text.push_str(if ok { "RESULT PASS\n" } else { "RESULT FAIL\n" });
    emit(a.out.as_deref(), &text)?;
    Ok(Status::from_bool(ok))
}

fn parse_expandable(name: &str) -> Result<ExpandableFamily> {
    if name == "t3" || name == "binomial-k3mod4" {
        return Ok(ExpandableFamily::T3);
    }
    Ok(ExpandableFamily::Exceptional(name.parse::<Exceptional>()?))
}

pub fn cmd_expand(a: &ExpandArgs) -> Result<Status> {
    let which = parse_expandable(&a.family)?;
    let p = expand_family(which, a.k)?;
    println!("k={} f=Tr_k({p})", a.k);
    if a.compare.is_empty() {
        return Ok(Status::Verified);
    }
    let mut ks = vec![a.k];
    ks.extend(&a.compare);
    let same = exceptionality_check(which, &ks)?;
    println!("independent_of_k={same}");
    Ok(Status::from_bool(same))
}

/// One sweep row: the parameters and what the certificate says.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub a1_log: u64,
    pub sign: Sign,
    pub bent: bool,
    pub regularity: Regularity,
    pub degree: usize,
    pub spectrum_sha256: String,
}

pub fn sweep_rows(ctx: &Arc<FieldCtx>, a1s: &[FieldElem]) -> Result<Vec<SweepRow>> {
    let k = ctx.n() / 4;
    let params: Vec<(FieldElem, Sign)> = a1s
        .iter()
        .flat_map(|&a| [(a, Sign::Plus), (a, Sign::Minus)])
        .collect();
    params
        .into_par_iter()
        .map(|(a1, sign)| {
            let f = make_binomial_general(ctx, k, a1, sign)?;
            let spectrum = spectrum_fast(&f);
            let cert = check_bent_with(&f, &spectrum);
            Ok(SweepRow {
                a1_log: ctx.log_of(a1).expect("a1 is nonzero"),
                sign,
                bent: cert.is_bent,
                regularity: cert.regularity,
                degree: cert.degree,
                spectrum_sha256: spectrum_sha256(&spectrum),
            })
        })
        .collect()
}

pub fn cmd_sweep(g: &GlobalOpts, a: &SweepArgs) -> Result<Status> {
    if a.n != 4 && a.n != 8 {
        bail!(bent3::Error::Domain(format!(
            "sweep supports n = 4 or 8, got {}",
            a.n
        )));
    }
    let ctx = g.field(a.n, None)?;
    // nonsquares are the odd powers of the generator
    let mut logs: Vec<u64> = (1..ctx.order()).step_by(2).collect();
    if let Some(s) = a.samples {
        let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
        let mut picked: Vec<u64> = sample(&mut rng, logs.len(), s.min(logs.len()))
            .into_iter()
            .map(|i| logs[i])
            .collect();
        picked.sort_unstable();
        logs = picked;
    }
    let a1s: Vec<FieldElem> = logs.iter().map(|&l| ctx.exp_of(l)).collect();
    let rows = sweep_rows(&ctx, &a1s)?;

    let mut text = String::new();
    for r in &rows {
        text.push_str(&format!(
            "a1=g^{} sign={} bent={} regularity={} degree={} spectrum_sha256={}\n",
            r.a1_log, r.sign, r.bent, r.regularity, r.degree, r.spectrum_sha256
        ));
    }
    let bent = rows.iter().filter(|r| r.bent).count();
    let regular = rows
        .iter()
        .filter(|r| r.regularity == Regularity::Regular)
        .count();
    let degree4 = rows.iter().filter(|r| r.degree == 4).count();
    text.push_str(&format!(
        "summary n={} rows={} bent={bent} regular={regular} degree4={degree4}\n",
        a.n,
        rows.len()
    ));
    emit(a.out.as_deref(), &text)?;
    Ok(Status::from_bool(
        bent == rows.len() && regular == rows.len(),
    ))
}
