//! The `hilbcoeff` command line: argument parsing, dispatch, and rendering of
//! results as text tables or as a [`ReportDocument`].

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::explorer::{
    buchsbaum_probe, check_e1_bound, check_g1_bounds, check_growth_envelope, explore_lambda, explore_module_lambda,
    polynomial_power_scaling, semigroup_power_scaling, EnvelopeReport, ExplorationReport, SampleSet, SamplerConfig,
    ScalingReport,
};
use crate::groebner::{IdealHandle, Length};
use crate::hilbert::{
    check_identities, e_coeffs, f_coeffs, g_coeffs, hs_value, i_invariant, CoefficientVector, HilbertOracle, IdealPair,
    IdentityReport, ModuleSpec, DEFAULT_N_MAX,
};
use crate::parse::{parse_document, parse_poly_list, CharacteristicChoice, RingDocument};
use crate::report::ReportDocument;
use crate::semigroup::{
    delta_sets, e1_interpolated, e1_via_blowup, minimal_reduction, oversemigroups, DeltaReport, NumericalSemigroup,
    SemigroupIdeal, SemigroupPair, DEFAULT_GAP_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_IDENTITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hilbcoeff", version, about = "Hilbert coefficients of ideals in local rings")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Emit a JSON report instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Characteristic of the coefficient field; overrides the ring document.
    #[arg(long = "char", value_name = "P", global = true)]
    pub characteristic: Option<u64>,
    /// Characteristic used when the ring document does not declare one.
    #[arg(
        long = "default-char",
        env = "HILB_CHAR",
        value_name = "P",
        global = true,
        hide = true
    )]
    pub default_char: Option<u64>,
    /// Maximum number of S-pairs per Gröbner basis computation.
    #[arg(long, value_name = "PAIRS", global = true)]
    pub budget: Option<usize>,
    /// Last n at which a Hilbert function is evaluated.
    #[arg(long, value_name = "N", global = true, default_value_t = DEFAULT_N_MAX)]
    pub nmax: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// ℓ(M/QⁿM), or ℓ(R/Q) when no module is given.
    Length(LengthArgs),
    /// Hilbert coefficients e(Q,M), g^K(Q) or f^K(Q).
    Coeffs(CoeffsArgs),
    /// Check the relations between e, g and f for a pair (K, Q).
    Identities(IdentitiesArgs),
    /// I(Q;M) = ℓ(M/QM) - e_0(Q,M).
    IInvariant(IInvariantArgs),
    /// Sweep sampled parameter ideals.
    #[command(subcommand)]
    Explore(ExploreCommand),
    /// Numerical semigroup rings.
    #[command(subcommand)]
    Semigroup(SemigroupCommand),
    /// e_0 and e_1 of the powers I^k against the closed formula.
    Scaling(ScalingArgs),
}

#[derive(Debug, Args)]
pub struct LengthArgs {
    #[arg(long, value_name = "FILE")]
    pub ring: PathBuf,
    #[arg(long, value_name = "IDEAL")]
    pub q: String,
    #[arg(long, value_name = "MODULE")]
    pub module: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    E,
    G,
    F,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long, value_name = "FILE")]
    pub ring: PathBuf,
    #[arg(long, value_enum, default_value_t = KindArg::E)]
    pub kind: KindArg,
    #[arg(long, value_name = "IDEAL")]
    pub q: String,
    /// Required for g and f.
    #[arg(long, value_name = "IDEAL")]
    pub k: Option<String>,
    #[arg(long, value_name = "MODULE", default_value = "R")]
    pub module: String,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long, value_name = "FILE", required_unless_present = "gens", conflicts_with = "gens")]
    pub ring: Option<PathBuf>,
    /// Work in the semigroup ring of these generators instead of a ring document.
    #[arg(long, value_delimiter = ',')]
    pub gens: Option<Vec<u32>>,
    #[arg(long, value_name = "IDEAL")]
    pub k: String,
    #[arg(long, value_name = "IDEAL")]
    pub q: String,
}

#[derive(Debug, Args)]
pub struct IInvariantArgs {
    #[arg(long, value_name = "FILE")]
    pub ring: PathBuf,
    #[arg(long, value_name = "IDEAL")]
    pub q: String,
    #[arg(long, value_name = "MODULE", default_value = "R")]
    pub module: String,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, value_name = "FILE")]
    pub ring: PathBuf,
    #[arg(long, value_name = "IDEAL", default_value = "m")]
    pub k: String,
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Nonzero coefficients of the random linear forms.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "1,2,3")]
    pub coeffs: Vec<i64>,
    /// Generators are ℓ^a with a drawn from 1..=max-power.
    #[arg(long, default_value_t = 1)]
    pub max_power: u32,
    /// Explicit parameter ideals; repeatable, replaces sampling.
    #[arg(long, value_name = "IDEAL")]
    pub q: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum ExploreCommand {
    /// Observed g_i^K(Q), or e_i(Q,M) with --module.
    Lambda {
        #[command(flatten)]
        sample: SampleArgs,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, value_name = "MODULE")]
        module: Option<String>,
    },
    /// Observed g_i^K(Q) over parameter ideals inside K.
    Delta {
        #[command(flatten)]
        sample: SampleArgs,
        #[arg(long, default_value_t = 1)]
        i: usize,
    },
    /// Lower and upper bounds on g_1^K(Q), and |e_1| ≤ I(M) with --im.
    Bounds {
        #[command(flatten)]
        sample: SampleArgs,
        /// ℓ(H^j_m(R)) for j = 1..d-1.
        #[arg(long, value_delimiter = ',', required = true)]
        lh: Vec<i64>,
        #[arg(long)]
        im: Option<i64>,
        #[arg(long, value_name = "MODULE", default_value = "R")]
        module: String,
    },
    /// I(Q;R) and the lengths that explain it.
    Probe {
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Two-sided bound on ℓ(M/Q^{n+1}M) - e_0 C(n+r, r).
    Envelope {
        #[arg(long, value_name = "FILE")]
        ring: PathBuf,
        #[arg(long, value_name = "IDEAL")]
        q: String,
        #[arg(long, value_name = "MODULE", default_value = "R")]
        module: String,
        #[arg(long)]
        im: i64,
        #[arg(long, default_value_t = 6)]
        nlast: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum SemigroupCommand {
    /// Gaps, Frobenius number, conductor, multiplicity.
    Info {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
    },
    /// e_1(I, M) by blow-up and by interpolation.
    E1 {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        /// `m` or a list of values.
        #[arg(long, value_name = "IDEAL", default_value = "m")]
        q: String,
        /// `R`, `m`, or a list of values.
        #[arg(long, value_name = "IDEAL", default_value = "R")]
        module: String,
    },
    /// The sets Δ^K and Δ_R over all oversemigroups.
    Delta {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long, value_name = "IDEAL", default_value = "m")]
        k: String,
        #[arg(long, default_value_t = DEFAULT_GAP_CAP)]
        gap_cap: usize,
    },
    /// Every semigroup between S and ℕ.
    Oversemigroups {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_GAP_CAP)]
        gap_cap: usize,
    },
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    #[arg(long, value_name = "FILE", required_unless_present = "gens", conflicts_with = "gens")]
    pub ring: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    pub gens: Option<Vec<u32>>,
    #[arg(long, value_name = "IDEAL", default_value = "m")]
    pub q: String,
    #[arg(long, value_name = "MODULE", default_value = "R")]
    pub module: String,
    #[arg(long, default_value_t = 3)]
    pub kmax: u32,
}

/// What a finished invocation hands back to the process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) | Error::PostulationNotReached { .. } => EXIT_BUDGET,
        Error::Internal(_) => EXIT_IDENTITY,
        _ => EXIT_INPUT,
    }
}

/// Per-invocation state that ends up in the report.
struct Session<'a> {
    global: &'a GlobalArgs,
    inputs: BTreeMap<String, Value>,
    warnings: Vec<String>,
    seed: Option<u64>,
    characteristic: Option<u64>,
}

/// A command's payload, its table rendering, and whether a verified identity
/// failed.
struct Done {
    results: Value,
    text: String,
    failed: Option<String>,
}

impl Done {
    fn ok(results: impl Serialize, text: String) -> Result<Self> {
        Ok(Done {
            results: to_value(results)?,
            text,
            failed: None,
        })
    }
}

fn to_value(v: impl Serialize) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Internal(e.to_string()))
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let wants_json = echo.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                code: EXIT_OK,
                stdout: e.to_string(),
                stderr: String::new(),
            };
        }
        Err(e) => {
            if wants_json {
                let mut doc = ReportDocument::new(echo);
                doc.diagnostics.errors.push(e.kind().to_string());
                doc.diagnostics.errors.push(e.to_string().trim_end().to_string());
                doc.diagnostics.exit_code = EXIT_INPUT;
                return Outcome {
                    code: EXIT_INPUT,
                    stdout: doc.to_json() + "\n",
                    stderr: String::new(),
                };
            }
            return Outcome {
                code: EXIT_INPUT,
                stdout: String::new(),
                stderr: e.render().to_string(),
            };
        }
    };
    execute(&cli, echo)
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli, echo: Vec<String>) -> Outcome {
    let mut session = Session {
        global: &cli.global,
        inputs: BTreeMap::new(),
        warnings: Vec::new(),
        seed: None,
        characteristic: None,
    };
    let result = dispatch(&mut session, &cli.command);
    let mut doc = ReportDocument::new(echo);
    let mut stderr = String::new();
    let mut text = String::new();
    let code = match result {
        Ok(done) => {
            doc.results = done.results;
            text = done.text;
            match done.failed {
                Some(msg) => {
                    doc.diagnostics.errors.push(msg.clone());
                    stderr.push_str(&format!("error: {msg}\n"));
                    EXIT_IDENTITY
                }
                None => EXIT_OK,
            }
        }
        Err(e) => {
            doc.diagnostics.errors.push(e.to_string());
            stderr.push_str(&format!("error: {e}\n"));
            exit_code(&e)
        }
    };
    for w in &session.warnings {
        stderr.push_str(&format!("warning: {w}\n"));
    }
    doc.inputs = session.inputs;
    doc.diagnostics.warnings = session.warnings;
    doc.diagnostics.seed = session.seed;
    doc.diagnostics.characteristic = session.characteristic;
    doc.diagnostics.budget_exhausted = code == EXIT_BUDGET;
    doc.diagnostics.exit_code = code;
    if cli.global.json {
        Outcome {
            code,
            stdout: doc.to_json() + "\n",
            stderr: String::new(),
        }
    } else {
        Outcome {
            code,
            stdout: text,
            stderr,
        }
    }
}

impl Session<'_> {
    fn load(&mut self, path: &Path) -> Result<RingDocument> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let choice = CharacteristicChoice {
            force: self.global.characteristic,
            fallback: self.global.default_char,
        };
        let mut doc = parse_document(&text, choice)?;
        if let Some(b) = self.global.budget {
            let ring = Arc::try_unwrap(doc.ring).unwrap_or_else(|a| (*a).clone());
            doc.ring = Arc::new(ring.with_pair_budget(b));
        }
        self.characteristic = Some(doc.ring.poly_ring().field().characteristic() as u64);
        self.inputs.insert("ring".into(), Value::from(doc.to_text()));
        Ok(doc)
    }

    /// `m`, a named ideal of the document, or an inline generator list.
    fn ideal(&mut self, doc: &RingDocument, key: &str, spec: &str) -> Result<IdealHandle> {
        let spec = spec.trim();
        let ideal = if spec == "m" {
            IdealHandle::maximal(&doc.ring)
        } else if let Some(gens) = doc.ideal(spec) {
            IdealHandle::new(&doc.ring, gens.to_vec())?
        } else {
            let pr = doc.ring.poly_ring();
            let bare_name = !spec.is_empty() && spec.chars().all(|c| c.is_alphanumeric() || c == '_');
            let starts_alpha = spec.chars().next().is_some_and(|c| c.is_alphabetic());
            if bare_name && starts_alpha && !pr.names().iter().any(|v| v == spec) {
                return Err(Error::UnknownIdeal(spec.to_string()));
            }
            IdealHandle::new(&doc.ring, parse_poly_list(spec, pr)?)?
        };
        self.inputs.insert(key.into(), Value::from(describe(&ideal)));
        Ok(ideal)
    }

    /// `R`, `R/<ideal>`, or `<ideal>`.
    fn module(&mut self, doc: &RingDocument, spec: &str) -> Result<ModuleSpec> {
        let spec = spec.trim();
        let m = if spec == "R" {
            self.inputs.insert("module".into(), Value::from("R"));
            return Ok(ModuleSpec::Ring);
        } else if let Some(rest) = spec.strip_prefix("R/") {
            ModuleSpec::Quotient(self.ideal(doc, "module_ideal", rest)?)
        } else {
            ModuleSpec::Ideal(self.ideal(doc, "module_ideal", spec)?)
        };
        self.inputs.insert("module".into(), Value::from(spec));
        Ok(m)
    }

    fn semigroup(&mut self, gens: &[u32]) -> Result<NumericalSemigroup> {
        let s = NumericalSemigroup::new(gens)?;
        self.inputs
            .insert("semigroup".into(), Value::from(s.generators().to_vec()));
        Ok(s)
    }

    /// `m`, `R` (or `S`), or a list of values.
    fn semigroup_ideal(&mut self, s: &NumericalSemigroup, key: &str, spec: &str) -> Result<SemigroupIdeal> {
        let spec = spec.trim();
        let ideal = match spec {
            "m" => SemigroupIdeal::from_gens(s, s.generators())?,
            "R" | "S" => s.as_ideal(),
            _ => {
                let values = spec
                    .split(',')
                    .map(|v| v.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::UnknownIdeal(spec.to_string()))?;
                SemigroupIdeal::from_gens(s, &values)?
            }
        };
        self.inputs.insert(key.into(), Value::from(ideal.generators()));
        Ok(ideal)
    }

    fn samples(&mut self, doc: &RingDocument, args: &SampleArgs, k: &IdealHandle, inside_k: bool) -> Result<SampleSet> {
        self.inputs.insert("samples".into(), Value::from(args.samples));
        if !args.q.is_empty() {
            let mut ideals = Vec::new();
            for (j, spec) in args.q.iter().enumerate() {
                ideals.push(self.ideal(doc, &format!("q{j}"), spec)?);
            }
            return Ok(SampleSet::explicit(ideals, "explicit ideals"));
        }
        let cfg = SamplerConfig {
            seed: args.seed,
            sample_count: args.samples,
            coefficient_pool: args.coeffs.clone(),
            power_range: 1..=args.max_power,
            require_subset_of_k: inside_k,
            ..Default::default()
        };
        self.seed = Some(args.seed);
        SampleSet::sampled(&doc.ring, &cfg, Some(k))
    }
}

fn describe(q: &IdealHandle) -> String {
    let gens: Vec<String> = q.generators().iter().map(|g| g.to_string()).collect();
    format!("({})", gens.join(", "))
}

fn dispatch(s: &mut Session, command: &Command) -> Result<Done> {
    let n_max = s.global.nmax;
    s.inputs.insert("nmax".into(), Value::from(n_max));
    match command {
        Command::Length(a) => {
            let doc = s.load(&a.ring)?;
            let q = s.ideal(&doc, "q", &a.q)?;
            s.inputs.insert("n".into(), Value::from(a.n));
            let length = match &a.module {
                None if a.n == 1 => q.length()?,
                None => Length::Finite(hs_value(&q, &ModuleSpec::Ring, a.n)?),
                Some(spec) => {
                    let m = s.module(&doc, spec)?;
                    Length::Finite(hs_value(&q, &m, a.n)?)
                }
            };
            Done::ok(json!({ "length": length }), format!("length  {length}\n"))
        }
        Command::Coeffs(a) => {
            let doc = s.load(&a.ring)?;
            let q = s.ideal(&doc, "q", &a.q)?;
            let v = match a.kind {
                KindArg::E => {
                    let m = s.module(&doc, &a.module)?;
                    e_coeffs(&q, &m, n_max)?
                }
                KindArg::G | KindArg::F => {
                    let spec =
                        a.k.as_deref()
                            .ok_or_else(|| Error::Precondition("--k is required for g and f".into()))?;
                    let k = s.ideal(&doc, "k", spec)?;
                    let pair = IdealPair::new(k, q)?;
                    if a.kind == KindArg::G {
                        g_coeffs(&pair, n_max)?
                    } else {
                        f_coeffs(&pair, n_max)?
                    }
                }
            };
            let text = format!("{}\n", format_vector(&v));
            Done::ok(&v, text)
        }
        Command::Identities(a) => {
            let report = match (&a.ring, &a.gens) {
                (Some(path), _) => {
                    let doc = s.load(path)?;
                    let k = s.ideal(&doc, "k", &a.k)?;
                    let q = s.ideal(&doc, "q", &a.q)?;
                    check_identities(&IdealPair::new(k, q)?, n_max)?
                }
                (None, Some(gens)) => {
                    let sg = s.semigroup(gens)?;
                    let k = s.semigroup_ideal(&sg, "k", &a.k)?;
                    let q = s.semigroup_ideal(&sg, "q", &a.q)?;
                    check_identities(&SemigroupPair::new(k, q)? as &dyn HilbertOracle, n_max)?
                }
                (None, None) => return Err(Error::Precondition("either --ring or --gens is required".into())),
            };
            identities_done(report)
        }
        Command::IInvariant(a) => {
            let doc = s.load(&a.ring)?;
            let q = s.ideal(&doc, "q", &a.q)?;
            let m = s.module(&doc, &a.module)?;
            let inv = i_invariant(&q, &m, n_max)?;
            let text = format!("l(M/QM)  {}\ne_0(Q,M) {}\nI(Q;M)   {}\n", inv.length, inv.e0, inv.value);
            Done::ok(&inv, text)
        }
        Command::Explore(e) => explore(s, e, n_max),
        Command::Semigroup(c) => semigroup(s, c, n_max),
        Command::Scaling(a) => {
            s.inputs.insert("kmax".into(), Value::from(a.kmax));
            let report = match (&a.ring, &a.gens) {
                (Some(path), _) => {
                    let doc = s.load(path)?;
                    let q = s.ideal(&doc, "q", &a.q)?;
                    let m = s.module(&doc, &a.module)?;
                    polynomial_power_scaling(&q, &m, a.kmax, n_max)?
                }
                (None, Some(gens)) => {
                    let sg = s.semigroup(gens)?;
                    let q = s.semigroup_ideal(&sg, "q", &a.q)?;
                    let m = s.semigroup_ideal(&sg, "module", &a.module)?;
                    semigroup_power_scaling(&q, &m, a.kmax, n_max)?
                }
                (None, None) => return Err(Error::Precondition("either --ring or --gens is required".into())),
            };
            scaling_done(report)
        }
    }
}

fn explore(s: &mut Session, command: &ExploreCommand, n_max: u32) -> Result<Done> {
    match command {
        ExploreCommand::Lambda { sample, i, module } => {
            let doc = s.load(&sample.ring)?;
            let k = s.ideal(&doc, "k", &sample.k)?;
            let set = s.samples(&doc, sample, &k, false)?;
            s.inputs.insert("i".into(), Value::from(*i));
            let report = match module {
                Some(spec) => {
                    let m = s.module(&doc, spec)?;
                    explore_module_lambda(&m, *i, &set, n_max)?
                }
                None => explore_lambda(&k, *i, &set, n_max)?,
            };
            exploration_done(s, report)
        }
        ExploreCommand::Delta { sample, i } => {
            let doc = s.load(&sample.ring)?;
            let k = s.ideal(&doc, "k", &sample.k)?;
            let set = s.samples(&doc, sample, &k, true)?;
            s.inputs.insert("i".into(), Value::from(*i));
            exploration_done(s, explore_lambda(&k, *i, &set, n_max)?)
        }
        ExploreCommand::Bounds { sample, lh, im, module } => {
            let doc = s.load(&sample.ring)?;
            let k = s.ideal(&doc, "k", &sample.k)?;
            let set = s.samples(&doc, sample, &k, false)?;
            s.inputs.insert("lh".into(), Value::from(lh.clone()));
            let g1 = check_g1_bounds(&k, &set, lh, n_max)?;
            let mut text = render_exploration(&g1);
            let mut reports = vec![g1];
            if let Some(im) = im {
                s.inputs.insert("im".into(), Value::from(*im));
                let m = s.module(&doc, module)?;
                let e1 = check_e1_bound(&m, *im, &set, n_max)?;
                text.push('\n');
                text.push_str(&render_exploration(&e1));
                reports.push(e1);
            }
            for r in &reports {
                note_exploration(s, r);
            }
            Done::ok(&reports, text)
        }
        ExploreCommand::Probe { sample } => {
            let doc = s.load(&sample.ring)?;
            let k = s.ideal(&doc, "k", &sample.k)?;
            let set = s.samples(&doc, sample, &k, false)?;
            exploration_done(s, buchsbaum_probe(&k, &set, n_max)?)
        }
        ExploreCommand::Envelope {
            ring,
            q,
            module,
            im,
            nlast,
        } => {
            let doc = s.load(ring)?;
            let q = s.ideal(&doc, "q", q)?;
            let m = s.module(&doc, module)?;
            s.inputs.insert("im".into(), Value::from(*im));
            s.inputs.insert("nlast".into(), Value::from(*nlast));
            let report = check_growth_envelope(&q, &m, *im, *nlast, n_max)?;
            let violations = report.violations().count();
            if violations > 0 {
                s.warnings.push(format!("{violations} envelope violations"));
            }
            let text = render_envelope(&report);
            Done::ok(&report, text)
        }
    }
}

fn semigroup(s: &mut Session, command: &SemigroupCommand, n_max: u32) -> Result<Done> {
    match command {
        SemigroupCommand::Info { gens } => {
            let sg = s.semigroup(gens)?;
            let results = json!({
                "generators": sg.generators(),
                "gaps": sg.gaps(),
                "genus": sg.genus(),
                "frobenius": sg.frobenius(),
                "conductor": sg.conductor(),
                "multiplicity": sg.multiplicity(),
                "small_elements": sg.small_elements(),
            });
            let text = format!(
                "semigroup     {sg}\ngaps          {:?}\ngenus         {}\nfrobenius     {}\nconductor     {}\nmultiplicity  {}\n",
                sg.gaps(),
                sg.genus(),
                sg.frobenius(),
                sg.conductor(),
                sg.multiplicity()
            );
            Done::ok(results, text)
        }
        SemigroupCommand::E1 { gens, q, module } => {
            let sg = s.semigroup(gens)?;
            let i = s.semigroup_ideal(&sg, "q", q)?;
            let m = s.semigroup_ideal(&sg, "module", module)?;
            let red = minimal_reduction(&i)?;
            let blowup = e1_via_blowup(&i, &m)? as i64;
            let interp = e1_interpolated(&i, &m, n_max)?;
            let agree = interp.get(1) == blowup;
            let results = json!({
                "reduction_number": red.number,
                "e0": interp.get(0),
                "e1_blowup": blowup,
                "interpolated": interp,
                "agree": agree,
            });
            let text = format!(
                "reduction number  {}\ne_0               {}\ne_1 (blow-up)     {}\ne_1 (fit)         {}\n{}\n",
                red.number,
                interp.get(0),
                blowup,
                interp.get(1),
                if agree { "PASS" } else { "FAIL" }
            );
            Ok(Done {
                results,
                text,
                failed: (!agree).then(|| "e_1 by blow-up differs from the interpolated e_1".to_string()),
            })
        }
        SemigroupCommand::Delta { gens, k, gap_cap } => {
            let sg = s.semigroup(gens)?;
            let k = s.semigroup_ideal(&sg, "k", k)?;
            let report = delta_sets(&k, *gap_cap)?;
            let failed = (!report.all_hold()).then(|| "a Δ-set check failed".to_string());
            Ok(Done {
                text: render_delta(&report),
                results: to_value(&report)?,
                failed,
            })
        }
        SemigroupCommand::Oversemigroups { gens, gap_cap } => {
            let sg = s.semigroup(gens)?;
            let list = oversemigroups(&sg, *gap_cap)?;
            let rows: Vec<Value> = list
                .iter()
                .map(|b| json!({ "generators": b.generators(), "gaps": b.gaps() }))
                .collect();
            let mut text = String::new();
            for b in &list {
                let _ = writeln!(text, "{:<20} gaps {:?}", b.to_string(), b.gaps());
            }
            let _ = writeln!(text, "{} oversemigroups", list.len());
            Done::ok(rows, text)
        }
    }
}

fn format_vector(v: &CoefficientVector) -> String {
    let vals: Vec<String> = v.values.iter().map(i64::to_string).collect();
    format!(
        "{} = ({})  postulation {}, checked on {}..={}",
        v.kind.symbol(),
        vals.join(", "),
        v.postulation,
        v.window.0,
        v.window.1
    )
}

fn identities_done(report: IdentityReport) -> Result<Done> {
    let mut text = String::new();
    let _ = writeln!(text, "d = {}, l(R/K) = {}", report.dim, report.colength_k);
    for (label, v) in [
        ("e(Q,R)", &report.e_ring),
        ("e(Q,K)", &report.e_k),
        ("g^K(Q)", &report.g),
        ("f^K(Q)", &report.f),
    ] {
        let _ = writeln!(text, "{label:<8} {}", format_vector(v));
    }
    for c in &report.checks {
        let status = if c.holds { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{status}  {:<40} {} = {}", c.name, c.lhs, c.rhs);
    }
    let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    let failed = (!failed.is_empty()).then(|| format!("identity failed: {}", failed.join("; ")));
    Ok(Done {
        results: to_value(&report)?,
        text,
        failed,
    })
}

fn scaling_done(report: ScalingReport) -> Result<Done> {
    let mut text = format!("r = {}\n   k   e0   e1   pred e0   pred e1\n", report.dim);
    for row in &report.rows {
        let _ = writeln!(
            text,
            "{:>4} {:>4} {:>4} {:>9} {:>9}  {}",
            row.k,
            row.e0,
            row.e1,
            row.predicted_e0,
            row.predicted_e1,
            if row.holds { "PASS" } else { "FAIL" }
        );
    }
    let failed = (!report.all_hold()).then(|| "scaling formula violated".to_string());
    Ok(Done {
        results: to_value(&report)?,
        text,
        failed,
    })
}

fn note_exploration(s: &mut Session, r: &ExplorationReport) {
    let errors = r.errors().count();
    if errors > 0 {
        s.warnings.push(format!("{}: {errors} samples failed", r.target));
    }
    if !r.violations.is_empty() {
        s.warnings
            .push(format!("{}: {} violations", r.target, r.violations.len()));
    }
}

fn exploration_done(s: &mut Session, report: ExplorationReport) -> Result<Done> {
    note_exploration(s, &report);
    let text = render_exploration(&report);
    Done::ok(&report, text)
}

fn render_exploration(r: &ExplorationReport) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "target    {}", r.target);
    let _ = writeln!(text, "family    {}", r.family);
    if let Some(seed) = r.seed {
        let _ = writeln!(text, "seed      {seed}");
    }
    for rec in &r.samples {
        let value = rec.value.map_or_else(|| "-".to_string(), |v| v.to_string());
        let mut line = format!("{:>4}  {:>6}  {}", rec.index, value, rec.generators);
        for (k, v) in &rec.details {
            let _ = write!(line, "  {k}={v}");
        }
        if let Some(e) = &rec.error {
            let _ = write!(line, "  error: {e}");
        }
        let _ = writeln!(text, "{line}");
    }
    let _ = writeln!(text, "observed  {:?}  ({:?})", r.observed_set, r.classification);
    for c in &r.checks {
        let _ = writeln!(text, "check     {}: {}/{} held", c.name, c.held, c.held + c.violated);
    }
    let _ = writeln!(text, "violations {}", r.violations.len());
    for v in &r.violations {
        let _ = writeln!(text, "  #{} {}: {}", v.index, v.generators, v.message);
    }
    text
}

fn render_envelope(r: &EnvelopeReport) -> String {
    let mut text = format!(
        "r = {}, e_0 = {}, I_M = {}\n   n   value   lower   upper\n",
        r.dim, r.e0, r.i_m
    );
    for row in &r.rows {
        let _ = writeln!(
            text,
            "{:>4} {:>7} {:>7} {:>7}  {}",
            row.n,
            row.value,
            row.lower,
            row.upper,
            if row.holds { "PASS" } else { "FAIL" }
        );
    }
    text
}

fn render_delta(r: &DeltaReport) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "K = {:?}, l(R/K) = {}", r.k, r.colength_k);
    let _ = writeln!(text, "Delta^K   {:?}", r.delta_k);
    let _ = writeln!(text, "Delta_R   {:?}", r.delta_r);
    let status = |b: bool| if b { "PASS" } else { "FAIL" };
    let _ = writeln!(text, "{}  sup Delta^K = {}", status(r.sup_check), r.sup_expected);
    let _ = writeln!(text, "{}  min Delta_R = 0", status(r.inf_check));
    let _ = writeln!(text, "{}  g_1 of witness ideals", status(r.bridge_check));
    text
}
