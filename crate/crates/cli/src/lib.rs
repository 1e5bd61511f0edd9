//! Command-line front end for `substgf`.
//!
//! Exit codes: 0 success, 1 parse error (substitution file or command
//! line), 2 precondition violation, 3 `--strict` with an inconclusive
//! verdict.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use substgf::error::Error;
use substgf::fibonacci::{positivity_bound, PositivityBound};
use substgf::genfun::{
    char_series, position_series, series_verdict, PeriodBounds, SeriesKind, SeriesVerdict, TruncatedSeries, VerdictOptions,
};
use substgf::geometric::{
    classify_two_letter, endpoints_csv, geometric_series, natural_lengths, LengthAssignment, QuadraticReal, TwoLetterClass,
};
use substgf::rational::{self, parse_rational, Rational};
use substgf::subst::{
    aperiodicity_verdict, fixed_point_seed, fixed_word_prefix, parse_substitution, pf_data, substitution_matrix,
    AperiodicityVerdict, FixedPointSeed, LetterId, PfData, Substitution, SubstitutionMatrix,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

pub const DEFAULT_ORDER: usize = 2048;

#[derive(Parser, Debug)]
#[command(name = "substgf", version, about = "Generating functions of substitution fixed words")]
pub struct Cli {
    /// Exit with code 3 when any verdict is inconclusive.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Char,
    Pos,
}

impl From<KindArg> for SeriesKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Char => SeriesKind::Characteristic,
            KindArg::Pos => SeriesKind::Position,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BoundArgs {
    #[arg(long, default_value_t = 1000)]
    pub max_preperiod: usize,
    #[arg(long, default_value_t = 200)]
    pub max_period: usize,
    /// Treat the fixed word as aperiodic even when the PF eigenvalue is rational.
    #[arg(long)]
    pub assume_aperiodic: bool,
}

impl BoundArgs {
    fn options(&self) -> VerdictOptions {
        VerdictOptions {
            bounds: PeriodBounds { max_preperiod: self.max_preperiod, max_period: self.max_period },
            assume_aperiodic: self.assume_aperiodic,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Matrix, PF data, aperiodicity and every series verdict.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Prefix of the fixed word.
    Expand {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Truncated characteristic or position series of one letter.
    Series {
        file: PathBuf,
        #[arg(long)]
        letter: char,
        #[arg(long, value_enum, default_value = "char")]
        kind: KindArg,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Rational-or-transcendental verdict for one letter.
    Period {
        file: PathBuf,
        #[arg(long)]
        letter: char,
        #[arg(long, value_enum, default_value = "char")]
        kind: KindArg,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Certified positivity bound for the Fibonacci characteristic series.
    Roots {
        #[arg(long)]
        level: usize,
        #[arg(long, default_value = "1e-8")]
        tol: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Tile endpoints, the series G and the two-letter classification.
    Geom {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// `natural` or comma-separated rational lengths in alphabet order.
        #[arg(long, default_value = "natural")]
        lengths: String,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// A failure mapped to an exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            _ => EXIT_PRECONDITION,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_PARSE, message: message.into() }
}

/// Command output plus whether any verdict in it was inconclusive.
pub struct Output {
    pub text: String,
    pub inconclusive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Settings {
    pub max_preperiod: usize,
    pub max_period: usize,
    pub assume_aperiodic: bool,
}

impl From<&BoundArgs> for Settings {
    fn from(b: &BoundArgs) -> Self {
        Settings { max_preperiod: b.max_preperiod, max_period: b.max_period, assume_aperiodic: b.assume_aperiodic }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterVerdict {
    pub letter: char,
    pub kind: SeriesKind,
    pub verdict: SeriesVerdict,
    /// Rendered rational form, when there is one.
    pub display: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricSummary {
    pub lengths: LengthAssignment,
    pub classification: TwoLetterClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub substitution: String,
    pub alphabet: Vec<char>,
    pub matrix: SubstitutionMatrix,
    pub primitivity_witness: usize,
    pub pf: PfData,
    pub fixed_point: SeedReport,
    pub aperiodicity: AperiodicityVerdict,
    pub series: Vec<LetterVerdict>,
    pub geometric: Option<GeometricSummary>,
    pub settings: Settings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedReport {
    pub power: usize,
    pub start: char,
}

impl AnalysisReport {
    pub fn is_inconclusive(&self) -> bool {
        matches!(self.aperiodicity, AperiodicityVerdict::InconclusiveUpTo { .. })
            || self.series.iter().any(|v| v.verdict.is_inconclusive())
            || self.geometric.as_ref().is_some_and(|g| matches!(g.classification, TwoLetterClass::Inconclusive { .. }))
    }
}

/// Sorted-key pretty JSON, so re-serializing parsed output is byte-identical.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn load(file: &PathBuf) -> Result<Substitution, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure { code: EXIT_PRECONDITION, message: format!("{}: {e}", file.display()) })?;
    Ok(parse_substitution(&text)?)
}

fn letter_id(s: &Substitution, c: char) -> Result<LetterId, Failure> {
    Ok(s.alphabet().require(c)?)
}

fn letter_verdict(s: &Substitution, seed: FixedPointSeed, l: LetterId, kind: SeriesKind, opts: &VerdictOptions) -> Result<LetterVerdict, Failure> {
    let verdict = series_verdict(s, seed, l, kind, opts)?;
    let display = verdict.rational_form().map(ToString::to_string);
    Ok(LetterVerdict { letter: s.alphabet().symbol(l), kind, verdict, display })
}

pub fn analyze(s: &Substitution, bounds: &BoundArgs) -> Result<AnalysisReport, Failure> {
    let matrix = substitution_matrix(s);
    let pf = pf_data(&matrix)?;
    let witness = pf.primitivity_witness.ok_or(Error::NotPrimitive)?;
    let seed = fixed_point_seed(s)?;
    let opts = bounds.options();
    let aperiodicity = aperiodicity_verdict(s, bounds.max_preperiod, bounds.max_period)?;
    let mut series = Vec::new();
    for kind in [SeriesKind::Characteristic, SeriesKind::Position] {
        for l in s.alphabet().ids() {
            series.push(letter_verdict(s, seed, l, kind, &opts)?);
        }
    }
    let geometric = if s.size() == 2 {
        let lengths = natural_lengths(s)?;
        let classification = classify_two_letter(s, seed, &lengths.lengths, opts.bounds)?;
        Some(GeometricSummary { lengths, classification })
    } else {
        None
    };
    Ok(AnalysisReport {
        substitution: s.to_dsl(),
        alphabet: s.alphabet().symbols().to_vec(),
        matrix,
        primitivity_witness: witness,
        pf,
        fixed_point: SeedReport { power: seed.power, start: s.alphabet().symbol(seed.start) },
        aperiodicity,
        series,
        geometric,
        settings: bounds.into(),
    })
}

fn analysis_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    out.push_str(&r.substitution);
    out.push_str(&format!("matrix: {}\n", r.matrix));
    out.push_str(&format!("primitive: A^{} > 0\n", r.primitivity_witness));
    out.push_str(&format!("char poly: {}\nmin poly: {}\n", r.pf.char_poly, r.pf.min_poly));
    out.push_str(&format!("PF eigenvalue: {:.12} ({})\n", r.pf.approx(), if r.pf.is_rational { "rational" } else { "irrational" }));
    out.push_str(&format!("fixed point: sigma^{} from {}\n", r.fixed_point.power, r.fixed_point.start));
    out.push_str(&format!("aperiodicity: {}\n", verdict_name(&serde_json::to_value(&r.aperiodicity).unwrap())));
    for v in &r.series {
        let kind = match v.kind {
            SeriesKind::Characteristic => "C",
            SeriesKind::Position => "P",
        };
        let name = verdict_name(&serde_json::to_value(&v.verdict).unwrap());
        match &v.display {
            Some(d) => out.push_str(&format!("{kind}_{}: {name} {d}\n", v.letter)),
            None => out.push_str(&format!("{kind}_{}: {name}\n", v.letter)),
        }
    }
    if let Some(g) = &r.geometric {
        let case = serde_json::to_value(&g.classification).unwrap();
        out.push_str(&format!("geometric case: {}\n", case["case"].as_str().unwrap_or("?")));
    }
    out
}

fn verdict_name(v: &Value) -> String {
    v["kind"].as_str().unwrap_or("?").to_string()
}

fn expand(s: &Substitution, n: usize, format: Format) -> Result<Output, Failure> {
    let seed = fixed_point_seed(s)?;
    let word = fixed_word_prefix(s, seed, n).render(s.alphabet());
    let text = match format {
        Format::Text => format!("{word}\n"),
        Format::Json => canonical_json(&json!({ "n": n, "word": word })),
        Format::Csv => return Err(usage("expand supports text and json output")),
    };
    Ok(Output { text, inconclusive: false })
}

#[derive(Serialize)]
struct SeriesOutput<'a> {
    letter: char,
    kind: SeriesKind,
    order: usize,
    series: &'a TruncatedSeries,
    verdict: &'a LetterVerdict,
    settings: Settings,
}

fn series(s: &Substitution, letter: char, kind: SeriesKind, order: usize, bounds: &BoundArgs, format: Format) -> Result<Output, Failure> {
    let seed = fixed_point_seed(s)?;
    let l = letter_id(s, letter)?;
    let ts = match kind {
        SeriesKind::Characteristic => char_series(s, seed, l, order),
        SeriesKind::Position => position_series(s, seed, l, order)?,
    };
    let verdict = letter_verdict(s, seed, l, kind, &bounds.options())?;
    let inconclusive = verdict.verdict.is_inconclusive();
    let text = match format {
        Format::Csv => ts.to_csv(),
        Format::Json => {
            canonical_json(&SeriesOutput { letter, kind, order, series: &ts, verdict: &verdict, settings: bounds.into() })
        }
        Format::Text => return Err(usage("series supports json and csv output")),
    };
    Ok(Output { text, inconclusive })
}

fn period(s: &Substitution, letter: char, kind: SeriesKind, bounds: &BoundArgs, format: Format) -> Result<Output, Failure> {
    let seed = fixed_point_seed(s)?;
    let l = letter_id(s, letter)?;
    let v = letter_verdict(s, seed, l, kind, &bounds.options())?;
    let inconclusive = v.verdict.is_inconclusive();
    let text = match format {
        Format::Json => canonical_json(&json!({ "result": v, "settings": Settings::from(bounds) })),
        Format::Text => {
            let name = verdict_name(&serde_json::to_value(&v.verdict).unwrap());
            match &v.display {
                Some(d) => format!("{name} {d}\n"),
                None => format!("{name}\n"),
            }
        }
        Format::Csv => return Err(usage("period supports text and json output")),
    };
    Ok(Output { text, inconclusive })
}

#[derive(Serialize)]
struct RootsOutput<'a> {
    #[serde(flatten)]
    bound: &'a PositivityBound,
    alpha_hat_decimal: String,
    #[serde(with = "substgf::rational::serde_exact")]
    tolerance: Rational,
}

fn roots(level: usize, tol: &str, format: Format) -> Result<Output, Failure> {
    let eps = parse_rational(tol).map_err(|e| usage(e.to_string()))?;
    let b = positivity_bound(level, &eps)?;
    let decimal = rational::to_decimal(&b.alpha_hat, 12);
    let text = match format {
        Format::Json => canonical_json(&RootsOutput { bound: &b, alpha_hat_decimal: decimal, tolerance: eps }),
        Format::Text => {
            let mut t = format!("level {level}: C_a > 0 on ({decimal}, 1), binding {:?}\n", b.binding);
            for (block, _) in &b.root_free {
                t.push_str(&format!("{block:?} has no root in (-1, 0)\n"));
            }
            t
        }
        Format::Csv => return Err(usage("roots supports text and json output")),
    };
    Ok(Output { text, inconclusive: false })
}

fn parse_lengths(s: &Substitution, spec: &str) -> Result<LengthAssignment, Failure> {
    if spec == "natural" {
        return Ok(natural_lengths(s)?);
    }
    let lengths = spec
        .split(',')
        .map(|t| parse_rational(t).map(QuadraticReal::rational))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| usage(e.to_string()))?;
    if lengths.len() != s.size() {
        return Err(usage(format!("{} lengths given for {} letters", lengths.len(), s.size())));
    }
    Ok(LengthAssignment { lengths, lambda: QuadraticReal::from_int(0), approximate: false, residual: None })
}

#[derive(Serialize)]
struct GeomOutput {
    lengths: LengthAssignment,
    order: usize,
    endpoints: Vec<QuadraticReal>,
    identity_holds: bool,
    classification: Option<TwoLetterClass>,
    settings: Settings,
}

fn geom(s: &Substitution, order: usize, lengths: &str, bounds: &BoundArgs, format: Format) -> Result<Output, Failure> {
    let seed = fixed_point_seed(s)?;
    let lengths = parse_lengths(s, lengths)?;
    let g = geometric_series(s, seed, &lengths.lengths, order)?;
    let classification = if s.size() == 2 {
        Some(classify_two_letter(s, seed, &lengths.lengths, bounds.options().bounds)?)
    } else {
        None
    };
    let inconclusive = matches!(classification, Some(TwoLetterClass::Inconclusive { .. }));
    let text = match format {
        Format::Csv => endpoints_csv(&g.coefficients),
        Format::Json => canonical_json(&GeomOutput {
            lengths,
            order,
            endpoints: g.coefficients,
            identity_holds: g.identity_holds,
            classification,
            settings: bounds.into(),
        }),
        Format::Text => return Err(usage("geom supports json and csv output")),
    };
    Ok(Output { text, inconclusive })
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Analyze { file, bounds, format } => {
            let s = load(file)?;
            let report = analyze(&s, bounds)?;
            let text = match format.unwrap_or(Format::Json) {
                Format::Json => canonical_json(&report),
                Format::Text => analysis_text(&report),
                Format::Csv => return Err(usage("analyze supports text and json output")),
            };
            Ok(Output { text, inconclusive: report.is_inconclusive() })
        }
        Command::Expand { file, n, format } => expand(&load(file)?, *n, format.unwrap_or(Format::Text)),
        Command::Series { file, letter, kind, order, bounds, format } => {
            series(&load(file)?, *letter, (*kind).into(), *order, bounds, format.unwrap_or(Format::Json))
        }
        Command::Period { file, letter, kind, bounds, format } => {
            period(&load(file)?, *letter, (*kind).into(), bounds, format.unwrap_or(Format::Json))
        }
        Command::Roots { level, tol, format } => roots(*level, tol, format.unwrap_or(Format::Json)),
        Command::Geom { file, order, lengths, bounds, format } => {
            geom(&load(file)?, *order, lengths, bounds, format.unwrap_or(Format::Json))
        }
    }
}

/// Parses `args` (program name first), writes to `out`/`err`, and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            if cli.strict && o.inconclusive {
                let _ = writeln!(err, "inconclusive verdict in strict mode");
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
