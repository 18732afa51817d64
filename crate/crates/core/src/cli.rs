//! Command-line front end. [`run`] does all the work and returns a
//! [`CommandResult`]; the binary only prints it and exits.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::adc::{self, DescentTrace, RationalPoint};
use crate::error::{Error, Result};
use crate::geometry::{self, CubicFile, DimensionReport};
use crate::hassett_rep::{self, HassettCertificate};
use crate::json::{parse_int, parse_rational};
use crate::lattices;
use crate::local_global::{self, GlobalSolvabilityReport, LocalCertificate, Verdict};
use crate::qforms::{builtin, builtin_form, BuiltinForm, IntVector, Integer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    /// Human-readable output (stdout).
    pub text: String,
    /// Machine-readable payload, present iff `--json` was given.
    pub json: Option<Value>,
    /// Diagnostics (stderr).
    pub diagnostic: Option<String>,
}

impl CommandResult {
    fn new(ok: bool, text: String, json: Option<Value>) -> Self {
        CommandResult {
            exit_code: if ok { EXIT_OK } else { EXIT_FAILURE },
            text,
            json,
            diagnostic: None,
        }
    }

    fn failure(code: i32, message: String) -> Self {
        CommandResult { exit_code: code, text: String::new(), json: None, diagnostic: Some(message) }
    }

    /// What the binary writes to stdout.
    pub fn stdout(&self) -> String {
        match &self.json {
            Some(v) => serde_json::to_string_pretty(v).expect("serializable") + "\n",
            None => self.text.clone(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hassett-cubics", version, args_conflicts_with_subcommands = true)]
#[command(about = "Exact verification toolkit for Hassett maximal cubic fourfolds")]
struct Cli {
    /// Replay a JSON certificate emitted by another subcommand.
    #[arg(long, value_name = "FILE")]
    verify_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Primitive representations by F.
    #[command(subcommand)]
    Hassett(HassettCmd),
    /// ADC checks and denominator descent for Q3 and G.
    #[command(subcommand)]
    Adc(AdcCmd),
    /// Local solvability certificates for G.
    #[command(subcommand)]
    Local(LocalCmd),
    /// The lattices M_{α,β}.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Four-plane configurations and their cubics.
    #[command(subcommand)]
    Geometry(GeometryCmd),
}

#[derive(Debug, Args)]
struct JsonFlag {
    /// Emit a JSON payload instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum HassettCmd {
    /// Check that the primitive image of F up to N is the Hassett set, by enumeration and by certificates.
    Verify {
        #[arg(long, value_parser = parse_integer_arg)]
        max: Integer,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Construct a certified primitive vector with F(v) = n.
    Represent {
        #[arg(value_parser = parse_integer_arg, allow_hyphen_values = true)]
        n: Integer,
        #[command(flatten)]
        out: JsonFlag,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormArg {
    Q3,
    G,
}

impl FormArg {
    fn kind(self) -> BuiltinForm {
        match self {
            FormArg::Q3 => BuiltinForm::Q3,
            FormArg::G => BuiltinForm::G,
        }
    }
}

#[derive(Debug, Subcommand)]
enum AdcCmd {
    /// List n ≤ N represented over ℚ but not over ℤ.
    Check {
        #[arg(long, value_enum, ignore_case = true)]
        form: FormArg,
        #[arg(long, value_parser = parse_integer_arg)]
        max: Integer,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Descend the rational point num/den to an integer point of the same value.
    Descend {
        #[arg(long, value_enum, ignore_case = true)]
        form: FormArg,
        #[arg(long, value_parser = parse_integer_list, allow_hyphen_values = true)]
        num: IntVector,
        #[arg(long, value_parser = parse_integer_arg)]
        den: Integer,
        #[command(flatten)]
        out: JsonFlag,
    },
}

#[derive(Debug, Subcommand)]
enum LocalCmd {
    /// Certify G = k at the real place, 2, 3 and the chosen primes.
    Certify {
        #[arg(long, value_parser = parse_integer_arg, allow_hyphen_values = true)]
        k: Integer,
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, default_value_t = local_global::DEFAULT_PRECISION)]
        precision: u32,
        #[command(flatten)]
        out: JsonFlag,
    },
}

#[derive(Debug, Subcommand)]
enum LatticeCmd {
    /// Print M_{α,β}.
    Gram {
        #[arg(long)]
        alpha: u8,
        #[arg(long)]
        beta: u8,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Print a unimodular U with Uᵀ M_from U = M_to.
    Isometry {
        #[arg(long, value_parser = parse_flag_pair)]
        from: (u8, u8),
        #[arg(long, value_parser = parse_flag_pair)]
        to: (u8, u8),
        #[command(flatten)]
        out: JsonFlag,
    },
}

#[derive(Debug, Subcommand)]
enum GeometryCmd {
    /// Profiles, linear-system and orbit dimensions for the configuration (a, b).
    Dims {
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        a: crate::qforms::Rational,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        b: crate::qforms::Rational,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Write a seeded random cubic containing the configuration to FILE.
    Cubic {
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        a: crate::qforms::Rational,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        b: crate::qforms::Rational,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_integer_arg(s: &str) -> std::result::Result<Integer, String> {
    parse_int(s).ok_or_else(|| format!("`{s}` is not a decimal integer"))
}

fn parse_integer_list(s: &str) -> std::result::Result<IntVector, String> {
    s.split(',').map(|t| parse_integer_arg(t.trim())).collect()
}

fn parse_rational_arg(s: &str) -> std::result::Result<crate::qforms::Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

fn parse_flag_pair(s: &str) -> std::result::Result<(u8, u8), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected A,B, got `{s}`"))?;
    let flag = |t: &str| match t.trim() {
        "0" => Ok(0u8),
        "1" => Ok(1u8),
        other => Err(format!("flag must be 0 or 1, got `{other}`")),
    };
    Ok((flag(a)?, flag(b)?))
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                CommandResult { exit_code: EXIT_OK, text: rendered, json: None, diagnostic: None }
            } else {
                CommandResult::failure(EXIT_USAGE, rendered)
            };
        }
    };
    let outcome = match (cli.verify_file, cli.command) {
        (Some(path), _) => verify_file(&path),
        (None, Some(cmd)) => dispatch(cmd),
        (None, None) => {
            return CommandResult::failure(EXIT_USAGE, "no subcommand given; see --help".into())
        }
    };
    outcome.unwrap_or_else(|e| CommandResult::failure(EXIT_FAILURE, format!("error: {e}")))
}

fn dispatch(cmd: Command) -> Result<CommandResult> {
    match cmd {
        Command::Hassett(HassettCmd::Verify { max, out }) => hassett_verify(&max, out.json),
        Command::Hassett(HassettCmd::Represent { n, out }) => hassett_represent(&n, out.json),
        Command::Adc(AdcCmd::Check { form, max, out }) => adc_check(form.kind(), &max, out.json),
        Command::Adc(AdcCmd::Descend { form, num, den, out }) => adc_descend(form.kind(), num, den, out.json),
        Command::Local(LocalCmd::Certify { k, primes, precision, out }) => {
            local_certify(&k, primes.as_deref(), precision, out.json)
        }
        Command::Lattice(LatticeCmd::Gram { alpha, beta, out }) => lattice_gram(alpha, beta, out.json),
        Command::Lattice(LatticeCmd::Isometry { from, to, out }) => lattice_isometry(from, to, out.json),
        Command::Geometry(GeometryCmd::Dims { a, b, out }) => geometry_dims(&a, &b, out.json),
        Command::Geometry(GeometryCmd::Cubic { a, b, seed, out }) => geometry_cubic(&a, &b, seed, &out),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload types serialize")
}

fn strings(xs: &[Integer]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn vector(v: &[Integer]) -> String {
    format!("({})", strings(v).join(", "))
}

fn hassett_set(max: &Integer) -> Vec<Integer> {
    let mut out = Vec::new();
    let mut n = Integer::from(8);
    while n <= *max {
        if hassett_rep::in_hassett(&n) {
            out.push(n.clone());
        }
        n += 1;
    }
    out
}

fn hassett_verify(max: &Integer, json: bool) -> Result<CommandResult> {
    let expected = hassett_set(max);
    let enumerated = builtin(BuiltinForm::F).primitive_image(max)?;
    let certificates = hassett_rep::verify_range(max)?;
    let certified: Vec<Integer> = certificates.iter().filter(|c| c.valid).map(|c| c.n.clone()).collect();
    let verified = enumerated == expected && certified == expected;
    let mut text = format!(
        "primitive image of F up to {max}: {} values, Hassett set: {} values\n",
        enumerated.len(),
        expected.len()
    );
    text += &format!("enumeration matches: {}\n", enumerated == expected);
    text += &format!("certificates verified: {}/{}\n", certified.len(), expected.len());
    text += if verified { "verified\n" } else { "NOT verified\n" };
    let payload = json.then(|| {
        json!({
            "verified": verified,
            "max": max.to_string(),
            "checked": strings(&expected),
            "enumerated": strings(&enumerated),
            "certificates": certificates,
        })
    });
    Ok(CommandResult::new(verified, text, payload))
}

fn describe_certificate(c: &HassettCertificate) -> String {
    let mut s = format!("n = {}\nbranch: {:?}\n", c.n, c.branch);
    if let (Some(u), Some(k), Some(g), Some(xyz)) = (&c.u, &c.k, &c.g, &c.xyz) {
        s += &format!("u = {u}\nk = 8n - 57u^2 = {k}\ng = {} with G(g) = k\n", vector(g));
        s += &format!("(x, y, z) = {} with T(x, y, z, u) = g\n", vector(xyz));
    }
    s += &format!("v = {} with F(v) = {}\nvalid: {}\n", vector(&c.v), c.n, c.valid);
    s
}

fn hassett_represent(n: &Integer, json: bool) -> Result<CommandResult> {
    if !hassett_rep::in_hassett(n) {
        let reason = if *n < Integer::from(8) {
            format!("{n} < 8")
        } else {
            format!("{n} ≡ {} (mod 6)", n.clone() % 6)
        };
        return Ok(CommandResult::failure(
            EXIT_FAILURE,
            format!("{n} is not in the Hassett set ℋ = {{n ≥ 8 : n ≡ 0, 2 (mod 6)}}: {reason}"),
        ));
    }
    let cert = hassett_rep::represent(n)?;
    let ok = cert.valid;
    Ok(CommandResult::new(ok, describe_certificate(&cert), json.then(|| to_value(&cert))))
}

fn adc_check(kind: BuiltinForm, max: &Integer, json: bool) -> Result<CommandResult> {
    let form = builtin(kind);
    let violations = adc::adc_check(&form, max)?;
    let ok = violations.is_empty();
    let text = if ok {
        format!("{kind}: every n ≤ {max} represented over Q is represented over Z\n")
    } else {
        format!("{kind}: violations up to {max}: {}\n", strings(&violations).join(", "))
    };
    let payload = json.then(|| {
        json!({
            "form": kind.to_string(),
            "max": max.to_string(),
            "violations": strings(&violations),
            "verified": ok,
        })
    });
    Ok(CommandResult::new(ok, text, payload))
}

fn adc_descend(kind: BuiltinForm, num: IntVector, den: Integer, json: bool) -> Result<CommandResult> {
    let form = builtin(kind);
    let start = RationalPoint::from_vector(&form, num, den)?;
    let trace = adc::descend(&form, &start)?;
    let mut text = format!("{kind}: start {}/{} with value {}\n", vector(&start.v), start.t, start.m);
    for s in &trace.steps {
        text += &format!("  {:?}: {}/{} -> {}/{}", s.kind, vector(&s.input.v), s.input.t, vector(&s.output.v), s.output.t);
        if let Some(p) = s.prime {
            text += &format!(" (p = {p})");
        }
        text.push('\n');
    }
    text += &format!("terminal {}/{}\n", vector(&trace.terminal.v), trace.terminal.t);
    if !trace.fallback_primes.is_empty() {
        text += &format!("fallback primes: {:?}\n", trace.fallback_primes);
    }
    Ok(CommandResult::new(trace.reached_integer(), text, json.then(|| to_value(&trace))))
}

fn describe_report(r: &GlobalSolvabilityReport) -> String {
    let mut s = format!("G = {}:\n", r.k);
    for c in &r.certificates {
        s += &format!("  place {:>5}: {:?}", c.place.to_string(), c.verdict);
        if let Some(w) = &c.witness {
            s += &format!(" witness {} scale {} mod p^{}", vector(w), c.scale, c.precision);
        }
        s.push('\n');
    }
    s += &format!("overall: {:?}\n", r.verdict);
    s
}

fn local_certify(k: &Integer, primes: Option<&[u64]>, precision: u32, json: bool) -> Result<CommandResult> {
    let report = local_global::certify_global(k, primes, precision)?;
    Ok(CommandResult::new(report.is_solvable(), describe_report(&report), json.then(|| to_value(&report))))
}

fn gram_json(m: &lattices::GramMatrix5) -> Value {
    json!({
        "alpha": m.alpha(),
        "beta": m.beta(),
        "labels": lattices::BASIS_LABELS,
        "gram": m.entries().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "positive_definite": m.is_positive_definite(),
    })
}

fn lattice_gram(alpha: u8, beta: u8, json: bool) -> Result<CommandResult> {
    let m = lattices::gram_m(alpha, beta)?;
    let text = format!("M_{{{alpha},{beta}}}:\n{m}");
    Ok(CommandResult::new(true, text, json.then(|| gram_json(&m))))
}

fn matrix_strings(m: &[Vec<Integer>]) -> Vec<Vec<String>> {
    m.iter().map(|r| strings(r)).collect()
}

fn lattice_isometry(from: (u8, u8), to: (u8, u8), json: bool) -> Result<CommandResult> {
    let change = lattices::isometry_to(from, to)?;
    let ok = change.check()?;
    let mut text = format!("U with U^T M_{{{},{}}} U = M_{{{},{}}}:\n", from.0, from.1, to.0, to.1);
    for row in &change.matrix {
        text += &row.iter().map(|x| format!("{x:>4}")).collect::<String>();
        text.push('\n');
    }
    text += &format!("det U = {}\ncongruence holds: {ok}\n", change.determinant());
    let payload = json.then(|| {
        json!({
            "from": [from.0, from.1],
            "to": [to.0, to.1],
            "matrix": matrix_strings(&change.matrix),
            "determinant": change.determinant().to_string(),
            "congruent": ok,
        })
    });
    Ok(CommandResult::new(ok, text, payload))
}

fn describe_dims(r: &DimensionReport) -> String {
    let mut s = format!("configuration a = {}, b = {} (alpha, beta) = ({}, {})\n", r.a, r.b, r.alpha, r.beta);
    for p in &r.profiles {
        s += &format!("  P{} ∩ P{}: {} (dim {})\n", p.i, p.j, p.incidence, p.dim);
    }
    let flag = |m: bool| if m { "match" } else { "MISMATCH" };
    s += &format!("gram from geometry = M_{{alpha,beta}}: {}\n", r.gram_matches);
    s += &format!("cubics through the planes: {} (kernel rank {}, evaluation rank {}, agree: {})\n", r.basis_size, r.kernel_rank, r.evaluation_rank, r.ranks_agree);
    s += &format!("fiber dimension {} vs reference {}: {}\n", r.fiber_dim, r.reference_fiber, flag(r.fiber_matches));
    s += &format!("stabilizer {} / orbit dimension {} vs reference {}: {}\n", r.stabilizer_dim, r.orbit_dim, r.reference_orbit, flag(r.orbit_matches));
    s += &format!("total {} vs reference {}: {}\n", r.total_dim, r.reference_total, flag(r.total_matches));
    s
}

fn geometry_dims(a: &crate::qforms::Rational, b: &crate::qforms::Rational, json: bool) -> Result<CommandResult> {
    let config = geometry::standard_config(a, b)?;
    let report = geometry::dimension_report(&config)?;
    Ok(CommandResult::new(report.consistent(), describe_dims(&report), json.then(|| to_value(&report))))
}

fn geometry_cubic(a: &crate::qforms::Rational, b: &crate::qforms::Rational, seed: u64, out: &PathBuf) -> Result<CommandResult> {
    let config = geometry::standard_config(a, b)?;
    let cubic = config.random_cubic(seed)?;
    let file = CubicFile { config: config.to_json(), seed, cubic: cubic.to_json() };
    let ok = file.verify()?;
    let body = serde_json::to_string_pretty(&file).expect("serializable");
    std::fs::write(out, body + "\n").map_err(|e| Error::Domain(format!("cannot write {}: {e}", out.display())))?;
    let nonzero = file.cubic.coeffs.iter().filter(|c| c.as_str() != "0").count();
    let text = format!(
        "wrote cubic with {nonzero} nonzero coefficients to {}; vanishes on all four planes: {ok}\n",
        out.display()
    );
    Ok(CommandResult::new(ok, text, None))
}

fn has(v: &Value, keys: &[&str]) -> bool {
    keys.iter().all(|k| v.get(k).is_some())
}

fn parse<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Domain(format!("malformed certificate: {e}")))
}

fn stored_bool(v: &Value, key: &str) -> Result<bool> {
    v.get(key)
        .and_then(Value::as_bool)
        .ok_or_else(|| Error::Domain(format!("certificate lacks boolean `{key}`")))
}

/// Replays a JSON payload. Exit 0 iff the replay reproduces the stored
/// payload and its verdict is positive.
fn verify_file(path: &PathBuf) -> Result<CommandResult> {
    let body = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&body).map_err(|e| Error::Domain(format!("not JSON: {e}")))?;
    let (kind, intact, positive) = replay(&v)?;
    let text = format!(
        "{kind}: replay {}, verdict {}\n",
        if intact { "reproduces the certificate" } else { "DOES NOT reproduce the certificate" },
        if positive { "positive" } else { "negative" }
    );
    Ok(CommandResult::new(intact && positive, text, None))
}

/// Returns `(kind, replay matches, stored verdict positive)`.
fn replay(v: &Value) -> Result<(&'static str, bool, bool)> {
    if has(v, &["verified", "checked", "certificates"]) {
        let max = parse_int(v["max"].as_str().unwrap_or_default())
            .ok_or_else(|| Error::Domain("missing `max`".into()))?;
        let certs: Vec<HassettCertificate> = parse(&v["certificates"])?;
        let checked: Vec<String> = parse(&v["checked"])?;
        let enumerated: Vec<String> = parse(&v["enumerated"])?;
        let expected = strings(&hassett_set(&max));
        let certified: Vec<String> = certs
            .iter()
            .filter(|c| hassett_rep::verify_certificate(c) && c.valid)
            .map(|c| c.n.to_string())
            .collect();
        let image = strings(&builtin(BuiltinForm::F).primitive_image(&max)?);
        let verdict = image == expected && certified == expected;
        let stored = stored_bool(v, "verified")?;
        let intact = checked == expected && enumerated == image && verdict == stored;
        return Ok(("hassett verification", intact, stored));
    }
    if has(v, &["branch", "v"]) {
        let cert: HassettCertificate = parse(v)?;
        let ok = hassett_rep::verify_certificate(&cert);
        return Ok(("Hassett certificate", ok == cert.valid, cert.valid));
    }
    if has(v, &["steps", "terminal", "start"]) {
        let trace: DescentTrace = parse(v)?;
        let form = builtin_form(&trace.form)?;
        return Ok(("descent trace", trace.verify(&form), trace.reached_integer()));
    }
    if has(v, &["violations", "form", "max"]) {
        let form = builtin_form(v["form"].as_str().unwrap_or_default())?;
        let max = parse_int(v["max"].as_str().unwrap_or_default())
            .ok_or_else(|| Error::Domain("missing `max`".into()))?;
        let stored: Vec<String> = parse(&v["violations"])?;
        let again = strings(&adc::adc_check(&form, &max)?);
        let verified = stored_bool(v, "verified")?;
        return Ok(("ADC check", again == stored && verified == stored.is_empty(), verified));
    }
    if has(v, &["certificates", "verdict", "k"]) {
        let report: GlobalSolvabilityReport = parse(v)?;
        return Ok(("global solvability report", report.replay(), report.is_solvable()));
    }
    if has(v, &["place", "verdict", "k"]) {
        let cert: LocalCertificate = parse(v)?;
        return Ok(("local certificate", cert.replay(), cert.verdict == Verdict::Solvable));
    }
    if has(v, &["monomials", "coeffs", "config"]) {
        let file: CubicFile = parse(v)?;
        let ok = file.verify()?;
        return Ok(("cubic", ok, ok));
    }
    if has(v, &["basis_size", "profiles"]) {
        let stored: DimensionReport = parse(v)?;
        let a = parse_rational(&stored.a).ok_or_else(|| Error::Domain("bad `a`".into()))?;
        let b = parse_rational(&stored.b).ok_or_else(|| Error::Domain("bad `b`".into()))?;
        let again = geometry::dimension_report(&geometry::standard_config(&a, &b)?)?;
        return Ok(("dimension report", again == stored, stored.consistent()));
    }
    if has(v, &["matrix", "from", "to"]) {
        let from: (u8, u8) = parse(&v["from"])?;
        let to: (u8, u8) = parse(&v["to"])?;
        let rows: Vec<Vec<String>> = parse(&v["matrix"])?;
        let matrix = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_int(s).ok_or_else(|| Error::Domain(format!("bad entry {s:?}")))).collect())
            .collect::<Result<Vec<IntVector>>>()?;
        let change = lattices::BasisChange { matrix, source: from, target: to };
        let ok = change.check()?;
        let stored = stored_bool(v, "congruent")?;
        return Ok(("lattice isometry", ok == stored, stored));
    }
    if has(v, &["gram", "alpha", "beta"]) {
        let alpha: u8 = parse(&v["alpha"])?;
        let beta: u8 = parse(&v["beta"])?;
        let again = gram_json(&lattices::gram_m(alpha, beta)?);
        return Ok(("Gram matrix", &again == v, true));
    }
    Err(Error::Domain("unrecognized certificate format".into()))
}
