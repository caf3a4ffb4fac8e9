//! The `ltfourier` command line.
//!
//! Exit codes: 0 when everything checked holds, 1 when a check fails or a
//! computation errors, 2 on usage errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::expr::{parse_element, parse_polynomial};
use crate::json::rational;
use crate::lubin_tate::{preimage_threshold, torsion_radius_exponent, LubinTateGroup};
use crate::mahler::{lift_polynomial, lift_series, MahlerBasis};
use crate::padic::{FieldSpec, PadicElement, PadicField};
use crate::period::{period_exponents, PeriodScalar};
use crate::series::{TruncSeries, ASSERTION_PRECISION};
use crate::verify::{
    build_group, emit_report, is_usage_error, precision_for_order, suggested_precision, Caps, ConfigFile, Format,
    FrobeniusChoice, PrecisionSettings, RunManifest, SuiteName, SuiteRequest, PRECISION_ENV,
};
use crate::{Error, Rational, Result};

#[derive(Debug, Parser)]
#[command(
    name = "ltfourier",
    version,
    about = "Lubin-Tate groups, Mahler bases and Fourier pairings over p-adic fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand. Unset options fall back to the
/// config file, then to defaults.
#[derive(Debug, Clone, Args)]
struct Common {
    /// Residue characteristic.
    #[arg(long)]
    p: Option<u64>,
    /// Residue degree.
    #[arg(long)]
    f: Option<usize>,
    /// Ramification index.
    #[arg(long)]
    e: Option<usize>,
    /// Prime element, e.g. "3" or "pi" or "-pi".
    #[arg(long)]
    pi: Option<String>,
    /// Truncation order of the group law.
    #[arg(long)]
    trunc: Option<usize>,
    /// Working precision (ord_p units).
    #[arg(long)]
    prec: Option<u32>,
    /// Assertion precision.
    #[arg(long = "assert")]
    assertion: Option<i64>,
    /// Frobenius series: standard (πZ + Z^q) or multiplicative ((1+Z)^p - 1).
    #[arg(long)]
    frobenius: Option<String>,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// key = value file with defaults for the flags above.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Field invariants.
    Field(Common),
    /// Series attached to the group.
    Ltgroup {
        #[command(flatten)]
        common: Common,
        /// group_law, log, exp, frobenius, differential, or endo:<a>.
        #[arg(long, default_value = "group_law")]
        emit: String,
    },
    /// Valuations of torsion points and preimages of disks.
    Torsion {
        #[command(flatten)]
        common: Common,
        /// Torsion levels 1..=nmax.
        #[arg(long)]
        nmax: Option<u32>,
        /// Radius exponent v_r for the preimage of a disk, e.g. "3/2".
        #[arg(long)]
        radius: Option<String>,
    },
    /// The P_m, or the Mahler expansion of a polynomial in x.
    Mahler {
        #[command(flatten)]
        common: Common,
        /// Polynomial to expand, e.g. "x^2".
        #[arg(long)]
        expand: Option<String>,
        /// Largest m when listing the P_m.
        #[arg(long)]
        deg: Option<usize>,
    },
    /// The pairing of a series in Z with a polynomial in x.
    Pairing {
        #[command(flatten)]
        common: Common,
        /// Polynomial in Z, or hom:<a> for the homomorphism series F_a.
        #[arg(long, default_value = "1")]
        series: String,
        /// Polynomial in x.
        #[arg(long)]
        poly: String,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suite name: axioms, lemma32, lemma34, constants, lemma42, lemma43, lemma44, prop45, lemma46, thm47 or prop51.
        #[arg(long)]
        suite: Option<String>,
        /// Polynomial degree cap in the pairing, expansion and Mellin suites.
        #[arg(long)]
        deg: Option<usize>,
        /// Largest m in the P_m grids.
        #[arg(long)]
        mmax: Option<usize>,
        /// Largest level n.
        #[arg(long)]
        nmax: Option<u32>,
        /// Write a run manifest here.
        #[arg(long)]
        manifest_out: Option<PathBuf>,
        /// Re-run a manifest and compare its results byte for byte.
        #[arg(long, conflicts_with = "manifest_out")]
        replay: Option<PathBuf>,
    },
    /// Period exponents, the different and the disk thresholds.
    Constants(Common),
}

/// Flags merged with the config file.
struct Settings {
    config: ConfigFile,
    common: Common,
}

impl Settings {
    fn new(common: Common) -> Result<Self> {
        let config = match &common.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        Ok(Settings { config, common })
    }

    fn pick<T: std::str::FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.config.parse(key),
        }
    }

    fn json(&self) -> Result<bool> {
        Ok(self.common.json || self.config.flag("json")?)
    }

    fn format(&self) -> Result<Format> {
        Ok(if self.json()? { Format::Json } else { Format::Table })
    }

    fn assertion(&self) -> Result<i64> {
        Ok(self
            .pick(self.common.assertion, "assert")?
            .unwrap_or(ASSERTION_PRECISION))
    }

    fn trunc(&self) -> Result<Option<usize>> {
        self.pick(self.common.trunc, "trunc")
    }

    fn pi(&self) -> Option<String> {
        self.common
            .pi
            .clone()
            .or_else(|| self.config.get("pi").map(str::to_string))
    }

    fn frobenius(&self) -> Result<FrobeniusChoice> {
        match self.common.frobenius.as_deref().or(self.config.get("frobenius")) {
            Some(s) => s.parse(),
            None => Ok(FrobeniusChoice::Standard),
        }
    }

    /// Flag, then config, then the environment, then `auto`.
    fn precision(&self, auto: u32) -> Result<u32> {
        if let Some(w) = self.pick(self.common.prec, "prec")? {
            return Ok(w);
        }
        match std::env::var(PRECISION_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("{PRECISION_ENV}={v:?} is not a precision"))),
            Err(_) => Ok(auto),
        }
    }

    fn field_spec(&self, auto_precision: u32) -> Result<FieldSpec> {
        let p = self
            .pick(self.common.p, "p")?
            .ok_or_else(|| Error::InvalidParameters("--p is required".into()))?;
        let f = self.pick(self.common.f, "f")?.unwrap_or(1);
        let e = self.pick(self.common.e, "e")?.unwrap_or(1);
        Ok(FieldSpec::new(p, f, e, self.precision(auto_precision)?))
    }

    fn field(&self, order: usize) -> Result<Arc<PadicField>> {
        let p = self
            .pick(self.common.p, "p")?
            .ok_or_else(|| Error::InvalidParameters("--p is required".into()))?;
        self.field_spec(precision_for_order(p, order, self.assertion()?))?
            .build()
    }

    fn group(&self, field: &Arc<PadicField>, trunc: usize) -> Result<LubinTateGroup> {
        build_group(field, self.pi().as_deref(), self.frobenius()?, trunc)
    }
}

fn write_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{}", crate::verify::canonical_json(v))
}

fn field_cmd(s: &Settings, out: &mut dyn Write) -> Result<i32> {
    let field = s.field(0)?;
    let (sv, r) = period_exponents(&field);
    let pi = field.uniformizer();
    let v = json!({
        "field": serde_json::to_value(field.spec()).expect("spec serializes"),
        "q": field.q(),
        "degree": field.degree(),
        "uniformizer": pi.to_json(),
        "uniformizer_valuation": rational(&Rational::new(1, field.e() as i64)),
        "different": rational(&field.different_valuation()),
        "s": rational(&sv),
        "r": rational(&r),
    });
    if s.json()? {
        write_json(out, &v).map_err(io_error)?;
    } else {
        let lines = [
            format!("p = {}", field.p()),
            format!("f = {}", field.f()),
            format!("e = {}", field.e()),
            format!("q = {}", field.q()),
            format!("degree = {}", field.degree()),
            format!("precision = {}", field.precision()),
            format!("unramified modulus = {:?}", field.unramified_modulus()),
            format!("eisenstein modulus = {:?}", field.eisenstein_modulus()),
            format!("v(pi) = {}", Rational::new(1, field.e() as i64)),
            format!("different = {}", field.different_valuation()),
        ];
        for l in lines {
            writeln!(out, "{l}").map_err(io_error)?;
        }
    }
    Ok(0)
}

fn series_table(out: &mut dyn Write, series: &TruncSeries<PadicElement>) -> io::Result<()> {
    for (k, c) in series.coeffs().iter().enumerate() {
        if !c.is_zero() {
            writeln!(out, "Z^{k}: {c}")?;
        }
    }
    Ok(())
}

fn ltgroup_cmd(s: &Settings, emit: &str, out: &mut dyn Write) -> Result<i32> {
    let trunc = s.trunc()?.unwrap_or(crate::lubin_tate::DEFAULT_TRUNC);
    let field = s.field(trunc)?;
    let group = s.group(&field, trunc)?;
    let json = s.json()?;
    if emit == "group_law" {
        let law = group.group_law()?;
        if json {
            write_json(out, &law.to_json()).map_err(io_error)?;
        } else {
            for d in 0..=trunc {
                for i in 0..=d {
                    let c = law.coeff(i, d - i).expect("within truncation");
                    if !c.is_zero() {
                        writeln!(out, "X^{i} Y^{}: {c}", d - i).map_err(io_error)?;
                    }
                }
            }
        }
        return Ok(0);
    }
    let series = match emit {
        "log" => group.formal_log()?,
        "exp" => group.formal_exp()?,
        "frobenius" => group.frobenius(trunc),
        "differential" => group.invariant_differential(trunc)?,
        other => match other.strip_prefix("endo:") {
            Some(a) => group.endomorphism(&parse_element(&field, a)?)?,
            None => {
                return Err(Error::InvalidParameters(format!(
                    "unknown --emit {other:?}; expected group_law, log, exp, frobenius, differential or endo:<a>"
                )))
            }
        },
    };
    if json {
        write_json(out, &series.to_json()).map_err(io_error)?;
    } else {
        series_table(out, &series).map_err(io_error)?;
    }
    Ok(0)
}

fn parse_rational(src: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {src:?}"));
    let (n, d) = src.split_once('/').unwrap_or((src, "1"));
    let n: i64 = n.trim().parse().map_err(|_| bad())?;
    let d: i64 = d.trim().parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn torsion_cmd(s: &Settings, nmax: Option<u32>, radius: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let field = s.field(0)?;
    let group = s.group(&field, crate::lubin_tate::DEFAULT_TRUNC)?;
    let nmax = s.pick(nmax, "nmax")?.unwrap_or(2);
    let mut levels = Vec::new();
    for n in 1..=nmax {
        let vals = group.torsion_valuations(n)?;
        levels.push((n, vals));
    }
    let preimage = radius
        .map(parse_rational)
        .transpose()?
        .map(|v| group.disk_preimage_law(v).map(|d| (v, d)))
        .transpose()?;
    let threshold = preimage_threshold(&field);
    if s.json()? {
        let v = json!({
            "torsion": levels.iter().map(|(n, vals)| json!({
                "level": n,
                "valuations": vals.iter().map(|(r, k)| json!({"valuation": rational(r), "multiplicity": k})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "preimage_threshold": rational(&threshold),
            "preimage": preimage.as_ref().map(|(v, d)| json!({
                "radius_exponent": rational(v),
                "regime": d.regime.as_str(),
                "preimage_valuation": d.preimage_valuation.map(|x| rational(&x)),
                "root_valuations": d.root_valuations.iter().map(|(r, k)| json!({"valuation": rational(r), "multiplicity": k})).collect::<Vec<_>>(),
            })),
        });
        write_json(out, &v).map_err(io_error)?;
    } else {
        for (n, vals) in &levels {
            for (r, k) in vals {
                writeln!(out, "level {n}: {k} points of valuation {r}").map_err(io_error)?;
            }
        }
        writeln!(out, "preimage threshold = {threshold}").map_err(io_error)?;
        if let Some((v, d)) = &preimage {
            writeln!(out, "radius {v}: {}", d.regime.as_str()).map_err(io_error)?;
            for (r, k) in &d.root_valuations {
                writeln!(out, "  {k} solutions of valuation {r}").map_err(io_error)?;
            }
        }
    }
    Ok(0)
}

fn mahler_cmd(s: &Settings, expand: Option<&str>, deg: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let p = s
        .pick(s.common.p, "p")?
        .ok_or_else(|| Error::InvalidParameters("--p is required".into()))?;
    // parse over a throwaway field to learn the degree
    let probe = FieldSpec::new(
        p,
        s.pick(s.common.f, "f")?.unwrap_or(1),
        s.pick(s.common.e, "e")?.unwrap_or(1),
        32,
    )
    .build()?;
    let poly_deg = match expand {
        Some(src) => parse_polynomial(&probe, "x", src)?.formal_degree(),
        None => 0,
    };
    let cap = s.pick(deg, "deg")?.unwrap_or(6).max(poly_deg);
    let trunc = s.trunc()?.unwrap_or(crate::lubin_tate::DEFAULT_TRUNC);
    let field = s.field(cap.max(trunc))?;
    let basis = MahlerBasis::new(Arc::new(s.group(&field, trunc)?), cap)?;
    let json = s.json()?;
    let Some(src) = expand else {
        if json {
            let polys = (0..=cap)
                .map(|m| basis.poly(m).map(|p| p.to_json()))
                .collect::<Result<Vec<_>>>()?;
            write_json(out, &json!({"polynomials": polys})).map_err(io_error)?;
        } else {
            for m in 0..=cap {
                let pm = basis.poly(m)?;
                let terms: Vec<String> = pm
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| format!("({c})·Y^{j}"))
                    .collect();
                writeln!(out, "P_{m} = {}", terms.join(" + ")).map_err(io_error)?;
            }
        }
        return Ok(0);
    };
    let f = parse_polynomial(&field, "x", src)?;
    let expansion = basis.expand(&f)?;
    let back = expansion.reconstruct(&basis)?;
    let bound = Rational::from_integer(s.assertion()?);
    let holds = back.agrees_with(&lift_polynomial(&f), |d| d.is_zero_at(bound));
    if json {
        write_json(
            out,
            &json!({"f": src, "coefficients": expansion.to_json(), "reconstruction": back.to_json(), "holds": holds}),
        )
        .map_err(io_error)?;
    } else {
        for (m, c) in expansion.coefficients.iter().enumerate() {
            writeln!(out, "c_{m} = {c}").map_err(io_error)?;
        }
        writeln!(out, "reconstruction {}", if holds { "matches" } else { "DIFFERS" }).map_err(io_error)?;
    }
    Ok(if holds { 0 } else { 1 })
}

fn pairing_cmd(s: &Settings, series: &str, poly: &str, out: &mut dyn Write) -> Result<i32> {
    let p = s
        .pick(s.common.p, "p")?
        .ok_or_else(|| Error::InvalidParameters("--p is required".into()))?;
    let probe = FieldSpec::new(
        p,
        s.pick(s.common.f, "f")?.unwrap_or(1),
        s.pick(s.common.e, "e")?.unwrap_or(1),
        32,
    )
    .build()?;
    let deg = parse_polynomial(&probe, "x", poly)?.formal_degree();
    let trunc = s.trunc()?.unwrap_or(crate::lubin_tate::DEFAULT_TRUNC).max(deg);
    let field = s.field(trunc)?;
    let group = Arc::new(s.group(&field, trunc)?);
    let basis = MahlerBasis::new(group.clone(), deg)?;
    let f = parse_polynomial(&field, "x", poly)?;
    let big_f: TruncSeries<PeriodScalar> = match series.strip_prefix("hom:") {
        Some(a) => group.gm_hom_series(&parse_element(&field, a)?, deg)?,
        None => {
            let z = parse_polynomial(&field, "Z", series)?;
            lift_series(&z.to_series(deg.max(z.formal_degree())), 0)
        }
    };
    let value = basis.pairing_with(&big_f, &f)?;
    if s.json()? {
        write_json(out, &json!({"series": series, "f": poly, "value": value.to_json()})).map_err(io_error)?;
    } else {
        writeln!(out, "{{{series}, {poly}}} = {value}").map_err(io_error)?;
    }
    Ok(0)
}

fn constants_cmd(s: &Settings, out: &mut dyn Write) -> Result<i32> {
    let field = s.field(0)?;
    let (sv, r) = period_exponents(&field);
    let different = field.different_valuation();
    let radius = torsion_radius_exponent(&field, 1);
    let threshold = preimage_threshold(&field);
    if s.json()? {
        let v = json!({
            "s": rational(&sv),
            "r": rational(&r),
            "different": rational(&different),
            "torsion_radius_exponent": rational(&radius),
            "preimage_threshold": rational(&threshold),
        });
        write_json(out, &v).map_err(io_error)?;
    } else {
        writeln!(out, "s = {sv}").map_err(io_error)?;
        writeln!(out, "different = {different}").map_err(io_error)?;
        writeln!(out, "r = {r}").map_err(io_error)?;
        writeln!(out, "torsion radius exponent = {radius}").map_err(io_error)?;
        writeln!(out, "preimage threshold = {threshold}").map_err(io_error)?;
    }
    Ok(0)
}

struct VerifyArgs<'a> {
    suite: Option<&'a str>,
    deg: Option<usize>,
    mmax: Option<usize>,
    nmax: Option<u32>,
    manifest_out: Option<&'a PathBuf>,
    replay: Option<&'a PathBuf>,
}

fn verify_cmd(s: &Settings, a: VerifyArgs<'_>, out: &mut dyn Write) -> Result<i32> {
    if let Some(path) = a.replay {
        let manifest = RunManifest::load(path)?;
        let replay = manifest.replay()?;
        let v = json!({
            "identical": replay.identical,
            "recorded_sha256": replay.recorded_sha256,
            "replayed_sha256": replay.replayed_sha256,
        });
        if s.json()? {
            write_json(out, &v).map_err(io_error)?;
        } else {
            writeln!(
                out,
                "{}: {}",
                manifest.suite,
                if replay.identical { "identical" } else { "DIFFERENT" }
            )
            .map_err(io_error)?;
            writeln!(out, "sha256 {}", replay.replayed_sha256).map_err(io_error)?;
        }
        return Ok(if replay.identical { 0 } else { 1 });
    }
    let name = match a.suite {
        Some(n) => n.to_string(),
        None => s
            .config
            .get("suite")
            .map(str::to_string)
            .ok_or_else(|| Error::InvalidParameters("--suite is required".into()))?,
    };
    let suite: SuiteName = name.parse()?;
    let mut caps = Caps::defaults_for(suite);
    if let Some(t) = s.trunc()? {
        caps.trunc = t;
    }
    if let Some(d) = s.pick(a.deg, "deg")? {
        caps.deg = d;
    }
    if let Some(m) = s.pick(a.mmax, "mmax")? {
        caps.mmax = m;
    }
    if let Some(n) = s.pick(a.nmax, "nmax")? {
        caps.nmax = n;
    }
    let assertion = s.assertion()?;
    let auto = suggested_precision(s.pick(s.common.p, "p")?.unwrap_or(2), suite, &caps, assertion);
    let field = s.field_spec(auto)?;
    let request = SuiteRequest {
        suite,
        precision: PrecisionSettings {
            working: field.precision,
            assertion,
        },
        field,
        pi: s.pi(),
        frobenius: s.frobenius()?,
        caps,
    };
    let (manifest, report) = RunManifest::record(request)?;
    if let Some(path) = a.manifest_out {
        manifest.save(path)?;
    }
    emit_report(&report, s.format()?, out).map_err(io_error)?;
    Ok(if report.all_hold() { 0 } else { 1 })
}

fn io_error(e: io::Error) -> Error {
    Error::Unsupported(format!("output error: {e}"))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Field(c) => field_cmd(&Settings::new(c)?, out),
        Command::Ltgroup { common, emit } => ltgroup_cmd(&Settings::new(common)?, &emit, out),
        Command::Torsion { common, nmax, radius } => torsion_cmd(&Settings::new(common)?, nmax, radius.as_deref(), out),
        Command::Mahler { common, expand, deg } => mahler_cmd(&Settings::new(common)?, expand.as_deref(), deg, out),
        Command::Pairing { common, series, poly } => pairing_cmd(&Settings::new(common)?, &series, &poly, out),
        Command::Verify {
            common,
            suite,
            deg,
            mmax,
            nmax,
            manifest_out,
            replay,
        } => verify_cmd(
            &Settings::new(common)?,
            VerifyArgs {
                suite: suite.as_deref(),
                deg,
                mmax,
                nmax,
                manifest_out: manifest_out.as_ref(),
                replay: replay.as_ref(),
            },
            out,
        ),
        Command::Constants(c) => constants_cmd(&Settings::new(c)?, out),
    }
}

/// Runs the tool on `argv` (including the program name), writing results to
/// `out` and diagnostics to stderr; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if is_usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

/// [`run_with`] on standard output.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let code = run_with(argv, &mut lock);
    let _ = lock.flush();
    code
}
