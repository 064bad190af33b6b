//! Command-line front end. Every command prints a short summary and, with
//! `--json PATH`, writes the full report (`-` for standard output).
//!
//! Exit codes: 0 success, 2 invalid or unsupported input, 3 a search cap
//! was exhausted before a decision, 1 an internal check failed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bounds::{bounds_report, conv_inclusion_certificate, BoundsReport, ConvInclusion};
use crate::centralizer::{CentralizerReport, Verdict};
use crate::charsphere::{
    certify_tame_degree, positive_combination_feasible, tame_degree, tameness_certificate, Ray, SigmaSet,
    TameCertificate, TameVerdict, ZeroSumWitness,
};
use crate::error::{Error, Result};
use crate::funcfield::{self, PrimeCharInstance, ValuationProfile};
use crate::lattice::{
    fixed_sublattice, orbit_characters, trace_complement, verify_decomposition, Decomposition, LatticeAction,
    DEFAULT_GROUP_ORDER_CAP,
};
use crate::numfield::{nf_from_disc, nf_make, Caps, NumberField};
use crate::numfield_example::{
    self, build_instance, character_profiles, parse_subgroup, reduce_poly, select_prime, subgroup_closure,
    CharacterProfile, NumberFieldInstance,
};

#[derive(Parser, Debug)]
#[command(name = "sigmatame", version, about = "Invariant complements, tameness and centraliser verdicts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the full JSON report here (`-` for standard output).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The family over F_{p^m}(x1).
    PrimeChar {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
        /// Index of the subgroup <mu^d>; every divisor of m when omitted.
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// The family over a quadratic number field.
    NumberField {
        /// The field Q(sqrt(D)), defined by x^2 - D.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "poly")]
        disc: Option<i64>,
        /// Monic defining polynomial, coefficients ascending: "c0,c1,1".
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        /// Subgroup generator words over the automorphism indices, e.g. "1" or "1*1".
        #[arg(long)]
        subgroup: Option<String>,
        /// Largest prime tried when selecting q.
        #[arg(long, default_value_t = Caps::default().prime_search)]
        prime_cap: u64,
        /// Largest coefficient range scanned by the principality test.
        #[arg(long, default_value_t = Caps::default().principal_search)]
        principal_cap: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Decide m-tameness of a ray set.
    TameCheck {
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Floor bounds on finiteness degrees.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        c: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Certify that every ray of SUB lies in conv_{<=t}(SET).
    ConvCheck {
        #[arg(long, value_name = "FILE")]
        sub: PathBuf,
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Fixed sublattice and trace complement of a finite group action.
    Lattice {
        #[arg(long, value_name = "FILE")]
        action: PathBuf,
        /// A character whose orbit is reported, e.g. "1,0,0".
        #[arg(long, allow_hyphen_values = true)]
        character: Option<String>,
        #[arg(long, default_value_t = DEFAULT_GROUP_ORDER_CAP)]
        group_cap: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    command: Vec<String>,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct PrimeCharReport {
    p: u64,
    m: usize,
    rank: usize,
    modulus: Vec<u64>,
    a: String,
    sequence: Vec<String>,
    valuation_profiles: Vec<ValuationProfile>,
    sigma: SigmaSet,
    tame: TameVerdict,
    certificate: TameCertificate,
    verdicts: Vec<Verdict>,
    centralizers: Vec<CentralizerReport>,
}

#[derive(Serialize)]
struct NumberFieldReport {
    instance: NumberFieldInstance,
    characters: Vec<CharacterProfile>,
    sigma: SigmaSet,
    tame: TameVerdict,
    certificate: TameCertificate,
    verdicts: Vec<Verdict>,
    centralizers: Vec<SubgroupReport>,
}

#[derive(Serialize)]
struct SubgroupReport {
    generators: Vec<usize>,
    elements: Vec<usize>,
    report: CentralizerReport,
}

#[derive(Serialize)]
struct TameCheckReport {
    set: SigmaSet,
    m: usize,
    tame: bool,
    witness: Option<ZeroSumWitness>,
    certificate: Option<TameCertificate>,
    tame_degree: TameVerdict,
}

#[derive(Serialize)]
struct ConvCheckReport {
    sub: SigmaSet,
    set: SigmaSet,
    result: ConvInclusion,
}

#[derive(Serialize)]
struct LatticeReport {
    rank: usize,
    order: usize,
    decomposition: Decomposition,
    character: Option<Ray>,
    orbit: Option<Vec<Ray>>,
}

/// Runs the command line and returns the process exit code. Summaries go
/// to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(cli.command, echo, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn emit<T: Serialize>(out: &Output, command: Vec<String>, body: T, stdout: &mut dyn Write) -> Result<()> {
    let Some(path) = &out.json else {
        return Ok(());
    };
    let report = Report { command, body };
    let mut text = serde_json::to_string_pretty(&report)
        .map_err(|e| Error::violation(format!("report serialisation failed: {e}")))?;
    text.push('\n');
    if path.as_os_str() == "-" {
        stdout.write_all(text.as_bytes()).map_err(|e| Error::invalid(format!("cannot write report: {e}")))
    } else {
        fs::write(path, text).map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
    }
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::violation(format!("{what} failed re-validation")))
    }
}

/// Re-validates a tame-degree verdict and returns the certificate at its
/// degree (`n`-tame) for finite degrees.
fn verified_degree(set: &SigmaSet, expected: usize) -> Result<(TameVerdict, TameCertificate)> {
    let (tame, cert) = certify_tame_degree(set, expected)
        .ok_or_else(|| Error::violation(format!("tame degree is not {expected}")))?;
    let witness = tame.witness.as_ref().expect("certified degree carries a witness");
    check(witness.verify() && witness.len() == expected + 1, "zero-sum witness")?;
    check(witness.rays().all(|r| set.contains(r)), "zero-sum witness rays")?;
    check(cert.m == expected && cert.verify(set), "tameness certificate")?;
    Ok((tame, cert))
}

fn say(stdout: &mut dyn Write, line: String) -> Result<()> {
    writeln!(stdout, "{line}").map_err(|e| Error::invalid(format!("cannot write output: {e}")))
}

fn dispatch(command: Command, echo: Vec<String>, stdout: &mut dyn Write) -> Result<()> {
    match command {
        Command::PrimeChar { p, m, d, out } => {
            let inst = funcfield::prime_char_instance(p, m)?;
            let report = prime_char_report(&inst, d)?;
            say(stdout, format!("F_{p}^{m}: a = {}, modulus {:?}", report.a, report.modulus))?;
            say(stdout, format!("sequence a_1..a_{}: {}", report.rank, report.sequence.join(", ")))?;
            say(stdout, format!("Sigma^c: {} rays {}", report.sigma.len(), report.sigma))?;
            say(stdout, format!("tame degree {}", report.tame.degree))?;
            for c in &report.centralizers {
                say(
                    stdout,
                    format!(
                        "d = {}: restricted {} tame degree {}; {}",
                        c.d,
                        c.restricted_sigma,
                        c.restricted_tame_degree,
                        verdict_line(&c.verdicts)
                    ),
                )?;
            }
            emit(&out, echo, report, stdout)
        }
        Command::NumberField { disc, poly, q, p, subgroup, prime_cap, principal_cap, out } => {
            let caps = Caps { prime_search: prime_cap, principal_search: principal_cap, ..Caps::default() };
            let field = parse_field(disc, poly.as_deref())?;
            let report = number_field_report(&field, q, p, subgroup.as_deref(), &caps)?;
            let inst = &report.instance;
            say(stdout, format!("{field}: d_K = {}, index {}", field.discriminant(), field.index()))?;
            say(
                stdout,
                format!(
                    "q = {} (k = {}), I = {}, r = {}, alpha = {}, p = {}",
                    inst.q, inst.k_q, inst.i.ideal, inst.r, inst.alpha_text, inst.p
                ),
            )?;
            say(stdout, format!("Sigma^c: {} rays {}", report.sigma.len(), report.sigma))?;
            say(stdout, format!("tame degree {}", report.tame.degree))?;
            for c in &report.centralizers {
                say(
                    stdout,
                    format!(
                        "H0 = {:?}: restricted {} tame degree {}; {}",
                        c.elements,
                        c.report.restricted_sigma,
                        c.report.restricted_tame_degree,
                        verdict_line(&c.report.verdicts)
                    ),
                )?;
            }
            emit(&out, echo, report, stdout)
        }
        Command::TameCheck { set, m, out } => {
            let set = SigmaSet::from_json(&read(&set)?)?;
            let witness = positive_combination_feasible(&set, m);
            let certificate = match &witness {
                Some(w) => {
                    check(w.verify() && w.len() <= m, "zero-sum witness")?;
                    None
                }
                None => {
                    let c = tameness_certificate(&set, m)
                        .ok_or_else(|| Error::violation("exact search and dual certificate disagree"))?;
                    check(c.verify(&set), "tameness certificate")?;
                    Some(c)
                }
            };
            let tame = witness.is_none();
            if tame {
                say(stdout, format!("{m}-tame"))?;
            } else {
                say(stdout, format!("not {m}-tame"))?;
                let w = witness.as_ref().expect("witness present");
                let terms: Vec<String> = w
                    .terms
                    .iter()
                    .map(|t| format!("{}*{}", crate::arith::rat_to_string(&t.coeff), t.ray))
                    .collect();
                say(stdout, format!("witness: {} = 0", terms.join(" + ")))?;
            }
            let degree = tame_degree(&set);
            say(stdout, format!("tame degree {}", degree.degree))?;
            let body = TameCheckReport { set, m, tame, witness, certificate, tame_degree: degree };
            emit(&out, echo, body, stdout)
        }
        Command::Bounds { n, s, c, out } => {
            let report: BoundsReport = bounds_report(n, s, c)?;
            for v in &report.values {
                let flag = match v.status {
                    crate::centralizer::Status::Theorem => "",
                    crate::centralizer::Status::Conjectural => " (CONJECTURAL)",
                };
                say(stdout, format!("{}: {} = {}{flag}", v.name, v.formula, v.value))?;
            }
            emit(&out, echo, report, stdout)
        }
        Command::ConvCheck { sub, set, t, out } => {
            let sub = SigmaSet::from_json(&read(&sub)?)?;
            let set = SigmaSet::from_json(&read(&set)?)?;
            let result = conv_inclusion_certificate(&sub, &set, t)?;
            check(result.verify(&sub, &set), "inclusion certificate")?;
            match &result.counterexample {
                None => say(stdout, format!("every ray of the subset lies in conv_<={t} of the set"))?,
                Some(r) => say(stdout, format!("counterexample: {r} is not in conv_<={t} of the set"))?,
            }
            if let Some(d) = &result.derived {
                say(
                    stdout,
                    format!(
                        "tame degree of set {}, derived lower bound {}, subset tame degree {}",
                        d.set_tame_degree, d.bound, d.sub_tame_degree
                    ),
                )?;
            }
            emit(&out, echo, ConvCheckReport { sub, set, result }, stdout)
        }
        Command::Lattice { action, character, group_cap, out } => {
            let action = LatticeAction::from_json(&read(&action)?, group_cap)?;
            let q0 = fixed_sublattice(&action)?;
            let decomposition = trace_complement(&action, &q0)?;
            check(verify_decomposition(&action, &decomposition), "decomposition")?;
            say(stdout, format!("|H| = {}, rank {}", action.order(), action.rank()))?;
            say(stdout, format!("Q0 basis {:?}", decomposition.q0_basis))?;
            say(stdout, format!("Q1 basis {:?}", decomposition.q1_basis))?;
            say(stdout, format!("index {}", decomposition.index))?;
            let (character, orbit) = match character {
                Some(text) => {
                    let chi = Ray::canonicalize(&parse_ints(&text)?)?;
                    let orbit: Vec<Ray> = orbit_characters(&action, &chi)?.into_iter().collect();
                    say(
                        stdout,
                        format!(
                            "orbit of {chi}: {}",
                            orbit.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
                        ),
                    )?;
                    (Some(chi), Some(orbit))
                }
                None => (None, None),
            };
            let body =
                LatticeReport { rank: action.rank(), order: action.order(), decomposition, character, orbit };
            emit(&out, echo, body, stdout)
        }
    }
}

fn verdict_line(verdicts: &[Verdict]) -> String {
    verdicts.iter().map(|v| format!("{} {}", v.claim, v.citation)).collect::<Vec<_>>().join("; ")
}

fn parse_ints(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Error::invalid(format!("{s:?} is not an integer"))))
        .collect()
}

fn parse_field(disc: Option<i64>, poly: Option<&str>) -> Result<NumberField> {
    match (disc, poly) {
        (Some(d), None) => nf_from_disc(d),
        (None, Some(p)) => nf_make(&parse_ints(p)?),
        _ => Err(Error::invalid("give exactly one of --disc or --poly")),
    }
}

fn prime_char_report(inst: &PrimeCharInstance, d: Option<usize>) -> Result<PrimeCharReport> {
    let n = inst.rank();
    let sigma = funcfield::sigma_complement_funcfield(inst)?;
    let (tame, certificate) = verified_degree(&sigma, n)?;
    let ds: Vec<usize> = match d {
        Some(d) => vec![d],
        None => (1..=inst.m()).filter(|d| inst.m().is_multiple_of(*d)).collect(),
    };
    let centralizers = ds
        .into_iter()
        .map(|d| {
            let r = funcfield::centralizer_report_funcfield(inst, d)?;
            check(r.verify(), "centralizer report")?;
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PrimeCharReport {
        p: inst.p(),
        m: inst.m(),
        rank: n,
        modulus: inst.field.modulus().to_vec(),
        a: inst.a.to_string(),
        sequence: inst.sequence.iter().map(|e| e.to_string()).collect(),
        valuation_profiles: funcfield::valuation_profiles(inst),
        sigma,
        tame,
        certificate,
        verdicts: funcfield::group_verdicts(inst),
        centralizers,
    })
}

fn number_field_report(
    field: &NumberField,
    q: Option<u64>,
    p: Option<u64>,
    subgroup: Option<&str>,
    caps: &Caps,
) -> Result<NumberFieldReport> {
    let (q, k_q) = match q {
        Some(q) => {
            let k = *reduce_poly(field, q)
                .roots()
                .first()
                .ok_or_else(|| Error::invalid(format!("f has no root modulo {q}")))?;
            (q, k)
        }
        None => select_prime(field, 2, caps)?,
    };
    let inst = build_instance(field, q, k_q, p, caps)?;
    let characters = character_profiles(&inst)?;
    let sigma = numfield_example::sigma_complement_numfield(&inst)?;
    let n = inst.rank();
    let (tame, certificate) = verified_degree(&sigma, n)?;
    let generator_sets: Vec<Vec<usize>> = match subgroup {
        Some(words) => vec![parse_subgroup(&inst, words)?],
        None => {
            // Every cyclic subgroup once.
            let mut seen: Vec<Vec<usize>> = Vec::new();
            let mut gens = Vec::new();
            for t in 0..n {
                let mut elems = subgroup_closure(&inst, &[t]);
                elems.sort();
                if !seen.contains(&elems) {
                    seen.push(elems);
                    gens.push(vec![t]);
                }
            }
            gens
        }
    };
    let centralizers = generator_sets
        .into_iter()
        .map(|generators| {
            let report = numfield_example::centralizer_report_numfield(&inst, &generators)?;
            check(report.verify(), "centralizer report")?;
            let mut elements = subgroup_closure(&inst, &generators);
            elements.sort();
            Ok(SubgroupReport { generators, elements, report })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NumberFieldReport {
        verdicts: numfield_example::group_verdicts(&inst),
        instance: inst,
        characters,
        sigma,
        tame,
        certificate,
        centralizers,
    })
}
