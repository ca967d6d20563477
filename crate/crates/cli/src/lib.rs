//! Front end for the `monogenic` binary: argument parsing, presentation
//! input and output in text or JSON.

pub mod parse;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use monogenic::ideal::{
    CanonicalBasis, IdealError, MembershipCertificate, MonicMultiple, Presentation,
};
use monogenic::invariants::{
    extract_monic_relation, invariants_with_basis, Torsion, TorsionOptions,
};
use monogenic::par::Strategy;
use monogenic::poly::{IntPoly, RationalGcd};
use monogenic::quotient::{
    build_quotient_with_basis, verify_separation, FiniteRing, Quotient, QuotientError,
    SeparationOptions, Separator,
};
use monogenic::separability::{
    decide_with_basis, torsion_split, witness_form, FailureReason, SeparabilityVerdict,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::parse::{parse_cofactor, parse_int_poly, parse_poly, ParseError};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "monogenic/1";

/// Carriers up to this size get the exhaustive axiom check.
const AXIOM_CHECK_LIMIT: usize = 512;

#[derive(Debug, Parser)]
#[command(
    name = "monogenic",
    version,
    about = "Finite separability of monogenic rings Z<a | f_i(a) = 0>"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PresentationArgs {
    /// A defining relator, e.g. "x^2 - x". Repeatable.
    #[arg(short, long = "relator", value_name = "EXPR")]
    pub relators: Vec<String>,
    /// File with one relator per line; `#` starts a comment.
    #[arg(short, long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide finite separability and print the evidence.
    Decide {
        #[command(flatten)]
        input: PresentationArgs,
    },
    /// Algebraic degree, minimal polynomial, torsion and torsion exponent.
    Invariants {
        #[command(flatten)]
        input: PresentationArgs,
        /// Scan every k up to the content instead of its divisors.
        #[arg(long)]
        strict: bool,
        /// Degree bound for the torsion search.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Canonical basis of the relator ideal with cofactors.
    Basis {
        #[command(flatten)]
        input: PresentationArgs,
    },
    /// Normal form of a polynomial modulo the relator ideal.
    Nf {
        #[command(flatten)]
        input: PresentationArgs,
        #[arg(long, value_name = "EXPR")]
        poly: String,
    },
    /// Ideal membership with a certificate.
    Member {
        #[command(flatten)]
        input: PresentationArgs,
        #[arg(long, value_name = "EXPR")]
        poly: String,
    },
    /// The finite quotient by V + qK.
    Quotient {
        #[command(flatten)]
        input: PresentationArgs,
        #[arg(short = 'q', long)]
        modulus: BigInt,
        /// Run the exhaustive ring-axiom check (carriers up to 512).
        #[arg(long)]
        check_axioms: bool,
    },
    /// Search for a finite quotient separating a target from a subring.
    Separate {
        #[command(flatten)]
        input: PresentationArgs,
        #[arg(long, value_name = "EXPR")]
        target: String,
        /// A subring generator. Repeatable.
        #[arg(short, long = "gen", value_name = "EXPR")]
        gens: Vec<String>,
        /// Largest modulus tried.
        #[arg(long, default_value_t = 64)]
        bound: u64,
        /// Quotients with more elements are skipped.
        #[arg(long, default_value_t = 1 << 12)]
        max_carrier: usize,
        /// Try moduli one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// A monic torsion relation k * phi(a) = 0; with --poly, extracted from
    /// that member of the ideal.
    Witness {
        #[command(flatten)]
        input: PresentationArgs,
        #[arg(long, value_name = "EXPR")]
        poly: Option<String>,
    },
    /// Re-check every certificate in a JSON document produced by this tool.
    Verify {
        #[arg(value_name = "PATH")]
        document: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot parse `{input}`: {source}")]
    Parse { input: String, source: ParseError },
    #[error("{path}:{line}: {source}")]
    ParseFile {
        path: String,
        line: usize,
        source: ParseError,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("{0}")]
    Usage(String),
}

/// Exit status for a document whose certificates do not check out.
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// What a successful run prints and how it exits.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub status: i32,
}

/// Runs the tool on `argv` and returns the exit status, writing to the
/// process streams.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", out.stdout);
            out.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn parse_arg(s: &str) -> Result<IntPoly, CliError> {
    parse_int_poly(s).map_err(|source| CliError::Parse {
        input: s.to_string(),
        source,
    })
}

/// Reads the presentation from `--relator` flags and `--file`, in that order.
pub fn read_presentation(
    args: &PresentationArgs,
    warnings: &mut Vec<String>,
) -> Result<Presentation, CliError> {
    let mut relators = Vec::new();
    let mut push = |expr: crate::parse::PolyExpr, origin: String, warnings: &mut Vec<String>| {
        if expr.is_zero() {
            warnings.push(format!(
                "relator {origin} is zero after merging terms; dropped"
            ));
        } else {
            relators.push(expr.to_poly());
        }
    };
    for r in &args.relators {
        let e = parse_poly(r).map_err(|source| CliError::Parse {
            input: r.clone(),
            source,
        })?;
        push(e, format!("`{r}`"), warnings);
    }
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        for (i, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let e = parse_poly(body).map_err(|source| CliError::ParseFile {
                path: path.display().to_string(),
                line: i + 1,
                source,
            })?;
            push(e, format!("on line {}", i + 1), warnings);
        }
    }
    Ok(Presentation::new(relators)?)
}

fn poly_list(ps: &[IntPoly]) -> Value {
    Value::Array(ps.iter().map(|p| json!(p.to_string())).collect())
}

fn certificate_json(c: &MembershipCertificate) -> Value {
    json!({ "claim": c.claim.to_string(), "cofactors": poly_list(&c.cofactors) })
}

fn monic_json(m: &MonicMultiple) -> Value {
    json!({
        "k": m.k.to_string(),
        "phi": m.phi.to_string(),
        "certificate": certificate_json(&m.certificate),
    })
}

fn rational_gcd_json(g: &RationalGcd) -> Value {
    json!({
        "gamma": g.gamma.to_string(),
        "gamma_is_integral": g.gamma.to_int().is_some(),
        "bezout": g.bezout.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "l": g.l.to_string(),
        "certificate": {
            "claim": g.scaled_gamma().to_string(),
            "cofactors": poly_list(&g.integer_cofactors()),
        },
    })
}

fn certificate_text(c: &MembershipCertificate, relators: &[IntPoly]) -> String {
    let terms: Vec<String> = c
        .cofactors
        .iter()
        .zip(relators)
        .filter(|(h, _)| !h.is_zero())
        .map(|(h, f)| format!("({h})*({f})"))
        .collect();
    let rhs = if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    };
    format!("{} = {rhs}", c.claim)
}

fn failure_json(r: &FailureReason) -> Value {
    match r {
        FailureReason::NoRelators => json!({ "kind": "NoRelators" }),
        FailureReason::NonSquarefreeGcd(p) => {
            json!({ "kind": "NonSquarefreeGcd", "prime": p.to_string() })
        }
        FailureReason::NonIntegerGamma { index, value } => {
            json!({ "kind": "NonIntegerGamma", "degree": index, "value": value.to_string() })
        }
    }
}

fn failure_text(r: &FailureReason) -> String {
    match r {
        FailureReason::NoRelators => "no relators (a is transcendental)".into(),
        FailureReason::NonSquarefreeGcd(p) => format!("{p}^2 divides every relator coefficient"),
        FailureReason::NonIntegerGamma { index, value } => {
            format!("rational gcd has non-integer coefficient {value} at x^{index}")
        }
    }
}

fn header(command: &str, p: &Presentation) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("relators".into(), poly_list(p.relators()));
    m
}

fn render(json_out: bool, doc: serde_json::Map<String, Value>, text: String) -> String {
    if json_out {
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    }
}

fn relators_line(p: &Presentation) -> String {
    if p.is_empty() {
        "relators: (none)\n".into()
    } else {
        let rs: Vec<String> = p.relators().iter().map(ToString::to_string).collect();
        format!("relators: {}\n", rs.join(", "))
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut warnings = Vec::new();
    let mut status = 0;
    let stdout = match &cli.command {
        Command::Decide { input } => {
            let p = read_presentation(input, &mut warnings)?;
            let basis = p.canonical_basis();
            let v = decide_with_basis(&p, &basis);
            decide_output(cli.json, &p, &v)
        }
        Command::Invariants {
            input,
            strict,
            bound,
        } => {
            let p = read_presentation(input, &mut warnings)?;
            if bound == &Some(0) {
                return Err(CliError::Usage("--bound must be at least 1".into()));
            }
            let opts = TorsionOptions {
                strict: *strict,
                degree_bound: *bound,
            };
            invariants_output(cli.json, &p, opts)
        }
        Command::Basis { input } => {
            let p = read_presentation(input, &mut warnings)?;
            basis_output(cli.json, &p, &p.canonical_basis())
        }
        Command::Nf { input, poly } => {
            let p = read_presentation(input, &mut warnings)?;
            let g = parse_arg(poly)?;
            let r = p.canonical_basis().reduce(&g);
            let mut doc = header("nf", &p);
            doc.insert("poly".into(), json!(g.to_string()));
            doc.insert("normal_form".into(), json!(r.normal_form.to_string()));
            doc.insert("certificate".into(), certificate_json(&r.certificate));
            let text = format!("{}\n", r.normal_form);
            render(cli.json, doc, text)
        }
        Command::Member { input, poly } => {
            let p = read_presentation(input, &mut warnings)?;
            let g = parse_arg(poly)?;
            let r = p.canonical_basis().reduce(&g);
            let member = r.normal_form.is_zero();
            let mut doc = header("member", &p);
            doc.insert("poly".into(), json!(g.to_string()));
            doc.insert("member".into(), json!(member));
            doc.insert("normal_form".into(), json!(r.normal_form.to_string()));
            doc.insert("certificate".into(), certificate_json(&r.certificate));
            let text = if member {
                format!(
                    "member: yes\ncertificate: {}\n",
                    certificate_text(&r.certificate, p.relators())
                )
            } else {
                format!("member: no\nnormal form: {}\n", r.normal_form)
            };
            render(cli.json, doc, text)
        }
        Command::Quotient {
            input,
            modulus,
            check_axioms,
        } => {
            let p = read_presentation(input, &mut warnings)?;
            let q = build_quotient_with_basis(&p.canonical_basis(), modulus)?;
            quotient_output(cli.json, &p, &q, *check_axioms, &mut warnings)
        }
        Command::Separate {
            input,
            target,
            gens,
            bound,
            max_carrier,
            sequential,
        } => {
            let p = read_presentation(input, &mut warnings)?;
            if *bound < 2 {
                return Err(CliError::Usage("--bound must be at least 2".into()));
            }
            let t = parse_arg(target)?;
            let gs = gens
                .iter()
                .map(|g| parse_arg(g))
                .collect::<Result<Vec<_>, _>>()?;
            let opts = SeparationOptions {
                modulus_bound: (*bound).min(monogenic::quotient::MAX_MODULUS),
                max_carrier: *max_carrier,
                strategy: if *sequential {
                    Strategy::Sequential
                } else {
                    Strategy::Parallel
                },
            };
            separate_output(cli.json, &p, &t, &gs, opts)
        }
        Command::Witness { input, poly } => {
            let p = read_presentation(input, &mut warnings)?;
            witness_output(cli.json, &p, poly.as_deref())?
        }
        Command::Verify { document } => {
            let (text, ok) = verify_document(document)?;
            if !ok {
                status = EXIT_VERIFY_FAILED;
            }
            text
        }
    };
    Ok(Outcome {
        stdout,
        warnings,
        status,
    })
}

fn decide_output(json_out: bool, p: &Presentation, v: &SeparabilityVerdict) -> String {
    let mut doc = header("decide", p);
    doc.insert("separable".into(), json!(v.separable));
    doc.insert(
        "coefficient_gcd".into(),
        json!(v.coefficient_gcd.to_string()),
    );
    doc.insert(
        "squarefree".into(),
        v.squarefree_witness.as_ref().map_or(Value::Null, |w| {
            json!({
                "is_squarefree": w.is_squarefree,
                "offending_prime": w.offending_prime.as_ref().map(ToString::to_string),
                "factorization": w.factorization.iter().map(|(p, e)| json!([p.to_string(), e])).collect::<Vec<_>>(),
            })
        }),
    );
    doc.insert(
        "rational_gcd".into(),
        v.rational_gcd
            .as_ref()
            .map_or(Value::Null, rational_gcd_json),
    );
    doc.insert(
        "failure_reason".into(),
        v.failure_reason.as_ref().map_or(Value::Null, failure_json),
    );
    doc.insert(
        "positive_witness".into(),
        v.positive_witness.as_ref().map_or(Value::Null, monic_json),
    );

    let mut t = relators_line(p);
    let _ = writeln!(
        t,
        "verdict: {}",
        if v.separable {
            "separable"
        } else {
            "NOT separable"
        }
    );
    if let Some(r) = &v.failure_reason {
        let _ = writeln!(t, "reason: {}", failure_text(r));
    }
    if let Some(w) = &v.squarefree_witness {
        let _ = writeln!(
            t,
            "coefficient gcd: {} ({})",
            v.coefficient_gcd,
            if w.is_squarefree {
                "squarefree"
            } else {
                "not squarefree"
            }
        );
    }
    if let Some(g) = &v.rational_gcd {
        let _ = writeln!(t, "gcd over Q: {}  (l = {})", g.gamma, g.l);
    }
    if let Some(m) = &v.positive_witness {
        let _ = writeln!(t, "witness: {} * ({}) = 0", m.k, m.phi);
        let _ = writeln!(
            t,
            "certificate: {}",
            certificate_text(&m.certificate, p.relators())
        );
    }
    render(json_out, doc, t)
}

fn invariants_output(json_out: bool, p: &Presentation, opts: TorsionOptions) -> String {
    let basis = p.canonical_basis();
    let inv = invariants_with_basis(p, &basis, opts);
    let show = |x: &Option<IntPoly>| x.as_ref().map(ToString::to_string);
    let mut doc = header("invariants", p);
    doc.insert("algebraic_degree".into(), json!(inv.algebraic_degree));
    doc.insert(
        "minimal_polynomial".into(),
        json!(show(&inv.minimal_polynomial)),
    );
    doc.insert(
        "minimal_content".into(),
        json!(inv.minimal_content.as_ref().map(ToString::to_string)),
    );
    doc.insert(
        "minimal_primitive".into(),
        json!(show(&inv.minimal_primitive)),
    );
    doc.insert(
        "torsion".into(),
        match &inv.torsion {
            Torsion::Finite { tau, witness, bound } => {
                json!({ "finite": true, "tau": tau.to_string(), "bound": bound, "witness": monic_json(witness) })
            }
            Torsion::Infinite { bound } => json!({ "finite": false, "bound": bound }),
        },
    );
    doc.insert("torsion_exponent".into(), json!(inv.torsion_exponent));

    let mut t = relators_line(p);
    match (&inv.algebraic_degree, &inv.minimal_polynomial) {
        (Some(d), Some(f)) => {
            let _ = writeln!(t, "algebraic degree: {d}");
            let _ = writeln!(
                t,
                "minimal polynomial: {f} = {} * ({})",
                inv.minimal_content.as_ref().expect("set with f"),
                inv.minimal_primitive.as_ref().expect("set with f")
            );
        }
        _ => {
            let _ = writeln!(t, "algebraic degree: none (a is transcendental)");
        }
    }
    match &inv.torsion {
        Torsion::Finite {
            tau,
            witness,
            bound,
        } => {
            let _ = writeln!(t, "integer torsion: {tau} (degree bound {bound})");
            let _ = writeln!(t, "witness: {} * ({}) = 0", witness.k, witness.phi);
        }
        Torsion::Infinite { bound } => {
            let _ = writeln!(t, "integer torsion: none up to degree {bound}");
        }
    }
    match inv.torsion_exponent {
        Some(e) => {
            let _ = writeln!(t, "torsion exponent: {e}");
        }
        None => {
            let _ = writeln!(t, "torsion exponent: none");
        }
    }
    render(json_out, doc, t)
}

fn basis_output(json_out: bool, p: &Presentation, basis: &CanonicalBasis) -> String {
    let mut doc = header("basis", p);
    let elems: Vec<Value> = basis
        .elements()
        .iter()
        .map(|e| {
            json!({
                "poly": e.poly.to_string(),
                "certificate": { "claim": e.poly.to_string(), "cofactors": poly_list(&e.cofactors) },
            })
        })
        .collect();
    doc.insert("basis".into(), Value::Array(elems));
    let mut t = relators_line(p);
    for e in basis.elements() {
        let cert = MembershipCertificate {
            cofactors: e.cofactors.clone(),
            claim: e.poly.clone(),
        };
        let _ = writeln!(t, "{}", certificate_text(&cert, p.relators()));
    }
    render(json_out, doc, t)
}

fn ring_json(r: &FiniteRing) -> Value {
    json!({
        "modulus": r.modulus(),
        "carrier_size": r.carrier_size().to_string(),
        "standard_monomials": r.standard_monomials().iter()
            .map(|(d, c)| json!({ "degree": d, "radix": c })).collect::<Vec<_>>(),
        "action": r.multiplication_action().iter()
            .map(|(d, img)| json!({ "degree": d, "image": img.to_string() })).collect::<Vec<_>>(),
    })
}

fn quotient_output(
    json_out: bool,
    p: &Presentation,
    q: &Quotient,
    check_axioms: bool,
    warnings: &mut Vec<String>,
) -> String {
    let mut doc = header("quotient", p);
    let mut t = relators_line(p);
    match q {
        Quotient::Finite(r) => {
            doc.insert("finite".into(), json!(true));
            doc.insert("ring".into(), ring_json(r));
            t.push_str(&r.dump());
            if check_axioms {
                let small = r.carrier_len().is_some_and(|n| n <= AXIOM_CHECK_LIMIT);
                if small {
                    let res = r.check_axioms(Strategy::Parallel);
                    doc.insert(
                        "axioms".into(),
                        json!(res.as_ref().map_or_else(|e| e.to_string(), |_| "ok".into())),
                    );
                    let _ = writeln!(
                        t,
                        "axioms: {}",
                        res.map_or_else(|e| e.to_string(), |_| "ok".into())
                    );
                } else {
                    warnings.push(format!(
                        "carrier exceeds {AXIOM_CHECK_LIMIT}; axiom check skipped"
                    ));
                }
            }
        }
        Quotient::Infinite(inf) => {
            doc.insert("finite".into(), json!(false));
            doc.insert("modulus".into(), json!(inf.modulus));
            doc.insert(
                "ladder".into(),
                Value::Array(
                    inf.ladder
                        .iter()
                        .map(|(d, c)| json!({ "degree": d, "leading_coeff": c.to_string() }))
                        .collect(),
                ),
            );
            let _ = writeln!(t, "modulus: {}", inf.modulus);
            let _ = writeln!(t, "infinite: no member of V + qK is monic");
            let rungs: Vec<String> = inf
                .ladder
                .iter()
                .map(|(d, c)| format!("{c}x^{d}"))
                .collect();
            let _ = writeln!(t, "leading terms: [{}]", rungs.join(", "));
        }
    }
    render(json_out, doc, t)
}

fn separate_output(
    json_out: bool,
    p: &Presentation,
    t: &IntPoly,
    gs: &[IntPoly],
    opts: SeparationOptions,
) -> String {
    let res = Separator::new(p, opts).separate(t, gs);
    let verified = res.found && verify_separation(p, t, gs, &res);
    let mut doc = header("separate", p);
    doc.insert("target".into(), json!(t.to_string()));
    doc.insert("generators".into(), poly_list(gs));
    doc.insert("found".into(), json!(res.found));
    doc.insert("verified".into(), json!(verified));
    doc.insert(
        "quotient".into(),
        res.quotient.as_ref().map_or(Value::Null, ring_json),
    );
    doc.insert(
        "image_of_target".into(),
        json!(res.image_of_target.as_ref().map(ToString::to_string)),
    );
    doc.insert(
        "subring_image".into(),
        Value::Array(
            res.subring_image
                .iter()
                .map(|e| json!(e.to_string()))
                .collect(),
        ),
    );
    doc.insert(
        "bound_exhausted".into(),
        json!(res.bound_exhausted.as_ref().map(ToString::to_string)),
    );
    doc.insert("skipped_moduli".into(), json!(res.skipped));

    let mut s = relators_line(p);
    match (&res.quotient, &res.image_of_target) {
        (Some(r), Some(img)) => {
            let _ = writeln!(s, "separated modulo q = {}", r.modulus());
            let _ = writeln!(s, "image of target: {img}");
            let sub: Vec<String> = res.subring_image.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "image of subring: {{{}}}", sub.join(", "));
            let _ = writeln!(
                s,
                "independent check: {}",
                if verified { "ok" } else { "FAILED" }
            );
        }
        _ => {
            let _ = writeln!(
                s,
                "no separating quotient with modulus up to {}",
                res.bound_exhausted
                    .as_ref()
                    .map_or_else(String::new, ToString::to_string)
            );
        }
    }
    if !res.skipped.is_empty() {
        let _ = writeln!(s, "skipped (carrier too large): {:?}", res.skipped);
    }
    render(json_out, doc, s)
}

fn witness_output(
    json_out: bool,
    p: &Presentation,
    poly: Option<&str>,
) -> Result<String, CliError> {
    let basis = p.canonical_basis();
    let mut doc = header("witness", p);
    let mut t = relators_line(p);
    match poly {
        Some(src) => {
            let g = parse_arg(src)?;
            doc.insert("poly".into(), json!(g.to_string()));
            match extract_monic_relation(&basis, &g) {
                Ok(m) => {
                    doc.insert("witness".into(), monic_json(&m));
                    let _ = writeln!(t, "witness: {} * ({}) = 0", m.k, m.phi);
                    let _ = writeln!(
                        t,
                        "certificate: {}",
                        certificate_text(&m.certificate, p.relators())
                    );
                }
                Err(e) => {
                    doc.insert("witness".into(), Value::Null);
                    doc.insert("error".into(), json!(e.to_string()));
                    let _ = writeln!(t, "no witness: {e}");
                }
            }
        }
        None => {
            let v = decide_with_basis(p, &basis);
            match witness_form(&v) {
                Ok((k, tail)) => {
                    let m = v
                        .positive_witness
                        .as_ref()
                        .expect("separable verdicts carry a witness");
                    doc.insert("witness".into(), monic_json(m));
                    doc.insert(
                        "tail".into(),
                        json!(tail.iter().map(ToString::to_string).collect::<Vec<_>>()),
                    );
                    let _ = writeln!(t, "witness: {} * ({}) = 0", k, m.phi);
                    let _ = writeln!(
                        t,
                        "certificate: {}",
                        certificate_text(&m.certificate, p.relators())
                    );
                    if k > BigInt::from(1) {
                        if let Ok(split) = torsion_split(&k) {
                            let parts: Vec<Value> = split
                                .parts
                                .iter()
                                .zip(&split.bezout)
                                .map(|((q, c), z)| {
                                    json!({ "prime": q.to_string(), "cofactor": c.to_string(), "bezout": z.to_string() })
                                })
                                .collect();
                            doc.insert("torsion_split".into(), Value::Array(parts));
                            let terms: Vec<String> = split
                                .parts
                                .iter()
                                .zip(&split.bezout)
                                .map(|((_, c), z)| format!("({z})*{c}"))
                                .collect();
                            let _ = writeln!(t, "torsion split: {} = 1", terms.join(" + "));
                        }
                    }
                }
                Err(e) => {
                    doc.insert("witness".into(), Value::Null);
                    doc.insert("error".into(), json!(e.to_string()));
                    let _ = writeln!(t, "no witness: {e}");
                }
            }
        }
    }
    Ok(render(json_out, doc, t))
}

fn parse_field(v: &Value, what: &str) -> Result<IntPoly, CliError> {
    let s = v
        .as_str()
        .ok_or_else(|| CliError::Document(format!("{what} is not a string")))?;
    parse_int_poly(s).map_err(|source| CliError::Parse {
        input: s.to_string(),
        source,
    })
}

/// Collects `(path, problem)` for every certificate under `v`.
fn check_certificates(
    v: &Value,
    path: &str,
    relators: &[IntPoly],
    checked: &mut usize,
    failures: &mut Vec<String>,
) -> Result<(), CliError> {
    match v {
        Value::Object(m) => {
            if let (Some(claim), Some(Value::Array(cofs))) = (m.get("claim"), m.get("cofactors")) {
                let cert = MembershipCertificate {
                    claim: parse_field(claim, "claim")?,
                    cofactors: cofs
                        .iter()
                        .map(|c| {
                            let s = c.as_str().ok_or_else(|| {
                                CliError::Document("cofactor is not a string".into())
                            })?;
                            parse_cofactor(s).map_err(|source| CliError::Parse {
                                input: s.to_string(),
                                source,
                            })
                        })
                        .collect::<Result<_, _>>()?,
                };
                *checked += 1;
                if !cert.verify(relators) {
                    failures.push(format!("{path}: cofactors do not combine to the claim"));
                }
            }
            if let (Some(k), Some(phi), Some(Value::Object(cert))) =
                (m.get("k"), m.get("phi"), m.get("certificate"))
            {
                let k: BigInt = k.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| {
                    CliError::Document(format!("{path}.k is not an integer string"))
                })?;
                let phi = parse_field(phi, "phi")?;
                let claim = parse_field(cert.get("claim").unwrap_or(&Value::Null), "claim")?;
                *checked += 1;
                if !phi.is_monic() || k < BigInt::from(1) || phi.scale(&k) != claim {
                    failures.push(format!(
                        "{path}: claim is not k * phi with phi monic and k >= 1"
                    ));
                }
            }
            for (key, child) in m {
                check_certificates(child, &format!("{path}.{key}"), relators, checked, failures)?;
            }
        }
        Value::Array(xs) => {
            for (i, child) in xs.iter().enumerate() {
                check_certificates(child, &format!("{path}[{i}]"), relators, checked, failures)?;
            }
        }
        _ => {}
    }
    Ok(())
}

fn verify_document(path: &PathBuf) -> Result<(String, bool), CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| CliError::Document(e.to_string()))?;
    if doc.get("schema").and_then(Value::as_str) != Some(SCHEMA) {
        return Err(CliError::Document(format!("expected schema {SCHEMA}")));
    }
    let relators: Vec<IntPoly> = doc
        .get("relators")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Document("missing relators".into()))?
        .iter()
        .map(|r| parse_field(r, "relator"))
        .collect::<Result<_, _>>()?;
    let mut checked = 0;
    let mut failures = Vec::new();
    check_certificates(&doc, "$", &relators, &mut checked, &mut failures)?;
    let mut out = format!("certificates checked: {checked}\n");
    for f in &failures {
        let _ = writeln!(out, "FAILED {f}");
    }
    let _ = writeln!(
        out,
        "{}",
        if failures.is_empty() {
            "all valid"
        } else {
            "invalid"
        }
    );
    Ok((out, failures.is_empty()))
}
