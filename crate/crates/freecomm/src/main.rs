//! Command-line front end: every library capability behind a subcommand,
//! with JSON (or CSV) output and reproducible configuration echoing.

use clap::{Args, Parser, Subcommand, ValueEnum};
use freecomm::exact::{
    parse_gaussian, parse_rational, standard_skew_matrix, sym, ExactMatrix, MultiPoly, Rational,
};
use freecomm::freecalc::{
    cumulants_from_moments, fid_hankel_check, mixed_moment, moments_from_cumulants, poly_cumulant,
    CumulantSpec, ExpansionMode, FreeFamily, NCPolynomial,
};
use freecomm::involution::{classify, psi, sigma_of, validate_involution};
use freecomm::laws::{
    gen_tetilla, semicircle_law, skew_law_decompose, tetilla_density_moment, tetilla_law,
    tetilla_support_bound,
};
use freecomm::ncpart::{count_nc, enumerate_nc, NcFilter, SetPartition};
use freecomm::quadform::{
    hadamard_representation, strong_cancellation_check, symbolic_skew_matrix, t2_commutator_table,
    QuadMode, QuadraticForm,
};
use freecomm::rmt::{compare_with_prediction, MatrixModel};
use freecomm::{Error, Result};
use serde_json::{json, Value};
use std::io::Write;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "freecomm",
    version,
    about = "Exact free-probability combinatorics: noncrossing partitions, free cumulants, \
             commutator laws and their Monte Carlo cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Noncrossing partitions: enumeration, Kreweras complements, lattice ops.
    Nc {
        #[command(subcommand)]
        cmd: NcCmd,
    },
    /// The sign-reversing involution on odd upper complements.
    Involution {
        #[command(subcommand)]
        cmd: InvCmd,
    },
    /// Moment/cumulant conversion and cumulants of words and polynomials.
    Cumulant {
        #[command(subcommand)]
        cmd: CumCmd,
    },
    /// Cumulants and certificates of quadratic forms.
    Quadform {
        #[command(subcommand)]
        cmd: QuadCmd,
    },
    /// Free infinite divisibility tests.
    Fid {
        #[command(subcommand)]
        cmd: FidCmd,
    },
    /// Concrete laws: semicircle, tetilla, generalized tetilla, decompositions.
    Law {
        #[command(subcommand)]
        cmd: LawCmd,
    },
    /// GUE Monte Carlo cross-checks.
    Rmt {
        #[command(subcommand)]
        cmd: RmtCmd,
    },
}

#[derive(Subcommand)]
enum NcCmd {
    /// List noncrossing partitions.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// Count noncrossing partitions.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// Left or right Kreweras complement.
    Kreweras {
        #[arg(long)]
        partition: String,
        #[arg(long, default_value = "right")]
        side: String,
    },
    /// Join, meet and refinement data for a pair.
    Join {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
}

#[derive(Subcommand)]
enum InvCmd {
    /// Type and pivot data of one partition.
    Classify {
        #[arg(long)]
        partition: String,
    },
    /// Apply the involution to one partition.
    Psi {
        #[arg(long)]
        partition: String,
    },
    /// Exhaustive certificate for all odd upper complements up to 2n.
    Validate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum CumCmd {
    /// Convert between moments and free cumulants.
    Convert {
        /// `m2c` (moments to cumulants) or `c2m`.
        #[arg(long)]
        direction: String,
        /// Comma-separated exact values, `K_1` or `m_1` first.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        order: usize,
    },
    /// Mixed moment of a word in a free family.
    Word {
        /// Comma-separated variable names, e.g. `X,Y,Y,X`.
        #[arg(long)]
        word: String,
        #[arg(long)]
        family: String,
    },
    /// Cumulant of a noncommutative polynomial.
    Poly {
        /// Terms like `I*X.Y-I*Y.X` (words join letters with `.`).
        #[arg(long)]
        poly: String,
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        /// `numeric` (freeness assumed) or `symbolic` (joint cumulants).
        #[arg(long, default_value = "numeric")]
        mode: String,
    },
}

#[derive(Subcommand)]
enum QuadCmd {
    /// Cumulants of a quadratic form.
    Cumulants {
        /// Inline JSON `[["0","I"],["-I","0"]]`, `@file`, or `An:<n>`.
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        /// general | even | iid-even | semicircular
        #[arg(long, default_value = "general")]
        mode: String,
    },
    /// Symbolic cumulant table of T_2 with Hankel determinants.
    T2Table {
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Strong-cancellation certificate for a symbolic skew matrix.
    CancelCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: usize,
        /// Add a symmetric perturbation to witness failure.
        #[arg(long, default_value_t = false)]
        perturb: bool,
    },
    /// Hadamard-product representation of the cumulant sequence.
    Hadamard {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum FidCmd {
    /// Hankel determinant test on a cumulant sequence.
    Hankel {
        /// Comma-separated exact cumulants, `K_1` first.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum LawCmd {
    /// The Wigner semicircle law.
    Semicircle {
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Evaluate the Cauchy transform at `re,im` (off the cut).
        #[arg(long)]
        cauchy: Option<String>,
    },
    /// The tetilla law with density data and quadrature moments.
    Tetilla {
        #[arg(long, default_value_t = 6)]
        moments: u32,
    },
    /// The generalized tetilla law with the triple-route consistency report.
    GenTetilla {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Decompose a free skew-symmetric law into dilated tetilla factors.
    Decompose {
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Subcommand)]
enum RmtCmd {
    /// Compare a commutator matrix model with the exact prediction.
    Compare {
        /// Family size of the commutator model.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Matrix dimension N.
        #[arg(long, default_value_t = 500)]
        dim: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        rmax: usize,
        /// z-score threshold.
        #[arg(long, default_value_t = 4.0)]
        z: f64,
    },
}

fn parse_filter(s: &str) -> Result<NcFilter> {
    s.parse()
}

fn parse_seq(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|p| parse_rational(p.trim())).collect()
}

/// Family spec: `X=semicircular;Y=semicircular:1,1;Z=symbolic;W=0,1,0,2;P=poisson:2`.
fn parse_family(s: &str) -> Result<FreeFamily> {
    let mut fam = FreeFamily::new();
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, spec) = part
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("expected NAME=SPEC in {part:?}")))?;
        let name = name.trim();
        let spec = spec.trim();
        let cs = if spec == "semicircular" || spec == "standard" {
            CumulantSpec::standard_semicircular(name)
        } else if let Some(rest) = spec.strip_prefix("semicircular:") {
            let vals = parse_seq(rest)?;
            if vals.len() != 2 {
                return Err(Error::invalid("semicircular:MEAN,VAR needs two values"));
            }
            CumulantSpec::semicircular(name, vals[0].clone(), vals[1].clone())
        } else if spec == "symbolic" {
            CumulantSpec::symbolic(name)
        } else if spec == "symbolic-even" {
            CumulantSpec::symbolic_even(name)
        } else if let Some(rest) = spec.strip_prefix("poisson:") {
            CumulantSpec::free_poisson(name, parse_rational(rest)?, freecomm::exact::DEFAULT_SERIES_ORDER)
        } else {
            CumulantSpec::from_rationals(name, &parse_seq(spec)?)
        };
        fam.insert(cs);
    }
    if fam.names().next().is_none() {
        return Err(Error::invalid("empty family specification"));
    }
    Ok(fam)
}

/// One matrix entry: a `Q(i)` literal or a (possibly negated) symbol.
fn parse_entry(s: &str) -> Result<MultiPoly> {
    let t = s.trim();
    if let Ok(c) = parse_gaussian(t) {
        return Ok(MultiPoly::constant(c));
    }
    let (neg, name) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t),
    };
    let (imag, name) = match name.strip_prefix("I*") {
        Some(rest) => (true, rest.trim()),
        None => (false, name),
    };
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(Error::invalid(format!("cannot parse matrix entry {s:?}")));
    }
    let mut p = sym(name);
    if imag {
        p = p.mul(&MultiPoly::i());
    }
    if neg {
        p = p.neg();
    }
    Ok(p)
}

/// `An:<n>` for the standard skew matrix, `@path` for a JSON file, or an
/// inline JSON array of entry strings.
fn parse_matrix(s: &str) -> Result<ExactMatrix> {
    if let Some(rest) = s.strip_prefix("An:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::invalid("An:<n> needs an integer"))?;
        return Ok(standard_skew_matrix(n));
    }
    let text = if let Some(path) = s.strip_prefix('@') {
        std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?
    } else {
        s.to_string()
    };
    let rows: Vec<Vec<String>> = serde_json::from_str(&text).map_err(|e| {
        Error::invalid(format!("matrix must be a JSON array of entry strings: {e}"))
    })?;
    let entries: Result<Vec<Vec<MultiPoly>>> = rows
        .iter()
        .map(|row| row.iter().map(|e| parse_entry(e)).collect())
        .collect();
    ExactMatrix::from_rows(entries?)
}

/// Terms like `I*X.Y - I*Y.X`; words join letters with `.`.
fn parse_poly(s: &str) -> Result<NCPolynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let sign = if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            -1i64
        } else {
            rest = rest.strip_prefix('+').unwrap_or(rest);
            1
        };
        let end = rest
            .char_indices()
            .find(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        // split coefficient from word at the last '*'
        let (coeff, word) = match term.rsplit_once('*') {
            Some((c, w)) => (parse_gaussian(c)?, w),
            None => (freecomm::exact::GaussianRational::one(), term),
        };
        let letters: Vec<String> = word.split('.').map(|p| p.to_string()).collect();
        if letters.iter().any(|l| l.is_empty()) {
            return Err(Error::invalid(format!("bad word in term {term:?}")));
        }
        let mut c = MultiPoly::constant(coeff);
        if sign < 0 {
            c = c.neg();
        }
        terms.push((c, letters));
    }
    if terms.is_empty() {
        return Err(Error::invalid("empty polynomial"));
    }
    Ok(NCPolynomial::from_terms(terms))
}

fn run(cmd: &Command) -> Result<Value> {
    Ok(match cmd {
        Command::Nc { cmd } => match cmd {
            NcCmd::Enumerate { n, filter } => {
                let list = enumerate_nc(*n, parse_filter(filter)?)?;
                json!({
                    "n": n,
                    "filter": filter,
                    "count": list.len(),
                    "partitions": list.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                })
            }
            NcCmd::Count { n, filter } => {
                json!({ "n": n, "filter": filter, "count": count_nc(*n, parse_filter(filter)?)? })
            }
            NcCmd::Kreweras { partition, side } => {
                let p = SetPartition::parse(partition)?;
                let k = match side.as_str() {
                    "right" => p.kreweras_right()?,
                    "left" => p.kreweras_left()?,
                    _ => return Err(Error::invalid("side must be left or right")),
                };
                json!({
                    "partition": p.to_string(),
                    "side": side,
                    "complement": k.to_string(),
                    "sizes": { "input": p.size(), "complement": k.size() },
                })
            }
            NcCmd::Join { p, q } => {
                let a = SetPartition::parse(p)?;
                let b = SetPartition::parse(q)?;
                json!({
                    "p": a.to_string(),
                    "q": b.to_string(),
                    "join": a.join_nc(&b)?.to_string(),
                    "meet": a.meet(&b)?.to_string(),
                    "p_leq_q": a.leq(&b)?,
                    "join_is_full": a.join_is_full(&b)?,
                })
            }
        },
        Command::Involution { cmd } => match cmd {
            InvCmd::Classify { partition } => {
                let p = SetPartition::parse(partition)?;
                let (tag, piv) = classify(&p)?;
                json!({
                    "partition": p.to_string(),
                    "type": tag.as_str(),
                    "inner_odd_blocks": piv.inner_odd_blocks,
                    "leftmost": piv.leftmost,
                    "pivot_brace": piv.pivot_brace,
                    "pivot_element": piv.pivot_element,
                    "left_pivot_block": piv.left_pivot_block,
                    "right_pivot_block": piv.right_pivot_block,
                })
            }
            InvCmd::Psi { partition } => {
                let p = SetPartition::parse(partition)?;
                let (sigma, resolution) = sigma_of(&p)?;
                let q = psi(&p)?;
                json!({
                    "partition": p.to_string(),
                    "sigma": sigma.images(),
                    "resolution": format!("{resolution:?}").to_lowercase(),
                    "psi": q.to_string(),
                    "involutive": psi(&q)? == p,
                })
            }
            InvCmd::Validate { n } => {
                let cert = validate_involution(*n)?;
                serde_json::to_value(&cert).expect("serializable certificate")
            }
        },
        Command::Cumulant { cmd } => match cmd {
            CumCmd::Convert {
                direction,
                seq,
                order,
            } => {
                let vals: Vec<MultiPoly> = parse_seq(seq)?
                    .into_iter()
                    .map(MultiPoly::from_rational)
                    .collect();
                let out = match direction.as_str() {
                    "c2m" => moments_from_cumulants(&vals, *order)?,
                    "m2c" => cumulants_from_moments(&vals, *order)?,
                    _ => return Err(Error::invalid("direction must be m2c or c2m")),
                };
                json!({
                    "direction": direction,
                    "order": order,
                    "input": seq,
                    "output": out.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                })
            }
            CumCmd::Word { word, family } => {
                let fam = parse_family(family)?;
                let letters: Vec<&str> = word.split(',').map(|s| s.trim()).collect();
                let m = mixed_moment(&letters, &fam)?;
                json!({ "word": letters, "moment": m.to_string() })
            }
            CumCmd::Poly {
                poly,
                family,
                order,
                mode,
            } => {
                let fam = parse_family(family)?;
                let p = parse_poly(poly)?;
                let mode_v = match mode.as_str() {
                    "numeric" => ExpansionMode::Numeric,
                    "symbolic" => ExpansionMode::Symbolic,
                    _ => return Err(Error::invalid("mode must be numeric or symbolic")),
                };
                let k = poly_cumulant(&p, &fam, *order, mode_v)?;
                let terms: Vec<Value> = k
                    .rendered_terms()
                    .into_iter()
                    .map(|(c, m)| json!({ "coefficient": c, "monomial": m }))
                    .collect();
                json!({
                    "poly": poly,
                    "order": order,
                    "mode": mode,
                    "cumulant": k.to_string(),
                    "terms": terms,
                })
            }
        },
        Command::Quadform { cmd } => match cmd {
            QuadCmd::Cumulants {
                matrix,
                family,
                order,
                mode,
            } => {
                let q = QuadraticForm::new(parse_matrix(matrix)?, parse_family(family)?)?;
                let mode_v = match mode.as_str() {
                    "general" => QuadMode::General,
                    "even" => QuadMode::EvenFamily,
                    "iid-even" => QuadMode::IidEven,
                    "semicircular" => QuadMode::Semicircular,
                    _ => return Err(Error::invalid("unknown quadform mode")),
                };
                let mut ks = serde_json::Map::new();
                for r in 1..=*order {
                    ks.insert(
                        format!("K{r}"),
                        Value::String(q.cumulant(r, mode_v)?.to_string()),
                    );
                }
                json!({ "mode": mode, "cumulants": ks })
            }
            QuadCmd::T2Table { order } => {
                let t = t2_commutator_table(*order)?;
                let mut ks = serde_json::Map::new();
                for (k, c) in t.cumulants.iter().enumerate() {
                    ks.insert(format!("K{}", k + 1), Value::String(c.to_string()));
                }
                let mut hs = serde_json::Map::new();
                for (m, h) in &t.hankels {
                    hs.insert(format!("h{m}"), Value::String(h.to_string()));
                }
                json!({ "order": order, "cumulants": ks, "hankel_determinants": hs })
            }
            QuadCmd::CancelCheck { n, order, perturb } => {
                let mut a = symbolic_skew_matrix(*n);
                if *perturb {
                    a = freecomm::quadform::symmetric_perturbation(&a);
                }
                let rep = strong_cancellation_check(&a, *order)?;
                serde_json::to_value(&rep).expect("serializable report")
            }
            QuadCmd::Hadamard {
                matrix,
                family,
                order,
            } => {
                let q = QuadraticForm::new(parse_matrix(matrix)?, parse_family(family)?)?;
                let h = hadamard_representation(&q, *order)?;
                json!({
                    "order": order,
                    "cumulants": h.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "agrees_with_even_formula": freecomm::quadform::hadamard_agrees(&q, *order)?,
                })
            }
        },
        Command::Fid { cmd } => match cmd {
            FidCmd::Hankel { seq, depth } => {
                let kappa = parse_seq(seq)?;
                let rep = fid_hankel_check(&kappa, *depth)?;
                serde_json::to_value(&rep).expect("serializable report")
            }
        },
        Command::Law { cmd } => match cmd {
            LawCmd::Semicircle { order, cauchy } => {
                let law = semicircle_law(*order);
                let m = law.moments(*order)?;
                let mut out = json!({
                    "law": serde_json::to_value(&law).expect("serializable"),
                    "moments": m.iter().map(freecomm::exact::render_rational).collect::<Vec<_>>(),
                });
                if let Some(point) = cauchy {
                    let (re, im) = point
                        .split_once(',')
                        .ok_or_else(|| Error::invalid("expected --cauchy RE,IM"))?;
                    let z = num_complex::Complex64::new(
                        re.trim().parse().map_err(|_| Error::invalid("bad real part"))?,
                        im.trim().parse().map_err(|_| Error::invalid("bad imaginary part"))?,
                    );
                    let g = freecomm::laws::semicircle_cauchy(z)?;
                    out["cauchy"] = json!({ "z": [z.re, z.im], "G": [g.re, g.im] });
                }
                out
            }
            LawCmd::Tetilla { moments } => {
                let law = tetilla_law(2 * *moments as usize);
                let mut numeric = serde_json::Map::new();
                let mut r = 0;
                while r <= *moments {
                    numeric.insert(format!("m{r}"), json!(tetilla_density_moment(r, 1e-10)));
                    r += 2;
                }
                json!({
                    "law": serde_json::to_value(&law).expect("serializable"),
                    "support_bound": tetilla_support_bound(),
                    "density_moments": numeric,
                })
            }
            LawCmd::GenTetilla { n, order } => {
                let (law, report) = gen_tetilla(*n, *order)?;
                let depth = (*order / 2).min(4).max(1);
                json!({
                    "law": serde_json::to_value(&law).expect("serializable"),
                    "report": serde_json::to_value(&report).expect("serializable"),
                    "fid": serde_json::to_value(&law.fid_check(depth)?).expect("serializable"),
                })
            }
            LawCmd::Decompose { matrix } => {
                let rep = skew_law_decompose(&parse_matrix(matrix)?)?;
                serde_json::to_value(&rep).expect("serializable report")
            }
        },
        Command::Rmt { cmd } => match cmd {
            RmtCmd::Compare {
                n,
                dim,
                trials,
                seed,
                rmax,
                z,
            } => {
                let model = MatrixModel::commutator(*n, *dim, *seed)?;
                let (law, _) = gen_tetilla(*n, 2 * *rmax)?;
                let rep = compare_with_prediction(&model, &law, *rmax, *trials, *z)?;
                serde_json::to_value(&rep).expect("serializable report")
            }
        },
    })
}

fn to_csv(v: &Value) -> String {
    // flat tables (arrays of objects) become CSV; everything else renders
    // as key,value rows
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    if let Some(rows) = v.get("rows").and_then(|r| r.as_array()) {
        if let Some(Value::Object(first)) = rows.first() {
            let headers: Vec<&String> = first.keys().collect();
            let mut out = headers
                .iter()
                .map(|h| h.as_str())
                .collect::<Vec<_>>()
                .join(",");
            out.push('\n');
            for row in rows {
                let line: Vec<String> = headers
                    .iter()
                    .map(|h| scalar(row.get(h.as_str()).unwrap_or(&Value::Null)))
                    .collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            return out;
        }
    }
    let mut out = String::from("key,value\n");
    if let Value::Object(map) = v {
        for (k, val) in map {
            out.push_str(&format!("{k},{}\n", scalar(val)));
        }
    } else {
        out.push_str(&format!("value,{}\n", scalar(v)));
    }
    out
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(results) => {
            let envelope = json!({
                "command": std::env::args().skip(1).collect::<Vec<_>>(),
                "version": env!("CARGO_PKG_VERSION"),
                "timing_ms": start.elapsed().as_millis() as u64,
                "results": results,
            });
            let text = match cli.output.format {
                Format::Json => serde_json::to_string_pretty(&envelope).expect("valid JSON"),
                Format::Csv => to_csv(&envelope["results"]),
            };
            match &cli.output.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        std::process::exit(2);
                    }
                }
                None => {
                    let mut stdout = std::io::stdout();
                    let _ = writeln!(stdout, "{text}");
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Invalid(_) => 2,
                Error::Bound(_) => 3,
            };
            std::process::exit(code);
        }
    }
}
