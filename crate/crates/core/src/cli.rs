//! Command-line front end.
//!
//! Values are given inline or as `@path` (`-` reads stdin). Polynomials
//! accept `2*e1.e2 - 1/2*e2 + 3` or a JSON term array; functionals accept
//! `phi:<word>`, `finite:<poly>` or the JSON form; group words accept
//! `e2:2,e1:3` (kind taken from the letter) or the JSON factor array.
//!
//! Exit status is 0 on success, 2 when a size or depth cap is hit and 1 for
//! any other failure.

use std::io::Read as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::check::{self, DEFAULT_SEED};
use crate::duals::{
    in_shuffle_span, is_regular, membership_ffr, phi, realize_finite_capped, shuffle_product,
    FiniteFunctional, Functional, DEFAULT_REGULARITY_TUPLE_LEN, DEFAULT_SHUFFLE_SLACK,
};
use crate::error::{Error, Result};
use crate::grp::{
    act_group, faithfulness_witness_capped, group_faithfulness_witness, phi_map, phi_map_from_values, taylor_expand,
    GroupWord, OneParamFactor, RegularFunction,
};
use crate::io;
use crate::kacmoody::{
    freudenthal_oracle, kostant_cone_test, theta_eval, Gcm, IrrTrunc, KmFactor, KmGroupWord, DEFAULT_DEPTH_CAP,
    DEFAULT_KM_DIM_CAP,
};
use crate::rational::{format_q, parse_q, Q};
use crate::reps::{act_poly, GeneratorKind, RepSpec, DEFAULT_DIM_CAP};
use crate::words::{Alphabet, Letter, NcPoly};

#[derive(Parser, Debug)]
#[command(name = "tannaka", version, about = "Exact computations in U(g), its dual and Kac-Moody modules")]
pub struct Cli {
    /// Letter names, comma separated.
    #[arg(long, global = true, default_value = "e1,e2")]
    alphabet: String,
    /// Letters acting diagonally with integer eigenvalues; added to the alphabet if new.
    #[arg(long, global = true, default_value = "")]
    diag: String,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest module dimension built.
    #[arg(long, global = true, env = "TANNAKA_DIM_CAP", default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
    /// Largest Kac-Moody truncation depth.
    #[arg(long, global = true, env = "TANNAKA_DEPTH_CAP", default_value_t = DEFAULT_DEPTH_CAP)]
    depth_cap: usize,
    /// Extra word lengths probed beyond the horizon by the shuffle-span test.
    #[arg(long, global = true, env = "TANNAKA_SLACK", default_value_t = DEFAULT_SHUFFLE_SLACK)]
    slack: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shuffle product of two finitely supported functionals.
    Shuffle {
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
    },
    /// Product of two polynomials in U(g).
    Mul {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Coproduct of a polynomial, letters primitive.
    Coproduct {
        #[arg(long)]
        x: String,
    },
    /// Antipode of a polynomial.
    Antipode {
        #[arg(long)]
        x: String,
    },
    /// Act on a module vector by a polynomial or a group word.
    Act {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        vector: String,
        #[command(flatten)]
        by: ActBy,
    },
    /// Evaluate a functional on a polynomial, or its regular function on a group word.
    Eval {
        #[arg(long)]
        functional: String,
        #[command(flatten)]
        by: ActBy,
    },
    /// Taylor polynomial of a functional along a tuple of nilpotent letters.
    Taylor {
        #[arg(long)]
        functional: String,
        /// Comma-separated letters.
        #[arg(long)]
        tuple: String,
    },
    /// Values of Φ(f) on all words up to a length, for f = φ(g·v).
    PhiMap {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        v: String,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Recover each value from group evaluations by interpolation.
        #[arg(long)]
        from_values: bool,
    },
    /// The matrix coefficient Ξ(h), optionally evaluated at a group word.
    XiMap {
        #[arg(long)]
        functional: String,
        #[arg(long)]
        group: Option<String>,
    },
    /// A module and vector on which a polynomial or reduced group word acts visibly.
    Witness {
        #[command(flatten)]
        by: ActBy,
    },
    /// Finiteness, regularity and shuffle-span certificates for a functional.
    Membership {
        #[arg(long)]
        functional: String,
        /// Horizon N of the shuffle-span test.
        #[arg(long, default_value_t = 20)]
        horizon: usize,
        #[arg(long, default_value_t = DEFAULT_REGULARITY_TUPLE_LEN)]
        tuple_len: usize,
    },
    /// Weight table of a truncated L(Λ).
    KmBuild {
        #[command(flatten)]
        km: KmArgs,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Multiplicity of one weight, with the Freudenthal value alongside.
    KmMult {
        #[command(flatten)]
        km: KmArgs,
        /// Depth vector k of the weight Λ − Σ k_i α_i.
        #[arg(long)]
        at: String,
    },
    /// θ_Λ(g) = ⟨v_Λ^*, g·v_Λ⟩.
    KmTheta {
        #[command(flatten)]
        km: KmArgs,
        #[arg(long)]
        group: String,
    },
    /// Membership of a vector of L(Λ) in the Kostant cone.
    KmCone {
        #[command(flatten)]
        km: KmArgs,
        #[arg(long)]
        vector: String,
    },
    /// Run the property suites.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ActBy {
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    group: Option<String>,
}

#[derive(Args, Debug)]
struct KmArgs {
    /// `{"matrix": [[..]], "coweights": [[..]]}` or a bare matrix.
    #[arg(long)]
    gcm: String,
    /// Dominant highest weight Λ(h_i), comma separated.
    #[arg(long)]
    weight: String,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and run.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((code, out)) => Outcome { code, stdout: out, stderr: String::new() },
        Err(e) => Outcome {
            code: if e.is_cap() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let o = run_args(std::env::args_os());
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    o.code
}

fn load(s: &str) -> Result<String> {
    if s == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::parse("stdin", e.to_string()))?;
        Ok(buf)
    } else if let Some(path) = s.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::parse(path, e.to_string()))
    } else {
        Ok(s.to_string())
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|x| x.trim().trim_matches('"').to_string())
        .filter(|x| !x.is_empty())
        .collect()
}

fn parse_q_list(field: &str, s: &str) -> Result<Vec<Q>> {
    split_list(&load(s)?)
        .iter()
        .map(|x| parse_q(x).map_err(|_| Error::parse(field, format!("`{x}` is not a rational"))))
        .collect()
}

fn parse_int_list<T: std::str::FromStr>(field: &str, s: &str) -> Result<Vec<T>> {
    split_list(&load(s)?)
        .iter()
        .map(|x| x.parse().map_err(|_| Error::parse(field, format!("`{x}` is not an integer"))))
        .collect()
}

fn qs(v: &[Q]) -> Vec<String> {
    v.iter().map(format_q).collect()
}

fn alphabet(cli: &Cli) -> Result<Arc<Alphabet>> {
    let diag: Vec<String> = split_list(&cli.diag);
    let mut names: Vec<String> = split_list(&cli.alphabet);
    for d in &diag {
        if !names.contains(d) {
            names.push(d.clone());
        }
    }
    let kinds = names
        .iter()
        .map(|n| {
            if diag.contains(n) {
                GeneratorKind::DiagonalizableInteger
            } else {
                GeneratorKind::LocallyNilpotent
            }
        })
        .collect();
    Ok(Arc::new(Alphabet::new(names, kinds)?))
}

/// `2*e1.e2 - 1/2*e2 + 3`, or a JSON array of `{word, coeff}`.
pub fn parse_poly(a: &Alphabet, s: &str) -> Result<NcPoly> {
    let s = load(s)?;
    let t = s.trim();
    if t.starts_with('[') {
        let terms: Vec<io::TermJson> = io::from_json_str("polynomial", t)?;
        return io::poly_from_json(a, &terms);
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in t.chars() {
        if (ch == '+' || ch == '-') && !cur.trim().is_empty() {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.trim().is_empty() {
            neg ^= ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        terms.push((neg, cur));
    } else if !terms.is_empty() || neg {
        return Err(Error::parse("polynomial", "dangling sign"));
    }
    let mut p = NcPoly::zero();
    for (neg, body) in terms {
        let body = body.trim();
        let (c, w) = match body.split_once('*') {
            Some((c, w)) => (
                parse_q(c.trim()).map_err(|_| Error::parse("polynomial", format!("bad coefficient `{c}`")))?,
                a.parse_word(w.trim())?,
            ),
            None => match parse_q(body) {
                Ok(c) => (c, crate::words::Word::empty()),
                Err(_) => (Q::from_integer(1.into()), a.parse_word(body)?),
            },
        };
        p.add_term(w, if neg { -c } else { c });
    }
    Ok(p)
}

fn parse_functional(a: &Alphabet, s: &str) -> Result<Functional> {
    let s = load(s)?;
    let t = s.trim();
    if let Some(w) = t.strip_prefix("phi:") {
        return Ok(phi(a.parse_word(w.trim())?).into());
    }
    if let Some(p) = t.strip_prefix("finite:") {
        return Ok(FiniteFunctional::from_poly(parse_poly(a, p)?).into());
    }
    if t.starts_with('{') {
        let j: io::FunctionalJson = io::from_json_str("functional", t)?;
        return io::functional_from_json(a, &j);
    }
    Err(Error::parse("functional", "expected `phi:<word>`, `finite:<poly>` or a JSON object"))
}

/// The alphabet words are read against: a matrix coefficient brings its own.
fn word_alphabet(a: &Arc<Alphabet>, h: &Functional) -> Arc<Alphabet> {
    match h {
        Functional::Matrix(m) => m.rep().alphabet().clone(),
        Functional::Finite(_) => a.clone(),
    }
}

fn parse_group(a: &Alphabet, s: &str) -> Result<GroupWord> {
    let s = load(s)?;
    let t = s.trim();
    if t.starts_with('[') {
        let fs: Vec<io::FactorJson> = io::from_json_str("group word", t)?;
        return io::group_word_from_json(a, &fs);
    }
    let mut out = Vec::new();
    for part in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, param) = part
            .split_once(':')
            .ok_or_else(|| Error::parse("group word", format!("`{part}` is not letter:param")))?;
        let l = a.letter(name.trim())?;
        let p = parse_q(param.trim()).map_err(|_| Error::parse("group word", format!("bad parameter `{param}`")))?;
        out.push(match a.kind(l) {
            GeneratorKind::LocallyNilpotent => OneParamFactor::exp(l, p),
            GeneratorKind::DiagonalizableInteger => OneParamFactor::torus(l, p)?,
        });
    }
    Ok(GroupWord::new(out))
}

fn parse_rep(s: &str) -> Result<RepSpec> {
    let j: io::RepJson = io::from_json_str("rep", &load(s)?)?;
    io::rep_from_json(&j)
}

fn parse_gcm(s: &str) -> Result<Gcm> {
    let s = load(s)?;
    let t = s.trim();
    if t.starts_with('[') {
        let m: Vec<Vec<i64>> = io::from_json_str("gcm", t)?;
        return Gcm::new(m);
    }
    io::gcm_from_json(&io::from_json_str("gcm", t)?)
}

/// `E1:2,F1:1/2,H1:3` (1-based indices, `H` a simple coroot) or JSON.
fn parse_km_group(g: &Gcm, s: &str) -> Result<KmGroupWord> {
    let s = load(s)?;
    let t = s.trim();
    if t.starts_with('[') {
        let fs: Vec<io::KmFactorJson> = io::from_json_str("km group", t)?;
        return io::km_group_from_json(g, &fs);
    }
    let mut out = Vec::new();
    for part in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || Error::parse("km group", format!("`{part}` is not E<i>:t, F<i>:t or H<i>:s"));
        let (gen, param) = part.split_once(':').ok_or_else(bad)?;
        let p = parse_q(param.trim()).map_err(|_| bad())?;
        let (kind, idx) = gen.trim().split_at(1);
        let i: usize = idx.parse().ok().and_then(|i: usize| i.checked_sub(1)).ok_or_else(bad)?;
        if i >= g.rank() {
            return Err(Error::parse("km group", format!("index {} out of range", i + 1)));
        }
        out.push(match kind {
            "E" => KmFactor::exp_e(i, p),
            "F" => KmFactor::exp_f(i, p),
            "H" => {
                let mut c = vec![0; g.rank()];
                c[i] = 1;
                KmFactor::torus(crate::kacmoody::Coweight::Coroot(c), p)?
            }
            _ => return Err(bad()),
        });
    }
    Ok(KmGroupWord::new(out))
}

fn km_module(cli: &Cli, km: &KmArgs, depth: usize) -> Result<IrrTrunc> {
    let gcm = Arc::new(parse_gcm(&km.gcm)?);
    let lambda: Vec<i64> = parse_int_list("weight", &km.weight)?;
    let dim_cap = if cli.dim_cap == DEFAULT_DIM_CAP { DEFAULT_KM_DIM_CAP } else { cli.dim_cap };
    IrrTrunc::with_caps(gcm, lambda, depth.min(cli.depth_cap), cli.depth_cap, dim_cap)
}

fn to_line(v: Value) -> String {
    format!("{v}\n")
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let a = alphabet(cli)?;
    let out = match &cli.command {
        Command::Shuffle { w1, w2 } => {
            let h1 = FiniteFunctional::from_poly(parse_poly(&a, w1)?);
            let h2 = FiniteFunctional::from_poly(parse_poly(&a, w2)?);
            to_line(json!({ "terms": io::poly_to_json(&a, shuffle_product(&h1, &h2).as_poly()) }))
        }
        Command::Mul { x, y } => {
            let p = parse_poly(&a, x)?.mul(&parse_poly(&a, y)?);
            to_line(json!({ "terms": io::poly_to_json(&a, &p) }))
        }
        Command::Coproduct { x } => {
            let t = parse_poly(&a, x)?.coproduct()?;
            to_line(json!({ "terms": io::tensor_to_json(&a, &t) }))
        }
        Command::Antipode { x } => to_line(json!({ "terms": io::poly_to_json(&a, &parse_poly(&a, x)?.antipode()) })),
        Command::Act { rep, vector, by } => {
            let r = parse_rep(rep)?;
            let v = parse_q_list("vector", vector)?;
            r.check_vector(&v)?;
            let out = match (&by.word, &by.group) {
                (Some(x), _) => act_poly(&r, &parse_poly(r.alphabet(), x)?, &v)?,
                (_, Some(g)) => act_group(&r, &parse_group(r.alphabet(), g)?, &v)?,
                _ => unreachable!("clap requires one of --word, --group"),
            };
            to_line(json!({ "vector": qs(&out) }))
        }
        Command::Eval { functional, by } => {
            let h = parse_functional(&a, functional)?;
            let wa = word_alphabet(&a, &h);
            let value = match (&by.word, &by.group) {
                (Some(x), _) => crate::duals::evaluate(&h, &parse_poly(&wa, x)?),
                (_, Some(g)) => xi(cli, &h, &wa)?.eval(&parse_group(&wa, g)?)?,
                _ => unreachable!("clap requires one of --word, --group"),
            };
            to_line(json!({ "value": format_q(&value) }))
        }
        Command::Taylor { functional, tuple } => {
            let h = parse_functional(&a, functional)?;
            let wa = word_alphabet(&a, &h);
            let tuple: Vec<Letter> = split_list(tuple).iter().map(|n| wa.letter(n)).collect::<Result<_>>()?;
            format!("{}\n", taylor_expand(&h, &tuple, &wa)?)
        }
        Command::PhiMap { rep, phi: covector, v, max_len, from_values } => {
            let r = Arc::new(parse_rep(rep)?);
            let f = RegularFunction::new(r.clone(), parse_q_list("phi", covector)?, parse_q_list("v", v)?)?;
            let h = phi_map(&f);
            let mut vals = std::collections::BTreeMap::new();
            for w in r.alphabet().words_up_to(*max_len) {
                let x = if *from_values { phi_map_from_values(&f, &w)? } else { h.eval_word(&w) };
                vals.insert(w, x);
            }
            to_line(json!({ "terms": io::word_values(r.alphabet(), &vals) }))
        }
        Command::XiMap { functional, group } => {
            let h = parse_functional(&a, functional)?;
            let wa = word_alphabet(&a, &h);
            let f = xi(cli, &h, &wa)?;
            let mut obj = json!({ "functional": io::functional_to_json(&wa, &Functional::Matrix(f.coefficient().clone())) });
            if let Some(g) = group {
                obj["value"] = json!(format_q(&f.eval(&parse_group(&wa, g)?)?));
            }
            to_line(obj)
        }
        Command::Witness { by } => {
            let w = match (&by.word, &by.group) {
                (Some(x), _) => faithfulness_witness_capped(&parse_poly(&a, x)?, a.clone(), cli.dim_cap)?,
                (_, Some(g)) => group_faithfulness_witness(&parse_group(&a, g)?, a.clone())?,
                _ => unreachable!("clap requires one of --word, --group"),
            };
            to_line(json!({ "rep": io::rep_to_json(&w.rep), "v": qs(&w.v), "image": qs(&w.image) }))
        }
        Command::Membership { functional, horizon, tuple_len } => {
            let h = parse_functional(&a, functional)?;
            let wa = word_alphabet(&a, &h);
            let ffr = membership_ffr(&h)?;
            let reg = is_regular(&h, &wa, *tuple_len);
            let span = in_shuffle_span(&h, *horizon, cli.slack);
            to_line(json!({
                "ffr": { "member": ffr.member, "dim": ffr.dim },
                "regular": {
                    "regular": reg.regular,
                    "max_tuple_len": reg.max_tuple_len,
                    "max_bound": reg.max_bound(),
                    "failure": reg.failure.map(|t| t.iter().map(|&l| wa.name(l).to_string()).collect::<Vec<_>>()),
                },
                "shuffle_span": {
                    "horizon": horizon,
                    "in_span": span.in_span,
                    "witness": span.witness.map(|w| wa.format_word(&w)),
                },
            }))
        }
        Command::KmBuild { km, depth } => {
            let m = km_module(cli, km, *depth)?;
            let weights: Vec<Value> = m
                .weights()
                .into_iter()
                .map(|(k, w, d)| json!({ "depth": k, "weight": w, "dim": d }))
                .collect();
            to_line(json!({
                "depth": m.depth(),
                "complete": m.is_complete(),
                "total_dim": m.total_dim(),
                "weights": weights,
            }))
        }
        Command::KmMult { km, at } => {
            let k: Vec<u32> = parse_int_list("at", at)?;
            let m = km_module(cli, km, crate::kacmoody::total_depth(&k))?;
            if k.len() != m.rank() {
                return Err(Error::DimensionMismatch { expected: m.rank(), got: k.len() });
            }
            let mult = crate::kacmoody::weight_multiplicity(&m, &k)?;
            let oracle = freudenthal_oracle(m.gcm(), m.highest_weight(), &k)?;
            to_line(json!({ "depth": k, "weight": m.weight(&k), "multiplicity": mult, "freudenthal": oracle }))
        }
        Command::KmTheta { km, group } => {
            let m = km_module(cli, km, 0)?;
            let g = parse_km_group(m.gcm(), group)?;
            to_line(json!({ "value": format_q(&theta_eval(&m, &g)?) }))
        }
        Command::KmCone { km, vector } => {
            let cs: Vec<io::KmComponentJson> = io::from_json_str("km vector", &load(vector)?)?;
            let v = io::km_vector_from_json(&cs);
            let m = km_module(cli, km, 2 * v.max_depth())?;
            to_line(json!({ "in_cone": kostant_cone_test(&m, &v)? }))
        }
        Command::Check { suite } => {
            let reports = if suite == "all" {
                check::run_all(cli.seed)
            } else {
                vec![check::run_suite(suite, cli.seed).ok_or_else(|| {
                    Error::parse("suite", format!("unknown suite `{suite}`; known: all, {}", check::SUITES.join(", ")))
                })?]
            };
            let passed = reports.iter().filter(|r| r.passed()).count();
            let mut text = check::render(&reports);
            text.push_str(&format!("{passed}/{} suites passed (seed {})\n", reports.len(), cli.seed));
            return Ok((if passed == reports.len() { 0 } else { 1 }, text));
        }
    };
    Ok((0, out))
}

fn xi(cli: &Cli, h: &Functional, a: &Arc<Alphabet>) -> Result<RegularFunction> {
    Ok(RegularFunction::from_coefficient(match h {
        Functional::Matrix(m) => m.clone(),
        Functional::Finite(f) => realize_finite_capped(f, a.clone(), cli.dim_cap)?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_args(std::iter::once("tannaka").chain(args.iter().copied()))
    }

    #[test]
    fn shuffle_example() {
        let o = run(&["shuffle", "--w1", "e1", "--w2", "e2"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout.trim(), r#"{"terms":[{"word":"e1.e2","coeff":"1"},{"word":"e2.e1","coeff":"1"}]}"#);
    }

    #[test]
    fn taylor_example() {
        let o = run(&["taylor", "--functional", "phi:e1", "--tuple", "e1"]);
        assert_eq!(o.stdout.trim(), "t1");
    }

    #[test]
    fn poly_syntax() {
        let a = Alphabet::free(2);
        let p = parse_poly(&a, "2*e1.e2 - 1/2*e2 + 3").unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.counit(), Q::from_integer(3.into()));
        assert_eq!(parse_poly(&a, "-e1").unwrap(), NcPoly::letter(Letter(0)).scale(&Q::from_integer((-1).into())));
        assert!(parse_poly(&a, "e1 +").is_err());
        assert!(parse_poly(&a, "e9").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["mul", "--x", "e3", "--y", "e1"]).code, 1);
        assert_eq!(run(&["bogus"]).code, 1);
        let o = run(&["--dim-cap", "3", "witness", "--word", "e1.e2"]);
        assert_eq!(o.code, 2, "{}", o.stderr);
    }
}
