//! Command-line frontend. Every subcommand prints text by default and a
//! stable JSON document with `--json`.
//!
//! Exit codes: 0 success, 1 usage, 2 domain error, 3 verification failure,
//! 4 resource cap.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::charmult::{
    full_table, h_total_multiplicity, hesselink_series, hesselink_series_alt, weight_multiplicity, PartitionFunction,
    PartitionKind,
};
use crate::determinants::{
    evaluate_factored, exotic_exponent, prv_degree_bound, prv_factorization, shapovalov_factorization, FactoredDeterminant,
};
use crate::error::{Error, Result};
use crate::oracle::{annihilator_centrally_generated, corank_lower_bound, l1_annihilator_in_h, verify_suite_with};
use crate::poly::IntPoly;
use crate::rootdata::{build_root_system, RootSystem};
use crate::weight::{format_rational, Weight};
use crate::weyl::{enumerate_weyl, heslem_data, poincare_polynomial, poincare_product, DEFAULT_ENUMERATION_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "osp", version, about = "Exact computations for osp(1,2l): roots, characters, Hesselink series, PRV determinants")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest rank for which the Weyl group may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Alt,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots, ρ and fundamental weights.
    Roots {
        #[arg(long)]
        l: i64,
    },
    /// Weyl group elements with lengths and signs, and the Poincaré polynomial.
    Weyl {
        #[arg(long)]
        l: i64,
    },
    /// Kostant partition function, or the super partition function with --super.
    Tau {
        #[arg(long)]
        l: i64,
        /// Weight in β-coordinates, e.g. "1,1/2".
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long = "super")]
        super_: bool,
    },
    /// Weight multiplicities of the simple module with highest weight λ.
    Mult {
        #[arg(long)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// A single weight; without it the whole table is printed.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Graded multiplicities P_λ(q) in the harmonic space.
    Hesselink {
        #[arg(long)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Factored Shapovalov determinant det S_ν.
    Shapovalov {
        #[arg(long)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Evaluate at this weight.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Factored PRV determinant det PRV^λ.
    Prv {
        #[arg(long)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Evaluate at this weight.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Whether the annihilator of the Verma module M(λ) is centrally generated.
    Annihilator {
        #[arg(long)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Also report the corank lower bound of det PRV^ν at λ for this dominant ν.
        #[arg(long, allow_hyphen_values = true)]
        prv: Option<String>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long)]
        l: i64,
        /// Test dominant weights of height at most this.
        #[arg(long, default_value_t = 6)]
        depth: u64,
        /// q-order of truncated series.
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// The elements w_r and weights γ_r with w_r ρ = ρ − rβ1 + γ_r.
    Heslem {
        #[arg(long)]
        l: i64,
        #[arg(long)]
        r: Option<usize>,
    },
}

/// Result of one subcommand: what to print and the exit code.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: EXIT_OK }
    }
}

/// Parse `args` (including the program name) and run. Output goes to `out`,
/// diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_out = !e.use_stderr();
            let rendered = e.render().to_string();
            let _ = if to_out { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return if to_out { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json values serialize"))
            } else {
                write!(out, "{}", o.text)
            };
            o.code
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({"error": e.to_string(), "exitCode": e.exit_code()}));
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    let w: Weight = s.parse()?;
    rs.check_rank(&w)?;
    Ok(w)
}

fn system(l: i64, cap: usize) -> Result<RootSystem> {
    let rs = build_root_system(l)?;
    if rs.rank > cap {
        return Err(Error::EnumerationCap { rank: rs.rank, cap });
    }
    Ok(rs)
}

fn list(ws: &[Weight]) -> String {
    ws.iter().map(Weight::beta_expr).collect::<Vec<_>>().join(", ")
}

fn poly_json(p: &IntPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let cap = cli.cap;
    match &cli.command {
        Command::Roots { l } => {
            let rs = system(*l, cap)?;
            let fundamental: Vec<String> = rs.fundamental.iter().map(Weight::beta_expr).collect();
            let text = format!(
                "rank: {}\neven positive roots: {}\nodd positive roots: {}\nirreducible even roots: {}\nsimple roots: {}\nrho: {}\nrho0: {}\nrho1: {}\nfundamental weights: {}\n",
                rs.rank,
                list(&rs.even_pos),
                list(&rs.odd_pos),
                list(&rs.even_bar_pos),
                list(&rs.simple),
                rs.rho.beta_expr(),
                rs.rho0.beta_expr(),
                rs.rho1.beta_expr(),
                fundamental.join(", "),
            );
            Ok(Output::ok(text, serde_json::to_value(&rs).expect("root data serializes")))
        }
        Command::Weyl { l } => {
            let rs = system(*l, cap)?;
            let group = enumerate_weyl(rs.rank, cap)?;
            let poincare = poincare_polynomial(rs.rank, cap)?;
            let mut text = String::new();
            for w in group.iter() {
                text.push_str(&format!("{w}  length {}  sign {:+}\n", w.length(), w.sign()));
            }
            text.push_str(&format!("order: {}\npoincare: {poincare}\n", group.len()));
            let json = json!({
                "l": rs.rank,
                "order": group.len(),
                "elements": group.iter().collect::<Vec<_>>(),
                "poincare": poly_json(&poincare),
                "productFormAgrees": poincare == poincare_product(rs.rank),
            });
            Ok(Output::ok(text, json))
        }
        Command::Tau { l, nu, super_ } => {
            let rs = system(*l, cap)?;
            let nu = parse_weight(&rs, nu)?;
            let kind = if *super_ { PartitionKind::Super } else { PartitionKind::Kostant };
            let value = PartitionFunction::new(&rs, kind).eval(&nu)?;
            let name = if *super_ { "tau_bar" } else { "tau" };
            Ok(Output::ok(format!("{name}({}) = {value}\n", nu.beta_expr()), json!({"l": rs.rank, "nu": nu, "kind": name, "value": value})))
        }
        Command::Mult { l, lambda, mu } => {
            let rs = system(*l, cap)?;
            let lambda = parse_weight(&rs, lambda)?;
            match mu {
                Some(mu) => {
                    let mu = parse_weight(&rs, mu)?;
                    let m = weight_multiplicity(&rs, &lambda, &mu, cap)?;
                    Ok(Output::ok(
                        format!("dim V({})_{{{}}} = {m}\n", lambda.beta_expr(), mu.beta_expr()),
                        json!({"l": rs.rank, "lambda": lambda, "mu": mu, "multiplicity": m}),
                    ))
                }
                None => {
                    let table = full_table(&rs, &lambda, cap)?;
                    let mut text = String::new();
                    for (w, m) in table.entries.iter().rev() {
                        text.push_str(&format!("{w}: {m}\n"));
                    }
                    text.push_str(&format!("dimension: {}\n", table.dimension()));
                    let mut json = serde_json::to_value(&table).expect("tables serialize");
                    json["dimension"] = json!(table.dimension());
                    Ok(Output::ok(text, json))
                }
            }
        }
        Command::Hesselink { l, lambda, order, method } => {
            let rs = system(*l, cap)?;
            let lambda = parse_weight(&rs, lambda)?;
            let mut json = json!({"l": rs.rank, "lambda": lambda, "order": order});
            let mut code = EXIT_OK;
            let text = match method {
                Method::Direct | Method::Alt => {
                    let p = if *method == Method::Direct {
                        hesselink_series(&rs, &lambda, *order, cap)?
                    } else {
                        hesselink_series_alt(&rs, &lambda, *order, cap)?
                    };
                    json["method"] = json!(if *method == Method::Direct { "direct" } else { "alt" });
                    json["series"] = poly_json(&p);
                    format!("P_{}(q) = {p} + O(q^{})\n", lambda.beta_expr(), order + 1)
                }
                Method::Both => {
                    let a = hesselink_series(&rs, &lambda, *order, cap)?;
                    let b = hesselink_series_alt(&rs, &lambda, *order, cap)?;
                    let agree = a == b;
                    if !agree {
                        code = EXIT_VERIFICATION;
                    }
                    json["method"] = json!("both");
                    json["direct"] = poly_json(&a);
                    json["alt"] = poly_json(&b);
                    json["agree"] = json!(agree);
                    format!("direct: {a}\nalt:    {b}\nagree: {agree}\n")
                }
            };
            json["zeroWeightMultiplicity"] = json!(h_total_multiplicity(&rs, &lambda, cap)?);
            Ok(Output { text, json, code })
        }
        Command::Shapovalov { l, nu, mu } => {
            let rs = system(*l, cap)?;
            let nu = parse_weight(&rs, nu)?;
            let d = shapovalov_factorization(&rs, &nu)?;
            with_evaluation(&rs, d, mu.as_deref())
        }
        Command::Prv { l, lambda, mu } => {
            let rs = system(*l, cap)?;
            let lambda = parse_weight(&rs, lambda)?;
            let d = prv_factorization(&rs, &lambda, cap)?;
            let bound = prv_degree_bound(&rs, &lambda, cap)?;
            let exotic = exotic_exponent(&rs, &lambda, &rs.odd_pos[0], cap)?;
            let mut o = with_evaluation(&rs, d, mu.as_deref())?;
            o.text.push_str(&format!("degree bound: {bound}\nexotic exponent: {exotic}\n"));
            o.json["degreeBound"] = json!(bound);
            o.json["exoticExponent"] = json!(exotic);
            Ok(o)
        }
        Command::Annihilator { l, lambda, prv } => {
            let rs = system(*l, cap)?;
            let lambda = parse_weight(&rs, lambda)?;
            let central = annihilator_centrally_generated(&rs, &lambda)?;
            let shifted = rs.shifted(&lambda)?;
            let mut json = json!({
                "l": rs.rank,
                "lambda": lambda,
                "lambdaPlusRho": shifted,
                "centrallyGenerated": central,
                "vermaSimple": rs.verma_is_simple(&lambda)?,
            });
            let mut text = format!(
                "lambda + rho = {}\nannihilator centrally generated: {central}\nVerma module simple: {}\n",
                shifted.beta_expr(),
                json["vermaSimple"]
            );
            if let Some(nu) = prv {
                let nu = parse_weight(&rs, nu)?;
                let bound = corank_lower_bound(&rs, &nu, &lambda, cap)?;
                json["prv"] = json!(nu);
                json["corankLowerBound"] = json!(bound);
                text.push_str(&format!("corank of PRV^{} at lambda >= {bound}\n", nu.beta_expr()));
            }
            if rs.rank == 1 {
                let h = l1_annihilator_in_h(&lambda)?;
                json["annihilatorInH"] = json!(h);
                text.push_str(&format!("annihilator in H: {}\n", h.describe()));
            }
            Ok(Output::ok(text, json))
        }
        Command::Verify { l, depth, order } => {
            let rs = system(*l, cap)?;
            let report = verify_suite_with(&rs, *depth, *order, cap)?;
            let mut text = String::new();
            for c in &report.checks {
                text.push_str(&format!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name));
                if let Some(w) = &c.witness {
                    text.push_str(&format!(": {w}"));
                }
                text.push('\n');
            }
            text.push_str(&format!("allPass: {}\n", report.all_pass));
            let code = if report.all_pass { EXIT_OK } else { EXIT_VERIFICATION };
            Ok(Output { text, json: serde_json::to_value(&report).expect("reports serialize"), code })
        }
        Command::Heslem { l, r } => {
            let rs = system(*l, cap)?;
            let rows: Vec<usize> = match r {
                Some(r) => vec![*r],
                None => (0..2 * rs.rank).collect(),
            };
            let entries = rows.into_iter().map(|r| heslem_data(rs.rank, r)).collect::<Result<Vec<_>>>()?;
            let mut text = String::new();
            for e in &entries {
                let word: Vec<String> = e.word.iter().map(|i| format!("s{i}")).collect();
                text.push_str(&format!(
                    "r={}  gamma={}  w={}  word={}\n",
                    e.r,
                    e.gamma.beta_expr(),
                    e.element,
                    if word.is_empty() { "id".to_string() } else { word.join("·") }
                ));
            }
            Ok(Output::ok(text, json!({"l": rs.rank, "entries": entries})))
        }
    }
}

fn with_evaluation(rs: &RootSystem, d: FactoredDeterminant, mu: Option<&str>) -> Result<Output> {
    let mut text = format!("{d}\n");
    let mut json = d.to_json();
    json["totalDegree"] = json!(d.total_degree());
    if let Some(mu) = mu {
        let mu = parse_weight(rs, mu)?;
        let e = evaluate_factored(&d, &mu)?;
        text.push_str(&format!("value at {} (up to a nonzero scalar): {}\nvanishing order: {}\n", mu.beta_expr(), format_rational(&e.value), e.vanishing_order));
        json["evaluation"] = json!({"mu": mu, "value": format_rational(&e.value), "vanishingOrder": e.vanishing_order, "scalarNormalized": true});
    }
    Ok(Output::ok(text, json))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["osp"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn prv_text() {
        let (code, out, _) = call(&["prv", "--l", "1", "--lambda", "3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("(φ(β1)-1)^1 · (φ(β1))^1 · (φ(β1)+1/2)^1\n"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["prv", "--l", "1"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["mult", "--l", "2", "--lambda", "0,1"]).0, 2);
        assert_eq!(call(&["tau", "--l", "1", "--nu", "0.5"]).0, 1);
        assert_eq!(call(&["weyl", "--l", "3", "--cap", "2"]).0, 4);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn domain_error_names_weight() {
        let (code, _, err) = call(&["prv", "--l", "2", "--lambda", "1/2,0"]);
        assert_eq!(code, 2);
        assert!(err.contains("1/2,0"), "{err}");
    }

    #[test]
    fn negative_weights_parse() {
        let (code, out, _) = call(&["annihilator", "--l", "1", "--lambda", "-1/2"]);
        assert_eq!(code, 0);
        assert!(out.contains("centrally generated: false"));
        assert!(out.contains("odd modules"));
    }
}
