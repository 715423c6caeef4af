use std::fmt::Write as _;

use descendent::decomposition::WORKING_ORDER;
use descendent::matroid::{descendent_ground_set, named_restriction};
use descendent::quasimodular::{expand_in_eisenstein_with_margin, DEFAULT_MARGIN};
use descendent::rational::format_rational;
use descendent::{
    all_positive_decompositions, bracket_series, discriminant, eisenstein_monomials, gw_invariant,
    poly_basis_expand, qm_dimension, solve_linear, tau_direct, tau_niebur, tau_pentagonal,
    tau_relation_report, to_eisenstein, DescendentLabel, Error, LinearDecomposition, Rational,
};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::args::{Cli, Command, MatroidQuery, TauMethod};
use crate::{cache, CliError};

/// A command result in both renderings.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
        }
    }
}

fn labels_text(labels: &[DescendentLabel]) -> String {
    let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

/// Right-aligned rows in the style of a printed matrix.
fn matrix_text(rows: &[Vec<Rational>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| rationals(r)).collect();
    let ncols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    cells
        .iter()
        .map(|r| {
            let body: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            format!("[{}]", body.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_indices(spec: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::usage(format!("bad basis {spec:?}: expected e.g. 1,2,3 or 123"));
    let spec = spec.trim().trim_start_matches('(').trim_end_matches(')');
    if spec.contains(',') {
        spec.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        spec.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

fn basis_labels(k: u32, spec: &str, positive: bool) -> Result<Vec<DescendentLabel>, CliError> {
    let ground = descendent_ground_set(k, positive);
    parse_indices(spec)?
        .into_iter()
        .map(|i| {
            i.checked_sub(1)
                .and_then(|i| ground.get(i).cloned())
                .ok_or_else(|| {
                    CliError::usage(format!("basis index {i} outside 1..={}", ground.len()))
                })
        })
        .collect()
}

fn decomposition_json(d: &LinearDecomposition) -> Value {
    serde_json::to_value(d).expect("decompositions serialize")
}

fn eisenstein_output(label: &DescendentLabel, order: Option<usize>) -> Result<Output, CliError> {
    let k = label.weight();
    let x = match order {
        None => to_eisenstein(label)?,
        Some(n) => {
            let dim = qm_dimension(k)?;
            let margin = n.checked_sub(dim).ok_or(Error::InsufficientOrder {
                have: n,
                need: dim + DEFAULT_MARGIN,
            })?;
            expand_in_eisenstein_with_margin(&bracket_series(label, n), k, margin.min(DEFAULT_MARGIN))?
        }
    };
    let nonzero: Vec<_> = x.iter().filter(|(_, c)| !c.is_zero()).collect();
    let text = nonzero
        .iter()
        .map(|(m, c)| {
            let key: Vec<String> = m.weight_key().iter().map(|w| w.to_string()).collect();
            let key = if key.len() == 1 {
                format!("({},)", key[0])
            } else {
                format!("({})", key.join(", "))
            };
            format!("{key}: {}", format_rational(c))
        })
        .collect::<Vec<_>>()
        .join(", ");
    let json = json!({
        "label": label,
        "weight": k,
        "terms": x.iter().map(|(m, c)| json!({
            "monomial": m.to_string(),
            "exponents": m,
            "key": m.weight_key(),
            "coeff": format_rational(c),
        })).collect::<Vec<_>>(),
    });
    Ok(Output::new(format!("{{{text}}}"), json))
}

fn matroid_output(cli: &Cli, query: &MatroidQuery) -> Result<Output, CliError> {
    let args = query.args();
    let m = cache::matroid(cli.cache_dir.as_deref(), args.weight, args.positive)?;
    let labels = m.labels();
    Ok(match query {
        MatroidQuery::Matrix(_) => {
            let rows = m.matrix_rows();
            let monomials = eisenstein_monomials(args.weight)?;
            Output::new(
                matrix_text(&rows),
                json!({
                    "weight": args.weight,
                    "positive": args.positive,
                    "rows": monomials.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "columns": labels,
                    "matrix": rows.iter().map(|r| rationals(r)).collect::<Vec<_>>(),
                }),
            )
        }
        MatroidQuery::Rank(_) => Output::new(m.rank().to_string(), json!({ "rank": m.rank() })),
        MatroidQuery::Groundset(_) => Output::new(labels_text(labels), json!(labels)),
        MatroidQuery::Bases(_) => {
            let bases = m.bases_labels();
            Output::new(
                bases.iter().map(|b| labels_text(b)).collect::<Vec<_>>().join("\n"),
                json!(bases),
            )
        }
        MatroidQuery::Count(_) => {
            let n = m.bases_count();
            Output::new(n.to_string(), json!({ "bases_count": n }))
        }
        MatroidQuery::Tutte(_) => {
            let t = m.tutte()?;
            Output::new(
                t.to_string(),
                json!({
                    "polynomial": t.to_string(),
                    "terms": t.terms().map(|((i, j), c)| json!({"x": i, "y": j, "coeff": c})).collect::<Vec<_>>(),
                }),
            )
        }
    })
}

fn delta_order(cli: &Cli) -> usize {
    cli.order.unwrap_or(WORKING_ORDER)
}

fn tau_output(cli: &Cli, d: u32, method: TauMethod, basis: Option<&str>) -> Result<Output, CliError> {
    if d == 0 {
        return Err(CliError::usage("d must be at least 1"));
    }
    let value = match method {
        TauMethod::Direct => tau_direct(d as u64)?,
        TauMethod::Niebur => tau_niebur(d as u64),
        TauMethod::Pentagonal => {
            let labels = basis_labels(12, basis.unwrap_or("1234567"), true)?;
            let decomposition = solve_linear(&labels, &discriminant(delta_order(cli))?, 12)?;
            tau_pentagonal(d, &decomposition)?
        }
    };
    let method = format!("{method:?}").to_lowercase();
    Ok(Output::new(
        value.to_string(),
        json!({ "d": d, "method": method, "tau": value.to_string() }),
    ))
}

fn tau_check_output(max_d: u32) -> Result<Output, CliError> {
    let r = tau_relation_report(max_d)?;
    let mut text = String::new();
    let _ = writeln!(text, "multiplicativity: {} coprime pairs", r.multiplicative_pairs.len());
    let _ = writeln!(text, "hecke recursion: {} cases", r.hecke_cases.len());
    let _ = writeln!(text, "deligne bound: {} primes", r.deligne_primes.len());
    let _ = writeln!(text, "nonvanishing: tau(1..={}) != 0", r.nonvanishing_checked);
    for v in &r.violations {
        let _ = writeln!(text, "violation: {v}");
    }
    let _ = write!(text, "{}", if r.is_clean() { "ok" } else { "FAILED" });
    let mut json = serde_json::to_value(&r).expect("report serializes");
    json["ok"] = json!(r.is_clean());
    Ok(Output::new(text, json))
}

fn conjecture_output(cli: &Cli, max_weight: u32, restrictions: bool) -> Result<Output, CliError> {
    let mut lines = Vec::new();
    let mut ranks = Vec::new();
    let mut ok = true;
    for k in (2..=max_weight).step_by(2) {
        let m = cache::full_matroid(cli.cache_dir.as_deref(), k)?;
        let dim = qm_dimension(k)?;
        ok &= m.rank() == dim;
        lines.push(format!(
            "k={k}: |E|={} rank={} dim={dim} {}",
            m.size(),
            m.rank(),
            if m.rank() == dim { "full" } else { "DEFICIENT" }
        ));
        ranks.push(json!({"weight": k, "size": m.size(), "rank": m.rank(), "dimension": dim}));
    }
    let mut named = Vec::new();
    if restrictions {
        for k in [14, 16, 18] {
            let m = named_restriction(k)?;
            let uniform = m.is_uniform();
            ok &= uniform.is_some();
            lines.push(match uniform {
                Some((r, n)) => format!("restriction k={k}: U({r},{n})"),
                None => format!("restriction k={k}: not uniform (rank {}, {} elements)", m.rank(), m.size()),
            });
            named.push(json!({
                "weight": k,
                "size": m.size(),
                "rank": m.rank(),
                "uniform": uniform.is_some(),
                "labels": m.labels(),
            }));
        }
    }
    lines.push(if ok { "ok".into() } else { "FAILED".into() });
    Ok(Output::new(
        lines.join("\n"),
        json!({"ranks": ranks, "restrictions": named, "ok": ok}),
    ))
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Evaluate { label, degree } => {
            let v = gw_invariant(&label.insertions, *degree);
            Ok(Output::new(
                format_rational(&v),
                json!({"label": label.insertions, "degree": degree, "value": format_rational(&v)}),
            ))
        }
        Command::Expand { label } => {
            let s = bracket_series(&label.insertions, cli.order.unwrap_or(10));
            Ok(Output::new(s.to_string(), serde_json::to_value(&s).expect("series serialize")))
        }
        Command::Eisenstein { label } => eisenstein_output(&label.insertions, cli.order),
        Command::Matroid { query } => matroid_output(cli, query),
        Command::Delta {
            weight,
            basis,
            positive,
        } => {
            let labels = basis_labels(*weight, basis, *positive)?;
            let d = solve_linear(&labels, &discriminant(delta_order(cli))?, *weight)?;
            Ok(Output::new(d.to_string(), decomposition_json(&d)))
        }
        Command::DeltaAll { weight } => {
            let all = all_positive_decompositions(*weight)?;
            let text = all
                .iter()
                .map(|d| format!("({}) {d}", d.key.as_deref().unwrap_or("")))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::new(text, all.iter().map(decomposition_json).collect()))
        }
        Command::DeltaPoly {
            triple_type,
            weight,
        } => {
            if *weight != 12 {
                return Err(Error::InvalidArgument(format!(
                    "the discriminant has weight 12, not {weight}"
                ))
                .into());
            }
            let dim = qm_dimension(*weight)?;
            let lead = discriminant(dim - 1)?.coeffs().to_vec();
            let p = poly_basis_expand(*triple_type, *weight, &lead)?;
            let json = json!({
                "type": p.triple_type,
                "weight": p.weight,
                "generators": p.generators,
                "terms": p.terms.iter().map(|(f, c)| json!({
                    "factors": f,
                    "coeff": format_rational(c),
                })).collect::<Vec<_>>(),
            });
            Ok(Output::new(format!("Delta = {p}"), json))
        }
        Command::Tau { d, method, basis } => tau_output(cli, *d, *method, basis.as_deref()),
        Command::TauCheck { max_d } => tau_check_output(*max_d),
        Command::ConjectureCheck {
            max_weight,
            no_restrictions,
        } => conjecture_output(cli, *max_weight, !no_restrictions),
    }
}
