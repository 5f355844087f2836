use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use outerspec::constructions::{ChainVariant, FamilySpec};
use outerspec::eigen::{eigenpair, graph_spectrum};
use outerspec::graph::graph6;
use outerspec::outerplanar::{is_outerplanar, validate_certificate, OuterplanarityCertificate};
use outerspec::report::{report_render, verify_paper, Budget, Format, VerificationMatrix, VerifyConfig};
use outerspec::search::{
    conjecture_suite_with, enumerate_outerplanar_with, extremal_with, ConjectureKind, SearchFamily, SearchOptions,
};
use outerspec::series::{
    decompose, eliminate_ratio, series_coefficients, solve_char_equation, HubMode, SeriesEquation, SeriesSet,
};
use outerspec::{Error, Exact, Graph};

use crate::{Cli, Command};

/// Exit code of a search stopped by its parent budget.
const PARTIAL: u8 = 3;

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let large = cli.budget == Some(Budget::Large);
    match &cli.command {
        Command::Construct { family, n, q, k, attach, variant, out } => {
            let spec = family_spec(family, *n, *q, *k, attach.as_deref(), variant.as_deref())?;
            let g = spec.build()?;
            let code = graph6::encode(&g);
            if cli.json {
                let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
                emit(
                    out.as_deref(),
                    &pretty(&json!({
                        "family": spec, "n": g.n(), "edges": edges, "hubs": spec.hubs(), "graph6": code,
                    })),
                )?;
            } else {
                emit(out.as_deref(), &format!("{code}\n"))?;
            }
        }
        Command::Check { input, witness } => {
            let graphs = read_graphs(input)?;
            let mut rows = Vec::new();
            let mut text = String::new();
            for g in &graphs {
                let cert = is_outerplanar(g);
                if !validate_certificate(g, &cert) {
                    bail!("internal error: certificate for {} failed validation", graph6::encode(g));
                }
                text.push_str(&check_line(g, &cert, *witness));
                rows.push(
                    json!({ "graph6": graph6::encode(g), "outerplanar": cert.is_outerplanar(), "certificate": cert }),
                );
            }
            print(cli.json, &Value::Array(rows), &text);
        }
        Command::Eig { input, k, vector } => {
            let g = single_graph(input)?;
            if *k == 0 || *k > g.n() {
                bail!("k must lie in 1..={}", g.n());
            }
            let spec = graph_spectrum::<f64>(&g)?;
            let simple = spec.is_simple(*k);
            let pair = if *vector && simple { Some(eigenpair::<f64>(&g, *k)?) } else { None };
            let gap = spec.gap(*k);
            let mut text = format!("lambda_{k} = {:.15}\nsimple = {simple}\ngap = {gap:.3e}\n", spec.lambda(*k));
            if *vector && !simple {
                text.push_str("eigenvector omitted: eigenvalue is not simple\n");
            }
            if let Some(p) = &pair {
                text.push_str(&format!("residual = {:.3e}\n", p.residual));
                for (v, x) in p.vector.iter().enumerate() {
                    text.push_str(&format!("x[{v}] = {x:.15}\n"));
                }
            }
            let value = json!({
                "k": k, "lambda": spec.lambda(*k), "simple": simple,
                "gap": if gap.is_finite() { json!(gap) } else { Value::Null },
                "trace_error": spec.trace_error, "square_error": spec.square_error,
                "residual": pair.as_ref().map(|p| p.residual), "vector": pair.map(|p| p.vector),
            });
            print(cli.json, &value, &text);
        }
        Command::Series { input, hubs, mode, order } => {
            let g = single_graph(input)?;
            let (u1, u2) = parse_hubs(hubs)?;
            let mode: HubMode = mode.parse()?;
            let (value, text) = series(&g, u1, u2, mode, *order)?;
            print(cli.json, &value, &text);
        }
        Command::Enumerate { n, connected, out } => {
            let graphs = enumerate_outerplanar_with(*n, *connected, large)?;
            let codes: Vec<String> = graphs.iter().map(graph6::encode).collect();
            if cli.json {
                emit(
                    out.as_deref(),
                    &pretty(&json!({ "n": n, "connected": connected, "count": codes.len(), "graphs": codes })),
                )?;
            } else {
                emit(out.as_deref(), &codes.iter().map(|c| format!("{c}\n")).collect::<String>())?;
                eprintln!("{} graphs", codes.len());
            }
        }
        Command::Extremal { n, k, family, checkpoint, resume, max_parents, allow_twelve } => {
            let family: SearchFamily = family.parse()?;
            let opts = SearchOptions {
                allow_twelve: *allow_twelve || large,
                checkpoint: checkpoint.clone(),
                resume: *resume,
                max_parents: *max_parents,
                ..Default::default()
            };
            match extremal_with(*n, *k, family, &opts) {
                Ok(r) => {
                    let mut text = format!(
                        "n = {}, k = {}, family = {}\nbest = {:.12}\nexamined = {}\n",
                        r.n, r.k, r.family, r.best, r.examined
                    );
                    for a in &r.argmax {
                        text.push_str(&format!("argmax {a}\n"));
                    }
                    if let Some(gap) = r.gap {
                        text.push_str(&format!("gap = {gap:.3e}\n"));
                    }
                    for c in &r.candidates {
                        text.push_str(&format!("candidate {} {} {:.12}\n", c.name, c.graph6, c.value));
                    }
                    print(cli.json, &serde_json::to_value(&r)?, &text);
                }
                Err(Error::Partial { level, next_parent }) => {
                    let value = json!({ "partial": true, "level": level, "next_parent": next_parent });
                    let text =
                        format!("stopped at level {level}, parent {next_parent}; rerun with --resume to continue\n");
                    print(cli.json, &value, &text);
                    return Ok(ExitCode::from(PARTIAL));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Conjectures { kind, max_n } => {
            let kind: ConjectureKind = kind.parse()?;
            let opts = SearchOptions { allow_twelve: large, ..Default::default() };
            let report = conjecture_suite_with(kind, *max_n, &opts)?;
            let mut text = format!("kind {kind}\n");
            for r in &report.rows {
                let conj = r.conjectured.iter().map(|c| c.value).fold(f64::NEG_INFINITY, f64::max);
                text.push_str(&format!(
                    "n={:<3} family={:<12} search={:.12} conjectured={:.12} unique={} {}\n",
                    r.n,
                    r.family.to_string(),
                    r.search_best,
                    conj,
                    r.unique_and_conjectured,
                    r.status
                ));
            }
            print(cli.json, &serde_json::to_value(&report)?, &text);
        }
        Command::VerifyPaper { config, group, out, print_config } => {
            let mut cfg = match config {
                Some(p) => VerifyConfig::load(p).with_context(|| format!("loading {}", p.display()))?,
                None => VerifyConfig::default(),
            };
            if let Some(b) = cli.budget {
                cfg.budget = b;
            }
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            if !group.is_empty() {
                cfg.groups = group.clone();
            }
            if out.is_some() {
                cfg.output = out.clone();
            }
            cfg.validate()?;
            if *print_config {
                print!("{}", cfg.to_toml());
                return Ok(ExitCode::SUCCESS);
            }
            let matrix = verify_paper(&cfg)?;
            let format = if cli.json { Format::Json } else { Format::Markdown };
            print!("{}", report_render(&matrix, format));
            if !matrix.succeeded() {
                for c in matrix.failures() {
                    eprintln!("FAIL {}", c.id);
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Report { input, format } => {
            let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
            let matrix = VerificationMatrix::from_json(&text)?;
            let format: Format = if cli.json { Format::Json } else { format.parse()? };
            print!("{}", report_render(&matrix, format));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn family_spec(
    tag: &str,
    n: Option<usize>,
    q: Option<usize>,
    k: Option<usize>,
    attach: Option<&str>,
    variant: Option<&str>,
) -> Result<FamilySpec> {
    let need = |v: Option<usize>, name: &str| v.with_context(|| format!("family `{tag}` needs --{name}"));
    Ok(match tag {
        "fan" => FamilySpec::Fan { n: need(n, "n")? },
        "bridged-double-fan" => FamilySpec::BridgedDoubleFan { q: need(q, "q")? },
        "diamond-double-fan" => FamilySpec::DiamondDoubleFan { n: need(n, "n")? },
        "fan-star" => FamilySpec::FanStar { k: need(k, "k")?, n: need(n, "n")? },
        "cut-vertex-family" => FamilySpec::CutVertexFamily {
            q: need(q, "q")?,
            attach: parse_attach(attach.context("family `cut-vertex-family` needs --attach")?)?,
        },
        "figure3" => FamilySpec::Figure3,
        "g0-prime-even" => FamilySpec::G0PrimeEven { n: need(n, "n")? },
        "g0-prime-odd" => FamilySpec::G0PrimeOdd { n: need(n, "n")? },
        "triple-fan-chain" => FamilySpec::TripleFanChain { q: need(q, "q")?, variant: parse_variant(variant)? },
        "triple-fan-star" => FamilySpec::TripleFanStar { q: need(q, "q")? },
        other => bail!("unknown family `{other}`"),
    })
}

fn parse_attach(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';')
        .map(|group| {
            group
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad attachment `{t}`")))
                .collect()
        })
        .collect()
}

fn parse_variant(v: Option<&str>) -> Result<ChainVariant> {
    Ok(match v {
        None | Some("endpoint-to-hub") => ChainVariant::EndpointToHub,
        Some("endpoint-to-endpoint") => ChainVariant::EndpointToEndpoint,
        Some("outer-endpoints-to-middle-hub") => ChainVariant::OuterEndpointsToMiddleHub,
        Some(other) => bail!("unknown chain variant `{other}`"),
    })
}

fn parse_hubs(s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((a.parse().context("bad hub")?, b.parse().context("bad hub")?)),
        _ => bail!("--hubs expects `u1,u2`"),
    }
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    Ok(graph6::decode_all(&read_input(path)?)?)
}

fn single_graph(path: &Path) -> Result<Graph> {
    let mut graphs = read_graphs(path)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => bail!("{} holds no graph", path.display()),
        m => bail!("{} holds {m} graphs; expected one", path.display()),
    }
}

fn check_line(g: &Graph, cert: &OuterplanarityCertificate, witness: bool) -> String {
    let code = graph6::encode(g);
    match cert {
        OuterplanarityCertificate::Outerplanar { order } if witness => format!("{code} outerplanar order {order:?}\n"),
        OuterplanarityCertificate::Outerplanar { .. } => format!("{code} outerplanar\n"),
        OuterplanarityCertificate::NotOuterplanar { witness: w } if witness => {
            format!("{code} not-outerplanar {:?} branch-sets {:?}\n", w.kind, w.branch_sets)
        }
        OuterplanarityCertificate::NotOuterplanar { witness: w } => format!("{code} not-outerplanar {:?}\n", w.kind),
    }
}

fn coefficients_json<T: std::fmt::Display>(s: &SeriesEquation<T>) -> Vec<String> {
    s.coefficients.iter().map(ToString::to_string).collect()
}

fn series(g: &Graph, u1: usize, u2: usize, mode: HubMode, order: usize) -> Result<(Value, String)> {
    let d = decompose(g, u1, u2, mode)?;
    let mut value = json!({
        "hubs": [u1, u2], "mode": mode, "order": order, "sigma": d.sigma,
        "ratio": d.ratio, "hubs_adjacent": d.hubs_adjacent,
    });
    let mut text = format!("mode {mode}, order {order}, sigma {:.6}\n", d.sigma);
    let (root, coefficients) = if mode == HubMode::Exact {
        let eq = series_coefficients::<f64>(&d, order)?.combined().context("combined series")?;
        (solve_char_equation(&eq)?, json!({ "a": eq.values() }))
    } else {
        match series_coefficients::<Exact>(&d, order)? {
            SeriesSet::Combined(eq) => {
                let root = solve_char_equation(&eq)?;
                (root, json!({ "a": coefficients_json(&eq) }))
            }
            SeriesSet::Split(split) => {
                let parts = json!({
                    "f1": coefficients_json(&split.f1),
                    "f2": coefficients_json(&split.f2),
                    "d": coefficients_json(&split.d),
                });
                let elim = eliminate_ratio(split)?;
                let eliminated: Vec<String> =
                    elim.equation.combined.coefficients.iter().map(ToString::to_string).collect();
                let mut parts = parts;
                parts["eliminated"] = json!(eliminated);
                (elim.root, parts)
            }
        }
    };
    if let Some(map) = coefficients.as_object() {
        for (name, list) in map {
            let items: Vec<String> =
                list.as_array().into_iter().flatten().map(|v| v.to_string().replace('"', "")).collect();
            text.push_str(&format!("{name}: {}\n", items.join(" ")));
        }
    }
    text.push_str(&format!(
        "root {:.15}\nenclosure [{:.15}, {:.15}]\nmonotone {}\n",
        root.root, root.lo, root.hi, root.monotone
    ));
    value["coefficients"] = coefficients;
    value["root"] = serde_json::to_value(root)?;
    Ok((value, text))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}

fn print(as_json: bool, value: &Value, text: &str) {
    if as_json {
        print!("{}", pretty(value));
    } else {
        print!("{text}");
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?
        }
        _ => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
