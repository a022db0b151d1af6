use std::time::Duration;

use serde_json::json;
use zdg_daml::constructions::{
    build as build_family, ConstructionResult, Family, FamilyParams, Verdict,
};
use zdg_daml::expr::{evaluate, parse};
use zdg_daml::labeling::{verify_daml, Labeling, LabelingDefect, WeightProfile};
use zdg_daml::search::{search_daml, CertificateKind, SearchBudget};
use zdg_daml::suite::{run_suite, SuiteConfig};
use zdg_daml::{Error, Graph};

use crate::{BudgetArgs, Format, EXIT_INTERNAL, EXIT_OK, EXIT_REFUTED, EXIT_UNDECIDED, EXIT_USAGE};

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn load(src: &str) -> Result<Graph, u8> {
    let expr = parse(src).map_err(|e| {
        eprintln!("{src}");
        eprintln!("{}^", " ".repeat(e.offset()));
        fail(&e.into())
    })?;
    evaluate(&expr).map_err(|e| fail(&e))
}

fn budget_from(args: &BudgetArgs, find_all: bool) -> Result<SearchBudget, u8> {
    let mut budget = SearchBudget::with_nodes(args.max_nodes).map_err(|e| fail(&e))?;
    budget.max_time = Some(Duration::from_secs(args.max_seconds));
    budget.find_all = find_all;
    Ok(budget)
}

fn names_of(g: &Graph, ids: &[usize]) -> String {
    ids.iter()
        .map(|&v| g.name(v))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn build(src: &str, format: Format) -> u8 {
    let g = match load(src) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match format {
        Format::Json => println!("{}", g.to_json_string()),
        Format::Dot => print!("{}", g.to_dot()),
        Format::Summary => {
            println!("order: {}", g.order());
            println!("size: {}", g.size());
            println!("degrees: {:?}", g.degree_sequence());
            match g.find_twin_pair() {
                Some(p) => println!(
                    "twins: present, e.g. {} and {} (no distance antimagic labeling)",
                    g.name(p.u),
                    g.name(p.v)
                ),
                None => println!("twins: none"),
            }
        }
    }
    EXIT_OK
}

fn print_profile(g: &Graph, p: &WeightProfile) {
    println!("weights: {:?}", p.weights);
    println!("distinct: {}", p.distinct);
    for [u, v] in &p.collisions {
        println!(
            "collision: {} and {} (weight {})",
            names_of(g, &[*u]),
            names_of(g, &[*v]),
            p.weights[*u]
        );
    }
    match p.arithmetic {
        Some(a) => println!("arithmetic: ({}, {})", a.a, a.d),
        None => println!("arithmetic: none"),
    }
}

pub fn verify(src: &str, labels: Option<Vec<u32>>, format: Format) -> u8 {
    let g = match load(src) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let f = match labels {
        Some(l) => Labeling::new(l),
        None => Labeling::identity(g.order()),
    };
    let v = verify_daml(&g, &f);
    if let Some(d @ LabelingDefect::WrongLength { .. }) = &v.defect {
        eprintln!("error: {d} (graph order is {})", g.order());
        return EXIT_USAGE;
    }
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "is_daml": v.is_daml,
                "defect": v.defect.as_ref().map(ToString::to_string),
                "profile": v.profile,
            })
        ),
        _ => {
            if let Some(d) = &v.defect {
                println!("invalid labeling: {d}");
            }
            if let Some(p) = &v.profile {
                print_profile(&g, p);
            }
            println!(
                "verdict: {}",
                if v.is_daml {
                    "distance antimagic"
                } else {
                    "not distance antimagic"
                }
            );
        }
    }
    if v.is_daml {
        EXIT_OK
    } else {
        EXIT_REFUTED
    }
}

pub fn search(src: &str, target: Option<Vec<i64>>, all: bool, args: &BudgetArgs) -> u8 {
    let g = match load(src) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if let Some(t) = &target {
        if t.len() != g.order() {
            eprintln!(
                "error: target has {} weights, graph order is {}",
                t.len(),
                g.order()
            );
            return EXIT_USAGE;
        }
    }
    let budget = match budget_from(args, all) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let cert = search_daml(&g, &budget, target.as_deref());
    let profile = cert
        .labeling
        .as_ref()
        .and_then(|f| verify_daml(&g, f).profile);
    let mut out = serde_json::to_value(&cert).expect("certificate serializes");
    out["profile"] = json!(profile);
    println!("{out}");
    match cert.kind {
        CertificateKind::DamlFound => EXIT_OK,
        CertificateKind::TwinObstruction | CertificateKind::ExhaustedNoLabeling => EXIT_REFUTED,
        CertificateKind::BudgetExceeded => EXIT_UNDECIDED,
    }
}

fn print_construction(r: &ConstructionResult) {
    let p = &r.params;
    print!("{} m={} n={}", p.family, p.m, p.n);
    if let Some(g) = p.partner {
        print!(" G={g}");
    }
    println!(" (order {}, size {})", r.graph.order(), r.graph.size());
    println!("verdict: {}", r.verdict.name());
    match &r.verdict {
        Verdict::TwinObstruction(pair) => println!(
            "twins: {} and {} share the neighborhood [{}]",
            r.graph.name(pair.u),
            r.graph.name(pair.v),
            names_of(&r.graph, r.graph.neighbors(pair.u).unwrap_or(&[]))
        ),
        Verdict::CollisionInPaperLabeling(pairs) => {
            for [u, v] in pairs {
                println!("collision: v{} and v{}", u + 1, v + 1);
            }
        }
        Verdict::PaperFormulaMismatch(ms) => {
            for m in ms {
                println!(
                    "mismatch: v{} expected {} computed {}",
                    m.vertex + 1,
                    m.expected,
                    m.computed
                );
            }
        }
        Verdict::Undecided { nodes_explored } => {
            println!("search budget exhausted after {nodes_explored} nodes")
        }
        Verdict::VerifiedDaml | Verdict::Refuted => {}
    }
    if let Some(f) = &r.labeling {
        println!("labels: {:?}", f.labels);
    }
    if let Some(e) = &r.expected_weights {
        println!("expected weights: {e:?}");
    }
    if let Some(prof) = &r.profile {
        println!("computed weights: {:?}", prof.weights);
        if let Some(a) = prof.arithmetic {
            println!("arithmetic: ({}, {})", a.a, a.d);
        }
    }
    if let Some(note) = &r.note {
        println!("note: {note}");
    }
}

pub fn theorem(
    id: &str,
    m: u64,
    n: u64,
    partner: Option<&str>,
    format: Format,
    args: &BudgetArgs,
) -> u8 {
    let family: Family = match id.parse() {
        Ok(f) => f,
        Err(e) => return fail(&e),
    };
    let mut params = FamilyParams::new(family, m, n);
    if let Some(p) = partner {
        match p.parse() {
            Ok(p) => params = params.with_partner(p),
            Err(e) => return fail(&e),
        }
    }
    let budget = match budget_from(args, false) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let r = match build_family(params, &budget) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    match format {
        Format::Json => println!("{}", r.to_json()),
        _ => print_construction(&r),
    }
    match r.verdict {
        Verdict::VerifiedDaml => EXIT_OK,
        Verdict::Undecided { .. } => EXIT_UNDECIDED,
        _ => EXIT_REFUTED,
    }
}

pub fn suite(
    family: Option<&str>,
    m_max: Option<u64>,
    m: Option<Vec<u64>>,
    max_prime: u64,
    args: &BudgetArgs,
) -> u8 {
    let families = match family.map(str::parse::<Family>).transpose() {
        Ok(f) => f.map(|f| vec![f]),
        Err(e) => return fail(&e),
    };
    let budget = match budget_from(args, false) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let cfg = SuiteConfig {
        families,
        max_prime,
        m_max,
        m_values: m,
        budget,
    };
    let rows = run_suite(&cfg);
    let width = rows
        .iter()
        .map(|r| r.name.chars().count())
        .max()
        .unwrap_or(0);
    for row in &rows {
        let pad = width - row.name.chars().count();
        println!(
            "{}  {}{}  {:>8.2}s  {}",
            if row.passed { "PASS" } else { "FAIL" },
            row.name,
            " ".repeat(pad),
            row.elapsed.as_secs_f64(),
            row.detail
        );
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    println!("{} checks, {} failed", rows.len(), failed);
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_REFUTED
    }
}
