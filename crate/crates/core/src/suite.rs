//! Batch runner over the theorem families: sweeps each family across its
//! parameter range and cross-checks small instances with the search oracle.

use std::time::{Duration, Instant};

use crate::constructions::{
    build_nonexistence, build_t10, build_t11, build_t12, build_t4, build_t7, build_t8, build_t9,
    ConstructionResult, Family, FamilyParams, JoinPartner, Verdict, T9_M3_WEIGHTS,
};
use crate::error::Error;
use crate::labeling::Progression;
use crate::rings::{is_prime, structural_class, zero_divisor_graph, Modulus, StructuralClass};
use crate::search::{
    decide_small, decide_small_exhaustive, decide_small_with_target, search_daml, CertificateKind,
    SearchBudget,
};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Restrict to these families; `None` runs everything, including the
    /// figure checks.
    pub families: Option<Vec<Family>>,
    pub max_prime: u64,
    /// Upper end of the T4/T7/T8 sweeps.
    pub m_max: Option<u64>,
    /// Explicit parameter list, replacing the default range of each family.
    pub m_values: Option<Vec<u64>>,
    /// Budget for the open-ended searches (T7 at n = 4, T10 at m = 7).
    pub budget: SearchBudget,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            families: None,
            max_prime: 97,
            m_max: None,
            m_values: None,
            budget: SearchBudget::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Outcome = std::result::Result<String, String>;

fn run(rows: &mut Vec<CheckRow>, name: impl Into<String>, f: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = f();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    rows.push(CheckRow {
        name: name.into(),
        passed,
        detail,
        elapsed: start.elapsed(),
    });
}

fn err(e: Error) -> String {
    e.to_string()
}

fn verified_exact(r: &ConstructionResult) -> std::result::Result<(), String> {
    let p = r.profile.as_ref().ok_or("no profile")?;
    if !r.is_verified() {
        return Err(format!(
            "m={} n={}: {}",
            r.params.m,
            r.params.n,
            r.verdict.name()
        ));
    }
    match &r.expected_weights {
        Some(e) if *e == p.weights => Ok(()),
        Some(_) => Err(format!("m={}: weights differ from closed form", r.params.m)),
        None => Err(format!("m={}: no closed form", r.params.m)),
    }
}

fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckRow> {
    let wants = |f: Family| cfg.families.as_ref().is_none_or(|fs| fs.contains(&f));
    let values = |default: Vec<u64>| cfg.m_values.clone().unwrap_or(default);
    let mut rows = Vec::new();

    if cfg.families.is_none() {
        run(&mut rows, "figures: Γ(Z_10), Γ(Z_15)", || {
            let edges = |n: u64| -> std::result::Result<Vec<(String, String)>, String> {
                let g = zero_divisor_graph(Modulus::new(n).map_err(err)?).map_err(err)?;
                let mut e: Vec<(String, String)> = g
                    .edges()
                    .map(|(u, v)| {
                        let (a, b) = (g.name(u).to_string(), g.name(v).to_string());
                        if a.parse::<u64>().unwrap() < b.parse::<u64>().unwrap() {
                            (a, b)
                        } else {
                            (b, a)
                        }
                    })
                    .collect();
                e.sort();
                Ok(e)
            };
            let pairs = |l: &[(u64, u64)]| -> Vec<(String, String)> {
                let mut v: Vec<_> = l
                    .iter()
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .collect();
                v.sort();
                v
            };
            let f1 = pairs(&[(2, 5), (4, 5), (5, 6), (5, 8)]);
            let f2 = pairs(&[
                (3, 5),
                (5, 6),
                (5, 9),
                (5, 12),
                (3, 10),
                (6, 10),
                (9, 10),
                (10, 12),
            ]);
            if edges(10)? == f1 && edges(15)? == f2 {
                Ok("exact edge sets".into())
            } else {
                Err("edge sets differ".into())
            }
        });
    }

    if wants(Family::T4) {
        let m_max = cfg.m_max.unwrap_or(200);
        let ms = values((1..=m_max).collect());
        run(&mut rows, "t4: closed form, n = 1", || {
            for &m in &ms {
                verified_exact(&build_t4(m, 1).map_err(err)?)?;
            }
            Ok(format!("{} instances", ms.len()))
        });
        run(&mut rows, "t4: twins, n = 2..5", || {
            let ms: Vec<u64> = ms.iter().copied().filter(|&m| m <= 20).collect();
            for &m in &ms {
                for n in 2..=5 {
                    let r = build_t4(m, n).map_err(err)?;
                    if !matches!(r.verdict, Verdict::TwinObstruction(_)) {
                        return Err(format!("m={m} n={n}: {}", r.verdict.name()));
                    }
                }
            }
            Ok(format!("{} instances", ms.len() * 4))
        });
        run(&mut rows, "t4: oracle refutes small n > 1", || {
            for (m, n) in [(1, 2), (1, 3), (2, 2), (3, 2)] {
                let g = build_t4(m, n).map_err(err)?.graph;
                let k = decide_small_exhaustive(&g).map_err(err)?.kind;
                if k != CertificateKind::ExhaustedNoLabeling {
                    return Err(format!("m={m} n={n}: {k:?}"));
                }
            }
            Ok("4 refutations".into())
        });
    }

    if wants(Family::T7) {
        let n_max = cfg.m_max.unwrap_or(100);
        let ns = values([1, 2].into_iter().chain(5..=n_max).collect());
        run(&mut rows, "t7: closed form, m = 1", || {
            let ns: Vec<u64> = ns.iter().copied().filter(|n| !matches!(n, 3 | 4)).collect();
            for &n in &ns {
                verified_exact(&build_t7(1, n).map_err(err)?)?;
            }
            Ok(format!("{} instances", ns.len()))
        });
        run(&mut rows, "t7: collisions at n = 3, 4", || {
            let r3 = build_t7(1, 3).map_err(err)?;
            let r4 = build_t7(1, 4).map_err(err)?;
            match (&r3.verdict, &r4.verdict) {
                (Verdict::CollisionInPaperLabeling(p3), Verdict::CollisionInPaperLabeling(p4))
                    if *p3 == vec![[2, 7], [5, 6]] && p4.contains(&[4, 10]) =>
                {
                    Ok("(v3,v8),(v6,v7) at n=3; (v5,v11) at n=4".into())
                }
                (a, b) => Err(format!("n=3: {a:?}; n=4: {b:?}")),
            }
        });
        run(&mut rows, "t7: oracle at n = 3", || {
            let g = build_t7(1, 3).map_err(err)?.graph;
            let c = decide_small(&g).map_err(err)?;
            match c.kind {
                CertificateKind::DamlFound => Ok(format!(
                    "a labeling exists: {:?}",
                    c.labeling.expect("found").labels
                )),
                CertificateKind::ExhaustedNoLabeling => Ok("no labeling exists".into()),
                k => Err(format!("{k:?}")),
            }
        });
        run(&mut rows, "t7: search at n = 4", || {
            let g = build_t7(1, 4).map_err(err)?.graph;
            let c = search_daml(&g, &cfg.budget, None);
            Ok(format!("{:?} after {} nodes", c.kind, c.nodes_explored))
        });
        run(&mut rows, "t7: twins, m = 2..10", || {
            for m in 2..=10 {
                let r = build_t7(m, 1).map_err(err)?;
                if !matches!(r.verdict, Verdict::TwinObstruction(_)) {
                    return Err(format!("m={m}: {}", r.verdict.name()));
                }
            }
            Ok("9 instances".into())
        });
    }

    if wants(Family::T8) {
        let m_max = cfg.m_max.unwrap_or(100);
        run(&mut rows, "t8: m = 1 is (8,1)-antimagic", || {
            let r = build_t8(1).map_err(err)?;
            let arith = r.profile.as_ref().and_then(|p| p.arithmetic);
            if r.is_verified() && arith == Some(Progression { a: 8, d: 1 }) {
                Ok(format!("labels {:?}", r.labeling.expect("verified").labels))
            } else {
                Err(format!("{} {arith:?}", r.verdict.name()))
            }
        });
        let ms = values((2..=m_max).collect());
        run(&mut rows, "t8: closed form, m >= 2", || {
            for &m in ms.iter().filter(|&&m| m >= 2) {
                let r = build_t8(m).map_err(err)?;
                if r.graph.order() as u64 != 4 * m + 2 {
                    return Err(format!("m={m}: order {}", r.graph.order()));
                }
                verified_exact(&r)?;
            }
            Ok(format!("{} instances", ms.len()))
        });
    }

    if wants(Family::T9) {
        let ms = values(primes_in(5, cfg.max_prime));
        run(&mut rows, "t9: closed form, prime m >= 5", || {
            for &m in ms.iter().filter(|&&m| m >= 5) {
                verified_exact(&build_t9(m).map_err(err)?)?;
            }
            Ok(format!("{} primes", ms.len()))
        });
        run(&mut rows, "t9: P3 x P3 and the published multiset", || {
            let g = build_t9(3).map_err(err)?.graph;
            let any = decide_small(&g).map_err(err)?;
            let target = decide_small_with_target(&g, Some(&T9_M3_WEIGHTS)).map_err(err)?;
            if any.kind != CertificateKind::DamlFound {
                return Err(format!("{:?}", any.kind));
            }
            Ok(format!(
                "labeling exists; published multiset {}",
                if target.kind == CertificateKind::DamlFound {
                    "attainable"
                } else {
                    "unattainable"
                }
            ))
        });
    }

    if wants(Family::T10) {
        let ms = values(vec![5, 7]);
        for m in ms {
            run(&mut rows, format!("t10: m = {m}"), || {
                let k = zero_divisor_graph(Modulus::new(m * m).map_err(err)?).map_err(err)?;
                if structural_class(&k) != StructuralClass::Complete(m as usize - 1) {
                    return Err("Γ(Z_{m²}) is not complete".into());
                }
                let budget = if m == 5 {
                    SearchBudget::unlimited()
                } else {
                    cfg.budget
                };
                let r = build_t10(m, &budget).map_err(err)?;
                match r.verdict {
                    Verdict::VerifiedDaml => {
                        Ok(format!("labels {:?}", r.labeling.expect("verified").labels))
                    }
                    Verdict::Undecided { nodes_explored } if m != 5 => {
                        Ok(format!("undecided after {nodes_explored} nodes"))
                    }
                    v => Err(v.name().to_string()),
                }
            });
        }
    }

    if wants(Family::T11) {
        let ms = values(primes_in(5, cfg.max_prime));
        run(&mut rows, "t11: closed form and group ranges", || {
            for &m in ms.iter().filter(|&&m| m >= 5) {
                let r = build_t11(m).map_err(err)?;
                verified_exact(&r)?;
                let w = &r.profile.as_ref().expect("verified").weights;
                let k = m as usize - 1;
                let (g1, g2, g3) = (&w[..k], &w[k..2 * k], &w[2 * k..]);
                let max = |s: &[i64]| *s.iter().max().expect("nonempty");
                let min = |s: &[i64]| *s.iter().min().expect("nonempty");
                if !(max(g1) < min(g2) && max(g2) < min(g3)) {
                    return Err(format!("m={m}: groups overlap"));
                }
            }
            Ok(format!("{} primes", ms.len()))
        });
        run(&mut rows, "t11: P3 x K2", || {
            let r = build_t11(3).map_err(err)?;
            let c = decide_small(&r.graph).map_err(err)?;
            if c.kind == CertificateKind::DamlFound {
                Ok("labeling exists".into())
            } else {
                Err(format!("{:?}", c.kind))
            }
        });
    }

    if wants(Family::T12) {
        let ms = values(primes_in(5, cfg.max_prime));
        run(&mut rows, "t12: closed form, prime m >= 5", || {
            for &m in ms.iter().filter(|&&m| is_prime(m) && m >= 5) {
                let g = zero_divisor_graph(Modulus::new(3 * m).map_err(err)?).map_err(err)?;
                if structural_class(&g) != StructuralClass::CompleteBipartite(2, m as usize - 1) {
                    return Err(format!("m={m}: Γ(Z_3m) is not K_2,m-1"));
                }
                verified_exact(&build_t12(m).map_err(err)?)?;
            }
            Ok(format!("{} primes", ms.len()))
        });
        run(&mut rows, "t12: composite m rejected", || {
            for m in [9, 25] {
                match build_t12(m) {
                    Err(Error::Parameter { .. }) => {}
                    other => return Err(format!("m={m}: {other:?}")),
                }
            }
            Ok("m = 9, 25".into())
        });
    }

    let nx_primes = values(vec![3, 5, 7, 11]);
    let nx_pairs: Vec<(u64, u64)> = match &cfg.m_values {
        Some(ms) => ms.iter().map(|&m| (m, 1)).collect(),
        None => (1..=3).flat_map(|m| (1..=3).map(move |n| (m, n))).collect(),
    };
    let nx_cases: Vec<(Family, Vec<FamilyParams>)> = vec![
        (
            Family::Nx21,
            nx_primes
                .iter()
                .map(|&m| FamilyParams::new(Family::Nx21, m, 1))
                .collect(),
        ),
        (
            Family::Nx2,
            nx_primes
                .iter()
                .flat_map(|&m| {
                    JoinPartner::ALL[1..]
                        .iter()
                        .map(move |&p| FamilyParams::new(Family::Nx2, m, 1).with_partner(p))
                })
                .collect(),
        ),
        (
            Family::Nx3,
            nx_primes
                .iter()
                .filter(|&&m| m >= 5)
                .flat_map(|&m| {
                    JoinPartner::ALL
                        .iter()
                        .map(move |&p| FamilyParams::new(Family::Nx3, m, 1).with_partner(p))
                })
                .collect(),
        ),
        (
            Family::Nx5,
            nx_pairs
                .iter()
                .map(|&(m, n)| FamilyParams::new(Family::Nx5, m, n))
                .collect(),
        ),
        (
            Family::Nx6,
            nx_pairs
                .iter()
                .map(|&(m, n)| FamilyParams::new(Family::Nx6, m, n))
                .collect(),
        ),
        (
            Family::NxCor,
            values(vec![1, 2, 3])
                .into_iter()
                .map(|m| FamilyParams::new(Family::NxCor, m, 1))
                .collect(),
        ),
    ];
    for (family, cases) in nx_cases {
        if !wants(family) {
            continue;
        }
        run(&mut rows, format!("{family}: twin certificates"), || {
            let mut refuted = 0;
            for p in &cases {
                let r = build_nonexistence(p.family, p.m, p.n, p.partner).map_err(err)?;
                let Verdict::TwinObstruction(pair) = r.verdict else {
                    return Err(format!("m={} n={}: {}", p.m, p.n, r.verdict.name()));
                };
                if pair.u == pair.v
                    || r.graph.neighbors(pair.u).ok() != r.graph.neighbors(pair.v).ok()
                {
                    return Err(format!("m={} n={}: bad twin pair {pair:?}", p.m, p.n));
                }
                if r.graph.order() <= 8 {
                    let k = decide_small_exhaustive(&r.graph).map_err(err)?.kind;
                    if k != CertificateKind::ExhaustedNoLabeling {
                        return Err(format!("oracle disagrees at m={} n={}: {k:?}", p.m, p.n));
                    }
                    refuted += 1;
                }
            }
            Ok(format!(
                "{} certificates, {refuted} confirmed by search",
                cases.len()
            ))
        });
    }

    rows
}
