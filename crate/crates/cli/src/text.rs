//! Plain-text renderings of the reports.

use std::fmt::Write;

use intersective::certify::{IntersectivityCertificate, UnramifiedArgument};
use intersective::families::{FamilyInfo, FamilyReport, StepStatus};
use intersective::padic::{NewtonPolygon, PadicRootReport};
use intersective::permgrp::{CoveringOutcome, MetacyclicReport, PermGroup, SubgroupInfo};
use intersective::poly::{IntFactorization, SmallField};
use intersective::{FactorizationModP, IntPoly};

pub fn certificate(c: &IntersectivityCertificate) -> String {
    let mut s = String::new();
    for (i, f) in c.factors.iter().enumerate() {
        let poly = f.to_poly().map(|p| p.to_string()).unwrap_or_default();
        writeln!(s, "factor {i}: {poly}").unwrap();
    }
    writeln!(s, "group: {}", c.group).unwrap();
    if let Some(cov) = &c.covering {
        writeln!(s, "covering: {}", serde_json::to_string(cov).unwrap()).unwrap();
    }
    if let Some(r) = &c.ramification {
        let ps: Vec<String> = r.primes.iter().map(|p| p.to_string()).collect();
        writeln!(s, "ramified primes: {}", ps.join(" ")).unwrap();
    }
    for e in &c.primes {
        writeln!(s, "  p = {}: {} ({})", e.p, e.method(), serde_json::to_string(&e.evidence).unwrap()).unwrap();
    }
    let unram = match &c.unramified {
        UnramifiedArgument::LinearFactor { factor } => format!("factor {factor} is linear"),
        UnramifiedArgument::Multiquadratic { factors } => format!("multiquadratic, factors {factors:?}"),
        UnramifiedArgument::Covering => "covering of the claimed group".to_string(),
        UnramifiedArgument::None => "none".to_string(),
    };
    writeln!(s, "unramified primes: {unram}").unwrap();
    if let Some(sc) = &c.screening {
        writeln!(
            s,
            "screening: {} primes up to {}, {} tuples seen, {} violations",
            sc.primes_checked,
            sc.prime_bound,
            sc.observed.len(),
            sc.violations.len()
        )
        .unwrap();
    }
    writeln!(s, "verdict: {}", c.verdict).unwrap();
    s
}

pub fn roots(f: &IntPoly, r: &PadicRootReport) -> String {
    let mut s = format!("{f}\nroots in Z_{}: {} ({:?})\n", r.p, r.distinct_roots, r.method);
    for w in &r.witnesses {
        let tag = if w.exact { " exact" } else { "" };
        writeln!(s, "  {} mod {}^{}{tag}", w.value, r.p, w.precision).unwrap();
    }
    s
}

pub fn newton(np: &NewtonPolygon, shift: i64) -> String {
    let mut s = format!("p = {}, shift = {shift}\nvertices:", np.p);
    for (i, v) in &np.vertices {
        write!(s, " ({i},{v})").unwrap();
    }
    s.push('\n');
    if np.zero_roots > 0 {
        writeln!(s, "roots at zero: {}", np.zero_roots).unwrap();
    }
    for (v, n) in np.root_valuation_partition() {
        writeln!(s, "  {n} roots of valuation {v}").unwrap();
    }
    s
}

pub fn factor_z(fac: &IntFactorization) -> String {
    let mut s = format!("content: {}\n", fac.content);
    for (g, k) in &fac.factors {
        writeln!(s, "  ({g})^{k}").unwrap();
    }
    s
}

pub fn factor_q(q: u64, fac: &FactorizationModP<SmallField>) -> String {
    let mut s = format!("over F_{q}, unit {}\n", fac.unit);
    for (g, k) in &fac.factors {
        writeln!(s, "  ({g})^{k}").unwrap();
    }
    writeln!(s, "degrees: {:?}", fac.degree_partition()).unwrap();
    s
}

pub fn cover(g: &PermGroup, out: &CoveringOutcome, core_trivial: bool) -> String {
    match out {
        CoveringOutcome::Covered(c) => {
            let mut s = format!("{} (order {}): covered\n", g.name(), g.order());
            writeln!(s, "subgroup orders: {:?}, core trivial: {core_trivial}", c.subgroup_orders).unwrap();
            writeln!(s, "{:>6} {:>6} {:>4}  witness", "order", "size", "U").unwrap();
            for a in &c.assignment {
                writeln!(s, "{:>6} {:>6} {:>4}  {}", a.element_order, a.class_size, a.subgroup + 1, a.witness).unwrap();
            }
            s
        }
        CoveringOutcome::Uncovered { element, element_order, class_size } => format!(
            "{} (order {}): not covered\nclass of {element} (order {element_order}, size {class_size}) meets no subgroup\n",
            g.name(),
            g.order()
        ),
    }
}

fn subgroup_line(s: &mut String, h: &SubgroupInfo) {
    let by = h.covered_by.map_or("-".to_string(), |i| format!("U{}", i + 1));
    writeln!(
        s,
        "{:>6} {:<12} {:>5} {:>4} {:>4}  {:?}",
        h.order,
        h.label.as_deref().unwrap_or("-"),
        h.conjugates,
        if h.metacyclic { "yes" } else { "no" },
        by,
        h.orbits
    )
    .unwrap();
}

const HEADER: &str = " order label        conj meta   in  orbits\n";

pub fn metacyclic(r: &MetacyclicReport) -> String {
    let mut s = format!("{}: {} pairs examined\n", r.group, r.pairs_examined);
    if r.all_covered() {
        s.push_str("every metacyclic subgroup fixes a point\n");
    } else {
        writeln!(s, "{} uncovered metacyclic subgroups", r.exceptions.len()).unwrap();
        s.push_str(HEADER);
        for h in &r.exceptions {
            subgroup_line(&mut s, h);
        }
    }
    s
}

pub fn subgroups(g: &PermGroup, infos: &[SubgroupInfo]) -> String {
    let mut s = format!("{} (order {}): {} classes of subgroups\n", g.name(), g.order(), infos.len());
    s.push_str(HEADER);
    for h in infos {
        subgroup_line(&mut s, h);
    }
    s
}

pub fn family(r: &FamilyReport) -> String {
    let mut s = format!("{} at {}\n", r.family, r.specialization);
    for w in &r.warnings {
        writeln!(s, "warning: {w}").unwrap();
    }
    for step in &r.steps {
        let st = match step.status {
            StepStatus::Passed => "passed",
            StepStatus::Failed => "FAILED",
            StepStatus::Skipped => "skipped",
        };
        writeln!(s, "  {:<24} {st:<8} {}", step.id, step.description).unwrap();
    }
    if let Some(c) = &r.certificate {
        let ps: Vec<String> = c.primes.iter().map(|e| format!("{}:{}", e.p, e.method())).collect();
        writeln!(s, "evidence: {}", ps.join(" ")).unwrap();
        writeln!(s, "verdict: {}", c.verdict).unwrap();
    }
    s
}

pub fn catalog(cat: &[FamilyInfo]) -> String {
    let mut s = String::new();
    for f in cat {
        writeln!(s, "{:<12} degrees {:?}  group {}  params {}", f.name, f.degrees, f.group, f.params.join(",")).unwrap();
        writeln!(s, "             {}", f.predicate).unwrap();
    }
    s
}
