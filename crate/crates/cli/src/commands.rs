use std::path::Path;

use intersective::arith::{is_prime, FactorBudget};
use intersective::certify::{certify_intersective, CertifyOptions, Verdict};
use intersective::families::{family, list_families, verify_family, FamilyName, FamilyReport, Specialization};
use intersective::padic::{newton_polygon_shifted, roots_in_zp};
use intersective::permgrp::{
    check_k_covering, common_core_is_trivial, enumerate_subgroups, metacyclic_subgroups_covered, LatticeMode, PermError,
};
use intersective::poly::{factor_mod_p, factor_over_z, IntPoly, ParamPolyFile, PolyFile};
use intersective::BigInt;
use serde_json::{json, Value};

use crate::input::{read_claim, read_group, read_poly, usage};
use crate::{
    text, CertifyArgs, Cli, Command, Failure, FamilyCommand, Format, GroupCommand, RunConfig, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_REFUTED,
};

/// A finished command: JSON report, its text rendering, exit code.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

pub fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let r = match &cli.command {
        Command::Certify(args) => certify(args, &cli.run)?,
        Command::PadicRoots { poly, prime } => padic_roots(&read_poly(poly)?, *prime)?,
        Command::Newton { poly, prime, shift } => newton(&read_poly(poly)?, *prime, *shift)?,
        Command::Factor { poly, prime } => factor(&read_poly(poly)?, *prime, cli.run.seed)?,
        Command::Group(g) => group(g)?,
        Command::Family(f) => family_cmd(f)?,
    };
    let out = match cli.run.format {
        Format::Json => serde_json::to_string_pretty(&r.json).expect("reports serialize") + "\n",
        Format::Text => r.text,
    };
    Ok((out, r.code))
}

fn require_prime(p: u64) -> Result<(), Failure> {
    if is_prime(&BigInt::from(p)) {
        Ok(())
    } else {
        Err(usage(format!("{p} is not prime")))
    }
}

pub fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Certified | Verdict::CertifiedConditionalOnGroup => EXIT_OK,
        Verdict::Refuted(_) => EXIT_REFUTED,
        Verdict::Inconclusive(_) => EXIT_INCONCLUSIVE,
    }
}

fn certify(args: &CertifyArgs, run: &RunConfig) -> Result<Report, Failure> {
    let factors: Vec<IntPoly> = args.polys.iter().map(|s| read_poly(s)).collect::<Result<_, _>>()?;
    let degrees: Vec<usize> = factors.iter().map(|f| f.degree().unwrap_or(0)).collect();
    let claim = args.group.as_deref().map(|g| read_claim(g, &degrees)).transpose()?;
    let defaults = CertifyOptions::default();
    let opts = CertifyOptions {
        budget: FactorBudget { rho_iterations: run.budget, seed: run.seed },
        resultant_budget: FactorBudget { rho_iterations: defaults.resultant_budget.rho_iterations.min(run.budget), seed: run.seed },
        screening_bound: args.prime_bound,
        hints: args.hints.clone(),
        ..defaults
    };
    let cert = certify_intersective(&factors, claim.as_ref(), &opts)?;
    Ok(Report {
        json: serde_json::to_value(&cert).expect("certificate serializes"),
        text: text::certificate(&cert),
        code: verdict_code(&cert.verdict),
    })
}

fn padic_roots(f: &IntPoly, p: u64) -> Result<Report, Failure> {
    require_prime(p)?;
    let r = roots_in_zp(f, &BigInt::from(p))?;
    Ok(Report { json: r.to_json(), text: text::roots(f, &r), code: EXIT_OK })
}

fn newton(f: &IntPoly, p: u64, shift: i64) -> Result<Report, Failure> {
    require_prime(p)?;
    let np = newton_polygon_shifted(f, p, shift)?;
    let json = json!({
        "p": p,
        "shift": shift,
        "vertices": np.vertices,
        "zero_roots": np.zero_roots,
        "segments": np.segments(),
        "root_valuations": np.root_valuation_partition().iter().map(|(v, n)| json!({"valuation": v.to_string(), "count": n})).collect::<Vec<_>>(),
    });
    Ok(Report { json, text: text::newton(&np, shift), code: EXIT_OK })
}

fn factor(f: &IntPoly, q: Option<u64>, seed: u64) -> Result<Report, Failure> {
    match q {
        None => {
            let fac = factor_over_z(f);
            let json = json!({
                "content": fac.content.to_string(),
                "factors": fac.factors.iter().map(|(g, k)| json!({"poly": g.to_file("x"), "multiplicity": k})).collect::<Vec<_>>(),
                "irreducible": fac.is_irreducible(),
            });
            Ok(Report { json, text: text::factor_z(&fac), code: EXIT_OK })
        }
        Some(q) => {
            let fac = factor_mod_p(f, q, seed)?;
            let json = json!({
                "field_order": q,
                "unit": fac.unit,
                "factors": fac.factors.iter().map(|(g, k)| json!({"poly": g.to_string(), "multiplicity": k})).collect::<Vec<_>>(),
                "degree_partition": fac.degree_partition(),
            });
            let text = text::factor_q(q, &fac);
            Ok(Report { json, text, code: EXIT_OK })
        }
    }
}

fn group(cmd: &GroupCommand) -> Result<Report, Failure> {
    match cmd {
        GroupCommand::Cover(src) => {
            let gi = read_group(src)?;
            let g = &gi.group;
            let out = check_k_covering(g, &gi.refs())?;
            let core = common_core_is_trivial(g, &gi.refs())?;
            let json = json!({
                "group": g.name(),
                "order": g.order(),
                "subgroup_orders": gi.subgroups.iter().map(|u| u.order()).collect::<Vec<_>>(),
                "covered": out.is_covered(),
                "core_trivial": core,
                "result": out,
            });
            let code = if out.is_covered() { EXIT_OK } else { EXIT_REFUTED };
            Ok(Report { json, text: text::cover(g, &out, core), code })
        }
        GroupCommand::Metacyclic(src) => {
            let gi = read_group(src)?;
            let [u1, u2] = &gi.subgroups[..] else {
                return Err(usage("the metacyclic check needs exactly two subgroups"));
            };
            let r = metacyclic_subgroups_covered(&gi.group, u1, u2)?;
            let code = if r.all_covered() { EXIT_OK } else { EXIT_REFUTED };
            let mut json = serde_json::to_value(&r).expect("report serializes");
            json["all_covered"] = json!(r.all_covered());
            Ok(Report { json, text: text::metacyclic(&r), code })
        }
        GroupCommand::Subgroups { source, solvable_max } => {
            let gi = read_group(source)?;
            let mode = match solvable_max {
                Some(m) => LatticeMode::Solvable { max_order: *m as usize },
                None => LatticeMode::Full,
            };
            let infos = enumerate_subgroups(&gi.group, &gi.refs(), mode).map_err(|e| match e {
                PermError::TooLarge { .. } => Failure { code: crate::EXIT_RESOURCE, message: format!("{e}; use --solvable-max") },
                e => e.into(),
            })?;
            let json = json!({
                "group": gi.group.name(),
                "order": gi.group.order(),
                "mode": match mode { LatticeMode::Full => json!("full"), LatticeMode::Solvable { max_order } => json!({"solvable_max": max_order}) },
                "subgroups": infos,
            });
            Ok(Report { json, text: text::subgroups(&gi.group, &infos), code: EXIT_OK })
        }
    }
}

fn family_name(name: &str) -> Result<FamilyName, Failure> {
    name.parse().map_err(|e: intersective::families::FamilyError| usage(e.to_string()))
}

fn specialization(s: &str) -> Result<Specialization, Failure> {
    s.parse().map_err(|e: intersective::families::FamilyError| usage(e.to_string()))
}

pub fn report_code(r: &FamilyReport) -> u8 {
    if r.failed_step.is_some() {
        return EXIT_INCONCLUSIVE;
    }
    r.certificate.as_ref().map_or(EXIT_OK, |c| verdict_code(&c.verdict))
}

fn family_cmd(cmd: &FamilyCommand) -> Result<Report, Failure> {
    match cmd {
        FamilyCommand::Verify { name, spec } => {
            let r = verify_family(family_name(name)?, &specialization(spec)?)?;
            Ok(Report { json: serde_json::to_value(&r).expect("report serializes"), text: text::family(&r), code: report_code(&r) })
        }
        FamilyCommand::Export { name, spec, out } => {
            let fam = family(family_name(name)?)?;
            let spec = spec.as_deref().map(specialization).transpose()?;
            let value = fam.export(spec.as_ref())?;
            let Some(dir) = out else {
                let text = serde_json::to_string_pretty(&value).expect("export serializes") + "\n";
                return Ok(Report { json: value, text, code: EXIT_OK });
            };
            std::fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            let mut written = Vec::new();
            for key in ["f", "g"] {
                if value[key].is_null() {
                    continue;
                }
                // Round-trip through the file types so only their fields are written.
                let body = if spec.is_some() {
                    let pf: PolyFile = serde_json::from_value(value[key].clone()).expect("polynomial file");
                    serde_json::to_string_pretty(&pf)
                } else {
                    let pf: ParamPolyFile = serde_json::from_value(value[key].clone()).expect("parametric polynomial file");
                    serde_json::to_string_pretty(&pf)
                }
                .expect("serializes");
                let path = dir.join(format!("{key}.json"));
                write(&path, &(body + "\n"))?;
                written.push(path.display().to_string());
            }
            let text = written.iter().map(|p| format!("wrote {p}\n")).collect();
            Ok(Report {
                json: json!({"family": fam.name.as_str(), "written": written, "g_rescaling": value["g_rescaling"]}),
                text,
                code: EXIT_OK,
            })
        }
        FamilyCommand::List => {
            let cat = list_families();
            Ok(Report { json: serde_json::to_value(&cat).expect("catalog serializes"), text: text::catalog(&cat), code: EXIT_OK })
        }
    }
}

fn write(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| usage(format!("{}: {e}", path.display())))
}
