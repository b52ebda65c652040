//! One function per subcommand, each producing an [`OutputRecord`].

use barspin::barpart::is_bar_core;
use barspin::constructions::{principal_pair_check, verify_ratio_identities};
use barspin::witness::{select_witness, verify_witness_in, PrimeSummary};
use barspin::*;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::record::{OutputRecord, Status};

/// Failures that end a command without a record.
#[derive(Debug)]
pub enum CommandError {
    /// Bad arguments or inputs outside an operation's domain: exit 2.
    Usage(String),
    /// An internal consistency check failed: exit 1.
    Check(String),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Check(_) => 1,
        }
    }
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Usage(m) | CommandError::Check(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::MissingWitness { .. } => CommandError::Check(e.to_string()),
            _ => CommandError::Usage(e.to_string()),
        }
    }
}

pub type CommandResult = std::result::Result<OutputRecord, CommandError>;

fn big(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

fn label(l: &BarPartition) -> Value {
    Value::String(l.to_string())
}

fn bar_json(bar: &Bar) -> Value {
    match bar.kind {
        BarKind::Type1 { x, y } => json!({"type": 1, "x": x, "y": y, "length": bar.length}),
        BarKind::Type2 { y } => json!({"type": 2, "y": y, "length": bar.length}),
        BarKind::Type3 { i, j } => json!({"type": 3, "i": i, "j": j, "length": bar.length}),
    }
}

/// Runs `f` on a pool of `jobs` workers, or on the global pool.
fn with_jobs<T: Send>(
    jobs: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> std::result::Result<T, CommandError> {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| CommandError::Check(e.to_string())),
        None => Ok(f()),
    }
}

pub fn bars_cmd(lambda: &BarPartition, p: Option<OddPrime>) -> CommandResult {
    let table = bars(lambda);
    let mut lengths: Vec<u64> = table.lengths().collect();
    lengths.sort_unstable();
    let mut payload = json!({
        "partition": label(lambda),
        "n": lambda.size(),
        "bars": table.bars.iter().map(bar_json).collect::<Vec<_>>(),
        "lengths": lengths,
        "h": big(&table.h_total),
        "h_unmixed": big(&table.h_unmixed),
        "h_mixed": big(&table.h_mixed),
    });
    if let Some(p) = p {
        let tower = weight_tower(lambda, p);
        payload["weights"] = json!(tower.weights);
        payload["valuation"] = json!(tower.valuation);
    }
    let inputs = json!({"partition": label(lambda), "p": p.map(|p| p.get())});
    Ok(OutputRecord::new("bars", inputs, payload, Status::Info))
}

pub fn core_cmd(lambda: &BarPartition, p: OddPrime) -> CommandResult {
    let (core, w) = bar_core_and_weight(lambda, p)?;
    let payload = json!({
        "partition": label(lambda),
        "core": label(&core),
        "w": w,
        "defect_class": DefectClass::from_weight(w, p).as_str(),
    });
    let inputs = json!({"partition": label(lambda), "p": p.get()});
    Ok(OutputRecord::new("core", inputs, payload, Status::Info))
}

pub fn blocks_cmd(n: u64, p: OddPrime, group: Group) -> CommandResult {
    if n < 1 {
        return Err(CommandError::Usage("n must be at least 1".into()));
    }
    let blocks = spin_blocks(n, p, group)?;
    let blocks: Vec<Value> = blocks
        .iter()
        .map(|b| {
            let (equal_degree, degrees) = equal_degree_test(b);
            let labels: Vec<Value> = b
                .labels
                .iter()
                .zip(&b.label_heights)
                .map(|(l, h)| {
                    let chars: Vec<&SpinCharacter> =
                        b.characters.iter().filter(|c| &c.label == l).collect();
                    json!({
                        "label": label(l),
                        "sigma": chars[0].sigma.as_i8(),
                        "characters": chars.len(),
                        "degree": big(&chars[0].degree),
                        "height": h,
                    })
                })
                .collect();
            json!({
                "core": label(&b.core),
                "w": b.w,
                "defect_class": b.defect_class.as_str(),
                "labels": labels,
                "num_characters": b.characters.len(),
                "equal_degree": equal_degree,
                "height_zero_degrees": degrees.iter().map(big).collect::<Vec<_>>(),
            })
        })
        .collect();
    let inputs = json!({"n": n, "p": p.get(), "group": group.to_string()});
    let payload = json!({"blocks": blocks, "num_blocks": blocks.len()});
    Ok(OutputRecord::new("blocks", inputs, payload, Status::Info))
}

fn cores_up_to(p: OddPrime, max: u64) -> Vec<BarPartition> {
    (0..=max)
        .flat_map(enumerate_bar_partitions)
        .filter(|l| is_bar_core(l, p))
        .collect()
}

fn sweep(p: OddPrime, max_core: u64, max_w: u64, skip_empty: bool) -> Vec<(BarPartition, u64)> {
    cores_up_to(p, max_core)
        .into_iter()
        .filter(|g| !(skip_empty && g.is_empty()))
        .flat_map(|g| (1..=max_w).map(move |w| (g.clone(), w)))
        .collect()
}

pub fn verify_ratios(p: OddPrime, max_core: u64, max_w: u64, jobs: Option<usize>) -> CommandResult {
    let cases = sweep(p, max_core, max_w, false);
    let reports = with_jobs(jobs, || {
        cases
            .par_iter()
            .map(|(g, w)| verify_ratio_identities(g, p, *w))
            .collect::<Result<Vec<_>>>()
    })??;
    let mut failures = Vec::new();
    let mut congruence_failures = Vec::new();
    let (mut identities, mut congruences) = (0, 0);
    for r in &reports {
        identities += r.checks.len();
        congruences += r.congruences.len();
        for c in r.failures() {
            failures.push(json!({
                "core": label(&r.gamma),
                "w": r.w,
                "identity": c.identity.as_str(),
                "class": c.class,
                "direct": c.direct.to_string(),
                "closed_form": c.closed_form.to_string(),
            }));
        }
        for c in r.congruences.iter().filter(|c| !c.passed()) {
            congruence_failures.push(json!({
                "core": label(&r.gamma),
                "w": r.w,
                "label": label(&c.label),
                "bar_product": {
                    "residue": c.bar_product.residue,
                    "core_residue": c.bar_product.core_residue,
                },
                "full_part": {
                    "residue": c.full_part.residue,
                    "core_residue": c.full_part.core_residue,
                },
            }));
        }
    }
    let ok = failures.is_empty() && congruence_failures.is_empty();
    let payload = json!({
        "instances": reports.len(),
        "identities_checked": identities,
        "congruences_checked": congruences,
        "failures": failures,
        "congruence_failures": congruence_failures,
    });
    let inputs = json!({"kind": "ratios", "p": p.get(), "max_core": max_core, "max_w": max_w});
    Ok(OutputRecord::new(
        "verify",
        inputs,
        payload,
        Status::from_pass(ok),
    ))
}

pub fn verify_comparisons(
    p: OddPrime,
    max_core: u64,
    max_w: u64,
    jobs: Option<usize>,
) -> CommandResult {
    let cases = sweep(p, max_core, max_w, true);
    let comparisons = with_jobs(jobs, || {
        cases
            .par_iter()
            .map(|(g, w)| compare_constructions(g, p, *w).map(|c| (g.clone(), *w, c)))
            .collect::<Result<Vec<_>>>()
    })??;
    let failures: Vec<Value> = comparisons
        .iter()
        .filter(|(_, _, c)| !c.verified)
        .map(|(g, w, c)| {
            json!({
                "core": label(g),
                "w": w,
                "left": label(&c.left),
                "right": label(&c.right),
                "h_left": big(&c.h_left),
                "h_right": big(&c.h_right),
            })
        })
        .collect();
    let two_class = comparisons
        .iter()
        .filter(|(_, _, c)| matches!(c.case, ComparisonCase::TwoClasses { .. }))
        .count();
    let payload = json!({
        "instances": comparisons.len(),
        "two_class_instances": two_class,
        "unique_class_instances": comparisons.len() - two_class,
        "failures": failures,
    });
    let ok = failures_empty(&payload);
    let inputs = json!({"kind": "thm35", "p": p.get(), "max_core": max_core, "max_w": max_w});
    Ok(OutputRecord::new(
        "verify",
        inputs,
        payload,
        Status::from_pass(ok),
    ))
}

fn failures_empty(payload: &Value) -> bool {
    payload["failures"].as_array().is_some_and(Vec::is_empty)
}

pub fn verify_principal_pair(p: OddPrime, max_w: u64) -> CommandResult {
    if max_w < 2 {
        return Err(CommandError::Usage("max-w must be at least 2".into()));
    }
    let mut cases = Vec::new();
    let mut ok = true;
    for w in 2..=max_w {
        let c = principal_pair_check(p, w)?;
        ok &= c.holds;
        cases.push(json!({
            "w": w,
            "single": label(&c.single),
            "pair": label(&c.pair),
            "h_single": big(&c.h_single),
            "h_pair": big(&c.h_pair),
            "holds": c.holds,
        }));
    }
    let inputs = json!({"kind": "prop36", "p": p.get(), "max_w": max_w});
    let payload = json!({"cases": cases});
    Ok(OutputRecord::new(
        "verify",
        inputs,
        payload,
        Status::from_pass(ok),
    ))
}

fn certificate_json(cert: &WitnessCertificate) -> Value {
    let opt = |s: Option<CheckStatus>| s.map(CheckStatus::as_str);
    json!({
        "p": cert.p.get(),
        "n": cert.n(),
        "core": label(&cert.core),
        "w": cert.w,
        "case": cert.case.as_str(),
        "label_a": label(&cert.label_a),
        "label_b": label(&cert.label_b),
        "degree_a": big(&cert.degree_a),
        "degree_b": big(&cert.degree_b),
        "checks": {
            "same_block": cert.checks.same_block,
            "both_height_zero": cert.checks.both_height_zero,
            "degrees_distinct": cert.checks.degrees_distinct,
            "congruence_ok": opt(cert.checks.congruence),
            "case_argument": opt(cert.checks.case_argument),
        },
        "failures": cert.failures,
        "verified": cert.is_verified(),
    })
}

fn qualifies(core: &BarPartition, w: u64, p: OddPrime) -> bool {
    w >= p.get() || (core.is_empty() && w >= 2)
}

/// Witness for every qualifying block of `2.A_n`, or for one block by core and weight.
pub fn witness_cmd(
    n: Option<u64>,
    core: Option<&BarPartition>,
    w: Option<u64>,
    p: OddPrime,
) -> CommandResult {
    let (inputs, blocks) = match (n, core, w) {
        (Some(n), None, None) => {
            let blocks: Vec<SpinBlock> = spin_blocks(n, p, Group::DoubleCoverAlt)?
                .into_iter()
                .filter(|b| qualifies(&b.core, b.w, p))
                .collect();
            if blocks.is_empty() {
                return Err(CommandError::Usage(format!(
                    "no spin block of 2.A_{n} has weight >= {p} or an empty core with weight >= 2"
                )));
            }
            (json!({"n": n, "p": p.get()}), blocks)
        }
        (None, Some(core), Some(w)) => {
            if !is_bar_core(core, p) {
                return Err(CommandError::Usage(format!("{core} is not a {p}-bar core")));
            }
            if !qualifies(core, w, p) {
                return Err(CommandError::Usage(format!(
                    "block with core {core} and weight {w} has abelian defect and is not the empty-core case"
                )));
            }
            let block = spin_block(core, p, w, Group::DoubleCoverAlt)?;
            (
                json!({"core": label(core), "w": w, "p": p.get()}),
                vec![block],
            )
        }
        _ => {
            return Err(CommandError::Usage(
                "give either --n, or both --core and --w".into(),
            ))
        }
    };
    let mut certs = Vec::new();
    for block in &blocks {
        let cert = select_witness(&block.core, p, block.w)?;
        certs.push(verify_witness_in(cert, block)?);
    }
    let status = if !certs.iter().all(WitnessCertificate::is_verified) {
        Status::Fail
    } else if certs.iter().any(|c| c.w >= p.get()) {
        Status::Pass
    } else {
        Status::Info
    };
    let payload = json!({"certificates": certs.iter().map(certificate_json).collect::<Vec<_>>()});
    Ok(OutputRecord::new("witness", inputs, payload, status))
}

fn summary_json(s: &PrimeSummary) -> Value {
    let mut v = json!({
        "p": s.p,
        "max_n": s.max_n,
        "defect_zero_blocks": s.defect_zero_blocks,
        "abelian_blocks": s.abelian_blocks,
        "nonabelian_blocks": s.nonabelian_blocks,
        "witnesses_verified": s.witnesses_verified,
        "equal_degree_nonabelian": s.equal_degree_nonabelian,
        "equal_degree_abelian": s.equal_degree_abelian,
    });
    if s.nonabelian_blocks == 0 {
        v["note"] = json!("no non-abelian blocks");
    }
    v
}

pub fn check_cmd(max_n: u64, primes: &[OddPrime], jobs: Option<usize>) -> CommandResult {
    if max_n < 4 {
        return Err(CommandError::Usage(format!(
            "max-n must be at least 4, got {max_n}"
        )));
    }
    let inputs = json!({
        "max_n": max_n,
        "primes": primes.iter().map(|p| p.get()).collect::<Vec<_>>(),
    });
    let report = match scan_with_jobs(max_n, primes, jobs) {
        Ok(r) => r,
        Err(e @ Error::MissingWitness { .. }) => {
            let payload = json!({"error": e.to_string()});
            return Ok(OutputRecord::new("check", inputs, payload, Status::Fail));
        }
        Err(e) => return Err(e.into()),
    };
    let witnesses: Vec<Value> = report
        .witnesses()
        .map(|c| {
            json!({
                "n": c.n(),
                "p": c.p.get(),
                "core": label(&c.core),
                "w": c.w,
                "case": c.case.as_str(),
                "label_a": label(&c.label_a),
                "label_b": label(&c.label_b),
                "degree_a": big(&c.degree_a),
                "degree_b": big(&c.degree_b),
            })
        })
        .collect();
    let ok = report.anomalies() == 0
        && report
            .summaries
            .iter()
            .all(|s| s.witnesses_verified == s.nonabelian_blocks);
    let payload = json!({
        "summaries": report.summaries.iter().map(summary_json).collect::<Vec<_>>(),
        "blocks_scanned": report.blocks.len(),
        "witnesses": witnesses,
    });
    Ok(OutputRecord::new(
        "check",
        inputs,
        payload,
        Status::from_pass(ok),
    ))
}
