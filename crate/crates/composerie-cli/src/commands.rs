//! Implementations of the four subcommands, generic over the active ring.

use crate::output::{self, BenchRow, CellDoc, CountDoc, TableDoc, TotalDoc};
use crate::{
    BenchArgs, CmdError, CmdResult, CountArgs, OutputFormat, Pipeline, RingChoice, VerifyArgs,
};
use composerie::compositions::closed::{
    closed_all_ones, closed_allowed_set, closed_binomial_weights, closed_no_m, closed_one_or_m_all,
    closed_pyramidal_weights, closed_residue, closed_square_weights, closed_two_type_ones,
};
use composerie::{
    build_table, canonical_families, count_all_rec, count_all_via_gf, count_rec, count_via_gf,
    fibonacci, oracle_count, oracle_count_all, verify_family, BigInt, CommutativeRing, FamilySpec,
    Integers, Modular, NamedFamily, TruncatedSeries, VerificationReport,
};
use rayon::prelude::*;
use std::time::Instant;

pub fn table<R: CommutativeRing>(
    ring: &R,
    family: &FamilySpec,
    max_n: u64,
    ring_choice: RingChoice,
    format: OutputFormat,
) -> CmdResult {
    let rule = family
        .to_weights()
        .map_err(|e| CmdError::Usage(e.to_string()))?;
    let table = build_table(ring, &rule, max_n);
    let mut cells = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            cells.push(CellDoc {
                n,
                k,
                value: table.cell(n, k).to_string(),
            });
        }
    }
    let totals = (0..=max_n)
        .map(|n| TotalDoc {
            n,
            value: table.row_total(n).to_string(),
        })
        .collect();
    let doc = TableDoc {
        family: family.to_string(),
        ring: ring_choice.to_string(),
        cells,
        totals,
    };
    output::emit_table(&doc, format);
    Ok(())
}

// The closed formula for one (n, k) cell, where the family has one.
fn closed_cell(family: &FamilySpec, n: u64, k: u64) -> Option<BigInt> {
    let named = match family {
        FamilySpec::Named(f) => f,
        FamilySpec::Explicit { .. } => return None,
    };
    Some(match named {
        NamedFamily::AllOnes => closed_all_ones(n, k),
        NamedFamily::Bounded { .. } => return None,
        NamedFamily::AllowedSet { parts } => {
            let extras: Vec<u64> = parts.iter().copied().filter(|&p| p != 1).collect();
            closed_allowed_set(n, k, &extras)
        }
        NamedFamily::OneOrM { m } => closed_allowed_set(n, k, &[*m]),
        NamedFamily::ResidueOneMod { modulus } => closed_residue(n, k, *modulus),
        NamedFamily::NoPart { part } => closed_no_m(n, k, *part),
        NamedFamily::TwoTypeOnes { extra_ones } => closed_two_type_ones(n, k, *extra_ones),
        NamedFamily::BinomialWeights { m } => closed_binomial_weights(n, k, *m),
        NamedFamily::PyramidalWeights { m } => closed_pyramidal_weights(n, k, *m),
        NamedFamily::Squares => closed_square_weights(n, k),
    })
}

// The closed formula for the total count C(n), for the families that have one.
fn closed_total(family: &FamilySpec, n: u64) -> Option<BigInt> {
    let named = match family {
        FamilySpec::Named(f) => f,
        FamilySpec::Explicit { .. } => return None,
    };
    Some(match named {
        NamedFamily::AllOnes => {
            if n == 0 {
                BigInt::from(1)
            } else {
                BigInt::from(1) << (n - 1)
            }
        }
        NamedFamily::OneOrM { m } => closed_one_or_m_all(n, *m),
        NamedFamily::ResidueOneMod { modulus: 2 } => {
            if n == 0 {
                BigInt::from(1)
            } else {
                fibonacci(n)
            }
        }
        NamedFamily::TwoTypeOnes { extra_ones: 1 } => fibonacci(2 * n + 1),
        _ => return None,
    })
}

pub fn count<R: CommutativeRing>(ring: &R, args: &CountArgs) -> CmdResult {
    let family = &args.family;
    let rule = family
        .to_weights()
        .map_err(|e| CmdError::Usage(e.to_string()))?;
    let (n, k) = (args.n, args.k);
    let mut values: Vec<(Pipeline, R::Elem)> = Vec::new();
    for &pipeline in &args.pipelines {
        let value = match (pipeline, k) {
            (Pipeline::Rec, Some(k)) => count_rec(ring, &rule, n, k),
            (Pipeline::Rec, None) => count_all_rec(ring, &rule, n),
            (Pipeline::Gf, Some(k)) => count_via_gf(ring, &rule, n, k),
            (Pipeline::Gf, None) => count_all_via_gf(ring, &rule, n),
            (Pipeline::Oracle, Some(k)) => oracle_count(ring, &rule, n, k, args.oracle_max)
                .map_err(|e| CmdError::Usage(e.to_string()))?,
            (Pipeline::Oracle, None) => oracle_count_all(ring, &rule, n, args.oracle_max)
                .map_err(|e| CmdError::Usage(e.to_string()))?,
            (Pipeline::Closed, Some(k)) => {
                let value = closed_cell(family, n, k).ok_or_else(|| {
                    CmdError::Usage(format!(
                        "family `{family}` has no per-cell closed formula; use rec, gf, or oracle"
                    ))
                })?;
                ring.from_integer(&value)
            }
            (Pipeline::Closed, None) => {
                let value = closed_total(family, n).ok_or_else(|| {
                    CmdError::Usage(format!(
                        "family `{family}` has no closed total formula; use rec, gf, or oracle"
                    ))
                })?;
                ring.from_integer(&value)
            }
        };
        values.push((pipeline, value));
    }
    let (_, first) = values[0].clone();
    if values.iter().any(|(_, v)| *v != first) {
        let listing: Vec<String> = values
            .iter()
            .map(|(p, v)| format!("{p:?}={v}").to_lowercase())
            .collect();
        return Err(CmdError::Failure(format!(
            "pipelines disagree at n={n} k={k:?}: {}",
            listing.join(" ")
        )));
    }
    let doc = CountDoc {
        family: family.to_string(),
        ring: args.ring.to_string(),
        n,
        k,
        pipelines: args
            .pipelines
            .iter()
            .map(|p| format!("{p:?}").to_lowercase())
            .collect(),
        value: first.to_string(),
    };
    output::emit_count(&doc, args.format);
    Ok(())
}

pub fn verify<R: CommutativeRing + Sync>(ring: &R, args: &VerifyArgs) -> CmdResult {
    let families: Vec<FamilySpec> = if args.all {
        canonical_families()
    } else {
        vec![args
            .family
            .clone()
            .expect("clap enforces --family xor --all")]
    };
    for family in &families {
        family
            .to_weights()
            .map_err(|e| CmdError::Usage(e.to_string()))?;
    }
    // Families verify independently; order of the output stays fixed.
    let reports: Vec<VerificationReport> = families
        .par_iter()
        .map(|family| verify_family(ring, family, args.max_n, args.oracle_max))
        .collect();
    let failures: usize = reports.iter().map(|r| r.failures().count()).sum();
    output::emit_reports(&reports, args.ring.to_string(), args.format);
    for report in &reports {
        for f in report.failures() {
            eprintln!(
                "FAIL {} {} n={} k={} expected={} actual={}",
                report.family,
                f.identity,
                f.n,
                f.k.map_or("-".to_string(), |k| k.to_string()),
                f.expected,
                f.actual
            );
        }
    }
    if failures > 0 {
        Err(CmdError::Failure(format!(
            "{failures} identity check(s) failed"
        )))
    } else {
        Ok(())
    }
}

fn bench_one<R: CommutativeRing>(
    ring: &R,
    ring_name: &str,
    family: &FamilySpec,
    order: usize,
    power: u64,
    rows: &mut Vec<BenchRow>,
) -> CmdResult {
    let rule = family
        .to_weights()
        .map_err(|e| CmdError::Usage(e.to_string()))?;
    let series = TruncatedSeries::from_weights(ring.clone(), &rule, order);

    let start = Instant::now();
    let (naive, naive_muls) = series.pow_naive_counted(power);
    let naive_ms = start.elapsed().as_secs_f64() * 1e3;

    let start = Instant::now();
    let (squared, square_muls) = series.pow_counted(power);
    let square_ms = start.elapsed().as_secs_f64() * 1e3;

    if naive != squared {
        return Err(CmdError::Failure(format!(
            "naive and squaring powers disagree (ring {ring_name}, order {order}, k {power})"
        )));
    }
    rows.push(BenchRow {
        ring: ring_name.to_string(),
        order,
        power,
        method: "naive".to_string(),
        mul_calls: naive_muls,
        millis: naive_ms,
    });
    rows.push(BenchRow {
        ring: ring_name.to_string(),
        order,
        power,
        method: "squaring".to_string(),
        mul_calls: square_muls,
        millis: square_ms,
    });
    Ok(())
}

pub fn bench(args: &BenchArgs) -> CmdResult {
    if args.modulus < 2 {
        return Err(CmdError::Usage(format!(
            "modulus must be at least 2, got {}",
            args.modulus
        )));
    }
    let mut rows = Vec::new();
    for &order in &args.orders {
        if order == 0 {
            return Err(CmdError::Usage("order must be at least 1".to_string()));
        }
        for &power in &args.powers {
            bench_one(&Integers, "int", &args.family, order, power, &mut rows)?;
            bench_one(
                &Modular::new(args.modulus),
                &format!("mod:{}", args.modulus),
                &args.family,
                order,
                power,
                &mut rows,
            )?;
        }
    }
    output::emit_bench(&args.family.to_string(), &rows, args.format);
    Ok(())
}
