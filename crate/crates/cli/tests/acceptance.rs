//! Acceptance gate. Each criterion runs at its stated scale and time bound
//! and prints one PASS/FAIL line; the process fails if any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ncrook_cli::{convert, Format};
use ncrook_core::lincomb::Coeff;
use ncrook_core::verify::{
    verify_corner_rooks, verify_counts, verify_extendable_atomic, verify_free_factorization,
    verify_isomorphism, verify_power_sum_products,
};
use ncrook_core::{
    coarser_eq, enumerate_partitions, enumerate_rooks, expand_m, expand_p, from_rgf, is_extendable,
    mu_matrix, normalize, partition_to_rook, rook_to_partition, split, to_rgf, type_partition,
    zeta_matrix, NCMonomial, NCPolynomial, RookPlacement, SetPartition,
};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> SetPartition {
    s.parse().unwrap()
}

fn t2_table() -> Check {
    let rooks = [
        RookPlacement::new(2, []).unwrap(),
        RookPlacement::new(2, [(1, 1)]).unwrap(),
        RookPlacement::new(2, [(1, 2)]).unwrap(),
        RookPlacement::new(2, [(2, 2)]).unwrap(),
        RookPlacement::new(2, [(1, 1), (2, 2)]).unwrap(),
    ];
    let expected = ["1|2|3", "12|3", "13|2", "1|23", "123"];
    let partitions: Vec<String> = rooks
        .iter()
        .map(|r| rook_to_partition(r).to_string())
        .collect();
    ensure(partitions == expected, || {
        format!("partitions {partitions:?}")
    })?;
    let extendable: Vec<bool> = rooks.iter().map(|r| is_extendable(r).unwrap()).collect();
    ensure(extendable == [false, false, true, false, true], || {
        format!("extendable {extendable:?}")
    })?;
    let all: BTreeSet<_> = enumerate_rooks(2).into_iter().collect();
    ensure(all == rooks.iter().cloned().collect(), || {
        "T_2 has other rooks".into()
    })
}

fn extendable_is_atomic() -> Check {
    let report = verify_extendable_atomic(10).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?}", report.failures))?;
    // Π_1 … Π_10 in total
    ensure(
        report.checked == 1 + 2 + 5 + 15 + 52 + 203 + 877 + 4140 + 21147 + 115975,
        || format!("checked {}", report.checked),
    )?;
    // brute-force agreement on every rook, enumerated directly, for boards ≤ 5 (n ≤ 6)
    for board in 0..=5 {
        for r in enumerate_rooks(board) {
            ensure(
                is_extendable(&r).unwrap() == ncrook_core::is_extendable_bruteforce(&r).unwrap(),
                || format!("criterion disagrees with search on {r}"),
            )?;
        }
    }
    Ok(())
}

fn corner_rooks() -> Check {
    let report = verify_corner_rooks(6).map_err(|e| e.to_string())?;
    ensure(report.passed() && report.checked > 0, || {
        format!("{:?}", report.failures)
    })
}

/// Bell numbers from the Bell triangle.
fn bell_triangle(max_n: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    for _ in 1..=max_n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

fn count_identities() -> Check {
    let (table, report) = verify_counts(9).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?}", report.failures))?;
    let bells = bell_triangle(9);
    ensure(
        bells[1..] == [1, 2, 5, 15, 52, 203, 877, 4140, 21147],
        || format!("oracle {bells:?}"),
    )?;
    for row in &table.rows {
        ensure(row.bell == bells[row.n], || {
            format!("bell mismatch at n={}", row.n)
        })?;
    }
    let fixture: serde_json::Value =
        serde_json::from_str(include_str!("../../core/tests/fixtures/atomic_counts.json"))
            .map_err(|e| e.to_string())?;
    let frozen: Vec<u64> = fixture["atomic"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    let atomic: Vec<u64> = table.rows.iter().map(|r| r.atomic).collect();
    ensure(atomic == frozen, || {
        format!("atomic column {atomic:?} vs fixture {frozen:?}")
    })
}

fn worked_examples() -> Check {
    ensure(to_rgf(&p("124|36|5")).to_string() == "112132", || {
        "to_rgf".into()
    })?;
    ensure(
        split(&p("124|36|5"), &p("13|2")).to_string() == "12479|368|5",
        || "split".into(),
    )?;
    let x = NCMonomial::new(vec![3, 5, 2, 3, 3, 2]);
    ensure(type_partition(&x).to_string() == "145|2|36", || {
        "type partition".into()
    })?;
    let normalized = normalize(vec![vec![2, 4, 5, 9], vec![7, 8], vec![1, 3, 6]]).unwrap();
    ensure(normalized.to_string() == "136|2459|78", || {
        "normalize".into()
    })
}

fn power_sum_products() -> Check {
    let report = verify_power_sum_products(6).map_err(|e| e.to_string())?;
    ensure(report.passed() && report.checked > 0, || {
        format!("{:?}", report.failures)
    })
}

fn basis_relation() -> Check {
    for n in 1..=5 {
        let all = enumerate_partitions(n);
        for k in [n, n + 1] {
            for pi in &all {
                let mut sum = NCPolynomial::zero(k);
                for sigma in all.iter().filter(|s| coarser_eq(s, pi).unwrap()) {
                    sum.add_assign(&expand_m(sigma, k));
                }
                ensure(expand_p(pi, k) == sum, || format!("p[{pi}] at k={k}"))?;
            }
        }
    }
    for n in 1..=7 {
        let prod = zeta_matrix(n).multiply(&mu_matrix(n));
        for (i, row) in prod.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                ensure(c == Coeff::from(i == j), || {
                    format!("zeta*mu at n={n} ({i},{j})")
                })?;
            }
        }
    }
    Ok(())
}

fn isomorphism() -> Check {
    let report = verify_isomorphism(8).map_err(|e| e.to_string())?;
    ensure(report.passed() && report.checked > 0, || {
        format!("{:?}", report.failures)
    })
}

fn free_factorization() -> Check {
    let report = verify_free_factorization(8).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?}", report.failures))?;
    let nontrivial: u64 = 1 + 2 + 5 + 15 + 52 + 203 + 877 + 4140;
    ensure(report.checked == nontrivial, || {
        format!("checked {}", report.checked)
    })
}

fn round_trips() -> Check {
    const FORMATS: [Format; 3] = [Format::Partition, Format::Rgf, Format::Rook];
    for n in 0..=8 {
        for pi in enumerate_partitions(n) {
            ensure(rook_to_partition(&partition_to_rook(&pi)) == pi, || {
                format!("rook {pi}")
            })?;
            ensure(from_rgf(&to_rgf(&pi)) == pi, || format!("rgf {pi}"))?;
            for a in FORMATS {
                let canonical = convert(&pi.to_string(), Format::Partition, a)?;
                for b in FORMATS {
                    let there = convert(&canonical, a, b)?;
                    let back = convert(&there, b, a)?;
                    ensure(back == canonical, || format!("{a:?}->{b:?}->{a:?} on {pi}"))?;
                }
            }
        }
    }
    // the binary itself, twice per call to confirm byte stability
    let run = |value: &str, from: &str, to: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_ncrook"))
            .args(["convert", value, "--from", from, "--to", to])
            .output()
            .map_err(|e| e.to_string())?;
        let again = Command::new(env!("CARGO_BIN_EXE_ncrook"))
            .args(["convert", value, "--from", from, "--to", to])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success() && out.stdout == again.stdout, || {
            format!("unstable convert {value} {from}->{to}")
        })?;
        Ok(out.stdout)
    };
    let names = ["partition", "rgf", "rook"];
    let samples = (0..=4).flat_map(enumerate_partitions).chain(
        [
            "1|2|3|4|5|6|7|8|9|10",
            "1,3,10|2,4,5,6,7,8,9",
            "136|2459|78",
        ]
        .map(p),
    );
    for pi in samples {
        for (ai, a) in names.iter().enumerate() {
            let canonical = convert(&pi.to_string(), Format::Partition, FORMATS[ai])?;
            for b in names {
                let there = run(&canonical, a, b)?;
                let there = String::from_utf8(there).unwrap();
                let back = run(there.trim_end(), b, a)?;
                ensure(back == format!("{canonical}\n").into_bytes(), || {
                    format!("cli {a}->{b}->{a} on {pi}")
                })?;
            }
        }
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "Rooks on T_2 and their partitions",
            t2_table,
            Duration::from_millis(1),
        ),
        (
            "Extendable partitions are the atomic ones, n <= 10",
            extendable_is_atomic,
            Duration::from_secs(30),
        ),
        (
            "Rooks with a one at (1, n) are extendable, n <= 6",
            corner_rooks,
            Duration::from_secs(10),
        ),
        (
            "Bell, atomic, extendable and unsplitable counts, n <= 9",
            count_identities,
            Duration::MAX,
        ),
        ("Worked examples", worked_examples, Duration::MAX),
        (
            "Power sums multiply by slash product, size sum <= 6",
            power_sum_products,
            Duration::from_secs(60),
        ),
        (
            "Basis relation and zeta/mu inversion",
            basis_relation,
            Duration::from_secs(10),
        ),
        (
            "Isomorphism onto the rook algebra, size <= 8",
            isomorphism,
            Duration::from_secs(10),
        ),
        (
            "Free factorization, n <= 8",
            free_factorization,
            Duration::from_secs(30),
        ),
        (
            "Round trips and CLI convert stability",
            round_trips,
            Duration::MAX,
        ),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (took {elapsed:?}, limit {limit:?})"),
            Err(msg) => format!("FAIL ({msg})"),
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!("[{verdict}] {name} ({:.3}s)", elapsed.as_secs_f64());
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
