//! Exhaustive verification suites. Each suite walks every instance in its
//! range, collects up to [`FAILURE_CAP`] counterexamples in canonical text
//! form, and never stops early.
//!
//! The empty ground set is excluded from every partition-indexed suite: the
//! trivial partition is neither atomic nor unsplitable, and `T_{-1}` carries
//! no permutation matrices.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::VerifyError;
use crate::ncsym::{expand_p, multiply_nc, product_p, rook_image, Basis, NCSymElement};
use crate::partition::{
    atomic_factor, enumerate_partitions, is_atomic, is_rgf_word, is_unsplitable, slash, split,
    unsplitable_factor, Partitions, SetPartition,
};
use crate::rook::{
    edsum, edsum_factor, enumerate_rooks, extend, is_extendable, is_extendable_bruteforce,
    partition_to_rook, rook_product, rook_to_partition, slash_decompositions, RookPlacement,
};

pub const FAILURE_CAP: usize = 100;

/// Largest board on which suites consult the factorial extendability oracle.
pub const BRUTEFORCE_MAX_BOARD: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_range: [usize; 2],
    pub checked: u64,
    pub failures: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

struct Run {
    suite: &'static str,
    range: [usize; 2],
    checked: u64,
    failures: Vec<String>,
    started: Instant,
}

impl Run {
    fn start(suite: &'static str, lo: usize, hi: usize) -> Self {
        Self {
            suite,
            range: [lo, hi],
            checked: 0,
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < FAILURE_CAP {
            self.failures.push(describe());
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite.to_string(),
            n_range: self.range,
            checked: self.checked,
            failures: self.failures,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn bounded(suite: &'static str, got: usize, min: usize, max: usize) -> Result<(), VerifyError> {
    if (min..=max).contains(&got) {
        Ok(())
    } else {
        Err(VerifyError::OutOfRange {
            suite,
            min,
            max,
            got,
        })
    }
}

/// Extendable partitions coincide with atomic ones, for `1 ≤ n ≤ max_n`.
///
/// Each instance also checks that a successful [`extend`] agrees with the
/// rook on its board and adds exactly as many ones as there are zero rows,
/// and, for boards up to [`BRUTEFORCE_MAX_BOARD`], that the linear-time
/// criterion matches exhaustive search.
pub fn verify_extendable_atomic(max_n: usize) -> Result<VerificationReport, VerifyError> {
    bounded("thm1", max_n, 1, 12)?;
    let mut run = Run::start("thm1", 1, max_n);
    for n in 1..=max_n {
        for pi in Partitions::new(n) {
            let rook = partition_to_rook(&pi);
            let extendable = is_extendable(&rook).expect("board is nonnegative");
            let atomic = is_atomic(&pi);
            let oracle = (n - 1 <= BRUTEFORCE_MAX_BOARD)
                .then(|| is_extendable_bruteforce(&rook).expect("small board"));
            let extension_ok = match extend(&rook) {
                Ok(perm) => {
                    let added = perm
                        .column_of()
                        .iter()
                        .enumerate()
                        .filter(|&(r, &c)| c < r + 1)
                        .count();
                    perm.agrees_on_board(&rook) && added == n - 1 - rook.num_ones()
                }
                Err(_) => !extendable,
            };
            run.check(
                extendable == atomic && oracle.is_none_or(|o| o == extendable) && extension_ok,
                || {
                    format!(
                        "{pi}: extendable={extendable} atomic={atomic} bruteforce={oracle:?} extension_ok={extension_ok}"
                    )
                },
            );
        }
    }
    Ok(run.finish())
}

/// Every rook on `T_n` with a one at `(1, n)` is extendable, `1 ≤ n ≤ max_board`.
/// Rooks are enumerated directly, not through partitions.
pub fn verify_corner_rooks(max_board: usize) -> Result<VerificationReport, VerifyError> {
    bounded("corollary", max_board, 1, 8)?;
    let mut run = Run::start("corollary", 1, max_board);
    for board in 1..=max_board {
        for rook in enumerate_rooks(board)
            .into_iter()
            .filter(|r| r.contains(1, board))
        {
            let extendable = is_extendable(&rook).expect("board is nonnegative");
            let oracle = (board <= BRUTEFORCE_MAX_BOARD)
                .then(|| is_extendable_bruteforce(&rook).expect("small board"));
            let atomic = is_atomic(&rook_to_partition(&rook));
            run.check(extendable && atomic && oracle != Some(false), || {
                format!("{rook}: extendable={extendable} atomic={atomic} bruteforce={oracle:?}")
            });
        }
    }
    Ok(run.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub bell: u64,
    pub atomic: u64,
    pub extendable: u64,
    pub unsplitable: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    /// Both column identities hold on every row.
    pub fn consistent(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.atomic == r.extendable && r.atomic == r.unsplitable)
    }

    pub fn row(&self, n: usize) -> Option<&CountRow> {
        self.rows.iter().find(|r| r.n == n)
    }
}

/// Exact counts of `Π_n`, atomic, extendable and unsplitable partitions for
/// `1 ≤ n ≤ max_n`.
pub fn count_table(max_n: usize) -> Result<CountTable, VerifyError> {
    bounded("counts", max_n, 1, 12)?;
    let rows = (1..=max_n)
        .map(|n| {
            let mut row = CountRow {
                n,
                bell: 0,
                atomic: 0,
                extendable: 0,
                unsplitable: 0,
            };
            for pi in Partitions::new(n) {
                row.bell += 1;
                row.atomic += u64::from(is_atomic(&pi));
                row.unsplitable += u64::from(is_unsplitable(&pi));
                row.extendable +=
                    u64::from(is_extendable(&partition_to_rook(&pi)).expect("n >= 1"));
            }
            row
        })
        .collect();
    Ok(CountTable { rows })
}

/// [`count_table`] plus a report flagging any row where the atomic,
/// extendable and unsplitable columns disagree.
pub fn verify_counts(max_n: usize) -> Result<(CountTable, VerificationReport), VerifyError> {
    let mut run = Run::start("counts", 1, max_n);
    let table = count_table(max_n)?;
    for row in &table.rows {
        run.check(
            row.atomic == row.extendable && row.atomic == row.unsplitable,
            || {
                format!(
                    "n={}: atomic={} extendable={} unsplitable={}",
                    row.n, row.atomic, row.extendable, row.unsplitable
                )
            },
        );
    }
    Ok((table, run.finish()))
}

/// `p_π · p_σ = p_{π|σ}` as truncated polynomials in `k = |π| + |σ|`
/// variables, for all pairs with `1 ≤ |π| + |σ| ≤ max_total_degree`.
pub fn verify_power_sum_products(
    max_total_degree: usize,
) -> Result<VerificationReport, VerifyError> {
    bounded("eq2", max_total_degree, 2, 7)?;
    let mut run = Run::start("eq2", 1, max_total_degree);
    let by_size: Vec<Vec<SetPartition>> =
        (0..=max_total_degree).map(enumerate_partitions).collect();
    for k in 1..=max_total_degree {
        let expansions: Vec<Vec<_>> = by_size[..=k]
            .iter()
            .map(|ps| ps.iter().map(|p| expand_p(p, k)).collect())
            .collect();
        for a in 0..=k {
            let b = k - a;
            for (pi, f) in by_size[a].iter().zip(&expansions[a]) {
                for (sigma, g) in by_size[b].iter().zip(&expansions[b]) {
                    let lhs = multiply_nc(f, g).expect("same variable count");
                    let rhs = expand_p(&slash(pi, sigma), k);
                    run.check(lhs == rhs, || format!("({pi}, {sigma}) at k={k}"));
                }
            }
        }
    }
    Ok(run.finish())
}

/// `p_π ↦ R_π` intertwines the products on all basis pairs with
/// `|π| + |σ| ≤ max_size`, and maps each `{p_π : π ∈ Π_n}` bijectively onto
/// the rooks on `T_{n-1}`.
pub fn verify_isomorphism(max_size: usize) -> Result<VerificationReport, VerifyError> {
    bounded("iso", max_size, 2, 8)?;
    let mut run = Run::start("iso", 0, max_size);
    let by_size: Vec<Vec<SetPartition>> = (0..=max_size).map(enumerate_partitions).collect();
    let basis = |p: &SetPartition| NCSymElement::basis_element(Basis::P, p.clone());

    for (n, partitions) in by_size.iter().enumerate() {
        let images: Vec<RookPlacement> = partitions
            .iter()
            .map(|p| {
                let image = rook_image(&basis(p)).expect("p basis");
                let (rook, coeff) = image.iter().next().expect("nonzero image");
                assert_eq!(*coeff, 1);
                rook.clone()
            })
            .collect();
        let distinct: BTreeSet<_> = images.iter().cloned().collect();
        let expected: BTreeSet<_> = if n == 0 {
            BTreeSet::from([RookPlacement::unit()])
        } else {
            enumerate_rooks(n - 1).into_iter().collect()
        };
        run.check(
            distinct.len() == partitions.len() && distinct == expected,
            || {
                format!(
                    "degree {n}: images are not a bijection onto rooks on T_{}",
                    n as i64 - 1
                )
            },
        );
        for (p, r) in partitions.iter().zip(&images) {
            run.check(rook_to_partition(r) == *p, || {
                format!("{p}: image {r} does not invert")
            });
        }
    }

    for a in 0..=max_size {
        for b in 0..=max_size - a {
            for pi in &by_size[a] {
                for sigma in &by_size[b] {
                    let (u, v) = (basis(pi), basis(sigma));
                    let lhs = rook_image(&product_p(&u, &v).expect("p basis")).expect("p basis");
                    let rhs = rook_product(
                        &rook_image(&u).expect("p basis"),
                        &rook_image(&v).expect("p basis"),
                    );
                    run.check(lhs == rhs, || format!("({pi}, {sigma})"));
                }
            }
        }
    }
    Ok(run.finish())
}

/// Every factorization of `pi` into atomic slash factors, found by trying
/// every cut position.
pub fn slash_factorizations(pi: &SetPartition) -> Vec<Vec<SetPartition>> {
    fn go(
        pi: &SetPartition,
        lo: usize,
        prefix: &mut Vec<SetPartition>,
        out: &mut Vec<Vec<SetPartition>>,
    ) {
        if lo > pi.n() {
            out.push(prefix.clone());
            return;
        }
        for hi in lo..=pi.n() {
            if let Some(factor) = pi.segment(lo, hi).filter(is_atomic) {
                prefix.push(factor);
                go(pi, hi + 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if !pi.is_trivial() {
        go(pi, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// Every factorization of `pi` into unsplitable split factors, found by
/// trying every cut position of its RGF.
pub fn split_factorizations(pi: &SetPartition) -> Vec<Vec<SetPartition>> {
    fn go(
        word: &[usize],
        lo: usize,
        prefix: &mut Vec<SetPartition>,
        out: &mut Vec<Vec<SetPartition>>,
    ) {
        if lo == word.len() {
            out.push(prefix.clone());
            return;
        }
        for hi in lo + 1..=word.len() {
            let piece = &word[lo..hi];
            if !is_rgf_word(piece) {
                continue;
            }
            let factor = SetPartition::from_word(piece.to_vec());
            if is_unsplitable(&factor) {
                prefix.push(factor);
                go(word, hi, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if !pi.is_trivial() {
        go(pi.rgf_word(), 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Unique factorization into atomic partitions (under slash, and mirrored in
/// the power-sum basis and the rook algebra) and into unsplitable partitions
/// (under split), for every nontrivial `π` with `n ≤ max_n`.
pub fn verify_free_factorization(max_n: usize) -> Result<VerificationReport, VerifyError> {
    bounded("factorization", max_n, 1, 9)?;
    let mut run = Run::start("factorization", 1, max_n);
    for n in 1..=max_n {
        for pi in Partitions::new(n) {
            let atoms = atomic_factor(&pi).expect("nontrivial");
            let atomic_ok = atoms.iter().all(is_atomic)
                && atoms
                    .iter()
                    .fold(SetPartition::trivial(), |acc, f| slash(&acc, f))
                    == pi;
            let atomic_unique = slash_factorizations(&pi) == [atoms.clone()];

            let pieces = unsplitable_factor(&pi).expect("nontrivial");
            let split_ok = pieces.iter().all(is_unsplitable)
                && pieces
                    .iter()
                    .fold(SetPartition::trivial(), |acc, f| split(&acc, f))
                    == pi;
            let split_unique = split_factorizations(&pi) == [pieces.clone()];

            let p_fold = atoms.iter().fold(NCSymElement::one(Basis::P), |acc, f| {
                product_p(&acc, &NCSymElement::basis_element(Basis::P, f.clone())).expect("p basis")
            });
            let p_ok = p_fold == NCSymElement::basis_element(Basis::P, pi.clone());

            let rook = partition_to_rook(&pi);
            let rook_atoms = edsum_factor(&rook);
            let rook_ok = rook_atoms == atoms.iter().map(partition_to_rook).collect::<Vec<_>>()
                && rook_atoms
                    .iter()
                    .all(|r| slash_decompositions(r).is_empty())
                && rook_atoms
                    .iter()
                    .fold(RookPlacement::unit(), |acc, r| edsum(&acc, r))
                    == rook;

            run.check(
                atomic_ok && atomic_unique && split_ok && split_unique && p_ok && rook_ok,
                || {
                    format!(
                        "{pi}: atomic_ok={atomic_ok} atomic_unique={atomic_unique} split_ok={split_ok} \
                         split_unique={split_unique} p_ok={p_ok} rook_ok={rook_ok}"
                    )
                },
            );
        }
    }
    Ok(run.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn extendable_atomic_small() {
        let report = verify_extendable_atomic(3).unwrap();
        assert!(report.passed());
        assert_eq!(report.checked, 1 + 2 + 5);
        assert_eq!(report.n_range, [1, 3]);
        let atomic: Vec<String> = enumerate_partitions(3)
            .into_iter()
            .filter(is_atomic)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(atomic, ["123", "13|2"]);

        let one = verify_extendable_atomic(1).unwrap();
        assert_eq!(one.checked, 1);
        assert!(one.passed());
    }

    #[test]
    fn corner_rooks_small() {
        let r = verify_corner_rooks(1).unwrap();
        assert_eq!(r.checked, 1);
        assert!(r.passed());
        // on T_2 only R_{13|2} has a one at (1, 2)
        let r = verify_corner_rooks(2).unwrap();
        assert_eq!(r.checked, 2);
        assert!(r.passed());
    }

    #[test]
    fn counts_small() {
        let table = count_table(5).unwrap();
        let row3 = table.row(3).unwrap();
        assert_eq!(
            (row3.bell, row3.atomic, row3.extendable, row3.unsplitable),
            (5, 2, 2, 2)
        );
        let row1 = table.row(1).unwrap();
        assert_eq!(
            (row1.bell, row1.atomic, row1.extendable, row1.unsplitable),
            (1, 1, 1, 1)
        );
        let row5 = table.row(5).unwrap();
        assert_eq!((row5.bell, row5.atomic), (52, 22));
        assert!(table.consistent());
    }

    #[test]
    fn factorization_search() {
        assert_eq!(
            slash_factorizations(&p("1|2|3")),
            [vec![p("1"), p("1"), p("1")]]
        );
        assert_eq!(split_factorizations(&p("1|2|3")), [vec![p("1|2|3")]]);
        assert_eq!(slash_factorizations(&p("1")), [vec![p("1")]]);
        assert_eq!(split_factorizations(&p("1")), [vec![p("1")]]);
        assert!(slash_factorizations(&SetPartition::trivial()).is_empty());
        assert!(verify_free_factorization(4).unwrap().passed());
    }

    #[test]
    fn eq2_and_iso_small() {
        let r = verify_power_sum_products(2).unwrap();
        assert!(r.passed());
        // pairs with sizes summing to 1 or 2: (0,1),(1,0),(0,2)x2,(1,1),(2,0)x2
        assert_eq!(r.checked, 2 + 5);
        assert!(verify_isomorphism(4).unwrap().passed());
    }

    #[test]
    fn range_checks() {
        assert!(matches!(
            verify_extendable_atomic(0),
            Err(VerifyError::OutOfRange { suite: "thm1", .. })
        ));
        assert!(verify_extendable_atomic(13).is_err());
        assert!(verify_corner_rooks(9).is_err());
        assert!(verify_power_sum_products(1).is_err());
        assert!(verify_power_sum_products(8).is_err());
        assert!(verify_isomorphism(9).is_err());
        assert!(verify_free_factorization(10).is_err());
        assert!(count_table(0).is_err());
    }

    #[test]
    fn report_json_shape() {
        let mut report = verify_extendable_atomic(2).unwrap();
        report.elapsed_ms = 0;
        assert_eq!(
            report.to_json(),
            r#"{"suite":"thm1","n_range":[1,2],"checked":3,"failures":[],"elapsed_ms":0}"#
        );
    }
}
