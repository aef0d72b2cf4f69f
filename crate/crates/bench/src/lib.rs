//! Benchmark inputs shared by the criterion targets in `benches/`.

use ncrook_core::{enumerate_partitions, SetPartition};

/// All partitions of sizes `1..=max_n`, concatenated.
pub fn partitions_up_to(max_n: usize) -> Vec<SetPartition> {
    (1..=max_n).flat_map(enumerate_partitions).collect()
}
