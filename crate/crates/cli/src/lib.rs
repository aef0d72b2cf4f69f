//! Notation conversion shared by the `ncrook` binary and its tests.

use clap::ValueEnum;
use serde_json::Value;

use ncrook_core::{
    from_rgf, partition_to_rook, rook_to_partition, to_rgf, Rgf, RookPlacement, SetPartition,
};

/// Text notations the CLI reads and writes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Partition,
    Rgf,
    Rook,
}

pub fn parse_partition(text: &str) -> Result<SetPartition, String> {
    text.parse()
        .map_err(|e| format!("cannot parse partition {text:?}: {e}"))
}

pub fn parse_rook(text: &str) -> Result<RookPlacement, String> {
    text.parse()
        .map_err(|e| format!("cannot parse rook {text:?}: {e}"))
}

pub fn parse_as(text: &str, from: Format) -> Result<SetPartition, String> {
    match from {
        Format::Partition => parse_partition(text),
        Format::Rgf => text
            .parse::<Rgf>()
            .map(|r| from_rgf(&r))
            .map_err(|e| format!("cannot parse RGF {text:?}: {e}")),
        Format::Rook => parse_rook(text).map(|r| rook_to_partition(&r)),
    }
}

/// Canonical text and JSON renderings of `partition` in notation `to`.
pub fn render(partition: &SetPartition, to: Format) -> (String, Value) {
    match to {
        Format::Partition => (partition.to_string(), Value::String(partition.to_string())),
        Format::Rgf => {
            let r = to_rgf(partition).to_string();
            (r.clone(), Value::String(r))
        }
        Format::Rook => {
            let rook = partition_to_rook(partition);
            (
                rook.to_json(),
                serde_json::to_value(&rook).expect("rook serializes"),
            )
        }
    }
}

/// Text-mode conversion, as printed by `ncrook convert`.
pub fn convert(text: &str, from: Format, to: Format) -> Result<String, String> {
    parse_as(text, from).map(|p| render(&p, to).0)
}
