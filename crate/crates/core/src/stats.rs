//! Aggregate statistics over a generated expression dataset.

use alloc::collections::{BTreeMap, BTreeSet};

use crate::generator::GeneratedExpression;
use crate::model::GroundTruth;

/// Corpus-level aggregates. Counts cover only what the records reference,
/// so an empty dataset reports zeros everywhere.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DatasetStats {
    /// Distinct videos referenced by the records.
    pub videos: usize,
    /// Distinct (video, object) pairs referenced.
    pub objects: usize,
    /// Distinct categories of the referenced objects.
    pub categories: usize,
    /// Total expression records.
    pub expressions: usize,
    /// Mean number of unique expression texts per object, pooled across
    /// all frames of the object.
    pub expressions_per_object: f64,
    /// Mean whitespace-token count per record.
    pub words_per_expression: f64,
}

/// A record referenced an object the annotations do not know.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StatsError {
    pub video_id: i64,
    pub object_id: i64,
}

impl core::fmt::Display for StatsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "expression record references unknown object {} in video {}",
            self.object_id, self.video_id
        )
    }
}

impl core::error::Error for StatsError {}

/// Computes [`DatasetStats`] for `records`, validating every record
/// against the annotation corpus.
pub fn compute_stats(
    records: &[GeneratedExpression],
    gt: &GroundTruth,
) -> Result<DatasetStats, StatsError> {
    let index = gt.object_index();
    let mut videos: BTreeSet<i64> = BTreeSet::new();
    let mut categories: BTreeSet<&str> = BTreeSet::new();
    let mut per_object: BTreeMap<(i64, i64), BTreeSet<&str>> = BTreeMap::new();
    let mut total_words = 0usize;

    for record in records {
        let key = (record.video_id, record.object_id);
        let Some(category) = index.get(&key) else {
            return Err(StatsError { video_id: record.video_id, object_id: record.object_id });
        };
        videos.insert(record.video_id);
        categories.insert(category.as_str());
        per_object.entry(key).or_default().insert(record.expression.as_str());
        total_words += record.expression.split_whitespace().count();
    }

    let objects = per_object.len();
    let distinct_texts: usize = per_object.values().map(BTreeSet::len).sum();
    let expressions = records.len();
    Ok(DatasetStats {
        videos: videos.len(),
        objects,
        categories: categories.len(),
        expressions,
        expressions_per_object: if objects == 0 {
            0.0
        } else {
            distinct_texts as f64 / objects as f64
        },
        words_per_expression: if expressions == 0 {
            0.0
        } else {
            total_words as f64 / expressions as f64
        },
    })
}
