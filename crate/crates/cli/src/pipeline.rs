//! Multi-threaded generation driver. Frames are independent work units;
//! workers pull frame indexes from a shared counter and results are
//! reassembled in canonical frame order, so output is byte-identical for
//! any worker count.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use synthref_core::{
    build_report, canonical_frames, generate_for_frame, CueConfig, DetectionIndex,
    GeneratedExpression, GenerationReport, GroundTruth, Vocabulary,
};

use crate::error::PipelineError;

pub const THREADS_ENV_VAR: &str = "SYNTHREF_THREADS";

/// Reads the worker cap from the environment. Absent means 0, which in
/// turn means "pick automatically".
pub fn thread_count_from_env() -> Result<usize, PipelineError> {
    match std::env::var(THREADS_ENV_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(std::env::VarError::NotUnicode(_)) => Err(PipelineError::validation(
            THREADS_ENV_VAR,
            "environment",
            "value is not valid unicode",
        )),
        Ok(value) => value.trim().parse::<usize>().map_err(|_| {
            PipelineError::validation(
                THREADS_ENV_VAR,
                "environment",
                format!("expected a non-negative integer worker count, got {value:?}"),
            )
        }),
    }
}

/// Maps the requested cap (0 = auto) to an actual worker count, never more
/// than there are frames and never less than one.
pub fn effective_workers(requested: usize, frames: usize) -> usize {
    let auto = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let wanted = if requested == 0 { auto } else { requested };
    wanted.clamp(1, frames.max(1))
}

/// Generates the full report using up to `requested` worker threads
/// (0 = auto). The result is identical to the sequential
/// `generate_dataset` for every worker count.
pub fn generate_parallel(
    gt: &GroundTruth,
    detections: &DetectionIndex,
    cfg: &CueConfig,
    colors: &BTreeSet<String>,
    requested: usize,
) -> GenerationReport {
    let categories = gt.category_table();
    let vocab = Vocabulary { categories: &categories, colors };
    let frames = canonical_frames(gt);
    let workers = effective_workers(requested, frames.len());

    let mut slots: Vec<Option<Vec<GeneratedExpression>>> = Vec::new();
    slots.resize_with(frames.len(), || None);
    let next = AtomicUsize::new(0);

    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut produced = Vec::new();
                    loop {
                        let index = next.fetch_add(1, Ordering::Relaxed);
                        let Some(scene) = frames.get(index) else {
                            break;
                        };
                        let frame_detections = detections
                            .get(&(scene.video_id, scene.frame_index))
                            .map(Vec::as_slice)
                            .unwrap_or(&[]);
                        produced.push((
                            index,
                            generate_for_frame(scene, frame_detections, cfg, vocab),
                        ));
                    }
                    produced
                })
            })
            .collect();
        for handle in handles {
            for (index, records) in handle.join().expect("generation worker panicked") {
                slots[index] = Some(records);
            }
        }
    });

    let per_frame = slots
        .into_iter()
        .map(|slot| slot.expect("every frame index was claimed by a worker"))
        .collect();
    build_report(gt, per_frame)
}
