//! Per-frame expression generation.
//!
//! For every visible object in a frame, a fixed list of cue combinations is
//! composed into candidate expressions. A candidate is emitted only when
//! its rendered text parses back to the same tree and resolves to exactly
//! the target object. When no candidate survives, a class-only expression
//! is emitted with the `ambiguous` flag set, so every visible object always
//! receives at least one expression.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::cue::{extract_cues, CueConfig, CueKind};
use crate::expression::{compose, parse_expression, render, CueSelection};
use crate::model::{Detection, FrameScene, GroundTruth, ObjectInstance};
use crate::resolver::{resolve, Verdict};

/// Frame detections keyed by (video id, frame index).
pub type DetectionIndex = BTreeMap<(i64, u32), Vec<Detection>>;

/// One output record: an expression for one object in one frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedExpression {
    pub video_id: i64,
    pub frame_index: u32,
    pub object_id: i64,
    pub expression: String,
    /// Cue categories the expression draws on, canonical order.
    pub cues: Vec<CueKind>,
    /// True only for the class-only fallback that failed uniqueness.
    pub ambiguous: bool,
}

/// Aggregate counters over one generation run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenerationCounters {
    /// Total records emitted, fallbacks included.
    pub expressions: usize,
    /// Records emitted with the ambiguous flag.
    pub fallbacks: usize,
    /// (object, frame) pairs skipped because the object has no box there.
    pub frames_skipped: usize,
}

/// All records of a run in canonical order, plus counters.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GenerationReport {
    pub records: Vec<GeneratedExpression>,
    pub counters: GenerationCounters,
}

/// Word lists the parser needs: known class nouns and known color words.
/// Generation verifies each emitted string through the same parser a
/// consumer would use, so the vocabularies must be the consumer's.
#[derive(Clone, Copy)]
pub struct Vocabulary<'a> {
    pub categories: &'a BTreeSet<String>,
    pub colors: &'a BTreeSet<String>,
}

const fn sel(size: bool, location: bool, color: bool, attribute: bool) -> CueSelection {
    CueSelection { size, location, color, attribute }
}

/// Candidate cue combinations in emission order. The bare class expression
/// (first entry) is only attempted when the class is unique in the scene.
const CANDIDATE_SELECTIONS: [CueSelection; 9] = [
    sel(false, false, false, false),
    sel(true, false, false, false),
    sel(false, true, false, false),
    sel(false, false, true, false),
    sel(false, false, false, true),
    sel(false, false, true, true),
    sel(true, true, false, false),
    sel(true, false, true, false),
    sel(false, true, true, false),
];

/// Generates the expression set for one visible object.
///
/// Every emitted record with `ambiguous = false` is guaranteed to parse
/// back to its composed tree and to resolve to `{target}`; candidates
/// failing either check are dropped. Identical texts are emitted once.
pub fn generate_for_target(
    target: &ObjectInstance,
    scene: &FrameScene,
    frame_detections: &[Detection],
    cfg: &CueConfig,
    vocab: Vocabulary<'_>,
) -> Vec<GeneratedExpression> {
    let cues = extract_cues(target, scene, frame_detections, cfg);
    let mut records = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for (index, selection) in CANDIDATE_SELECTIONS.iter().enumerate() {
        if index == 0 && !cues.class_unique {
            continue;
        }
        let Some(ast) = compose(&cues, *selection) else {
            continue;
        };
        let text = render(&ast);
        if seen.contains(&text) {
            continue;
        }
        let Ok(parsed) = parse_expression(&text, vocab.categories, vocab.colors) else {
            continue;
        };
        if parsed != ast {
            // A cue word collided with the grammar (say, an attribute named
            // like a size form); the text would mislead a consumer.
            continue;
        }
        let resolution = resolve(&parsed, scene, frame_detections, cfg);
        if resolution.verdict == Verdict::Unique && resolution.matches == [target.object_id] {
            seen.insert(text.clone());
            records.push(GeneratedExpression {
                video_id: scene.video_id,
                frame_index: scene.frame_index,
                object_id: target.object_id,
                expression: text,
                cues: parsed.cue_kinds(),
                ambiguous: false,
            });
        }
    }
    if records.is_empty() {
        let ast = compose(&cues, CueSelection::CLASS_ONLY)
            .expect("class-only composition needs no optional cue");
        records.push(GeneratedExpression {
            video_id: scene.video_id,
            frame_index: scene.frame_index,
            object_id: target.object_id,
            expression: render(&ast),
            cues: ast.cue_kinds(),
            ambiguous: true,
        });
    }
    records
}

/// Generates records for every visible object of a frame, in object id
/// order.
pub fn generate_for_frame(
    scene: &FrameScene,
    frame_detections: &[Detection],
    cfg: &CueConfig,
    vocab: Vocabulary<'_>,
) -> Vec<GeneratedExpression> {
    let mut targets: Vec<&ObjectInstance> = scene.visible_objects().collect();
    targets.sort_by_key(|o| o.object_id);
    let mut records = Vec::new();
    for target in targets {
        records.extend(generate_for_target(target, scene, frame_detections, cfg, vocab));
    }
    records
}

/// All frames of the corpus in canonical (video id, frame index) order.
/// Drivers that process frames concurrently must emit results in this
/// order for output to stay byte-identical across worker counts.
pub fn canonical_frames(gt: &GroundTruth) -> Vec<&FrameScene> {
    let mut frames: Vec<&FrameScene> =
        gt.videos.iter().flat_map(|v| v.scenes.iter()).collect();
    frames.sort_by_key(|f| (f.video_id, f.frame_index));
    frames
}

/// Assembles per-frame record groups (aligned with `canonical_frames(gt)`)
/// into a report with counters. Shared by the sequential and the
/// multi-threaded drivers so both produce identical reports.
pub fn build_report(
    gt: &GroundTruth,
    per_frame: Vec<Vec<GeneratedExpression>>,
) -> GenerationReport {
    let mut counters = GenerationCounters::default();
    for video in &gt.videos {
        let roster = video.roster.len();
        for scene in &video.scenes {
            counters.frames_skipped +=
                roster.saturating_sub(scene.visible_objects().count());
        }
    }
    let mut records = Vec::new();
    for group in per_frame {
        records.extend(group);
    }
    counters.expressions = records.len();
    counters.fallbacks = records.iter().filter(|r| r.ambiguous).count();
    GenerationReport { records, counters }
}

/// Sequential end-to-end generation over a whole corpus. Frames without a
/// detection record proceed with an empty detection list.
pub fn generate_dataset(
    gt: &GroundTruth,
    detections: &DetectionIndex,
    cfg: &CueConfig,
    colors: &BTreeSet<String>,
) -> GenerationReport {
    let categories = gt.category_table();
    let vocab = Vocabulary { categories: &categories, colors };
    let frames = canonical_frames(gt);
    let per_frame: Vec<Vec<GeneratedExpression>> = frames
        .iter()
        .map(|scene| {
            let dets = detections
                .get(&(scene.video_id, scene.frame_index))
                .map(Vec::as_slice)
                .unwrap_or(&[]);
            generate_for_frame(scene, dets, cfg, vocab)
        })
        .collect();
    build_report(gt, per_frame)
}
