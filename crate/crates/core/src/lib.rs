//! Core logic for generating and resolving synthetic referring expressions
//! over annotated video frames.
//!
//! Everything in this crate is pure computation on in-memory values: scene
//! and detection models, bounding-box geometry, the four disambiguation cues
//! (class, relative size, relative location, attributes), a small expression
//! grammar with a deterministic renderer and parser, a resolver that maps an
//! expression back to the objects it denotes, and the per-frame generator
//! that ties them together. File formats, configuration and the command-line
//! driver live in the companion `synthref` crate.
//!
//! The crate is `no_std` (alloc required) and has no dependencies.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cue;
pub mod expression;
pub mod generator;
pub mod geometry;
pub mod model;
pub mod resolver;
pub mod stats;

pub use cue::{
    attribute_cues, extract_cues, location_cue, match_detection, size_cue, ColorCue, ConfigError,
    CueConfig, CueKind, CueSet, LocationPhrase, SizeDirection, SizeForm,
};
pub use expression::{
    compose, parse_expression, render, Article, CueSelection, ExpressionAst, ParseError,
};
pub use generator::{
    build_report, canonical_frames, generate_dataset, generate_for_frame, generate_for_target,
    DetectionIndex, GeneratedExpression, GenerationCounters, GenerationReport, Vocabulary,
};
pub use geometry::{iou, most_separative_axis, separability, Axis, AxisSeparation, IntervalOrder};
pub use model::{
    AttributeKind, AttributePrediction, BBox, Category, Detection, FrameScene, GroundTruth,
    ObjectInstance, RosterObject, VideoScenes,
};
pub use resolver::{resolve, Resolution, Verdict};
pub use stats::{compute_stats, DatasetStats, StatsError};
