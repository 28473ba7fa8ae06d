//! Scene and detection model shared by every stage of the pipeline.
//!
//! Values of these types are immutable once built and safe to share across
//! workers. The `synthref` companion crate constructs them from the
//! annotation and detection files and enforces the schema-level invariants
//! (id uniqueness, canonical sort orders, box non-negativity) while doing so.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

/// Axis-aligned box in pixel coordinates: left edge, top edge, width, height.
///
/// Coordinates are non-negative; a box with zero width or height is
/// degenerate and has area 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BBox {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl BBox {
    pub fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        Self { x, y, w, h }
    }

    pub fn area(&self) -> f64 {
        self.w * self.h
    }

    pub fn is_degenerate(&self) -> bool {
        self.w == 0.0 || self.h == 0.0
    }
}

/// One annotated object in one frame. `bbox` is `None` when the object is
/// not visible in that frame.
#[derive(Clone, Debug, PartialEq)]
pub struct ObjectInstance {
    pub object_id: i64,
    pub category: String,
    pub bbox: Option<BBox>,
}

/// All objects of one frame, sorted by `object_id`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameScene {
    pub video_id: i64,
    pub frame_index: u32,
    pub objects: Vec<ObjectInstance>,
}

impl FrameScene {
    /// Objects that are actually visible (have a box) in this frame.
    pub fn visible_objects(&self) -> impl Iterator<Item = &ObjectInstance> {
        self.objects.iter().filter(|o| o.bbox.is_some())
    }

    pub fn object(&self, object_id: i64) -> Option<&ObjectInstance> {
        self.objects.iter().find(|o| o.object_id == object_id)
    }

    /// Visible objects of the same category as `target`, excluding the
    /// target itself.
    pub fn same_class_others(&self, target: &ObjectInstance) -> Vec<&ObjectInstance> {
        self.visible_objects()
            .filter(|o| o.object_id != target.object_id && o.category == target.category)
            .collect()
    }
}

/// Whether an attribute name belongs to the configured color lexicon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttributeKind {
    Color,
    Other,
}

/// One predicted attribute of a detection, with its confidence in [0, 1].
/// `kind` is assigned at load time from the color lexicon.
#[derive(Clone, Debug, PartialEq)]
pub struct AttributePrediction {
    pub name: String,
    pub score: f64,
    pub kind: AttributeKind,
}

/// One detector output box with its predicted attributes.
///
/// Attributes are kept in canonical order: descending score, ties broken by
/// ascending name.
#[derive(Clone, Debug, PartialEq)]
pub struct Detection {
    pub bbox: BBox,
    pub class_label: String,
    pub score: f64,
    pub attributes: Vec<AttributePrediction>,
}

impl Detection {
    /// Builds a detection with its attributes sorted into canonical order.
    pub fn new(
        bbox: BBox,
        class_label: String,
        score: f64,
        mut attributes: Vec<AttributePrediction>,
    ) -> Self {
        attributes.sort_by(|a, b| b.score.total_cmp(&a.score).then_with(|| a.name.cmp(&b.name)));
        Self { bbox, class_label, score, attributes }
    }

    /// Score of the highest-scoring attribute named `name`, if present.
    pub fn attribute_score(&self, name: &str) -> Option<f64> {
        self.attributes.iter().find(|a| a.name == name).map(|a| a.score)
    }
}

/// Category table entry.
#[derive(Clone, Debug, PartialEq)]
pub struct Category {
    pub id: i64,
    pub name: String,
}

/// One annotated object of a video: the roster entry that survives even
/// in frames where the object is not visible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RosterObject {
    pub object_id: i64,
    pub category: String,
}

/// All frames of one video, sorted by frame index and covering
/// `0..frame_count` (frames without visible objects are present but empty).
/// Scenes list only the objects visible in them; `roster` is the full list
/// of objects annotated in the video, sorted by object id, so invisible
/// (object, frame) pairs stay countable and re-serializable.
#[derive(Clone, Debug, PartialEq)]
pub struct VideoScenes {
    pub video_id: i64,
    pub frame_count: u32,
    pub roster: Vec<RosterObject>,
    pub scenes: Vec<FrameScene>,
}

/// The parsed annotation corpus: category table plus per-video frame scenes,
/// videos sorted by id.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GroundTruth {
    pub categories: Vec<Category>,
    pub videos: Vec<VideoScenes>,
}

impl GroundTruth {
    /// Set of category names, the noun vocabulary of the expression grammar.
    pub fn category_table(&self) -> BTreeSet<String> {
        self.categories.iter().map(|c| c.name.clone()).collect()
    }

    pub fn video(&self, video_id: i64) -> Option<&VideoScenes> {
        self.videos.iter().find(|v| v.video_id == video_id)
    }

    /// Map from (video_id, object_id) to category name, over every
    /// annotated object whether or not it is ever visible.
    pub fn object_index(&self) -> BTreeMap<(i64, i64), String> {
        let mut index = BTreeMap::new();
        for video in &self.videos {
            for entry in &video.roster {
                index
                    .entry((video.video_id, entry.object_id))
                    .or_insert_with(|| entry.category.clone());
            }
        }
        index
    }
}
