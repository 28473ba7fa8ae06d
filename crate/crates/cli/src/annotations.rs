//! Annotation file ingestion: a single JSON document listing videos,
//! categories, and per-video annotation records whose `bboxes` array is
//! aligned with the video's frames (`null` = not visible in that frame).
//!
//! Schema violations caught by the deserializer are parse errors (exit 2);
//! semantic rule violations on a well-formed document are validation
//! errors (exit 1).

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use synthref_core::{
    BBox, Category, FrameScene, GroundTruth, ObjectInstance, RosterObject, VideoScenes,
};

use crate::error::PipelineError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
pub enum BBoxFormat {
    #[serde(rename = "xywh")]
    XYWH,
    #[serde(rename = "xyxy")]
    XYXY,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct VideoDto {
    pub id: i64,
    pub frames: u32,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDto {
    pub id: i64,
    pub name: String,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AnnotationDto {
    pub video_id: i64,
    pub object_id: i64,
    pub category_id: i64,
    pub bboxes: Vec<Option<[f64; 4]>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AnnotationFile {
    pub videos: Vec<VideoDto>,
    pub categories: Vec<CategoryDto>,
    pub annotations: Vec<AnnotationDto>,
    pub bbox_format: BBoxFormat,
}

/// Category names double as grammar nouns: lowercase ASCII words
/// separated by single spaces.
fn is_category_name(name: &str) -> bool {
    !name.is_empty()
        && name.split(' ').all(|w| !w.is_empty() && w.bytes().all(|b| b.is_ascii_lowercase()))
}

fn convert_bbox(
    raw: [f64; 4],
    format: BBoxFormat,
    path: &Path,
    context: &str,
    object_id: i64,
) -> Result<BBox, PipelineError> {
    let [a, b, c, d] = raw;
    let (x, y, w, h) = match format {
        BBoxFormat::XYWH => (a, b, c, d),
        BBoxFormat::XYXY => (a, b, c - a, d - b),
    };
    if !(x >= 0.0 && y >= 0.0) {
        return Err(PipelineError::validation(
            path,
            context,
            format!("object {object_id}: box origin must be non-negative"),
        ));
    }
    if !(w >= 0.0 && h >= 0.0) {
        let what = match format {
            BBoxFormat::XYWH => "negative width or height",
            BBoxFormat::XYXY => "corner order implies negative width or height",
        };
        return Err(PipelineError::validation(
            path,
            context,
            format!("object {object_id}: {what}"),
        ));
    }
    Ok(BBox::new(x, y, w, h))
}

/// Validates a deserialized annotation file and builds the internal model:
/// videos sorted by id, one scene per frame, scenes holding only the
/// objects visible in them, sorted by object id.
pub fn build_ground_truth(
    file: &AnnotationFile,
    path: &Path,
) -> Result<GroundTruth, PipelineError> {
    let mut frame_counts: BTreeMap<i64, u32> = BTreeMap::new();
    for (i, video) in file.videos.iter().enumerate() {
        if frame_counts.insert(video.id, video.frames).is_some() {
            return Err(PipelineError::validation(
                path,
                format!("videos[{i}]"),
                format!("duplicate video id {}", video.id),
            ));
        }
    }

    let mut category_names: BTreeMap<i64, String> = BTreeMap::new();
    let mut seen_names: BTreeSet<&str> = BTreeSet::new();
    for (i, category) in file.categories.iter().enumerate() {
        if !is_category_name(&category.name) {
            return Err(PipelineError::validation(
                path,
                format!("categories[{i}]"),
                format!(
                    "category name must be lowercase words separated by single spaces, got {:?}",
                    category.name
                ),
            ));
        }
        if !seen_names.insert(&category.name) {
            return Err(PipelineError::validation(
                path,
                format!("categories[{i}]"),
                format!("duplicate category name {:?}", category.name),
            ));
        }
        if category_names.insert(category.id, category.name.clone()).is_some() {
            return Err(PipelineError::validation(
                path,
                format!("categories[{i}]"),
                format!("duplicate category id {}", category.id),
            ));
        }
    }

    // Per video: roster entries plus each object's per-frame boxes.
    type ObjectTrack = (RosterObject, Vec<Option<BBox>>);
    let mut per_video: BTreeMap<i64, Vec<ObjectTrack>> = BTreeMap::new();
    let mut seen_objects: BTreeSet<(i64, i64)> = BTreeSet::new();
    for (i, ann) in file.annotations.iter().enumerate() {
        let context = format!("annotations[{i}]");
        let Some(&frames) = frame_counts.get(&ann.video_id) else {
            return Err(PipelineError::validation(
                path,
                context,
                format!("unknown video id {}", ann.video_id),
            ));
        };
        let Some(category) = category_names.get(&ann.category_id) else {
            return Err(PipelineError::validation(
                path,
                context,
                format!("unknown category id {}", ann.category_id),
            ));
        };
        if !seen_objects.insert((ann.video_id, ann.object_id)) {
            return Err(PipelineError::validation(
                path,
                context,
                format!("duplicate object id {} in video {}", ann.object_id, ann.video_id),
            ));
        }
        if ann.bboxes.len() != frames as usize {
            return Err(PipelineError::validation(
                path,
                context,
                format!(
                    "object {}: bboxes has {} entries but video {} has {} frames",
                    ann.object_id,
                    ann.bboxes.len(),
                    ann.video_id,
                    frames
                ),
            ));
        }
        let mut boxes = Vec::with_capacity(ann.bboxes.len());
        for (k, raw) in ann.bboxes.iter().enumerate() {
            boxes.push(match raw {
                None => None,
                Some(values) => Some(convert_bbox(
                    *values,
                    file.bbox_format,
                    path,
                    &format!("{context}.bboxes[{k}]"),
                    ann.object_id,
                )?),
            });
        }
        let entry = RosterObject { object_id: ann.object_id, category: category.clone() };
        per_video.entry(ann.video_id).or_default().push((entry, boxes));
    }

    let mut categories: Vec<Category> = category_names
        .into_iter()
        .map(|(id, name)| Category { id, name })
        .collect();
    categories.sort_by_key(|c| c.id);

    let mut videos = Vec::with_capacity(file.videos.len());
    for (&video_id, &frame_count) in &frame_counts {
        let mut objects = per_video.remove(&video_id).unwrap_or_default();
        objects.sort_by_key(|(entry, _)| entry.object_id);
        let scenes = (0..frame_count)
            .map(|frame_index| {
                let visible = objects
                    .iter()
                    .filter_map(|(entry, boxes)| {
                        boxes[frame_index as usize].map(|bbox| ObjectInstance {
                            object_id: entry.object_id,
                            category: entry.category.clone(),
                            bbox: Some(bbox),
                        })
                    })
                    .collect();
                FrameScene { video_id, frame_index, objects: visible }
            })
            .collect();
        videos.push(VideoScenes {
            video_id,
            frame_count,
            roster: objects.into_iter().map(|(entry, _)| entry).collect(),
            scenes,
        });
    }
    Ok(GroundTruth { categories, videos })
}

/// Reads and validates an annotation file.
pub fn parse_annotations(path: &Path) -> Result<GroundTruth, PipelineError> {
    let text = std::fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    let file: AnnotationFile = serde_json::from_str(&text).map_err(|e| {
        PipelineError::parse(path, format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    build_ground_truth(&file, path)
}

/// Rebuilds the file form of a model, always in xywh box format. Parsing
/// the result yields the identical model.
pub fn serialize_annotations(gt: &GroundTruth) -> AnnotationFile {
    let category_ids: BTreeMap<&str, i64> =
        gt.categories.iter().map(|c| (c.name.as_str(), c.id)).collect();
    let mut annotations = Vec::new();
    for video in &gt.videos {
        for entry in &video.roster {
            let bboxes = video
                .scenes
                .iter()
                .map(|scene| {
                    scene
                        .object(entry.object_id)
                        .and_then(|o| o.bbox)
                        .map(|b| [b.x, b.y, b.w, b.h])
                })
                .collect();
            annotations.push(AnnotationDto {
                video_id: video.video_id,
                object_id: entry.object_id,
                category_id: category_ids.get(entry.category.as_str()).copied().unwrap_or(-1),
                bboxes,
            });
        }
    }
    AnnotationFile {
        videos: gt
            .videos
            .iter()
            .map(|v| VideoDto { id: v.video_id, frames: v.frame_count })
            .collect(),
        categories: gt
            .categories
            .iter()
            .map(|c| CategoryDto { id: c.id, name: c.name.clone() })
            .collect(),
        annotations,
        bbox_format: BBoxFormat::XYWH,
    }
}
