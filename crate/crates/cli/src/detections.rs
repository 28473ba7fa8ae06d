//! Detection sidecar ingestion: JSON Lines, one record per (video, frame),
//! carrying externally predicted boxes, class labels, scores and
//! attributes. Attribute kind (color vs other) is assigned here from the
//! color lexicon.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use synthref_core::{AttributeKind, AttributePrediction, BBox, Detection, DetectionIndex};

use crate::error::PipelineError;
use crate::lexicon::is_grammar_word;

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AttributeDto {
    pub name: String,
    pub score: f64,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct DetectionDto {
    pub bbox: [f64; 4],
    pub class: String,
    pub score: f64,
    pub attributes: Vec<AttributeDto>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FrameRecordDto {
    pub video_id: i64,
    pub frame_index: u32,
    pub detections: Vec<DetectionDto>,
}

fn unit_score(
    value: f64,
    what: &str,
    path: &Path,
    context: &str,
) -> Result<f64, PipelineError> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(PipelineError::validation(
            path,
            context,
            format!("{what} score {value} outside [0, 1]"),
        ))
    }
}

/// Parses the sidecar. Records referencing frames absent from the
/// annotations are retained (they are simply never looked up); duplicate
/// (video, frame) records are rejected.
pub fn parse_detections(
    path: &Path,
    colors: &BTreeSet<String>,
) -> Result<DetectionIndex, PipelineError> {
    let text = std::fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    let mut index = DetectionIndex::new();
    for (number, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let context = format!("line {}", number + 1);
        let record: FrameRecordDto = serde_json::from_str(line)
            .map_err(|e| PipelineError::parse(path, &context, e.to_string()))?;
        let mut detections = Vec::with_capacity(record.detections.len());
        for dto in record.detections {
            let [x, y, w, h] = dto.bbox;
            if !(x >= 0.0 && y >= 0.0 && w >= 0.0 && h >= 0.0) {
                return Err(PipelineError::validation(
                    path,
                    &context,
                    "detection bbox must have non-negative origin and extent",
                ));
            }
            unit_score(dto.score, "detection", path, &context)?;
            let mut attributes = Vec::with_capacity(dto.attributes.len());
            for attr in dto.attributes {
                if !is_grammar_word(&attr.name) {
                    return Err(PipelineError::validation(
                        path,
                        &context,
                        format!(
                            "attribute name must be a single lowercase word, got {:?}",
                            attr.name
                        ),
                    ));
                }
                unit_score(attr.score, "attribute", path, &context)?;
                let kind = if colors.contains(&attr.name) {
                    AttributeKind::Color
                } else {
                    AttributeKind::Other
                };
                attributes.push(AttributePrediction { name: attr.name, score: attr.score, kind });
            }
            detections.push(Detection::new(BBox::new(x, y, w, h), dto.class, dto.score, attributes));
        }
        let key = (record.video_id, record.frame_index);
        if index.insert(key, detections).is_some() {
            return Err(PipelineError::validation(
                path,
                &context,
                format!(
                    "duplicate detection record for video {} frame {}",
                    record.video_id, record.frame_index
                ),
            ));
        }
    }
    Ok(index)
}
