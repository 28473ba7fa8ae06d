//! The tool's own output format: JSON Lines, one record per generated
//! expression, plus a reader so downstream commands can consume it.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use synthref_core::{CueKind, GeneratedExpression};

use crate::error::PipelineError;

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RecordDto {
    pub video_id: i64,
    pub frame_index: u32,
    pub object_id: i64,
    pub expression: String,
    pub cues: Vec<String>,
    pub ambiguous: bool,
}

impl From<&GeneratedExpression> for RecordDto {
    fn from(record: &GeneratedExpression) -> Self {
        RecordDto {
            video_id: record.video_id,
            frame_index: record.frame_index,
            object_id: record.object_id,
            expression: record.expression.clone(),
            cues: record.cues.iter().map(|c| c.as_str().to_string()).collect(),
            ambiguous: record.ambiguous,
        }
    }
}

/// One compact JSON line per record, in the order given. Output bytes are
/// a pure function of the records.
pub fn render_dataset(records: &[GeneratedExpression]) -> String {
    let mut out = String::new();
    for record in records {
        let dto = RecordDto::from(record);
        out.push_str(&serde_json::to_string(&dto).expect("record serialization is infallible"));
        out.push('\n');
    }
    out
}

pub fn write_dataset(path: &Path, records: &[GeneratedExpression]) -> Result<(), PipelineError> {
    let mut file = std::fs::File::create(path).map_err(|e| PipelineError::io(path, e))?;
    file.write_all(render_dataset(records).as_bytes())
        .and_then(|()| file.flush())
        .map_err(|e| PipelineError::io(path, e))
}

/// Reads a dataset file back into records, validating cue tags.
pub fn read_dataset(path: &Path) -> Result<Vec<GeneratedExpression>, PipelineError> {
    let text = std::fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    let mut records = Vec::new();
    for (number, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let context = format!("line {}", number + 1);
        let dto: RecordDto = serde_json::from_str(line)
            .map_err(|e| PipelineError::parse(path, &context, e.to_string()))?;
        if dto.expression.is_empty() {
            return Err(PipelineError::validation(path, &context, "empty expression"));
        }
        let mut cues = Vec::with_capacity(dto.cues.len());
        for tag in &dto.cues {
            let Some(kind) = CueKind::from_tag(tag) else {
                return Err(PipelineError::validation(
                    path,
                    &context,
                    format!("unknown cue tag {tag:?}"),
                ));
            };
            cues.push(kind);
        }
        records.push(GeneratedExpression {
            video_id: dto.video_id,
            frame_index: dto.frame_index,
            object_id: dto.object_id,
            expression: dto.expression,
            cues,
            ambiguous: dto.ambiguous,
        });
    }
    Ok(records)
}
