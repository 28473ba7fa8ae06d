//! Threshold configuration: a flat TOML file whose keys mirror the cue
//! thresholds, plus an optional `color_lexicon` path. Absent keys keep
//! their defaults; unknown keys are rejected so typos cannot silently
//! disable a threshold.

use std::collections::BTreeSet;
use std::path::Path;

use synthref_core::CueConfig;

use crate::error::PipelineError;
use crate::lexicon::{default_color_lexicon, load_color_lexicon};

/// Cue thresholds plus the color vocabulary they were loaded with.
#[derive(Clone, Debug)]
pub struct LoadedConfig {
    pub cue: CueConfig,
    pub colors: BTreeSet<String>,
}

impl Default for LoadedConfig {
    fn default() -> Self {
        Self { cue: CueConfig::default(), colors: default_color_lexicon() }
    }
}

/// Loads the configuration, or the defaults when no file is given.
pub fn load_config(path: Option<&Path>) -> Result<LoadedConfig, PipelineError> {
    let Some(path) = path else {
        return Ok(LoadedConfig::default());
    };
    let text = std::fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    let table: toml::Table = text
        .parse()
        .map_err(|e: toml::de::Error| PipelineError::parse(path, "config", e.to_string()))?;

    let mut cue = CueConfig::default();
    let mut lexicon_path: Option<String> = None;
    for (key, value) in &table {
        let slot = match key.as_str() {
            "size_ratio" => &mut cue.size_ratio,
            "tau_loc" => &mut cue.tau_loc,
            "tau_iou" => &mut cue.tau_iou,
            "tau_attr" => &mut cue.tau_attr,
            "color_gap" => &mut cue.color_gap,
            "color_lexicon" => {
                let Some(s) = value.as_str() else {
                    return Err(PipelineError::validation(
                        path,
                        key,
                        "color_lexicon must be a file path string",
                    ));
                };
                lexicon_path = Some(s.to_string());
                continue;
            }
            _ => {
                return Err(PipelineError::validation(
                    path,
                    key,
                    "unknown configuration key",
                ));
            }
        };
        let number = value
            .as_float()
            .or_else(|| value.as_integer().map(|n| n as f64))
            .ok_or_else(|| PipelineError::validation(path, key, "must be a number"))?;
        *slot = number;
    }

    cue.validate().map_err(|e| PipelineError::validation(path, e.field, e.message))?;

    let colors = match lexicon_path {
        None => default_color_lexicon(),
        Some(rel) => {
            // Relative lexicon paths are resolved against the config file's
            // directory, so a config directory stays relocatable.
            let base = path.parent().unwrap_or(Path::new("."));
            load_color_lexicon(&base.join(rel))?
        }
    };
    Ok(LoadedConfig { cue, colors })
}
