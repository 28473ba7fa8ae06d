//! Command-line interface: `generate`, `stats`, `resolve`, `validate`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use synthref_core::{compute_stats, parse_expression, resolve, DatasetStats, Resolution};

use crate::annotations::parse_annotations;
use crate::config::load_config;
use crate::dataset::{read_dataset, write_dataset};
use crate::detections::parse_detections;
use crate::error::{PipelineError, EXIT_IO, EXIT_OK};
use crate::lexicon::default_color_lexicon;
use crate::pipeline::{generate_parallel, thread_count_from_env};

#[derive(Parser)]
#[command(
    name = "synthref",
    version,
    about = "Generates and resolves synthetic referring expressions for annotated video frames"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the expression dataset for an annotated corpus
    Generate {
        /// Annotation JSON file
        #[arg(long)]
        annotations: PathBuf,
        /// Detection sidecar JSONL file
        #[arg(long)]
        detections: PathBuf,
        /// Threshold configuration TOML (defaults used when absent)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output JSONL file
        #[arg(long)]
        out: PathBuf,
        /// Also print dataset statistics to standard output
        #[arg(long)]
        summary: bool,
    },
    /// Compute statistics over a generated dataset
    Stats {
        /// Generated dataset JSONL file
        #[arg(long)]
        dataset: PathBuf,
        /// Annotation JSON file the dataset was generated from
        #[arg(long)]
        annotations: PathBuf,
    },
    /// Resolve one expression against one frame
    Resolve {
        /// Annotation JSON file
        #[arg(long)]
        annotations: PathBuf,
        /// Detection sidecar JSONL file
        #[arg(long)]
        detections: PathBuf,
        /// Threshold configuration TOML (defaults used when absent)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Video id
        #[arg(long)]
        video: i64,
        /// Frame index
        #[arg(long)]
        frame: u32,
        /// The referring expression to resolve
        #[arg(long)]
        expr: String,
    },
    /// Check input files against their schemas and rules
    Validate {
        /// Annotation JSON file
        #[arg(long)]
        annotations: PathBuf,
        /// Optional detection sidecar JSONL file
        #[arg(long)]
        detections: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct StatsDto {
    videos: usize,
    objects: usize,
    categories: usize,
    expressions: usize,
    expressions_per_object: f64,
    words_per_expression: f64,
}

impl From<DatasetStats> for StatsDto {
    fn from(stats: DatasetStats) -> Self {
        StatsDto {
            videos: stats.videos,
            objects: stats.objects,
            categories: stats.categories,
            expressions: stats.expressions,
            expressions_per_object: stats.expressions_per_object,
            words_per_expression: stats.words_per_expression,
        }
    }
}

#[derive(Serialize)]
struct ResolutionDto {
    verdict: &'static str,
    matches: Vec<i64>,
}

impl From<Resolution> for ResolutionDto {
    fn from(resolution: Resolution) -> Self {
        ResolutionDto {
            verdict: resolution.verdict.as_str(),
            matches: resolution.matches,
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON output is infallible"));
}

fn run_generate(
    annotations: &Path,
    detections: &Path,
    config: Option<&Path>,
    out: &Path,
    summary: bool,
) -> Result<(), PipelineError> {
    let loaded = load_config(config)?;
    let gt = parse_annotations(annotations)?;
    let index = parse_detections(detections, &loaded.colors)?;
    let workers = thread_count_from_env()?;
    let report = generate_parallel(&gt, &index, &loaded.cue, &loaded.colors, workers);
    write_dataset(out, &report.records)?;
    if summary {
        let stats = compute_stats(&report.records, &gt)
            .map_err(|e| PipelineError::validation(out, "records", e.to_string()))?;
        print_json(&StatsDto::from(stats));
    }
    Ok(())
}

fn run_stats(dataset: &Path, annotations: &Path) -> Result<(), PipelineError> {
    let gt = parse_annotations(annotations)?;
    let records = read_dataset(dataset)?;
    let stats = compute_stats(&records, &gt)
        .map_err(|e| PipelineError::validation(dataset, "records", e.to_string()))?;
    print_json(&StatsDto::from(stats));
    Ok(())
}

fn run_resolve(
    annotations: &Path,
    detections: &Path,
    config: Option<&Path>,
    video: i64,
    frame: u32,
    expr: &str,
) -> Result<(), PipelineError> {
    let loaded = load_config(config)?;
    let gt = parse_annotations(annotations)?;
    let index = parse_detections(detections, &loaded.colors)?;
    let Some(scenes) = gt.video(video) else {
        return Err(PipelineError::validation(
            annotations,
            "videos",
            format!("unknown video id {video}"),
        ));
    };
    let Some(scene) = scenes.scenes.get(frame as usize) else {
        return Err(PipelineError::validation(
            annotations,
            "videos",
            format!("video {video} has {} frames, frame {frame} does not exist", scenes.frame_count),
        ));
    };
    let categories = gt.category_table();
    let ast = parse_expression(expr, &categories, &loaded.colors).map_err(|e| {
        PipelineError::validation("expression", format!("word {}", e.word_index + 1), e.message)
    })?;
    let frame_detections =
        index.get(&(video, frame)).map(Vec::as_slice).unwrap_or(&[]);
    let resolution = resolve(&ast, scene, frame_detections, &loaded.cue);
    print_json(&ResolutionDto::from(resolution));
    Ok(())
}

fn run_validate(annotations: &Path, detections: Option<&Path>) -> Result<(), PipelineError> {
    parse_annotations(annotations)?;
    if let Some(path) = detections {
        parse_detections(path, &default_color_lexicon())?;
    }
    Ok(())
}

/// Parses `argv` and runs the requested subcommand, returning the process
/// exit code: 0 on success, 1 on validation errors, 2 on I/O and parse
/// errors.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return EXIT_IO;
        }
        Err(e) => {
            // --help and --version land here.
            let _ = e.print();
            return EXIT_OK;
        }
    };
    let outcome = match &cli.command {
        Command::Generate { annotations, detections, config, out, summary } => {
            run_generate(annotations, detections, config.as_deref(), out, *summary)
        }
        Command::Stats { dataset, annotations } => run_stats(dataset, annotations),
        Command::Resolve { annotations, detections, config, video, frame, expr } => {
            run_resolve(annotations, detections, config.as_deref(), *video, *frame, expr)
        }
        Command::Validate { annotations, detections } => {
            run_validate(annotations, detections.as_deref())
        }
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(error) => {
            eprintln!("error: {error}");
            error.exit_code()
        }
    }
}
