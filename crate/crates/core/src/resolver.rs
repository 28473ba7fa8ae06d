//! Maps a parsed expression back to the set of scene objects it denotes.
//!
//! Resolution starts from every visible object of the named class and
//! applies one filter per cue present in the expression, in a fixed order:
//! size, then location, then color, then the non-color attribute. The
//! size and location filters re-derive each candidate's cue against the
//! other candidates still standing when the filter starts; once a filter
//! leaves a candidate without competitors, later competitive filters pass
//! vacuously. Attribute filters check the candidate's matched detection
//! instead and never pass vacuously.

use alloc::vec::Vec;

use crate::cue::{location_cue, match_detection, size_cue, CueConfig};
use crate::expression::ExpressionAst;
use crate::model::{Detection, FrameScene, ObjectInstance};

/// Outcome of resolving one expression against one frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Exactly one object satisfies every cue.
    Unique,
    /// Two or more objects satisfy every cue.
    Ambiguous,
    /// No object satisfies every cue.
    NoMatch,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Unique => "unique",
            Verdict::Ambiguous => "ambiguous",
            Verdict::NoMatch => "no-match",
        }
    }
}

/// Resolution result: the verdict plus the surviving object ids in
/// ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub verdict: Verdict,
    pub matches: Vec<i64>,
}

fn filter_against_snapshot<F>(
    snapshot: Vec<&ObjectInstance>,
    keep: F,
) -> Vec<&ObjectInstance>
where
    F: Fn(&ObjectInstance, &[&ObjectInstance]) -> bool,
{
    let mut kept = Vec::with_capacity(snapshot.len());
    for (index, candidate) in snapshot.iter().enumerate() {
        let others: Vec<&ObjectInstance> = snapshot
            .iter()
            .enumerate()
            .filter(|(other_index, _)| *other_index != index)
            .map(|(_, other)| *other)
            .collect();
        if keep(candidate, &others) {
            kept.push(*candidate);
        }
    }
    kept
}

/// Resolves `ast` against the visible objects of `scene`, consulting
/// `detections` for attribute cues.
pub fn resolve(
    ast: &ExpressionAst,
    scene: &FrameScene,
    detections: &[Detection],
    cfg: &CueConfig,
) -> Resolution {
    let mut candidates: Vec<&ObjectInstance> =
        scene.visible_objects().filter(|o| o.category == ast.noun).collect();

    if let Some(size) = ast.size {
        // A size word names a comparison direction; either the comparative
        // or the superlative form satisfies it.
        candidates = filter_against_snapshot(candidates, |candidate, others| {
            others.is_empty()
                || size_cue(candidate, others, cfg)
                    .is_some_and(|form| form.direction() == size.direction())
        });
    }

    if let Some(location) = ast.location {
        candidates = filter_against_snapshot(candidates, |candidate, others| {
            others.is_empty() || location_cue(candidate, others, cfg) == Some(location)
        });
    }

    if let Some(color) = &ast.color {
        let names = color.names();
        candidates.retain(|candidate| {
            detection_carries(candidate, detections, cfg, |det| {
                names.iter().all(|name| {
                    det.attribute_score(name).is_some_and(|score| score >= cfg.tau_attr)
                })
            })
        });
    }

    if let Some(attribute) = &ast.attribute {
        candidates.retain(|candidate| {
            detection_carries(candidate, detections, cfg, |det| {
                det.attribute_score(attribute).is_some_and(|score| score >= cfg.tau_attr)
            })
        });
    }

    let mut matches: Vec<i64> = candidates.iter().map(|o| o.object_id).collect();
    matches.sort_unstable();
    let verdict = match matches.len() {
        0 => Verdict::NoMatch,
        1 => Verdict::Unique,
        _ => Verdict::Ambiguous,
    };
    Resolution { verdict, matches }
}

fn detection_carries<F>(
    candidate: &ObjectInstance,
    detections: &[Detection],
    cfg: &CueConfig,
    predicate: F,
) -> bool
where
    F: Fn(&Detection) -> bool,
{
    let Some(bbox) = candidate.bbox else {
        return false;
    };
    match_detection(&bbox, detections, cfg).is_some_and(predicate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::{String, ToString};
    use alloc::vec;
    use crate::expression::parse_expression;
    use crate::model::{AttributeKind, AttributePrediction, BBox, Detection};

    fn obj(id: i64, category: &str, x: f64, y: f64, w: f64, h: f64) -> ObjectInstance {
        ObjectInstance { object_id: id, category: category.to_string(), bbox: Some(BBox::new(x, y, w, h)) }
    }

    fn scene(objects: Vec<ObjectInstance>) -> FrameScene {
        FrameScene { video_id: 1, frame_index: 0, objects }
    }

    fn categories() -> BTreeSet<String> {
        ["dog", "cat", "fish"].iter().map(|s| s.to_string()).collect()
    }

    fn colors() -> BTreeSet<String> {
        ["brown", "white"].iter().map(|s| s.to_string()).collect()
    }

    fn resolve_text(
        text: &str,
        scene: &FrameScene,
        detections: &[Detection],
    ) -> Resolution {
        let ast = parse_expression(text, &categories(), &colors()).unwrap();
        resolve(&ast, scene, detections, &CueConfig::default())
    }

    fn two_dogs() -> FrameScene {
        // Dog 1 is large and on the left, dog 2 small and on the right.
        scene(vec![
            obj(1, "dog", 40.0, 120.0, 200.0, 160.0),
            obj(2, "dog", 480.0, 160.0, 80.0, 60.0),
        ])
    }

    #[test]
    fn class_only_two_dogs_is_ambiguous() {
        let res = resolve_text("a dog", &two_dogs(), &[]);
        assert_eq!(res.verdict, Verdict::Ambiguous);
        assert_eq!(res.matches, vec![1, 2]);
    }

    #[test]
    fn absent_class_has_no_match() {
        let res = resolve_text("a cat", &two_dogs(), &[]);
        assert_eq!(res.verdict, Verdict::NoMatch);
        assert!(res.matches.is_empty());
    }

    #[test]
    fn comparative_size_resolves() {
        let res = resolve_text("the smaller dog", &two_dogs(), &[]);
        assert_eq!(res.verdict, Verdict::Unique);
        assert_eq!(res.matches, vec![2]);
    }

    #[test]
    fn superlative_matches_same_direction() {
        // "smallest" against a pair still names the smaller animal.
        let res = resolve_text("the smallest dog", &two_dogs(), &[]);
        assert_eq!(res.verdict, Verdict::Unique);
        assert_eq!(res.matches, vec![2]);
    }

    #[test]
    fn size_then_location_passes_vacuously() {
        let res = resolve_text("the smaller dog on the right", &two_dogs(), &[]);
        assert_eq!(res.verdict, Verdict::Unique);
        assert_eq!(res.matches, vec![2]);
    }

    #[test]
    fn location_middle_of_three() {
        let fishes = scene(vec![
            obj(1, "fish", 0.0, 0.0, 10.0, 10.0),
            obj(2, "fish", 30.0, 0.0, 10.0, 10.0),
            obj(3, "fish", 60.0, 0.0, 10.0, 10.0),
        ]);
        let res = resolve_text("a fish in the middle", &fishes, &[]);
        assert_eq!(res.verdict, Verdict::Unique);
        assert_eq!(res.matches, vec![2]);
    }

    #[test]
    fn location_filters_by_phrase() {
        let res = resolve_text("a dog on the right", &two_dogs(), &[]);
        assert_eq!(res.verdict, Verdict::Unique);
        assert_eq!(res.matches, vec![2]);
        let res = resolve_text("a dog on the left", &two_dogs(), &[]);
        assert_eq!(res.matches, vec![1]);
    }

    #[test]
    fn location_is_vacuous_once_size_decides() {
        // The size filter leaves only dog 1; with no competitor left the
        // location filter cannot re-derive a phrase and passes.
        let res = resolve_text("the bigger dog on the right", &two_dogs(), &[]);
        assert_eq!(res.verdict, Verdict::Unique);
        assert_eq!(res.matches, vec![1]);
    }

    fn dog_detections() -> Vec<Detection> {
        vec![
            Detection::new(
                BBox::new(40.0, 120.0, 200.0, 160.0),
                "dog".to_string(),
                0.9,
                vec![AttributePrediction {
                    name: "brown".to_string(),
                    score: 0.85,
                    kind: AttributeKind::Color,
                }],
            ),
            Detection::new(
                BBox::new(480.0, 160.0, 80.0, 60.0),
                "dog".to_string(),
                0.9,
                vec![AttributePrediction {
                    name: "white".to_string(),
                    score: 0.75,
                    kind: AttributeKind::Color,
                }],
            ),
        ]
    }

    #[test]
    fn color_filter_uses_matched_detection() {
        let res = resolve_text("a brown dog", &two_dogs(), &dog_detections());
        assert_eq!(res.verdict, Verdict::Unique);
        assert_eq!(res.matches, vec![1]);
        let res = resolve_text("a white dog", &two_dogs(), &dog_detections());
        assert_eq!(res.matches, vec![2]);
    }

    #[test]
    fn color_without_detections_has_no_match() {
        let res = resolve_text("a brown dog", &two_dogs(), &[]);
        assert_eq!(res.verdict, Verdict::NoMatch);
    }

    #[test]
    fn attribute_filter_requires_threshold() {
        let mut dets = dog_detections();
        dets[0] = Detection::new(
            dets[0].bbox,
            "dog".to_string(),
            0.9,
            vec![AttributePrediction {
                name: "running".to_string(),
                score: 0.25,
                kind: AttributeKind::Other,
            }],
        );
        let res = resolve_text("a running dog", &two_dogs(), &dets);
        assert_eq!(res.verdict, Verdict::NoMatch);
    }

    #[test]
    fn invisible_objects_are_not_candidates() {
        let mut sc = two_dogs();
        sc.objects.push(ObjectInstance {
            object_id: 3,
            category: "dog".to_string(),
            bbox: None,
        });
        let res = resolve_text("a dog", &sc, &[]);
        assert_eq!(res.matches, vec![1, 2]);
    }
}
