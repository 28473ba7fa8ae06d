//! The four disambiguation cues extracted for a target object in a frame:
//! object class, relative size, relative location, and detector attributes
//! (color and non-color).
//!
//! All functions here are pure; the same inputs always yield the same cues.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::geometry::{iou, most_separative_axis, separability, Axis, IntervalOrder};
use crate::model::{AttributeKind, BBox, Detection, FrameScene, ObjectInstance};

/// Size characterization relative to the other same-class objects.
/// Comparative forms are used against exactly one other object, superlative
/// forms against two or more.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeForm {
    Bigger,
    Smaller,
    Biggest,
    Smallest,
}

/// Side of the size comparison a form expresses, ignoring whether it is
/// comparative or superlative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeDirection {
    Larger,
    Smaller,
}

impl SizeForm {
    pub fn as_str(&self) -> &'static str {
        match self {
            SizeForm::Bigger => "bigger",
            SizeForm::Smaller => "smaller",
            SizeForm::Biggest => "biggest",
            SizeForm::Smallest => "smallest",
        }
    }

    pub fn from_word(word: &str) -> Option<SizeForm> {
        match word {
            "bigger" => Some(SizeForm::Bigger),
            "smaller" => Some(SizeForm::Smaller),
            "biggest" => Some(SizeForm::Biggest),
            "smallest" => Some(SizeForm::Smallest),
            _ => None,
        }
    }

    pub fn is_superlative(&self) -> bool {
        matches!(self, SizeForm::Biggest | SizeForm::Smallest)
    }

    pub fn direction(&self) -> SizeDirection {
        match self {
            SizeForm::Bigger | SizeForm::Biggest => SizeDirection::Larger,
            SizeForm::Smaller | SizeForm::Smallest => SizeDirection::Smaller,
        }
    }
}

/// The closed vocabulary of relative-location phrases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocationPhrase {
    OnTheRight,
    OnTheLeft,
    InTheBack,
    InTheFront,
    InTheMiddle,
    InTheBackRight,
    InTheBackLeft,
    InTheFrontRight,
    InTheFrontLeft,
}

impl LocationPhrase {
    /// All phrases, compound (four-word) phrases first so that suffix
    /// matching in the parser is longest-first.
    pub const ALL: [LocationPhrase; 9] = [
        LocationPhrase::InTheBackRight,
        LocationPhrase::InTheBackLeft,
        LocationPhrase::InTheFrontRight,
        LocationPhrase::InTheFrontLeft,
        LocationPhrase::OnTheRight,
        LocationPhrase::OnTheLeft,
        LocationPhrase::InTheBack,
        LocationPhrase::InTheFront,
        LocationPhrase::InTheMiddle,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LocationPhrase::OnTheRight => "on the right",
            LocationPhrase::OnTheLeft => "on the left",
            LocationPhrase::InTheBack => "in the back",
            LocationPhrase::InTheFront => "in the front",
            LocationPhrase::InTheMiddle => "in the middle",
            LocationPhrase::InTheBackRight => "in the back right",
            LocationPhrase::InTheBackLeft => "in the back left",
            LocationPhrase::InTheFrontRight => "in the front right",
            LocationPhrase::InTheFrontLeft => "in the front left",
        }
    }

    pub fn words(&self) -> &'static [&'static str] {
        match self {
            LocationPhrase::OnTheRight => &["on", "the", "right"],
            LocationPhrase::OnTheLeft => &["on", "the", "left"],
            LocationPhrase::InTheBack => &["in", "the", "back"],
            LocationPhrase::InTheFront => &["in", "the", "front"],
            LocationPhrase::InTheMiddle => &["in", "the", "middle"],
            LocationPhrase::InTheBackRight => &["in", "the", "back", "right"],
            LocationPhrase::InTheBackLeft => &["in", "the", "back", "left"],
            LocationPhrase::InTheFrontRight => &["in", "the", "front", "right"],
            LocationPhrase::InTheFrontLeft => &["in", "the", "front", "left"],
        }
    }
}

/// Cue categories used to tag generated expressions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CueKind {
    Class,
    Size,
    Location,
    Color,
    Attribute,
}

impl CueKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CueKind::Class => "class",
            CueKind::Size => "size",
            CueKind::Location => "location",
            CueKind::Color => "color",
            CueKind::Attribute => "attribute",
        }
    }

    pub fn from_tag(s: &str) -> Option<CueKind> {
        match s {
            "class" => Some(CueKind::Class),
            "size" => Some(CueKind::Size),
            "location" => Some(CueKind::Location),
            "color" => Some(CueKind::Color),
            "attribute" => Some(CueKind::Attribute),
            _ => None,
        }
    }
}

/// One or two color names, highest score first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorCue {
    pub first: String,
    pub second: Option<String>,
}

impl ColorCue {
    pub fn names(&self) -> Vec<String> {
        let mut v = Vec::with_capacity(2);
        v.push(self.first.clone());
        if let Some(s) = &self.second {
            v.push(s.clone());
        }
        v
    }
}

/// Thresholds controlling cue extraction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CueConfig {
    /// Area ratio at which a size cue fires (inclusive).
    pub size_ratio: f64,
    /// Maximum projected-interval overlap allowed for a location cue.
    pub tau_loc: f64,
    /// Minimum IoU (exclusive) for matching a detection to a ground-truth box.
    pub tau_iou: f64,
    /// Minimum attribute score (inclusive) for attribute selection.
    pub tau_attr: f64,
    /// Maximum score distance between two colors reported together.
    pub color_gap: f64,
}

impl Default for CueConfig {
    fn default() -> Self {
        Self { size_ratio: 2.0, tau_loc: 0.2, tau_iou: 0.5, tau_attr: 0.3, color_gap: 0.05 }
    }
}

/// Error produced by [`CueConfig::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    pub field: &'static str,
    pub message: &'static str,
}

impl core::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "config field `{}` {}", self.field, self.message)
    }
}

impl core::error::Error for ConfigError {}

impl CueConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        fn unit_range(field: &'static str, v: f64) -> Result<(), ConfigError> {
            if v.is_finite() && (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(ConfigError { field, message: "must be in [0, 1]" })
            }
        }
        if !(self.size_ratio.is_finite() && self.size_ratio > 0.0) {
            return Err(ConfigError { field: "size_ratio", message: "must be a positive number" });
        }
        unit_range("tau_loc", self.tau_loc)?;
        unit_range("tau_iou", self.tau_iou)?;
        unit_range("tau_attr", self.tau_attr)?;
        if !(self.color_gap.is_finite() && self.color_gap >= 0.0) {
            return Err(ConfigError { field: "color_gap", message: "must be non-negative" });
        }
        Ok(())
    }
}

/// Every cue available for one target in one frame.
#[derive(Clone, Debug, PartialEq)]
pub struct CueSet {
    pub category: String,
    /// True when no other visible object of the same class is in the scene.
    pub class_unique: bool,
    pub size: Option<SizeForm>,
    pub location: Option<LocationPhrase>,
    pub color: Option<ColorCue>,
    pub attribute: Option<String>,
}

/// Relative-size cue: fires when the target's box area dominates (or is
/// dominated by) every same-class competitor by at least `size_ratio`.
///
/// Comparative form with one competitor, superlative with two or more.
/// Competitors without a box are ignored.
pub fn size_cue(
    target: &ObjectInstance,
    same_class_others: &[&ObjectInstance],
    cfg: &CueConfig,
) -> Option<SizeForm> {
    let target_area = target.bbox?.area();
    let mut count = 0usize;
    let mut max_area = f64::NEG_INFINITY;
    let mut min_area = f64::INFINITY;
    for other in same_class_others {
        if let Some(b) = other.bbox {
            count += 1;
            max_area = max_area.max(b.area());
            min_area = min_area.min(b.area());
        }
    }
    if count == 0 {
        return None;
    }
    // The smaller-side test multiplies rather than divides so that the two
    // directions are float-exact mirrors of each other.
    if target_area >= cfg.size_ratio * max_area {
        Some(if count == 1 { SizeForm::Bigger } else { SizeForm::Biggest })
    } else if target_area * cfg.size_ratio <= min_area {
        Some(if count == 1 { SizeForm::Smaller } else { SizeForm::Smallest })
    } else {
        None
    }
}

/// Basic direction from one pairwise comparison, before combination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Left,
    Right,
    Back,
    Front,
}

fn pairwise_direction(target: &BBox, other: &BBox, cfg: &CueConfig) -> Option<Direction> {
    let sep = most_separative_axis(target, other);
    if separability(target, other, sep.axis) > cfg.tau_loc {
        return None;
    }
    Some(match (sep.axis, sep.ordering) {
        (Axis::Horizontal, IntervalOrder::FirstLower) => Direction::Left,
        (Axis::Horizontal, IntervalOrder::SecondLower) => Direction::Right,
        // Smaller y sits higher in the image, which reads as farther away.
        (Axis::Vertical, IntervalOrder::FirstLower) => Direction::Back,
        (Axis::Vertical, IntervalOrder::SecondLower) => Direction::Front,
    })
}

fn single_phrase(d: Direction) -> LocationPhrase {
    match d {
        Direction::Left => LocationPhrase::OnTheLeft,
        Direction::Right => LocationPhrase::OnTheRight,
        Direction::Back => LocationPhrase::InTheBack,
        Direction::Front => LocationPhrase::InTheFront,
    }
}

fn combine_directions(a: Direction, b: Direction) -> LocationPhrase {
    use Direction::*;
    match (a, b) {
        (Left, Left) => LocationPhrase::OnTheLeft,
        (Right, Right) => LocationPhrase::OnTheRight,
        (Back, Back) => LocationPhrase::InTheBack,
        (Front, Front) => LocationPhrase::InTheFront,
        (Left, Right) | (Right, Left) => LocationPhrase::InTheMiddle,
        (Back, Front) | (Front, Back) => LocationPhrase::InTheMiddle,
        (Back, Left) | (Left, Back) => LocationPhrase::InTheBackLeft,
        (Back, Right) | (Right, Back) => LocationPhrase::InTheBackRight,
        (Front, Left) | (Left, Front) => LocationPhrase::InTheFrontLeft,
        (Front, Right) | (Right, Front) => LocationPhrase::InTheFrontRight,
    }
}

/// Relative-location cue against one or two same-class competitors.
///
/// With one competitor the most-separative axis maps directly to a phrase,
/// provided the projections overlap by at most `tau_loc`. With two, both
/// pairwise comparisons must succeed and their directions are combined
/// (opposite directions give "in the middle", a horizontal plus a vertical
/// direction gives a compound phrase). With three or more competitors the
/// cue never fires.
pub fn location_cue(
    target: &ObjectInstance,
    same_class_others: &[&ObjectInstance],
    cfg: &CueConfig,
) -> Option<LocationPhrase> {
    let target_box = target.bbox?;
    let boxed: Vec<&BBox> =
        same_class_others.iter().filter_map(|o| o.bbox.as_ref()).collect();
    match boxed.len() {
        1 => pairwise_direction(&target_box, boxed[0], cfg).map(single_phrase),
        2 => {
            let first = pairwise_direction(&target_box, boxed[0], cfg)?;
            let second = pairwise_direction(&target_box, boxed[1], cfg)?;
            Some(combine_directions(first, second))
        }
        _ => None,
    }
}

/// The detection with the highest IoU against `target_bbox`, provided that
/// IoU is strictly greater than `tau_iou`. IoU ties prefer the higher
/// detection score, then the earlier detection.
pub fn match_detection<'a>(
    target_bbox: &BBox,
    detections: &'a [Detection],
    cfg: &CueConfig,
) -> Option<&'a Detection> {
    let mut best: Option<(f64, f64, usize)> = None;
    for (index, det) in detections.iter().enumerate() {
        let overlap = iou(target_bbox, &det.bbox);
        let better = match best {
            None => true,
            Some((b_iou, b_score, _)) => {
                overlap > b_iou || (overlap == b_iou && det.score > b_score)
            }
        };
        if better {
            best = Some((overlap, det.score, index));
        }
    }
    let (best_iou, _, index) = best?;
    if best_iou > cfg.tau_iou {
        Some(&detections[index])
    } else {
        None
    }
}

/// Color and non-color attribute cues for the target.
///
/// The target and each same-class competitor are matched to detections by
/// IoU. From the target's detection, the top color at or above `tau_attr`
/// is selected (joined by the runner-up color when their scores differ by
/// at most `color_gap`), and the top non-color attribute likewise. A
/// candidate is dropped when any matched competitor carries an attribute of
/// the same name at or above `tau_attr`.
pub fn attribute_cues(
    target: &ObjectInstance,
    same_class_others: &[&ObjectInstance],
    frame_detections: &[Detection],
    cfg: &CueConfig,
) -> (Option<ColorCue>, Option<String>) {
    let Some(target_box) = target.bbox else {
        return (None, None);
    };
    let Some(target_det) = match_detection(&target_box, frame_detections, cfg) else {
        return (None, None);
    };

    let mut competitor_attrs: BTreeSet<&str> = BTreeSet::new();
    for other in same_class_others {
        let Some(other_box) = other.bbox else { continue };
        if let Some(det) = match_detection(&other_box, frame_detections, cfg) {
            for attr in &det.attributes {
                if attr.score >= cfg.tau_attr {
                    competitor_attrs.insert(attr.name.as_str());
                }
            }
        }
    }

    let colors: Vec<&crate::model::AttributePrediction> = target_det
        .attributes
        .iter()
        .filter(|a| a.kind == AttributeKind::Color && a.score >= cfg.tau_attr)
        .collect();
    let color = colors.first().map(|top| {
        let second = colors
            .get(1)
            .filter(|runner_up| top.score - runner_up.score <= cfg.color_gap)
            .map(|runner_up| runner_up.name.clone());
        ColorCue { first: top.name.clone(), second }
    });
    let color = color.filter(|c| {
        !competitor_attrs.contains(c.first.as_str())
            && c.second.as_deref().is_none_or(|s| !competitor_attrs.contains(s))
    });

    let attribute = target_det
        .attributes
        .iter()
        .find(|a| a.kind == AttributeKind::Other && a.score >= cfg.tau_attr)
        .map(|a| a.name.clone())
        .filter(|name| !competitor_attrs.contains(name.as_str()));

    (color, attribute)
}

/// Extracts the full cue set for `target` within `scene`.
///
/// The class cue is always present. When the target's class is unique in
/// the scene, size and location are vacuously inapplicable and skipped;
/// attribute cues are still computed since they can only enrich the
/// expression.
pub fn extract_cues(
    target: &ObjectInstance,
    scene: &FrameScene,
    frame_detections: &[Detection],
    cfg: &CueConfig,
) -> CueSet {
    let others = scene.same_class_others(target);
    let class_unique = others.is_empty();
    let (size, location) = if class_unique {
        (None, None)
    } else {
        (size_cue(target, &others, cfg), location_cue(target, &others, cfg))
    };
    let (color, attribute) = attribute_cues(target, &others, frame_detections, cfg);
    CueSet { category: target.category.clone(), class_unique, size, location, color, attribute }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use crate::model::AttributePrediction;

    fn obj(id: i64, category: &str, bbox: Option<BBox>) -> ObjectInstance {
        ObjectInstance { object_id: id, category: category.to_string(), bbox }
    }

    fn boxed(id: i64, category: &str, x: f64, y: f64, w: f64, h: f64) -> ObjectInstance {
        obj(id, category, Some(BBox::new(x, y, w, h)))
    }

    fn cfg() -> CueConfig {
        CueConfig::default()
    }

    fn attr(name: &str, score: f64, kind: AttributeKind) -> AttributePrediction {
        AttributePrediction { name: name.to_string(), score, kind }
    }

    fn det(x: f64, y: f64, w: f64, h: f64, attrs: Vec<AttributePrediction>) -> Detection {
        Detection::new(BBox::new(x, y, w, h), "object".to_string(), 0.9, attrs)
    }

    #[test]
    fn size_cue_bigger_against_one() {
        let target = boxed(1, "dog", 0.0, 0.0, 20.0, 10.0); // area 200
        let other = boxed(2, "dog", 0.0, 0.0, 9.0, 10.0); // area 90
        assert_eq!(size_cue(&target, &[&other], &cfg()), Some(SizeForm::Bigger));
    }

    #[test]
    fn size_cue_smallest_against_two() {
        let target = boxed(1, "dog", 0.0, 0.0, 10.0, 10.0); // area 100
        let a = boxed(2, "dog", 0.0, 0.0, 21.0, 10.0); // area 210
        let b = boxed(3, "dog", 0.0, 0.0, 25.0, 10.0); // area 250
        assert_eq!(size_cue(&target, &[&a, &b], &cfg()), Some(SizeForm::Smallest));
    }

    #[test]
    fn size_cue_below_threshold_absent() {
        let target = boxed(1, "dog", 0.0, 0.0, 15.0, 10.0); // area 150
        let other = boxed(2, "dog", 0.0, 0.0, 10.0, 10.0); // area 100
        assert_eq!(size_cue(&target, &[&other], &cfg()), None);
    }

    #[test]
    fn size_cue_fires_at_exact_ratio() {
        let target = boxed(1, "dog", 0.0, 0.0, 20.0, 10.0); // area 200
        let other = boxed(2, "dog", 0.0, 0.0, 10.0, 10.0); // area 100
        assert_eq!(size_cue(&target, &[&other], &cfg()), Some(SizeForm::Bigger));
        assert_eq!(size_cue(&other, &[&target], &cfg()), Some(SizeForm::Smaller));
    }

    #[test]
    fn location_cue_pair_on_x() {
        let target = boxed(1, "dog", 0.0, 0.0, 10.0, 10.0);
        let other = boxed(2, "dog", 30.0, 0.0, 10.0, 10.0);
        assert_eq!(location_cue(&target, &[&other], &cfg()), Some(LocationPhrase::OnTheLeft));
        assert_eq!(location_cue(&other, &[&target], &cfg()), Some(LocationPhrase::OnTheRight));
    }

    #[test]
    fn location_cue_middle_of_three() {
        let left = boxed(1, "dog", 0.0, 0.0, 10.0, 10.0);
        let mid = boxed(2, "dog", 30.0, 0.0, 10.0, 10.0);
        let right = boxed(3, "dog", 60.0, 0.0, 10.0, 10.0);
        assert_eq!(
            location_cue(&mid, &[&left, &right], &cfg()),
            Some(LocationPhrase::InTheMiddle)
        );
        assert_eq!(location_cue(&left, &[&mid, &right], &cfg()), Some(LocationPhrase::OnTheLeft));
    }

    #[test]
    fn location_cue_compound() {
        // Other 1 is below the target, other 2 is to its left.
        let target = boxed(1, "dog", 50.0, 0.0, 10.0, 10.0);
        let below = boxed(2, "dog", 50.0, 30.0, 10.0, 10.0);
        let left = boxed(3, "dog", 0.0, 0.0, 10.0, 10.0);
        assert_eq!(
            location_cue(&target, &[&below, &left], &cfg()),
            Some(LocationPhrase::InTheBackRight)
        );
    }

    #[test]
    fn location_cue_blocked_by_overlap() {
        // Projections overlap by half on both axes: separability 0.5 > 0.2.
        let target = boxed(1, "dog", 0.0, 0.0, 10.0, 10.0);
        let other = boxed(2, "dog", 5.0, 5.0, 10.0, 10.0);
        assert_eq!(location_cue(&target, &[&other], &cfg()), None);
    }

    #[test]
    fn location_cue_absent_for_three_or_more_others() {
        let target = boxed(1, "dog", 0.0, 0.0, 10.0, 10.0);
        let a = boxed(2, "dog", 30.0, 0.0, 10.0, 10.0);
        let b = boxed(3, "dog", 60.0, 0.0, 10.0, 10.0);
        let c = boxed(4, "dog", 90.0, 0.0, 10.0, 10.0);
        assert_eq!(location_cue(&target, &[&a, &b, &c], &cfg()), None);
    }

    #[test]
    fn match_detection_picks_argmax_above_gate() {
        let target = BBox::new(0.0, 0.0, 100.0, 100.0);
        let dets = vec![
            det(0.0, 0.0, 100.0, 62.0, vec![]), // IoU 0.62
            det(0.0, 0.0, 100.0, 30.0, vec![]), // IoU 0.30
        ];
        let matched = match_detection(&target, &dets, &cfg()).unwrap();
        assert_eq!(matched.bbox.h, 62.0);
    }

    #[test]
    fn match_detection_absent_below_gate() {
        let target = BBox::new(0.0, 0.0, 100.0, 100.0);
        let dets = vec![det(0.0, 0.0, 100.0, 45.0, vec![])]; // IoU 0.45
        assert!(match_detection(&target, &dets, &cfg()).is_none());
    }

    #[test]
    fn match_detection_empty_list() {
        let target = BBox::new(0.0, 0.0, 100.0, 100.0);
        assert!(match_detection(&target, &[], &cfg()).is_none());
    }

    #[test]
    fn attribute_cues_two_close_colors() {
        let target = boxed(1, "parrot", 0.0, 0.0, 100.0, 100.0);
        let dets = vec![det(
            0.0,
            0.0,
            100.0,
            100.0,
            vec![
                attr("yellow", 0.71, AttributeKind::Color),
                attr("green", 0.68, AttributeKind::Color),
            ],
        )];
        let (color, attribute) = attribute_cues(&target, &[], &dets, &cfg());
        assert_eq!(
            color,
            Some(ColorCue { first: "yellow".to_string(), second: Some("green".to_string()) })
        );
        assert_eq!(attribute, None);
    }

    #[test]
    fn attribute_cues_shared_color_dropped() {
        let target = boxed(1, "dog", 0.0, 0.0, 100.0, 100.0);
        let other = boxed(2, "dog", 300.0, 0.0, 100.0, 100.0);
        let dets = vec![
            det(0.0, 0.0, 100.0, 100.0, vec![attr("brown", 0.8, AttributeKind::Color)]),
            det(300.0, 0.0, 100.0, 100.0, vec![attr("brown", 0.6, AttributeKind::Color)]),
        ];
        let (color, _) = attribute_cues(&target, &[&other], &dets, &cfg());
        assert_eq!(color, None);
    }

    #[test]
    fn attribute_cues_unmatched_target() {
        let target = boxed(1, "dog", 0.0, 0.0, 100.0, 100.0);
        let dets = vec![det(0.0, 0.0, 100.0, 45.0, vec![attr("brown", 0.9, AttributeKind::Color)])];
        assert_eq!(attribute_cues(&target, &[], &dets, &cfg()), (None, None));
    }

    #[test]
    fn attribute_cues_wide_color_gap_keeps_top_only() {
        let target = boxed(1, "parrot", 0.0, 0.0, 100.0, 100.0);
        let dets = vec![det(
            0.0,
            0.0,
            100.0,
            100.0,
            vec![
                attr("yellow", 0.9, AttributeKind::Color),
                attr("green", 0.5, AttributeKind::Color),
                attr("flying", 0.45, AttributeKind::Other),
            ],
        )];
        let (color, attribute) = attribute_cues(&target, &[], &dets, &cfg());
        assert_eq!(color, Some(ColorCue { first: "yellow".to_string(), second: None }));
        assert_eq!(attribute, Some("flying".to_string()));
    }

    #[test]
    fn extract_cues_lone_object() {
        let scene = FrameScene {
            video_id: 1,
            frame_index: 0,
            objects: vec![boxed(1, "dog", 0.0, 0.0, 10.0, 10.0)],
        };
        let cues = extract_cues(&scene.objects[0], &scene, &[], &cfg());
        assert!(cues.class_unique);
        assert_eq!(cues.category, "dog");
        assert_eq!(cues.size, None);
        assert_eq!(cues.location, None);
    }

    #[test]
    fn extract_cues_pair_gets_size_and_location() {
        let scene = FrameScene {
            video_id: 1,
            frame_index: 0,
            objects: vec![
                boxed(1, "dog", 0.0, 0.0, 20.0, 20.0),  // area 400
                boxed(2, "dog", 50.0, 0.0, 10.0, 10.0), // area 100
            ],
        };
        let cues = extract_cues(&scene.objects[0], &scene, &[], &cfg());
        assert!(!cues.class_unique);
        assert_eq!(cues.size, Some(SizeForm::Bigger));
        assert_eq!(cues.location, Some(LocationPhrase::OnTheLeft));
    }

    #[test]
    fn config_validation() {
        assert!(CueConfig::default().validate().is_ok());
        assert!(CueConfig { tau_loc: 1.5, ..CueConfig::default() }.validate().is_err());
        assert!(CueConfig { size_ratio: 0.0, ..CueConfig::default() }.validate().is_err());
        assert!(CueConfig { color_gap: -0.1, ..CueConfig::default() }.validate().is_err());
    }
}
