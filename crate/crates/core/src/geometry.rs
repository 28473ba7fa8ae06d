//! Pure bounding-box mathematics: IoU, interval projections, and the
//! most-separative-axis computation behind the relative-location cue.

use crate::model::BBox;

/// Image axis of a box projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Which argument's projected interval lies lower on an axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalOrder {
    FirstLower,
    SecondLower,
}

/// Result of the most-separative-axis computation for a box pair.
///
/// `separation` is the interval gap on the winning axis: positive when the
/// projections are disjoint, negative when they overlap (the overlap depth).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisSeparation {
    pub axis: Axis,
    pub separation: f64,
    pub ordering: IntervalOrder,
}

fn projection(b: &BBox, axis: Axis) -> (f64, f64) {
    match axis {
        Axis::Horizontal => (b.x, b.x + b.w),
        Axis::Vertical => (b.y, b.y + b.h),
    }
}

/// Signed gap between two intervals: `max(b1 - a2, a1 - b2)`.
fn interval_gap(a: (f64, f64), b: (f64, f64)) -> f64 {
    (b.0 - a.1).max(a.0 - b.1)
}

/// Intersection-over-union of two boxes, in [0, 1].
///
/// 0 for disjoint boxes and, by convention, when the union has zero area
/// (both boxes degenerate). Symmetric in its arguments.
pub fn iou(a: &BBox, b: &BBox) -> f64 {
    let iw = ((a.x + a.w).min(b.x + b.w) - a.x.max(b.x)).max(0.0);
    let ih = ((a.y + a.h).min(b.y + b.h) - a.y.max(b.y)).max(0.0);
    let intersection = iw * ih;
    let union = a.area() + b.area() - intersection;
    if union <= 0.0 {
        0.0
    } else {
        intersection / union
    }
}

/// The axis on which the two boxes' projections have the larger gap, with
/// the gap value and which box lies lower on that axis.
///
/// Ties between axes go to horizontal. The ordering compares the projected
/// intervals lexicographically by (start, end); exactly tied intervals
/// report `FirstLower`.
pub fn most_separative_axis(a: &BBox, b: &BBox) -> AxisSeparation {
    let (ah, bh) = (projection(a, Axis::Horizontal), projection(b, Axis::Horizontal));
    let (av, bv) = (projection(a, Axis::Vertical), projection(b, Axis::Vertical));
    let gap_h = interval_gap(ah, bh);
    let gap_v = interval_gap(av, bv);
    let (axis, pa, pb, separation) = if gap_v > gap_h {
        (Axis::Vertical, av, bv, gap_v)
    } else {
        (Axis::Horizontal, ah, bh, gap_h)
    };
    let ordering = if pb < pa { IntervalOrder::SecondLower } else { IntervalOrder::FirstLower };
    AxisSeparation { axis, separation, ordering }
}

/// Normalized projected-interval overlap on `axis`:
/// `overlap_length / min(len_a, len_b)`, clamped to [0, 1].
///
/// 0 means the projections are disjoint or touching, i.e. the boxes are
/// fully separable along that axis.
pub fn separability(a: &BBox, b: &BBox, axis: Axis) -> f64 {
    let pa = projection(a, axis);
    let pb = projection(b, axis);
    let overlap = pa.1.min(pb.1) - pa.0.max(pb.0);
    if overlap <= 0.0 {
        return 0.0;
    }
    let min_len = (pa.1 - pa.0).min(pb.1 - pb.0);
    if min_len <= 0.0 {
        return 0.0;
    }
    (overlap / min_len).clamp(0.0, 1.0)
}
