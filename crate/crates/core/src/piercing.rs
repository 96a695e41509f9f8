//! Top-level pipeline: compute the piercing set of at most five points.

use crate::error::{Error, Result};
use crate::frame::{build_frame, landmarks, polygon_meets_segment, Frame, Landmarks};
use crate::geodesic::GeodesicDisk;
use crate::kernel::{triangulate, EarOrder, Point2, PointLocation, SimplePolygon, Triangulation};
use crate::mindisk::{compute_min_disk, MinDiskResult};
use crate::scalar::Scalar;
use crate::sweep::{sweep_guard_points, GuardPoints};

/// Which branch of the construction produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// A single point pierces everything.
    Helly,
    /// The role-2 tangent angle exceeds pi/3.
    AlphaTwoLarge,
    /// The role-3 tangent angle exceeds pi/3 (handled by mirroring).
    AlphaThreeLarge,
    /// Both tangent angles are at most pi/3.
    BothSmall,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Helly => "helly",
            CaseTag::AlphaTwoLarge => "alpha2-large",
            CaseTag::AlphaThreeLarge => "alpha3-large",
            CaseTag::BothSmall => "both-small",
        }
    }
}

/// Which landmark a piercing point came from. Axis and guard indices are
/// one-based, matching the construction's numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Center,
    Axis(u8),
    GuardPlus(u8),
    GuardMinus(u8),
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Center => write!(f, "c*"),
            Provenance::Axis(i) => write!(f, "g{i}"),
            Provenance::GuardPlus(i) => write!(f, "g{i}+"),
            Provenance::GuardMinus(i) => write!(f, "g{i}-"),
        }
    }
}

/// The piercing set in input coordinates, with per-point provenance.
#[derive(Debug, Clone)]
pub struct PiercingSet<S> {
    pub points: Vec<Point2<S>>,
    pub provenance: Vec<Provenance>,
    pub case: CaseTag,
    pub frame: Option<Frame<S>>,
    pub min_disk: MinDiskResult<S>,
    /// True when some tangent sweep defaulted to its angular limit.
    pub sweep_degenerate: bool,
}

/// Chooses the construction branch from the tangent-line angles. Ties at
/// exactly pi/3 fall into the both-small branch.
pub fn select_case<S: Scalar>(lm: &Landmarks<S>) -> Result<CaseTag> {
    let third = S::FRAC_PI_3();
    let two_large = lm.alpha2 > third;
    let three_large = lm.alpha3 > third;
    match (two_large, three_large) {
        (true, true) => Err(Error::BothLarge),
        (true, false) => Ok(CaseTag::AlphaTwoLarge),
        (false, true) => Ok(CaseTag::AlphaThreeLarge),
        (false, false) => Ok(CaseTag::BothSmall),
    }
}

type Pick<S> = (Point2<S>, Provenance);

/// Selection for the large-angle branch.
///
/// Starting from the four axis points, each blocked wedge segment promotes
/// an axis point to a guard point.
pub fn algorithm_large_angle<S: Scalar>(
    frame_poly: &SimplePolygon<S>,
    lm: &Landmarks<S>,
    guards: &GuardPoints<S>,
) -> [Pick<S>; 5] {
    let meets = |zi: usize, gi: usize| {
        polygon_meets_segment(frame_poly, lm.corner_point(zi), lm.axis_point(gi))
    };
    let mut g1: Pick<S> = (lm.axis[0], Provenance::Axis(1));
    let mut g2: Pick<S> = (lm.axis[1], Provenance::Axis(2));
    let g3: Pick<S> = (lm.axis[2], Provenance::Axis(3));
    let mut g4: Pick<S> = (lm.axis[3], Provenance::Axis(4));

    if !meets(1, 1) {
        if meets(1, 2) || meets(2, 2) {
            g1 = (guards.plus[0].point, Provenance::GuardPlus(1));
            if meets(2, 2) {
                g2 = (guards.plus[1].point, Provenance::GuardPlus(2));
            }
        } else if meets(4, 4) {
            g1 = (guards.minus[0].point, Provenance::GuardMinus(1));
        }
    }
    if !meets(2, 3) && meets(2, 2) {
        g2 = (guards.plus[1].point, Provenance::GuardPlus(2));
    }
    if !meets(3, 4) && meets(3, 3) {
        g4 = (guards.minus[3].point, Provenance::GuardMinus(4));
    }

    [
        (Point2::new(S::zero(), S::zero()), Provenance::Center),
        g1,
        g2,
        g3,
        g4,
    ]
}

/// Selection for the branch where both tangent angles are at most pi/3.
pub fn algorithm_small_angles<S: Scalar>(
    frame_poly: &SimplePolygon<S>,
    lm: &Landmarks<S>,
    guards: &GuardPoints<S>,
) -> [Pick<S>; 5] {
    let meets = |zi: usize, gi: usize| {
        polygon_meets_segment(frame_poly, lm.corner_point(zi), lm.axis_point(gi))
    };
    let mut g1: Pick<S> = (lm.axis[0], Provenance::Axis(1));
    let g2: Pick<S> = (lm.axis[1], Provenance::Axis(2));
    let mut g3: Pick<S> = (lm.axis[2], Provenance::Axis(3));
    let g4: Pick<S> = (lm.axis[3], Provenance::Axis(4));

    if !meets(1, 1) && meets(1, 2) {
        g1 = (guards.plus[0].point, Provenance::GuardPlus(1));
    }
    if !meets(2, 3) && meets(2, 2) {
        g3 = (guards.minus[2].point, Provenance::GuardMinus(3));
    }
    if !meets(1, 1) && !meets(1, 2) && !meets(2, 2) && !meets(2, 3) {
        if meets(3, 4) {
            g3 = (guards.plus[2].point, Provenance::GuardPlus(3));
        }
        if meets(4, 4) {
            g1 = (guards.minus[0].point, Provenance::GuardMinus(1));
        }
    }

    [
        (Point2::new(S::zero(), S::zero()), Provenance::Center),
        g1,
        g2,
        g3,
        g4,
    ]
}

/// Full pipeline: validate, find the minimal disk, dispatch on the case and
/// emit the piercing points in input coordinates.
pub fn compute_piercing_set<S: Scalar>(
    poly: &SimplePolygon<S>,
    disks: &[GeodesicDisk<S>],
) -> Result<PiercingSet<S>> {
    let tri = triangulate(poly, EarOrder::Forward)?;
    compute_piercing_set_with(poly, &tri, disks)
}

/// Pipeline entry that reuses a caller-provided triangulation.
pub fn compute_piercing_set_with<S: Scalar>(
    poly: &SimplePolygon<S>,
    tri: &Triangulation,
    disks: &[GeodesicDisk<S>],
) -> Result<PiercingSet<S>> {
    let min_disk = compute_min_disk(poly, tri, disks)?;
    if min_disk.helly {
        return Ok(PiercingSet {
            points: vec![min_disk.center],
            provenance: vec![Provenance::Center],
            case: CaseTag::Helly,
            frame: None,
            min_disk,
            sweep_degenerate: false,
        });
    }

    let tangency = min_disk
        .tangency
        .clone()
        .expect("non-Helly result has tangency data");
    let mut frame = build_frame(&min_disk)?;
    let mut lm = landmarks(&frame, &tangency);
    let case = select_case(&lm)?;
    if case == CaseTag::AlphaThreeLarge {
        // The mirrored frame exchanges the two steep roles, reducing this
        // branch to the large-angle algorithm.
        frame = frame.mirrored_frame();
        lm = landmarks(&frame, &tangency);
        debug_assert!(lm.alpha2 > S::FRAC_PI_3());
    }
    let frame_poly = frame.polygon_to_frame(poly);
    let guards = sweep_guard_points(poly, tri, disks, &frame, &frame_poly)?;

    let picks = match case {
        CaseTag::BothSmall => algorithm_small_angles(&frame_poly, &lm, &guards),
        _ => algorithm_large_angle(&frame_poly, &lm, &guards),
    };

    let mut points = Vec::with_capacity(5);
    let mut provenance = Vec::with_capacity(5);
    for (pf, tag) in picks {
        let pw = frame.to_world(pf);
        if poly.locate(pw) == PointLocation::Outside {
            return Err(Error::PiercingPointOutside {
                x: pw.x.as_f64(),
                y: pw.y.as_f64(),
                tag: tag.to_string(),
            });
        }
        points.push(pw);
        provenance.push(tag);
    }
    let sweep_degenerate = guards
        .plus
        .iter()
        .chain(guards.minus.iter())
        .any(|g| g.from_limit);
    Ok(PiercingSet {
        points,
        provenance,
        case,
        frame: Some(frame),
        min_disk,
        sweep_degenerate,
    })
}
