//! Randomized property suites over the full pipeline: minimal-disk
//! invariants, frame and landmark geometry, guard placement and piercing
//! completeness, on instances tuned to exercise the non-Helly construction.

use geopierce::{generate_instance, generate_tight_instance, verify_piercing};
use geopierce_core::frame::{
    angle_bound_violations, axis_triangles_clear, build_frame, closer_to_point_than_to_unit_circle,
    landmarks, Quadrant,
};
use geopierce_core::geodesic::{geodesic_core, root_at, shortest_path};
use geopierce_core::kernel::{triangulate, EarOrder};
use geopierce_core::mindisk::{compute_min_disk, depth, local_optimality_probes, DepthField};
use geopierce_core::piercing::compute_piercing_set;
use geopierce_core::sweep::{aux_center, sweep_guard_points};
use geopierce_core::tol;
use geopierce_core::Point;

use geopierce::Instance;

fn tight(seed: u64) -> Option<Instance> {
    let n = 8 + ((seed as usize * 7919) % 36);
    let m = 3 + ((seed as usize * 104729) % 4);
    generate_tight_instance(seed, n, m).ok()
}

/// Collects seeds whose tight instance is not Helly, with everything needed
/// for the minimal-disk structure checks.
fn non_helly_cases(count: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count && seed < 4000 {
        if let Some(inst) = tight(seed) {
            let tri = triangulate(&inst.polygon, EarOrder::Forward).unwrap();
            if let Ok(r) = compute_min_disk(&inst.polygon, &tri, &inst.disks) {
                if !r.helly {
                    out.push(inst);
                }
            }
        }
        seed += 1;
    }
    out
}

#[test]
fn minimal_disk_invariants_on_non_helly_instances() {
    let cases = non_helly_cases(40);
    assert!(
        cases.len() >= 30,
        "only {} non-Helly instances found",
        cases.len()
    );
    for inst in &cases {
        let tri = triangulate(&inst.polygon, EarOrder::Forward).unwrap();
        let r = compute_min_disk(&inst.polygon, &tri, &inst.disks).unwrap();
        let t = r.tangency.as_ref().unwrap();

        // Radius positive, at least three tangencies within tolerance.
        assert!(r.radius > 0.0);
        let rooted = root_at(&inst.polygon, &tri, r.center).unwrap();
        for (k, &i) in t.indices.iter().enumerate() {
            let d = rooted
                .distance_to(&inst.polygon, &tri, inst.disks[i].center)
                .unwrap();
            let residual = (d - inst.disks[i].radius) - r.radius;
            assert!(
                residual.abs() <= 1e-6 * r.radius.max(1e-9),
                "tangency residual {residual:.3e}"
            );
            // The tangency point sits on the minimal disk's boundary.
            let dt = rooted
                .distance_to(&inst.polygon, &tri, t.points[k])
                .unwrap();
            assert!((dt - r.radius).abs() <= 1e-6 * r.radius);
        }
        // Distinct tangency points.
        for a in 0..3 {
            for b in (a + 1)..3 {
                assert!(t.points[a].dist(t.points[b]) > 1e-9);
            }
        }
        // The minimal disk stays clear of the polygon boundary.
        let margin = inst.polygon.boundary_distance(r.center);
        assert!(
            margin > r.radius * (1.0 - 1e-6),
            "boundary margin {margin} vs radius {}",
            r.radius
        );
        // Local optimality at 64 probes.
        assert!(local_optimality_probes(
            &inst.polygon,
            &tri,
            &inst.disks,
            r.center,
            1e-4,
            64,
            1e-7
        )
        .unwrap());
        // The minimal disk avoids the boundary of the geodesic core of the
        // three tangent centers.
        let (c1, c2, c3) = (
            inst.disks[t.indices[0]].center,
            inst.disks[t.indices[1]].center,
            inst.disks[t.indices[2]].center,
        );
        if let Ok(core) = geodesic_core(&inst.polygon, &tri, c1, c2, c3) {
            for w in core.boundary().windows(2) {
                for k in 0..=8 {
                    let p = w[0].lerp(w[1], k as f64 / 8.0);
                    let d = rooted.distance_to(&inst.polygon, &tri, p).unwrap();
                    assert!(
                        d > r.radius * (1.0 - tol::TAU_TAN),
                        "core boundary point at depth {d} inside radius {}",
                        r.radius
                    );
                }
            }
        }
    }
}

/// The depth function is convex along geodesics: its value at points of a
/// geodesic never exceeds the endpoint maximum.
#[test]
fn depth_is_convex_along_geodesics() {
    let mut checked = 0usize;
    for seed in 0..40u64 {
        let Some(inst) = tight(seed) else { continue };
        let tri = triangulate(&inst.polygon, EarOrder::Forward).unwrap();
        let field = DepthField::new(&inst.polygon, &tri, &inst.disks).unwrap();
        let verts = inst.polygon.vertices();
        let b = verts[0]
            .lerp(verts[2 % verts.len()], 0.43)
            .lerp(inst.disks[0].center, 0.71);
        let c = inst.disks[1 % inst.disks.len()].center;
        if inst.polygon.locate(b) == geopierce_core::kernel::PointLocation::Outside {
            continue;
        }
        let path = shortest_path(&inst.polygon, &tri, b, c).unwrap();
        let bound = field.eval(b).unwrap().max(field.eval(c).unwrap()) + 1e-9;
        for k in 0..=16 {
            let x = path.point_at(path.length * k as f64 / 16.0);
            assert!(field.eval(x).unwrap() <= bound);
        }
        checked += 1;
    }
    assert!(checked >= 25);
}

#[test]
fn depth_matches_independent_recomputation() {
    for seed in 0..20u64 {
        let Some(inst) = tight(seed) else { continue };
        let tri = triangulate(&inst.polygon, EarOrder::Forward).unwrap();
        let x = inst.disks[0].center.lerp(inst.disks[1].center, 0.37);
        if inst.polygon.locate(x) == geopierce_core::kernel::PointLocation::Outside {
            continue;
        }
        let got = depth(&inst.polygon, &tri, &inst.disks, x).unwrap().value;
        // Oracle: per-disk shortest paths, recomputed ad hoc.
        let mut want = f64::NEG_INFINITY;
        for d in &inst.disks {
            let len = shortest_path(&inst.polygon, &tri, x, d.center)
                .unwrap()
                .length;
            want = want.max(len - d.radius);
        }
        assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0));
    }
}

#[test]
fn frame_and_landmark_properties() {
    let cases = non_helly_cases(30);
    for inst in &cases {
        let tri = triangulate(&inst.polygon, EarOrder::Forward).unwrap();
        let r = compute_min_disk(&inst.polygon, &tri, &inst.disks).unwrap();
        let tangency = r.tangency.clone().unwrap();
        let frame = build_frame(&r).unwrap();
        let lm = landmarks(&frame, &tangency);

        // Round trip and normalization.
        for p in [inst.disks[0].center, r.center, inst.polygon.vertex(0)] {
            let q = frame.to_world(frame.to_frame(p));
            assert!(q.dist(p) <= 1e-9 * p.norm().max(1.0));
        }
        assert!(frame.to_frame(r.center).norm() <= 1e-9);
        assert!(lm.tangency[0].dist(Point::new(0.0, -1.0)) <= 1e-6);
        assert!((lm.tangent_corners[0].y + 1.0).abs() <= 1e-6);
        assert!(lm.tangent_corners[0].x > 0.0);
        // The apex angle (between roles 2 and 3) is the largest, which is
        // equivalent to both acute angles being at most the apex's.
        let apex = std::f64::consts::PI - lm.alpha2 - lm.alpha3;
        assert!(apex >= lm.alpha2.max(lm.alpha3) - 1e-9);
        assert!(lm.alpha2 > 0.0 && lm.alpha2 <= std::f64::consts::FRAC_PI_2 + 1e-12);
        assert!(lm.alpha3 > 0.0 && lm.alpha3 <= std::f64::consts::FRAC_PI_2 + 1e-12);

        // The axis triangles are clear of the polygon, and the angle
        // bound implications hold.
        let fp = frame.polygon_to_frame(&inst.polygon);
        assert!(axis_triangles_clear(&fp, &lm), "axis triangles invaded");
        assert!(angle_bound_violations(&fp, &lm).is_empty());
    }
}

/// Points on the wedge segments and on the entry windows are closer to
/// their axis point than to the minimal disk.
#[test]
fn window_points_prefer_their_axis_point() {
    let a = geopierce_core::frame::wedge_corner_coordinate::<f64>();
    let axis = [
        Point::new(2.0, 0.0),
        Point::new(0.0, 2.0),
        Point::new(-2.0, 0.0),
        Point::new(0.0, -2.0),
    ];
    let corner = [
        Point::new(a, a),
        Point::new(-a, a),
        Point::new(-a, -a),
        Point::new(a, -a),
    ];
    let window = [
        (Point::new(2.0, 1.5), Point::new(2.0, -1.5)),
        (Point::new(-1.5, 2.0), Point::new(1.5, 2.0)),
        (Point::new(-2.0, -1.5), Point::new(-2.0, 1.5)),
        (Point::new(1.5, -2.0), Point::new(-1.5, -2.0)),
    ];
    for i in 0..4 {
        let g = axis[i];
        let prev = corner[(i + 3) % 4];
        // Sampled points of both adjacent wedge segments.
        for seg in [(corner[i], g), (prev, g)] {
            for k in 0..=32 {
                let p = seg.0.lerp(seg.1, k as f64 / 32.0);
                assert!(closer_to_point_than_to_unit_circle(g, p));
                // Directly against sampled circle points as well.
                for j in 0..16 {
                    let ang = j as f64 * std::f64::consts::TAU / 16.0;
                    let q = Point::new(ang.cos(), ang.sin());
                    assert!(p.dist(g) <= p.dist(q) + 1e-12);
                }
            }
        }
        // Entry windows satisfy the same preference.
        for k in 0..=32 {
            let p = window[i].0.lerp(window[i].1, k as f64 / 32.0);
            for j in 0..64 {
                let ang = j as f64 * std::f64::consts::TAU / 64.0;
                let q = Point::new(ang.cos(), ang.sin());
                assert!(p.dist(g) <= p.dist(q) + 1e-12);
            }
        }
    }
}

#[test]
fn guard_points_sit_on_their_circles_and_quadrants() {
    let cases = non_helly_cases(30);
    let quads = [Quadrant::Q1, Quadrant::Q2, Quadrant::Q3, Quadrant::Q4];
    let prev = [Quadrant::Q4, Quadrant::Q1, Quadrant::Q2, Quadrant::Q3];
    for inst in &cases {
        let tri = triangulate(&inst.polygon, EarOrder::Forward).unwrap();
        let r = compute_min_disk(&inst.polygon, &tri, &inst.disks).unwrap();
        let frame = build_frame(&r).unwrap();
        let fp = frame.polygon_to_frame(&inst.polygon);
        let guards = sweep_guard_points(&inst.polygon, &tri, &inst.disks, &frame, &fp).unwrap();
        for i in 0..4 {
            let gp = guards.plus[i].point;
            let gm = guards.minus[i].point;
            let c = aux_center::<f64>(i);
            assert!((gp.dist(c) - 1.0).abs() <= 1e-9, "plus guard off circle");
            assert!((gm.dist(c) - 1.0).abs() <= 1e-9, "minus guard off circle");
            assert!(quads[i].contains(gp), "plus guard out of quadrant {i}");
            assert!(prev[i].contains(gm), "minus guard out of quadrant {i}");
        }
    }
}

#[test]
fn piercing_completeness_on_tight_instances() {
    let mut verified = 0usize;
    let mut non_helly = 0usize;
    for seed in 0..250u64 {
        let Some(inst) = tight(seed) else { continue };
        let set = compute_piercing_set(&inst.polygon, &inst.disks).unwrap();
        assert!(set.points.len() <= 5);
        if set.points.len() > 1 {
            non_helly += 1;
            assert_eq!(set.points.len(), 5);
        }
        for p in &set.points {
            assert!(
                inst.polygon.locate(*p) != geopierce_core::kernel::PointLocation::Outside,
                "piercing point outside polygon"
            );
        }
        let rep = verify_piercing(&inst, &set.points, set.case.as_str(), tol::TAU_PIERCE).unwrap();
        assert!(
            rep.all_pierced(),
            "seed {seed}: max violation {:.3e}",
            rep.max_violation
        );
        verified += 1;
    }
    assert!(verified >= 200);
    assert!(
        non_helly >= 50,
        "only {non_helly} non-Helly instances exercised"
    );
}

#[test]
fn provenance_is_deterministic_and_mirror_involutive() {
    for seed in [5u64, 23, 61, 104, 199] {
        let Some(inst) = tight(seed) else { continue };
        let a = compute_piercing_set(&inst.polygon, &inst.disks).unwrap();
        let b = compute_piercing_set(&inst.polygon, &inst.disks).unwrap();
        assert_eq!(a.provenance, b.provenance);
        assert_eq!(a.case, b.case);
        for (p, q) in a.points.iter().zip(&b.points) {
            assert_eq!(p, q);
        }
        if let Some(frame) = &a.frame {
            let mm = frame.mirrored_frame().mirrored_frame();
            for p in &a.points {
                assert!(mm.to_frame(*p).dist(frame.to_frame(*p)) <= 1e-12);
            }
        }
    }
}

#[test]
fn removing_a_witness_point_breaks_piercing() {
    // Drop the point that some disk depends on; the verifier must notice.
    let mut demonstrated = false;
    for seed in 0..200u64 {
        let Some(inst) = tight(seed) else { continue };
        let set = compute_piercing_set(&inst.polygon, &inst.disks).unwrap();
        if set.points.len() != 5 {
            continue;
        }
        let full = verify_piercing(&inst, &set.points, set.case.as_str(), 1e-7).unwrap();
        if !full.all_pierced() {
            continue;
        }
        // Find a point that is the unique piercer of some disk.
        for drop in 0..5 {
            let kept: Vec<Point> = set
                .points
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, p)| *p)
                .collect();
            let rep = verify_piercing(&inst, &kept, set.case.as_str(), 1e-7).unwrap();
            if !rep.all_pierced() {
                assert!(rep.max_violation > 1e-7);
                demonstrated = true;
                break;
            }
        }
        if demonstrated {
            break;
        }
    }
    assert!(
        demonstrated,
        "never found an instance with a load-bearing point"
    );
}

#[test]
fn plain_generator_also_passes() {
    for seed in 500..560u64 {
        let n = 6 + ((seed as usize * 7919) % 55);
        let m = 1 + ((seed as usize * 104729) % 40);
        let inst = generate_instance(seed, n, m).unwrap();
        let set = compute_piercing_set(&inst.polygon, &inst.disks).unwrap();
        let rep = verify_piercing(&inst, &set.points, set.case.as_str(), 1e-7).unwrap();
        assert!(rep.all_pierced());
    }
}

/// Pinned instance where the polygon blocks the lower-right wedge segments:
/// the mirrored large-angle branch swaps the first axis point for its minus
/// guard, and the result still pierces everything.
#[test]
fn pinned_instance_selects_minus_guard_under_mirror() {
    let poly_pts = [
        (4.485806698671281, 6.4448939083313865),
        (3.2007565073009547, 10.033913059673324),
        (4.965264861660231, 7.523921367048117),
        (4.970921809798316, 10.049290004970622),
        (6.28594661989967, 8.710610643441434),
        (9.995932548244552, 8.831184059811742),
        (11.338225218550711, 7.940010812163096),
        (11.856197877280689, 5.984211012235383),
        (7.7445498650776265, 5.953867175452757),
        (8.151181492025978, 5.71297582542654),
        (10.681719612576401, 5.016973056477665),
        (11.257594651048636, 4.726561243042212),
        (10.60661176162142, 2.870941829873796),
        (8.011261722766665, 1.8158486030294094),
        (7.914967440677143, 1.0068561304537553),
        (6.2437423795065685, 4.553486408148326),
        (4.835331941985359, 3.8179002415991747),
        (4.861782896826301, 4.469368564815742),
        (2.672728148287407, 1.6902385499853771),
        (2.551512091221048, 2.3404811176403233),
        (5.044638224873363, 4.987655895663229),
        (2.117229576007287, 4.145564843133418),
        (3.3525999171514234, 5.42858889787735),
        (1.4818913747240519, 5.263594432880237),
    ];
    let disk_data = [
        (8.455832745253172, 8.275567788558135, 2.5362569165035427),
        (9.637820394355415, 4.159301935890712, 2.5375012891052973),
        (6.77814952621554, 6.63028499542505, 1.9014138417720567),
        (7.541851883646821, 7.703925897185363, 2.20658947837631),
        (5.566410883482406, 4.248994185779549, 2.489918357590862),
    ];
    let (inst, set) = run_pinned(&poly_pts, &disk_data);
    assert_eq!(set.case.as_str(), "alpha3-large");
    let tags: Vec<String> = set.provenance.iter().map(|p| p.to_string()).collect();
    assert!(tags.contains(&"g1-".to_string()), "tags: {tags:?}");
    let rep = verify_piercing(&inst, &set.points, set.case.as_str(), 1e-7).unwrap();
    assert!(
        rep.all_pierced(),
        "max violation {:+.3e}",
        rep.max_violation
    );
}

/// Pinned instance for the small-angles branch promoting the plus guard of
/// the third axis point.
#[test]
fn pinned_instance_selects_plus_guard_in_small_angles() {
    let poly_pts = [
        (2.137539734169947, 7.119441411928832),
        (4.054311877340613, 7.036645368794806),
        (3.841016742633466, 7.410784360017014),
        (5.189687056517533, 8.366648726281214),
        (6.001427242635575, 7.728317095292464),
        (6.432047059842689, 11.784832337477305),
        (6.935065242475627, 11.773163201737333),
        (6.242956727940319, 7.384508530593966),
        (8.922123639827298, 10.18694649761889),
        (8.667386940166121, 9.73758191503652),
        (9.394732488888282, 10.374777149520547),
        (7.335182160764647, 7.231628334963403),
        (9.92330708710177, 7.370953594368711),
        (7.701469559197468, 6.465543291320806),
        (10.161455707999327, 6.5375439147865215),
        (10.396787102165451, 5.472951622604971),
        (7.763240008697412, 5.482467082533066),
        (10.060765547053034, 3.831432305859898),
        (7.9698284133686155, 4.838726759152486),
        (9.867752906400113, 1.8806849450598833),
        (9.566005962954078, 1.252712737199567),
        (8.531886209908745, 2.5740015919811934),
        (5.748048954652728, 0.49807630412577364),
        (5.811236807827739, 3.7265124311442688),
        (5.4085365185117835, 1.8137007245020769),
        (5.147240182190423, 1.1650098081792146),
        (4.770685634938234, 0.4972681559895724),
        (4.72142542896815, 1.3355762441517465),
        (4.358378617101008, 0.62539880528485),
        (5.315343409404951, 4.15338552132083),
        (4.970671448406551, 4.927311176448097),
        (2.9522744227368207, 2.8369468906090782),
        (1.4220085107102145, 2.571571791395729),
        (0.8847505587038036, 3.4541498163613267),
        (0.43316063086616463, 5.209002692693858),
    ];
    let disk_data = [
        (6.19690947539023, 8.306309466567898, 2.8837279448500523),
        (7.197805196532582, 2.6382772995339896, 3.297660554558428),
        (1.6166221551083557, 5.02935801733492, 3.280192815291284),
        (6.157454778175117, 2.8726015689622546, 2.88724784770106),
        (6.946469191738965, 6.352206156080672, 2.7598602240866903),
    ];
    let (inst, set) = run_pinned(&poly_pts, &disk_data);
    assert_eq!(set.case.as_str(), "both-small");
    let tags: Vec<String> = set.provenance.iter().map(|p| p.to_string()).collect();
    assert!(tags.contains(&"g3+".to_string()), "tags: {tags:?}");
    let rep = verify_piercing(&inst, &set.points, set.case.as_str(), 1e-7).unwrap();
    assert!(
        rep.all_pierced(),
        "max violation {:+.3e}",
        rep.max_violation
    );
}

fn run_pinned(
    poly_pts: &[(f64, f64)],
    disk_data: &[(f64, f64, f64)],
) -> (Instance, geopierce_core::piercing::PiercingSet<f64>) {
    use geopierce_core::geodesic::GeodesicDisk;
    use geopierce_core::kernel::SimplePolygon;
    let poly =
        SimplePolygon::validate(poly_pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap();
    let disks: Vec<_> = disk_data
        .iter()
        .map(|&(x, y, r)| GeodesicDisk::new(Point::new(x, y), r).unwrap())
        .collect();
    let set = compute_piercing_set(&poly, &disks).unwrap();
    let inst = Instance::new(poly, disks, "pinned".into(), 0);
    (inst, set)
}
