//! Harness-level invariants: file round trips, generator validity rate and
//! verifier independence.

use geopierce::{generate_instance, Instance};
use geopierce_core::geodesic::geodesic_distance;
use geopierce_core::kernel::{triangulate, EarOrder};

/// Save/load is bit-exact for every coordinate.
#[test]
fn instance_files_round_trip_bit_exactly() {
    for seed in [0u64, 9, 42, 333] {
        let inst = generate_instance(seed, 14 + (seed as usize % 20), 5).unwrap();
        let text = inst.to_json();
        let back = Instance::from_json(&text).unwrap();
        assert_eq!(text, back.to_json());
        for (a, b) in inst.polygon.vertices().iter().zip(back.polygon.vertices()) {
            assert!(a.x == b.x && a.y == b.y);
        }
        for (a, b) in inst.disks.iter().zip(&back.disks) {
            assert!(a.center == b.center && a.radius == b.radius);
        }
    }
}

/// The generator succeeds on at least 99% of ten thousand seeds.
#[test]
fn generator_validity_rate() {
    let mut ok = 0usize;
    let total = 10_000usize;
    for seed in 0..total as u64 {
        let n = 6 + ((seed as usize * 7919) % 55);
        let m = 1 + ((seed as usize * 104729) % 40);
        if let Ok(inst) = generate_instance(seed, n, m) {
            debug_assert_eq!(inst.polygon.len(), n);
            ok += 1;
        }
    }
    assert!(
        ok * 100 >= total * 99,
        "generator validity rate {ok}/{total} below 99%"
    );
}

/// The two ear-clipping orders produce different diagonal sets, yet their
/// geodesic distances agree.
#[test]
fn verifier_triangulation_is_independent_but_agrees() {
    let mut differing = 0usize;
    for seed in 100..120u64 {
        let inst = generate_instance(seed, 24, 3).unwrap();
        let fwd = triangulate(&inst.polygon, EarOrder::Forward).unwrap();
        let bwd = triangulate(&inst.polygon, EarOrder::Backward).unwrap();
        if fwd.triangles != bwd.triangles {
            differing += 1;
        }
        for (i, a) in inst.disks.iter().enumerate() {
            for b in inst.disks.iter().skip(i + 1) {
                let d1 = geodesic_distance(&inst.polygon, &fwd, a.center, b.center).unwrap();
                let d2 = geodesic_distance(&inst.polygon, &bwd, a.center, b.center).unwrap();
                assert!((d1 - d2).abs() <= 1e-9 * d1.max(1.0));
            }
        }
    }
    assert!(
        differing >= 15,
        "ear orders almost never differ ({differing}/20)"
    );
}

/// Sampled geodesic-ball boundary points stay inside the polygon at
/// geodesic distance at most the radius, and reach it where no wall clamps
/// the ray.
#[test]
fn ball_boundary_samples_are_tight() {
    use geopierce::svg::ball_boundary;
    use geopierce_core::geodesic::root_at;

    let inst = generate_instance(77, 18, 3).unwrap();
    let tri = triangulate(&inst.polygon, EarOrder::Forward).unwrap();
    let disk = &inst.disks[0];
    let ring = ball_boundary(&inst.polygon, &tri, disk, 64).unwrap();
    assert_eq!(ring.len(), 64);
    let rooted = root_at(&inst.polygon, &tri, disk.center).unwrap();
    let mut reached = 0usize;
    for p in &ring {
        assert!(
            inst.polygon.locate(*p) != geopierce_core::kernel::PointLocation::Outside,
            "ring point outside polygon"
        );
        let d = rooted.distance_to(&inst.polygon, &tri, *p).unwrap();
        assert!(d <= disk.radius * (1.0 + 1e-6));
        if d >= disk.radius * (1.0 - 1e-6) {
            reached += 1;
        }
    }
    assert!(reached > 8, "ball boundary never reaches the radius");
}
