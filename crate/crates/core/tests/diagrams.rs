use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prees::{equals_identity, find_minimal_diagram, load_pree, reduce_internal_vertex, Diagram, Pree};

fn fixture(name: &str) -> Pree {
    let path = format!("{}/../../fixtures/{name}.pree", env!("CARGO_MANIFEST_DIR"));
    load_pree(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Grows a diagram by uniformly random valid attachments, keeping every
/// intermediate stage.
fn grow(p: &Pree, area: usize, seed: u64) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let products: Vec<_> = p.defined_products().collect();
    let (a, b, _) = products[rng.gen_range(0..products.len())];
    let mut stages = vec![Diagram::single_triangle(p, a, b).unwrap()];
    while stages.len() < area {
        let d = stages.last().unwrap();
        let options = d.attachments(p);
        let at = options[rng.gen_range(0..options.len())];
        stages.push(d.attach_triangle(p, at).unwrap());
    }
    stages
}

fn same_up_to_rotation(a: &Diagram, b: &Diagram) -> bool {
    let (x, y) = (a.boundary(), b.boundary());
    a.edges() == b.edges()
        && a.faces() == b.faces()
        && x.len() == y.len()
        && (0..x.len()).any(|r| (0..x.len()).all(|i| x[(r + i) % x.len()] == y[i]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn grown_diagrams_keep_every_invariant(seed in any::<u64>(), area in 1usize..=20, s3 in any::<bool>()) {
        let p = fixture(if s3 { "s3" } else { "zxz" });
        for d in grow(&p, area, seed) {
            prop_assert_eq!(d.check_invariants(&p), Ok(()));
            prop_assert!(d.curvature().equal(), "{:?}", d.curvature());
            prop_assert!(equals_identity(&p, &d.boundary_word(0, false)));
            if d.has_repeated_triangle() {
                prop_assert!(d.stats().internal_degrees.contains(&2) || d.has_parallel_edges());
            }
        }
    }

    #[test]
    fn removal_undoes_attachment(seed in any::<u64>(), area in 2usize..=15) {
        let p = fixture("zxz");
        let stages = grow(&p, area, seed);
        for pair in stages.windows(2) {
            let last = pair[1].area() - 1;
            let back = pair[1].remove_boundary_triangle(last).unwrap();
            prop_assert!(same_up_to_rotation(&back, &pair[0]));
        }
    }

    #[test]
    fn some_boundary_triangle_is_removable(seed in any::<u64>(), area in 2usize..=20) {
        let p = fixture("zxz");
        let d = grow(&p, area, seed).pop().unwrap();
        let faces = d.removable_faces();
        prop_assert!(!faces.is_empty());
        for f in faces {
            let smaller = d.remove_boundary_triangle(f).unwrap();
            prop_assert_eq!(smaller.check_invariants(&p), Ok(()));
        }
    }

    #[test]
    fn vertex_reduction_keeps_boundary(seed in any::<u64>(), area in 3usize..=20) {
        let p = fixture("zxz");
        let d = grow(&p, area, seed).pop().unwrap();
        let degrees = d.degrees();
        for v in d.internal_vertices() {
            if !(3..=5).contains(&degrees[v as usize]) {
                continue;
            }
            if let Ok(r) = reduce_internal_vertex(&d, &p, v) {
                prop_assert_eq!(r.check_invariants(&p), Ok(()));
                prop_assert_eq!(r.area() + 2, d.area());
                prop_assert_eq!(r.boundary_word(0, false), d.boundary_word(0, false));
            }
        }
    }

    #[test]
    fn boundary_words_have_minimal_diagrams(seed in any::<u64>(), area in 1usize..=4) {
        let p = fixture("zxz");
        let d = grow(&p, area, seed).pop().unwrap();
        let w = d.boundary_word(0, false);
        let m = find_minimal_diagram(&p, &w, area).unwrap();
        prop_assert!(m.area() <= d.area());
        prop_assert_eq!(m.boundary_word(0, false), w);
    }
}

#[test]
fn minimal_diagrams_have_no_reducible_vertices() {
    let p = fixture("zxz");
    for seed in 0..40 {
        let d = grow(&p, 8, seed).pop().unwrap();
        let w = d.boundary_word(0, false);
        let Some(m) = find_minimal_diagram(&p, &w, 8) else { panic!("{seed}") };
        if m.is_two_triangle_cancellation(&p) {
            continue;
        }
        assert!(!m.has_repeated_triangle(), "seed {seed}");
        assert!(m.stats().internal_degrees.iter().all(|&k| k >= 6), "seed {seed}");
    }
}
