use proptest::prelude::*;
use vcdraw::arc_draw::{draw_triangulation_arcs, ArcDrawing};
use vcdraw::graph::{classify, format_graph, generate_class, parse_graph};
use vcdraw::grid_draw::{draw_outerplanar, draw_planar3tree, replay, StepTrace};
use vcdraw::realizer::{
    canonical_order, minimize_realizer, order_from_tree, schnyder_from_order,
    validate_canonical_order,
};
use vcdraw::tree_draw::draw_tree;
use vcdraw::verify::{
    check_planarity_exact, check_planarity_tol, count_segments, lower_bounds,
    min_segment_cover_bruteforce, primitive_counts, Tolerances,
};
use vcdraw::{Direction, GraphClass, GridDrawing, Tree};

fn small_drawing() -> impl Strategy<Value = GridDrawing> {
    (2usize..8, 2i64..5)
        .prop_flat_map(|(n, side)| {
            (
                prop::collection::vec((0..side, 0..side), n),
                prop::collection::vec((0..n, 0..n), 1..12),
            )
        })
        .prop_map(|(points, pairs)| {
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (u, v) in pairs {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.contains(&e) {
                    edges.push(e);
                }
            }
            GridDrawing::new("random", points, edges)
        })
        .prop_filter("crossing-free without overlaps", |d| {
            !d.edges.is_empty() && check_planarity_exact(d).is_none() && count_segments(d).is_ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn segment_count_matches_oracle(d in small_drawing()) {
        let fast = count_segments(&d).unwrap();
        prop_assert_eq!(Some(fast), min_segment_cover_bruteforce(&d));
        prop_assert!(fast >= lower_bounds(d.n(), &d.edges).max());
        prop_assert!(fast <= d.edges.len());
    }

    #[test]
    fn drawing_format_round_trips(d in small_drawing()) {
        prop_assert_eq!(GridDrawing::parse(&d.format()).unwrap(), d);
    }

    #[test]
    fn tree_drawings(n in 1usize..150, seed in any::<u64>()) {
        let g = generate_class(GraphClass::Tree, n, seed).unwrap();
        let d = draw_tree(&g, None).unwrap().drawing;
        prop_assert!(check_planarity_exact(&d).is_none());
        let s = count_segments(&d).unwrap();
        prop_assert!(4 * s <= 3 * n.saturating_sub(1) + 3);
        prop_assert!(s >= lower_bounds(n, &d.edges).odd_half);
        let k = n.next_power_of_two().trailing_zeros() as i32;
        prop_assert!(d.width() as f64 <= 2.0 * 2f64.powi(k) * n as f64);
        prop_assert!(d.height() as f64 <= 2.0 * 1.5f64.powi(k) * n as f64);
    }

    #[test]
    fn planar_3tree_invariants(n in 4usize..60, seed in any::<u64>()) {
        let g = generate_class(GraphClass::Planar3Tree, n, seed).unwrap();
        let out = draw_planar3tree(&g, true).unwrap();
        let d = &out.drawing;
        let o = out.realizer.outer;
        prop_assert_eq!(d.points[o.v1], (0, 0));
        prop_assert_eq!(d.points[o.v2], (n as i64 - 1, 0));
        prop_assert_eq!(d.width(), n as i64 - 1);
        prop_assert!(d.height() <= (n as i64 - 1) * out.lambda as i64);
        prop_assert_eq!(count_segments(&d.restricted_to(Tree::T1)).unwrap(), out.lambda);
        prop_assert!(check_planarity_exact(d).is_none());
        // lambda_n is one more than the interior leaves of T1 (vn is a leaf).
        prop_assert_eq!(out.lambda, out.realizer.leaf_counts()[0] + 1);
        let trace = StepTrace::parse(&out.trace.format()).unwrap();
        prop_assert_eq!(&replay(&g, &trace).unwrap(), d);
    }

    #[test]
    fn outerplanar_drawings(n in 3usize..80, seed in any::<u64>()) {
        let g = generate_class(GraphClass::MaximalOuterplanar, n, seed).unwrap();
        let out = draw_outerplanar(&g, false).unwrap();
        let d = &out.drawing;
        prop_assert_eq!(d.edges.len(), 2 * n - 3);
        prop_assert!(check_planarity_exact(d).is_none());
        prop_assert!(2 * count_segments(d).unwrap() <= 3 * n);
        prop_assert!(d.width() <= n as i64);
    }

    #[test]
    fn graph_format_round_trips(n in 3usize..40, seed in any::<u64>(), c in 0usize..5) {
        let class = [
            GraphClass::Tree,
            GraphClass::Planar3Tree,
            GraphClass::MaximalOuterplanar,
            GraphClass::Triangulation,
            GraphClass::PlanarOther,
        ][c];
        let g = generate_class(class, n.max(4), seed).unwrap();
        let back = parse_graph(&format_graph(&g)).unwrap();
        prop_assert_eq!(back.rotations(), g.rotations());
        if class != GraphClass::Triangulation && class != GraphClass::PlanarOther {
            prop_assert_eq!(classify(&g), class);
        }
    }

    #[test]
    fn realizers_and_orders(n in 4usize..50, seed in any::<u64>()) {
        let g = generate_class(GraphClass::Triangulation, n, seed).unwrap();
        let co = canonical_order(&g, g.outer_face().unwrap()).unwrap();
        prop_assert!(validate_canonical_order(&g, &co).is_ok());
        let r = schnyder_from_order(&g, &co);
        prop_assert!(r.check(&g).is_ok());
        let m = minimize_realizer(&g, &r);
        prop_assert!(m.check(&g).is_ok());
        let l: usize = m.leaf_counts().iter().sum();
        prop_assert!(l + m.delta0 <= 2 * n - 5);
        for t in Tree::ALL {
            let rot = m.with_tree_as(t, Tree::Tn);
            let o = order_from_tree(&rot, &g, Tree::T2, Direction::Cw);
            prop_assert!(validate_canonical_order(&g, &o).is_ok());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn triangulation_arc_drawings(n in 4usize..16, seed in any::<u64>()) {
        let g = generate_class(GraphClass::Triangulation, n, seed).unwrap();
        let d = draw_triangulation_arcs(&g, None).unwrap();
        let tol = Tolerances::default();
        prop_assert!(check_planarity_tol(&d, &tol).is_none());
        let (a, s) = primitive_counts(&d, &tol);
        prop_assert!(3 * (a + s) <= 5 * n - 11);
        let back = ArcDrawing::parse(&d.format()).unwrap();
        prop_assert_eq!(back.format(), d.format());
    }
}
