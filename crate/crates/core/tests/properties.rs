use proptest::prelude::*;
use thresholdkit_core::constructive::{
    color_girth10, color_hex_grid, color_octsquare_grid, color_tree,
};
use thresholdkit_core::graph::generate_grid;
use thresholdkit_core::interval::{coloring_to_intervals, intervals_to_coloring, recognize};
use thresholdkit_core::{
    normalize, verify, EdgeLabeling, Graph, GridKind, GridSpec, Label, ThresholdColoring,
};

fn tree(parents: &[usize]) -> Graph {
    let edges: Vec<_> = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| (p % (i + 1), i + 1))
        .collect();
    Graph::new(parents.len() + 1, edges).unwrap()
}

fn labeling(g: &Graph, bits: &[bool]) -> EdgeLabeling {
    EdgeLabeling::new(
        (0..g.edge_count())
            .map(|i| {
                if bits[i % bits.len()] {
                    Label::Near
                } else {
                    Label::Far
                }
            })
            .collect(),
    )
}

prop_compose! {
    fn small_graph()(n in 1usize..9)(n in Just(n), bits in prop::collection::vec(any::<bool>(), n * n)) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| bits[u * n + v])
            .collect();
        Graph::new(n, edges).unwrap()
    }
}

proptest! {
    #[test]
    fn shifting_colors_keeps_the_verdict(
        g in small_graph(),
        colors in prop::collection::vec(-5i64..5, 8),
        bits in prop::collection::vec(any::<bool>(), 1..30),
        t in 0i64..3,
        k in -20i64..20,
    ) {
        let l = labeling(&g, &bits);
        let c = ThresholdColoring::new(10, t, colors[..g.n()].to_vec()).unwrap();
        prop_assert_eq!(verify(&g, &l, &c).unwrap(), verify(&g, &l, &c.shifted(k)).unwrap());
    }

    #[test]
    fn verify_ignores_edge_orientation(
        g in small_graph(),
        colors in prop::collection::vec(1i64..6, 8),
        bits in prop::collection::vec(any::<bool>(), 1..30),
    ) {
        let l = labeling(&g, &bits);
        let flipped = Graph::new(g.n(), g.edges().iter().rev().map(|&(u, v)| (v, u)).collect::<Vec<_>>()).unwrap();
        let near: Vec<_> = l.edges_with(&g, Label::Near).collect();
        let lf = EdgeLabeling::from_near(&flipped, &near).unwrap();
        let c = ThresholdColoring::new(5, 1, colors[..g.n()].to_vec()).unwrap();
        prop_assert_eq!(
            verify(&g, &l, &c).unwrap().is_valid(),
            verify(&flipped, &lf, &c).unwrap().is_valid()
        );
    }

    #[test]
    fn normalize_is_idempotent(colors in prop::collection::vec(-50i64..50, 1..12), t in 0i64..4) {
        let c = ThresholdColoring::new(1, t, colors).unwrap();
        let once = normalize(&c);
        prop_assert_eq!(&normalize(&once), &once);
        prop_assert_eq!(once.colors().iter().min(), Some(&1));
    }

    #[test]
    fn trees_get_valid_colorings(
        parents in prop::collection::vec(any::<usize>(), 0..60),
        bits in prop::collection::vec(any::<bool>(), 1..60),
    ) {
        let g = tree(&parents);
        let l = labeling(&g, &bits);
        let c = color_tree(&g, &l).unwrap();
        prop_assert!(verify(&g, &l, &c).unwrap().is_valid());
        prop_assert_eq!((c.range(), c.threshold()), (2, 0));
        let c = color_girth10(&g, &l).unwrap();
        prop_assert!(verify(&g, &l, &c).unwrap().is_valid());
    }

    #[test]
    fn grid_colorers_are_sound(
        rows in 1usize..5,
        cols in 1usize..5,
        bits in prop::collection::vec(any::<bool>(), 1..200),
    ) {
        for (kind, colorer) in [
            (GridKind::Hexagonal, color_hex_grid as fn(&Graph, &EdgeLabeling) -> _),
            (GridKind::OctagonalSquare, color_octsquare_grid),
        ] {
            let g = generate_grid(GridSpec::new(kind, rows, cols).unwrap()).unwrap();
            let l = labeling(&g, &bits);
            let c = colorer(&g, &l).unwrap();
            prop_assert!(verify(&g, &l, &c).unwrap().is_valid());
            prop_assert_eq!((c.range(), c.threshold()), (5, 1));
        }
    }

    #[test]
    fn coloring_intervals_round_trip(colors in prop::collection::vec(1i64..12, 1..10), t in 0i64..4) {
        let n = colors.len();
        let c = ThresholdColoring::new(11, t, colors).unwrap();
        let near: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| (c.color(u) - c.color(v)).abs() <= t)
            .collect();
        let h = Graph::new(n, near).unwrap();
        let rep = coloring_to_intervals(&c);
        prop_assert!(rep.represents(&h));
        let back = intervals_to_coloring(&rep);
        let k = Graph::complete(n);
        let l = EdgeLabeling::from_fn(&k, |u, v| if h.has_edge(u, v) { Label::Near } else { Label::Far });
        prop_assert!(verify(&k, &l, &back).unwrap().is_valid());
        prop_assert!(recognize(&h).is_some());
    }
}
