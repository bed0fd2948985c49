mod common;

use beflow::bisection::{find_k_weak, is_k_weak};
use beflow::flow::FlowPoint;
use beflow::generate::generate_cubic;
use beflow::graph::bridges;
use beflow::orientation::{check_orientable, enumerate_bisections};
use beflow::rational::{int, ratio};
use beflow::region::{bed_of_graph, beds_by_bisection, midpoint_closed, region_equal, GRAPH_LIMIT};
use beflow::named;
use beflow::weak5::{
    construct_orientable_5weak_with, construct_with_factor, verify_certificate, ComponentKind, FactorDecomposition,
    VerifyDepth, Weak5Options, Weak5Stats,
};
use common::{connected_cubic, cubic};
use proptest::prelude::*;

fn grid() -> Vec<FlowPoint> {
    (0..=16).flat_map(|r| (0..=8).map(move |a| FlowPoint::new(int(2) + ratio(r, 4), ratio(a, 8)).unwrap())).collect()
}

#[test]
fn bridged_graph_with_4_weak_bisection_is_incomparable_with_petersen() {
    let g = generate_cubic(10, true)
        .unwrap()
        .into_iter()
        .find(|g| !bridges(g).is_empty() && find_k_weak(g, 4, true).unwrap().is_some())
        .expect("a bridged graph on 10 vertices has an orientable 4-weak bisection");
    let bed = bed_of_graph(&g).unwrap();
    assert!(bed.contains(&FlowPoint::frac(10, 3, 1, 3)));
    assert!(!bed.contains(&FlowPoint::frac(5, 1, 0, 1)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bisection_domains_are_convex_and_upward_closed(g in connected_cubic(2, 10)) {
        let pts: Vec<FlowPoint> = (0..=8)
            .flat_map(|r| (0..=4).map(move |a| FlowPoint::new(int(2) + ratio(r, 2), ratio(a, 4)).unwrap()))
            .collect();
        for (_, bed) in beds_by_bisection(&g, GRAPH_LIMIT).unwrap() {
            prop_assert!(midpoint_closed(&bed, &pts));
            let rs: Vec<_> = (0..=24).map(|r| int(2) + ratio(r, 4)).collect();
            prop_assert!(rs.windows(2).all(|w| bed.frontier_at(&w[0]) >= bed.frontier_at(&w[1])));
            for p in pts.iter().filter(|p| bed.contains(p)) {
                let up = FlowPoint::new(&p.r + ratio(1, 4), &p.alpha + ratio(1, 8)).unwrap();
                prop_assert!(bed.contains(&up));
            }
        }
    }

    #[test]
    fn union_laws(a in connected_cubic(2, 10), b in connected_cubic(2, 10)) {
        let (ra, rb) = (bed_of_graph(&a).unwrap(), bed_of_graph(&b).unwrap());
        let u = ra.union(&rb);
        prop_assert!(ra.is_subset_of(&u) && rb.is_subset_of(&u));
        prop_assert!(region_equal(&u, &rb.union(&ra)));
        prop_assert!(region_equal(&ra.union(&ra), &ra));
        for p in grid() {
            prop_assert_eq!(u.contains(&p), ra.contains(&p) || rb.contains(&p));
        }
    }

    #[test]
    fn weakness_is_monotone_in_k(g in connected_cubic(2, 10)) {
        for bis in enumerate_bisections(&g).unwrap().iter().take(40) {
            for k in 3..8 {
                if is_k_weak(&g, bis, k).unwrap().0 {
                    prop_assert!(is_k_weak(&g, bis, k + 1).unwrap().0);
                }
            }
        }
    }

    #[test]
    fn constructed_bisections_certify(g in cubic(2, 40)) {
        let opts = Weak5Options { depth: VerifyDepth::Debug, allow_fallback: false, ..Default::default() };
        let cert = construct_orientable_5weak_with(&g, &opts).unwrap();
        verify_certificate(&g, &cert).unwrap();
        let twos = cert.bisection.colors().iter().filter(|&&c| c == 2).count();
        prop_assert_eq!(2 * twos, g.n());
        prop_assert!(is_k_weak(&g, &cert.bisection, 5).unwrap().0);
        prop_assert!(check_orientable(&g, &cert.bisection).unwrap().is_orientable());
        for comp in &cert.components {
            let f = comp.factor.as_ref().unwrap();
            for part in f.components.iter().filter(|c| c.kind != ComponentKind::OddCycle) {
                let colors: Vec<u8> = part.vertices.iter().map(|&v| cert.bisection.color(comp.vertices[v])).collect();
                prop_assert!(colors.windows(2).all(|w| w[0] != w[1]), "{:?}", part);
            }
        }
        prop_assert_eq!(construct_orientable_5weak_with(&g, &opts).unwrap(), cert);
    }

    #[test]
    fn bicritical_triangle_under_relabelling(ids in Just((0..24).collect::<Vec<usize>>()).prop_shuffle()) {
        let g = named::triangle_hub().relabel(&ids);
        let factor: Vec<usize> = (0..3).chain(6..18).chain(30..36).collect();
        let f = FactorDecomposition::from_edges(&g, &factor).unwrap();
        let mut stats = Weak5Stats::default();
        let (bis, _) = construct_with_factor(&g, &f, VerifyDepth::Debug, &mut stats).unwrap();
        prop_assert!(stats.bicritical_checks > 0);
        prop_assert!(is_k_weak(&g, &bis, 5).unwrap().0);
        prop_assert!(check_orientable(&g, &bis).unwrap().is_orientable());
    }
}
