//! The library against brute-force references on every fixture.

mod common;

use std::collections::BTreeSet;

use flowtri::fixtures;
use flowtri::graph::{enumerate_integer_flows, flow_supporting_subgraph};
use flowtri::io::Prepared;
use flowtri::oracle::{brute_force_maximal_simplices, volume_by_ehrhart};
use flowtri::rational::{int, Rational};
use flowtri::triangulation::*;
use flowtri::FramedNetwork;
use num_bigint::BigInt;

fn each_fixture(mut check: impl FnMut(&str, &Prepared, &FramedNetwork)) {
    for (name, text) in fixtures::ALL {
        let p = fixtures::load(text).unwrap();
        check(name, &p, p.network().unwrap());
    }
}

fn paths(net: &FramedNetwork, l: &flowtri::Layering) -> common::Lay {
    l.routes().iter().map(|&r| net.route(r).edges().to_vec()).collect()
}

#[test]
fn compatibility_matches_definition() {
    each_fixture(|name, _, net| {
        for a in 0..net.routes().len() {
            for b in 0..net.routes().len() {
                let want = common::compatible(net, net.route(a).edges(), net.route(b).edges());
                assert_eq!(net.compatible(a, b), want, "{name}: {} vs {}", net.route_label(a), net.route_label(b));
            }
        }
    });
}

#[test]
fn post_order_is_a_total_preorder() {
    each_fixture(|name, _, net| {
        let dag = net.dag();
        for v in 0..dag.vertex_count() {
            let through: Vec<&[usize]> = net
                .routes()
                .iter()
                .map(|r| r.edges())
                .filter(|e| e.iter().any(|&x| dag.edge(x).tail == v))
                .collect();
            for p in &through {
                for q in &through {
                    let pq = flowtri::framing::compare_post(dag, net.framing(), v, p, q).unwrap();
                    assert_eq!(pq, common::post(net, v, p, q), "{name}");
                    assert_eq!(pq.reverse(), flowtri::framing::compare_post(dag, net.framing(), v, q, p).unwrap());
                    for r in &through {
                        let qr = common::post(net, v, q, r);
                        if pq.is_le() && qr.is_le() {
                            assert!(common::post(net, v, p, r).is_le(), "{name}: not transitive");
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn layerings_match_exhaustive_enumeration() {
    each_fixture(|name, p, net| {
        let got: Vec<common::Lay> = net.enumerate_layerings().iter().map(|l| paths(net, l)).collect();
        assert_eq!(got, common::layerings(net), "{name}");
        // Layerings biject with integer points of the base polytope.
        assert_eq!(got.len(), common::integer_flows(&p.base, &p.base_netflow, 1).len(), "{name}");
    });
}

#[test]
fn integer_flow_enumeration_matches_naive_search() {
    each_fixture(|name, p, _| {
        for t in 0..=2u32 {
            let naive = common::integer_flows(&p.base, &p.base_netflow, t as i64);
            assert_eq!(enumerate_integer_flows(&p.base, &p.base_netflow, t), naive, "{name} t={t}");
        }
    });
}

#[test]
fn flow_support_matches_integer_points() {
    each_fixture(|name, p, net| {
        let dag = net.dag();
        let used: BTreeSet<usize> = (1..=2)
            .flat_map(|t| common::integer_flows(dag, net.netflow(), t))
            .flat_map(|f| f.into_iter().enumerate().filter(|(_, x)| *x > 0).map(|(e, _)| e))
            .collect();
        assert_eq!(used.len(), dag.edge_count(), "{name}: core has an unused edge");
        let again = flow_supporting_subgraph(dag, net.netflow());
        assert_eq!(again.edge_map, (0..dag.edge_count()).collect::<Vec<_>>(), "{name}: not idempotent");
        let _ = p;
    });
}

#[test]
fn route_clique_decomposition_is_the_unique_one() {
    each_fixture(|name, _, net| {
        let ls = net.enumerate_layerings();
        let mut flows: Vec<Vec<Rational>> = Vec::new();
        for (i, a) in ls.iter().enumerate() {
            for b in &ls[i..] {
                let ia = net.layering_indicator(a);
                let ib = net.layering_indicator(b);
                flows.push(ia.iter().zip(&ib).map(|(x, y)| int(x + 2 * y)).collect());
            }
        }
        for f in flows.iter().take(40) {
            let all = common::route_clique_combinations(net, f);
            assert_eq!(all.len(), 1, "{name}: combinations are not unique");
            let got: Vec<(Vec<usize>, Rational)> = net
                .route_clique_decompose(f)
                .unwrap()
                .terms
                .into_iter()
                .map(|(r, a)| (net.route(r).edges().to_vec(), a))
                .collect();
            let mut want = all[0].clone();
            want.sort();
            let mut got_sorted = got.clone();
            got_sorted.sort();
            assert_eq!(got_sorted, want, "{name}");
            assert_eq!(net.route_clique_decompose_by_cliques(f).unwrap(), net.route_clique_decompose(f).unwrap());
        }
    });
}

#[test]
fn min_layering_matches_exhaustive_minimum() {
    each_fixture(|name, _, net| {
        let all = common::layerings(net);
        let n = net.routes().len().min(12);
        for mask in 1u32..(1 << n) {
            let avail: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let set: BTreeSet<Vec<usize>> = avail.iter().map(|&r| net.route(r).edges().to_vec()).collect();
            let want = all.iter().find(|l| l.iter().all(|p| set.contains(p)));
            let got = net.min_layering_within(&avail).map(|l| paths(net, &l));
            assert_eq!(got.as_ref(), want, "{name}");
        }
    });
}

#[test]
fn simplex_conditions_match_definition() {
    each_fixture(|name, _, net| {
        let ls = net.enumerate_layerings();
        let all = common::layerings(net);
        let n = ls.len().min(9);
        for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let lib: BTreeSet<u8> = is_layering_simplex(net, &members.iter().map(|&i| ls[i].clone()).collect::<Vec<_>>())
                .violations
                .iter()
                .map(|v| v.condition())
                .collect();
            let refs: Vec<&common::Lay> = members.iter().map(|&i| &all[i]).collect();
            assert_eq!(lib, common::simplex_violations(net, &all, &refs), "{name} {members:?}");
        }
    });
}

#[test]
fn triangulation_matches_subset_search() {
    each_fixture(|name, p, net| {
        let tri = maximal_simplices(&p.core).unwrap();
        let all = common::layerings(net);
        assert_eq!(tri.simplices(), common::maximal_simplices(net, &all), "{name}");
        let size = (tri.dimension() + 1) as usize;
        assert!(tri.simplices().iter().all(|s| s.len() == size), "{name}: cardinality");
        assert_eq!(brute_force_maximal_simplices(net, size).unwrap(), tri.simplices(), "{name}");
        assert_eq!(volume_by_ehrhart(&p.base, &p.base_netflow, tri.dimension()), BigInt::from(tri.volume()), "{name}");
    });
}

#[test]
fn flag_and_hasse_match_brute_force() {
    each_fixture(|name, p, _| {
        let tri = maximal_simplices(&p.core).unwrap();
        assert_eq!(flag_check(&tri), common::is_flag(tri.layerings().len(), tri.simplices()), "{name}");
        let dual = dual_graph(&tri);
        let report = hasse_check(&tri, &dual);
        assert_eq!(report.any_orientation, Some(common::some_orientation_is_hasse(dual.nodes, &dual.edges)), "{name}");
        if report.orientation_is_hasse {
            assert_eq!(report.any_orientation, Some(true));
        }
    });
}

#[test]
fn noncrossing_cliques_match_simplices_when_well_ordered() {
    each_fixture(|name, p, net| {
        if !is_well_ordered(net).well_ordered {
            return;
        }
        let tri = maximal_simplices(&p.core).unwrap();
        assert_eq!(maximal_cliques_noncrossing(net).unwrap(), tri.simplices(), "{name}");
    });
}

#[test]
fn brute_force_guard() {
    let p = fixtures::load(fixtures::CONS).unwrap();
    let net = p.network().unwrap();
    assert!(brute_force_maximal_simplices(net, 6).unwrap().is_empty());
    assert!(brute_force_maximal_simplices(net, 0).unwrap().is_empty());
}
