mod common;

use bondage_core::bondage::bondage_number;
use bondage_core::domination::{domination_number, is_dominating};
use bondage_core::embedding::{trace_faces, RotationSystem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

#[test]
fn domination_matches_brute_force() {
    let mut graphs = small_graphs();
    graphs.extend(catalog("connected_n8_sample.g6"));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    graphs.extend((0..200).map(|i| random_graph(&mut rng, 8, 0.1 + 0.004 * i as f64)));
    for g in &graphs {
        let set = domination_number(g);
        assert_eq!(set.size(), brute_gamma(g), "{g:?}");
        assert!(is_dominating(g, &set.members).unwrap());
    }
}

#[test]
fn bondage_matches_naive_search_on_connected_graphs() {
    let mut checked = 0;
    for g in small_graphs()
        .iter()
        .filter(|g| g.n() <= 6 && g.n() >= 2 && g.is_connected())
    {
        let res = bondage_number(g, None).unwrap();
        assert_eq!(res.b, naive_bondage(g), "{g:?}");
        assert_eq!(res.witness.len(), res.b);
        let after = g.remove_edges(&res.witness).unwrap();
        assert!(brute_gamma(&after) > brute_gamma(g));
        checked += 1;
    }
    assert_eq!(checked, 142);
}

#[test]
fn bondage_of_disconnected_graphs_matches_naive_search() {
    for g in small_graphs()
        .iter()
        .filter(|g| g.n() <= 6 && g.m() > 0 && !g.is_connected())
    {
        assert_eq!(
            bondage_number(g, None).unwrap().b,
            naive_bondage(g),
            "{g:?}"
        );
    }
}

#[test]
fn girth_matches_brute_force() {
    for g in small_graphs() {
        assert_eq!(g.girth().finite(), brute_girth(&g), "{g:?}");
    }
}

#[test]
fn orientable_faces_match_orbit_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..400 {
        let g = random_connected(&mut rng, 2 + i % 9, 0.35);
        let order = random_order(&mut rng, &g);
        let r = RotationSystem::new(&g, order.clone(), vec![1; g.m()]).unwrap();
        let mut ours = trace_faces(&g, &r).unwrap().degrees();
        ours.sort_unstable();
        assert_eq!(ours, orbit_faces(&order), "{g:?} {order:?}");
    }
}

#[test]
fn known_bondage_numbers() {
    // cycles: 3 when n = 1 mod 3, else 2
    for n in 3..=12 {
        let g = bondage_core::graph::families::cycle(n).unwrap();
        let expected = if n % 3 == 1 { 3 } else { 2 };
        assert_eq!(bondage_number(&g, None).unwrap().b, expected, "C{n}");
    }
    // paths: 2 when n = 1 mod 3, else 1
    for n in 2..=12 {
        let g = bondage_core::graph::families::path(n).unwrap();
        let expected = if n % 3 == 1 { 2 } else { 1 };
        assert_eq!(bondage_number(&g, None).unwrap().b, expected, "P{n}");
    }
    let petersen = bondage_core::graph::families::petersen().unwrap();
    assert_eq!(bondage_number(&petersen, None).unwrap().b, 3);
}

/// Every rotation system of `g`, with no vertex pinned.
fn all_orders(g: &bondage_core::Graph) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        let cyclic: Vec<Vec<usize>> = if nbrs.len() <= 2 {
            vec![nbrs.to_vec()]
        } else {
            let mut perms = Vec::new();
            permute(&mut nbrs[1..].to_vec(), 0, &mut |p| {
                perms.push(std::iter::once(nbrs[0]).chain(p.iter().copied()).collect())
            });
            perms
        };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                cyclic.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

fn order_count(g: &bondage_core::Graph) -> u128 {
    (0..g.n())
        .map(|v| (1..g.neighbors(v).len().max(1) as u128).product::<u128>())
        .product()
}

#[test]
fn max_euler_characteristic_matches_unpinned_enumeration() {
    use bondage_core::embedding::max_euler_characteristic;
    let mut checked = 0;
    for g in small_graphs()
        .iter()
        .filter(|g| g.n() >= 2 && g.is_connected())
    {
        if order_count(g) > 20_000 {
            continue;
        }
        let faces = all_orders(g)
            .iter()
            .map(|o| orbit_faces(o).len())
            .max()
            .unwrap();
        let brute = g.n() as i64 - g.m() as i64 + faces as i64;
        assert_eq!(
            max_euler_characteristic(g, 1_000_000, false).unwrap(),
            brute,
            "{g:?}"
        );
        checked += 1;
    }
    assert!(checked > 700, "{checked}");
}

#[test]
fn signed_search_matches_full_enumeration() {
    use bondage_core::embedding::{euler_characteristic, max_euler_characteristic};
    let mut checked = 0;
    for g in small_graphs()
        .iter()
        .filter(|g| g.n() >= 3 && g.is_connected())
    {
        if order_count(g) << g.m() > 40_000 {
            continue;
        }
        let mut best = i64::MIN;
        for order in all_orders(g) {
            for mask in 0u32..(1 << g.m()) {
                let sig = (0..g.m())
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                let r = RotationSystem::new(g, order.clone(), sig).unwrap();
                best = best.max(euler_characteristic(g, &r).unwrap());
            }
        }
        assert_eq!(
            max_euler_characteristic(g, 1_000_000, true).unwrap(),
            best,
            "{g:?}"
        );
        checked += 1;
    }
    assert!(checked > 50, "{checked}");
}
