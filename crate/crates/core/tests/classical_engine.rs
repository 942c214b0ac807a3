mod common;

use common::{p, weyl_dimension};
use kr_crystals::cartan::{ClassicalType, Family};
use kr_crystals::classical::{ClassicalGraph, Element, Tableau};
use kr_crystals::partition::Partition;
use proptest::prelude::*;

fn max_len(ct: ClassicalType) -> usize {
    match ct.family {
        Family::A | Family::B | Family::C => ct.n,
        Family::D => ct.n - 2,
    }
}

fn check_axioms(g: &ClassicalGraph) {
    let ct = g.ctype;
    for v in 0..g.len() {
        let w = g.weight(v);
        for i in 1..=ct.num_colors() {
            if let Some(x) = g.fv(i, v) {
                assert_eq!(g.ev(i, x), Some(v));
            }
            let eps = g.eps(i, v) as i32;
            let phi = g.phi(i, v) as i32;
            assert_eq!(phi - eps, ct.pairing(i, &w), "{} at {}", ct, g.vertices[v]);
            assert_eq!(eps as u32, g.vertices[v].eps(ct, i));
            assert_eq!(phi as u32, g.vertices[v].phi(ct, i));
        }
    }
}

fn check_w0_invariant(g: &ClassicalGraph) {
    let ct = g.ctype;
    let mut weights: Vec<Vec<i32>> = (0..g.len()).map(|v| g.weight(v)).collect();
    weights.sort();
    for i in 1..=ct.num_colors() {
        let alpha = ct.simple_root(i);
        let mut refl: Vec<Vec<i32>> = weights
            .iter()
            .map(|w| {
                let c = ct.pairing(i, w);
                w.iter().zip(&alpha).map(|(x, a)| x - c * a).collect()
            })
            .collect();
        refl.sort();
        assert_eq!(refl, weights, "character not invariant under s_{}", i);
    }
}

#[test]
fn dimensions_match_weyl_formula() {
    for fam in [Family::A, Family::B, Family::C, Family::D] {
        let ranks: &[usize] = if fam == Family::D { &[4, 5] } else { &[2, 3, 4, 5] };
        for &n in ranks {
            let ct = ClassicalType::new(fam, n);
            for m in 1..=6 {
                for lam in Partition::of_size(m, max_len(ct)) {
                    let expect = weyl_dimension(ct, &lam);
                    if expect > 60_000 {
                        continue;
                    }
                    let g = ClassicalGraph::highest_weight(ct, &lam, 200_000).unwrap();
                    assert_eq!(g.len() as u128, expect, "{} {}", ct, lam);
                    assert_eq!(g.highest_weight_vertices(&g.all_colors()).len(), 1);
                    if g.len() < 3000 {
                        check_axioms(&g);
                        check_w0_invariant(&g);
                    }
                }
            }
        }
    }
}

#[test]
fn generated_examples() {
    let c3 = ClassicalType::new(Family::C, 3);
    assert_eq!(ClassicalGraph::highest_weight(c3, &p(&[1]), 100).unwrap().len(), 6);
    let a2 = ClassicalType::new(Family::A, 3);
    assert_eq!(ClassicalGraph::highest_weight(a2, &p(&[1]), 100).unwrap().len(), 3);
    let d4 = ClassicalType::new(Family::D, 4);
    assert_eq!(ClassicalGraph::highest_weight(d4, &p(&[1, 1]), 100).unwrap().len(), 28);
    assert!(ClassicalGraph::highest_weight(d4, &p(&[1, 1]), 10).is_err());
}

#[test]
fn d4_f4_on_column_34_stays_inside_the_component() {
    let d4 = ClassicalType::new(Family::D, 4);
    let g = ClassicalGraph::highest_weight(d4, &p(&[1, 1]), 100).unwrap();
    let col = Element::single(Tableau::from_columns(&[vec![3, 4]]));
    let v = g.index[&col] as usize;
    let image = g.fv(4, v).map(|w| g.vertices[w].clone());
    assert_eq!(image, Some(Element::single(Tableau::from_columns(&[vec![-4, 4]]))));
    assert_eq!(col.f(d4, 4), image);
}

fn tensor_graph(ct: ClassicalType, slots: usize) -> ClassicalGraph {
    let seed = Element::word(&vec![1; slots]);
    let mut seeds = vec![seed];
    let vec_letters = ClassicalGraph::highest_weight(ct, &p(&[1]), 100).unwrap();
    let letters: Vec<i8> = vec_letters.vertices.iter().map(|e| e.0[0].cells[0]).collect();
    let mut all = vec![vec![]];
    for _ in 0..slots {
        all = all
            .into_iter()
            .flat_map(|w: Vec<i8>| letters.iter().map(move |&x| [w.clone(), vec![x]].concat()))
            .collect();
    }
    seeds.extend(all.iter().map(|w| Element::word(w)));
    ClassicalGraph::generate(ct, &seeds, usize::MAX).unwrap()
}

#[test]
fn highest_weights_of_squares() {
    let a2 = ClassicalType::new(Family::A, 3);
    let g = tensor_graph(a2, 2);
    let hw: Vec<_> = g.highest_weight_vertices(&g.all_colors()).into_iter().map(|v| g.vertices[v].clone()).collect();
    assert_eq!(hw, vec![Element::word(&[1, 1]), Element::word(&[1, 2])]);
    let d4 = ClassicalType::new(Family::D, 4);
    let g = tensor_graph(d4, 2);
    let mut ws: Vec<_> = g.highest_weight_vertices(&g.all_colors()).into_iter().map(|v| g.weight(v)).collect();
    ws.sort();
    assert_eq!(ws, vec![vec![0, 0, 0, 0], vec![1, 1, 0, 0], vec![2, 0, 0, 0]]);
}

#[test]
fn tensor_highest_weight_rule() {
    for ct in [ClassicalType::new(Family::B, 3), ClassicalType::new(Family::D, 4), ClassicalType::new(Family::C, 3)] {
        let g = tensor_graph(ct, 2);
        let colors = g.all_colors();
        for comp in g.components(&colors) {
            let hw: Vec<_> = comp.iter().copied().filter(|&v| colors.iter().all(|&i| g.ev(i, v).is_none())).collect();
            assert_eq!(hw.len(), 1);
            let c1 = &g.vertices[hw[0]].0[0];
            assert!(colors.iter().all(|&i| Element::single(c1.clone()).e(ct, i).is_none()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regrouping_a_word_keeps_the_signature(word in proptest::collection::vec(prop_oneof![1i8..=4, -4i8..=-1], 3..6), i in 1usize..=4) {
        let ct = ClassicalType::new(Family::C, 4);
        let flat = Element::word(&word);
        let (a, b) = word.split_at(1);
        let f1 = flat.f(ct, i);
        let e1 = flat.e(ct, i);
        if let Some(x) = &f1 {
            prop_assert_eq!(x.e(ct, i), Some(flat.clone()));
        }
        if let Some(x) = &e1 {
            prop_assert_eq!(x.f(ct, i), Some(flat.clone()));
        }
        let sig_split = {
            let l = Element::word(a);
            let r = Element::word(b);
            kr_crystals::classical::signature([(l.eps(ct, i), l.phi(ct, i)), (r.eps(ct, i), r.phi(ct, i))])
        };
        let whole = flat.signature(ct, i).0;
        prop_assert_eq!((sig_split.eps, sig_split.phi), (whole.eps, whole.phi));
        let acts_left = whole.f_pos.map(|k| k < a.len());
        prop_assert_eq!(acts_left, sig_split.f_pos.map(|k| k == 0));
    }
}
