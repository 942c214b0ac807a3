mod common;

use common::{p, weyl_dimension};
use kr_crystals::cartan::{AffineFamily, AffineType, ClassicalType, Family};
use kr_crystals::classical::{Letter, Tableau};
use kr_crystals::crystal::{hat, max_part, Crystal};
use kr_crystals::kr::vertical::{PMDiagram, VerticalEngine};
use kr_crystals::kr::KrCrystal;
use kr_crystals::partition::{in_diamond_set, kr_components, lr_coefficient, Kind, Partition};
use kr_crystals::rowtab::*;
use kr_crystals::tensor::{Factor, TensorCrystal};
use std::collections::BTreeSet;
use std::sync::Arc;

const CAP: usize = 2_000_000;

fn ct(f: Family, n: usize) -> ClassicalType {
    ClassicalType { family: f, n }
}

#[test]
fn embedding_examples() {
    let d5 = ct(Family::D, 5);
    let rt = RowTab::new(d5, &p(&[1]), CAP).unwrap();
    assert_eq!(rt.apply(&Tableau::letter(1)).unwrap(), vec![vec![1]]);
    let rt = RowTab::new(d5, &p(&[2, 1]), CAP).unwrap();
    assert_eq!(rt.apply(&Tableau::highest(&p(&[2, 1]))).unwrap(), vec![vec![1, 1], vec![2]]);
    let rt = RowTab::new(d5, &p(&[2, 2]), CAP).unwrap();
    assert_eq!(rt.image.len() as u128, weyl_dimension(d5, &p(&[2, 2])));
    for x in 0..rt.source.len() {
        let t = &rt.source.vertices[x].0[0];
        assert_eq!(rt.invert(&rt.apply(t).unwrap()).unwrap(), *t);
    }
    assert!(RowTab::new(d5, &p(&[1, 1, 1, 1]), CAP).is_err());
}

#[test]
fn canonical_fillings() {
    let (n, nb) = (5 as Letter, -5 as Letter);
    assert_eq!(canonical_c_delta(Kind::Column, &p(&[1, 1]), 5).unwrap(), vec![vec![nb], vec![n]]);
    assert_eq!(canonical_c_delta(Kind::Row, &p(&[2]), 5).unwrap(), vec![vec![n, nb]]);
    assert_eq!(canonical_c_delta(Kind::Box, &p(&[3]), 5).unwrap(), vec![vec![n, 0, nb]]);
    assert!(canonical_c_delta(Kind::Row, &p(&[1]), 5).is_err());
    assert!(canonical_c_delta(Kind::Column, &p(&[1]), 5).is_err());
}

/// `A_{n-1}`-highest elements of `L^◇(ν,δ)` of weight `λ̄` are counted by
/// `c^ν_{δλ}`, and they are exactly the Yamanouchi fillings.
#[test]
fn l_set_highest_weights_follow_lr() {
    let n = 5;
    for kind in [Kind::Box, Kind::Row, Kind::Column] {
        let c = ct(family_of(kind), n);
        for size in 1..=5 {
            for nu in Partition::of_size(size, 3) {
                for d in 0..=size {
                    for delta in Partition::of_size(d, nu.len()) {
                        if !in_diamond_set(kind, &delta) || !delta.contained_in(&nu) {
                            continue;
                        }
                        let set = l_set(kind, &nu, &delta, n).unwrap();
                        let mut counts = std::collections::BTreeMap::new();
                        for rows in &set {
                            let e = to_element(rows);
                            let hw = (1..n).all(|i| e.e(c, i).is_none());
                            assert_eq!(hw, is_yamanouchi(rows, &delta, n), "{:?}", rows);
                            if hw {
                                *counts.entry(e.weight(n)).or_insert(0u64) += 1;
                            }
                        }
                        for m in 0..=size - d {
                            for lam in Partition::of_size(m, n) {
                                let w = kr_crystals::partition::barweight(&lam.to_weight(n));
                                let got = counts.get(&w).copied().unwrap_or(0);
                                assert_eq!(got, lr_coefficient(&delta, &lam, &nu), "{} ν={} δ={} λ={}", kind, nu, delta, lam);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// `rowtab_ν(B̂(ν)) = L^◇(ν)`, and `L^◇(ν)` is closed under `f_n`.
#[test]
fn hat_part_is_the_l_set() {
    let n = 5;
    for kind in [Kind::Box, Kind::Row, Kind::Column] {
        let c = ct(family_of(kind), n);
        for size in 1..=6 {
            for nu in Partition::of_size(size, 3) {
                if weyl_dimension(c, &nu) > 60_000 {
                    continue;
                }
                let rt = RowTab::new(c, &nu, CAP).unwrap();
                let mask = hat(&rt.source, n);
                let image: BTreeSet<RowTableau> = (0..rt.source.len())
                    .filter(|&x| mask[x])
                    .map(|x| from_element(&rt.image.vertices[rt.map[x] as usize]))
                    .collect();
                let l: BTreeSet<RowTableau> = l_set_all(kind, &nu, n).unwrap().into_iter().collect();
                assert_eq!(image, l, "{} ν={}", kind, nu);
                for rows in &l {
                    if let Some(x) = to_element(rows).f(c, n) {
                        assert!(l.contains(&from_element(&x)), "{} ν={} f_n", kind, nu);
                    }
                }
            }
        }
    }
}

#[test]
fn max_of_box_square_has_both_degree_two_parts() {
    let aff = AffineType::new(AffineFamily::D1, 5);
    let k: Factor = Arc::new(KrCrystal::new(&aff, 1, 1).unwrap());
    let t = TensorCrystal::new(vec![k.clone(), k]);
    let m = max_part(&t);
    let want = weyl_dimension(aff.classical, &p(&[2])) + weyl_dimension(aff.classical, &p(&[1, 1]));
    assert_eq!(m.iter().filter(|&&x| x).count() as u128, want);
    for b in 0..t.len() {
        if t.classical_colors().iter().all(|&i| t.e(i, b).is_none()) {
            assert_eq!(m[b], t.weight(b).iter().sum::<i32>() == 2);
        }
    }
}

/// `rowtab(b̄(r,s,λ))` has the explicit canonical form.
#[test]
fn row_tableaux_of_dual_highest_elements() {
    let n = 5;
    for (fam, kind) in [(AffineFamily::D1, Kind::Column), (AffineFamily::C1, Kind::Row), (AffineFamily::D2, Kind::Box)] {
        let aff = AffineType::new(fam, n);
        for r in 1..=2 {
            for s in 1..=3 {
                let k = KrCrystal::new(&aff, r, s).unwrap();
                let rt = RowTab::new(aff.classical, &Partition::rectangle(r, s), CAP).unwrap();
                for lam in kr_components(kind, n, r, s).unwrap() {
                    let got = rt.apply(k.tableau(k.b_bar(&lam).unwrap())).unwrap();
                    assert_eq!(got, rowtab_b_bar(kind, &lam, r, s, n).unwrap(), "{} B^{},{} λ={}", aff, r, s, lam);
                }
            }
        }
    }
}

/// The rotation rule agrees with `rowtab ∘ σ ∘ Φ` on every diagram.
#[test]
fn rotation_rule_matches_sigma_phi() {
    for (n, rmax, smax) in [(5, 2, 3), (6, 3, 2)] {
        let aff = AffineType::new(AffineFamily::D1, n);
        for r in 1..=rmax {
            for s in 1..=smax {
                let k = KrCrystal::new(&aff, r, s).unwrap();
                let sg = k.sigma().unwrap();
                let eng = VerticalEngine::new(aff.classical, r, s);
                let rt = RowTab::new(aff.classical, &Partition::rectangle(r, s), CAP).unwrap();
                for d in PMDiagram::all(r, s) {
                    let b = k.find(&eng.phi_fill(&d)).unwrap();
                    let got = rt.apply(k.tableau(sg[b])).expect("σΦ(P) lies in B(s^r)");
                    assert_eq!(got, rule_sigma_phi(&d, n, r, s), "n={} r={} s={}\n{}", n, r, s, d.picture());
                }
            }
        }
    }
}

fn parse_grid(text: &str) -> RowTableau {
    let mut rows: RowTableau = text
        .lines()
        .map(|l| {
            l.split_whitespace()
                .map(|t| match t.strip_prefix('~') {
                    Some(x) => -x.parse::<Letter>().unwrap(),
                    None => t.parse().unwrap(),
                })
                .collect()
        })
        .collect();
    rows.reverse();
    rows
}

#[test]
fn rotation_rule_worked_instance() {
    let cols = [(5, 5, 6), (4, 4, 4), (3, 4, 4), (2, 3, 4), (1, 1, 2), (0, 1, 2), (0, 0, 0)];
    let conj = |k: usize| Partition::new(cols.iter().map(|c| [c.0, c.1, c.2][k]).collect()).conjugate();
    let d = PMDiagram { inner: conj(0), middle: conj(1), outer: conj(2) };
    assert!(d.is_valid(6, 7));
    assert_eq!(d.outer, p(&[6, 6, 4, 4, 1, 1]));
    let want = parse_grid(
        "8 ~8 ~8 ~7 ~6 ~5 ~4
         8 9 ~8 ~8 ~7 ~6 ~5
         8 ~9 ~9 ~8 ~8 ~7 ~6
         8 8 9 ~8 ~8 ~8 ~7
         8 8 8 ~8 ~8 ~8 ~8
         8 8 8 9 ~8 ~8 ~8",
    );
    assert_eq!(rule_sigma_phi(&d, 9, 6, 7), want);
}
