mod common;

use common::weyl_dimension;
use kr_crystals::cartan::{AffineFamily, AffineType};
use kr_crystals::crystal::Crystal;
use kr_crystals::kr::KrCrystal;
use kr_crystals::partition::kr_components;

fn coroot_pairing(aff: &AffineType, i: usize, w: &[i32]) -> i32 {
    let a = aff.root(i);
    let aa: i32 = a.iter().map(|x| x * x).sum();
    2 * a.iter().zip(w).map(|(x, y)| x * y).sum::<i32>() / aa
}

pub fn check_kr(k: &KrCrystal) {
    let aff = &k.aff;
    let comps = kr_components(aff.kind(), aff.n(), k.r, k.s).unwrap();
    let expect: u128 = comps.iter().map(|l| weyl_dimension(aff.classical, l)).sum();
    assert_eq!(k.len() as u128, expect, "{} B^{},{}", aff, k.r, k.s);
    let mut hw: Vec<_> = k.highest_weight_vertices(&k.classical_colors()).into_iter().map(|b| k.weight(b)).collect();
    hw.sort();
    let mut want: Vec<_> = comps.iter().map(|l| l.to_weight(aff.n())).collect();
    want.sort();
    assert_eq!(hw, want);
    assert!(k.is_connected(), "{} B^{},{} not connected", aff, k.r, k.s);
    let theta = aff.theta_over_a0();
    for b in 0..k.len() {
        let w = k.weight(b);
        for i in k.colors() {
            assert_eq!(k.phi(i, b) as i32 - k.eps(i, b) as i32, coroot_pairing(aff, i, &w), "{} color {} at {}", aff, i, k.label(b));
        }
        if let Some(x) = k.e(0, b) {
            let d: Vec<i32> = k.weight(x).iter().zip(&w).map(|(a, c)| a - c).collect();
            let neg: Vec<i32> = theta.iter().map(|t| -t).collect();
            assert_eq!(d, neg);
        }
    }
}

#[test]
fn small_kr_crystals() {
    for (fam, n) in [(AffineFamily::D1, 5), (AffineFamily::C1, 4), (AffineFamily::D2, 4), (AffineFamily::A1, 4)] {
        let aff = AffineType::new(fam, n);
        for r in 1..=2 {
            for s in 1..=3 {
                let t = std::time::Instant::now();
                let k = KrCrystal::new(&aff, r, s).unwrap();
                check_kr(&k);
                eprintln!("{} B^{},{}: {} vertices, {:?}", aff, r, s, k.len(), t.elapsed());
            }
        }
    }
}

#[test]
fn special_elements_and_sigma() {
    use kr_crystals::partition::lambda_min;
    for (fam, n) in [(AffineFamily::D1, 5), (AffineFamily::C1, 4), (AffineFamily::D2, 4)] {
        let aff = AffineType::new(fam, n);
        for r in 1..=2 {
            for s in 1..=3 {
                let k = KrCrystal::new(&aff, r, s).unwrap();
                let m = k.m().unwrap();
                assert_eq!(m, k.b_lambda(&lambda_min(aff.kind(), r, s)).unwrap());
                k.m_prime().unwrap();
                let d = k.dbar().unwrap();
                for lam in kr_components(aff.kind(), n, r, s).unwrap() {
                    let b = k.b_lambda(&lam).unwrap();
                    assert_eq!(d[b] as usize, (r * s - lam.size()) / aff.kind().size(), "{} B^{},{} λ={}", aff, r, s, lam);
                }
                let sg = k.sigma().unwrap();
                for b in 0..k.len() {
                    assert_eq!(sg[sg[b]], b);
                    for i in k.colors() {
                        let j = aff.sigma_color(i);
                        assert_eq!(k.e(i, b).map(|x| sg[x]), k.e(j, sg[b]), "{} B^{},{} σ e_{}", aff, r, s, i);
                    }
                    let w = k.weight(b);
                    assert_eq!(k.weight(sg[b]), kr_crystals::partition::barweight(&w));
                }
            }
        }
    }
}
