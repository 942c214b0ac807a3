use kr_crystals::cartan::{AffineFamily, AffineType};
use kr_crystals::classical::Tableau;
use kr_crystals::crystal::{tops, Crystal};
use kr_crystals::energy::EnergyContext;
use kr_crystals::partition::RectangleList;
use kr_crystals::splitting::*;
use std::collections::HashSet;

const TYPES: [(AffineFamily, usize); 3] = [(AffineFamily::D1, 5), (AffineFamily::C1, 4), (AffineFamily::D2, 4)];

fn rl(v: &[(usize, usize)]) -> RectangleList {
    RectangleList::new(v.to_vec())
}

#[test]
fn anchor_and_minimal_element() {
    let ctx = EnergyContext::new(AffineType::new(AffineFamily::D1, 5));
    let sp = Splitter::new(&ctx);
    let u = ctx.kr((2, 2)).unwrap().u().unwrap();
    let (b1, b2) = sp.row_split(2, 2).unwrap().map[u];
    assert_eq!(b1, ctx.kr((1, 2)).unwrap().u().unwrap());
    assert_eq!(*ctx.kr((1, 2)).unwrap().tableau(b2), Tableau::from_rows(&[vec![2, 2]]));
    assert!(sp.row_split(1, 2).is_err());
    for (fam, n) in TYPES {
        let ctx = EnergyContext::new(AffineType::new(fam, n));
        let sp = Splitter::new(&ctx);
        for s in 1..=3 {
            let m = ctx.kr((2, s)).unwrap().m().unwrap();
            assert_eq!(sp.row_split(2, s).unwrap().map[m].0, ctx.kr((1, s)).unwrap().m().unwrap(), "{} s={}", ctx.aff, s);
        }
    }
}

#[test]
fn row_split_is_an_injective_classical_morphism() {
    for (fam, n) in TYPES {
        let ctx = EnergyContext::new(AffineType::new(fam, n));
        let sp = Splitter::new(&ctx);
        for s in 1..=3 {
            let k = ctx.kr((2, s)).unwrap();
            let map = &sp.row_split(2, s).unwrap().map;
            let image: HashSet<_> = map.iter().collect();
            assert_eq!(image.len(), k.len());
            let t = ctx.tensor(&rl(&[(1, s), (1, s)])).unwrap();
            for b in 0..k.len() {
                let tb = t.encode(&[map[b].0, map[b].1]);
                for i in k.classical_colors() {
                    let via = k.e(i, b).map(|x| t.encode(&[map[x].0, map[x].1]));
                    assert_eq!(via, t.e(i, tb), "{} B^2,{} e_{}", ctx.aff, s, i);
                    let via = k.f(i, b).map(|x| t.encode(&[map[x].0, map[x].1]));
                    assert_eq!(via, t.f(i, tb));
                }
            }
        }
    }
}

#[test]
fn full_row_split_bookkeeping() {
    let ctx = EnergyContext::new(AffineType::new(AffineFamily::D1, 5));
    let sp = Splitter::new(&ctx);
    let rows = rl(&[(1, 2), (1, 1)]);
    let t = ctx.tensor(&rows).unwrap();
    for b in 0..t.len() {
        let v = t.decode(b);
        assert_eq!(state_vertices(&sp.full_row_split(&rows, &v).unwrap()), v);
    }
    let r = rl(&[(2, 1), (1, 1)]);
    assert_eq!(rows_of(&r), vec![(1, 1); 3]);
    let st = sp.full_row_split(&r, &[0, 0]).unwrap();
    assert_eq!(state_rects(&st), rl(&[(1, 1), (1, 1), (1, 1)]));
}

/// The two step orders agree wherever they were compared.
#[test]
fn split_order_independence() {
    for (fam, n) in TYPES {
        let ctx = EnergyContext::new(AffineType::new(fam, n));
        let sp = Splitter::new(&ctx);
        for r in [rl(&[(2, 1), (2, 1)]), rl(&[(2, 1), (2, 2)]), rl(&[(1, 2), (2, 1), (2, 1)])] {
            let t = ctx.tensor(&r).unwrap();
            for b in 0..t.len() {
                let v = t.decode(b);
                let a = sp.full_row_split_with(&r, &v, SplitOrder::LeftmostFirst).unwrap();
                let c = sp.full_row_split_with(&r, &v, SplitOrder::RightmostFirst).unwrap();
                assert_eq!(a, c, "{} {} at {}", ctx.aff, r, t.label(b));
            }
        }
    }
}

fn rect_lists() -> Vec<RectangleList> {
    let base = [(1, 1), (1, 2), (2, 1), (2, 2)];
    let mut out: Vec<RectangleList> = base.iter().map(|&x| rl(&[x])).collect();
    for &a in &base {
        for &b in &base {
            out.push(rl(&[a, b]));
        }
    }
    out
}

/// Splitting preserves energy, one step at a time and all the way to rows.
#[test]
fn splitting_preserves_energy() {
    for (fam, n) in TYPES {
        let ctx = EnergyContext::new(AffineType::new(fam, n));
        let sp = Splitter::new(&ctx);
        for r in rect_lists() {
            if r.rects().iter().all(|x| x.0 == 1) {
                continue;
            }
            let t = ctx.tensor(&r).unwrap();
            let hw = ctx.highest_elements(&r).unwrap();
            for v in hw {
                let d = ctx.energy_tensor(&r, &v).unwrap();
                let one = sp.split_step(&r, &v).unwrap().unwrap();
                assert_eq!(ctx.energy_tensor(&state_rects(&one), &state_vertices(&one)).unwrap(), d, "{} {} S at {}", ctx.aff, r, t.label(t.encode(&v)));
                let all = sp.full_row_split(&r, &v).unwrap();
                assert_eq!(ctx.energy_tensor(&state_rects(&all), &state_vertices(&all)).unwrap(), d, "{} {} 𝕊", ctx.aff, r);
            }
        }
    }
}

#[test]
fn box_split_examples() {
    let ctx = EnergyContext::new(AffineType::new(AffineFamily::D2, 4));
    let sp = Splitter::new(&ctx);
    let b11 = ctx.kr((1, 1)).unwrap();
    let (one, bar, empty) = (
        b11.find(&Tableau::letter(1)).unwrap(),
        b11.find(&Tableau::letter(-1)).unwrap(),
        b11.find(&Tableau::empty()).unwrap(),
    );
    for s in 1..=4 {
        let k = ctx.kr((1, s)).unwrap();
        for p in 0..=s {
            let b = k.find(&Tableau::from_rows(&[vec![1; p]])).unwrap();
            let m = (s - p) / 2;
            let mut want = vec![one; p + m];
            if (s - p) % 2 == 1 {
                want.push(empty);
            }
            want.extend(vec![bar; m]);
            assert_eq!(sp.box_split_row(s, b).unwrap(), want, "s={} p={}", s, p);
        }
    }
    let k = ctx.kr((1, 3)).unwrap();
    let b = k.find(&Tableau::from_rows(&[vec![1, 2, -3]])).unwrap();
    let want: Vec<usize> = [-3, 2, 1].iter().map(|&x| b11.find(&Tableau::letter(x)).unwrap()).collect();
    assert_eq!(sp.box_split_row(3, b).unwrap(), want);
}

#[test]
fn box_split_preserves_coenergy() {
    for (fam, n) in TYPES {
        let ctx = EnergyContext::new(AffineType::new(fam, n));
        let sp = Splitter::new(&ctx);
        for r in [rl(&[(1, 2), (1, 1)]), rl(&[(1, 3)]), rl(&[(1, 1), (1, 2)])] {
            let t = ctx.tensor(&r).unwrap();
            for b in 0..t.len() {
                let v = t.decode(b);
                let st = sp.box_split(&r, &v).unwrap();
                assert_eq!(
                    ctx.dbar_tensor(&state_rects(&st), &state_vertices(&st)).unwrap(),
                    ctx.dbar_tensor(&r, &v).unwrap(),
                    "{} {} at {}",
                    ctx.aff,
                    r,
                    t.label(b)
                );
            }
        }
    }
}

/// `𝕊∘σ = σ∘𝕊` and `spl∘σ = σ∘spl` on `tops(B^R)`.
#[test]
fn splittings_commute_with_sigma() {
    for (fam, n) in TYPES {
        let ctx = EnergyContext::new(AffineType::new(fam, n));
        let sp = Splitter::new(&ctx);
        for r in [rl(&[(2, 2)]), rl(&[(2, 1), (1, 1)]), rl(&[(1, 2), (2, 1)]), rl(&[(2, 1), (1, 2)])] {
            let t = ctx.tensor(&r).unwrap();
            let mask = tops(&t, n);
            for b in (0..t.len()).filter(|&b| mask[b]) {
                let v = t.decode(b);
                let sv = ctx.sigma_tensor(&r, &v).unwrap();
                for split in [0, 1] {
                    let f = |x: &[usize]| if split == 0 { sp.full_row_split(&r, x) } else { sp.box_split(&r, x) };
                    let a = f(&sv).unwrap();
                    let c = f(&v).unwrap();
                    let sc = ctx.sigma_tensor(&state_rects(&c), &state_vertices(&c)).unwrap();
                    assert_eq!(state_vertices(&a), sc, "{} {} split {} at {}", ctx.aff, r, split, t.label(b));
                }
            }
        }
    }
}
