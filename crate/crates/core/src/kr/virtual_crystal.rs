//! Kinds `(2)` and `(1)` realized as virtual crystals inside kind-`(1,1)`
//! KR crystals of type `A_{2n+1}^{(2)}`.
//!
//! `C_n^{(1)}` sits in `B^{r,s}` and `D_{n+1}^{(2)}` in `B^{r,2s}` of the
//! ambient type. Virtual operators: `e_0 ↦ e_0 e_1`, and `e_i ↦ e_{i+1}`
//! for `i ≥ 1`, squared for `i < n` in the `D_{n+1}^{(2)}` case. Virtual
//! elements are then relabeled by KN tableaux through the classical
//! highest weights.

use super::vertical::VerticalEngine;
use super::KrError;
use crate::cartan::{AffineFamily, ClassicalType, Family};
use crate::classical::Tableau;
use crate::partition::Partition;
use std::collections::{HashMap, VecDeque};

struct Virtual {
    fam: AffineFamily,
    n: usize,
    amb: ClassicalType,
    engine: VerticalEngine,
}

impl Virtual {
    fn mult(&self, i: usize) -> usize {
        if self.fam == AffineFamily::D2 && i >= 1 && i < self.n {
            2
        } else {
            1
        }
    }

    fn op(&self, i: usize, t: &Tableau, raise: bool) -> Option<Tableau> {
        let amb = self.amb;
        let step = |c: usize, x: &Tableau| -> Option<Tableau> {
            match (c, raise) {
                (0, true) => self.engine.e0(x),
                (0, false) => self.engine.f0(x),
                (c, true) => x.e(amb, c),
                (c, false) => x.f(amb, c),
            }
        };
        if i == 0 {
            let x = step(1, t);
            let y = step(0, t);
            assert_eq!(x.is_some(), y.is_some(), "virtual 0-string misaligned at {}", t);
            let z = step(0, &x?);
            assert!(z.is_some(), "virtual 0-arrow incomplete at {}", t);
            return z;
        }
        let first = step(i + 1, t)?;
        (1..self.mult(i)).fold(Some(first), |acc, _| {
            let y = step(i + 1, acc.as_ref().unwrap());
            assert!(y.is_some(), "virtual {}-arrow incomplete at {}", i, t);
            y
        })
    }

    fn weight(&self, t: &Tableau) -> Vec<i32> {
        let w = t.weight(self.amb.n);
        let d = if self.fam == AffineFamily::D2 { 2 } else { 1 };
        w[1..]
            .iter()
            .map(|&x| {
                assert_eq!(x % d, 0, "virtual weight not divisible at {}", t);
                x / d
            })
            .collect()
    }
}

/// Builds the vertex set of `B^{r,s}` for `C_n^{(1)}` or `D_{n+1}^{(2)}` as
/// KN tableaux, together with the `f_0` image of each vertex.
pub fn build(fam: AffineFamily, n: usize, r: usize, s: usize, cap: usize) -> Result<Vec<(Tableau, Option<Tableau>)>, KrError> {
    let target = match fam {
        AffineFamily::C1 => ClassicalType::new(Family::C, n),
        AffineFamily::D2 => ClassicalType::new(Family::B, n),
        _ => return Err(KrError::Unsupported(format!("{:?} is not a virtual family", fam))),
    };
    let width = if fam == AffineFamily::D2 { 2 * s } else { s };
    let amb = ClassicalType::new(Family::C, n + 1);
    let v = Virtual { fam, n, amb, engine: VerticalEngine::new(amb, r, width) };
    let seed = Tableau::from_columns(&vec![(2..=r as i8 + 1).collect::<Vec<_>>(); width]);

    let mut order = vec![seed.clone()];
    let mut seen: HashMap<Tableau, usize> = HashMap::from([(seed, 0)]);
    let mut k = 0;
    while k < order.len() {
        let t = order[k].clone();
        k += 1;
        assert_eq!(v.engine.eps0(&t), t.eps(amb, 1), "ε_0 ≠ ε_1 at {}", t);
        for i in 0..=n {
            for raise in [false, true] {
                if let Some(x) = v.op(i, &t, raise) {
                    if !seen.contains_key(&x) {
                        if order.len() >= cap {
                            return Err(KrError::TooLarge { cap });
                        }
                        seen.insert(x.clone(), order.len());
                        order.push(x);
                    }
                }
            }
        }
    }

    let mut kn: Vec<Option<Tableau>> = vec![None; order.len()];
    let mut used: HashMap<Tableau, usize> = HashMap::new();
    for (idx, t) in order.iter().enumerate() {
        if (1..=n).any(|i| v.op(i, t, true).is_some()) {
            continue;
        }
        let lam = Partition::from_weight(&v.weight(t))
            .ok_or_else(|| KrError::Invariant(format!("virtual highest weight of {} is not dominant", t)))?;
        let mut queue = VecDeque::from([(idx, Tableau::highest(&lam))]);
        while let Some((a, b)) = queue.pop_front() {
            if let Some(prev) = &kn[a] {
                if *prev != b {
                    return Err(KrError::Invariant(format!("relabeling conflict at {}", order[a])));
                }
                continue;
            }
            if let Some(other) = used.insert(b.clone(), a) {
                return Err(KrError::Invariant(format!("{} reached twice ({} and {})", b, order[other], order[a])));
            }
            kn[a] = Some(b.clone());
            for i in 1..=n {
                match (v.op(i, &order[a], false), b.f(target, i)) {
                    (Some(x), Some(y)) => queue.push_back((seen[&x], y)),
                    (None, None) => {}
                    _ => return Err(KrError::Invariant(format!("virtual and KN {}-strings differ at {}", i, b))),
                }
            }
        }
    }
    order
        .iter()
        .enumerate()
        .map(|(idx, t)| {
            let me = kn[idx].clone().ok_or_else(|| KrError::Invariant(format!("{} not relabeled", t)))?;
            let f0 = v.op(0, t, false).map(|x| kn[seen[&x]].clone().unwrap());
            Ok((me, f0))
        })
        .collect()
}
