//! Kind `(1,1)` affine structure through ±-diagrams.
//!
//! Works over a classical type `D_N` (giving `D_N^{(1)}`) or `C_N` (giving
//! `A_{2N-1}^{(2)}`). With `J = {2, …, N}`, the `J`-highest elements of
//! `B^{r,s}` are in bijection with ±-diagrams; `𝔖` on diagrams induces the
//! involution `ς`, and `e_0 = ς e_1 ς`.

use crate::cartan::{ClassicalType, Family};
use crate::classical::Tableau;
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::collections::HashMap;

/// A ±-diagram `λ ⊆ μ ⊆ Λ` inside `(s^r)`: `+` on `μ/λ`, `−` on `Λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PMDiagram {
    pub inner: Partition,
    pub middle: Partition,
    pub outer: Partition,
}

/// Column data of a diagram: `(λ'_j, μ'_j, Λ'_j)`.
type Col = (usize, usize, usize);

impl PMDiagram {
    /// Column heights, padded to width `s`.
    pub fn columns(&self, s: usize) -> Vec<Col> {
        let (l, m, o) = (self.inner.conjugate(), self.middle.conjugate(), self.outer.conjugate());
        (0..s).map(|j| (l.part(j), m.part(j), o.part(j))).collect()
    }

    fn from_columns(cols: &[Col]) -> PMDiagram {
        let conj = |k: usize| Partition::new(cols.iter().map(|c| [c.0, c.1, c.2][k]).collect()).conjugate();
        PMDiagram { inner: conj(0), middle: conj(1), outer: conj(2) }
    }

    /// Builds the diagram over `λ` with `p[i]` marked columns in each class
    /// `i < r`: marked means `+` when `i ≡ r−1` and `∓` when `i ≡ r` (mod 2).
    pub fn from_counts(lambda: &Partition, p: &[usize], r: usize, s: usize) -> PMDiagram {
        let lc = lambda.conjugate();
        let mut seen = vec![0usize; r + 1];
        let cols: Vec<Col> = (0..s)
            .map(|j| {
                let i = lc.part(j);
                let marked = i < r && seen[i] < p[i];
                seen[i] += 1;
                if i == r {
                    (i, i, i)
                } else if (r - i) % 2 == 1 {
                    if marked { (i, i + 1, i + 1) } else { (i, i, i + 1) }
                } else if marked {
                    (i, i + 1, i + 2)
                } else {
                    (i, i, i)
                }
            })
            .collect();
        PMDiagram::from_columns(&cols)
    }

    /// Sizes `c_i` of the column classes of `λ`, for `0 ≤ i ≤ r`.
    pub fn class_sizes(&self, r: usize, s: usize) -> Vec<usize> {
        let mut c = vec![0; r + 1];
        for (l, _, _) in self.columns(s) {
            c[l] += 1;
        }
        c
    }

    /// Marked-column counts `p_i` for `i < r`.
    pub fn counts(&self, r: usize, s: usize) -> Vec<usize> {
        let mut p = vec![0; r];
        for (l, m, _) in self.columns(s) {
            if l < r && m > l {
                p[l] += 1;
            }
        }
        p
    }

    pub fn is_valid(&self, r: usize, s: usize) -> bool {
        self.outer.contained_in(&Partition::rectangle(r, s))
            && self.inner.contained_in(&self.outer)
            && *self == PMDiagram::from_counts(&self.inner, &self.counts(r, s), r, s)
    }

    /// The involution `𝔖`: `p_i ↦ c_i − p_i` for every class `i < r`.
    pub fn s_involution(&self, r: usize, s: usize) -> PMDiagram {
        let c = self.class_sizes(r, s);
        let p: Vec<usize> = self.counts(r, s).iter().enumerate().map(|(i, &x)| c[i] - x).collect();
        PMDiagram::from_counts(&self.inner, &p, r, s)
    }

    /// All kind-`(1,1)` ±-diagrams in `(s^r)`.
    pub fn all(r: usize, s: usize) -> Vec<PMDiagram> {
        let mut out = Vec::new();
        for lambda in Partition::inside_rectangle(r, s) {
            let probe = PMDiagram::from_counts(&lambda, &vec![0; r], r, s);
            let c = probe.class_sizes(r, s);
            let mut p = vec![0; r];
            loop {
                out.push(PMDiagram::from_counts(&lambda, &p, r, s));
                let mut k = 0;
                while k < r && p[k] == c[k] {
                    p[k] = 0;
                    k += 1;
                }
                if k == r {
                    break;
                }
                p[k] += 1;
            }
        }
        out.sort();
        out
    }

    /// Text picture of the diagram, French rows from the top, `.` for
    /// cells of `λ`.
    pub fn picture(&self) -> String {
        let h = self.outer.len();
        let mut rows = Vec::new();
        for i in (0..h).rev() {
            let mut row = String::new();
            for j in 0..self.outer.part(i) {
                let c = if j < self.inner.part(i) {
                    '.'
                } else if j < self.middle.part(i) {
                    '+'
                } else {
                    '-'
                };
                row.push(c);
            }
            rows.push(row);
        }
        rows.join("\n")
    }
}

/// Lazily evaluated `ς`, `e_0`, `f_0` for kind `(1,1)`.
pub struct VerticalEngine {
    pub ct: ClassicalType,
    pub r: usize,
    pub s: usize,
    phi: RefCell<HashMap<PMDiagram, Tableau>>,
    varsigma: RefCell<HashMap<Tableau, Tableau>>,
}

impl VerticalEngine {
    pub fn new(ct: ClassicalType, r: usize, s: usize) -> VerticalEngine {
        assert!(matches!(ct.family, Family::C | Family::D), "vertical engine needs type C or D");
        assert!(r + 2 <= ct.n, "spin or near-spin node");
        VerticalEngine { ct, r, s, phi: RefCell::default(), varsigma: RefCell::default() }
    }

    /// Colors `J = {2, …, N}`.
    pub fn j_colors(&self) -> Vec<usize> {
        (2..=self.ct.n).collect()
    }

    pub fn is_j_highest(&self, t: &Tableau) -> bool {
        self.j_colors().into_iter().all(|j| t.e(self.ct, j).is_none())
    }

    /// `Φ^{-1}` on a `J`-highest tableau, read off from its shape, its
    /// `J`-weight and the number of unbarred letters per row.
    pub fn diagram_of(&self, t: &Tableau) -> PMDiagram {
        let w = t.weight(self.ct.n);
        let inner = Partition::from_weight(&w[1..]).expect("J-weight must be a partition");
        let middle = Partition::new(t.rows().iter().map(|row| row.iter().filter(|&&x| x > 0).count()).collect());
        PMDiagram { inner, middle, outer: t.shape() }
    }

    /// `Φ`: the `J`-highest element attached to a diagram.
    pub fn phi_fill(&self, d: &PMDiagram) -> Tableau {
        if let Some(t) = self.phi.borrow().get(d) {
            return t.clone();
        }
        let (r, s, ct) = (self.r, self.s, self.ct);
        let cols = d.columns(s);
        let mut pick = None;
        'search: for h in 1..=r {
            for j in (0..s).rev() {
                let (l, m, o) = cols[j];
                if l != h {
                    continue;
                }
                let addable = h == r || ((r - h) % 2 == 1 && m == h && o == h + 1) || ((r - h) % 2 == 0 && m == h && o == h);
                if addable {
                    pick = Some((h, j));
                    break 'search;
                }
            }
        }
        let t = match pick {
            Some((h, j)) => {
                let mut c2 = cols.clone();
                c2[j] = (h - 1, h, cols[j].2);
                let prev = self.phi_fill(&PMDiagram::from_columns(&c2));
                (1..=h).rev().try_fold(prev, |t, i| t.f(ct, i)).expect("Φ recursion: f undefined")
            }
            None => {
                let mut a = vec![0usize; r + 1];
                for &(_, m, o) in &cols {
                    if o > m {
                        a[o] += 1;
                    }
                }
                for i in 1..=r {
                    a[i] += a[i - 1];
                }
                let n = ct.n;
                let mut seq: Vec<(usize, usize)> = Vec::new();
                seq.extend((1..n).map(|i| (i, a[r])));
                seq.push((n, a[r]));
                let top = if ct.family == Family::D { n - 2 } else { n - 1 };
                seq.extend((r + 1..=top).rev().map(|i| (i, a[r])));
                seq.extend((1..=r).rev().map(|i| (i, a[i])));
                let start = Tableau::highest(&d.outer);
                seq.iter()
                    .rev()
                    .flat_map(|&(i, k)| std::iter::repeat_n(i, k))
                    .try_fold(start, |t, i| t.f(ct, i))
                    .expect("Φ base case: f undefined")
            }
        };
        assert!(self.is_j_highest(&t), "Φ({:?}) = {} is not J-highest", d, t);
        assert_eq!(self.diagram_of(&t), *d, "Φ({:?}) = {} has the wrong invariants", d, t);
        self.phi.borrow_mut().insert(d.clone(), t.clone());
        t
    }

    /// The involution `ς = f_{a'} Φ 𝔖 Φ^{-1} e_a`.
    pub fn varsigma(&self, t: &Tableau) -> Tableau {
        if let Some(x) = self.varsigma.borrow().get(t) {
            return x.clone();
        }
        let ct = self.ct;
        let js = self.j_colors();
        let mut hw = t.clone();
        let mut seq = Vec::new();
        'outer: loop {
            for &j in &js {
                if let Some(y) = hw.e(ct, j) {
                    hw = y;
                    seq.push(j);
                    continue 'outer;
                }
            }
            break;
        }
        let d = self.diagram_of(&hw);
        let target = self.phi_fill(&d.s_involution(self.r, self.s));
        let out = seq
            .iter()
            .rev()
            .try_fold(target, |x, &j| x.f(ct, j))
            .expect("ς: lowering path must exist");
        self.varsigma.borrow_mut().insert(t.clone(), out.clone());
        out
    }

    pub fn e0(&self, t: &Tableau) -> Option<Tableau> {
        self.varsigma(t).e(self.ct, 1).map(|x| self.varsigma(&x))
    }

    pub fn f0(&self, t: &Tableau) -> Option<Tableau> {
        self.varsigma(t).f(self.ct, 1).map(|x| self.varsigma(&x))
    }

    pub fn eps0(&self, t: &Tableau) -> u32 {
        self.varsigma(t).eps(self.ct, 1)
    }

    pub fn phi0(&self, t: &Tableau) -> u32 {
        self.varsigma(t).phi(self.ct, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_counts() {
        assert_eq!(PMDiagram::all(1, 1).len(), 3);
        assert_eq!(PMDiagram::all(2, 1).len(), 5);
        for d in PMDiagram::all(2, 2) {
            assert!(d.is_valid(2, 2));
            assert_eq!(d.s_involution(2, 2).s_involution(2, 2), d);
            assert_eq!(d.s_involution(2, 2).inner, d.inner);
        }
    }

    #[test]
    fn vector_representation() {
        let e = VerticalEngine::new(ClassicalType::new(Family::D, 5), 1, 1);
        let one = Tableau::letter(1);
        assert_eq!(e.varsigma(&one), Tableau::letter(-1));
        assert_eq!(e.e0(&Tableau::letter(2)), Some(Tableau::letter(-1)));
        assert_eq!(e.e0(&one), Some(Tableau::letter(-2)));
    }
}
