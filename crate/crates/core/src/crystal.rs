//! The indexed crystal interface shared by KR crystals and tensor products.

use std::collections::VecDeque;

/// A finite crystal with vertices `0..len()` and colors `0..=rank()`.
/// Color 0 is absent when `is_affine()` is false.
pub trait Crystal {
    fn len(&self) -> usize;
    fn rank(&self) -> usize;
    fn is_affine(&self) -> bool;
    fn e(&self, i: usize, b: usize) -> Option<usize>;
    fn f(&self, i: usize, b: usize) -> Option<usize>;
    fn eps(&self, i: usize, b: usize) -> usize;
    fn phi(&self, i: usize, b: usize) -> usize;
    /// Classical weight in GL coordinates.
    fn weight(&self, b: usize) -> Vec<i32>;
    fn label(&self, b: usize) -> String;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn classical_colors(&self) -> Vec<usize> {
        (1..=self.rank()).collect()
    }

    fn colors(&self) -> Vec<usize> {
        let lo = if self.is_affine() { 0 } else { 1 };
        (lo..=self.rank()).collect()
    }

    /// Vertices killed by `e_i` for every listed color.
    fn highest_weight_vertices(&self, colors: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&b| colors.iter().all(|&i| self.e(i, b).is_none())).collect()
    }

    /// Raises `b` with the listed colors until it is highest; returns the
    /// highest vertex and the colors used, first application first.
    fn raise(&self, b: usize, colors: &[usize]) -> (usize, Vec<usize>) {
        let mut x = b;
        let mut seq = Vec::new();
        'outer: loop {
            for &i in colors {
                if let Some(y) = self.e(i, x) {
                    x = y;
                    seq.push(i);
                    continue 'outer;
                }
            }
            return (x, seq);
        }
    }

    /// Connected-component labels under the listed colors.
    fn component_labels(&self, colors: &[usize]) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.len()];
        let mut count = 0;
        for s in 0..self.len() {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &i in colors {
                    for w in [self.f(i, v), self.e(i, v)].into_iter().flatten() {
                        if label[w] == usize::MAX {
                            label[w] = count;
                            q.push_back(w);
                        }
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    fn is_connected(&self) -> bool {
        self.component_labels(&self.colors()).1 == 1
    }
}

/// Applies `f_{i_1} f_{i_2} ⋯ f_{i_k}` to `b`, rightmost first.
pub fn apply_f_seq<C: Crystal + ?Sized>(c: &C, seq: &[usize], b: usize) -> Option<usize> {
    seq.iter().rev().try_fold(b, |x, &i| c.f(i, x))
}

/// Applies `e_{i_1} e_{i_2} ⋯ e_{i_k}` to `b`, rightmost first.
pub fn apply_e_seq<C: Crystal + ?Sized>(c: &C, seq: &[usize], b: usize) -> Option<usize> {
    seq.iter().rev().try_fold(b, |x, &i| c.e(i, x))
}

/// `e_i^{max}`.
pub fn e_max<C: Crystal + ?Sized>(c: &C, i: usize, b: usize) -> usize {
    let mut x = b;
    while let Some(y) = c.e(i, x) {
        x = y;
    }
    x
}

/// Membership mask of the union of the `colors`-components containing
/// some vertex accepted by `seed`.
fn components_of<C: Crystal + ?Sized>(c: &C, colors: &[usize], seed: impl Fn(usize) -> bool) -> Vec<bool> {
    let (labels, count) = c.component_labels(colors);
    let mut keep = vec![false; count];
    for b in 0..c.len() {
        if seed(b) {
            keep[labels[b]] = true;
        }
    }
    labels.iter().map(|&l| keep[l]).collect()
}

fn a_colors(n: usize) -> Vec<usize> {
    (1..n).collect()
}

/// `tops(B)`: `A_{n-1}`-components of the `I_0`-highest vertices.
pub fn tops<C: Crystal + ?Sized>(c: &C, n: usize) -> Vec<bool> {
    let i0 = c.classical_colors();
    components_of(c, &a_colors(n), |b| i0.iter().all(|&i| c.e(i, b).is_none()))
}

/// `B̂`: `A_{n-1}`-components of the `A_{n-1}`-highest vertices whose
/// weight is `λ̄` for a partition `λ`.
pub fn hat<C: Crystal + ?Sized>(c: &C, n: usize) -> Vec<bool> {
    let a = a_colors(n);
    components_of(c, &a, |b| {
        let w = c.weight(b);
        a.iter().all(|&i| c.e(i, b).is_none()) && w.iter().all(|&x| x <= 0) && w.windows(2).all(|p| p[0] >= p[1])
    })
}

/// `max(B)`: `I_0`-components whose highest weight has maximal size.
pub fn max_part<C: Crystal + ?Sized>(c: &C) -> Vec<bool> {
    let i0 = c.classical_colors();
    let size = |b: usize| c.weight(b).iter().sum::<i32>();
    let hw = c.highest_weight_vertices(&i0);
    let top = hw.iter().map(|&b| size(b)).max().unwrap_or(0);
    components_of(c, &i0, |b| i0.iter().all(|&i| c.e(i, b).is_none()) && size(b) == top)
}
