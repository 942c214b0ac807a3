//! Special elements of `B^{r,s}`, good arrows, the intrinsic coenergy by
//! good-arrow search, and the reversing automorphism `σ`.

use super::{KrCrystal, KrError};
use crate::crystal::Crystal;
use crate::partition::{barweight, lambda_min, Partition};
use std::collections::VecDeque;

/// A traversal step: target, color, and whether it is a raising step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub to: usize,
    pub color: usize,
    pub raise: bool,
}

fn unique(found: Vec<usize>, what: &str) -> Result<usize, KrError> {
    match found.as_slice() {
        [x] => Ok(*x),
        _ => Err(KrError::Invariant(format!("{} elements satisfy the condition for {}", found.len(), what))),
    }
}

impl KrCrystal {
    /// `u(B)`: the unique vertex of weight `sω_r`.
    pub fn u(&self) -> Result<usize, KrError> {
        let w = Partition::rectangle(self.r, self.s).to_weight(self.aff.n());
        unique((0..self.len()).filter(|&b| self.weight(b) == w).collect(), "u")
    }

    /// `m(B)`: `ε(m) = ℓΛ_0`.
    pub fn m(&self) -> Result<usize, KrError> {
        let l = self.level();
        unique(
            (0..self.len())
                .filter(|&b| self.eps(0, b) == l && self.classical_colors().iter().all(|&i| self.eps(i, b) == 0))
                .collect(),
            "m",
        )
    }

    /// `m'(B)`: `φ(m') = ℓΛ_0`.
    pub fn m_prime(&self) -> Result<usize, KrError> {
        let l = self.level();
        unique(
            (0..self.len())
                .filter(|&b| self.phi(0, b) == l && self.classical_colors().iter().all(|&i| self.phi(i, b) == 0))
                .collect(),
            "m'",
        )
    }

    /// `b(r,s,λ)`: the `I_0`-highest vertex of weight `λ`.
    pub fn b_lambda(&self, lambda: &Partition) -> Result<usize, KrError> {
        let w = lambda.to_weight(self.aff.n());
        unique(
            self.highest_weight_vertices(&self.classical_colors()).into_iter().filter(|&b| self.weight(b) == w).collect(),
            &format!("b(r,s,{})", lambda),
        )
    }

    /// `b̄(r,s,λ)`: the `A_{n-1}`-highest vertex of weight `λ̄` in the
    /// classical component `B((s^r))`.
    pub fn b_bar(&self, lambda: &Partition) -> Result<usize, KrError> {
        let n = self.aff.n();
        let top = self.u()?;
        let (labels, _) = self.component_labels(&self.classical_colors());
        let w = barweight(&lambda.to_weight(n));
        let a_colors: Vec<usize> = (1..n).collect();
        unique(
            (0..self.len())
                .filter(|&b| labels[b] == labels[top] && self.weight(b) == w)
                .filter(|&b| a_colors.iter().all(|&i| self.e(i, b).is_none()))
                .collect(),
            &format!("b̄(r,s,{})", lambda),
        )
    }

    pub fn b_bar_min(&self) -> Result<usize, KrError> {
        self.b_bar(&lambda_min(self.kind(), self.r, self.s))
    }

    /// Good arrows leaving `x` in both directions.
    pub fn good_steps(&self, x: usize) -> Vec<Step> {
        let l = self.level();
        let mut out = Vec::new();
        for i in self.colors() {
            if let Some(y) = self.f(i, x) {
                if i != 0 || self.eps(0, x) >= l {
                    out.push(Step { to: y, color: i, raise: false });
                }
            }
            if let Some(y) = self.e(i, x) {
                if i != 0 || self.eps(0, x) > l {
                    out.push(Step { to: y, color: i, raise: true });
                }
            }
        }
        out
    }

    /// Breadth-first order over good arrows from `start`, with the step
    /// used to reach each vertex.
    pub fn good_arrow_tree(&self, start: usize) -> Vec<(usize, Option<(usize, Step)>)> {
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut out = vec![(start, None)];
        let mut k = 0;
        while k < out.len() {
            let x = out[k].0;
            k += 1;
            for st in self.good_steps(x) {
                if !seen[st.to] {
                    seen[st.to] = true;
                    out.push((st.to, Some((x, st))));
                }
            }
        }
        out
    }

    /// `D̄_B` from good arrows: zero at `u`, constant along classical
    /// arrows, `+1` across good `e_0` arrows.
    pub fn dbar(&self) -> Result<Vec<i64>, KrError> {
        let mut d = vec![i64::MIN; self.len()];
        let u = self.u()?;
        d[u] = 0;
        let mut q = VecDeque::from([u]);
        while let Some(x) = q.pop_front() {
            for st in self.good_steps(x) {
                let v = d[x] + if st.color == 0 { if st.raise { 1 } else { -1 } } else { 0 };
                if d[st.to] == i64::MIN {
                    d[st.to] = v;
                    q.push_back(st.to);
                } else if d[st.to] != v {
                    return Err(KrError::Invariant(format!("D̄ conflict at {}", self.label(st.to))));
                }
            }
        }
        if d.contains(&i64::MIN) {
            return Err(KrError::Invariant("good arrows do not span the crystal".into()));
        }
        Ok(d)
    }

    /// The reversing automorphism `σ`, propagated from `m ↦ b̄_min` along
    /// good arrows with `σ(e_i x) = e_{σ(i)} σ(x)`.
    pub fn sigma(&self) -> Result<Vec<usize>, KrError> {
        let mut sg = vec![usize::MAX; self.len()];
        let m = self.m()?;
        sg[m] = self.b_bar_min()?;
        let mut q = VecDeque::from([m]);
        while let Some(x) = q.pop_front() {
            for st in self.good_steps(x) {
                let j = self.aff.sigma_color(st.color);
                let img = if st.raise { self.e(j, sg[x]) } else { self.f(j, sg[x]) };
                let img = img.ok_or_else(|| KrError::Invariant(format!("σ image arrow missing at {}", self.label(x))))?;
                if sg[st.to] == usize::MAX {
                    sg[st.to] = img;
                    q.push_back(st.to);
                } else if sg[st.to] != img {
                    return Err(KrError::Invariant(format!("σ conflict at {}", self.label(st.to))));
                }
            }
        }
        if sg.contains(&usize::MAX) {
            return Err(KrError::Invariant("σ propagation did not reach every vertex".into()));
        }
        Ok(sg)
    }
}
