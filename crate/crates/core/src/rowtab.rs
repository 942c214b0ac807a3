//! Row tableau realization of `B(ν)` in types B, C, D, the sets
//! `L^◇(ν,δ)`, and the 180° rotation rule for `σ∘Φ`.
//!
//! Row tableaux are lists of rows, row 1 first; row 1 is drawn at the
//! bottom.

use crate::cartan::{ClassicalType, Family};
use crate::classical::{ClassicalGraph, Element, GraphError, Letter, Tableau};
use crate::crystal::Crystal;
use crate::kr::vertical::PMDiagram;
use crate::partition::{in_diamond_set, Kind, Partition};
use std::collections::{HashMap, VecDeque};

pub type RowTableau = Vec<Vec<Letter>>;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RowTabError {
    #[error("partition {0} is too long for rank {1}")]
    TooLong(String, usize),
    #[error("{0} is not in the diamond set of {1}")]
    NotDiamond(String, String),
    #[error("row tableau embedding is not equivariant at {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The classical family attached to a nonempty kind.
pub fn family_of(kind: Kind) -> Family {
    match kind {
        Kind::Box => Family::B,
        Kind::Row => Family::C,
        Kind::Column => Family::D,
        Kind::Empty => Family::A,
    }
}

pub fn to_element(rows: &[Vec<Letter>]) -> Element {
    Element(rows.iter().map(|r| Tableau::from_rows(std::slice::from_ref(r))).collect())
}

pub fn from_element(e: &Element) -> RowTableau {
    e.0.iter().map(|t| t.cells.clone()).collect()
}

/// The embedding `rowtab_ν : B(ν) → B(ν_1ω_1) ⊗ ⋯ ⊗ B(ν_pω_1)`.
pub struct RowTab {
    pub ct: ClassicalType,
    pub nu: Partition,
    pub source: ClassicalGraph,
    pub image: ClassicalGraph,
    /// `map[source vertex] = image vertex`
    pub map: Vec<u32>,
    back: HashMap<u32, u32>,
}

impl RowTab {
    pub fn new(ct: ClassicalType, nu: &Partition, cap: usize) -> Result<RowTab, RowTabError> {
        if nu.len() + 2 > ct.n {
            return Err(RowTabError::TooLong(nu.to_string(), ct.n));
        }
        let source = ClassicalGraph::highest_weight(ct, nu, cap)?;
        let seed: RowTableau = nu.parts().iter().enumerate().map(|(i, &p)| vec![i as Letter + 1; p]).collect();
        let seed = to_element(&seed);
        let image = ClassicalGraph::generate(ct, std::slice::from_ref(&seed), cap)?;
        let s0 = source.index[&Element::single(Tableau::highest(nu))];
        let mut map = vec![u32::MAX; source.len()];
        map[s0 as usize] = image.index[&seed];
        let mut q = VecDeque::from([s0 as usize]);
        let colors = source.all_colors();
        while let Some(x) = q.pop_front() {
            let y = map[x] as usize;
            for &i in &colors {
                for (a, b) in [(source.fv(i, x), image.fv(i, y)), (source.ev(i, x), image.ev(i, y))] {
                    match (a, b) {
                        (None, None) => {}
                        (Some(a), Some(b)) if map[a] == u32::MAX => {
                            map[a] = b as u32;
                            q.push_back(a);
                        }
                        (Some(a), Some(b)) if map[a] == b as u32 => {}
                        _ => return Err(RowTabError::Invariant(source.label(x))),
                    }
                }
            }
        }
        if map.contains(&u32::MAX) || source.len() != image.len() {
            return Err(RowTabError::Invariant("size mismatch".into()));
        }
        let back = map.iter().enumerate().map(|(x, &y)| (y, x as u32)).collect();
        Ok(RowTab { ct, nu: nu.clone(), source, image, map, back })
    }

    /// Row tableau of a KN tableau of shape `ν`.
    pub fn apply(&self, t: &Tableau) -> Option<RowTableau> {
        let v = *self.source.index.get(&Element::single(t.clone()))?;
        Some(from_element(&self.image.vertices[self.map[v as usize] as usize]))
    }

    /// KN tableau with the given row tableau.
    pub fn invert(&self, rows: &[Vec<Letter>]) -> Option<Tableau> {
        let y = *self.image.index.get(&to_element(rows))?;
        let x = self.back[&y];
        Some(self.source.vertices[x as usize].0[0].clone())
    }
}

/// The canonical filling `C^◇_δ`.
pub fn canonical_c_delta(kind: Kind, delta: &Partition, n: usize) -> Result<RowTableau, RowTabError> {
    if kind == Kind::Empty || !in_diamond_set(kind, delta) {
        return Err(RowTabError::NotDiamond(delta.to_string(), kind.to_string()));
    }
    let n = n as Letter;
    Ok(delta
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &d)| match kind {
            Kind::Box => {
                let a = d / 2;
                [vec![n; a], vec![0; d - 2 * a], vec![-n; a]].concat()
            }
            Kind::Row => [vec![n; d / 2], vec![-n; d / 2]].concat(),
            _ => vec![if i % 2 == 0 { -n } else { n }; d],
        })
        .collect())
}

/// `L^◇(ν,δ)`: `C^◇_δ` on `δ`, a semistandard filling of `ν/δ` by
/// `n̄ < ⋯ < 1̄` elsewhere (rows weak, columns strict upwards).
pub fn l_set(kind: Kind, nu: &Partition, delta: &Partition, n: usize) -> Result<Vec<RowTableau>, RowTabError> {
    let base = canonical_c_delta(kind, delta, n)?;
    if !delta.contained_in(nu) {
        return Ok(Vec::new());
    }
    let cells: Vec<(usize, usize)> =
        (0..nu.len()).flat_map(|i| (delta.part(i)..nu.part(i)).map(move |j| (i, j))).collect();
    // value v stands for the letter (n+1−v) barred
    let mut val: Vec<Vec<usize>> = (0..nu.len()).map(|i| vec![0; nu.part(i)]).collect();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        delta: &Partition,
        n: usize,
        val: &mut Vec<Vec<usize>>,
        base: &RowTableau,
        out: &mut Vec<RowTableau>,
    ) {
        if k == cells.len() {
            let rows = val
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut r = base.get(i).cloned().unwrap_or_default();
                    r.extend(row[delta.part(i)..].iter().map(|&v| -((n + 1 - v) as Letter)));
                    r
                })
                .collect();
            out.push(rows);
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if j > delta.part(i) {
            lo = lo.max(val[i][j - 1]);
        }
        if i > 0 && j >= delta.part(i - 1) {
            lo = lo.max(val[i - 1][j] + 1);
        }
        for v in lo..=n {
            val[i][j] = v;
            rec(k + 1, cells, delta, n, val, base, out);
        }
    }
    rec(0, &cells, delta, n, &mut val, &base, &mut out);
    Ok(out)
}

/// `L^◇(ν)` over all `δ ∈ 𝒫^◇` inside `ν`.
pub fn l_set_all(kind: Kind, nu: &Partition, n: usize) -> Result<Vec<RowTableau>, RowTabError> {
    let mut out = Vec::new();
    for d in 0..=nu.size() {
        for delta in Partition::of_size(d, nu.len()) {
            if in_diamond_set(kind, &delta) && delta.contained_in(nu) {
                out.extend(l_set(kind, nu, &delta, n)?);
            }
        }
    }
    Ok(out)
}

/// Whether the reading word of the filling of `ν/δ` (row 1 first, each
/// row right to left) is Yamanouchi in `n̄, …, 1̄`.
pub fn is_yamanouchi(rows: &[Vec<Letter>], delta: &Partition, n: usize) -> bool {
    let mut count = vec![0i64; n + 2];
    for (i, row) in rows.iter().enumerate() {
        for &x in row[delta.part(i)..].iter().rev() {
            let k = (-x) as usize;
            count[k] += 1;
            if k < n && count[k] > count[k + 1] {
                return false;
            }
        }
    }
    true
}

/// `rowtab(b̄(r,s,λ))`: `C^◇_δ` on the complement `δ` of `λ` and the
/// Yamanouchi filling with `n̄, (n−1)‾, …` up each column elsewhere.
pub fn rowtab_b_bar(kind: Kind, lambda: &Partition, r: usize, s: usize, n: usize) -> Result<RowTableau, RowTabError> {
    let delta = crate::partition::rotated_complement(lambda, r, s);
    let mut rows = canonical_c_delta(kind, &delta, n)?;
    rows.resize(r, Vec::new());
    for (i, row) in rows.iter_mut().enumerate() {
        for j in delta.part(i)..s {
            let depth = i - delta.conjugate().part(j);
            row.push(-((n - depth) as Letter));
        }
    }
    Ok(rows)
}

/// The three-step rule producing `rowtab(σ(Φ(P)))` for a kind `(1,1)`
/// diagram in `D_n^{(1)}`.
pub fn rule_sigma_phi(p: &PMDiagram, n: usize, r: usize, s: usize) -> RowTableau {
    let nn = n as Letter;
    // grid[depth from top][column]
    let mut grid = vec![vec![0 as Letter; s]; r];
    for (j, (l, m, _)) in p.columns(s).into_iter().enumerate() {
        let c = s - 1 - j;
        for d in 0..l {
            grid[d][c] = -((n - l + d) as Letter);
        }
        for row in grid.iter_mut().take(m).skip(l) {
            row[c] = -nn;
        }
        for (k, row) in grid.iter_mut().skip(m).enumerate() {
            row[c] = if k % 2 == 0 { nn } else { -nn };
        }
    }
    for row in grid.iter_mut() {
        let pos: Vec<usize> = (0..s).filter(|&j| row[j].abs() == nn).collect();
        let kp = pos.iter().filter(|&&j| row[j] == nn).count();
        let km = pos.len() - kp;
        let fill: Vec<Letter> = if kp >= km {
            [vec![nn - 1; km], vec![nn; kp - km], vec![-(nn - 1); km]].concat()
        } else {
            [vec![nn - 1; kp], vec![-nn; km - kp], vec![-(nn - 1); kp]].concat()
        };
        for (&j, x) in pos.iter().zip(fill) {
            row[j] = x;
        }
    }
    grid.reverse();
    grid
}

/// Text picture of a row tableau with row 1 at the bottom.
pub fn picture(rows: &[Vec<Letter>]) -> String {
    rows.iter()
        .rev()
        .map(|r| r.iter().map(|&x| crate::classical::letter_str(x)).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}
