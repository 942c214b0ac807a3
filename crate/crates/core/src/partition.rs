//! Partitions, rectangles, Littlewood-Richardson numbers and the tiling
//! sets that index classical components of KR crystals.

use serde::{Deserialize, Serialize};
use std::fmt;

/// An integer partition with trailing zeros stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, sorting is not performed; panics on an increase.
    pub fn new(mut parts: Vec<usize>) -> Partition {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {:?}",
            parts
        );
        Partition(parts)
    }

    /// Returns `None` when `parts` is not weakly decreasing.
    pub fn try_new(parts: Vec<usize>) -> Option<Partition> {
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Some(Partition::new(parts))
        } else {
            None
        }
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// The rectangle `(s^r)`.
    pub fn rectangle(r: usize, s: usize) -> Partition {
        if s == 0 {
            return Partition::empty();
        }
        Partition(vec![s; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        let parts = (0..w)
            .map(|j| self.0.iter().filter(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().enumerate().all(|(i, &p)| p <= other.part(i))
    }

    /// Padded to length `n` as a signed vector.
    pub fn to_weight(&self, n: usize) -> Vec<i32> {
        assert!(self.len() <= n, "partition {} longer than {}", self, n);
        (0..n).map(|i| self.part(i) as i32).collect()
    }

    /// Reads a dominant weight back as a partition.
    pub fn from_weight(w: &[i32]) -> Option<Partition> {
        if w.iter().any(|&x| x < 0) {
            return None;
        }
        Partition::try_new(w.iter().map(|&x| x as usize).collect())
    }

    /// All partitions contained in the rectangle `(s^r)`.
    pub fn inside_rectangle(r: usize, s: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(r);
        fn rec(r: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if cur.len() == r {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in (0..=bound).rev() {
                cur.push(p);
                rec(r, p, cur, out);
                cur.pop();
            }
        }
        rec(r, s, &mut cur, &mut out);
        out
    }

    /// All partitions of `m` with at most `len` parts.
    pub fn of_size(m: usize, len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rem: usize, bound: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur.clone()));
                return;
            }
            if cur.len() == len {
                return;
            }
            for p in (1..=bound.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, len, cur, out);
                cur.pop();
            }
        }
        rec(m, m, len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl From<&[usize]> for Partition {
    fn from(p: &[usize]) -> Partition {
        Partition::new(p.to_vec())
    }
}

/// The shape attached to the affine node: `∅`, `(1)`, `(2)` or `(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Empty,
    Box,
    Row,
    Column,
}

impl Kind {
    /// `|◇|`, with 1 returned for the type-A marker.
    pub fn size(self) -> usize {
        match self {
            Kind::Empty | Kind::Box => 1,
            Kind::Row | Kind::Column => 2,
        }
    }

    pub fn transpose(self) -> Kind {
        match self {
            Kind::Row => Kind::Column,
            Kind::Column => Kind::Row,
            k => k,
        }
    }

    pub fn as_partition(self) -> Partition {
        match self {
            Kind::Empty => Partition::empty(),
            Kind::Box => Partition::new(vec![1]),
            Kind::Row => Partition::new(vec![2]),
            Kind::Column => Partition::new(vec![1, 1]),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Empty => "∅",
            Kind::Box => "(1)",
            Kind::Row => "(2)",
            Kind::Column => "(1,1)",
        };
        f.write_str(s)
    }
}

/// Ordered list of rectangles `(r_i, s_i)` describing a tensor product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectangleList(pub Vec<(usize, usize)>);

impl RectangleList {
    pub fn new(rects: Vec<(usize, usize)>) -> RectangleList {
        assert!(rects.iter().all(|&(r, s)| r >= 1 && s >= 1), "rectangles must be nonempty");
        RectangleList(rects)
    }

    pub fn rects(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// `|R| = Σ r_i s_i`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&(r, s)| r * s).sum()
    }

    /// `‖R‖ = Σ_{i<j} min(r_i,r_j) min(s_i,s_j)`.
    pub fn norm(&self) -> usize {
        let mut t = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                let (a, b) = (self.0[i], self.0[j]);
                t += a.0.min(b.0) * a.1.min(b.1);
            }
        }
        t
    }

    pub fn total_rows(&self) -> usize {
        self.0.iter().map(|&(r, _)| r).sum()
    }

    pub fn transpose(&self) -> RectangleList {
        RectangleList(self.0.iter().map(|&(r, s)| (s, r)).collect())
    }

    /// The rectangles as partitions `(s_i^{r_i})`.
    pub fn shapes(&self) -> Vec<Partition> {
        self.0.iter().map(|&(r, s)| Partition::rectangle(r, s)).collect()
    }

    /// Weakly decreasing widths.
    pub fn has_decreasing_widths(&self) -> bool {
        self.0.windows(2).all(|w| w[0].1 >= w[1].1)
    }
}

impl fmt::Display for RectangleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|(r, s)| format!("{}x{}", r, s)).collect();
        f.write_str(&v.join(","))
    }
}

/// Parses `"r1xs1,r2xs2,..."`.
impl std::str::FromStr for RectangleList {
    type Err = String;

    fn from_str(text: &str) -> Result<RectangleList, String> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim) {
            let (r, s) = item.split_once(['x', 'X']).ok_or_else(|| format!("expected RxS, got {:?}", item))?;
            let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number in {:?}", item));
            let (r, s) = (parse(r)?, parse(s)?);
            if r == 0 || s == 0 {
                return Err(format!("empty rectangle {:?}", item));
            }
            out.push((r, s));
        }
        Ok(RectangleList(out))
    }
}

/// Parses `"a,b,c"`; the empty string and `"0"` give `∅`.
impl std::str::FromStr for Partition {
    type Err = String;

    fn from_str(text: &str) -> Result<Partition, String> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')');
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad part {:?}", t)))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::try_new(parts).ok_or_else(|| format!("parts of {:?} are not weakly decreasing", text))
    }
}

/// `λ̄ = (−λ_n, …, −λ_1)`.
pub fn barweight(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&x| -x).collect()
}

/// Number of skew semistandard tableaux of shape `ν/δ` and content `λ` whose
/// row reading word (rows top to bottom, each right to left) is Yamanouchi.
pub fn lr_coefficient(delta: &Partition, lambda: &Partition, nu: &Partition) -> u64 {
    if !delta.contained_in(nu) || delta.size() + lambda.size() != nu.size() {
        return 0;
    }
    if lambda.is_empty() {
        return 1;
    }
    let rows = nu.len();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; nu.part(i)]).collect();
    let mut counts = vec![0usize; lambda.len() + 1];
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (delta.part(i)..nu.part(i)).rev().map(move |j| (i, j)))
        .collect();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        lambda: &Partition,
        delta: &Partition,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let right = if j + 1 < grid[i].len() { grid[i][j + 1] } else { usize::MAX };
        let above = if i > 0 && j >= delta.part(i - 1) { grid[i - 1][j] } else { 0 };
        let mut total = 0;
        for v in (above + 1)..=lambda.len().min(right) {
            if counts[v] >= lambda.part(v - 1) {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            grid[i][j] = v;
            total += rec(k + 1, cells, grid, counts, lambda, delta);
            counts[v] -= 1;
        }
        grid[i][j] = 0;
        total
    }
    rec(0, &cells, &mut grid, &mut counts, lambda, delta)
}

/// All `ν` with `c^ν_{δλ} > 0`, paired with the coefficient.
pub fn lr_product(delta: &Partition, lambda: &Partition, max_len: usize) -> Vec<(Partition, u64)> {
    let m = delta.size() + lambda.size();
    Partition::of_size(m, max_len)
        .into_iter()
        .filter(|nu| delta.contained_in(nu) && lambda.contained_in(nu))
        .filter_map(|nu| {
            let c = lr_coefficient(delta, lambda, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// Multiplicity of `V(λ)` in `V(μ^(1)) ⊗ … ⊗ V(μ^(p))`.
pub fn multi_lr(mus: &[Partition], lambda: &Partition) -> u64 {
    let total: usize = mus.iter().map(|m| m.size()).sum();
    if total != lambda.size() {
        return 0;
    }
    let max_len = lambda.len();
    let mut acc: Vec<(Partition, u64)> = vec![(Partition::empty(), 1)];
    for mu in mus {
        let mut next: Vec<(Partition, u64)> = Vec::new();
        for (p, c) in &acc {
            for (q, d) in lr_product(p, mu, max_len) {
                if !q.contained_in(lambda) {
                    continue;
                }
                match next.iter_mut().find(|(x, _)| *x == q) {
                    Some(e) => e.1 += c * d,
                    None => next.push((q, c * d)),
                }
            }
        }
        acc = next;
    }
    acc.into_iter().find(|(p, _)| p == lambda).map(|(_, c)| c).unwrap_or(0)
}

/// Whether the diagram of `λ` is tiled by copies of `◇`.
pub fn in_diamond_set(kind: Kind, lambda: &Partition) -> bool {
    match kind {
        Kind::Empty => lambda.is_empty(),
        Kind::Box => true,
        Kind::Row => lambda.parts().iter().all(|p| p % 2 == 0),
        Kind::Column => lambda.conjugate().parts().iter().all(|p| p % 2 == 0),
    }
}

/// The complement of `λ` in `(s^r)` rotated by 180 degrees.
pub fn rotated_complement(lambda: &Partition, r: usize, s: usize) -> Partition {
    assert!(lambda.contained_in(&Partition::rectangle(r, s)));
    Partition::new((0..r).rev().map(|i| s - lambda.part(i)).collect())
}

/// Errors from shape bookkeeping.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("rank guard: r = {r} exceeds n - 2 = {limit}")]
    RankGuard { r: usize, limit: isize },
    #[error("{0} is already minimal")]
    AlreadyMinimal(Partition),
    #[error("{0} is not tiled by {1}")]
    NotTiled(Partition, Kind),
}

/// The set `𝒫^◇_n(r,s)` of classical highest weights of `B^{r,s}`.
pub fn kr_components(kind: Kind, n: usize, r: usize, s: usize) -> Result<Vec<Partition>, ShapeError> {
    if r + 2 > n {
        return Err(ShapeError::RankGuard { r, limit: n as isize - 2 });
    }
    Ok(kr_components_unguarded(kind, r, s))
}

/// [`kr_components`] without the rank guard.
pub fn kr_components_unguarded(kind: Kind, r: usize, s: usize) -> Vec<Partition> {
    if kind == Kind::Empty {
        return vec![Partition::rectangle(r, s)];
    }
    Partition::inside_rectangle(r, s)
        .into_iter()
        .filter(|l| in_diamond_set(kind, &rotated_complement(l, r, s)))
        .collect()
}

/// The smallest member of `𝒫^◇(r,s)`.
pub fn lambda_min(kind: Kind, r: usize, s: usize) -> Partition {
    match kind {
        Kind::Column if r % 2 == 1 => Partition::new(vec![s]),
        Kind::Row if s % 2 == 1 => Partition::rectangle(r, 1),
        Kind::Empty => Partition::rectangle(r, s),
        _ => Partition::empty(),
    }
}

/// Removes the canonical copy of `◇` from `λ`.
pub fn lambda_minus(kind: Kind, lambda: &Partition, r: usize, s: usize) -> Result<Partition, ShapeError> {
    let lmin = lambda_min(kind, r, s);
    if *lambda == lmin || kind == Kind::Empty {
        return Err(ShapeError::AlreadyMinimal(lambda.clone()));
    }
    let mut cols = lambda.conjugate().parts().to_vec();
    cols.resize(s, 0);
    let cmin = lmin.conjugate();
    let p = (0..s).rev().find(|&j| cols[j] != cmin.part(j)).expect("λ differs from λ_min");
    match kind {
        Kind::Column => cols[p] -= 2,
        Kind::Box => cols[p] -= 1,
        Kind::Row => {
            cols[p] -= 1;
            cols[p - 1] -= 1;
        }
        Kind::Empty => unreachable!(),
    }
    let out = Partition::new(cols).conjugate();
    if !in_diamond_set(kind, &rotated_complement(&out, r, s)) {
        return Err(ShapeError::NotTiled(out, kind));
    }
    Ok(out)
}
