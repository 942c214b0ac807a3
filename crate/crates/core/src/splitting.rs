//! Row splitting `S: B^{r,s} → B^{r-1,s} ⊗ B^{1,s}`, splitting into rows
//! `𝕊`, and box splitting into `(B^{1,1})^{⊗|R|}`.

use crate::classical::Tableau;
use crate::crystal::Crystal;
use crate::energy::{EnergyContext, EnergyError};
use crate::kr::KrError;
use crate::partition::{Kind, RectangleList};
use crate::tensor::{Factor, TensorCrystal};
use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

type Rect = (usize, usize);

/// A tensor element as a list of (rectangle, vertex) factors.
pub type State = Vec<(Rect, usize)>;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SplitError {
    #[error("row splitting needs r ≥ 2, got r = {0}")]
    RowOne(usize),
    #[error("splitting conflict: {0}")]
    Conflict(String),
    #[error("box splitting needs a type with classical part B, C or D")]
    TypeA,
    #[error(transparent)]
    Energy(#[from] EnergyError),
    #[error(transparent)]
    Kr(#[from] KrError),
}

/// The table of `S` on `B^{r,s}`.
pub struct RowSplit {
    pub r: usize,
    pub s: usize,
    /// `S(b) = (b_1, b_2)` with `b_1 ∈ B^{r-1,s}`, `b_2 ∈ B^{1,s}`.
    pub map: Vec<(usize, usize)>,
}

/// Step orders for `𝕊`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitOrder {
    /// Split the leftmost factor with more than one row first.
    LeftmostFirst,
    /// Split the rightmost such factor first.
    RightmostFirst,
}

/// Splitting maps over one affine type, with cached row splits.
pub struct Splitter<'a> {
    pub ctx: &'a EnergyContext,
    splits: Mutex<HashMap<Rect, Arc<RowSplit>>>,
}

impl<'a> Splitter<'a> {
    pub fn new(ctx: &'a EnergyContext) -> Splitter<'a> {
        Splitter { ctx, splits: Mutex::default() }
    }

    /// `S` on `B^{r,s}`, propagated from `S(u) = u(B^{r-1,s}) ⊗ u'` along
    /// good arrows with `S(e_i b) = e_i S(b)`.
    pub fn row_split(&self, r: usize, s: usize) -> Result<Arc<RowSplit>, SplitError> {
        if r < 2 {
            return Err(SplitError::RowOne(r));
        }
        if let Some(x) = self.splits.lock().unwrap().get(&(r, s)) {
            return Ok(x.clone());
        }
        let k = self.ctx.kr((r, s))?;
        let (k1, k2) = (self.ctx.kr((r - 1, s))?, self.ctx.kr((1, s))?);
        let t = TensorCrystal::new(vec![k1.clone() as Factor, k2.clone() as Factor]);
        let n = self.ctx.aff.n();
        let mut w = vec![0i32; n];
        w[r - 1] = s as i32;
        let found: Vec<usize> = (0..k2.len()).filter(|&b| k2.weight(b) == w).collect();
        let [up] = found[..] else {
            return Err(SplitError::Conflict(format!("{} candidates for the anchor row", found.len())));
        };
        let mut img = vec![usize::MAX; k.len()];
        let u = k.u()?;
        img[u] = t.encode(&[k1.u()?, up]);
        let mut q = VecDeque::from([u]);
        while let Some(x) = q.pop_front() {
            for st in k.good_steps(x) {
                let y = if st.raise { t.e(st.color, img[x]) } else { t.f(st.color, img[x]) };
                let y = y.ok_or_else(|| SplitError::Conflict(format!("arrow {} missing at {}", st.color, k.label(x))))?;
                if img[st.to] == usize::MAX {
                    img[st.to] = y;
                    q.push_back(st.to);
                } else if img[st.to] != y {
                    return Err(SplitError::Conflict(k.label(st.to)));
                }
            }
        }
        if img.contains(&usize::MAX) {
            return Err(SplitError::Conflict("unreached vertices".into()));
        }
        let map = img.iter().map(|&y| (t.part(y, 0), t.part(y, 1))).collect();
        let rs = Arc::new(RowSplit { r, s, map });
        Ok(self.splits.lock().unwrap().entry((r, s)).or_insert(rs).clone())
    }

    /// Applies `R` to the factors at `pos`, `pos + 1`.
    pub fn swap(&self, st: &mut State, pos: usize) -> Result<(), SplitError> {
        let ((ra, a), (rb, b)) = (st[pos], st[pos + 1]);
        let (b2, a2) = self.ctx.rmatrix(ra, rb)?.apply(a, b);
        st[pos] = (rb, b2);
        st[pos + 1] = (ra, a2);
        Ok(())
    }

    pub fn bring_to_front(&self, st: &mut State, j: usize) -> Result<(), SplitError> {
        for pos in (0..j).rev() {
            self.swap(st, pos)?;
        }
        Ok(())
    }

    /// `S ⊗ id` on the first factor.
    pub fn split_first(&self, st: &mut State) -> Result<(), SplitError> {
        let ((r, s), b) = st[0];
        let (b1, b2) = self.row_split(r, s)?.map[b];
        st.splice(0..1, [((r - 1, s), b1), ((1, s), b2)]);
        Ok(())
    }

    /// Reorders a state to the given rectangle sequence with R-matrices.
    pub fn reorder(&self, st: &mut State, target: &[Rect]) -> Result<(), SplitError> {
        for (t, want) in target.iter().enumerate() {
            let j = (t..st.len())
                .find(|&j| st[j].0 == *want)
                .ok_or_else(|| SplitError::Conflict("target is not a reordering".into()))?;
            for pos in (t..j).rev() {
                self.swap(st, pos)?;
            }
        }
        Ok(())
    }

    /// One step of `𝕊`: the leftmost factor with `r > 1` is brought to the
    /// front and split; the result lives in `B^{S(R)}`.
    pub fn split_step(&self, rects: &RectangleList, b: &[usize]) -> Result<Option<State>, SplitError> {
        let mut st: State = rects.rects().iter().copied().zip(b.iter().copied()).collect();
        let Some(j) = st.iter().position(|f| f.0 .0 > 1) else { return Ok(None) };
        self.bring_to_front(&mut st, j)?;
        self.split_first(&mut st)?;
        Ok(Some(st))
    }

    /// `𝕊_R(b)` with the leftmost-first step order.
    pub fn full_row_split(&self, rects: &RectangleList, b: &[usize]) -> Result<State, SplitError> {
        self.full_row_split_with(rects, b, SplitOrder::LeftmostFirst)
    }

    pub fn full_row_split_with(&self, rects: &RectangleList, b: &[usize], order: SplitOrder) -> Result<State, SplitError> {
        let mut st: State = rects.rects().iter().copied().zip(b.iter().copied()).collect();
        loop {
            let tall = st.iter().enumerate().filter(|(_, f)| f.0 .0 > 1).map(|(j, _)| j);
            let j = match order {
                SplitOrder::LeftmostFirst => tall.min(),
                SplitOrder::RightmostFirst => tall.max(),
            };
            let Some(j) = j else { break };
            self.bring_to_front(&mut st, j)?;
            self.split_first(&mut st)?;
        }
        self.reorder(&mut st, &rows_of(rects))?;
        Ok(st)
    }

    /// Box splitting of one `B^{1,s}` element into `B^{1,1}` vertices.
    pub fn box_split_row(&self, s: usize, b: usize) -> Result<Vec<usize>, SplitError> {
        if self.ctx.aff.kind() == Kind::Empty {
            return Err(SplitError::TypeA);
        }
        let row = self.ctx.kr((1, s))?.tableau(b).cells.clone();
        let box_ = self.ctx.kr((1, 1))?;
        let find = |t: Tableau| box_.find(&t).ok_or_else(|| SplitError::Conflict(format!("no box {}", t)));
        let p = row.len();
        let m = (s - p) / 2;
        let mut out = Vec::with_capacity(s);
        for &x in row.iter().rev() {
            out.push(find(Tableau::letter(x))?);
        }
        out.extend(std::iter::repeat_n(find(Tableau::letter(1))?, m));
        if (s - p) % 2 == 1 {
            out.push(find(Tableau::empty())?);
        }
        out.extend(std::iter::repeat_n(find(Tableau::letter(-1))?, m));
        Ok(out)
    }

    /// `spl_□`: split into rows, then repeatedly bring the leftmost
    /// `B^{1,s}` with `s > 1` to the front and split it into boxes.
    pub fn box_split(&self, rects: &RectangleList, b: &[usize]) -> Result<State, SplitError> {
        let mut st = self.full_row_split(rects, b)?;
        while let Some(j) = st.iter().position(|f| f.0 .1 > 1) {
            self.bring_to_front(&mut st, j)?;
            let ((_, s), x) = st[0];
            let boxes = self.box_split_row(s, x)?;
            st.splice(0..1, boxes.into_iter().map(|y| ((1, 1), y)));
        }
        Ok(st)
    }
}

/// `rows(R)`: each `(r,s)` replaced by `r` copies of `(1,s)`.
pub fn rows_of(rects: &RectangleList) -> Vec<Rect> {
    rects.rects().iter().flat_map(|&(r, s)| std::iter::repeat_n((1, s), r)).collect()
}

/// `S(R)`: the first factor with `r > 1` brought to the front and split.
pub fn split_shape(rects: &RectangleList) -> Option<RectangleList> {
    let j = rects.rects().iter().position(|&(r, _)| r > 1)?;
    let mut v = rects.rects().to_vec();
    let f = v.remove(j);
    v.splice(0..0, [(f.0 - 1, f.1), (1, f.1)]);
    Some(RectangleList::new(v))
}

pub fn state_rects(st: &State) -> RectangleList {
    RectangleList::new(st.iter().map(|f| f.0).collect())
}

pub fn state_vertices(st: &State) -> Vec<usize> {
    st.iter().map(|f| f.1).collect()
}
