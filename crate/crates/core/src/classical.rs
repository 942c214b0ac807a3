//! Classical crystals: letters, Kashiwara-Nakashima tableaux, tensor words
//! and the signature rule.
//!
//! Letters are `i8`: `1..=n` unbarred, `-1..=-n` barred, `0` the middle
//! letter of type B. A tableau is read column by column from right to left,
//! each column top to bottom; tensor slots are read left to right.

use crate::cartan::{ClassicalType, Family};
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;

pub type Letter = i8;

/// `ε_i` of a letter in the vector crystal.
pub fn letter_eps(ct: ClassicalType, i: usize, x: Letter) -> u32 {
    let i = i as i8;
    let n = ct.n as i8;
    if i < n {
        return match ct.family {
            Family::A => (x == i + 1) as u32,
            _ => (x == i + 1 || x == -i) as u32,
        };
    }
    match ct.family {
        Family::A => 0,
        Family::B => match x {
            0 => 1,
            x if x == -n => 2,
            _ => 0,
        },
        Family::C => (x == -n) as u32,
        Family::D => (x == -n || x == -(n - 1)) as u32,
    }
}

/// `φ_i` of a letter in the vector crystal.
pub fn letter_phi(ct: ClassicalType, i: usize, x: Letter) -> u32 {
    let i = i as i8;
    let n = ct.n as i8;
    if i < n {
        return match ct.family {
            Family::A => (x == i) as u32,
            _ => (x == i || x == -(i + 1)) as u32,
        };
    }
    match ct.family {
        Family::A => 0,
        Family::B => match x {
            0 => 1,
            x if x == n => 2,
            _ => 0,
        },
        Family::C => (x == n) as u32,
        Family::D => (x == n || x == n - 1) as u32,
    }
}

/// `f_i` on a letter.
pub fn letter_f(ct: ClassicalType, i: usize, x: Letter) -> Option<Letter> {
    let i = i as i8;
    let n = ct.n as i8;
    if i < n {
        return match x {
            x if x == i => Some(i + 1),
            x if x == -(i + 1) && ct.family != Family::A => Some(-i),
            _ => None,
        };
    }
    match ct.family {
        Family::A => None,
        Family::B => match x {
            x if x == n => Some(0),
            0 => Some(-n),
            _ => None,
        },
        Family::C => (x == n).then_some(-n),
        Family::D => match x {
            x if x == n - 1 => Some(-n),
            x if x == n => Some(-(n - 1)),
            _ => None,
        },
    }
}

/// `e_i` on a letter.
pub fn letter_e(ct: ClassicalType, i: usize, x: Letter) -> Option<Letter> {
    let i8i = i as i8;
    let n = ct.n as i8;
    if i8i < n {
        return match x {
            x if x == i8i + 1 => Some(i8i),
            x if x == -i8i && ct.family != Family::A => Some(-(i8i + 1)),
            _ => None,
        };
    }
    match ct.family {
        Family::A => None,
        Family::B => match x {
            0 => Some(n),
            x if x == -n => Some(0),
            _ => None,
        },
        Family::C => (x == -n).then_some(n),
        Family::D => match x {
            x if x == -n => Some(n - 1),
            x if x == -(n - 1) => Some(n),
            _ => None,
        },
    }
}

/// Adds the weight of a letter to `w`.
pub fn add_letter_weight(w: &mut [i32], x: Letter) {
    match x {
        0 => {}
        x if x > 0 => w[x as usize - 1] += 1,
        x => w[(-x) as usize - 1] -= 1,
    }
}

/// Renders a letter; barred letters carry a combining overline.
pub fn letter_str(x: Letter) -> String {
    if x < 0 {
        format!("{}\u{0304}", -x)
    } else {
        x.to_string()
    }
}

/// Outcome of the signature rule on a sequence of `(ε, φ)` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub eps: u32,
    pub phi: u32,
    /// Owner of the rightmost uncancelled `−`.
    pub e_pos: Option<usize>,
    /// Owner of the leftmost uncancelled `+`.
    pub f_pos: Option<usize>,
}

/// Each position contributes `−^ε +^φ`; adjacent `+−` pairs cancel.
pub fn signature<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Signature {
    let mut stack: Vec<(usize, u32)> = Vec::new();
    let mut eps = 0;
    let mut e_pos = None;
    for (k, (mut m, p)) in pairs.into_iter().enumerate() {
        while m > 0 {
            match stack.last_mut() {
                Some(top) => {
                    let c = top.1.min(m);
                    top.1 -= c;
                    m -= c;
                    if top.1 == 0 {
                        stack.pop();
                    }
                }
                None => {
                    eps += m;
                    e_pos = Some(k);
                    m = 0;
                }
            }
        }
        if p > 0 {
            stack.push((k, p));
        }
    }
    Signature {
        eps,
        phi: stack.iter().map(|s| s.1).sum(),
        e_pos,
        f_pos: stack.first().map(|s| s.0),
    }
}

/// A filling of a Young diagram (English rows), stored row-major.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Vec<u8>,
    pub cells: Vec<Letter>,
}

impl Tableau {
    pub fn new(shape: &Partition, cells: Vec<Letter>) -> Tableau {
        let shape: Vec<u8> = shape.parts().iter().map(|&p| p as u8).collect();
        assert_eq!(shape.iter().map(|&p| p as usize).sum::<usize>(), cells.len());
        Tableau { shape, cells }
    }

    /// Builds a tableau from its rows.
    pub fn from_rows(rows: &[Vec<Letter>]) -> Tableau {
        let shape = rows.iter().map(|r| r.len() as u8).filter(|&l| l > 0).collect();
        Tableau { shape, cells: rows.concat() }
    }

    /// Builds a tableau from its columns, left to right.
    pub fn from_columns(cols: &[Vec<Letter>]) -> Tableau {
        let h = cols.iter().map(|c| c.len()).max().unwrap_or(0);
        let rows: Vec<Vec<Letter>> = (0..h)
            .map(|i| cols.iter().filter(|c| c.len() > i).map(|c| c[i]).collect())
            .collect();
        Tableau::from_rows(&rows)
    }

    /// A one-box tableau.
    pub fn letter(x: Letter) -> Tableau {
        Tableau { shape: vec![1], cells: vec![x] }
    }

    /// The empty tableau (the element of `B(0)`).
    pub fn empty() -> Tableau {
        Tableau::default()
    }

    /// Each column filled with `1, 2, …` from the top.
    pub fn highest(shape: &Partition) -> Tableau {
        let cells = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| std::iter::repeat_n(i as Letter + 1, len))
            .collect();
        Tableau::new(shape, cells)
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.shape.iter().map(|&p| p as usize).collect())
    }

    pub fn rows(&self) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        let mut k = 0;
        for &l in &self.shape {
            out.push(self.cells[k..k + l as usize].to_vec());
            k += l as usize;
        }
        out
    }

    pub fn columns(&self) -> Vec<Vec<Letter>> {
        let rows = self.rows();
        let w = self.shape.first().copied().unwrap_or(0) as usize;
        (0..w).map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect()).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> Letter {
        let off: usize = self.shape[..i].iter().map(|&p| p as usize).sum();
        self.cells[off + j]
    }

    /// Cell indices in reading order.
    pub fn reading_positions(&self) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.shape.len());
        let mut k = 0;
        for &l in &self.shape {
            offs.push(k);
            k += l as usize;
        }
        let w = self.shape.first().copied().unwrap_or(0) as usize;
        let mut out = Vec::with_capacity(self.cells.len());
        for j in (0..w).rev() {
            for (i, &l) in self.shape.iter().enumerate() {
                if (l as usize) > j {
                    out.push(offs[i] + j);
                }
            }
        }
        out
    }

    pub fn weight(&self, n: usize) -> Vec<i32> {
        let mut w = vec![0; n];
        self.cells.iter().for_each(|&x| add_letter_weight(&mut w, x));
        w
    }
}

impl Tableau {
    fn sig(&self, ct: ClassicalType, i: usize) -> (Signature, Vec<usize>) {
        let pos = self.reading_positions();
        let sig = signature(pos.iter().map(|&c| {
            let x = self.cells[c];
            (letter_eps(ct, i, x), letter_phi(ct, i, x))
        }));
        (sig, pos)
    }

    /// `e_i` by the signature rule on the reading word.
    pub fn e(&self, ct: ClassicalType, i: usize) -> Option<Tableau> {
        let (sig, pos) = self.sig(ct, i);
        let c = pos[sig.e_pos?];
        let mut out = self.clone();
        out.cells[c] = letter_e(ct, i, out.cells[c]).expect("signature owner must act");
        Some(out)
    }

    /// `f_i` by the signature rule on the reading word.
    pub fn f(&self, ct: ClassicalType, i: usize) -> Option<Tableau> {
        let (sig, pos) = self.sig(ct, i);
        let c = pos[sig.f_pos?];
        let mut out = self.clone();
        out.cells[c] = letter_f(ct, i, out.cells[c]).expect("signature owner must act");
        Some(out)
    }

    pub fn eps(&self, ct: ClassicalType, i: usize) -> u32 {
        self.sig(ct, i).0.eps
    }

    pub fn phi(&self, ct: ClassicalType, i: usize) -> u32 {
        self.sig(ct, i).0.phi
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return f.write_str("∅");
        }
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|&x| letter_str(x)).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// A tensor product of tableaux, slots read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element(pub Vec<Tableau>);

impl Element {
    pub fn single(t: Tableau) -> Element {
        Element(vec![t])
    }

    /// A word of single letters.
    pub fn word(xs: &[Letter]) -> Element {
        Element(xs.iter().map(|&x| Tableau::letter(x)).collect())
    }

    /// `(slot, cell)` pairs in reading order.
    pub fn reading(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(s, t)| t.reading_positions().into_iter().map(move |c| (s, c)))
            .collect()
    }

    pub fn letters_in_reading_order(&self) -> Vec<Letter> {
        self.reading().into_iter().map(|(s, c)| self.0[s].cells[c]).collect()
    }

    pub fn weight(&self, n: usize) -> Vec<i32> {
        let mut w = vec![0; n];
        for t in &self.0 {
            t.cells.iter().for_each(|&x| add_letter_weight(&mut w, x));
        }
        w
    }

    pub fn signature(&self, ct: ClassicalType, i: usize) -> (Signature, Vec<(usize, usize)>) {
        let pos = self.reading();
        let sig = signature(pos.iter().map(|&(s, c)| {
            let x = self.0[s].cells[c];
            (letter_eps(ct, i, x), letter_phi(ct, i, x))
        }));
        (sig, pos)
    }

    pub fn e(&self, ct: ClassicalType, i: usize) -> Option<Element> {
        let (sig, pos) = self.signature(ct, i);
        let (s, c) = pos[sig.e_pos?];
        let mut out = self.clone();
        out.0[s].cells[c] = letter_e(ct, i, out.0[s].cells[c]).expect("signature owner must act");
        Some(out)
    }

    pub fn f(&self, ct: ClassicalType, i: usize) -> Option<Element> {
        let (sig, pos) = self.signature(ct, i);
        let (s, c) = pos[sig.f_pos?];
        let mut out = self.clone();
        out.0[s].cells[c] = letter_f(ct, i, out.0[s].cells[c]).expect("signature owner must act");
        Some(out)
    }

    pub fn eps(&self, ct: ClassicalType, i: usize) -> u32 {
        self.signature(ct, i).0.eps
    }

    pub fn phi(&self, ct: ClassicalType, i: usize) -> u32 {
        self.signature(ct, i).0.phi
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|t| format!("[{}]", t)).collect();
        f.write_str(&v.join(" ⊗ "))
    }
}

/// Unreachable slot marker in edge tables.
pub const NONE: u32 = u32::MAX;

/// Errors from graph generation.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex cap of {cap} exceeded")]
    TooLarge { cap: usize },
}

/// An explicit classical crystal graph with cached string data.
#[derive(Clone, Debug)]
pub struct ClassicalGraph {
    pub ctype: ClassicalType,
    pub vertices: Vec<Element>,
    pub index: HashMap<Element, u32>,
    /// `f[i-1][v]`
    pub f: Vec<Vec<u32>>,
    /// `e[i-1][v]`
    pub e: Vec<Vec<u32>>,
}

impl ClassicalGraph {
    /// Closure of `seeds` under all `e_i`, `f_i`; vertices sorted.
    pub fn generate(ct: ClassicalType, seeds: &[Element], cap: usize) -> Result<ClassicalGraph, GraphError> {
        let k = ct.num_colors();
        let mut seen: HashMap<Element, ()> = HashMap::new();
        let mut queue: VecDeque<Element> = VecDeque::new();
        for s in seeds {
            if seen.insert(s.clone(), ()).is_none() {
                queue.push_back(s.clone());
            }
        }
        while let Some(b) = queue.pop_front() {
            for i in 1..=k {
                for nb in [b.f(ct, i), b.e(ct, i)].into_iter().flatten() {
                    if !seen.contains_key(&nb) {
                        if seen.len() >= cap {
                            return Err(GraphError::TooLarge { cap });
                        }
                        seen.insert(nb.clone(), ());
                        queue.push_back(nb);
                    }
                }
            }
        }
        let mut vertices: Vec<Element> = seen.into_keys().collect();
        vertices.sort();
        Ok(ClassicalGraph::from_vertices(ct, vertices))
    }

    /// Builds edge tables over a closed vertex set.
    pub fn from_vertices(ct: ClassicalType, vertices: Vec<Element>) -> ClassicalGraph {
        let k = ct.num_colors();
        let index: HashMap<Element, u32> =
            vertices.iter().enumerate().map(|(i, v)| (v.clone(), i as u32)).collect();
        let mut f = vec![vec![NONE; vertices.len()]; k];
        let mut e = vec![vec![NONE; vertices.len()]; k];
        for (v, b) in vertices.iter().enumerate() {
            for i in 1..=k {
                if let Some(nb) = b.f(ct, i) {
                    let w = index[&nb];
                    f[i - 1][v] = w;
                    e[i - 1][w as usize] = v as u32;
                }
            }
        }
        ClassicalGraph { ctype: ct, vertices, index, f, e }
    }

    /// The classical crystal `B(λ)` generated from its highest tableau.
    pub fn highest_weight(ct: ClassicalType, shape: &Partition, cap: usize) -> Result<ClassicalGraph, GraphError> {
        ClassicalGraph::generate(ct, &[Element::single(Tableau::highest(shape))], cap)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn fv(&self, i: usize, v: usize) -> Option<usize> {
        let w = self.f[i - 1][v];
        (w != NONE).then_some(w as usize)
    }

    pub fn ev(&self, i: usize, v: usize) -> Option<usize> {
        let w = self.e[i - 1][v];
        (w != NONE).then_some(w as usize)
    }

    pub fn eps(&self, i: usize, v: usize) -> usize {
        let mut c = 0;
        let mut x = v;
        while let Some(y) = self.ev(i, x) {
            c += 1;
            x = y;
        }
        c
    }

    pub fn phi(&self, i: usize, v: usize) -> usize {
        let mut c = 0;
        let mut x = v;
        while let Some(y) = self.fv(i, x) {
            c += 1;
            x = y;
        }
        c
    }

    pub fn weight(&self, v: usize) -> Vec<i32> {
        self.vertices[v].weight(self.ctype.n)
    }

    /// Vertices killed by every `e_i` with `i` in `colors`.
    pub fn highest_weight_vertices(&self, colors: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&v| colors.iter().all(|&i| self.ev(i, v).is_none())).collect()
    }

    pub fn all_colors(&self) -> Vec<usize> {
        (1..=self.ctype.num_colors()).collect()
    }

    /// Connected components under the listed colors, as vertex lists.
    pub fn components(&self, colors: &[usize]) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if label[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![s];
            label[s] = id;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                k += 1;
                for &i in colors {
                    for w in [self.fv(i, v), self.ev(i, v)].into_iter().flatten() {
                        if label[w] == usize::MAX {
                            label[w] = id;
                            comp.push(w);
                        }
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }
}

/// The crystal `B(ω_1)` of the vector representation.
pub fn vector_crystal(ct: ClassicalType) -> Result<ClassicalGraph, String> {
    let min = match ct.family {
        Family::D => 4,
        _ => 2,
    };
    if ct.n < min {
        return Err(format!("unsupported rank {} for {:?}", ct.n, ct.family));
    }
    ClassicalGraph::highest_weight(ct, &Partition::new(vec![1]), usize::MAX).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(f: Family, n: usize) -> ClassicalType {
        ClassicalType::new(f, n)
    }

    #[test]
    fn tensor_rule_two_factors() {
        let a = ct(Family::A, 3);
        assert_eq!(Element::word(&[1, 2]).e(a, 1), None);
        assert_eq!(Element::word(&[2, 1]).e(a, 1), Some(Element::word(&[1, 1])));
        assert_eq!(Element::word(&[1, 1]).f(a, 1), Some(Element::word(&[2, 1])));
        assert_eq!(Element::word(&[2, 1]).f(a, 1), Some(Element::word(&[2, 2])));
    }

    #[test]
    fn column_is_trivial_string() {
        let a = ct(Family::A, 3);
        let col = Element::single(Tableau::from_columns(&[vec![1, 2]]));
        assert_eq!(col.f(a, 1), None);
        assert_eq!(col.e(a, 1), None);
        let row = Element::single(Tableau::from_rows(&[vec![1, 2]]));
        assert_eq!(row.e(a, 1), Some(Element::single(Tableau::from_rows(&[vec![1, 1]]))));
    }

    #[test]
    fn vector_crystals() {
        let a = ct(Family::A, 3);
        assert_eq!(letter_f(a, 1, 1), Some(2));
        assert_eq!(letter_f(a, 2, 2), Some(3));
        assert_eq!(letter_f(a, 1, 3), None);
        let d = ct(Family::D, 4);
        assert_eq!(letter_f(d, 4, 3), Some(-4));
        assert_eq!(letter_f(d, 4, 4), Some(-3));
        assert_eq!(vector_crystal(d).unwrap().len(), 8);
        let b = ct(Family::B, 2);
        assert_eq!((letter_eps(b, 2, 0), letter_phi(b, 2, 0)), (1, 1));
        assert_eq!(vector_crystal(ct(Family::C, 3)).unwrap().len(), 6);
        assert_eq!(vector_crystal(ct(Family::A, 3)).unwrap().len(), 3);
        assert!(vector_crystal(ct(Family::D, 3)).is_err());
    }

    #[test]
    fn signature_cancels_plus_before_minus() {
        let s = signature([(0, 1), (1, 0), (1, 0), (0, 1)]);
        assert_eq!(s.eps, 1);
        assert_eq!(s.phi, 1);
        assert_eq!(s.e_pos, Some(2));
        assert_eq!(s.f_pos, Some(3));
    }
}

impl crate::crystal::Crystal for ClassicalGraph {
    fn len(&self) -> usize {
        self.vertices.len()
    }
    fn rank(&self) -> usize {
        self.ctype.num_colors()
    }
    fn is_affine(&self) -> bool {
        false
    }
    fn e(&self, i: usize, b: usize) -> Option<usize> {
        self.ev(i, b)
    }
    fn f(&self, i: usize, b: usize) -> Option<usize> {
        self.fv(i, b)
    }
    fn eps(&self, i: usize, b: usize) -> usize {
        ClassicalGraph::eps(self, i, b)
    }
    fn phi(&self, i: usize, b: usize) -> usize {
        ClassicalGraph::phi(self, i, b)
    }
    fn weight(&self, b: usize) -> Vec<i32> {
        ClassicalGraph::weight(self, b)
    }
    fn label(&self, b: usize) -> String {
        self.vertices[b].to_string()
    }
}
