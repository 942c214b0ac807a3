#![allow(dead_code)]

use kr_crystals::cartan::{ClassicalType, Family};
use kr_crystals::partition::Partition;

/// Positive roots of a classical family in GL coordinates.
pub fn positive_roots(ct: ClassicalType) -> Vec<Vec<i64>> {
    let n = ct.n;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = vec![0; n];
            a[i] = 1;
            a[j] = -1;
            out.push(a);
            if ct.family != Family::A {
                let mut b = vec![0; n];
                b[i] = 1;
                b[j] = 1;
                out.push(b);
            }
        }
        match ct.family {
            Family::B | Family::C => {
                let mut a = vec![0; n];
                a[i] = if ct.family == Family::B { 1 } else { 2 };
                out.push(a);
            }
            _ => {}
        }
    }
    out
}

/// Twice the Weyl vector.
pub fn two_rho(ct: ClassicalType) -> Vec<i64> {
    let mut t = vec![0; ct.n];
    for a in positive_roots(ct) {
        for (x, y) in t.iter_mut().zip(a) {
            *x += y;
        }
    }
    t
}

/// Weyl dimension formula, computed independently of any crystal code.
pub fn weyl_dimension(ct: ClassicalType, lambda: &Partition) -> u128 {
    let rho2 = two_rho(ct);
    let lr: Vec<i64> = (0..ct.n).map(|i| 2 * lambda.part(i) as i64 + rho2[i]).collect();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for a in positive_roots(ct) {
        let x: i64 = lr.iter().zip(&a).map(|(p, q)| p * q).sum();
        let y: i64 = rho2.iter().zip(&a).map(|(p, q)| p * q).sum();
        num *= x as u128;
        den *= y as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1);
    num
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec())
}
