//! Ranks of sparse integer matrices over GF(p) and over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row: `(column, entry)` pairs sorted by column, no zeros.
pub(crate) type SparseRow = Vec<(u32, i64)>;

/// `2^61 - 1`. Ranks modulo this prime never exceed rational ranks, so a
/// vanishing homology group modulo it vanishes rationally as well.
pub(crate) const FILTER_PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank over GF(p), `p` prime.
pub(crate) fn rank_mod(rows: &[SparseRow], ncols: usize, p: u64) -> usize {
    let mut pivots: Vec<Option<Vec<(u32, u64)>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut r: Vec<(u32, u64)> = row
            .iter()
            .map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, a)) = r.first() {
            match &pivots[lead as usize] {
                Some(piv) => {
                    // piv has leading coefficient 1
                    r = merge(&r, piv, |x, y| (x + p - mul_mod(a, *y, p)) % p, |y| (p - mul_mod(a, *y, p)) % p);
                }
                None => {
                    let inv = inv_mod(a, p);
                    for e in &mut r {
                        e.1 = mul_mod(e.1, inv, p);
                    }
                    pivots[lead as usize] = Some(r);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `r ⊕ s` column-wise: `both(x, y)` where both have an entry, `r` entries
/// kept, `only_s(y)` where only `s` does; zeros dropped.
fn merge<T: Clone + PartialEq + ZeroCheck>(
    r: &[(u32, T)],
    s: &[(u32, T)],
    both: impl Fn(&T, &T) -> T,
    only_s: impl Fn(&T) -> T,
) -> Vec<(u32, T)> {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        let entry = match (r.get(i), s.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                i += 1;
                j += 1;
                (a.0, both(&a.1, &b.1))
            }
            (Some(a), Some(b)) if a.0 < b.0 => {
                i += 1;
                a.clone()
            }
            (Some(a), None) => {
                i += 1;
                a.clone()
            }
            (_, Some(b)) => {
                j += 1;
                (b.0, only_s(&b.1))
            }
            (None, None) => unreachable!(),
        };
        if !entry.1.is_zero_value() {
            out.push(entry);
        }
    }
    out
}

trait ZeroCheck {
    fn is_zero_value(&self) -> bool;
}

impl ZeroCheck for u64 {
    fn is_zero_value(&self) -> bool {
        *self == 0
    }
}

impl ZeroCheck for i128 {
    fn is_zero_value(&self) -> bool {
        *self == 0
    }
}

impl ZeroCheck for BigInt {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

/// Integer coefficients for fraction-free elimination; `None` on overflow.
trait Coeff: Clone + PartialEq + ZeroCheck {
    fn from_i64(v: i64) -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn is_one(&self) -> bool;
}

impl Coeff for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_unit(&self) -> bool {
        One::is_one(&self.abs())
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Row echelon form by fraction-free elimination on leading entries, rows
/// divided by their content after each step.
fn echelon_rank<T: Coeff>(rows: &[SparseRow], ncols: usize) -> Option<usize> {
    let mut pivots: Vec<Option<Vec<(u32, T)>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut r: Vec<(u32, T)> = row.iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
        while let Some((lead, b)) = r.first().cloned() {
            let Some(piv) = &pivots[lead as usize] else {
                pivots[lead as usize] = Some(r);
                rank += 1;
                break;
            };
            let a = &piv[0].1;
            let overflow = std::cell::Cell::new(false);
            r = if a.is_unit() {
                // r - (b / a) p, exact because a = ±1
                let f = if a.is_one() { b.clone() } else { b.neg()? };
                merge(
                    &r,
                    piv,
                    |x, y| match f.mul(y).and_then(|t| x.sub(&t)) {
                        Some(v) => v,
                        None => {
                            overflow.set(true);
                            x.clone()
                        }
                    },
                    |y| match f.mul(y).and_then(|t| t.neg()) {
                        Some(v) => v,
                        None => {
                            overflow.set(true);
                            y.clone()
                        }
                    },
                )
            } else {
                // a r - b p
                let scaled: Option<Vec<(u32, T)>> = r.iter().map(|(c, x)| a.mul(x).map(|v| (*c, v))).collect();
                let scaled = scaled?;
                merge(
                    &scaled,
                    piv,
                    |x, y| match b.mul(y).and_then(|t| x.sub(&t)) {
                        Some(v) => v,
                        None => {
                            overflow.set(true);
                            x.clone()
                        }
                    },
                    |y| match b.mul(y).and_then(|t| t.neg()) {
                        Some(v) => v,
                        None => {
                            overflow.set(true);
                            y.clone()
                        }
                    },
                )
            };
            if overflow.get() {
                return None;
            }
            if let Some(first) = r.first().map(|e| e.1.clone()) {
                let g = r.iter().skip(1).fold(first, |g, (_, x)| g.gcd(x));
                if !g.is_one() {
                    for e in &mut r {
                        e.1 = e.1.div_exact(&g);
                    }
                }
            }
        }
    }
    Some(rank)
}

/// Exact rank over the rationals.
pub(crate) fn rank_rational(rows: &[SparseRow], ncols: usize) -> usize {
    echelon_rank::<i128>(rows, ncols)
        .or_else(|| echelon_rank::<BigInt>(rows, ncols))
        .expect("big integers do not overflow")
}
