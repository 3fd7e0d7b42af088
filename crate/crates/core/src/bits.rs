//! Small helpers for `u64` vertex/variable sets.

/// Iterates the set bits of `mask` in ascending order.
pub fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    ones(mask).collect()
}

pub fn from_iter(items: impl IntoIterator<Item = usize>) -> u64 {
    items.into_iter().fold(0, |m, i| m | (1u64 << i))
}

/// Mask with the lowest `n` bits set.
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Canonical order on sets: by cardinality, then lexicographically on the
/// sorted element lists.
pub fn cmp_sets(a: u64, b: u64) -> std::cmp::Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| ones(a).cmp(ones(b)))
}

/// Keeps the bits of `mask` selected by `keep` and packs them to the bottom,
/// preserving order (a software `pext`).
pub fn compress(mask: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (pos, v) in ones(keep).enumerate() {
        if mask >> v & 1 == 1 {
            out |= 1 << pos;
        }
    }
    out
}

/// Inverse of [`compress`] for a fixed `keep`.
pub fn expand(mask: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (pos, v) in ones(keep).enumerate() {
        if mask >> pos & 1 == 1 {
            out |= 1 << v;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compress_expand() {
        let keep = 0b1011_0110;
        let m = 0b0010_0100;
        let c = compress(m, keep);
        assert_eq!(c, 0b1010);
        assert_eq!(expand(c, keep), m);
    }

    #[test]
    fn set_order() {
        let mut v = vec![0b110, 0b1, 0b101, 0b11];
        v.sort_by(|a, b| cmp_sets(*a, *b));
        assert_eq!(v, vec![0b1, 0b11, 0b101, 0b110]);
    }
}
