//! Depth-first enumeration of normal sets with a fixed maximum, carrying the
//! sumset along as a fixed-width bit vector so each leaf costs a few word ops.

use num_integer::Integer;

const WORDS: usize = 16;

/// Largest maximum element the sweep supports; `4 * m` must fit in the bit width.
pub const SWEEP_MAX_ELEMENT: i64 = (WORDS as i64 * 64) / 4 - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bits([u64; WORDS]);

impl Default for Bits {
    fn default() -> Self {
        Bits([0; WORDS])
    }
}

impl Bits {
    #[inline]
    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self << s`.
    #[inline]
    pub fn shl(&self, s: usize) -> Bits {
        let mut out = Bits::default();
        let (ws, bs) = (s / 64, s % 64);
        for i in (0..WORDS).rev() {
            if i < ws {
                break;
            }
            let src = i - ws;
            let mut w = self.0[src] << bs;
            if bs != 0 && src > 0 {
                w |= self.0[src - 1] >> (64 - bs);
            }
            out.0[i] = w;
        }
        out
    }

    /// `self >> s`.
    #[inline]
    pub fn shr(&self, s: usize) -> Bits {
        let mut out = Bits::default();
        let (ws, bs) = (s / 64, s % 64);
        for i in 0..WORDS {
            let src = i + ws;
            if src >= WORDS {
                break;
            }
            let mut w = self.0[src] >> bs;
            if bs != 0 && src + 1 < WORDS {
                w |= self.0[src + 1] << (64 - bs);
            }
            out.0[i] = w;
        }
        out
    }

    #[inline]
    pub fn or(&self, other: &Bits) -> Bits {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    #[inline]
    pub fn and(&self, other: &Bits) -> Bits {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..WORDS * 64).filter(|&i| self.get(i))
    }
}

/// A complete normal set reached by the sweep.
pub struct Leaf<'a> {
    pub elements: &'a [i64],
    pub set_bits: &'a Bits,
    pub sum_bits: &'a Bits,
    pub doubling: usize,
}

/// Visits every normal set `{0 < a_1 < … < a_{k-2} < m}` in lexicographic order.
pub fn visit_partition(k: usize, m: i64, f: &mut dyn FnMut(&Leaf)) {
    assert!(k >= 2 && m >= k as i64 - 1 && m <= SWEEP_MAX_ELEMENT);
    let mut elements = Vec::with_capacity(k);
    elements.push(0);
    let mut set_bits = Bits::default();
    set_bits.set(0);
    let sum_bits = set_bits;
    descend(k, m, &mut elements, set_bits, sum_bits, m, f);
}

fn descend(
    k: usize,
    m: i64,
    elements: &mut Vec<i64>,
    set_bits: Bits,
    sum_bits: Bits,
    g: i64,
    f: &mut dyn FnMut(&Leaf),
) {
    let placed = elements.len();
    if placed == k - 1 {
        if g != 1 {
            return;
        }
        let e = m as usize;
        let mut sb = set_bits;
        sb.set(e);
        let mut sum = sum_bits.or(&set_bits.shl(e));
        sum.set(2 * e);
        elements.push(m);
        f(&Leaf { elements, set_bits: &sb, sum_bits: &sum, doubling: sum.count() });
        elements.pop();
        return;
    }
    let last = *elements.last().unwrap();
    // leave room for the remaining interior elements below m
    let remaining = (k - 1 - placed) as i64;
    for e in (last + 1)..=(m - remaining) {
        let u = e as usize;
        let mut sb = set_bits;
        sb.set(u);
        let mut sum = sum_bits.or(&set_bits.shl(u));
        sum.set(2 * u);
        elements.push(e);
        descend(k, m, elements, sb, sum, g.gcd(&e), f);
        elements.pop();
    }
}
