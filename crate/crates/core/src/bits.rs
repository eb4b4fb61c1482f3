//! Dense bit vectors over a non-negative offset range, used for sumsets.

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn with_len(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self |= other << shift`, truncated to `self.len()`.
    pub fn or_shifted(&mut self, other: &BitVec, shift: usize) {
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        for (i, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let lo = i + word_shift;
            if lo >= self.words.len() {
                break;
            }
            self.words[lo] |= w << bit_shift;
            if bit_shift != 0 && lo + 1 < self.words.len() {
                self.words[lo + 1] |= w >> (64 - bit_shift);
            }
        }
        self.clear_tail();
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + tz)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_across_words() {
        let mut a = BitVec::with_len(200);
        a.set(0);
        a.set(63);
        let mut out = BitVec::with_len(200);
        out.or_shifted(&a, 70);
        assert_eq!(out.ones().collect::<Vec<_>>(), vec![70, 133]);
        out.or_shifted(&a, 150);
        assert_eq!(out.ones().collect::<Vec<_>>(), vec![70, 133, 150]);
        assert_eq!(out.count_ones(), 3);
    }
}
