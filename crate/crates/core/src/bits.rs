//! Fixed-width bitsets over point indices.

use std::fmt;

pub const MAX_POINTS: usize = 256;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Bits([u64; 4]);

impl Bits {
    pub const EMPTY: Bits = Bits([0; 4]);

    pub fn full(n: usize) -> Bits {
        let mut b = Bits::EMPTY;
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    pub fn single(i: usize) -> Bits {
        let mut b = Bits::EMPTY;
        b.insert(i);
        b
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Bits {
        let mut b = Bits::EMPTY;
        for i in it {
            b.insert(i);
        }
        b
    }

    /// Bits of a `u64` mask, low bit first.
    pub fn from_mask(mask: u64) -> Bits {
        Bits([mask, 0, 0, 0])
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < MAX_POINTS && self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union(self, o: Bits) -> Bits {
        Bits([self.0[0] | o.0[0], self.0[1] | o.0[1], self.0[2] | o.0[2], self.0[3] | o.0[3]])
    }

    #[inline]
    pub fn inter(self, o: Bits) -> Bits {
        Bits([self.0[0] & o.0[0], self.0[1] & o.0[1], self.0[2] & o.0[2], self.0[3] & o.0[3]])
    }

    #[inline]
    pub fn minus(self, o: Bits) -> Bits {
        Bits([self.0[0] & !o.0[0], self.0[1] & !o.0[1], self.0[2] & !o.0[2], self.0[3] & !o.0[3]])
    }

    #[inline]
    pub fn is_subset(&self, o: &Bits) -> bool {
        self.minus(*o).is_empty()
    }

    #[inline]
    pub fn meets(&self, o: &Bits) -> bool {
        !self.inter(*o).is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        for (w, word) in self.0.iter().enumerate() {
            if *word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> BitsIter {
        BitsIter { words: self.0, w: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Ordering used for deterministic enumerations: size first, then the
    /// sorted index lists lexicographically.
    pub fn size_lex_cmp(&self, o: &Bits) -> std::cmp::Ordering {
        self.len().cmp(&o.len()).then_with(|| self.iter().cmp(o.iter()))
    }
}

pub struct BitsIter {
    words: [u64; 4],
    w: usize,
}

impl Iterator for BitsIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.w < 4 {
            let word = self.words[self.w];
            if word != 0 {
                let t = word.trailing_zeros() as usize;
                self.words[self.w] &= word - 1;
                return Some(self.w * 64 + t);
            }
            self.w += 1;
        }
        None
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// All subsets of `universe`, smallest masks first. Only usable when the
/// universe is small.
pub fn subsets_of(universe: Bits) -> impl Iterator<Item = Bits> {
    let idx = universe.to_vec();
    assert!(idx.len() < 63);
    (0u64..1u64 << idx.len()).map(move |m| {
        let mut b = Bits::EMPTY;
        let mut m = m;
        while m != 0 {
            let t = m.trailing_zeros() as usize;
            b.insert(idx[t]);
            m &= m - 1;
        }
        b
    })
}
