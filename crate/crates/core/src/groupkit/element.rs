use std::hash::Hash;

/// A concrete group element kind that can be enumerated by [`close`].
///
/// `encode` must be injective within one group and deterministic across
/// runs; the byte order it induces is the canonical total order used for
/// class and coset representatives.
///
/// [`close`]: super::close
pub trait GroupElement: Clone + Eq + Hash + Send + Sync + 'static {
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
    /// Identity of the group this element lives in.
    fn identity(&self) -> Self;
    fn encode(&self, out: &mut Vec<u8>);
    fn describe(&self) -> String;

    fn encoding(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.encode(&mut out);
        out
    }
}

/// Fixed-size bit set over element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        let i = i as usize;
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Returns true when `i` was not present.
    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let i = i as usize;
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }
}
