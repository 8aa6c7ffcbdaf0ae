use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::groupkit::GroupElement;

/// A permutation of `{0, .., n-1}` given by its image list.
///
/// Products compose left to right: `(a * b)(i) = b(a(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermElem {
    images: Vec<u16>,
}

impl PermElem {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > u16::MAX as usize {
            return Err(Error::domain(format!("permutation degree {n} out of range")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::domain(format!("{images:?} is not a bijection on 0..{n}")));
            }
        }
        Ok(PermElem {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    pub fn identity_of(n: usize) -> Self {
        PermElem {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles over `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a >= n || b >= n {
                    return Err(Error::domain(format!("cycle point out of range for degree {n}")));
                }
                images[a] = b;
            }
        }
        PermElem::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// Disjoint cycle notation on points `1..=n`, e.g. `(1 2 3)(4 5)`;
    /// the identity is `()`.
    pub fn cycle_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{}", i + 1);
                i = self.images[i] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl GroupElement for PermElem {
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "permutations of different degree");
        PermElem {
            images: self
                .images
                .iter()
                .map(|&i| rhs.images[i as usize])
                .collect(),
        }
    }

    fn inv(&self) -> Self {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        PermElem { images }
    }

    fn identity(&self) -> Self {
        PermElem::identity_of(self.images.len())
    }

    fn encode(&self, out: &mut Vec<u8>) {
        for &i in &self.images {
            out.extend_from_slice(&i.to_be_bytes());
        }
    }

    fn describe(&self) -> String {
        self.cycle_string()
    }
}

/// Rotations and reflections of a regular `n`-gon, acting on `Z/n` by
/// `i -> ±i + rot`. Cyclic groups use the rotations alone.
///
/// Same left-to-right composition as [`PermElem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElem {
    n: u32,
    rot: u32,
    flip: bool,
}

impl DihedralElem {
    pub fn rotation(n: u32, r: u32) -> Self {
        DihedralElem {
            n,
            rot: r % n,
            flip: false,
        }
    }

    pub fn reflection(n: u32) -> Self {
        DihedralElem {
            n,
            rot: 0,
            flip: true,
        }
    }

    pub fn to_perm(&self) -> PermElem {
        let n = self.n as u64;
        let images = (0..n)
            .map(|i| {
                let base = if self.flip { (n - i) % n } else { i };
                ((base + self.rot as u64) % n) as usize
            })
            .collect();
        PermElem::new(images).expect("dihedral maps are bijections")
    }
}

impl GroupElement for DihedralElem {
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dihedral elements of different degree");
        let n = self.n as u64;
        let r = self.rot as u64;
        let moved = if rhs.flip { (n - r) % n } else { r };
        DihedralElem {
            n: self.n,
            rot: ((moved + rhs.rot as u64) % n) as u32,
            flip: self.flip ^ rhs.flip,
        }
    }

    fn inv(&self) -> Self {
        let n = self.n;
        let rot = if self.flip { self.rot } else { (n - self.rot) % n };
        DihedralElem {
            n,
            rot,
            flip: self.flip,
        }
    }

    fn identity(&self) -> Self {
        DihedralElem::rotation(self.n, 0)
    }

    fn encode(&self, out: &mut Vec<u8>) {
        out.push(self.flip as u8);
        out.extend_from_slice(&self.rot.to_be_bytes());
    }

    fn describe(&self) -> String {
        if self.flip {
            format!("s r^{}", self.rot)
        } else {
            format!("r^{}", self.rot)
        }
    }
}
