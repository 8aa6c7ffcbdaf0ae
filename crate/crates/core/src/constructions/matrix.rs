use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ffield::PrimeField;
use crate::groupkit::GroupElement;

type Entries = SmallVec<[u16; 16]>;
type Vector = SmallVec<[u16; 4]>;

/// An invertible `n x n` matrix over GF(p), row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixElem {
    p: u16,
    n: u8,
    entries: Entries,
}

impl MatrixElem {
    /// Builds a matrix from rows of integers (reduced mod `p`); rejects
    /// ragged input, non-prime `p` and singular matrices.
    pub fn new(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if p > u16::MAX as u32 {
            return Err(Error::domain(format!("modulus {p} too large for matrix entries")));
        }
        let n = rows.len();
        if n == 0 || n > u8::MAX as usize || rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix must be square and nonempty"));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&v| field.elem(v).value() as u16)
            .collect();
        let m = MatrixElem {
            p: p as u16,
            n: n as u8,
            entries,
        };
        if m.determinant() == 0 {
            return Err(Error::domain(format!("singular matrix over GF({p}): {}", m.describe())));
        }
        Ok(m)
    }

    pub fn identity_of(p: u32, n: usize) -> Self {
        let mut entries = Entries::from_elem(0, n * n);
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        MatrixElem {
            p: p as u16,
            n: n as u8,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn modulus(&self) -> u32 {
        self.p as u32
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim() + j] as u32
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn determinant(&self) -> u32 {
        let n = self.dim();
        let p = self.p as u64;
        let mut a: Vec<u64> = self.entries.iter().map(|&v| v as u64).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let d = a[col * n + col];
            det = det * d % p;
            let dinv = crate::numtheory::pow_mod(d, p - 2, p);
            for r in col + 1..n {
                let f = a[r * n + col] * dinv % p;
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = (a[r * n + j] + p * p - f * a[col * n + j] % p) % p;
                }
            }
        }
        det as u32
    }

    /// `M v`
    pub(crate) fn apply(&self, v: &[u16]) -> Vector {
        let n = self.dim();
        let p = self.p as u32;
        (0..n)
            .map(|i| {
                let mut acc = 0u32;
                for j in 0..n {
                    acc += self.entries[i * n + j] as u32 * v[j] as u32;
                }
                (acc % p) as u16
            })
            .collect()
    }

    fn check(&self, rhs: &Self) {
        assert!(
            self.p == rhs.p && self.n == rhs.n,
            "matrices over different fields or dimensions"
        );
    }
}

impl GroupElement for MatrixElem {
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let n = self.dim();
        let p = self.p as u32;
        let mut entries = Entries::from_elem(0, n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u32;
                for l in 0..n {
                    acc += self.entries[i * n + l] as u32 * rhs.entries[l * n + j] as u32;
                }
                entries[i * n + j] = (acc % p) as u16;
            }
        }
        MatrixElem {
            p: self.p,
            n: self.n,
            entries,
        }
    }

    fn inv(&self) -> Self {
        // Gauss-Jordan on [A | I].
        let n = self.dim();
        let p = self.p as u64;
        let w = 2 * n;
        let mut a = vec![0u64; n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self.entries[i * n + j] as u64;
            }
            a[i * w + n + i] = 1;
        }
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| a[r * w + col] != 0)
                .expect("group elements are invertible");
            for j in 0..w {
                a.swap(piv * w + j, col * w + j);
            }
            let dinv = crate::numtheory::pow_mod(a[col * w + col], p - 2, p);
            for j in 0..w {
                a[col * w + j] = a[col * w + j] * dinv % p;
            }
            for r in 0..n {
                if r == col || a[r * w + col] == 0 {
                    continue;
                }
                let f = a[r * w + col];
                for j in 0..w {
                    a[r * w + j] = (a[r * w + j] + p * p - f * a[col * w + j]) % p;
                }
            }
        }
        let mut entries = Entries::from_elem(0, n * n);
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = a[i * w + n + j] as u16;
            }
        }
        MatrixElem {
            p: self.p,
            n: self.n,
            entries,
        }
    }

    fn identity(&self) -> Self {
        MatrixElem::identity_of(self.p as u32, self.dim())
    }

    fn encode(&self, out: &mut Vec<u8>) {
        for &e in &self.entries {
            out.extend_from_slice(&e.to_be_bytes());
        }
    }

    fn describe(&self) -> String {
        rows_string(&self.rows())
    }
}

pub(crate) fn rows_string(rows: &[Vec<u32>]) -> String {
    let inner: Vec<String> = rows
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", inner.join(","))
}

/// An element `(v, M)` of `GF(p)^n ⋊ GL(n, p)`.
///
/// `(v1, M1)(v2, M2) = (v1 + M1 v2, M1 M2)`: the matrix part acts on the
/// left of the translation part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElem {
    v: Vector,
    m: MatrixElem,
}

impl AffineElem {
    pub fn new(v: &[i64], m: MatrixElem) -> Result<Self> {
        if v.len() != m.dim() {
            return Err(Error::domain("translation length differs from matrix dimension"));
        }
        let p = m.modulus() as i64;
        Ok(AffineElem {
            v: v.iter().map(|&x| x.rem_euclid(p) as u16).collect(),
            m,
        })
    }

    pub fn translation(&self) -> Vec<u32> {
        self.v.iter().map(|&x| x as u32).collect()
    }

    pub fn matrix(&self) -> &MatrixElem {
        &self.m
    }

    pub fn is_translation(&self) -> bool {
        self.m == self.m.identity()
    }

    /// The `(n+1) x (n+1)` matrix `[[M, v], [0, 1]]`, a faithful linear image.
    pub fn augmented_rows(&self) -> Vec<Vec<u32>> {
        let n = self.m.dim();
        let mut rows = self.m.rows();
        for (i, row) in rows.iter_mut().enumerate() {
            row.push(self.v[i] as u32);
        }
        let mut last = vec![0; n];
        last.push(1);
        rows.push(last);
        rows
    }
}

impl GroupElement for AffineElem {
    fn mul(&self, rhs: &Self) -> Self {
        let p = self.m.modulus();
        let mv = self.m.apply(&rhs.v);
        let v = self
            .v
            .iter()
            .zip(mv.iter())
            .map(|(&a, &b)| ((a as u32 + b as u32) % p) as u16)
            .collect();
        AffineElem {
            v,
            m: self.m.mul(&rhs.m),
        }
    }

    fn inv(&self) -> Self {
        let p = self.m.modulus();
        let mi = self.m.inv();
        let w = mi.apply(&self.v);
        AffineElem {
            v: w.iter().map(|&x| ((p - x as u32) % p) as u16).collect(),
            m: mi,
        }
    }

    fn identity(&self) -> Self {
        AffineElem {
            v: Vector::from_elem(0, self.v.len()),
            m: self.m.identity(),
        }
    }

    fn encode(&self, out: &mut Vec<u8>) {
        for &x in &self.v {
            out.extend_from_slice(&x.to_be_bytes());
        }
        self.m.encode(out);
    }

    fn describe(&self) -> String {
        let v: Vec<String> = self.v.iter().map(|x| x.to_string()).collect();
        format!("([{}], {})", v.join(","), self.m.describe())
    }
}
