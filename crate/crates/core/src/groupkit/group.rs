use std::any::Any;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::classes::ClassTable;
use super::element::GroupElement;
use crate::error::{Error, Result};
use crate::numtheory::gcd;

/// Index of an element inside its [`FiniteGroup`]. The identity is always 0.
pub type Elem = u32;

/// Default enumeration cap for [`close`].
pub const DEFAULT_CAP: usize = 1 << 21;

const PAR_THRESHOLD: usize = 4096;

/// Index-level multiplication, hiding the concrete element kind.
pub(crate) trait ElementTable: Send + Sync {
    fn len(&self) -> usize;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    fn inv(&self, a: Elem) -> Elem;
    fn encode(&self, a: Elem) -> Vec<u8>;
    fn describe(&self, a: Elem) -> String;
    fn as_any(&self) -> &dyn Any;
}

pub(crate) struct Enumerated<E> {
    pub(crate) elems: Vec<E>,
    pub(crate) index: FxHashMap<E, Elem>,
}

impl<E: GroupElement> Enumerated<E> {
    #[inline]
    fn lookup(&self, e: &E) -> Elem {
        *self
            .index
            .get(e)
            .expect("product left the enumerated group")
    }
}

impl<E: GroupElement> ElementTable for Enumerated<E> {
    fn len(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.lookup(&self.elems[a as usize].mul(&self.elems[b as usize]))
    }

    fn inv(&self, a: Elem) -> Elem {
        self.lookup(&self.elems[a as usize].inv())
    }

    fn encode(&self, a: Elem) -> Vec<u8> {
        self.elems[a as usize].encoding()
    }

    fn describe(&self, a: Elem) -> String {
        self.elems[a as usize].describe()
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

pub(crate) struct GroupData {
    pub(crate) table: Box<dyn ElementTable>,
    pub(crate) generators: Vec<Elem>,
    pub(crate) inverse: Vec<Elem>,
    pub(crate) orders: Vec<u32>,
    pub(crate) rank: Vec<u32>,
    /// `conj[i][x] = g_i^-1 x g_i` for generator `g_i`.
    pub(crate) conj: Vec<Vec<Elem>>,
    pub(crate) classes: OnceLock<ClassTable>,
}

/// A fully enumerated finite group.
///
/// Cheap to clone; all data is immutable after construction apart from the
/// lazily computed class table.
#[derive(Clone)]
pub struct FiniteGroup {
    pub(crate) data: Arc<GroupData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("generators", &self.data.generators.len())
            .finish()
    }
}

/// Breadth-first closure of `generators` under left multiplication.
///
/// Enumeration order is deterministic: the identity first, then elements in
/// the order they are discovered.
pub fn close<E: GroupElement>(generators: &[E], cap: usize) -> Result<FiniteGroup> {
    let first = generators
        .first()
        .ok_or_else(|| Error::domain("closure needs at least one generator"))?;
    let identity = first.identity();
    let mut elems = vec![identity.clone()];
    let mut index = FxHashMap::default();
    index.insert(identity, 0 as Elem);
    let mut next = 0;
    while next < elems.len() {
        for g in generators {
            let y = g.mul(&elems[next]);
            if !index.contains_key(&y) {
                if elems.len() >= cap {
                    return Err(Error::Resource {
                        what: "group enumeration".into(),
                        reached: elems.len(),
                        cap,
                    });
                }
                index.insert(y.clone(), elems.len() as Elem);
                elems.push(y);
            }
        }
        next += 1;
    }
    let mut gens = Vec::new();
    for g in generators {
        let i = index[g];
        if i != 0 && !gens.contains(&i) {
            gens.push(i);
        }
    }
    Ok(FiniteGroup::from_table(Box::new(Enumerated { elems, index }), gens))
}

impl FiniteGroup {
    pub(crate) fn from_table(table: Box<dyn ElementTable>, generators: Vec<Elem>) -> Self {
        let n = table.len();
        let idx: Vec<Elem> = (0..n as Elem).collect();
        let inverse: Vec<Elem> = if n > PAR_THRESHOLD {
            idx.par_iter().map(|&x| table.inv(x)).collect()
        } else {
            idx.iter().map(|&x| table.inv(x)).collect()
        };
        let orders = compute_orders(table.as_ref());
        let encodings: Vec<Vec<u8>> = if n > PAR_THRESHOLD {
            idx.par_iter().map(|&x| table.encode(x)).collect()
        } else {
            idx.iter().map(|&x| table.encode(x)).collect()
        };
        let mut by_rank = idx.clone();
        by_rank.sort_by(|&a, &b| encodings[a as usize].cmp(&encodings[b as usize]));
        let mut rank = vec![0u32; n];
        for (r, &x) in by_rank.iter().enumerate() {
            rank[x as usize] = r as u32;
        }
        let conj = generators
            .iter()
            .map(|&g| {
                let gi = inverse[g as usize];
                let f = |&x: &Elem| table.mul(table.mul(gi, x), g);
                if n > PAR_THRESHOLD {
                    idx.par_iter().map(f).collect()
                } else {
                    idx.iter().map(f).collect()
                }
            })
            .collect();
        FiniteGroup {
            data: Arc::new(GroupData {
                table,
                generators,
                inverse,
                orders,
                rank,
                conj,
                classes: OnceLock::new(),
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.data.inverse.len()
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn generators(&self) -> &[Elem] {
        &self.data.generators
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order() as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.data.table.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.data.inverse[a as usize]
    }

    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        let o = self.element_order(a) as i64;
        let e = e.rem_euclid(o);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g^-1 x g`
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a^-1 b^-1 a b`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    #[inline]
    pub fn element_order(&self, x: Elem) -> u32 {
        self.data.orders[x as usize]
    }

    /// Position of `x` in the canonical encoding order.
    #[inline]
    pub fn rank(&self, x: Elem) -> u32 {
        self.data.rank[x as usize]
    }

    pub fn encode(&self, x: Elem) -> Vec<u8> {
        self.data.table.encode(x)
    }

    pub fn describe(&self, x: Elem) -> String {
        self.data.table.describe(x)
    }

    /// Conjugation tables by the generators, `[i][x] = g_i^-1 x g_i`.
    pub(crate) fn conj_tables(&self) -> &[Vec<Elem>] {
        &self.data.conj
    }

    /// Concrete element behind an index, when the group was built by [`close`].
    pub fn element<E: GroupElement>(&self, x: Elem) -> Option<&E> {
        self.data
            .table
            .as_any()
            .downcast_ref::<Enumerated<E>>()
            .map(|t| &t.elems[x as usize])
    }

    pub fn index_of<E: GroupElement>(&self, e: &E) -> Option<Elem> {
        self.data
            .table
            .as_any()
            .downcast_ref::<Enumerated<E>>()
            .and_then(|t| t.index.get(e).copied())
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Distinct prime divisors of the order.
    pub fn prime_divisors(&self) -> Vec<u64> {
        crate::numtheory::prime_factors(self.order() as u64)
    }

    /// Runs `f` over all elements, in parallel for large groups, keeping the
    /// matches in index order.
    pub(crate) fn filter_elements<F>(&self, f: F) -> Vec<Elem>
    where
        F: Fn(Elem) -> bool + Sync,
    {
        if self.order() > PAR_THRESHOLD {
            self.elements().into_par_iter().filter(|&x| f(x)).collect()
        } else {
            self.elements().filter(|&x| f(x)).collect()
        }
    }

    pub(crate) fn any_element<F>(&self, f: F) -> Option<Elem>
    where
        F: Fn(Elem) -> bool + Sync,
    {
        if self.order() > PAR_THRESHOLD {
            self.elements().into_par_iter().find_first(|&x| f(x))
        } else {
            self.elements().find(|&x| f(x))
        }
    }
}

fn compute_orders(table: &dyn ElementTable) -> Vec<u32> {
    let n = table.len();
    let mut orders = vec![0u32; n];
    orders[0] = 1;
    let mut powers = Vec::new();
    for x in 1..n as Elem {
        if orders[x as usize] != 0 {
            continue;
        }
        powers.clear();
        let mut p = x;
        while p != 0 {
            powers.push(p);
            p = table.mul(p, x);
        }
        let o = powers.len() as u64 + 1;
        for (j, &y) in powers.iter().enumerate() {
            let j = j as u64 + 1;
            orders[y as usize] = (o / gcd(o, j)) as u32;
        }
    }
    orders
}
