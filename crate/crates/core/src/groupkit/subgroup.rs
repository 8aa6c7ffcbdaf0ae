use std::fmt;

use super::element::BitSet;
use super::group::{Elem, FiniteGroup};
use crate::error::{Error, Result};
use crate::numtheory::is_power_of;

/// A subgroup of some [`FiniteGroup`], stored as a sorted member list plus
/// the generators that produced it.
#[derive(Clone)]
pub struct Subgroup {
    members: Vec<Elem>,
    set: BitSet,
    gens: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {} gens)", self.order(), self.gens.len())
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.set.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.gens.iter().all(|&g| other.contains(g))
    }

    /// Non-identity members.
    pub fn nontrivial(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied().filter(|&x| x != 0)
    }
}

/// Early-exit rule while growing a subgroup.
#[derive(Clone, Copy)]
pub(crate) enum Bound {
    None,
    /// Abort once the subgroup is larger than `max` or picks up an element
    /// whose order is not a power of `prime`.
    PGroup { prime: u64, max: usize },
}

/// Mutable subgroup under construction.
pub(crate) struct Builder<'g> {
    group: &'g FiniteGroup,
    members: Vec<Elem>,
    set: BitSet,
    gens: Vec<Elem>,
    bound: Bound,
}

impl<'g> Builder<'g> {
    pub fn trivial(group: &'g FiniteGroup, bound: Bound) -> Self {
        let mut set = BitSet::new(group.order());
        set.insert(0);
        Builder {
            group,
            members: vec![0],
            set,
            gens: Vec::new(),
            bound,
        }
    }

    pub fn from_subgroup(group: &'g FiniteGroup, h: &Subgroup, bound: Bound) -> Self {
        Builder {
            group,
            members: h.members.clone(),
            set: h.set.clone(),
            gens: h.gens.clone(),
            bound,
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.set.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    fn admit(&self, y: Elem) -> bool {
        match self.bound {
            Bound::None => true,
            Bound::PGroup { prime, max } => {
                self.members.len() < max
                    && is_power_of(self.group.element_order(y) as u64, prime)
            }
        }
    }

    /// Adjoins `s`; returns false if the bound was violated (the builder is
    /// then in an unspecified state and must be discarded).
    pub fn adjoin(&mut self, s: Elem) -> bool {
        if self.set.contains(s) {
            return true;
        }
        self.gens.push(s);
        let g = self.group;
        let old = self.members.len();
        for i in 0..old {
            let y = g.mul(self.members[i], s);
            if !self.set.contains(y) {
                if !self.admit(y) {
                    return false;
                }
                self.set.insert(y);
                self.members.push(y);
            }
        }
        let mut i = old;
        while i < self.members.len() {
            let x = self.members[i];
            for gi in 0..self.gens.len() {
                let y = g.mul(x, self.gens[gi]);
                if !self.set.contains(y) {
                    if !self.admit(y) {
                        return false;
                    }
                    self.set.insert(y);
                    self.members.push(y);
                }
            }
            i += 1;
        }
        true
    }

    pub fn adjoin_all(&mut self, elems: impl IntoIterator<Item = Elem>) -> bool {
        for s in elems {
            if !self.adjoin(s) {
                return false;
            }
        }
        true
    }

    pub fn finish(mut self) -> Subgroup {
        self.members.sort_unstable();
        debug_assert_eq!(self.group.order() % self.members.len(), 0, "Lagrange");
        Subgroup {
            members: self.members,
            set: self.set,
            gens: self.gens,
        }
    }
}

impl FiniteGroup {
    pub fn trivial_subgroup(&self) -> Subgroup {
        Builder::trivial(self, Bound::None).finish()
    }

    pub fn whole(&self) -> Subgroup {
        let mut set = BitSet::new(self.order());
        for x in self.elements() {
            set.insert(x);
        }
        Subgroup {
            members: self.elements().collect(),
            set,
            gens: self.generators().to_vec(),
        }
    }

    /// Subgroup generated by `elems`; only elements that enlarge the
    /// subgroup are kept as generators.
    pub fn subgroup_generated(&self, elems: &[Elem]) -> Subgroup {
        let mut b = Builder::trivial(self, Bound::None);
        b.adjoin_all(elems.iter().copied());
        b.finish()
    }

    /// `<h, extra>`
    pub fn join_with(&self, h: &Subgroup, extra: &[Elem]) -> Subgroup {
        let mut b = Builder::from_subgroup(self, h, Bound::None);
        b.adjoin_all(extra.iter().copied());
        b.finish()
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if a.order() >= b.order() {
            self.join_with(a, b.generators())
        } else {
            self.join_with(b, a.generators())
        }
    }

    /// Checks that `members` is a subgroup and equips it with generators.
    pub fn subgroup_from_members(&self, members: &[Elem]) -> Result<Subgroup> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut ordered = sorted.clone();
        ordered.sort_by_key(|&x| self.rank(x));
        let mut b = Builder::trivial(self, Bound::None);
        for &x in &ordered {
            if !b.contains(x) {
                b.adjoin(x);
                if b.len() > sorted.len() {
                    return Err(Error::domain("element set is not closed under multiplication"));
                }
            }
        }
        let h = b.finish();
        if h.members != sorted {
            return Err(Error::domain("element set is not a subgroup"));
        }
        Ok(h)
    }

    /// Cyclic subgroup `<x>`.
    pub fn cyclic(&self, x: Elem) -> Subgroup {
        self.subgroup_generated(&[x])
    }

    /// Product `HK` as a set; a subgroup exactly when `HK = KH`.
    pub fn product_set(&self, h: &Subgroup, k: &Subgroup) -> Vec<Elem> {
        let mut set = BitSet::new(self.order());
        let mut out = Vec::new();
        for &a in h.members() {
            for &b in k.members() {
                let y = self.mul(a, b);
                if set.insert(y) {
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }
}
