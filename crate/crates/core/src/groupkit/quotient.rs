use std::any::Any;

use super::group::{Elem, ElementTable, FiniteGroup};
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

const NONE: Elem = Elem::MAX;

/// A subgroup re-indexed as a group in its own right.
struct SubTable {
    parent: FiniteGroup,
    members: Vec<Elem>,
    local: Vec<Elem>,
}

impl ElementTable for SubTable {
    fn len(&self) -> usize {
        self.members.len()
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let y = self
            .parent
            .mul(self.members[a as usize], self.members[b as usize]);
        self.local[y as usize]
    }

    fn inv(&self, a: Elem) -> Elem {
        self.local[self.parent.inv(self.members[a as usize]) as usize]
    }

    fn encode(&self, a: Elem) -> Vec<u8> {
        self.parent.encode(self.members[a as usize])
    }

    fn describe(&self, a: Elem) -> String {
        self.parent.describe(self.members[a as usize])
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// `G/N` with each coset represented by its encoding-minimal member.
struct QuotientTable {
    parent: FiniteGroup,
    coset_of: Vec<Elem>,
    reps: Vec<Elem>,
}

impl ElementTable for QuotientTable {
    fn len(&self) -> usize {
        self.reps.len()
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let y = self
            .parent
            .mul(self.reps[a as usize], self.reps[b as usize]);
        self.coset_of[y as usize]
    }

    fn inv(&self, a: Elem) -> Elem {
        self.coset_of[self.parent.inv(self.reps[a as usize]) as usize]
    }

    fn encode(&self, a: Elem) -> Vec<u8> {
        self.parent.encode(self.reps[a as usize])
    }

    fn describe(&self, a: Elem) -> String {
        format!("{}N", self.parent.describe(self.reps[a as usize]))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// The quotient `G/N` together with the projection data.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    parent: FiniteGroup,
    group: FiniteGroup,
    normal: Subgroup,
    coset_of: Vec<Elem>,
    reps: Vec<Elem>,
}

impl QuotientGroup {
    /// The quotient as a group of its own.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Image of a parent element.
    pub fn project(&self, x: Elem) -> Elem {
        self.coset_of[x as usize]
    }

    /// Canonical representative of a coset.
    pub fn representative(&self, c: Elem) -> Elem {
        self.reps[c as usize]
    }

    /// All parent elements of the coset `c`.
    pub fn coset(&self, c: Elem) -> Vec<Elem> {
        let rep = self.reps[c as usize];
        self.normal
            .members()
            .iter()
            .map(|&n| self.parent.mul(rep, n))
            .collect()
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// Image of a parent subgroup, as a subgroup of the quotient.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let mut imgs: Vec<Elem> = h.members().iter().map(|&x| self.project(x)).collect();
        imgs.sort_unstable();
        imgs.dedup();
        self.group
            .subgroup_from_members(&imgs)
            .expect("homomorphic image of a subgroup")
    }
}

impl FiniteGroup {
    /// Re-indexes `h` as a group; returns it with the embedding into `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<Elem>) {
        let members = h.members().to_vec();
        let mut local = vec![NONE; self.order()];
        for (i, &m) in members.iter().enumerate() {
            local[m as usize] = i as Elem;
        }
        let gens = h
            .generators()
            .iter()
            .map(|&g| local[g as usize])
            .filter(|&g| g != 0)
            .collect();
        let table = SubTable {
            parent: self.clone(),
            members: members.clone(),
            local,
        };
        (FiniteGroup::from_table(Box::new(table), gens), members)
    }

    /// `G/N`; fails when `N` is not normal.
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientGroup> {
        if !self.is_normal(n) {
            return Err(Error::domain("quotient by a subgroup that is not normal"));
        }
        let mut order: Vec<Elem> = self.elements().collect();
        order.sort_by_key(|&x| self.rank(x));
        let mut coset_of = vec![NONE; self.order()];
        let mut reps = vec![0];
        for &m in n.members() {
            coset_of[m as usize] = 0;
        }
        for &x in &order {
            if coset_of[x as usize] != NONE {
                continue;
            }
            let c = reps.len() as Elem;
            reps.push(x);
            for &m in n.members() {
                coset_of[self.mul(x, m) as usize] = c;
            }
        }
        // The identity coset is represented by its encoding-minimal member.
        reps[0] = *n
            .members()
            .iter()
            .min_by_key(|&&m| self.rank(m))
            .expect("N is nonempty");
        let mut gens: Vec<Elem> = Vec::new();
        for &g in self.generators() {
            let c = coset_of[g as usize];
            if c != 0 && !gens.contains(&c) {
                gens.push(c);
            }
        }
        let table = QuotientTable {
            parent: self.clone(),
            coset_of: coset_of.clone(),
            reps: reps.clone(),
        };
        Ok(QuotientGroup {
            parent: self.clone(),
            group: FiniteGroup::from_table(Box::new(table), gens),
            normal: n.clone(),
            coset_of,
            reps,
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::{make_g150, make_named};

    #[test]
    fn s4_mod_klein() {
        let s4 = make_named("symmetric", Some(4)).unwrap();
        let v = s4.p_core(2);
        let q = s4.quotient(&v).unwrap();
        assert_eq!(q.order(), 6);
        assert!(q.group().center().is_trivial());
        for x in s4.elements() {
            let c = q.project(x);
            assert!(q.coset(c).contains(&x));
            assert_eq!(q.coset(c).len(), 4);
            let r = q.representative(c);
            assert!(q.coset(c).iter().all(|&y| s4.rank(r) <= s4.rank(y)));
        }
    }

    #[test]
    fn coset_multiplication_matches_sets() {
        let s4 = make_named("symmetric", Some(4)).unwrap();
        let q = s4.quotient(&s4.derived_subgroup()).unwrap();
        let qg = q.group();
        for a in qg.elements() {
            for b in qg.elements() {
                let mut product: Vec<_> = q
                    .coset(a)
                    .iter()
                    .flat_map(|&x| q.coset(b).into_iter().map(move |y| (x, y)))
                    .map(|(x, y)| s4.mul(x, y))
                    .collect();
                product.sort_unstable();
                product.dedup();
                let mut expect = q.coset(qg.mul(a, b));
                expect.sort_unstable();
                assert_eq!(product, expect);
            }
        }
    }

    #[test]
    fn trivial_and_rejected_quotients() {
        let s3 = make_named("symmetric", Some(3)).unwrap();
        assert_eq!(s3.quotient(&s3.whole()).unwrap().order(), 1);
        let t = s3.elements_of_order(2)[0];
        assert!(s3.quotient(&s3.cyclic(t)).is_err());
        let g = make_g150().unwrap();
        assert_eq!(g.quotient(&g.fitting()).unwrap().order(), 6);
    }

    #[test]
    fn images_of_subgroups() {
        let s4 = make_named("symmetric", Some(4)).unwrap();
        let q = s4.quotient(&s4.p_core(2)).unwrap();
        assert_eq!(q.image(&s4.derived_subgroup()).order(), 3);
        assert_eq!(q.image(&s4.whole()).order(), 6);
    }
}
