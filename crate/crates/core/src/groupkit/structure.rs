//! Structural subgroups: centralizers, normal closures, derived series,
//! p-cores, O^{2'}, Fitting and Sylow subgroups.

use super::element::BitSet;
use super::group::{Elem, FiniteGroup};
use super::subgroup::{Bound, Builder, Subgroup};
use crate::error::{Error, Result};
use crate::numtheory::{is_power_of, p_part};

/// Centralizers only need a generating set; longer inputs are reduced first.
const DIRECT_CENTRALIZER_LEN: usize = 8;

impl FiniteGroup {
    /// `{g : gs = sg for all s in set}`
    pub fn centralizer(&self, set: &[Elem]) -> Subgroup {
        let gens: Vec<Elem> = if set.len() > DIRECT_CENTRALIZER_LEN {
            self.subgroup_generated(set).generators().to_vec()
        } else {
            set.to_vec()
        };
        let members =
            self.filter_elements(|g| gens.iter().all(|&s| self.mul(g, s) == self.mul(s, g)));
        self.subgroup_from_members(&members)
            .expect("centralizers are subgroups")
    }

    /// `C_H(set)`: elements of `h` commuting with every element of `set`.
    pub fn centralizer_in(&self, h: &Subgroup, set: &[Elem]) -> Subgroup {
        let c = self.centralizer(set);
        let members: Vec<Elem> = h.members().iter().copied().filter(|&x| c.contains(x)).collect();
        self.subgroup_from_members(&members)
            .expect("intersection of subgroups")
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.generators().to_vec())
    }

    /// `N_G(H)`
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = h.generators();
        let members = self.filter_elements(|g| gens.iter().all(|&s| h.contains(self.conj(s, g))));
        self.subgroup_from_members(&members)
            .expect("normalizers are subgroups")
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let tables = self.conj_tables();
        h.generators()
            .iter()
            .all(|&s| tables.iter().all(|t| h.contains(t[s as usize])))
    }

    /// Closes `set` under conjugation by the generators of `G`.
    fn conjugation_orbit(&self, set: &[Elem]) -> Vec<Elem> {
        let tables = self.conj_tables();
        let mut seen = BitSet::new(self.order());
        let mut orbit = Vec::new();
        for &s in set {
            if seen.insert(s) {
                orbit.push(s);
            }
        }
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i] as usize;
            for t in tables {
                if seen.insert(t[x]) {
                    orbit.push(t[x]);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Smallest normal subgroup of `G` containing `set`.
    pub fn normal_closure(&self, set: &[Elem]) -> Subgroup {
        let orbit = self.conjugation_orbit(set);
        self.subgroup_generated(&orbit)
    }

    /// Smallest subgroup of `h` containing `set` and normalized by `h`.
    pub fn normal_closure_in(&self, h: &Subgroup, set: &[Elem]) -> Subgroup {
        let hg: Vec<(Elem, Elem)> = h
            .generators()
            .iter()
            .map(|&g| (g, self.inv(g)))
            .collect();
        let mut b = Builder::trivial(self, Bound::None);
        let mut queue: Vec<Elem> = set.to_vec();
        let mut seen = BitSet::new(self.order());
        for &s in set {
            seen.insert(s);
        }
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            b.adjoin(x);
            for &(g, gi) in &hg {
                let y = self.mul(self.mul(gi, x), g);
                // Conjugates already inside the current closure add nothing new
                // as generators, but their own conjugates still matter.
                if seen.insert(y) {
                    queue.push(y);
                }
            }
            i += 1;
        }
        b.finish()
    }

    /// `[A, B]` for subgroups `A`, `B`: the normal closure in `<A, B>` of
    /// the commutators of their generators.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut comms = Vec::new();
        for &x in a.generators() {
            for &y in b.generators() {
                let c = self.commutator(x, y);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        let ab = self.join(a, b);
        self.normal_closure_in(&ab, &comms)
    }

    /// `[H, H]` for a subgroup `H`.
    pub fn derived_subgroup_of(&self, h: &Subgroup) -> Subgroup {
        self.commutator_subgroup(h, h)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.derived_subgroup_of(&self.whole())
    }

    /// `G = G^(0) >= G^(1) >= ...`, stopping at the first repeated term.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_trivial() {
                break;
            }
            let next = self.derived_subgroup_of(last);
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Number of strict steps from `G` down to 1.
    pub fn derived_length(&self) -> Result<usize> {
        derived_length_of(&self.derived_series())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .is_some_and(|h| h.is_trivial())
    }

    /// Every Sylow subgroup is normal, i.e. `|O_p(G)| = |G|_p` for all `p`.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.order() as u64;
        self.prime_divisors()
            .into_iter()
            .all(|p| self.p_core(p).order() as u64 == p_part(n, p))
    }

    /// `O_p(G)`, the largest normal p-subgroup.
    ///
    /// Built class by class: a class of p-elements belongs to `O_p` exactly
    /// when adjoining it to the current normal p-subgroup keeps a p-group.
    pub fn p_core(&self, p: u64) -> Subgroup {
        let max = p_part(self.order() as u64, p) as usize;
        let mut core = self.trivial_subgroup();
        if max == 1 {
            return core;
        }
        for class in self.conjugacy_classes() {
            let o = class.element_order as u64;
            if o == 1 || !is_power_of(o, p) || core.contains(class.representative) {
                continue;
            }
            let mut b = Builder::from_subgroup(self, &core, Bound::PGroup { prime: p, max });
            if b.adjoin_all(class.members.iter().copied()) {
                core = b.finish();
            }
        }
        core
    }

    /// `O^{2'}(G)`: generated by all elements of 2-power order.
    pub fn o2prime(&self) -> Subgroup {
        let mut b = Builder::trivial(self, Bound::None);
        for class in self.conjugacy_classes() {
            let o = class.element_order as u64;
            if o > 1 && is_power_of(o, 2) && !b.contains(class.representative) {
                b.adjoin_all(class.members.iter().copied());
            }
        }
        let h = b.finish();
        debug_assert!((self.order() / h.order()) % 2 == 1, "O^2' has odd index");
        h
    }

    /// Fitting subgroup, the product of all p-cores.
    pub fn fitting(&self) -> Subgroup {
        let mut b = Builder::trivial(self, Bound::None);
        let mut expected = 1usize;
        for p in self.prime_divisors() {
            let core = self.p_core(p);
            expected *= core.order();
            b.adjoin_all(core.generators().iter().copied());
        }
        let f = b.finish();
        assert_eq!(f.order(), expected, "Fitting subgroup is the direct product of its p-cores");
        f
    }

    /// A Sylow p-subgroup, by normalizer ascent from a cyclic p-subgroup.
    ///
    /// Starts from the encoding-minimal element of largest p-power order and
    /// repeatedly adjoins the encoding-minimal p-element of the normalizer
    /// that lies outside the current subgroup.
    pub fn sylow(&self, p: u64) -> Subgroup {
        let target = p_part(self.order() as u64, p) as usize;
        if target == 1 {
            return self.trivial_subgroup();
        }
        let is_p_elem = |x: Elem| {
            let o = self.element_order(x) as u64;
            o > 1 && is_power_of(o, p)
        };
        let start = self
            .elements()
            .filter(|&x| is_p_elem(x))
            .max_by_key(|&x| (self.element_order(x), std::cmp::Reverse(self.rank(x))))
            .expect("Cauchy: p divides the order");
        let mut current = self.cyclic(start);
        while current.order() < target {
            let norm = self.normalizer(&current);
            let next = norm
                .members()
                .iter()
                .copied()
                .filter(|&x| !current.contains(x) && is_p_elem(x))
                .min_by_key(|&x| self.rank(x))
                .expect("a proper p-subgroup has a p-element in its normalizer outside it");
            current = self.join_with(&current, &[next]);
        }
        assert_eq!(current.order(), target);
        current
    }

    /// Sylow subgroup of a subgroup `h`, computed inside `h`.
    pub fn sylow_in(&self, h: &Subgroup, p: u64) -> Subgroup {
        if h.order() == self.order() {
            return self.sylow(p);
        }
        let (sub, embed) = self.subgroup_as_group(h);
        let s = sub.sylow(p);
        let members: Vec<Elem> = s.members().iter().map(|&x| embed[x as usize]).collect();
        self.subgroup_from_members(&members)
            .expect("image of a subgroup")
    }

    /// The order-`p` elements, in index order.
    pub fn elements_of_order(&self, o: u32) -> Vec<Elem> {
        self.elements().filter(|&x| self.element_order(x) == o).collect()
    }
}

pub(crate) fn derived_length_of(series: &[Subgroup]) -> Result<usize> {
    match series.last() {
        Some(h) if h.is_trivial() => Ok(series.len() - 1),
        Some(h) => Err(Error::domain(format!(
            "derived series stabilized above the identity at order {}",
            h.order()
        ))),
        None => Err(Error::domain("empty derived series")),
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::{make_g150, make_named};
    use crate::groupkit::FiniteGroup;

    fn named(n: &str, p: u32) -> FiniteGroup {
        make_named(n, Some(p)).unwrap()
    }

    #[test]
    fn centers() {
        let c6 = named("cyclic", 6);
        assert_eq!(c6.center().order(), 6);
        assert!(named("symmetric", 3).center().is_trivial());
        assert_eq!(named("dihedral", 4).center().order(), 2);
        assert_eq!(make_named("quaternion8", None).unwrap().center().order(), 2);
    }

    #[test]
    fn derived_series() {
        let s3 = named("symmetric", 3);
        let orders: Vec<usize> = s3.derived_series().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![6, 3, 1]);
        assert_eq!(s3.derived_length().unwrap(), 2);
        assert_eq!(named("cyclic", 5).derived_length().unwrap(), 1);
        let s4 = named("symmetric", 4);
        let orders: Vec<usize> = s4.derived_series().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        let a5 = named("alternating", 5);
        assert!(!a5.is_solvable());
        assert!(a5.derived_length().is_err());
    }

    #[test]
    fn normal_closures() {
        let s3 = named("symmetric", 3);
        assert!(s3.normal_closure(&[0]).is_trivial());
        let t = s3.elements_of_order(2)[0];
        assert_eq!(s3.normal_closure(&[t]).order(), 6);
        let a3 = s3.derived_subgroup();
        assert!(s3.is_normal(&a3));
        assert!(!s3.is_normal(&s3.cyclic(t)));
    }

    #[test]
    fn cores_of_s4() {
        let s4 = named("symmetric", 4);
        assert_eq!(s4.p_core(2).order(), 4);
        assert!(s4.p_core(3).is_trivial());
        assert!(s4.p_core(5).is_trivial());
        assert_eq!(s4.fitting(), s4.p_core(2));
        assert_eq!(s4.o2prime().order(), 24);
        assert!(s4.is_solvable());
        assert!(!s4.is_nilpotent());
    }

    #[test]
    fn o2prime_cases() {
        assert!(named("cyclic", 15).o2prime().is_trivial());
        assert_eq!(named("cyclic", 6).o2prime().order(), 2);
        assert_eq!(named("alternating", 4).o2prime().order(), 4);
        let d5 = named("dihedral", 5);
        assert_eq!(d5.o2prime().order(), 10);
    }

    #[test]
    fn nilpotent_groups() {
        let d4 = named("dihedral", 4);
        assert!(d4.is_nilpotent());
        assert_eq!(d4.fitting().order(), 8);
        assert_eq!(d4.sylow(2).order(), 8);
        assert!(named("cyclic", 12).is_nilpotent());
    }

    #[test]
    fn sylow_subgroups() {
        let s4 = named("symmetric", 4);
        let p2 = s4.sylow(2);
        assert_eq!(p2.order(), 8);
        assert!(!s4.subgroup_as_group(&p2).0.is_abelian());
        assert_eq!(s4.sylow(3).order(), 3);
        assert!(s4.sylow(5).is_trivial());
        assert_eq!(s4.sylow(2), s4.sylow(2));
        let a4 = named("alternating", 4);
        let v = a4.p_core(2);
        assert_eq!(a4.sylow_in(&v, 2), v);
    }

    #[test]
    fn g150_structure() {
        let g = make_g150().unwrap();
        assert!(g.center().is_trivial());
        assert!(g.p_core(2).is_trivial());
        assert_eq!(g.o2prime().order(), 150);
        let f = g.fitting();
        assert_eq!(f.order(), 25);
        let series = g.derived_series();
        assert_eq!(series[2], f);
        let (fg, _) = g.subgroup_as_group(&f);
        assert!(fg.is_abelian());
        assert!(fg.elements().skip(1).all(|x| fg.element_order(x) == 5));
    }
}
