use rustc_hash::FxHashSet;

use super::group::FiniteGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Default bound on candidate subgroups examined by [`FiniteGroup::normal_subgroups`].
pub const NORMAL_SUBGROUP_CAP: usize = 4096;

impl FiniteGroup {
    /// All normal subgroups, sorted by order then members.
    ///
    /// Every normal subgroup is a join of normal closures of classes, so the
    /// lattice is the join-closure of `{<C> : C a class}`. Classes of
    /// `x^j` with `gcd(j, o(x)) = 1` share their closure with the class of `x`.
    pub fn normal_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        let classes = self.conjugacy_classes();
        let mut found: Vec<Subgroup> = Vec::new();
        let mut keys: FxHashSet<Vec<u32>> = FxHashSet::default();
        let mut push = |h: Subgroup, found: &mut Vec<Subgroup>| -> Result<()> {
            if keys.insert(h.members().to_vec()) {
                if found.len() >= cap {
                    return Err(Error::Resource {
                        what: "normal subgroups".into(),
                        reached: found.len(),
                        cap,
                    });
                }
                found.push(h);
            }
            Ok(())
        };
        push(self.trivial_subgroup(), &mut found)?;
        let mut done = vec![false; classes.len()];
        for (ci, class) in classes.iter().enumerate() {
            if done[ci] || class.element_order == 1 {
                continue;
            }
            let x = class.representative;
            let o = class.element_order as i64;
            for j in 1..o {
                if crate::numtheory::gcd(j as u64, o as u64) == 1 {
                    done[self.class_index(self.pow(x, j))] = true;
                }
            }
            let closure = self.subgroup_generated(&class.members);
            push(closure, &mut found)?;
        }
        let mut start = 0;
        loop {
            let len = found.len();
            let mut fresh = Vec::new();
            for i in 0..len {
                for j in start.max(i + 1)..len {
                    let (a, b) = (&found[i], &found[j]);
                    if a.is_subset_of(b) || b.is_subset_of(a) {
                        continue;
                    }
                    fresh.push(self.join(a, b));
                }
            }
            for h in fresh {
                push(h, &mut found)?;
            }
            if found.len() == len {
                break;
            }
            start = len;
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
        Ok(found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_g150, make_named};

    fn orders(g: &FiniteGroup) -> Vec<usize> {
        g.normal_subgroups(NORMAL_SUBGROUP_CAP)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect()
    }

    #[test]
    fn lattices() {
        assert_eq!(orders(&make_named("cyclic", Some(7)).unwrap()), vec![1, 7]);
        assert_eq!(orders(&make_named("symmetric", Some(4)).unwrap()), vec![1, 4, 12, 24]);
        assert_eq!(orders(&make_g150().unwrap()), vec![1, 25, 75, 150]);
        assert_eq!(orders(&make_named("cyclic", Some(12)).unwrap()), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn cap_counts_distinct_subgroups() {
        let c12 = make_named("cyclic", Some(12)).unwrap();
        assert!(matches!(c12.normal_subgroups(3), Err(Error::Resource { .. })));
        assert_eq!(c12.normal_subgroups(6).unwrap().len(), 6);
    }
}
