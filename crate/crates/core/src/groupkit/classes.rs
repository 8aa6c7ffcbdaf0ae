use super::element::BitSet;
use super::group::{Elem, FiniteGroup};

/// One conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Member with the smallest canonical encoding.
    pub representative: Elem,
    /// Sorted by element index.
    pub members: Vec<Elem>,
    pub element_order: u32,
    pub is_real: bool,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub(crate) struct ClassTable {
    pub(crate) classes: Vec<ConjugacyClass>,
    pub(crate) class_of: Vec<u32>,
}

impl ClassTable {
    fn compute(g: &FiniteGroup) -> Self {
        let n = g.order();
        let tables = g.conj_tables();
        let mut seen = BitSet::new(n);
        let mut raw: Vec<Vec<Elem>> = Vec::new();
        for start in g.elements() {
            if !seen.insert(start) {
                continue;
            }
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i] as usize;
                for t in tables {
                    let y = t[x];
                    if seen.insert(y) {
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        let mut classes: Vec<ConjugacyClass> = raw
            .into_iter()
            .map(|members| {
                let representative = *members
                    .iter()
                    .min_by_key(|&&x| g.rank(x))
                    .expect("orbits are nonempty");
                ConjugacyClass {
                    representative,
                    element_order: g.element_order(representative),
                    members,
                    is_real: false,
                }
            })
            .collect();
        classes.sort_by_key(|c| (c.element_order, c.members.len(), g.rank(c.representative)));
        let mut class_of = vec![0u32; n];
        for (ci, c) in classes.iter().enumerate() {
            for &x in &c.members {
                class_of[x as usize] = ci as u32;
            }
        }
        for (ci, c) in classes.iter_mut().enumerate() {
            c.is_real = class_of[g.inv(c.representative) as usize] == ci as u32;
        }
        ClassTable { classes, class_of }
    }
}

impl FiniteGroup {
    /// Conjugacy classes as orbits under conjugation by the generators,
    /// sorted by (element order, class size, representative encoding).
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_table().classes
    }

    pub(crate) fn class_table(&self) -> &ClassTable {
        self.data.classes.get_or_init(|| ClassTable::compute(self))
    }

    /// Index into [`conjugacy_classes`](Self::conjugacy_classes) of the class of `x`.
    pub fn class_index(&self, x: Elem) -> usize {
        self.class_table().class_of[x as usize] as usize
    }

    pub fn class_of(&self, x: Elem) -> &ConjugacyClass {
        &self.conjugacy_classes()[self.class_index(x)]
    }

    /// `x` is conjugate to its inverse.
    pub fn is_real(&self, x: Elem) -> bool {
        self.class_index(x) == self.class_index(self.inv(x))
    }

    /// `{g : g^-1 x g = x^-1}`, in index order.
    pub fn inverting_elements(&self, x: Elem) -> Vec<Elem> {
        if !self.is_real(x) {
            return Vec::new();
        }
        let xi = self.inv(x);
        self.filter_elements(|g| self.mul(x, g) == self.mul(g, xi))
    }
}
