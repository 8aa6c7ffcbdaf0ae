use super::group::{Elem, FiniteGroup};
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

impl FiniteGroup {
    /// True iff every non-identity `h` in `h_sub` centralizes only the
    /// identity of `k`.
    pub fn acts_fixed_point_freely(&self, k: &Subgroup, h_sub: &Subgroup) -> bool {
        h_sub
            .nontrivial()
            .all(|h| self.fixed_points(k, h).is_empty())
    }

    /// Non-identity elements of `k` commuting with `h`.
    pub fn fixed_points(&self, k: &Subgroup, h: Elem) -> Vec<Elem> {
        k.nontrivial()
            .filter(|&x| self.mul(x, h) == self.mul(h, x))
            .collect()
    }

    /// `M` is a Frobenius group with kernel `N`, where both are normal in `G`.
    ///
    /// Requires `1 < N < M` and that every element of `M \ N` acts without
    /// nontrivial fixed points on `N`. Since `M \ N` is a union of
    /// `G`-classes and fixed-point freeness is conjugation invariant, one
    /// representative per class suffices.
    pub fn is_frobenius_with_kernel(&self, m: &Subgroup, n: &Subgroup) -> bool {
        frobenius_witness(self, m, n).is_none()
    }

    /// `G` is 2-Frobenius with respect to the normal chain `1 < N < M < G`:
    /// `M` is Frobenius with kernel `N` and `G/N` is Frobenius with kernel
    /// `M/N`.
    pub fn is_2frobenius(&self, n: &Subgroup, m: &Subgroup) -> Result<bool> {
        if !self.is_normal(n) || !self.is_normal(m) {
            return Err(Error::domain("2-Frobenius chain members must be normal"));
        }
        if !n.is_subset_of(m) {
            return Err(Error::domain("2-Frobenius chain needs N <= M"));
        }
        if m.order() == self.order() {
            return Ok(false);
        }
        if !self.is_frobenius_with_kernel(m, n) {
            return Ok(false);
        }
        let q = self.quotient(n)?;
        let mq = q.image(m);
        let whole = q.group().whole();
        Ok(q.group().is_frobenius_with_kernel(&whole, &mq))
    }
}

/// First class representative in `M \ N` with a nontrivial fixed point on
/// `N`, or a marker element for a degenerate chain.
fn frobenius_witness(g: &FiniteGroup, m: &Subgroup, n: &Subgroup) -> Option<Elem> {
    if n.is_trivial() || n.order() >= m.order() {
        return Some(0);
    }
    g.conjugacy_classes()
        .iter()
        .map(|c| c.representative)
        .filter(|&x| m.contains(x) && !n.contains(x))
        .find(|&x| !g.fixed_points(n, x).is_empty())
}

#[cfg(test)]
mod tests {
    use crate::constructions::{make_named, make_twisted_group, twisted_parts};

    #[test]
    fn a4_and_s4_actions() {
        let a4 = make_named("alternating", Some(4)).unwrap();
        let v = a4.p_core(2);
        let c3 = a4.sylow(3);
        assert!(a4.acts_fixed_point_freely(&v, &c3));
        assert!(a4.acts_fixed_point_freely(&v, &a4.trivial_subgroup()));

        let s4 = make_named("symmetric", Some(4)).unwrap();
        let v = s4.p_core(2);
        let s3 = s4.normalizer(&s4.sylow(3));
        assert_eq!(s3.order(), 6);
        assert!(!s4.acts_fixed_point_freely(&v, &s3));
    }

    #[test]
    fn s4_is_2frobenius() {
        let s4 = make_named("symmetric", Some(4)).unwrap();
        let v = s4.p_core(2);
        let a4 = s4.derived_subgroup();
        assert!(s4.is_frobenius_with_kernel(&a4, &v));
        assert!(s4.is_2frobenius(&v, &a4).unwrap());
        let t = s4.elements_of_order(2)[0];
        assert!(s4.is_2frobenius(&s4.cyclic(t), &a4).is_err());
        assert!(s4.is_2frobenius(&a4, &v).is_err());
    }

    #[test]
    fn abelian_groups_are_not_frobenius() {
        let c12 = make_named("cyclic", Some(12)).unwrap();
        let normals = c12.normal_subgroups(64).unwrap();
        for n in &normals {
            for m in &normals {
                if n.is_subset_of(m) {
                    assert!(!c12.is_2frobenius(n, m).unwrap());
                }
            }
        }
    }

    #[test]
    fn twisted_k4_is_2frobenius() {
        let g = make_twisted_group(4).unwrap();
        let parts = twisted_parts(&g).unwrap();
        assert!(g.is_2frobenius(&parts.s, &parts.sp).unwrap());
    }
}
