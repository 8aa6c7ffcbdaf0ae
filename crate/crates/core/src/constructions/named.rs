use crate::error::{Error, Result};
use crate::groupkit::{close, FiniteGroup, GroupElement, DEFAULT_CAP};

use super::matrix::{AffineElem, MatrixElem};
use super::perm::{DihedralElem, PermElem};

const MAX_POLYGON: u32 = 1 << 16;
const MAX_SYMMETRIC: u32 = 6;

/// The named families accepted by [`make_named`].
pub const NAMED_FAMILIES: [&str; 5] = ["cyclic", "dihedral", "symmetric", "alternating", "quaternion8"];

/// Standard small groups by name.
///
/// * `cyclic n` (`1 <= n <= 2^16`) and `dihedral n` (order `2n`,
///   `3 <= n <= 2^16`) as rotations and reflections of an `n`-gon;
/// * `symmetric n` and `alternating n` (`1 <= n <= 6`) as permutations;
/// * `quaternion8` (also `quaternion` with parameter 8) as 2x2 matrices
///   over GF(3).
pub fn make_named(name: &str, param: Option<u32>) -> Result<FiniteGroup> {
    let need = |lo: u32, hi: u32| -> Result<u32> {
        let n = param.ok_or_else(|| Error::domain(format!("{name} needs a parameter")))?;
        if n < lo || n > hi {
            return Err(Error::domain(format!("{name} parameter {n} outside {lo}..={hi}")));
        }
        Ok(n)
    };
    match name {
        "cyclic" => {
            let n = need(1, MAX_POLYGON)?;
            close(&[DihedralElem::rotation(n, 1)], DEFAULT_CAP)
        }
        "dihedral" => {
            let n = need(3, MAX_POLYGON)?;
            close(
                &[DihedralElem::rotation(n, 1), DihedralElem::reflection(n)],
                DEFAULT_CAP,
            )
        }
        "symmetric" => {
            let n = need(1, MAX_SYMMETRIC)? as usize;
            let mut gens = vec![PermElem::identity_of(n)];
            if n >= 2 {
                gens.push(PermElem::from_cycles(n, &[&[0, 1]])?);
                gens.push(PermElem::new((0..n).map(|i| (i + 1) % n).collect())?);
            }
            close(&gens, DEFAULT_CAP)
        }
        "alternating" => {
            let n = need(1, MAX_SYMMETRIC)? as usize;
            let mut gens = vec![PermElem::identity_of(n)];
            for i in 2..n {
                gens.push(PermElem::from_cycles(n, &[&[0, 1, i]])?);
            }
            close(&gens, DEFAULT_CAP)
        }
        "quaternion8" | "quaternion" => {
            if param.unwrap_or(8) != 8 || (name == "quaternion" && param.is_none()) {
                return Err(Error::domain("only the quaternion group of order 8 is available"));
            }
            close(&quaternion_generators(), DEFAULT_CAP)
        }
        other => Err(Error::domain(format!(
            "unknown group family {other:?}; expected one of {NAMED_FAMILIES:?}"
        ))),
    }
}

/// `i` and `j` of `Q_8` inside `SL(2, 3)`.
pub fn quaternion_generators() -> Vec<MatrixElem> {
    vec![
        MatrixElem::new(3, &[vec![0, 1], vec![2, 0]]).expect("invertible"),
        MatrixElem::new(3, &[vec![1, 1], vec![1, 2]]).expect("invertible"),
    ]
}

/// The group generated by the given invertible matrices.
pub fn make_matrix_group(generators: &[MatrixElem], cap: usize) -> Result<FiniteGroup> {
    check_common_shape(generators)?;
    close(generators, cap)
}

fn check_common_shape(generators: &[MatrixElem]) -> Result<(u32, usize)> {
    let first = generators
        .first()
        .ok_or_else(|| Error::domain("at least one matrix generator is required"))?;
    let shape = (first.modulus(), first.dim());
    if generators.iter().any(|m| (m.modulus(), m.dim()) != shape) {
        return Err(Error::domain("matrix generators differ in field or dimension"));
    }
    Ok(shape)
}

/// Generators of `GF(p)^n ⋊ <action>`: the unit translations and `(0, M)`.
pub fn semidirect_generators(action: &[MatrixElem]) -> Result<Vec<AffineElem>> {
    let (_, n) = check_common_shape(action)?;
    let id = action[0].identity();
    let mut gens = Vec::with_capacity(n + action.len());
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        gens.push(AffineElem::new(&v, id.clone())?);
    }
    for m in action {
        gens.push(AffineElem::new(&vec![0; n], m.clone())?);
    }
    Ok(gens)
}

/// `GF(p)^n ⋊ <action>` with `(v1, M1)(v2, M2) = (v1 + M1 v2, M1 M2)`.
pub fn make_semidirect(action: &[MatrixElem], cap: usize) -> Result<FiniteGroup> {
    close(&semidirect_generators(action)?, cap)
}

/// `S_3` acting irreducibly on `GF(5)^2`: a swap and the companion matrix
/// of `x^2 + x + 1`.
pub fn g150_action() -> Vec<MatrixElem> {
    vec![
        MatrixElem::new(5, &[vec![0, 1], vec![1, 0]]).expect("invertible"),
        MatrixElem::new(5, &[vec![0, 4], vec![1, 4]]).expect("invertible"),
    ]
}

/// `(C5 x C5) ⋊ S3`, of order 150.
pub fn make_g150() -> Result<FiniteGroup> {
    make_semidirect(&g150_action(), DEFAULT_CAP)
}

/// The order-150 matrix group acting on `GF(11)^3`.
pub fn h199650_action() -> Vec<MatrixElem> {
    let m = |rows: [[i64; 3]; 3]| {
        MatrixElem::new(11, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .expect("invertible")
    };
    vec![
        m([[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
        m([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        m([[9, 0, 0], [0, 3, 0], [0, 0, 9]]),
        m([[5, 0, 0], [0, 9, 0], [0, 0, 1]]),
    ]
}

/// `GF(11)^3 ⋊ G150`, of order 199650.
pub fn make_h199650() -> Result<FiniteGroup> {
    let action = h199650_action();
    let inner = make_matrix_group(&action, DEFAULT_CAP)?;
    if inner.order() != 150 {
        return Err(Error::domain(format!(
            "acting matrix group has order {}, expected 150",
            inner.order()
        )));
    }
    make_semidirect(&action, DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_orders() {
        let order = |n: &str, p: Option<u32>| make_named(n, p).unwrap().order();
        assert_eq!(order("cyclic", Some(6)), 6);
        assert_eq!(order("cyclic", Some(1)), 1);
        assert_eq!(order("dihedral", Some(3)), 6);
        assert_eq!(order("dihedral", Some(8)), 16);
        assert_eq!(order("symmetric", Some(4)), 24);
        assert_eq!(order("symmetric", Some(6)), 720);
        assert_eq!(order("symmetric", Some(1)), 1);
        assert_eq!(order("alternating", Some(4)), 12);
        assert_eq!(order("alternating", Some(5)), 60);
        assert_eq!(order("quaternion8", None), 8);
        assert_eq!(order("quaternion", Some(8)), 8);
    }

    #[test]
    fn named_bounds() {
        assert!(make_named("symmetric", Some(7)).is_err());
        assert!(make_named("cyclic", Some(0)).is_err());
        assert!(make_named("cyclic", Some((1 << 16) + 1)).is_err());
        assert!(make_named("dihedral", Some(2)).is_err());
        assert!(make_named("quaternion", Some(16)).is_err());
        assert!(make_named("cyclic", None).is_err());
        assert!(make_named("mathieu", Some(11)).is_err());
    }

    #[test]
    fn small_group_shapes() {
        let c6 = make_named("cyclic", Some(6)).unwrap();
        assert!(c6.is_abelian());
        let d3 = make_named("dihedral", Some(3)).unwrap();
        assert!(!d3.is_abelian());
        let q8 = make_named("quaternion8", None).unwrap();
        assert_eq!(q8.elements_of_order(2).len(), 1);
        assert_eq!(q8.elements_of_order(4).len(), 6);
    }

    #[test]
    fn semidirect_trivial_action_is_direct() {
        let id = MatrixElem::identity_of(7, 1);
        let g = make_semidirect(&[id], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 7);
        let m = MatrixElem::new(7, &[vec![2]]).unwrap();
        let g = make_semidirect(&[m], DEFAULT_CAP).unwrap();
        // 2 has order 3 mod 7: C7 ⋊ C3
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
    }

    #[test]
    fn g150_basics() {
        let g = make_g150().unwrap();
        assert_eq!(g.order(), 150);
        assert!(g.center().is_trivial());
    }

    #[test]
    fn h_generator_orders() {
        let orders: Vec<u32> = h199650_action()
            .iter()
            .map(|m| {
                let mut x = m.clone();
                let mut o = 1;
                while x != m.identity() {
                    x = x.mul(m);
                    o += 1;
                }
                o
            })
            .collect();
        assert_eq!(orders, vec![2, 3, 5, 5]);
        assert_eq!(make_matrix_group(&h199650_action(), DEFAULT_CAP).unwrap().order(), 150);
    }
}
