//! The truncated twisted polynomial ring `R = F{x}/(x^k)` over `F = GF(2^k)`,
//! with `x a = a^2 x`, its principal unit group `S = 1 + J` and the group
//! `S ⋊ (P ⋊ Gal)`.

use std::fmt;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::ffield::{primitive_prime_divisor, Gf2kElem, Gf2kField};
use crate::groupkit::{close, FiniteGroup, GroupElement, Subgroup, DEFAULT_CAP};
use crate::numtheory::{p_part, prime_factors};

/// Largest `k` supported by the ring arithmetic.
pub const MAX_RING_DEGREE: usize = 16;

/// Largest `k` for which `S` and the full group are enumerated.
pub const MAX_ENUMERATED_DEGREE: usize = 4;

/// `F{x}/(x^k)` with `F = GF(2^k)`.
#[derive(Debug, Clone, Copy)]
pub struct TwistedRing {
    field: &'static Gf2kField,
    k: usize,
}

impl TwistedRing {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(format!("twisted ring degree {k} must be at least 2")));
        }
        if k > MAX_RING_DEGREE {
            return Err(Error::Resource {
                what: "twisted ring degree".into(),
                reached: k,
                cap: MAX_RING_DEGREE,
            });
        }
        Ok(TwistedRing {
            field: Gf2kField::shared(k as u32)?,
            k,
        })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> &'static Gf2kField {
        self.field
    }

    pub fn zero(&self) -> TwistedRingElem {
        TwistedRingElem {
            field: self.field,
            k: self.k as u8,
            coeffs: [0; MAX_RING_DEGREE],
        }
    }

    pub fn one(&self) -> TwistedRingElem {
        self.constant(1)
    }

    /// The scalar `a` (bits of a field element).
    pub fn constant(&self, a: u64) -> TwistedRingElem {
        self.monomial(a, 0)
    }

    /// `a x^i`
    pub fn monomial(&self, a: u64, i: usize) -> TwistedRingElem {
        let mut e = self.zero();
        assert!(i < self.k, "x^{i} vanishes in degree {}", self.k);
        e.coeffs[i] = self.field.elem(a).bits() as u16;
        e
    }

    /// Element with the given coefficient bits, lowest degree first.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<TwistedRingElem> {
        if coeffs.len() != self.k {
            return Err(Error::domain(format!(
                "expected {} coefficients, got {}",
                self.k,
                coeffs.len()
            )));
        }
        let mut e = self.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.field.size() {
                return Err(Error::domain(format!("coefficient {c:#x} outside GF(2^{})", self.k)));
            }
            e.coeffs[i] = c as u16;
        }
        Ok(e)
    }

    /// Uniform element of `J^u` (coefficients below `u` are zero).
    pub fn random_in_ideal<R: Rng + ?Sized>(&self, rng: &mut R, u: usize) -> TwistedRingElem {
        let mut e = self.zero();
        for i in u.min(self.k)..self.k {
            e.coeffs[i] = rng.gen_range(0..self.field.size()) as u16;
        }
        e
    }

    /// Uniform element of `S_u = 1 + J^u`.
    pub fn random_unit<R: Rng + ?Sized>(&self, rng: &mut R, u: usize) -> TwistedRingElem {
        self.random_in_ideal(rng, u.max(1)).add(&self.one())
    }
}

/// An element `a_0 + a_1 x + ... + a_{k-1} x^{k-1}` of a [`TwistedRing`].
#[derive(Clone, Copy)]
pub struct TwistedRingElem {
    field: &'static Gf2kField,
    k: u8,
    coeffs: [u16; MAX_RING_DEGREE],
}

impl PartialEq for TwistedRingElem {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.coeffs == other.coeffs
    }
}

impl Eq for TwistedRingElem {}

impl Hash for TwistedRingElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs[..self.k as usize].hash(state);
    }
}

impl fmt::Debug for TwistedRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl TwistedRingElem {
    pub fn degree(&self) -> usize {
        self.k as usize
    }

    pub fn coeff(&self, i: usize) -> Gf2kElem<'static> {
        self.field.elem(self.coeffs[i] as u64)
    }

    pub fn coeff_bits(&self) -> Vec<u64> {
        self.coeffs[..self.degree()].iter().map(|&c| c as u64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Lowest `u >= 1` with a nonzero coefficient at `x^u`, or `k` if none;
    /// for `s` in `S` this is the largest `u` with `s ∈ S_u`.
    pub fn valuation(&self) -> usize {
        (1..self.degree())
            .find(|&i| self.coeffs[i] != 0)
            .unwrap_or(self.degree())
    }

    pub fn is_principal_unit(&self) -> bool {
        self.coeffs[0] == 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for i in 0..self.degree() {
            out.coeffs[i] ^= rhs.coeffs[i];
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        twisted_mul(self, rhs)
    }

    /// Inverse of a principal unit: `(1 + y)^-1 = 1 + y + y^2 + ...`.
    pub fn inv_principal(&self) -> Result<Self> {
        if !self.is_principal_unit() {
            return Err(Error::domain("only principal units 1 + J are inverted here"));
        }
        let one = TwistedRing {
            field: self.field,
            k: self.degree(),
        }
        .one();
        let y = self.add(&one);
        let mut acc = one;
        let mut term = one;
        for _ in 1..self.degree() {
            term = term.mul(&y);
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Apply `sigma^j` to every coefficient (`x` is fixed).
    pub fn frobenius(&self, j: u32) -> Self {
        let mut out = *self;
        for i in 0..self.degree() {
            out.coeffs[i] = self.field.frobenius_bits(self.coeffs[i] as u64, j) as u16;
        }
        out
    }

    /// Multiply the coefficient of `x^u` by `g^(2^u - 1)`; this is
    /// `g^-1 s g` for the scalar `g`.
    pub fn scale_by(&self, g: u64) -> Self {
        let mut out = *self;
        let mut factor = 1u64;
        let mut gpow = g; // g^(2^u)
        for u in 0..self.degree() {
            out.coeffs[u] = self.field.mul_bits(self.coeffs[u] as u64, factor) as u16;
            // g^(2^(u+1) - 1) = g^(2^u - 1) * g^(2^u)
            factor = self.field.mul_bits(factor, gpow);
            gpow = self.field.mul_bits(gpow, gpow);
        }
        out
    }

    /// `s^-1 t^-1 s t` for principal units.
    pub fn commutator(&self, t: &Self) -> Result<Self> {
        Ok(self
            .inv_principal()?
            .mul(&t.inv_principal()?)
            .mul(self)
            .mul(t))
    }

    pub fn describe(&self) -> String {
        let cells: Vec<String> = self.coeffs[..self.degree()]
            .iter()
            .map(|c| format!("{c:#x}"))
            .collect();
        format!("[{}]", cells.join(","))
    }
}

/// The skew product: `(a x^i)(b x^j) = a b^(2^i) x^(i+j)`, dropping `x^k`
/// and above.
pub fn twisted_mul(a: &TwistedRingElem, b: &TwistedRingElem) -> TwistedRingElem {
    assert_eq!(a.k, b.k, "twisted ring elements of different degree");
    let k = a.degree();
    let f = a.field;
    let mut out = TwistedRingElem {
        field: f,
        k: a.k,
        coeffs: [0; MAX_RING_DEGREE],
    };
    for i in 0..k {
        let ai = a.coeffs[i] as u64;
        if ai == 0 {
            continue;
        }
        for j in 0..k - i {
            let bj = b.coeffs[j] as u64;
            if bj == 0 {
                continue;
            }
            let twisted = f.frobenius_bits(bj, i as u32);
            out.coeffs[i + j] ^= f.mul_bits(ai, twisted) as u16;
        }
    }
    out
}

/// `psi_u(s)`: the coefficient of `x^u` of `s ∈ S_u`.
pub fn psi_u(s: &TwistedRingElem, u: usize) -> Result<Gf2kElem<'static>> {
    if u == 0 || u >= s.degree() {
        return Err(Error::domain(format!("psi_u needs 1 <= u < {}, got {u}", s.degree())));
    }
    if !s.is_principal_unit() || s.valuation() < u {
        return Err(Error::domain(format!("{} is not in S_{u}", s.describe())));
    }
    Ok(s.coeff(u))
}

/// A principal unit viewed as a group element of `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrincipalUnit(pub TwistedRingElem);

impl GroupElement for PrincipalUnit {
    fn mul(&self, rhs: &Self) -> Self {
        PrincipalUnit(twisted_mul(&self.0, &rhs.0))
    }

    fn inv(&self) -> Self {
        PrincipalUnit(self.0.inv_principal().expect("members of S are principal units"))
    }

    fn identity(&self) -> Self {
        PrincipalUnit(
            TwistedRing {
                field: self.0.field,
                k: self.0.degree(),
            }
            .one(),
        )
    }

    fn encode(&self, out: &mut Vec<u8>) {
        encode_coeffs(&self.0, out);
    }

    fn describe(&self) -> String {
        self.0.describe()
    }
}

fn encode_coeffs(s: &TwistedRingElem, out: &mut Vec<u8>) {
    for &c in &s.coeffs[..s.degree()] {
        out.extend_from_slice(&c.to_be_bytes());
    }
}

fn check_enumerable(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::domain(format!("twisted ring degree {k} must be at least 2")));
    }
    if k > MAX_ENUMERATED_DEGREE {
        return Err(Error::Resource {
            what: format!(
                "enumeration of S for k = {k} (|S| = 2^{}); use the ring-level sampled checks",
                k * (k - 1)
            ),
            reached: k,
            cap: MAX_ENUMERATED_DEGREE,
        });
    }
    Ok(())
}

/// `S = 1 + J` under the twisted product, generated by `1 + b x^i` for
/// basis scalars `b` and `1 <= i < k`.
pub fn make_s(k: usize) -> Result<FiniteGroup> {
    check_enumerable(k)?;
    let ring = TwistedRing::new(k)?;
    let gens: Vec<PrincipalUnit> = (1..k)
        .flat_map(|i| (0..k).map(move |b| (i, 1u64 << b)))
        .map(|(i, b)| PrincipalUnit(ring.one().add(&ring.monomial(b, i))))
        .collect();
    close(&gens, DEFAULT_CAP)
}

/// `S_u = 1 + J^u` inside a group built by [`make_s`].
pub fn make_su(s: &FiniteGroup, u: usize) -> Result<Subgroup> {
    let k = s
        .element::<PrincipalUnit>(0)
        .ok_or_else(|| Error::domain("group was not built by make_s"))?
        .0
        .degree();
    if u == 0 || u > k {
        return Err(Error::domain(format!("S_u needs 1 <= u <= {k}, got {u}")));
    }
    let members: Vec<_> = s
        .elements()
        .filter(|&x| s.element::<PrincipalUnit>(x).expect("checked").0.valuation() >= u)
        .collect();
    s.subgroup_from_members(&members)
}

/// Element `(s, g, j)` of `S ⋊ (P ⋊ Gal)`: `s ∈ S`, `g` in the Sylow
/// subgroup `P` of `F^x`, and `sigma^j`.
///
/// `h = (g, j)` acts on `S` by `h(s) = scale_by(g)(sigma^j(s))`, and
/// `(s1, h1)(s2, h2) = (s1 h1(s2), h1 h2)` with
/// `(g1, j1)(g2, j2) = (g1 sigma^j1(g2), j1 + j2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistedGroupElem {
    s: TwistedRingElem,
    gamma: u16,
    j: u8,
}

impl TwistedGroupElem {
    pub fn new(s: TwistedRingElem, gamma: u64, j: u32) -> Result<Self> {
        if !s.is_principal_unit() {
            return Err(Error::domain("first component must lie in S"));
        }
        if gamma == 0 || gamma >= s.field.size() {
            return Err(Error::domain(format!("{gamma:#x} is not a nonzero scalar")));
        }
        Ok(TwistedGroupElem {
            s,
            gamma: gamma as u16,
            j: (j as usize % s.degree()) as u8,
        })
    }

    pub fn unit(&self) -> &TwistedRingElem {
        &self.s
    }

    pub fn gamma(&self) -> u64 {
        self.gamma as u64
    }

    pub fn galois_exponent(&self) -> u32 {
        self.j as u32
    }

    fn act(&self, s: &TwistedRingElem) -> TwistedRingElem {
        s.frobenius(self.j as u32).scale_by(self.gamma as u64)
    }

    fn field(&self) -> &'static Gf2kField {
        self.s.field
    }

    /// The natural action of the group on `S`: `(s', h) . s = s' h(s)`.
    pub fn act_on_unit(&self, s: &TwistedRingElem) -> TwistedRingElem {
        twisted_mul(&self.s, &self.act(s))
    }
}

impl GroupElement for TwistedGroupElem {
    fn mul(&self, rhs: &Self) -> Self {
        let f = self.field();
        let k = self.s.degree() as u8;
        let g2 = f.frobenius_bits(rhs.gamma as u64, self.j as u32);
        TwistedGroupElem {
            s: twisted_mul(&self.s, &self.act(&rhs.s)),
            gamma: f.mul_bits(self.gamma as u64, g2) as u16,
            j: (self.j + rhs.j) % k,
        }
    }

    fn inv(&self) -> Self {
        let f = self.field();
        let k = self.s.degree() as u32;
        let jinv = (k - self.j as u32) % k;
        let ginv = f.inv_bits(self.gamma as u64).expect("gamma is nonzero");
        let h = TwistedGroupElem {
            s: self.s,
            gamma: f.frobenius_bits(ginv, jinv) as u16,
            j: jinv as u8,
        };
        TwistedGroupElem {
            s: h.act(&self.s.inv_principal().expect("members of S are principal units")),
            ..h
        }
    }

    fn identity(&self) -> Self {
        TwistedGroupElem {
            s: TwistedRing {
                field: self.field(),
                k: self.s.degree(),
            }
            .one(),
            gamma: 1,
            j: 0,
        }
    }

    fn encode(&self, out: &mut Vec<u8>) {
        encode_coeffs(&self.s, out);
        out.extend_from_slice(&self.gamma.to_be_bytes());
        out.push(self.j);
    }

    fn describe(&self) -> String {
        format!("({}, {:#x}, sigma^{})", self.s.describe(), self.gamma, self.j)
    }
}

/// Generator of the Sylow subgroup of `F^x` for the primitive prime divisor
/// of `2^k - 1`, with that subgroup's order.
pub fn sylow_scalar(k: usize) -> Result<(u64, u64)> {
    let field = Gf2kField::shared(k as u32)?;
    let p = primitive_prime_divisor(k as u32)?;
    let n = field.size() - 1;
    let order = p_part(n, p);
    let primes = prime_factors(n);
    let primitive = (2..field.size())
        .find(|&a| primes.iter().all(|&q| field.pow_bits(a, (n / q) as u128) != 1))
        .expect("F^x is cyclic");
    Ok((field.pow_bits(primitive, (n / order) as u128), order))
}

/// `G = S ⋊ (P ⋊ Gal)` for `k ∈ {2, 4}`.
pub fn make_twisted_group(k: usize) -> Result<FiniteGroup> {
    check_enumerable(k)?;
    if !k.is_power_of_two() {
        return Err(Error::domain(format!("twisted group needs k a power of two, got {k}")));
    }
    close(&twisted_generators(k)?, DEFAULT_CAP)
}

/// `1 + x`, a generator of `P`, and `sigma`. The `P`-orbit of `1 + x` spans
/// `S/S_2`, and `S_2 = [S, S]`, so these generate.
pub fn twisted_generators(k: usize) -> Result<Vec<TwistedGroupElem>> {
    let ring = TwistedRing::new(k)?;
    let (gamma, _) = sylow_scalar(k)?;
    let one = ring.one();
    Ok(vec![
        TwistedGroupElem::new(one.add(&ring.monomial(1, 1)), 1, 0)?,
        TwistedGroupElem::new(one, gamma, 0)?,
        TwistedGroupElem::new(one, 1, 1)?,
    ])
}

/// The distinguished subgroups of a group from [`make_twisted_group`].
#[derive(Debug, Clone)]
pub struct TwistedParts {
    /// `S`, the normal 2-subgroup.
    pub s: Subgroup,
    /// `P`, the scalars.
    pub p: Subgroup,
    /// `S P`
    pub sp: Subgroup,
    /// `Gal`, powers of sigma.
    pub galois: Subgroup,
    /// `P Gal`
    pub complement: Subgroup,
}

pub fn twisted_parts(g: &FiniteGroup) -> Result<TwistedParts> {
    let parts = |pred: &dyn Fn(&TwistedGroupElem) -> bool| -> Result<Subgroup> {
        let mut members = Vec::new();
        for x in g.elements() {
            let e = g
                .element::<TwistedGroupElem>(x)
                .ok_or_else(|| Error::domain("group was not built by make_twisted_group"))?;
            if pred(e) {
                members.push(x);
            }
        }
        g.subgroup_from_members(&members)
    };
    Ok(TwistedParts {
        s: parts(&|e| e.gamma == 1 && e.j == 0)?,
        p: parts(&|e| e.s.valuation() == e.s.degree() && e.j == 0)?,
        sp: parts(&|e| e.j == 0)?,
        galois: parts(&|e| e.s.valuation() == e.s.degree() && e.gamma == 1)?,
        complement: parts(&|e| e.s.valuation() == e.s.degree())?,
    })
}

/// Outcome of one randomized ring identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledIdentity {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SampledIdentity {
    fn new(name: &'static str) -> Self {
        SampledIdentity {
            name,
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(witness());
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.checked > 0 && self.failures == 0
    }
}

/// Ring-level identities on random samples, for degrees too large to
/// enumerate: associativity, nilpotency of `J`, `psi_u` additivity, the
/// commutator coefficient formula, the filtration `[S_u, S_v] <= S_{u+v}`
/// and the scalar conjugation law.
pub fn sample_ring_identities<R: Rng + ?Sized>(
    k: usize,
    rng: &mut R,
    samples: usize,
) -> Result<Vec<SampledIdentity>> {
    let ring = TwistedRing::new(k)?;
    let (gamma, _) = sylow_scalar(k)?;
    let mut assoc = SampledIdentity::new("associativity");
    let mut nil = SampledIdentity::new("radical_nilpotent");
    let mut psi = SampledIdentity::new("psi_additive");
    let mut comm = SampledIdentity::new("commutator_coefficient");
    let mut filt = SampledIdentity::new("filtration");
    let mut action = SampledIdentity::new("scalar_conjugation");

    // J^(k-1) != 0 is witnessed by x^(k-1).
    let x = ring.monomial(1, 1);
    let top = (1..k - 1).fold(x, |acc, _| acc.mul(&x));
    nil.record(!top.is_zero(), || "x^(k-1) vanished".into());

    for _ in 0..samples {
        let a = ring.random_in_ideal(rng, 0);
        let b = ring.random_in_ideal(rng, 0);
        let c = ring.random_in_ideal(rng, 0);
        assoc.record(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), || {
            format!("a={} b={} c={}", a.describe(), b.describe(), c.describe())
        });

        let prod = (0..k).fold(ring.one(), |acc, _| acc.mul(&ring.random_in_ideal(rng, 1)));
        nil.record(prod.is_zero(), || format!("product of {k} radical elements = {}", prod.describe()));

        let u = rng.gen_range(1..k);
        let v = rng.gen_range(1..k);
        let s = ring.random_unit(rng, u);
        let t = ring.random_unit(rng, u);
        let lhs = psi_u(&s.mul(&t), u)?;
        let rhs = psi_u(&s, u)?.add(&psi_u(&t, u)?);
        psi.record(lhs == rhs, || format!("u={u} s={} t={}", s.describe(), t.describe()));

        let t = ring.random_unit(rng, v);
        let st = s.commutator(&t)?;
        filt.record(st.valuation() >= (u + v).min(k), || {
            format!("u={u} v={v} [s,t]={}", st.describe())
        });
        if u + v < k {
            let alpha = psi_u(&s, u)?;
            let beta = psi_u(&t, v)?;
            let expect = alpha
                .mul(&beta.frobenius(u as u32))
                .add(&beta.mul(&alpha.frobenius(v as u32)));
            comm.record(psi_u(&st, u + v)? == expect, || {
                format!("u={u} v={v} s={} t={}", s.describe(), t.describe())
            });
        }

        let g = ring.field().pow_bits(gamma, rng.gen_range(0..u64::MAX) as u128);
        let ginv = ring.field().inv_bits(g).expect("nonzero");
        let direct = ring.constant(ginv).mul(&s).mul(&ring.constant(g));
        action.record(direct == s.scale_by(g), || {
            format!("g={g:#x} s={}", s.describe())
        });
    }
    Ok(vec![assoc, nil, psi, comm, filt, action])
}

/// [`sample_ring_identities`] driven by a ChaCha8 stream seeded with `seed`,
/// so a seed reproduces the same samples on every platform.
pub fn sample_ring_identities_seeded(k: usize, seed: u64, samples: usize) -> Result<Vec<SampledIdentity>> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    sample_ring_identities(k, &mut rng, samples)
}

/// `t_1 = 2`, `t_{n+1} = 2 t_n + 2`.
pub fn tn_sequence(n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("t_n is defined for n >= 1"));
    }
    if n > 62 {
        return Err(Error::domain(format!("t_{n} overflows 64 bits")));
    }
    Ok((1..n).fold(2u64, |t, _| 2 * t + 2))
}
