//! Submodule algebra: intersections, colon ideals, saturation, annihilators,
//! equality and the torsion-free closure of `im A^T`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gb::{buchberger, syzygy_matrix, syzygy_module, ModuleElement, ModuleOrder, PolyMatrix, Submodule};
use crate::poly::{same_ring, MonomialOrder, Polynomial, Ring};

/// Ideal of `R`, stored as a rank-one submodule with its reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    gb: Submodule,
}

impl Ideal {
    pub fn generate(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Ideal> {
        let elems: Vec<ModuleElement> =
            gens.iter().map(|g| ModuleElement::new(vec![g.clone()])).collect::<Result<_>>()?;
        Ok(Ideal { gb: Submodule::generate(ring, 1, &elems)? })
    }

    pub fn from_module(gb: Submodule) -> Result<Ideal> {
        if gb.rank() != 1 {
            return Err(Error::RankMismatch { expected: 1, found: gb.rank() });
        }
        Ok(Ideal { gb })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal { gb: Submodule::zero(ring, 1) }
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal { gb: Submodule::full(ring, 1) }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.gb.ring()
    }

    pub fn module(&self) -> &Submodule {
        &self.gb
    }

    /// Reduced Gröbner basis as polynomials.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.gb.generators().iter().map(|g| g.component(0).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.is_full()
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        self.gb.contains(&ModuleElement::new(vec![p.clone()])?)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.gb.contains_module(&other.gb)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for a in self.generators() {
            for b in other.generators() {
                gens.push(a.try_mul(&b)?);
            }
        }
        Ideal::generate(self.ring(), &gens)
    }

    pub fn power(&self, m: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(self.ring());
        for _ in 0..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        Ideal::from_module(intersect_modules(&self.gb, &other.gb)?)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        let gens: Vec<String> = self.generators().iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

fn check_pair(m: &Submodule, n: &Submodule) -> Result<()> {
    if !same_ring(m.ring(), n.ring()) {
        return Err(Error::RingMismatch);
    }
    if m.rank() != n.rank() {
        return Err(Error::RankMismatch { expected: m.rank(), found: n.rank() });
    }
    Ok(())
}

/// `p` viewed in `ext`, a ring with one auxiliary variable prepended.
pub(crate) fn lift_poly(p: &Polynomial, ext: &Arc<Ring>) -> Polynomial {
    p.map_ring(ext, |m| Some(m.extend_front(1))).expect("lifting never fails")
}

fn lift(e: &ModuleElement, ext: &Arc<Ring>) -> Vec<Polynomial> {
    e.components().iter().map(|p| lift_poly(p, ext)).collect()
}

/// `M ∩ N`, computed by eliminating `t` from `t*M + (1-t)*N` in `R[t]^k`.
pub fn intersect_modules(m: &Submodule, n: &Submodule) -> Result<Submodule> {
    check_pair(m, n)?;
    let ring = m.ring();
    let rank = m.rank();
    if m.is_zero() || n.is_full() {
        return Submodule::generate(ring, rank, m.generators());
    }
    if n.is_zero() || m.is_full() {
        return Submodule::generate(ring, rank, n.generators());
    }
    let ext = ring.extend_front(1, MonomialOrder::Elimination { block: 1, rest: ring.order().base() });
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::with_capacity(m.len() + n.len());
    for g in m.generators() {
        gens.push(ModuleElement::new(lift(g, &ext).iter().map(|p| p * &t).collect())?);
    }
    for g in n.generators() {
        gens.push(ModuleElement::new(lift(g, &ext).iter().map(|p| p * &one_minus_t).collect())?);
    }
    let big = buchberger(&ext, rank, &gens, ModuleOrder::pot(ext.order()))?;
    let mut kept = Vec::new();
    for g in big.generators() {
        let comps: Option<Vec<Polynomial>> =
            g.components().iter().map(|p| p.map_ring(ring, |mono| mono.drop_front(1))).collect();
        if let Some(comps) = comps {
            kept.push(ModuleElement::new(comps)?);
        }
    }
    Submodule::generate(ring, rank, &kept)
}

/// The ideal `(M : v) = {r in R : r v in M}`, read off the syzygies of
/// `[v | generators of M]`.
pub fn colon_ideal(m: &Submodule, v: &ModuleElement) -> Result<Ideal> {
    if !same_ring(m.ring(), v.ring()) {
        return Err(Error::RingMismatch);
    }
    if v.rank() != m.rank() {
        return Err(Error::RankMismatch { expected: m.rank(), found: v.rank() });
    }
    let ring = m.ring();
    let mut gens = vec![v.clone()];
    gens.extend(m.generators().iter().cloned());
    let syz = syzygy_module(ring, m.rank(), &gens)?;
    let coeffs: Vec<Polynomial> = syz.generators().iter().map(|s| s.component(0).clone()).collect();
    Ideal::generate(ring, &coeffs)
}

/// `Ann(Mc / M) = {r : r Mc ⊆ M}`; requires `M ⊆ Mc`.
pub fn annihilator_quotient(mc: &Submodule, m: &Submodule) -> Result<Ideal> {
    check_pair(mc, m)?;
    for g in m.generators() {
        if !mc.contains(g)? {
            return Err(Error::NotContained(format!("generator {g} of M is not in Mc")));
        }
    }
    let mut acc = Ideal::unit(mc.ring());
    for v in mc.generators() {
        if m.contains(v)? {
            continue;
        }
        acc = acc.intersect(&colon_ideal(m, v)?)?;
    }
    Ok(acc)
}

/// `(M : g) = (M ∩ g R^k) / g`.
pub fn quotient_by_poly(m: &Submodule, g: &Polynomial) -> Result<Submodule> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = m.ring();
    let rank = m.rank();
    if g.is_constant() {
        return Ok(m.clone());
    }
    let scaled: Vec<ModuleElement> = (0..rank).map(|i| ModuleElement::unit(ring, rank, i).scale(g)).collect();
    let g_module = Submodule::generate(ring, rank, &scaled)?;
    let meet = intersect_modules(m, &g_module)?;
    let divided = meet
        .generators()
        .iter()
        .map(|e| {
            let comps = e.components().iter().map(|c| c.div_exact(g)).collect::<Result<Vec<_>>>()?;
            ModuleElement::new(comps)
        })
        .collect::<Result<Vec<_>>>()?;
    Submodule::generate(ring, rank, &divided)
}

/// `(M : g)` from the syzygies of `[g e_1, ..., g e_k | generators of M]`;
/// an independent route used to cross-check [`quotient_by_poly`].
pub fn quotient_by_poly_via_syzygies(m: &Submodule, g: &Polynomial) -> Result<Submodule> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = m.ring();
    let rank = m.rank();
    let mut gens: Vec<ModuleElement> = (0..rank).map(|i| ModuleElement::unit(ring, rank, i).scale(g)).collect();
    gens.extend(m.generators().iter().cloned());
    let syz = syzygy_module(ring, rank, &gens)?;
    let projected: Vec<ModuleElement> =
        syz.generators().iter().map(|s| ModuleElement::new(s.components()[..rank].to_vec())).collect::<Result<_>>()?;
    Submodule::generate(ring, rank, &projected)
}

/// `(M : g^∞)` together with the least `m` such that
/// `(M : g^m) = (M : g^(m+1))`.
pub fn saturate(m: &Submodule, g: &Polynomial) -> Result<(Submodule, u32)> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut cur = Submodule::generate(m.ring(), m.rank(), m.generators())?;
    let mut steps = 0;
    loop {
        let next = quotient_by_poly(&cur, g)?;
        if module_equal(&next, &cur)? {
            return Ok((cur, steps));
        }
        cur = next;
        steps += 1;
    }
}

/// Module equality, decided both by two-way generator membership and by
/// comparing reduced bases. The two verdicts must agree.
pub fn module_equal(m: &Submodule, n: &Submodule) -> Result<bool> {
    check_pair(m, n)?;
    let by_membership = n.contains_module(m)? && m.contains_module(n)?;
    if m.order() == n.order() {
        let by_basis = m.generators() == n.generators();
        if by_basis != by_membership {
            return Err(Error::Inconsistent("reduced bases and membership disagree on module equality".into()));
        }
    }
    Ok(by_membership)
}

/// `im A^T`, the submodule of `R^k` spanned by the rows of `A`.
pub fn row_module(a: &PolyMatrix) -> Result<Submodule> {
    Submodule::generate(a.ring(), a.ncols(), &a.rows())
}

/// Smallest `Mc ⊇ im A^T` with `R^k / Mc` torsion-free, computed as
/// `ker S^T` for the syzygy matrix `S` of `A`.
pub fn tf_closure(a: &PolyMatrix) -> Result<Submodule> {
    let s = syzygy_matrix(a);
    tf_closure_from_syzygies(a.ring(), a.ncols(), &s)
}

pub(crate) fn tf_closure_from_syzygies(ring: &Arc<Ring>, k: usize, s: &PolyMatrix) -> Result<Submodule> {
    if s.ncols() == 0 {
        return Ok(Submodule::full(ring, k));
    }
    let closure = syzygy_matrix(&s.transpose());
    if closure.ncols() == 0 {
        return Ok(Submodule::zero(ring, k));
    }
    Submodule::generate(ring, k, &closure.columns())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring(vars: &[&str]) -> Arc<Ring> {
        Ring::new(vars.iter().copied()).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_poly(s, r).unwrap()
    }

    fn elem(r: &Arc<Ring>, comps: &[&str]) -> ModuleElement {
        ModuleElement::new(comps.iter().map(|s| p(r, s)).collect()).unwrap()
    }

    fn module(r: &Arc<Ring>, rank: usize, gens: &[&[&str]]) -> Submodule {
        let gens: Vec<ModuleElement> = gens.iter().map(|g| elem(r, g)).collect();
        Submodule::generate(r, rank, &gens).unwrap()
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::generate(r, &gens.iter().map(|s| p(r, s)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn coprime_principal_ideals_intersect_in_product() {
        let r = ring(&["x", "y"]);
        let meet = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert_eq!(meet, ideal(&r, &["x*y"]));
    }

    #[test]
    fn intersection_is_idempotent() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &[&["x^2", "y"], &["x*y", "x"]]);
        assert!(module_equal(&intersect_modules(&m, &m).unwrap(), &m).unwrap());
    }

    #[test]
    fn gradient_fixture_intersection() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &[&["x*(x^2+y^2)", "y*(x^2+y^2)"]]);
        let mc = module(&r, 2, &[&["x", "y"]]);
        let mu = module(&r, 2, &[&["x*(x^2+y^2)", "y*(x^2+y^2)"], &["x^2+y^2", "0"], &["0", "x^2+y^2"]]);
        let meet = intersect_modules(&mc, &mu).unwrap();
        assert!(module_equal(&meet, &m).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &[&["x*(x^2+y^2)", "y*(x^2+y^2)"]]);
        assert_eq!(colon_ideal(&m, &elem(&r, &["x", "y"])).unwrap(), ideal(&r, &["x^2+y^2"]));
        assert!(colon_ideal(&m, &m.generators()[0]).unwrap().is_unit());
        let zero = Submodule::zero(&r, 2);
        assert!(colon_ideal(&zero, &elem(&r, &["x", "1"])).unwrap().is_zero());
        assert!(colon_ideal(&m, &elem(&r, &["x"])).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &[&["x*(x^2+y^2)", "y*(x^2+y^2)"]]);
        let mc = module(&r, 2, &[&["x", "y"]]);
        assert!(annihilator_quotient(&m, &m).unwrap().is_unit());
        assert_eq!(annihilator_quotient(&mc, &m).unwrap(), ideal(&r, &["x^2+y^2"]));
        assert!(matches!(annihilator_quotient(&m, &mc), Err(Error::NotContained(_))));
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &[&["x*(x^2+y^2)", "y*(x^2+y^2)"]]);
        let (same, steps) = saturate(&m, &p(&r, "7")).unwrap();
        assert_eq!((same, steps), (m.clone(), 0));
        let (sat, steps) = saturate(&m, &p(&r, "x^2+y^2")).unwrap();
        assert_eq!(steps, 1);
        assert!(module_equal(&sat, &module(&r, 2, &[&["x", "y"]])).unwrap());
        let i = module(&r, 1, &[&["x^2*y"]]);
        let (sat, steps) = saturate(&i, &p(&r, "x")).unwrap();
        assert_eq!(steps, 2);
        assert_eq!(sat, module(&r, 1, &[&["y"]]));
        assert_eq!(saturate(&i, &Polynomial::zero(&r)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn quotient_routes_agree() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &[&["x^2*y", "x*y"], &["y^3", "x^2"], &["x*y^2", "0"]]);
        for g in ["x", "y", "x*y", "x+y"] {
            let g = p(&r, g);
            let a = quotient_by_poly(&m, &g).unwrap();
            let b = quotient_by_poly_via_syzygies(&m, &g).unwrap();
            assert!(module_equal(&a, &b).unwrap());
        }
    }

    #[test]
    fn module_equality() {
        let r = ring(&["x", "y"]);
        let a = module(&r, 2, &[&["x", "y"], &["y", "0"]]);
        let b = module(&r, 2, &[&["y", "0"], &["x", "y"]]);
        assert!(module_equal(&a, &b).unwrap());
        assert!(!module_equal(&module(&r, 1, &[&["x"]]), &module(&r, 1, &[&["x^2"]])).unwrap());
        assert!(module_equal(&a, &module(&r, 1, &[&["x"]])).is_err());
    }

    #[test]
    fn closure_examples() {
        let r = ring(&["x", "y"]);
        let a = PolyMatrix::parse(&r, &[vec!["x*(x^2+y^2)", "y*(x^2+y^2)"]]).unwrap();
        let mc = tf_closure(&a).unwrap();
        assert!(module_equal(&mc, &module(&r, 2, &[&["x", "y"]])).unwrap());
        let lap = PolyMatrix::parse(&r, &[vec!["x^2+y^2"]]).unwrap();
        assert!(tf_closure(&lap).unwrap().is_full());
        let e = Ring::new(["x1", "x2", "x3"]).unwrap();
        let euler = PolyMatrix::parse(
            &e,
            &[vec!["x1", "0", "x2", "x3", "x2"], vec!["0", "x1", "-x3", "x2", "x3"], vec!["x2", "x3", "0", "0", "0"]],
        )
        .unwrap();
        assert!(module_equal(&tf_closure(&euler).unwrap(), &row_module(&euler).unwrap()).unwrap());
    }
}
