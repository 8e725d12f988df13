use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{same_ring, Polynomial, Ring};

/// Element of the free module `R^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    ring: Arc<Ring>,
    comps: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(comps: Vec<Polynomial>) -> Result<Self> {
        let Some(first) = comps.first() else {
            return Err(Error::RankMismatch { expected: 1, found: 0 });
        };
        let ring = first.ring().clone();
        if comps.iter().any(|p| !same_ring(p.ring(), &ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(ModuleElement { ring, comps })
    }

    pub fn zero(ring: &Arc<Ring>, rank: usize) -> Self {
        ModuleElement { ring: ring.clone(), comps: vec![Polynomial::zero(ring); rank] }
    }

    /// Standard basis vector `e_index`.
    pub fn unit(ring: &Arc<Ring>, rank: usize, index: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.comps[index] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, g: &Polynomial) -> ModuleElement {
        ModuleElement { ring: self.ring.clone(), comps: self.comps.iter().map(|c| c * g).collect() }
    }

    pub fn try_add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.check(other)?;
        Ok(ModuleElement {
            ring: self.ring.clone(),
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.check(other)?;
        Ok(ModuleElement {
            ring: self.ring.clone(),
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Dot product with another element of the same rank.
    pub fn dot(&self, other: &ModuleElement) -> Result<Polynomial> {
        self.check(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        for (a, b) in self.comps.iter().zip(&other.comps) {
            acc = &acc + &(a * b);
        }
        Ok(acc)
    }

    pub(crate) fn check(&self, other: &ModuleElement) -> Result<()> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        Ok(())
    }

    pub(crate) fn from_parts(ring: &Arc<Ring>, comps: Vec<Polynomial>) -> Self {
        ModuleElement { ring: ring.clone(), comps }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join("; "))
    }
}
