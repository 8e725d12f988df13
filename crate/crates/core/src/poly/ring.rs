use std::sync::Arc;

use super::MonomialOrder;
use crate::error::{Error, Result};

/// Polynomial ring `Q[x1, ..., xn]` together with the monomial order used for
/// canonical term lists.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Ring over the given variables with the default grevlex order.
    pub fn new<I, S>(vars: I) -> Result<Arc<Ring>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_order(vars, MonomialOrder::Grevlex)
    }

    pub fn with_order<I, S>(vars: I, order: MonomialOrder) -> Result<Arc<Ring>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidVariables("at least one variable is required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidVariables(format!("`{v}` is not a valid name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidVariables(format!("`{v}` appears twice")));
            }
        }
        if matches!(order, MonomialOrder::Elimination { .. }) {
            return Err(Error::InvalidVariables("elimination orders are internal".into()));
        }
        Ok(Arc::new(Ring { vars, order }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Ring with `count` auxiliary variables prepended. Auxiliary names start
    /// with an underscore so they can never collide with user variables.
    pub(crate) fn extend_front(&self, count: usize, order: MonomialOrder) -> Arc<Ring> {
        let mut vars: Vec<String> = (0..count).map(|i| format!("_t{i}")).collect();
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring { vars, order })
    }
}

/// Two ring handles denote the same ring.
pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
