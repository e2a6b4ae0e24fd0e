use std::fmt;
use std::sync::Arc;

use crate::error::{ForgeError, Result};

#[derive(Debug, PartialEq, Eq)]
struct SpaceData {
    name: String,
    labels: Vec<String>,
    dual: bool,
}

/// A based vector space. Every space carries a registered dual whose basis is
/// the dual basis; `v.dual().dual() == v`.
#[derive(Clone, Debug)]
pub struct Space(Arc<SpaceData>);

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Space {}

impl Space {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Space> {
        let mut sorted = labels.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ForgeError::InvalidArgument(format!("duplicate basis label {}", w[0])));
        }
        Ok(Space(Arc::new(SpaceData { name: name.into(), labels, dual: false })))
    }

    /// Space with labels `prefix1, …, prefixN`.
    pub fn numbered(name: impl Into<String>, prefix: &str, dim: usize) -> Space {
        let labels = (1..=dim).map(|i| format!("{prefix}{i}")).collect();
        Space::new(name, labels).expect("numbered labels are distinct")
    }

    pub fn name(&self) -> String {
        if self.0.dual {
            format!("{}*", self.0.name)
        } else {
            self.0.name.clone()
        }
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn label(&self, i: usize) -> String {
        if self.0.dual {
            format!("{}*", self.0.labels[i])
        } else {
            self.0.labels[i].clone()
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.label(i) == label)
    }

    pub fn is_dual_space(&self) -> bool {
        self.0.dual
    }

    pub fn dual(&self) -> Space {
        Space(Arc::new(SpaceData {
            name: self.0.name.clone(),
            labels: self.0.labels.clone(),
            dual: !self.0.dual,
        }))
    }

    pub fn is_dual_of(&self, other: &Space) -> bool {
        self.0.name == other.0.name && self.0.labels == other.0.labels && self.0.dual != other.0.dual
    }

    pub fn check_dual_of(&self, other: &Space) -> Result<()> {
        if self.is_dual_of(other) {
            Ok(())
        } else {
            Err(ForgeError::NoDual(self.name(), other.name()))
        }
    }

    pub fn expect(&self, other: &Space) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(ForgeError::SpaceMismatch { expected: self.name(), found: other.name() })
        }
    }

    /// `V₁ ⊕ … ⊕ V_n` with labels `label_j` (1-based block index).
    pub fn direct_sum(name: impl Into<String>, parts: &[Space]) -> Space {
        let labels = parts
            .iter()
            .enumerate()
            .flat_map(|(j, p)| p.labels().into_iter().map(move |l| format!("{l}_{}", j + 1)))
            .collect();
        Space::new(name, labels).expect("block suffixes keep labels distinct")
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}
