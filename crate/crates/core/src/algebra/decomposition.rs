use serde::{Deserialize, Serialize};

use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Role a declared block of basis vectors plays in the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    /// A simple ideal.
    Simple,
    /// Part of the center.
    Center,
    /// An ideal with no further declared structure.
    Ideal,
    /// A Levi factor (subalgebra, not an ideal in general).
    Levi,
    /// The radical.
    Radical,
}

/// A contiguous range of basis indices with a declared role.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub kind: ComponentKind,
    pub start: usize,
    pub len: usize,
    pub label: Option<String>,
}

impl Component {
    pub fn new(kind: ComponentKind, start: usize, len: usize) -> Self {
        Component {
            kind,
            start,
            len,
            label: None,
        }
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }

    pub fn subspace(&self, ambient: usize) -> Subspace {
        Subspace::coordinate(ambient, self.range())
    }
}

/// Declared structure of an algebra. Nothing here is discovered; the
/// catalog and `direct_sum` fill it in and the loader validates its shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    /// When set, the components are ideals whose vector-space direct sum
    /// is the whole algebra, with zero brackets between different components.
    pub direct_sum: bool,
    pub components: Vec<Component>,
}

impl Decomposition {
    pub fn direct(components: Vec<Component>) -> Self {
        Decomposition {
            direct_sum: true,
            components,
        }
    }

    pub fn partial(components: Vec<Component>) -> Self {
        Decomposition {
            direct_sum: false,
            components,
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.direct_sum
            && !self.components.is_empty()
            && self.components.iter().all(|c| c.kind == ComponentKind::Simple)
    }

    pub fn is_reductive(&self) -> bool {
        self.direct_sum
            && self
                .components
                .iter()
                .all(|c| matches!(c.kind, ComponentKind::Simple | ComponentKind::Center))
    }

    pub fn of_kind(&self, kind: ComponentKind) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(move |c| c.kind == kind)
    }

    /// Span of every component of the given kind.
    pub fn declared(&self, ambient: usize, kind: ComponentKind) -> Option<Subspace> {
        let idx: Vec<usize> = self.of_kind(kind).flat_map(Component::range).collect();
        if self.of_kind(kind).next().is_none() {
            None
        } else {
            Some(Subspace::coordinate(ambient, idx))
        }
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        for c in &self.components {
            if c.len == 0 || c.start + c.len > dim {
                return Err(Error::Schema(format!(
                    "component {:?} at {}..{} does not fit in dimension {dim}",
                    c.kind,
                    c.start,
                    c.start + c.len
                )));
            }
        }
        if self.direct_sum {
            let mut covered = vec![false; dim];
            for c in &self.components {
                for i in c.range() {
                    if covered[i] {
                        return Err(Error::Schema(format!(
                            "direct-sum components overlap at basis index {}",
                            i + 1
                        )));
                    }
                    covered[i] = true;
                }
            }
            if let Some(i) = covered.iter().position(|&c| !c) {
                return Err(Error::Schema(format!(
                    "direct-sum components do not cover basis index {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn shifted(&self, offset: usize) -> Vec<Component> {
        self.components
            .iter()
            .map(|c| Component {
                start: c.start + offset,
                ..c.clone()
            })
            .collect()
    }
}
