use crate::error::{Error, Result};

/// Cost guard for combinatorial computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_s: usize,
    pub max_l: usize,
    pub max_k: usize,
    pub max_count: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_s: 3, max_l: 3, max_k: 4, max_count: 10_000 }
    }
}

impl Bounds {
    pub fn unlimited() -> Self {
        Bounds { max_s: usize::MAX, max_l: usize::MAX, max_k: usize::MAX, max_count: usize::MAX }
    }

    pub fn check(&self, s: usize, l: usize, k: usize) -> Result<()> {
        if s > self.max_s || l > self.max_l || k > self.max_k {
            return Err(Error::BoundsExceeded(format!(
                "(s, l, k) = ({s}, {l}, {k}) exceeds limits ({}, {}, {})",
                self.max_s, self.max_l, self.max_k
            )));
        }
        Ok(())
    }

    pub fn check_count(&self, count: usize) -> Result<()> {
        if count > self.max_count {
            return Err(Error::BoundsExceeded(format!("count {count} exceeds limit {}", self.max_count)));
        }
        Ok(())
    }
}
