use std::fmt;

use crate::error::Error;

/// Ordered part sizes `n_1, ..., n_l` of a complete multipartite graph
/// `K_{n_1,...,n_l}`.
///
/// The order is preserved so that vertex labels `(part, offset)` stay
/// stable across operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSizes {
    sizes: Vec<u64>,
    total: u64,
}

impl PartSizes {
    /// Validates that the list is nonempty, every size is positive and the
    /// total vertex count fits in `u64`.
    pub fn new(sizes: Vec<u64>) -> Result<Self, Error> {
        if sizes.is_empty() {
            return Err(Error::EmptyParts);
        }
        let mut total: u64 = 0;
        for (index, &n) in sizes.iter().enumerate() {
            if n == 0 {
                return Err(Error::ZeroPartSize { index });
            }
            total = total.checked_add(n).ok_or(Error::TotalOverflow)?;
        }
        Ok(Self { sizes, total })
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Number of parts `l`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a PartSizes always has at least one part
    }

    /// Total vertex count `N`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn min_size(&self) -> u64 {
        *self.sizes.iter().min().expect("nonempty by construction")
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u64> {
        self.sizes.iter()
    }
}

impl fmt::Display for PartSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for n in &self.sizes {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
            first = false;
        }
        Ok(())
    }
}
