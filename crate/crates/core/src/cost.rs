use std::fmt;

/// An exact path weight, or the unreachable marker.
///
/// Finite values are plain integers in the scheme's fixed-point scale.
/// `Cost::UNREACHABLE` compares greater than every finite value.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Cost(u64);

impl Cost {
    pub const ZERO: Cost = Cost(0);
    pub const UNREACHABLE: Cost = Cost(u64::MAX);

    /// Largest value a finite cost may hold.
    pub const MAX_FINITE: u64 = u64::MAX - 1;

    #[inline]
    pub const fn finite(v: u64) -> Cost {
        debug_assert!(v != u64::MAX);
        Cost(v)
    }

    #[inline]
    pub const fn is_finite(self) -> bool {
        self.0 != u64::MAX
    }

    #[inline]
    pub const fn value(self) -> Option<u64> {
        if self.is_finite() {
            Some(self.0)
        } else {
            None
        }
    }

    /// Raw representation; `u64::MAX` for unreachable.
    #[inline]
    pub(crate) const fn raw(self) -> u64 {
        self.0
    }

    /// Unreachable absorbs; finite overflow is reported as `None`.
    #[inline]
    pub fn checked_add(self, other: Cost) -> Option<Cost> {
        if !self.is_finite() || !other.is_finite() {
            return Some(Cost::UNREACHABLE);
        }
        match self.0.checked_add(other.0) {
            Some(v) if v <= Self::MAX_FINITE => Some(Cost(v)),
            _ => None,
        }
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
