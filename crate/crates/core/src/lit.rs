//! Variables and literals.
//!
//! Variables are 0-based internally. DIMACS uses 1-based signed integers, so
//! [`Lit::from_dimacs`] and [`Lit::to_dimacs`] convert at the boundary.

use std::fmt;
use std::ops::Not;

/// A propositional variable, 0-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(u32);

impl Var {
    pub const fn new(index: u32) -> Self {
        Var(index)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// 1-based DIMACS number of this variable.
    pub const fn dimacs(self) -> u32 {
        self.0 + 1
    }

    pub const fn lit(self, positive: bool) -> Lit {
        Lit::new(self, positive)
    }
}

/// A literal: a variable with a polarity, packed as `2 * var + negated`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(u32);

impl Lit {
    pub const fn new(var: Var, positive: bool) -> Self {
        Lit(var.0 << 1 | (!positive) as u32)
    }

    /// Converts a non-zero DIMACS integer. Returns `None` for zero.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        if value == 0 {
            return None;
        }
        let var = value.unsigned_abs() - 1;
        let var = u32::try_from(var).ok().filter(|v| *v < u32::MAX >> 1)?;
        Some(Lit::new(Var(var), value > 0))
    }

    pub fn to_dimacs(self) -> i64 {
        let v = i64::from(self.var().dimacs());
        if self.is_positive() {
            v
        } else {
            -v
        }
    }

    pub const fn var(self) -> Var {
        Var(self.0 >> 1)
    }

    pub const fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    /// Dense index suitable for per-literal arrays (`2 * num_vars` entries).
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}
