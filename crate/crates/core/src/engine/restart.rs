//! Luby restart schedule.

/// Element `x` (0-based) of the Luby sequence with base `y`:
/// for `y = 2` this is 1, 1, 2, 1, 1, 2, 4, 1, 1, 2, ...
pub fn luby(y: f64, mut x: u64) -> f64 {
    // Find the finite subsequence that contains index `x` and its size.
    let (mut size, mut seq) = (1u64, 0i32);
    while size < x + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != x {
        size = (size - 1) >> 1;
        seq -= 1;
        x %= size;
    }
    y.powi(seq)
}

/// Restart after `unit * luby(2, restarts)` conflicts.
#[derive(Clone, Debug, PartialEq)]
pub struct LubyRestarts {
    unit: u64,
    restarts: u64,
    since_restart: u64,
}

impl LubyRestarts {
    pub fn new(unit: u64) -> Self {
        assert!(unit > 0, "restart unit must be positive");
        LubyRestarts {
            unit,
            restarts: 0,
            since_restart: 0,
        }
    }

    pub fn on_conflict(&mut self) {
        self.since_restart += 1;
    }

    /// Conflict budget of the current run.
    pub fn budget(&self) -> u64 {
        (luby(2.0, self.restarts) * self.unit as f64) as u64
    }

    pub fn is_due(&self) -> bool {
        self.since_restart >= self.budget()
    }

    pub fn advance(&mut self) {
        self.restarts += 1;
        self.since_restart = 0;
    }

    pub fn restarts(&self) -> u64 {
        self.restarts
    }
}
