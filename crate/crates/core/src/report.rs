//! Result record for one counting run.

use std::fmt;
use std::time::Duration;

use num_bigint::BigUint;

/// How a count was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Partition-matrix recipes over boundary words.
    Partition,
    /// Column transfer-matrix power.
    Transfer,
    /// Direct backtracking over the whole board.
    BruteForce,
    /// Closed-form expression for one, two, or three rows.
    ClosedForm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Partition => "partition",
            Method::Transfer => "transfer",
            Method::BruteForce => "bruteforce",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact knot-mosaic count for one board size, with provenance and timing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub rows: usize,
    pub cols: usize,
    pub value: BigUint,
    pub method: Method,
    pub elapsed: Duration,
}

impl CountReport {
    pub fn new(rows: usize, cols: usize, value: BigUint, method: Method, elapsed: Duration) -> Self {
        CountReport {
            rows,
            cols,
            value,
            method,
            elapsed,
        }
    }
}
