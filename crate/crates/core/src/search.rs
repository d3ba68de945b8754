//! Search budgets and outcomes shared by every exhaustive search in the crate.

use std::time::{Duration, Instant};

/// Limits on an exhaustive search. Exceeding either limit produces an
/// explicit inconclusive outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        SearchBudget {
            max_nodes,
            max_time,
        }
    }

    /// A node budget with the default wall-clock limit.
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes,
            ..SearchBudget::default()
        }
    }
}

/// Result of a search for a single witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    /// A witness was found.
    Found(T),
    /// The search space was exhausted; no witness exists.
    Exhausted,
    /// The budget ran out first.
    Inconclusive { nodes: u64 },
}

impl<T> Search<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Search::Exhausted)
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Search::Inconclusive { .. })
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Exhausted => Search::Exhausted,
            Search::Inconclusive { nodes } => Search::Inconclusive { nodes },
        }
    }
}

/// Summary of an enumeration run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumeration {
    /// Number of items reported to the visitor.
    pub emitted: u64,
    /// Search nodes expanded.
    pub nodes: u64,
    /// False if the budget ran out or the visitor stopped early.
    pub complete: bool,
}

/// Tracks budget consumption for one search.
#[derive(Debug)]
pub(crate) struct Meter {
    budget: SearchBudget,
    start: Instant,
    pub(crate) nodes: u64,
    pub(crate) exceeded: bool,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Meter {
            budget,
            start: Instant::now(),
            nodes: 0,
            exceeded: false,
        }
    }

    /// Counts one node; returns false once the budget is exhausted.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exceeded {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes & 0xfff == 0 && self.start.elapsed() > self.budget.max_time)
        {
            self.exceeded = true;
        }
        !self.exceeded
    }
}
