//! Step records and counters gathered while the decision procedures run.

use serde_json::Value;

#[derive(Clone, Debug, Default)]
pub struct Trace {
    enabled: bool,
    events: Vec<Value>,
    /// Constituents taken off the worklist.
    pub worklist_iterations: usize,
    /// Dimension reductions made by each nullspace descent, in call order.
    pub nullspace_iterations: Vec<usize>,
    /// Degrees of the constituents visited, in visiting order.
    pub constituent_degrees: Vec<usize>,
}

impl Trace {
    pub fn new(enabled: bool) -> Self {
        Trace { enabled, ..Self::default() }
    }

    pub fn enabled(&self) -> bool {
        self.enabled
    }

    /// Records an event; the closure only runs when recording is on.
    pub fn event(&mut self, make: impl FnOnce() -> Value) {
        if self.enabled {
            self.events.push(make());
        }
    }

    pub fn events(&self) -> &[Value] {
        &self.events
    }

    pub fn into_events(self) -> Vec<Value> {
        self.events
    }
}
