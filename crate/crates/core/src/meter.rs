/// Counts letters examined by the searches, for complexity measurements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Meter {
    visited: u64,
}

impl Meter {
    pub fn new() -> Meter {
        Meter::default()
    }

    pub fn visited(&self) -> u64 {
        self.visited
    }

    pub(crate) fn tick(&mut self, n: usize) {
        self.visited += n as u64;
    }
}
