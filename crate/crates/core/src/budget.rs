/// Upper bound on the number of memoized states an exact search may create.
///
/// Searches that run out report [`crate::Error::ResourceLimit`]; they never
/// return a partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateBudget(pub usize);

impl StateBudget {
    pub const UNLIMITED: StateBudget = StateBudget(usize::MAX);

    pub fn states(self) -> usize {
        self.0
    }
}

impl Default for StateBudget {
    fn default() -> Self {
        StateBudget(5_000_000)
    }
}
