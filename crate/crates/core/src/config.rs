/// Resource limits shared by the exhaustive scans.
///
/// Every computation is deterministic; there is no seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest Weyl group (or conjugacy class) that may be enumerated.
    pub scan_budget: usize,
    /// Largest natural-module dimension for rigidity searches.
    pub rigidity_dim_bound: usize,
    /// Largest `n` for partition posets.
    pub poset_bound: usize,
}

pub const DEFAULT_SCAN_BUDGET: usize = 1_000_000;
pub const BUDGET_ENV_VAR: &str = "STRATALAB_BUDGET";

impl Default for Config {
    fn default() -> Self {
        Config {
            scan_budget: DEFAULT_SCAN_BUDGET,
            rigidity_dim_bound: 14,
            poset_bound: 12,
        }
    }
}

impl Config {
    /// Default config with `scan_budget` taken from `STRATALAB_BUDGET` when set.
    pub fn from_env() -> Self {
        let mut config = Config::default();
        if let Some(budget) = std::env::var(BUDGET_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&b| b > 0)
        {
            config.scan_budget = budget;
        }
        config
    }

    pub fn with_scan_budget(mut self, budget: usize) -> Self {
        self.scan_budget = budget;
        self
    }
}
