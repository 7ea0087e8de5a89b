use serde::{Deserialize, Serialize};

/// Size bounds for the exponential enumerations. Above a bound the operation
/// refuses with `CapExceeded` instead of approximating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Points for full open/closed family enumeration.
    pub families: usize,
    /// Points for exhaustive minimal-closed-set and property Q scans.
    pub rudin: usize,
    /// Points for exhaustive subset scans in the checkers; larger carriers
    /// use antichain generators.
    pub subset_scan: usize,
    /// Carrier size of K(X) for the Smyth construction.
    pub smyth: usize,
    /// Base points for the double Smyth construction.
    pub double_smyth: usize,
    /// Number of maps `|Y|^|X|` for map enumeration.
    pub maps: usize,
    /// Carrier size of a product.
    pub product: usize,
    /// Target size for universal property checks.
    pub targets: usize,
    /// Open filters are enumerated for carriers up to this size.
    pub filters: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            families: 14,
            rudin: 12,
            subset_scan: 12,
            smyth: 256,
            double_smyth: 3,
            maps: 1 << 20,
            product: 256,
            targets: 4,
            filters: 8,
        }
    }
}
