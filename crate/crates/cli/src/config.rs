use std::path::Path;

use serde::Deserialize;

/// Optional TOML file with budgets and ranges. Flags given on the command
/// line take precedence.
#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Config {
    /// Cap on the number of vectors enumerated by one geometry call.
    pub budget: Option<u64>,
    pub max_n: Option<u32>,
    /// Largest `q` evaluated directly by the gap scan.
    pub qmax: Option<u64>,
    pub brauer_q: Option<Vec<u64>>,
    pub brauer_ell: Option<Vec<u64>>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys_and_rejects_others() {
        let c: Config = toml::from_str("budget = 1000\nbrauer_q = [3, 5]\n").unwrap();
        assert_eq!(c.budget, Some(1000));
        assert_eq!(c.brauer_q, Some(vec![3, 5]));
        assert!(toml::from_str::<Config>("budgt = 1").is_err());
    }
}
