//! Machine-readable verdict reports: one `key=value` per line, in insertion
//! order.

use std::fmt;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerdictReport {
    entries: Vec<(String, String)>,
}

impl VerdictReport {
    pub fn new(command: &str) -> Self {
        let mut r = VerdictReport::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.entries.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// Parses the text form back into a report.
    pub fn parse(text: &str) -> Option<Self> {
        let entries = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
            .collect::<Option<Vec<_>>>()?;
        Some(VerdictReport { entries })
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_in_order() {
        let mut r = VerdictReport::new("verify-h");
        r.push("verdict", true).push("subtrees", 88);
        let text = r.to_string();
        assert_eq!(text, "command=verify-h\nverdict=true\nsubtrees=88\n");
        assert_eq!(VerdictReport::parse(&text).unwrap(), r);
        assert_eq!(r.get("subtrees"), Some("88"));
    }
}
