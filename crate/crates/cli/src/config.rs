use std::collections::BTreeMap;
use std::path::Path;

/// Keys accepted in a job file.
pub const KEYS: &[&str] = &[
    "prime",
    "nvars",
    "weights",
    "a",
    "emax",
    "nmax",
    "denom_bound",
    "echeck",
    "format",
];

/// A parsed `key = value` file. Blank lines and lines starting with `#` are skipped.
#[derive(Debug, Default, Clone)]
pub struct JobFile {
    entries: BTreeMap<String, String>,
}

impl JobFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
            let key = k.trim().replace('-', "_");
            if !KEYS.contains(&key.as_str()) {
                return Err(format!("line {}: unknown key '{}'", i + 1, k.trim()));
            }
            entries.insert(key, v.trim().to_string());
        }
        Ok(JobFile { entries })
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn number<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, String> {
        self.raw(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| format!("config key {key}: bad value '{v}'"))
            })
            .transpose()
    }

    pub fn list<T: std::str::FromStr>(&self, key: &str) -> Result<Option<Vec<T>>, String> {
        self.raw(key)
            .map(|v| {
                v.split(',')
                    .map(|s| {
                        s.trim()
                            .parse()
                            .map_err(|_| format!("config key {key}: bad entry '{s}'"))
                    })
                    .collect()
            })
            .transpose()
    }

    pub fn string(&self, key: &str) -> Option<String> {
        self.raw(key).map(str::to_string)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_ignores_comments() {
        let f = JobFile::parse("# job\nprime = 7\n\nweights = 3, 2\ndenom-bound=12\n").unwrap();
        assert_eq!(f.number::<u64>("prime").unwrap(), Some(7));
        assert_eq!(f.list::<u64>("weights").unwrap(), Some(vec![3, 2]));
        assert_eq!(f.number::<u64>("denom_bound").unwrap(), Some(12));
        assert_eq!(f.number::<u32>("emax").unwrap(), None);
    }

    #[test]
    fn rejects_unknown_keys_and_garbage() {
        assert!(JobFile::parse("colour = red").is_err());
        assert!(JobFile::parse("prime 7").is_err());
        let f = JobFile::parse("prime = seven").unwrap();
        assert!(f.number::<u64>("prime").is_err());
    }
}
