//! Flat `key = value` documents.
//!
//! One assignment per line, `#` starts a comment, blank lines are ignored.
//! Keys must be unique; consumers take the keys they understand and
//! [`KvDocument::finish`] reports whatever is left.

use std::collections::BTreeMap;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KvError {
    #[error("line {line}: expected 'key = value', got '{text}'")]
    Syntax { line: usize, text: String },
    #[error("line {line}: duplicate key '{key}' (first set on line {first})")]
    Duplicate {
        key: String,
        line: usize,
        first: usize,
    },
    #[error("unknown key(s): {}", .0.join(", "))]
    Unknown(Vec<String>),
    #[error("missing required key '{0}'")]
    Missing(String),
    #[error("line {line}: invalid value '{value}' for '{key}': {reason}")]
    Value {
        key: String,
        value: String,
        line: usize,
        reason: String,
    },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct KvDocument {
    entries: BTreeMap<String, (String, usize)>,
}

impl KvDocument {
    pub fn parse(text: &str) -> Result<Self, KvError> {
        let mut entries: BTreeMap<String, (String, usize)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .filter(|(k, _)| !k.is_empty())
                .ok_or_else(|| KvError::Syntax {
                    line,
                    text: raw.trim().to_string(),
                })?;
            if let Some((_, first)) = entries.get(key) {
                return Err(KvError::Duplicate {
                    key: key.to_string(),
                    line,
                    first: *first,
                });
            }
            entries.insert(key.to_string(), (value.to_string(), line));
        }
        Ok(Self { entries })
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    /// Removes and returns the raw value of `key`.
    pub fn take_raw(&mut self, key: &str) -> Option<(String, usize)> {
        self.entries.remove(key)
    }

    /// Removes `key` and parses it with `parse`.
    pub fn take_with<T, E: std::fmt::Display>(
        &mut self,
        key: &str,
        parse: impl FnOnce(&str) -> Result<T, E>,
    ) -> Result<Option<T>, KvError> {
        match self.take_raw(key) {
            None => Ok(None),
            Some((value, line)) => parse(&value).map(Some).map_err(|e| KvError::Value {
                key: key.to_string(),
                value,
                line,
                reason: e.to_string(),
            }),
        }
    }

    pub fn take<T>(&mut self, key: &str) -> Result<Option<T>, KvError>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        self.take_with(key, str::parse::<T>)
    }

    pub fn require<T>(&mut self, key: &str) -> Result<T, KvError>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        self.take(key)?
            .ok_or_else(|| KvError::Missing(key.to_string()))
    }

    /// Removes every key with the given prefix, returning `(suffix, value)`.
    pub fn take_prefixed(&mut self, prefix: &str) -> Vec<(String, String)> {
        let keys: Vec<String> = self
            .entries
            .keys()
            .filter(|k| k.starts_with(prefix))
            .cloned()
            .collect();
        keys.into_iter()
            .map(|k| {
                let (v, _) = self.entries.remove(&k).expect("key listed above");
                (k[prefix.len()..].to_string(), v)
            })
            .collect()
    }

    /// Fails if any key was left unconsumed.
    pub fn finish(self) -> Result<(), KvError> {
        if self.entries.is_empty() {
            Ok(())
        } else {
            Err(KvError::Unknown(self.entries.into_keys().collect()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let mut d = KvDocument::parse("# header\n\ngamma = 1.5  # trailing\ntheta=0\n").unwrap();
        assert_eq!(d.require::<f64>("gamma").unwrap(), 1.5);
        assert_eq!(d.take::<f64>("theta").unwrap(), Some(0.0));
        assert_eq!(d.take::<f64>("absent").unwrap(), None);
        d.finish().unwrap();
    }

    #[test]
    fn reports_problems_by_name() {
        assert!(matches!(
            KvDocument::parse("a = 1\na = 2"),
            Err(KvError::Duplicate {
                line: 2,
                first: 1,
                ..
            })
        ));
        assert!(matches!(
            KvDocument::parse("just text"),
            Err(KvError::Syntax { line: 1, .. })
        ));
        let d = KvDocument::parse("gama = 1\nzeta = 2").unwrap();
        let err = d.finish().unwrap_err();
        assert_eq!(err.to_string(), "unknown key(s): gama, zeta");
        let mut d = KvDocument::parse("g = abc").unwrap();
        let err = d.take::<f64>("g").unwrap_err();
        assert!(err.to_string().contains("'g'"));
        let mut d = KvDocument::parse("").unwrap();
        assert_eq!(
            d.require::<f64>("g").unwrap_err(),
            KvError::Missing("g".into())
        );
    }

    #[test]
    fn prefixed_keys() {
        let mut d = KvDocument::parse("annotation.n = 2\nannotation.note = x\nname = e").unwrap();
        let a = d.take_prefixed("annotation.");
        assert_eq!(
            a,
            vec![("n".into(), "2".into()), ("note".into(), "x".into())]
        );
        assert!(d.contains("name"));
    }
}
