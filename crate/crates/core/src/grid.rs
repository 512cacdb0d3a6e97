//! Evenly spaced parameter axes.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("grid needs at least {minimum} points, got {count}")]
    TooFewPoints { count: usize, minimum: usize },
    #[error("grid bounds must be finite, got [{start}, {end}]")]
    NonFinite { start: f64, end: f64 },
    #[error("cannot parse axis '{0}': expected start:end:count, a comma list, or a single value")]
    Parse(String),
}

/// Inclusive linear axis `start, …, end` with `count` points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Linspace {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl Linspace {
    pub fn new(start: f64, end: f64, count: usize) -> Result<Self, GridError> {
        if !start.is_finite() || !end.is_finite() {
            return Err(GridError::NonFinite { start, end });
        }
        if count < 1 {
            return Err(GridError::TooFewPoints { count, minimum: 1 });
        }
        Ok(Self { start, end, count })
    }

    /// Like [`Linspace::new`] but with at least two points.
    pub fn resolved(start: f64, end: f64, count: usize) -> Result<Self, GridError> {
        if count < 2 {
            return Err(GridError::TooFewPoints { count, minimum: 2 });
        }
        Self::new(start, end, count)
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.count == 1 {
            return self.start;
        }
        if i + 1 == self.count {
            return self.end;
        }
        self.start + (self.end - self.start) * i as f64 / (self.count - 1) as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.value(i)).collect()
    }
}

/// A parameter axis given either as a linear range or an explicit list.
#[derive(Clone, Debug, PartialEq)]
pub enum Axis {
    Range(Linspace),
    List(Vec<f64>),
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        match self {
            Axis::Range(l) => l.values(),
            Axis::List(v) => v.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Axis::Range(l) => l.count,
            Axis::List(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl FromStr for Axis {
    type Err = GridError;

    /// `start:end:count`, `v1,v2,…` or a single value.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GridError::Parse(s.to_string());
        let s = s.trim();
        if s.contains(':') {
            let parts: Vec<&str> = s.split(':').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(bad());
            }
            let start = parse_number(parts[0]).ok_or_else(bad)?;
            let end = parse_number(parts[1]).ok_or_else(bad)?;
            let count = parts[2].parse::<usize>().map_err(|_| bad())?;
            return Linspace::new(start, end, count).map(Axis::Range);
        }
        let values = s
            .split(',')
            .map(|v| parse_number(v.trim()))
            .collect::<Option<Vec<f64>>>()
            .ok_or_else(bad)?;
        if values.is_empty() {
            return Err(bad());
        }
        Ok(Axis::List(values))
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Range(l) => write!(f, "{}:{}:{}", l.start, l.end, l.count),
            Axis::List(v) => {
                let parts: Vec<String> = v.iter().map(f64::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

/// Parses a float, also accepting `pi`, `2pi`, `pi/4`, `3pi/2` style values.
pub fn parse_number(s: &str) -> Option<f64> {
    let s = s.trim();
    if let Ok(v) = s.parse::<f64>() {
        return v.is_finite().then_some(v);
    }
    let (head, denom) = match s.split_once('/') {
        Some((h, d)) => (h.trim(), d.trim().parse::<f64>().ok()?),
        None => (s, 1.0),
    };
    let mult = head.strip_suffix("pi")?.trim();
    let mult = match mult {
        "" => 1.0,
        "-" => -1.0,
        m => m.trim_end_matches('*').parse::<f64>().ok()?,
    };
    Some(mult * std::f64::consts::PI / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn endpoints_are_exact() {
        let l = Linspace::new(0.0, 4.0 * PI, 200).unwrap();
        let v = l.values();
        assert_eq!(v.len(), 200);
        assert_eq!(v[0], 0.0);
        assert_eq!(v[199], 4.0 * PI);
    }

    #[test]
    fn axis_parsing() {
        assert_eq!(
            "0:1:3".parse::<Axis>().unwrap().values(),
            vec![0.0, 0.5, 1.0]
        );
        assert_eq!(
            "0.5,1,2".parse::<Axis>().unwrap().values(),
            vec![0.5, 1.0, 2.0]
        );
        assert_eq!("pi/4".parse::<Axis>().unwrap().values(), vec![PI / 4.0]);
        assert_eq!(
            "0:2pi:2".parse::<Axis>().unwrap().values(),
            vec![0.0, 2.0 * PI]
        );
        assert!("1:2".parse::<Axis>().is_err());
        assert!("x".parse::<Axis>().is_err());
    }

    #[test]
    fn resolution_floor() {
        assert!(Linspace::resolved(0.0, 1.0, 1).is_err());
        assert!(Linspace::resolved(0.0, 1.0, 2).is_ok());
    }
}
