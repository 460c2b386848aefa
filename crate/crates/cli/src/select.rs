//! Parsing of `--alpha` sets and `--n` ranges.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use akcong::prover::THEOREM_ALPHAS;

/// Largest alpha accepted on the command line. `3 * alpha + 2` colors at this
/// size already need weeks of sieving.
const ALPHA_CAP: u64 = 100_000;

/// A sorted, deduplicated set of alpha values plus the text it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub label: String,
    pub values: Vec<u64>,
}

impl FromStr for Selection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let label = s.trim().to_string();
        let values: Vec<u64> = match label.as_str() {
            "theorem-list" | "all" => THEOREM_ALPHAS.to_vec(),
            "" => return Err("empty alpha selection".into()),
            list => {
                let mut set = BTreeSet::new();
                for item in list.split(',') {
                    let r: IndexRange = item.parse()?;
                    if r.end > ALPHA_CAP {
                        return Err(format!("alpha {} above cap {ALPHA_CAP}", r.end));
                    }
                    set.extend(r.start..=r.end);
                }
                set.into_iter().collect()
            }
        };
        Ok(Selection { label, values })
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Inclusive range written `a` or `a-b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub start: u64,
    pub end: u64,
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let number = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("'{t}' is not a nonnegative integer"))
        };
        let (start, end) = match s.split_once('-') {
            Some((a, b)) => (number(a)?, number(b)?),
            None => {
                let n = number(s)?;
                (n, n)
            }
        };
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(IndexRange { start, end })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_sets() {
        let s: Selection = "theorem-list".parse().unwrap();
        assert_eq!(s.values.len(), 25);
        assert_eq!("all".parse::<Selection>().unwrap().values, s.values);
    }

    #[test]
    fn lists_and_ranges_merge() {
        let s: Selection = "7,1-3,2".parse().unwrap();
        assert_eq!(s.values, vec![1, 2, 3, 7]);
    }

    #[test]
    fn bad_input() {
        assert!("5-2".parse::<IndexRange>().is_err());
        assert!("x".parse::<Selection>().is_err());
        assert!("".parse::<Selection>().is_err());
        assert!("1,".parse::<Selection>().is_err());
    }
}
