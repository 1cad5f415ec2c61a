//! Execution strategy for the exhaustive sweeps.
//!
//! `Parallel` runs on the rayon global pool when the `parallel` feature is
//! enabled and degrades to `Sequential` otherwise.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if Exec::parallel_available() {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// The strategy actually used once feature availability is accounted for.
    pub fn effective(self) -> Exec {
        match self {
            Exec::Parallel if Exec::parallel_available() => Exec::Parallel,
            _ => Exec::Sequential,
        }
    }

    /// Maps `f` over `items`, keeping input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self.effective() {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Like [`Exec::map`] but drops `None` results.
    pub fn filter_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        self.map(items, f).into_iter().flatten().collect()
    }
}

impl fmt::Display for Exec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exec::Sequential => "sequential",
            Exec::Parallel => "parallel",
        })
    }
}

impl FromStr for Exec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sequential" | "seq" => Ok(Exec::Sequential),
            "parallel" | "par" => Ok(Exec::Parallel),
            other => Err(format!("unknown execution mode {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(&items, |x| x * x);
        let par = Exec::Parallel.map(&items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 998_001);
        let odd = Exec::Parallel.filter_map(&items, |&x| (x % 2 == 1).then_some(x));
        assert_eq!(odd.len(), 500);
    }

    #[test]
    fn parsing_and_fallback() {
        assert_eq!("seq".parse::<Exec>().unwrap(), Exec::Sequential);
        assert_eq!("parallel".parse::<Exec>().unwrap(), Exec::Parallel);
        assert!("threads".parse::<Exec>().is_err());
        assert_eq!(Exec::Sequential.effective(), Exec::Sequential);
        assert_eq!(Exec::Parallel.effective() == Exec::Parallel, Exec::parallel_available());
    }
}
