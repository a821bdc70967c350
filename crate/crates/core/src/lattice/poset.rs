use crate::error::Error;
use crate::report::Report;
use serde::{Deserialize, Serialize};

/// A finite partially ordered set over interned element ids.
///
/// Element ids are indices into the name list; the order relation is a full
/// boolean matrix. Construction normally goes through
/// [`FinitePoset::from_cover`], which closes a Hasse-edge list reflexively
/// and transitively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePoset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds the poset from an explicit relation matrix and validates the
    /// poset laws.
    pub fn new(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, Error> {
        let n = names.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::structural("order matrix does not match element count"));
        }
        let poset = FinitePoset { names, leq };
        let report = poset.check();
        if !report.ok() {
            let first = report.failures().next().unwrap();
            return Err(Error::structural(format!(
                "{} ({})",
                first.law,
                first.witness.as_deref().unwrap_or("")
            )));
        }
        Ok(poset)
    }

    /// Builds from Hasse edges `(lower, upper)`; the order is the
    /// reflexive-transitive closure.
    pub fn from_cover(names: Vec<String>, cover: &[(usize, usize)]) -> Result<Self, Error> {
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in cover {
            if a >= n || b >= n {
                return Err(Error::structural("cover edge out of range"));
            }
            leq[a][b] = true;
        }
        // Floyd–Warshall closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FinitePoset::new(names, leq)
    }

    pub fn chain(n: usize) -> Self {
        let names = (0..n).map(|i| format!("c{i}")).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        FinitePoset { names, leq }
    }

    pub fn antichain(n: usize) -> Self {
        let names = (0..n).map(|i| format!("a{i}")).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        FinitePoset { names, leq }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Componentwise-order product.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let mut names = Vec::with_capacity(self.len() * other.len());
        for a in &self.names {
            for b in &other.names {
                names.push(format!("({a},{b})"));
            }
        }
        let m = other.len();
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for i1 in 0..self.len() {
            for j1 in 0..m {
                for i2 in 0..self.len() {
                    for j2 in 0..m {
                        leq[i1 * m + j1][i2 * m + j2] = self.le(i1, i2) && other.le(j1, j2);
                    }
                }
            }
        }
        FinitePoset { names, leq }
    }

    /// Poset-law report: reflexivity, antisymmetry, transitivity.
    pub fn check(&self) -> Report {
        let n = self.len();
        let mut report = Report::new("poset");
        report.record("reflexive", (0..n).all(|i| self.leq[i][i]), || {
            let i = (0..n).find(|&i| !self.leq[i][i]).unwrap();
            format!("{} ≰ itself", self.names[i])
        });
        let mut anti = None;
        let mut trans = None;
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i][j] && self.leq[j][i] && anti.is_none() {
                    anti = Some((i, j));
                }
                for k in 0..n {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] && trans.is_none() {
                        trans = Some((i, j, k));
                    }
                }
            }
        }
        report.record("antisymmetric", anti.is_none(), || {
            let (i, j) = anti.unwrap();
            format!("{} and {} are mutually below each other", self.names[i], self.names[j])
        });
        report.record("transitive", trans.is_none(), || {
            let (i, j, k) = trans.unwrap();
            format!(
                "{} ≤ {} ≤ {} but not {} ≤ {}",
                self.names[i], self.names[j], self.names[k], self.names[i], self.names[k]
            )
        });
        report
    }

    /// DOT rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let n = self.len();
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for name in &self.names {
            out.push_str(&format!("  \"{name}\";\n"));
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i][j] {
                    // edge only when j covers i
                    let covered = (0..n)
                        .any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]);
                    if !covered {
                        out.push_str(&format!(
                            "  \"{}\" -> \"{}\";\n",
                            self.names[i], self.names[j]
                        ));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_closure() {
        let p = FinitePoset::from_cover(
            vec!["a".into(), "b".into(), "c".into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        assert!(p.le(0, 2));
        assert!(!p.le(2, 0));
        assert!(p.check().ok());
    }

    #[test]
    fn rejects_cycles() {
        let out = FinitePoset::from_cover(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]);
        assert!(out.is_err());
    }

    #[test]
    fn product_order_is_componentwise() {
        let p = FinitePoset::chain(2).product(&FinitePoset::chain(2));
        assert_eq!(p.len(), 4);
        assert!(p.le(0, 3));
        assert!(!p.le(1, 2));
        assert!(!p.le(2, 1));
    }
}
