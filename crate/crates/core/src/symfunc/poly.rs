//! Sparse polynomials with big-integer coefficients in `n` commuting variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        SymPoly::monomial(vec![0; nvars], BigInt::one())
    }

    /// `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        SymPoly::monomial(e, BigInt::one())
    }

    pub fn monomial(exponents: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = SymPoly::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// # Panics
    /// If the exponent vector has the wrong length.
    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Number of monomials with a nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The lexicographically greatest monomial.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &BigInt) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }

    /// Total degree when every monomial has the same one; `Some(0)` for zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    fn permuted(e: &[u32], perm: &[usize]) -> Vec<u32> {
        perm.iter().map(|&i| e[i]).collect()
    }

    /// Full orbit check for at most three variables, adjacent transpositions
    /// beyond.
    pub fn is_symmetric(&self) -> bool {
        let perms: Vec<Vec<usize>> = if self.nvars <= 3 {
            permutations(self.nvars)
        } else {
            (0..self.nvars - 1)
                .map(|i| {
                    let mut p: Vec<usize> = (0..self.nvars).collect();
                    p.swap(i, i + 1);
                    p
                })
                .collect()
        };
        self.terms.iter().all(|(e, c)| {
            perms
                .iter()
                .all(|p| self.terms.get(&Self::permuted(e, p)) == Some(c))
        })
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

impl Add for &SymPoly {
    type Output = SymPoly;

    fn add(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;

    fn neg(self) -> SymPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;

    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;

    fn mul(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = SymPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                .collect();
            let mag = if c < &BigInt::zero() { -c.clone() } else { c.clone() };
            let sign = if c < &BigInt::zero() { "-" } else { "+" };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&vars.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}
