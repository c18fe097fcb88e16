use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// A symmetrizable generalized Cartan matrix, `a_ij = α_j(h_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcm {
    a: Vec<Vec<i64>>,
    /// Least positive integers with `d_i a_ij = d_j a_ji`.
    d: Vec<i64>,
    /// Extra coweights, each given by its values `α_j(h)` on the simple roots.
    coweights: Vec<Vec<i64>>,
}

impl Gcm {
    pub fn new(a: Vec<Vec<i64>>) -> Result<Self> {
        validate_gcm(a)
    }

    pub fn with_coweights(mut self, coweights: Vec<Vec<i64>>) -> Result<Self> {
        for c in &coweights {
            if c.len() != self.rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.rank(),
                    got: c.len(),
                });
            }
        }
        self.coweights = coweights;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn coweights(&self) -> &[Vec<i64>] {
        &self.coweights
    }

    /// `(α_i|α_j) = d_i a_ij`.
    pub fn root_form(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    /// `(β|γ)` for root-lattice elements given by coefficients.
    pub fn form(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if beta[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += beta[i] * gamma[j] * self.root_form(i, j);
            }
        }
        acc
    }

    /// `(λ|β)` for a weight with coordinates `λ(h_i)`: `Σ β_i d_i λ(h_i)`.
    pub fn weight_form(&self, lambda: &[i64], beta: &[i64]) -> i64 {
        (0..self.rank()).map(|i| beta[i] * self.d[i] * lambda[i]).sum()
    }

    /// Coordinates of `λ − Σ k_i α_i`: `λ(h_j) − Σ_i k_i a_ji`.
    pub fn lower(&self, lambda: &[i64], k: &[u32]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|j| lambda[j] - (0..n).map(|i| k[i] as i64 * self.a[j][i]).sum::<i64>())
            .collect()
    }
}

/// Check the axioms and compute the symmetrizer.
pub fn validate_gcm(a: Vec<Vec<i64>>) -> Result<Gcm> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan(format!("row {i} has length {}, expected {n}", row.len())));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("a[{i}][{i}] = {} (must be 2)", row[i])));
        }
        for j in 0..n {
            if i != j && row[j] > 0 {
                return Err(Error::InvalidCartan(format!("a[{i}][{j}] = {} is positive", row[j])));
            }
            if (row[j] == 0) != (a[j][i] == 0) {
                return Err(Error::InvalidCartan(format!("a[{i}][{j}] and a[{j}][{i}] disagree on vanishing")));
            }
        }
    }
    // propagate d_j = d_i a_ij / a_ji along each connected component
    let mut d: Vec<Option<Q>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Q::one());
        let mut comp = vec![root];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("set before push");
            for j in 0..n {
                if j == i || a[i][j] == 0 {
                    continue;
                }
                let dj = &di * q(a[i][j]) / q(a[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        stack.push(j);
                    }
                    Some(x) if *x != dj => return Err(Error::NotSymmetrizable),
                    Some(_) => {}
                }
            }
        }
        // scale the component to least positive integers
        let lcm = comp.iter().fold(num_bigint::BigInt::one(), |l, &i| {
            l.lcm(d[i].as_ref().unwrap().denom())
        });
        let ints: Vec<num_bigint::BigInt> = comp
            .iter()
            .map(|&i| (d[i].as_ref().unwrap() * Q::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |g, x| g.gcd(x));
        for (&i, x) in comp.iter().zip(ints) {
            d[i] = Some(Q::from_integer(x / &g));
        }
    }
    let d: Vec<i64> = d
        .into_iter()
        .map(|x| {
            let x = x.expect("every index visited");
            debug_assert!(x.is_positive());
            crate::rational::to_i64(&x).ok_or(Error::NotSymmetrizable)
        })
        .collect::<Result<_>>()?;
    Ok(Gcm {
        a,
        d,
        coweights: Vec::new(),
    })
}
