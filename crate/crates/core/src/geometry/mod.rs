//! Index-typed tensors over K and the full Finslerian tensor pipeline.

pub mod classical;
pub mod session;

pub use session::{
    fundamental_tensor, JAgreement, MetricData, Session, VolumeForm, WeylVariant,
};

use crate::algext::{FieldElem, KernelRef};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variance {
    Upper,
    Lower,
}

/// Dense tensor with a fixed variance signature; entries are stored
/// row-major over the multi-index and all share one kernel.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    variance: Vec<Variance>,
    entries: Vec<FieldElem>,
}

fn flat_index(dim: usize, idx: &[usize]) -> usize {
    let mut f = 0;
    for &i in idx {
        debug_assert!(i < dim);
        f = f * dim + i;
    }
    f
}

fn unflatten(dim: usize, rank: usize, mut f: usize) -> Vec<usize> {
    let mut idx = vec![0; rank];
    for k in (0..rank).rev() {
        idx[k] = f % dim;
        f /= dim;
    }
    idx
}

impl Tensor {
    /// Build entrywise; entries are independent pure computations and are
    /// evaluated in parallel.
    pub fn from_fn<F>(dim: usize, variance: Vec<Variance>, f: F) -> Result<Tensor>
    where
        F: Fn(&[usize]) -> Result<FieldElem> + Sync,
    {
        let rank = variance.len();
        let total = dim.pow(rank as u32);
        let entries: Result<Vec<FieldElem>> = (0..total)
            .into_par_iter()
            .map(|flat| f(&unflatten(dim, rank, flat)))
            .collect();
        Ok(Tensor {
            dim,
            variance,
            entries: entries?,
        })
    }

    /// Build a tensor totally symmetric in the index positions `sym`
    /// (everything else iterated fully): the generator is evaluated once per
    /// canonical (sorted) configuration and mirrored. Declared symmetry is
    /// exact by construction.
    pub fn from_fn_sym<F>(
        dim: usize,
        variance: Vec<Variance>,
        sym: &[usize],
        f: F,
    ) -> Result<Tensor>
    where
        F: Fn(&[usize]) -> Result<FieldElem> + Sync,
    {
        let rank = variance.len();
        let total = dim.pow(rank as u32);
        let canon = |idx: &[usize]| -> Vec<usize> {
            let mut c = idx.to_vec();
            let mut vals: Vec<usize> = sym.iter().map(|&p| c[p]).collect();
            vals.sort_unstable();
            for (k, &p) in sym.iter().enumerate() {
                c[p] = vals[k];
            }
            c
        };
        let reps: Vec<usize> = (0..total)
            .filter(|&flat| {
                let idx = unflatten(dim, rank, flat);
                canon(&idx) == idx
            })
            .collect();
        let computed: Result<Vec<(usize, FieldElem)>> = reps
            .into_par_iter()
            .map(|flat| Ok((flat, f(&unflatten(dim, rank, flat))?)))
            .collect();
        let computed = computed?;
        let mut slots: Vec<Option<FieldElem>> = vec![None; total];
        for (flat, e) in computed {
            slots[flat] = Some(e);
        }
        for flat in 0..total {
            if slots[flat].is_none() {
                let idx = unflatten(dim, rank, flat);
                let c = canon(&idx);
                slots[flat] = slots[flat_index(dim, &c)].clone();
            }
        }
        Ok(Tensor {
            dim,
            variance,
            entries: slots.into_iter().map(|s| s.unwrap()).collect(),
        })
    }

    pub fn scalar_entries(kernel: &KernelRef, dim: usize, variance: Vec<Variance>) -> Tensor {
        let rank = variance.len();
        Tensor {
            dim,
            variance,
            entries: vec![FieldElem::zero(kernel); dim.pow(rank as u32)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.variance.len()
    }

    pub fn variance(&self) -> &[Variance] {
        &self.variance
    }

    pub fn entry(&self, idx: &[usize]) -> &FieldElem {
        &self.entries[flat_index(self.dim, idx)]
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn iter_indexed(&self) -> impl Iterator<Item = (Vec<usize>, &FieldElem)> {
        let dim = self.dim;
        let rank = self.rank();
        self.entries
            .iter()
            .enumerate()
            .map(move |(f, e)| (unflatten(dim, rank, f), e))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn sub(&self, o: &Tensor) -> Result<Tensor> {
        if self.dim != o.dim || self.variance != o.variance {
            return Err(Error::DimMismatch("tensor shapes differ".into()));
        }
        let entries: Result<Vec<FieldElem>> = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Tensor {
            dim: self.dim,
            variance: self.variance.clone(),
            entries: entries?,
        })
    }

    pub fn scale_int(&self, num: i64, den: i64) -> Tensor {
        let c = num_rational::BigRational::new(num.into(), den.into());
        Tensor {
            dim: self.dim,
            variance: self.variance.clone(),
            entries: self.entries.iter().map(|e| e.scale(&c)).collect(),
        }
    }

    /// Union of theta supports over all entries.
    pub fn theta_support(&self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        for e in &self.entries {
            s.extend(e.theta_support());
        }
        s
    }

    pub fn is_rational_in_y(&self) -> bool {
        self.entries.iter().all(|e| e.is_rational_in_y())
    }

    /// Exact symmetry check under swapping two index positions.
    pub fn is_symmetric_in(&self, p: usize, q: usize) -> bool {
        let rank = self.rank();
        let total = self.dim.pow(rank as u32);
        for flat in 0..total {
            let idx = unflatten(self.dim, rank, flat);
            let mut sw = idx.clone();
            sw.swap(p, q);
            if self.entry(&idx) != self.entry(&sw) {
                return false;
            }
        }
        true
    }

    /// Appends one lower index holding the fiber derivative.
    pub fn fiber_derivative(&self) -> Tensor {
        self.append_derivative(true)
    }

    /// Appends one lower index holding the base derivative.
    pub fn base_derivative(&self) -> Tensor {
        self.append_derivative(false)
    }

    fn append_derivative(&self, fiber: bool) -> Tensor {
        let dim = self.dim;
        let mut variance = self.variance.clone();
        variance.push(Variance::Lower);
        let entries: Vec<FieldElem> = self
            .entries
            .par_iter()
            .flat_map_iter(|e| {
                (0..dim).map(move |v| {
                    if fiber {
                        e.pdiff_fiber(v)
                    } else {
                        e.pdiff_base(v)
                    }
                })
            })
            .collect();
        Tensor {
            dim,
            variance,
            entries,
        }
    }

    /// All entries' homogeneity degrees equal `d` (zero entries skipped);
    /// errors with NotHomogeneous on any mismatch.
    pub fn check_homogeneity(&self, d: i64) -> Result<()> {
        for e in &self.entries {
            if e.is_zero() {
                continue;
            }
            if e.k_homogeneity_degree()? != d {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tensor(dim={}, rank={})", self.dim, self.rank())?;
        for (idx, e) in self.iter_indexed() {
            if !e.is_zero() {
                writeln!(f, "  {:?}: {}", idx, e)?;
            }
        }
        Ok(())
    }
}

/// n x n matrix inverse over K by adjugate and determinant.
/// Returns (inverse, det). Errors with Degenerate when det = 0.
pub fn invert_matrix(entries: &[Vec<FieldElem>], kernel: &KernelRef) -> Result<(Vec<Vec<FieldElem>>, FieldElem)> {
    let n = entries.len();
    let det = det_matrix(entries, kernel)?;
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    let det_inv = det.inv()?;
    let mut inv = vec![vec![FieldElem::zero(kernel); n]; n];
    for i in 0..n {
        for j in 0..n {
            // cofactor C_ji for the (i,j) entry of the inverse
            let minor = minor_matrix(entries, j, i);
            let mut c = det_matrix(&minor, kernel)?;
            if (i + j) % 2 == 1 {
                c = c.neg();
            }
            inv[i][j] = c.mul(&det_inv)?;
        }
    }
    Ok((inv, det))
}

fn minor_matrix(m: &[Vec<FieldElem>], row: usize, col: usize) -> Vec<Vec<FieldElem>> {
    let n = m.len();
    let mut out = Vec::with_capacity(n - 1);
    for i in 0..n {
        if i == row {
            continue;
        }
        let mut r = Vec::with_capacity(n - 1);
        for j in 0..n {
            if j == col {
                continue;
            }
            r.push(m[i][j].clone());
        }
        out.push(r);
    }
    out
}

pub fn det_matrix(m: &[Vec<FieldElem>], kernel: &KernelRef) -> Result<FieldElem> {
    let n = m.len();
    match n {
        0 => Ok(FieldElem::one(kernel)),
        1 => Ok(m[0][0].clone()),
        2 => Ok(&(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])),
        _ => {
            let mut acc = FieldElem::zero(kernel);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub = minor_matrix(m, 0, j);
                let d = det_matrix(&sub, kernel)?;
                let t = m[0][j].mul(&d)?;
                acc = if j % 2 == 0 { acc.add(&t)? } else { acc.sub(&t)? };
            }
            Ok(acc)
        }
    }
}
