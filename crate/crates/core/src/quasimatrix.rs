//! Quasimatrices: the `Z_n`-graded algebra `M_(n,phi)` and the matching
//! product on concrete matrices.
//!
//! The basis is `E_ij` with `i, j` in `Z_n` and degree `i - j`; the product
//! is `E_ij E_kl = delta_jk c(i, j, l) E_il` with
//! `c(i, j, l) = phi(i, -j, j - l) / phi(-j, j, -l)`, all arguments reduced
//! mod `n`. On matrices this becomes `(ab)_il = sum_j a_ij b_jl c(i, j, l)`.

use serde::{Deserialize, Serialize};

use crate::cocycle::{require_cocycle, CocycleTable};
use crate::quasialg::{AssociativityReport, GradedBasis, QuasiAlgebra, Term};
use crate::scalar::{Cyclotomic, Embedding, ScalarError, UnitScalar};
use crate::{Error, Result};

fn cyclic_order(phi: &CocycleTable) -> Result<u32> {
    match phi.group().orders() {
        [n] => Ok(*n),
        _ => Err(Error::WrongGroup { expected: "a cyclic group Z_n".into(), found: phi.group().clone() }),
    }
}

/// `phi(i, -j, j - l) / phi(-j, j, -l)` with residues mod `n`.
pub fn quasimatrix_coefficient(phi: &CocycleTable, i: u32, j: u32, l: u32) -> Result<UnitScalar> {
    let (i, j, l) = (i as i64, j as i64, l as i64);
    let num = phi.get_cyclic(i, -j, j - l)?;
    let den = phi.get_cyclic(-j, j, -l)?;
    Ok(num.mul_unchecked(&den.inv()))
}

/// `E01`, or `E3_11` once `n > 10`.
pub fn matrix_unit_label(n: u32, i: u32, j: u32) -> String {
    if n <= 10 {
        format!("E{i}{j}")
    } else {
        format!("E{i}_{j}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasimatrixAlgebra {
    n: u32,
    algebra: QuasiAlgebra,
}

/// `(sum_i E_ii) E_kl = left_kl E_kl` and `E_kl (sum_i E_ii) = right_kl E_kl`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitDiagnostic {
    pub left: Vec<(String, UnitScalar)>,
    pub right: Vec<(String, UnitScalar)>,
    pub two_sided: bool,
}

impl QuasimatrixAlgebra {
    /// Builds `M_(n,phi)` from a verified cocycle on `Z_n`.
    pub fn new(phi: &CocycleTable) -> Result<Self> {
        let n = cyclic_order(phi)?;
        require_cocycle(phi)?;
        let g = phi.group().clone();
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let elems = pairs.iter().map(|&(i, j)| {
            let deg = g.sub(&g.elem(&[i as i64]).expect("reduced"), &g.elem(&[j as i64]).expect("reduced")).expect("same group");
            (matrix_unit_label(n, i, j), deg)
        });
        let basis = GradedBasis::new(g.clone(), elems)?;
        let algebra = QuasiAlgebra::new(basis, phi.clone(), |a, b| {
            let ((i, j), (k, l)) = (pairs[a], pairs[b]);
            if j != k {
                return Ok(None);
            }
            Ok(Some(Term { basis: (i * n + l) as usize, coeff: quasimatrix_coefficient(phi, i, j, l)? }))
        })?;
        Ok(QuasimatrixAlgebra { n, algebra })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn algebra(&self) -> &QuasiAlgebra {
        &self.algebra
    }

    pub fn phi(&self) -> &CocycleTable {
        self.algebra.phi()
    }

    fn index(&self, i: u32, j: u32) -> usize {
        (i * self.n + j) as usize
    }

    /// The coefficient of `E_il` in `E_ij E_jl`.
    pub fn structure_constant(&self, i: u32, j: u32, l: u32) -> &UnitScalar {
        let t = self.algebra.product(self.index(i, j), self.index(j, l));
        &t.as_ref().expect("E_ij E_jl is never zero").coeff
    }

    /// A copy with the coefficient of `E_ij E_jl` replaced.
    pub fn with_structure_constant(&self, i: u32, j: u32, l: u32, value: UnitScalar) -> Result<Self> {
        let n = self.n;
        if i >= n || j >= n || l >= n {
            return Err(Error::Shape(format!("index out of range for n = {n}")));
        }
        let term = Term { basis: self.index(i, l), coeff: value };
        let algebra = self.algebra.with_product(self.index(i, j), self.index(j, l), Some(term))?;
        Ok(QuasimatrixAlgebra { n, algebra })
    }

    /// `(E_ij E_kl) E_rs = E_ij (E_kl E_rs) phi(i-j, k-l, r-s)` over all
    /// `n^6` triples of matrix units.
    pub fn check_law(&self) -> AssociativityReport {
        self.algebra.check_quasiassociativity()
    }

    /// Products of `sum_i E_ii` with each `E_kl`, on both sides.
    pub fn unit_diagnostic(&self) -> UnitDiagnostic {
        let n = self.n;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for k in 0..n {
            for l in 0..n {
                let label = matrix_unit_label(n, k, l);
                left.push((label.clone(), self.structure_constant(k, k, l).clone()));
                right.push((label, self.structure_constant(k, l, l).clone()));
            }
        }
        let two_sided = left.iter().chain(&right).all(|(_, c)| c.is_one());
        UnitDiagnostic { left, right, two_sided }
    }
}

/// A square matrix over `Q(zeta_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CycloMatrixDoc", into = "CycloMatrixDoc")]
pub struct CycloMatrix {
    root_order: u32,
    rows: Vec<Vec<Cyclotomic>>,
}

#[derive(Serialize, Deserialize)]
struct CycloMatrixDoc {
    n: usize,
    root_order: u32,
    rows: Vec<Vec<Cyclotomic>>,
}

impl TryFrom<CycloMatrixDoc> for CycloMatrix {
    type Error = Error;
    fn try_from(doc: CycloMatrixDoc) -> Result<Self> {
        let m = CycloMatrix::new(doc.root_order, doc.rows)?;
        if m.n() != doc.n {
            return Err(Error::Shape(format!("\"n\" is {} but there are {} rows", doc.n, m.n())));
        }
        Ok(m)
    }
}

impl From<CycloMatrix> for CycloMatrixDoc {
    fn from(m: CycloMatrix) -> Self {
        CycloMatrixDoc { n: m.rows.len(), root_order: m.root_order, rows: m.rows }
    }
}

impl CycloMatrix {
    /// Fails unless the rows form a nonempty square over one field.
    pub fn new(root_order: u32, rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape("empty matrix".into()));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Shape(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        if let Some(c) = rows.iter().flatten().find(|c| c.root_order() != root_order) {
            return Err(ScalarError::RootOrderMismatch { left: root_order, right: c.root_order() }.into());
        }
        Ok(CycloMatrix { root_order, rows })
    }

    pub fn from_fn(n: usize, root_order: u32, mut f: impl FnMut(usize, usize) -> Result<Cyclotomic>) -> Result<Self> {
        let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        Self::new(root_order, rows)
    }

    pub fn zero(n: usize, root_order: u32) -> Result<Self> {
        Self::from_fn(n, root_order, |_, _| Ok(Cyclotomic::zero(root_order)?))
    }

    /// The matrix with a single `1` at `(i, j)`.
    pub fn unit(n: usize, root_order: u32, i: usize, j: usize) -> Result<Self> {
        Self::from_fn(n, root_order, |a, b| Ok(Cyclotomic::from_integer(root_order, ((a, b) == (i, j)) as i64)?))
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.rows[i][j]
    }

    /// The ordinary matrix product.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let n = self.n();
        Self::from_fn(n, self.root_order, |i, l| {
            let mut acc = Cyclotomic::zero(self.root_order)?;
            for j in 0..n {
                acc = &acc + &(self.get(i, j) * other.get(j, l));
            }
            Ok(acc)
        })
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::Shape(format!("{}x{} and {}x{} matrices", self.n(), self.n(), other.n(), other.n())));
        }
        if self.root_order != other.root_order {
            return Err(ScalarError::RootOrderMismatch { left: self.root_order, right: other.root_order }.into());
        }
        Ok(())
    }
}

/// The coefficients `c(i, j, l)` of `M_(n,phi)` evaluated in `Q(zeta_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignPattern {
    pub n: u32,
    pub root_order: u32,
    /// Indexed by `(i * n + j) * n + l`.
    pub coeffs: Vec<Cyclotomic>,
}

impl SignPattern {
    pub fn at(&self, i: u32, j: u32, l: u32) -> &Cyclotomic {
        let n = self.n;
        &self.coeffs[((i * n + j) * n + l) as usize]
    }
}

pub fn sign_pattern(phi: &CocycleTable, embedding: &Embedding) -> Result<SignPattern> {
    let n = cyclic_order(phi)?;
    require_cocycle(phi)?;
    let bound = embedding.bind(phi.gens())?;
    let mut coeffs = Vec::with_capacity((n as usize).pow(3));
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                coeffs.push(bound.apply(&quasimatrix_coefficient(phi, i, j, l)?)?);
            }
        }
    }
    Ok(SignPattern { n, root_order: bound.root_order(), coeffs })
}

/// `(ab)_il = sum_j a_ij b_jl c(i, j, l)`, with `phi`'s values sent into
/// `Q(zeta_N)` by `embedding`. Both matrices must be `n x n` over the same
/// `Q(zeta_N)`.
pub fn qmat_mul(a: &CycloMatrix, b: &CycloMatrix, phi: &CocycleTable, embedding: &Embedding) -> Result<CycloMatrix> {
    a.compatible(b)?;
    let pattern = sign_pattern(phi, embedding)?;
    let n = pattern.n as usize;
    if a.n() != n {
        return Err(Error::Shape(format!("{}x{} matrices against a cocycle on Z_{n}", a.n(), a.n())));
    }
    if a.root_order() != pattern.root_order {
        return Err(ScalarError::RootOrderMismatch { left: a.root_order(), right: pattern.root_order }.into());
    }
    CycloMatrix::from_fn(n, a.root_order(), |i, l| {
        let mut acc = Cyclotomic::zero(a.root_order())?;
        for j in 0..n {
            let c = pattern.at(i as u32, j as u32, l as u32);
            acc = &acc + &(&(a.get(i, j) * b.get(j, l)) * c);
        }
        Ok(acc)
    })
}
