//! Python bindings: `import superschur`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use superschur::blocks::{block_of_signed_young, defect_one_catalog};
use superschur::quiver::separated_verdict;
use superschur::reptype;
use superschur::schursuper::{dim_formula, SchurSuper};
use superschur::symmod::{decompose, signed_perm_module};
use superschur::{BiWeight, Error, ModuleRep, Partition, QuiverPresentation, SignedYoungLabel};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded(_) | Error::SplitFailure(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn partition(s: &str) -> PyResult<Partition> {
    s.parse().map_err(py_err)
}

/// Representation type of S(m|n,d) over a field of characteristic p.
#[pyfunction]
fn classify_super(m: usize, n: usize, d: usize, p: u32) -> PyResult<String> {
    Ok(reptype::classify_super(m, n, d, p).map_err(py_err)?.to_string())
}

/// Representation type of the classical S(m,d).
#[pyfunction]
fn classify_schur(m: usize, d: usize, p: u32) -> PyResult<String> {
    Ok(reptype::classify_schur(m, d, p).map_err(py_err)?.to_string())
}

#[pyfunction(name = "dim_formula")]
fn py_dim_formula(m: usize, n: usize, d: usize) -> u128 {
    dim_formula(m, n, d)
}

/// Dimension of the centralizer computed over GF(p).
#[pyfunction]
fn schur_super_dim(m: usize, n: usize, d: usize, p: u32) -> PyResult<usize> {
    Ok(SchurSuper::new(m, n, d, p).map_err(py_err)?.dim())
}

/// Dimensions of the indecomposable summands of M^(λ|μ), largest first.
#[pyfunction]
#[pyo3(signature = (biweight, p, seed = 0))]
fn decompose_dims(biweight: &str, p: u32, seed: u64) -> PyResult<Vec<usize>> {
    let w: BiWeight = biweight.parse().map_err(py_err)?;
    let module = signed_perm_module(&w, p).map_err(py_err)?;
    let mut dims: Vec<usize> = decompose(&module, seed).map_err(py_err)?.pieces.iter().map(ModuleRep::dim).collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    Ok(dims)
}

/// Gabriel quiver of the basic algebra as (arrow matrix, verdict).
#[pyfunction]
#[pyo3(signature = (m, n, d, p, seed = 0))]
fn quiver(m: usize, n: usize, d: usize, p: u32, seed: u64) -> PyResult<(Vec<Vec<usize>>, String)> {
    let basic = SchurSuper::new(m, n, d, p).and_then(|s| s.basic_corner()).map_err(py_err)?;
    let data = basic.idempotent_data(seed).map_err(py_err)?;
    let counts = basic.gabriel_arrows(&data);
    let verdict = separated_verdict(&QuiverPresentation::from_arrow_matrix(&counts));
    Ok((counts, verdict.to_string()))
}

/// (p-core, weight) of the block containing Y^(λ|pμ).
#[pyfunction]
fn block(lambda: &str, mu: &str, p: u32) -> PyResult<(String, usize)> {
    let b = block_of_signed_young(&SignedYoungLabel::new(partition(lambda)?, partition(mu)?, p));
    Ok((b.core.to_string(), b.weight))
}

/// The chain of partitions and the End dimensions of the defect-one block of τ.
#[pyfunction]
fn defect_one(tau: &str, p: u32) -> PyResult<(Vec<String>, Vec<usize>)> {
    let c = defect_one_catalog(&partition(tau)?, p).map_err(py_err)?;
    Ok((c.chain.iter().map(Partition::to_string).collect(), c.patterns.iter().map(|l| l.end_dim()).collect()))
}

#[pymodule(name = "superschur")]
fn superschur_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(classify_super, m)?)?;
    m.add_function(wrap_pyfunction!(classify_schur, m)?)?;
    m.add_function(wrap_pyfunction!(py_dim_formula, m)?)?;
    m.add_function(wrap_pyfunction!(schur_super_dim, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_dims, m)?)?;
    m.add_function(wrap_pyfunction!(quiver, m)?)?;
    m.add_function(wrap_pyfunction!(block, m)?)?;
    m.add_function(wrap_pyfunction!(defect_one, m)?)?;
    Ok(())
}
