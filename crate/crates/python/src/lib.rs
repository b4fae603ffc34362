use flagcoh::bwb::{self, CohomologyResult};
use flagcoh::lefschetz::{ampleness_verdict as verdict, BettiProfile, Verdict};
use flagcoh::projective::{self, TwistSpec};
use flagcoh::qample::{self, OracleWindow};
use flagcoh::root_system::{self, Conjugate, Weight, WeylElement};
use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn to_py(e: flagcoh::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn weight(coords: Vec<i64>) -> PyResult<Weight> {
    Weight::new(coords).map_err(to_py)
}

#[pyclass(
    name = "WeylElement",
    module = "pyflagcoh",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWeylElement(WeylElement);

#[pymethods]
impl PyWeylElement {
    /// One-line notation on 1..=rank+1.
    #[new]
    fn new(one_line: Vec<usize>) -> PyResult<Self> {
        WeylElement::from_one_line(&one_line)
            .map(PyWeylElement)
            .map_err(to_py)
    }

    #[staticmethod]
    fn identity(rank: usize) -> Self {
        PyWeylElement(WeylElement::identity(rank))
    }

    #[staticmethod]
    fn longest(rank: usize) -> Self {
        PyWeylElement(WeylElement::longest(rank))
    }

    #[staticmethod]
    fn simple_reflection(rank: usize, i: usize) -> PyResult<Self> {
        WeylElement::simple_reflection(rank, i)
            .map(PyWeylElement)
            .map_err(to_py)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn one_line(&self) -> Vec<usize> {
        self.0.one_line()
    }

    #[getter]
    fn length(&self) -> usize {
        self.0.length()
    }

    fn apply(&self, coords: Vec<i64>) -> PyResult<Vec<i64>> {
        let w = weight(coords)?;
        self.0.apply(&w).map(Weight::into_coords).map_err(to_py)
    }

    /// Shifted action w(λ+ρ) - ρ.
    fn dot(&self, coords: Vec<i64>) -> PyResult<Vec<i64>> {
        let w = weight(coords)?;
        self.0.dot(&w).map(Weight::into_coords).map_err(to_py)
    }

    fn compose(&self, other: &PyWeylElement) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyWeylElement).map_err(to_py)
    }

    fn inverse(&self) -> Self {
        PyWeylElement(self.0.inverse())
    }

    fn __repr__(&self) -> String {
        format!("WeylElement({:?})", self.0.one_line())
    }
}

#[pyclass(name = "Cohomology", module = "pyflagcoh", frozen)]
struct PyCohomology {
    top: usize,
    inner: CohomologyResult,
}

#[pymethods]
impl PyCohomology {
    /// The nonvanishing degree, or None when everything vanishes.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    #[getter]
    fn highest_weight(&self) -> Option<Vec<i64>> {
        match &self.inner {
            CohomologyResult::Nonvanishing { highest_weight, .. } => {
                Some(highest_weight.coords().to_vec())
            }
            CohomologyResult::AllVanish => None,
        }
    }

    #[getter]
    fn dimension(&self) -> BigUint {
        match &self.inner {
            CohomologyResult::Nonvanishing { dimension, .. } => dimension.clone(),
            CohomologyResult::AllVanish => BigUint::default(),
        }
    }

    #[getter]
    fn vanishes(&self) -> bool {
        self.inner.degree().is_none()
    }

    fn h(&self, i: usize) -> BigUint {
        self.inner.h(i)
    }

    /// [h^0, ..., h^N].
    fn dimensions(&self) -> Vec<BigUint> {
        (0..=self.top).map(|i| self.inner.h(i)).collect()
    }

    fn __repr__(&self) -> String {
        match &self.inner {
            CohomologyResult::AllVanish => "Cohomology(all vanish)".into(),
            CohomologyResult::Nonvanishing {
                degree,
                highest_weight,
                dimension,
            } => format!("Cohomology(H^{degree} = V{highest_weight}, dim {dimension})"),
        }
    }
}

#[pyfunction]
fn pairing(coords: Vec<i64>, i: usize, j: usize) -> PyResult<i64> {
    root_system::pairing(&weight(coords)?, i, j).map_err(to_py)
}

/// (w, w(μ)) with w(μ) strictly dominant, or None when μ is singular.
#[pyfunction]
fn dominant_conjugate(coords: Vec<i64>) -> PyResult<Option<(PyWeylElement, Vec<i64>)>> {
    Ok(match root_system::dominant_conjugate(&weight(coords)?) {
        Conjugate::Regular { element, dominant } => {
            Some((PyWeylElement(element), dominant.into_coords()))
        }
        Conjugate::Singular => None,
    })
}

#[pyfunction]
fn enumerate_weyl_group(rank: usize) -> PyResult<Vec<PyWeylElement>> {
    root_system::enumerate_weyl_group(rank)
        .map(|g| g.into_iter().map(PyWeylElement).collect())
        .map_err(to_py)
}

#[pyfunction]
fn bwb_cohomology(coords: Vec<i64>) -> PyResult<PyCohomology> {
    let w = weight(coords)?;
    Ok(PyCohomology {
        top: w.root_system().num_positive_roots(),
        inner: bwb::bwb_cohomology(&w),
    })
}

#[pyfunction]
fn weyl_dimension(coords: Vec<i64>) -> PyResult<BigUint> {
    bwb::weyl_dimension(&weight(coords)?).map_err(to_py)
}

#[pyfunction]
fn euler_characteristic(coords: Vec<i64>) -> PyResult<BigInt> {
    Ok(bwb::euler_characteristic(&weight(coords)?))
}

#[pyfunction]
fn q_ample_index(coords: Vec<i64>) -> PyResult<usize> {
    Ok(qample::q_ample_index(&weight(coords)?).value())
}

#[pyfunction]
#[pyo3(signature = (coords, box_radius=3, m_min=10, m_max=30))]
fn q_ample_index_oracle(
    coords: Vec<i64>,
    box_radius: i64,
    m_min: i64,
    m_max: i64,
) -> PyResult<usize> {
    let window = OracleWindow::new(box_radius, m_min, m_max).map_err(to_py)?;
    qample::q_ample_index_oracle(&weight(coords)?, window)
        .map(|q| q.value())
        .map_err(to_py)
}

/// (coords, qmin, regular, weyl_length)
type ChamberRow = (Vec<i64>, usize, bool, Option<usize>);

/// Rows over [-range, range]^rank.
#[pyfunction]
fn chamber_map(rank: usize, range: i64) -> PyResult<Vec<ChamberRow>> {
    let records = qample::chamber_map(rank, range).map_err(to_py)?;
    Ok(records
        .into_iter()
        .map(|r| {
            (
                r.weight.into_coords(),
                r.qmin.value(),
                r.regular,
                r.weyl_length,
            )
        })
        .collect())
}

#[pyfunction]
fn bott_h(n: i64, d: i64, i: i64) -> PyResult<BigUint> {
    let spec = TwistSpec::new(n, d).map_err(to_py)?;
    projective::bott_h(spec, i).map_err(to_py)
}

#[pyfunction]
fn pn_q_ample_index(n: i64, d: i64) -> PyResult<usize> {
    let spec = TwistSpec::new(n, d).map_err(to_py)?;
    Ok(projective::pn_q_ample_index(spec).value())
}

/// (is_ample, first_failing_degree) for a smooth Y of dimension `dim` in P^n.
#[pyfunction]
fn ampleness_verdict(n: i64, dim: i64, betti: Vec<u64>) -> PyResult<(bool, Option<usize>)> {
    let profile = BettiProfile::new(n, dim, betti).map_err(to_py)?;
    Ok(match verdict(&profile) {
        Verdict::Ample => (true, None),
        Verdict::NotAmple {
            first_failing_degree,
        } => (false, Some(first_failing_degree)),
    })
}

#[pymodule]
fn pyflagcoh(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWeylElement>()?;
    m.add_class::<PyCohomology>()?;
    m.add_function(wrap_pyfunction!(pairing, m)?)?;
    m.add_function(wrap_pyfunction!(dominant_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_weyl_group, m)?)?;
    m.add_function(wrap_pyfunction!(bwb_cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(euler_characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(q_ample_index, m)?)?;
    m.add_function(wrap_pyfunction!(q_ample_index_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(chamber_map, m)?)?;
    m.add_function(wrap_pyfunction!(bott_h, m)?)?;
    m.add_function(wrap_pyfunction!(pn_q_ample_index, m)?)?;
    m.add_function(wrap_pyfunction!(ampleness_verdict, m)?)?;
    Ok(())
}
