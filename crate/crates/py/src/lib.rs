//! Python bindings. Points cross the boundary as `(x, y)` float pairs.

use pyo3::create_exception;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;

use hullscan::datagen::{self, DatasetKind, DatasetSpec};
use hullscan::oracle::{self, BRUTE_FORCE_CAP};
use hullscan::{HullError, Point2, Turn};

create_exception!(
    hullscan,
    HullscanError,
    PyValueError,
    "Invalid input to a hull operation."
);

fn to_py_err(e: HullError) -> PyErr {
    match e {
        HullError::Io { .. } => PyOSError::new_err(e.to_string()),
        _ => HullscanError::new_err(e.to_string()),
    }
}

fn to_points(pairs: Vec<(f64, f64)>) -> Vec<Point2> {
    pairs.into_iter().map(Point2::from).collect()
}

fn to_pairs(points: &[Point2]) -> Vec<(f64, f64)> {
    points.iter().map(|p| (p.x, p.y)).collect()
}

/// Pipeline switches. Defaults: 1024 chunks, both discard rounds, chunked walk.
#[pyclass(name = "PipelineConfig", module = "hullscan", from_py_object)]
#[derive(Clone, Copy, Default)]
pub struct PyPipelineConfig(hullscan::PipelineConfig);

#[pymethods]
impl PyPipelineConfig {
    #[new]
    #[pyo3(signature = (chunk_count = hullscan::discard::DEFAULT_CHUNK_COUNT, enable_round1 = true, enable_round2 = true, chunked = true))]
    fn new(
        chunk_count: usize,
        enable_round1: bool,
        enable_round2: bool,
        chunked: bool,
    ) -> PyResult<Self> {
        if chunk_count == 0 {
            return Err(to_py_err(HullError::ZeroChunks));
        }
        Ok(Self(hullscan::PipelineConfig {
            chunk_count,
            enable_round1,
            enable_round2,
            chunked,
        }))
    }

    #[getter]
    fn chunk_count(&self) -> usize {
        self.0.chunk_count
    }

    #[getter]
    fn enable_round1(&self) -> bool {
        self.0.enable_round1
    }

    #[getter]
    fn enable_round2(&self) -> bool {
        self.0.enable_round2
    }

    #[getter]
    fn chunked(&self) -> bool {
        self.0.chunked
    }

    fn __repr__(&self) -> String {
        format!("PipelineConfig({})", self.0.label())
    }
}

/// Survivor counts and stage timings (milliseconds) of one pipeline run.
#[pyclass(name = "StageStats", module = "hullscan", frozen, skip_from_py_object)]
pub struct PyStageStats(hullscan::StageStats);

#[pymethods]
impl PyStageStats {
    #[getter]
    fn n_input(&self) -> usize {
        self.0.n_input
    }

    #[getter]
    fn n_after_round1(&self) -> usize {
        self.0.n_after_round1
    }

    #[getter]
    fn n_after_round2(&self) -> usize {
        self.0.n_after_round2
    }

    #[getter]
    fn hull_size(&self) -> usize {
        self.0.hull_size
    }

    #[getter]
    fn remaining_r1_pct(&self) -> f64 {
        self.0.remaining_r1_pct()
    }

    #[getter]
    fn remaining_r2_pct(&self) -> f64 {
        self.0.remaining_r2_pct()
    }

    #[getter]
    fn t_round1(&self) -> f64 {
        self.0.t_round1
    }

    #[getter]
    fn t_annotate(&self) -> f64 {
        self.0.t_annotate
    }

    #[getter]
    fn t_sort(&self) -> f64 {
        self.0.t_sort
    }

    #[getter]
    fn t_round2(&self) -> f64 {
        self.0.t_round2
    }

    #[getter]
    fn t_finalize(&self) -> f64 {
        self.0.t_finalize
    }

    #[getter]
    fn t_total(&self) -> f64 {
        self.0.t_total
    }

    fn __repr__(&self) -> String {
        let s = &self.0;
        format!(
            "StageStats(n_input={}, n_after_round1={}, n_after_round2={}, hull_size={}, t_total={:.3})",
            s.n_input, s.n_after_round1, s.n_after_round2, s.hull_size, s.t_total
        )
    }
}

/// Hull vertices (counterclockwise, from the lowest point) and stage stats.
#[pyfunction]
#[pyo3(signature = (points, config = None))]
fn full_pipeline(
    py: Python<'_>,
    points: Vec<(f64, f64)>,
    config: Option<PyPipelineConfig>,
) -> PyResult<(Vec<(f64, f64)>, PyStageStats)> {
    let cfg = config.unwrap_or_default().0;
    let points = to_points(points);
    let (hull, stats) = py
        .detach(|| hullscan::full_pipeline(&points, &cfg))
        .map_err(to_py_err)?;
    Ok((to_pairs(hull.vertices()), PyStageStats(stats)))
}

#[pyfunction]
#[pyo3(signature = (points, config = None))]
fn convex_hull(
    py: Python<'_>,
    points: Vec<(f64, f64)>,
    config: Option<PyPipelineConfig>,
) -> PyResult<Vec<(f64, f64)>> {
    full_pipeline(py, points, config).map(|(hull, _)| hull)
}

/// Reference hull by Andrew's monotone chain.
#[pyfunction]
fn monotone_chain(py: Python<'_>, points: Vec<(f64, f64)>) -> PyResult<Vec<(f64, f64)>> {
    let points = to_points(points);
    let hull = py
        .detach(|| oracle::monotone_chain(&points))
        .map_err(to_py_err)?;
    Ok(to_pairs(hull.vertices()))
}

/// Cubic-time reference hull; refuses more than `cap` points.
#[pyfunction]
#[pyo3(signature = (points, cap = BRUTE_FORCE_CAP))]
fn brute_force_hull(points: Vec<(f64, f64)>, cap: usize) -> PyResult<Vec<(f64, f64)>> {
    let hull = oracle::brute_force_hull(&to_points(points), cap).map_err(to_py_err)?;
    Ok(to_pairs(hull.vertices()))
}

/// `1` for a left turn `a -> b -> c`, `-1` for a right turn, `0` if collinear.
#[pyfunction]
fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> i8 {
    match hullscan::orient(a.into(), b.into(), c.into()) {
        Turn::Left => 1,
        Turn::Right => -1,
        Turn::Collinear => 0,
    }
}

/// Seeded dataset of kind `square`, `disk`, `circle` or `collinear`.
#[pyfunction]
fn generate(kind: &str, n: usize, seed: u64) -> PyResult<Vec<(f64, f64)>> {
    let kind: DatasetKind = kind.parse().map_err(HullscanError::new_err)?;
    if !kind.is_generated() {
        return Err(HullscanError::new_err(format!(
            "{kind} is not a generated kind"
        )));
    }
    let points = DatasetSpec::generated(kind, n, seed)
        .materialize()
        .map_err(to_py_err)?;
    Ok(to_pairs(&points))
}

macro_rules! generator {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[pyfunction]
        fn $name(n: usize, seed: u64) -> Vec<(f64, f64)> {
            to_pairs(&datagen::$name(n, seed))
        }
    };
}

generator!(gen_square, "Uniform on the unit square.");
generator!(gen_disk, "Uniform on the closed unit disk.");
generator!(
    gen_circle,
    "On the unit circle at well-separated random angles."
);
generator!(
    gen_collinear,
    "Integer points on `y = 2x + 1`, duplicates included."
);

/// Plain `x y` per line; `#` comments and blank lines are skipped.
#[pyfunction]
fn load_points(path: std::path::PathBuf) -> PyResult<Vec<(f64, f64)>> {
    datagen::load_points(path)
        .map(|p| to_pairs(&p))
        .map_err(to_py_err)
}

/// Vertices of a Wavefront OBJ file projected onto the XY plane.
#[pyfunction]
fn load_obj_projected(path: std::path::PathBuf) -> PyResult<Vec<(f64, f64)>> {
    datagen::load_obj_projected(path)
        .map(|p| to_pairs(&p))
        .map_err(to_py_err)
}

#[pymodule(name = "hullscan")]
fn hullscan_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HullscanError", m.py().get_type::<HullscanError>())?;
    m.add_class::<PyPipelineConfig>()?;
    m.add_class::<PyStageStats>()?;
    m.add_function(wrap_pyfunction!(full_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(convex_hull, m)?)?;
    m.add_function(wrap_pyfunction!(monotone_chain, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_hull, m)?)?;
    m.add_function(wrap_pyfunction!(orient, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(gen_square, m)?)?;
    m.add_function(wrap_pyfunction!(gen_disk, m)?)?;
    m.add_function(wrap_pyfunction!(gen_circle, m)?)?;
    m.add_function(wrap_pyfunction!(gen_collinear, m)?)?;
    m.add_function(wrap_pyfunction!(load_points, m)?)?;
    m.add_function(wrap_pyfunction!(load_obj_projected, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use pyo3::types::PyModule;

    use super::*;

    fn with_module<R>(f: impl FnOnce(&Bound<'_, PyModule>) -> PyResult<R>) -> R {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "hullscan")?;
            hullscan_module(&m)?;
            f(&m)
        })
        .unwrap()
    }

    #[test]
    fn hull_through_the_module() {
        let hull: Vec<(f64, f64)> = with_module(|m| {
            let pts = vec![(1.0, 1.0), (0.0, 0.0), (2.0, 0.0), (1.0, 0.5), (0.0, 2.0)];
            m.getattr("convex_hull")?.call1((pts,))?.extract()
        });
        assert_eq!(hull, vec![(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)]);
    }

    #[test]
    fn stats_and_config() {
        let (size, r2): (usize, f64) = with_module(|m| {
            let cfg = m.getattr("PipelineConfig")?.call1((7,))?;
            let pts = gen_circle(50, 2);
            let (_, stats) = m
                .getattr("full_pipeline")?
                .call1((pts, cfg))?
                .extract::<(Bound<'_, PyAny>, Bound<'_, PyAny>)>()?;
            Ok((
                stats.getattr("hull_size")?.extract()?,
                stats.getattr("remaining_r2_pct")?.extract()?,
            ))
        });
        assert_eq!((size, r2), (50, 100.0));
    }

    #[test]
    fn errors_map_to_python_types() {
        with_module(|m| {
            let py = m.py();
            let err = m
                .getattr("convex_hull")?
                .call1((Vec::<(f64, f64)>::new(),))
                .unwrap_err();
            assert!(err.is_instance_of::<HullscanError>(py));
            let err = m
                .getattr("load_points")?
                .call1(("/nonexistent/pts.xy",))
                .unwrap_err();
            assert!(err.is_instance_of::<PyOSError>(py));
            let err = m.getattr("generate")?.call1(("file", 3, 0)).unwrap_err();
            assert!(err.is_instance_of::<PyValueError>(py));
            Ok(())
        });
    }
}
