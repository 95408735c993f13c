//! Python bindings: `import sda`.
//!
//! ```python
//! import sda
//! layout = sda.Layout(100, 100, [("o1", 10, 10, 20, 20)])
//! report = layout.measure()
//! report.aesthetic_value  # 0.48
//! ```

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sda_core::{Frame, Layout, LayoutObject, MeasureReport, ReportFormat};

create_exception!(sda, LayoutError, PyValueError, "Raised for invalid or malformed layouts.");

fn layout_error(err: impl std::fmt::Display) -> PyErr {
    LayoutError::new_err(err.to_string())
}

/// A frame plus its annotated rectangles. Immutable once built.
#[pyclass(name = "Layout", module = "sda", frozen)]
struct PyLayout {
    inner: Layout,
}

#[pymethods]
impl PyLayout {
    /// `objects` is a list of `(id, x, y, width, height)` tuples.
    #[new]
    fn new(width: f64, height: f64, objects: Vec<(String, f64, f64, f64, f64)>) -> PyResult<Self> {
        let objects = objects
            .into_iter()
            .map(|(id, x, y, w, h)| LayoutObject::new(id, x, y, w, h))
            .collect();
        let inner = sda_core::validate_layout(Layout::new(Frame::new(width, height), objects)).map_err(layout_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = sda_core::parse_layout(text.as_bytes()).map_err(layout_error)?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> String {
        String::from_utf8(sda_core::serialize_layout(&self.inner)).expect("documents are UTF-8")
    }

    #[getter]
    fn width(&self) -> f64 {
        self.inner.frame.width
    }

    #[getter]
    fn height(&self) -> f64 {
        self.inner.frame.height
    }

    #[getter]
    fn objects(&self) -> Vec<(String, f64, f64, f64, f64)> {
        self.inner
            .objects
            .iter()
            .map(|o| (o.id.clone(), o.rect.x, o.rect.y, o.rect.width, o.rect.height))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.objects.len()
    }

    fn measure(&self) -> PyResult<PyMeasureReport> {
        let inner = sda_core::measure(&self.inner).map_err(layout_error)?;
        Ok(PyMeasureReport { inner })
    }

    /// Rendered report; `format` is "json", "csv" or "text".
    #[pyo3(signature = (format = "text", detail = false, source = ""))]
    fn render(&self, format: &str, detail: bool, source: &str) -> PyResult<String> {
        let format: ReportFormat = format.parse().map_err(PyValueError::new_err)?;
        let report = sda_core::detail(&self.inner).map_err(layout_error)?;
        Ok(sda_core::render_report(&report, source, format, detail))
    }

    fn mirrored(&self) -> Self {
        Self {
            inner: self.inner.mirror_horizontally(),
        }
    }

    fn scaled(&self, k: f64) -> PyResult<Self> {
        let inner = sda_core::validate_layout(self.inner.scaled(k)).map_err(layout_error)?;
        Ok(Self { inner })
    }

    fn __repr__(&self) -> String {
        format!(
            "Layout({}x{}, {} objects)",
            self.inner.frame.width,
            self.inner.frame.height,
            self.inner.objects.len()
        )
    }
}

#[pyclass(name = "MeasureReport", module = "sda", frozen)]
struct PyMeasureReport {
    inner: MeasureReport,
}

#[pymethods]
impl PyMeasureReport {
    #[getter]
    fn balance(&self) -> f64 {
        self.inner.balance.score
    }

    #[getter]
    fn equilibrium(&self) -> f64 {
        self.inner.equilibrium.score
    }

    #[getter]
    fn symmetry(&self) -> f64 {
        self.inner.symmetry.score
    }

    #[getter]
    fn sequence(&self) -> f64 {
        self.inner.sequence.score
    }

    #[getter]
    fn rhythm(&self) -> f64 {
        self.inner.rhythm.score
    }

    #[getter]
    fn aesthetic_value(&self) -> f64 {
        self.inner.aesthetic_value
    }

    /// The five component scores in presentation order.
    fn components(&self) -> (f64, f64, f64, f64, f64) {
        let [b, e, s, q, r] = self.inner.components();
        (b, e, s, q, r)
    }

    fn intermediates<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let m = &self.inner;
        let d = PyDict::new(py);
        d.set_item("balance_vertical", m.balance.vertical)?;
        d.set_item("balance_horizontal", m.balance.horizontal)?;
        d.set_item("equilibrium_x", m.equilibrium.x)?;
        d.set_item("equilibrium_y", m.equilibrium.y)?;
        d.set_item("symmetry_vertical", m.symmetry.vertical)?;
        d.set_item("symmetry_horizontal", m.symmetry.horizontal)?;
        d.set_item("symmetry_radial", m.symmetry.radial)?;
        d.set_item("rhythm_x", m.rhythm.x)?;
        d.set_item("rhythm_y", m.rhythm.y)?;
        d.set_item("rhythm_area", m.rhythm.area)?;
        d.set_item("reading_order", m.sequence.reading_order.to_array().to_vec())?;
        d.set_item("weight_order", m.sequence.weight_order.to_array().to_vec())?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        let [b, e, s, q, r] = self.inner.components().map(sda_core::round4);
        format!(
            "MeasureReport(balance={b}, equilibrium={e}, symmetry={s}, sequence={q}, rhythm={r}, aesthetic_value={})",
            sda_core::round4(self.inner.aesthetic_value)
        )
    }
}

#[pyfunction]
fn measure(layout: &PyLayout) -> PyResult<PyMeasureReport> {
    layout.measure()
}

/// Mean of the five component scores, each in [0, 1].
#[pyfunction]
fn aesthetic_value(components: [f64; 5]) -> PyResult<f64> {
    sda_core::aesthetic_value(components).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Competition ranking of `(id, value)` pairs, highest value first.
#[pyfunction]
fn rank(entries: Vec<(String, f64)>) -> Vec<(String, f64, usize)> {
    sda_core::rank(entries)
        .into_iter()
        .map(|e| (e.id, e.value, e.rank))
        .collect()
}

#[pyfunction]
fn round4(value: f64) -> String {
    sda_core::round4(value)
}

/// Every problem in a layout document; empty when the document is valid.
#[pyfunction]
fn validate(text: &str) -> Vec<String> {
    match sda_core::parse_layout(text.as_bytes()) {
        Ok(_) => Vec::new(),
        Err(sda_core::FormatError::Invalid(errors)) => errors.violations().iter().map(ToString::to_string).collect(),
        Err(other) => vec![other.to_string()],
    }
}

#[pymodule]
fn sda(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("LayoutError", m.py().get_type::<LayoutError>())?;
    m.add_class::<PyLayout>()?;
    m.add_class::<PyMeasureReport>()?;
    m.add_function(wrap_pyfunction!(measure, m)?)?;
    m.add_function(wrap_pyfunction!(aesthetic_value, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(round4, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    Ok(())
}
