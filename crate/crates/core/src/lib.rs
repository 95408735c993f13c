//! Screen layout aesthetics over rectangle object models.
//!
//! A [`Layout`] is a frame plus the rectangles annotated on it. [`measure`]
//! computes balance, equilibrium, symmetry, sequence and rhythm, each in
//! `[0, 1]`, and their mean, the aesthetic value.

pub mod detail;
pub mod document;
pub mod layout;
pub mod metrics;
pub mod partition;
pub mod ranking;
pub mod report;

pub use detail::{detail, DetailReport, ObjectDetail};
pub use document::{parse_layout, serialize_layout, FormatError};
pub use layout::{validate_layout, Frame, Layout, LayoutMeta, LayoutObject, ObjectKind, Rect};
pub use layout::{ValidationErrors, Violation};
pub use metrics::{aesthetic_value, balance, equilibrium, measure, rhythm, sequence, symmetry};
pub use metrics::{MeasureReport, MetricsError};
pub use partition::{quadrant_partition, Quadrant, SubObject};
pub use ranking::{rank, RankedEntry};
pub use report::{render_report, round4, ReportFormat};
