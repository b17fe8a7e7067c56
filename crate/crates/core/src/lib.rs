//! Planar convex hulls via two rounds of interior-point discarding followed
//! by a Graham scan over angle-sorted survivors.
//!
//! The pipeline stages are exposed individually so that each can be tested
//! and benchmarked on its own:
//!
//! 1. [`prefilter`]: drop points strictly inside the quadrilateral spanned by
//!    the four axis-extreme points.
//! 2. [`angular`]: anchor at the lowest point, attach polar keys, sort by
//!    angle and split the order at the point farthest from the anchor.
//! 3. [`discard`]: walk each region of the sorted order and drop points
//!    proven to lie inside a triangle of already-seen points.
//! 4. [`hull`]: stack-based Graham finalization.
//!
//! [`pipeline::full_pipeline`] runs all of them and reports per-stage counts
//! and timings. [`oracle`] holds independent reference hulls used by the
//! tests and the `verify` command.

pub mod angular;
pub mod datagen;
pub mod discard;
pub mod error;
pub mod geom;
pub mod hull;
pub mod oracle;
pub mod pipeline;
pub mod prefilter;

pub use angular::{AnnotatedBuffer, PolarPoint, RegionSplit};
pub use datagen::{DatasetKind, DatasetSpec};
pub use discard::ChunkConfig;
pub use error::{HullError, Result};
pub use geom::{orient, polar_key, Point2, PolarKey, Turn};
pub use hull::{graham_finalize, Hull};
pub use pipeline::{full_pipeline, PipelineConfig, PipelineTrace, StageStats};
pub use prefilter::{ExtremeQuad, KeepFlags};
