//! Point-cloud scene forecasting.
//!
//! Two past RGB-D frames are lifted into feature point clouds, future 3D
//! motion is forecast in two disentangled stages (camera ego-motion first,
//! residual object motion second), and the forecasted scene is rendered from
//! a novel viewpoint by point splatting. A built-in box-world simulator
//! provides exact ground truth for end-to-end verification.
//!
//! The crate is organized along the pipeline:
//!
//! * [`geometry`] — camera model, quaternion/SE(3) algebra, pose-induced flow
//! * [`layers`] — feature layers, segmentation masks, RGB-D inpainting
//! * [`cloud`] — feature point clouds and layer unprojection
//! * [`motion`] — rigid registration, ego forecasting, residual scene flow
//! * [`render`] — point splatting, compositing, hole filling
//! * [`pipeline`] — the recursive frame forecaster tying it all together
//! * [`sim`] — synthetic scene generator with exact ground truth
//! * [`metrics`] — SSIM / MS-SSIM / L1 / pose / end-point-error metrics
//! * [`io`] — PPM / PFM / PGM / dataset formats

pub mod cloud;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod io;
pub mod layers;
pub mod metrics;
pub mod motion;
pub mod par;
pub mod pipeline;
pub mod render;
pub mod sim;

pub use error::{Error, Result};
pub use geometry::{CameraIntrinsics, Pose, Twist};
pub use grid::ImageGrid;
