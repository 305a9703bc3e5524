//! Pinhole projection and unprojection.

use crate::error::{Error, Result};
use nalgebra::Vector3;

/// Pinhole camera: focal lengths and principal point in pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CameraIntrinsics {
    pub fx: f64,
    pub fy: f64,
    pub cx: f64,
    pub cy: f64,
    pub width: usize,
    pub height: usize,
}

impl CameraIntrinsics {
    pub fn new(fx: f64, fy: f64, cx: f64, cy: f64, width: usize, height: usize) -> Result<Self> {
        if fx <= 0.0 || fy <= 0.0 {
            return Err(Error::InvalidArgument("focal length must be positive".into()));
        }
        if cx < 0.0 || cx >= width as f64 || cy < 0.0 || cy >= height as f64 {
            return Err(Error::InvalidArgument(format!(
                "principal point ({cx}, {cy}) outside {width}x{height} image"
            )));
        }
        Ok(Self {
            fx,
            fy,
            cx,
            cy,
            width,
            height,
        })
    }
}

/// Result of projecting a point: pixel coordinates and z-depth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projected {
    pub u: f64,
    pub v: f64,
    pub depth: f64,
}

/// Project a camera-frame point. Points at or behind the camera plane are
/// culled (None), not an error.
#[inline]
pub fn project(x: &Vector3<f64>, k: &CameraIntrinsics) -> Option<Projected> {
    if x.z <= 0.0 {
        return None;
    }
    Some(Projected {
        u: k.fx * x.x / x.z + k.cx,
        v: k.fy * x.y / x.z + k.cy,
        depth: x.z,
    })
}

/// Lift a pixel with depth through the inverse pinhole model. Non-positive
/// depth has no preimage (None); callers count skipped pixels.
#[inline]
pub fn unproject(u: f64, v: f64, depth: f64, k: &CameraIntrinsics) -> Option<Vector3<f64>> {
    if depth <= 0.0 {
        return None;
    }
    Some(Vector3::new(
        (u - k.cx) * depth / k.fx,
        (v - k.cy) * depth / k.fy,
        depth,
    ))
}
