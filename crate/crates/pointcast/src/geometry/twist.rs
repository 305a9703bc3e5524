//! SE(3) exponential and logarithm maps.

use crate::error::{Error, Result};
use crate::geometry::pose::Pose;
use nalgebra::{Matrix3, Vector3};

/// Element of the SE(3) Lie algebra: rotation vector `omega` (rad) and
/// translation generator `v` (m). Only the principal branch is handled,
/// `|omega| < pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Twist {
    pub omega: Vector3<f64>,
    pub v: Vector3<f64>,
}

impl Twist {
    pub fn zero() -> Self {
        Self {
            omega: Vector3::zeros(),
            v: Vector3::zeros(),
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            omega: self.omega * s,
            v: self.v * s,
        }
    }
}

fn skew(w: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(0.0, -w.z, w.y, w.z, 0.0, -w.x, -w.y, w.x, 0.0)
}

/// Left Jacobian of SO(3): V = I + a [w]x + b [w]x^2 with
/// a = (1 - cos t)/t^2, b = (t - sin t)/t^3.
fn v_matrix(omega: &Vector3<f64>) -> Matrix3<f64> {
    let t2 = omega.norm_squared();
    let (a, b) = if t2 < 1e-10 {
        // series: a = 1/2 - t^2/24, b = 1/6 - t^2/120
        (0.5 - t2 / 24.0, 1.0 / 6.0 - t2 / 120.0)
    } else {
        let t = t2.sqrt();
        ((1.0 - t.cos()) / t2, (t - t.sin()) / (t2 * t))
    };
    let k = skew(omega);
    Matrix3::identity() + a * k + b * (k * k)
}

/// Inverse of the left Jacobian: V^-1 = I - 1/2 [w]x + c [w]x^2 with
/// c = 1/t^2 - (1 + cos t)/(2 t sin t).
fn v_inv_matrix(omega: &Vector3<f64>) -> Matrix3<f64> {
    let t2 = omega.norm_squared();
    let c = if t2 < 1e-10 {
        // series: 1/12 + t^2/720
        1.0 / 12.0 + t2 / 720.0
    } else {
        let t = t2.sqrt();
        1.0 / t2 - (1.0 + t.cos()) / (2.0 * t * t.sin())
    };
    let k = skew(omega);
    Matrix3::identity() - 0.5 * k + c * (k * k)
}

/// Exponential map: twist to pose.
pub fn se3_exp(tw: &Twist) -> Pose {
    let t2 = tw.omega.norm_squared();
    let q = if t2 < 1e-20 {
        [1.0, 0.5 * tw.omega.x, 0.5 * tw.omega.y, 0.5 * tw.omega.z]
    } else {
        let t = t2.sqrt();
        let (s, c) = (0.5 * t).sin_cos();
        let k = s / t;
        [c, k * tw.omega.x, k * tw.omega.y, k * tw.omega.z]
    };
    let trans = v_matrix(&tw.omega) * tw.v;
    Pose::new(q, trans).expect("exp yields unit quaternion")
}

/// Logarithm map: pose to twist, principal branch only. Rotation angles at
/// or beyond `pi - 1e-6` are rejected rather than silently picking a branch.
pub fn se3_log(p: &Pose) -> Result<Twist> {
    let angle = p.rotation_angle();
    if angle >= std::f64::consts::PI - 1e-6 {
        return Err(Error::AngleNearPi(angle));
    }
    let q = p.quaternion();
    let vec = Vector3::new(q[1], q[2], q[3]);
    let s = vec.norm();
    let omega = if s < 1e-12 {
        // q ~ (1, eps): angle ~ 2 eps, axis ~ eps/|eps|
        vec * 2.0
    } else {
        vec * (angle / s)
    };
    let v = v_inv_matrix(&omega) * p.translation();
    Ok(Twist { omega, v })
}
