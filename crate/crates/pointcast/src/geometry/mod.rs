//! Camera model, quaternion/SE(3) algebra, projection and pose-induced flow.
//!
//! Conventions used throughout the crate:
//!
//! * camera frame: x right, y down, z forward; pixel (u, v) = (column, row)
//! * a pose `T_a_to_b` maps coordinates in frame `a` to coordinates in
//!   frame `b`
//! * quaternions are stored (w, x, y, z) with the canonical sign `w >= 0`

mod pose;
mod projection;
mod twist;

pub use pose::{matrix_to_quat, pose_compose, quat_to_matrix, Pose};
pub use projection::{project, unproject, CameraIntrinsics, Projected};
pub use twist::{se3_exp, se3_log, Twist};

use nalgebra::Vector3;

/// 3D motion flow induced on a point by a rigid transform: `u = R x + t - x`.
///
/// Adding the flow to the point gives exactly the transformed point.
pub fn motion_flow_from_pose(pose: &Pose, x: &Vector3<f64>) -> Vector3<f64> {
    pose.apply(x) - x
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Vector3;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn flow_identity_pose_is_zero() {
        let p = Pose::identity();
        let u = motion_flow_from_pose(&p, &Vector3::new(3.0, -2.0, 7.0));
        assert_eq!(u, Vector3::zeros());
    }

    #[test]
    fn flow_pure_translation_is_t() {
        let p = Pose::from_translation(Vector3::new(0.1, -0.4, 2.0));
        for x in [Vector3::new(1.0, 2.0, 3.0), Vector3::new(-5.0, 0.0, 9.0)] {
            let u = motion_flow_from_pose(&p, &x);
            assert!((u - Vector3::new(0.1, -0.4, 2.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn flow_quarter_turn_about_z() {
        // 90 deg about z maps (1,0,0) -> (0,1,0), so u = (-1,1,0).
        let p = Pose::from_axis_angle(&Vector3::z_axis(), FRAC_PI_2, Vector3::zeros());
        let u = motion_flow_from_pose(&p, &Vector3::new(1.0, 0.0, 0.0));
        assert!((u - Vector3::new(-1.0, 1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn flow_is_algebraic_identity() {
        // x + u(x) = R x + t, bit-for-bit by construction; check at 1e-12
        // over a spread of poses and points.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let axis = Vector3::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            if axis.norm() < 1e-3 {
                continue;
            }
            let p = Pose::from_axis_angle(
                &nalgebra::Unit::new_normalize(axis),
                rng.random_range(-3.0..3.0),
                Vector3::new(rng.random_range(-10.0..10.0), 0.0, rng.random_range(-10.0..10.0)),
            );
            let x = Vector3::new(
                rng.random_range(-20.0..20.0),
                rng.random_range(-20.0..20.0),
                rng.random_range(-20.0..20.0),
            );
            let u = motion_flow_from_pose(&p, &x);
            assert!(((x + u) - p.apply(&x)).norm() < 1e-12);
        }
    }
}
