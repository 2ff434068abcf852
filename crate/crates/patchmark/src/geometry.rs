//! Pinhole camera model, rigid poses and patch unprojection.
//!
//! Conventions, fixed once here and used everywhere else:
//!
//! - A [`Pose`] stores the world-from-camera rotation `R` (row-major 3x3,
//!   orthonormal, det +1) and the camera origin `t` in world coordinates, so
//!   a camera-frame point `q` maps to the world as `R q + t`.
//! - The camera looks along +z, with +x towards increasing pixel column and
//!   +y towards increasing pixel row.
//! - Depth is the camera-frame z coordinate, not the ray length. This matches
//!   how RGB-D depth maps are stored.
//! - Continuous pixel coordinates place the center of pixel `(i, j)` at
//!   `(i + 0.5, j + 0.5)`.

use nalgebra::{Matrix3, Vector2, Vector3};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("depth must be positive, got {0}")]
    InvalidDepth(f64),
    #[error("pixel ({0}, {1}) outside image bounds {2}x{3}")]
    OutOfBounds(f64, f64, u32, u32),
    #[error("point is behind the camera (z = {0})")]
    BehindCamera(f64),
    #[error("rotation is not orthonormal (deviation {0})")]
    NotARotation(f64),
}

/// Identifier of one environment (a generated scene and its views).
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
pub struct EnvId(pub u64);

impl std::fmt::Display for EnvId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Pinhole intrinsics in pixel units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Intrinsics {
    pub fx: f64,
    pub fy: f64,
    pub cx: f64,
    pub cy: f64,
    pub width: u32,
    pub height: u32,
}

impl Intrinsics {
    pub fn new(fx: f64, fy: f64, cx: f64, cy: f64, width: u32, height: u32) -> Self {
        assert!(fx > 0.0 && fy > 0.0, "focal lengths must be positive");
        assert!(
            cx >= 0.0 && cx < width as f64 && cy >= 0.0 && cy < height as f64,
            "principal point must lie inside the image"
        );
        Self { fx, fy, cx, cy, width, height }
    }

    /// Square image with the principal point at the center.
    pub fn centered(focal: f64, width: u32, height: u32) -> Self {
        Self::new(focal, focal, width as f64 / 2.0, height as f64 / 2.0, width, height)
    }

    pub fn contains(&self, pixel: Vector2<f64>) -> bool {
        pixel.x >= 0.0
            && pixel.x < self.width as f64
            && pixel.y >= 0.0
            && pixel.y < self.height as f64
    }
}

/// World-from-camera rigid transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    /// World-from-camera rotation.
    pub rotation: Matrix3<f64>,
    /// Camera origin in world coordinates, meters.
    pub translation: Vector3<f64>,
}

const ORTHONORMAL_TOL: f64 = 1e-9;

impl Pose {
    /// Builds a pose, validating that `rotation` is orthonormal with det +1.
    pub fn new(rotation: Matrix3<f64>, translation: Vector3<f64>) -> Result<Self, GeometryError> {
        let dev = orthonormal_deviation(&rotation);
        if dev > ORTHONORMAL_TOL {
            return Err(GeometryError::NotARotation(dev));
        }
        Ok(Self { rotation, translation })
    }

    pub fn identity() -> Self {
        Self { rotation: Matrix3::identity(), translation: Vector3::zeros() }
    }

    /// Camera at `origin` looking at `target`, with `up` fixing the roll.
    ///
    /// Returns `None` when the viewing direction is (anti)parallel to `up`.
    pub fn look_at(origin: Vector3<f64>, target: Vector3<f64>, up: Vector3<f64>) -> Option<Self> {
        let forward = (target - origin).normalize();
        let right = forward.cross(&up);
        if right.norm() < 1e-8 {
            return None;
        }
        let right = right.normalize();
        let down = forward.cross(&right).normalize();
        // Columns are the camera axes expressed in world coordinates.
        let rotation = Matrix3::from_columns(&[right, down, forward]);
        Some(Self { rotation, translation: origin })
    }

    /// Camera-frame point to world frame.
    pub fn camera_to_world(&self, q: Vector3<f64>) -> Vector3<f64> {
        self.rotation * q + self.translation
    }

    /// World point to camera frame.
    pub fn world_to_camera(&self, w: Vector3<f64>) -> Vector3<f64> {
        self.rotation.transpose() * (w - self.translation)
    }

    /// Composition: the pose of `other` expressed through `self`
    /// (`self` maps b-to-world when `other` maps b-to-self).
    pub fn compose(&self, other: &Pose) -> Pose {
        Pose {
            rotation: self.rotation * other.rotation,
            translation: self.rotation * other.translation + self.translation,
        }
    }

    pub fn inverse(&self) -> Pose {
        let rt = self.rotation.transpose();
        Pose { rotation: rt, translation: -(rt * self.translation) }
    }

    /// How far `rotation` is from the closest orthonormal matrix.
    pub fn orthonormal_drift(&self) -> f64 {
        orthonormal_deviation(&self.rotation)
    }
}

fn orthonormal_deviation(r: &Matrix3<f64>) -> f64 {
    let gram = r.transpose() * r - Matrix3::identity();
    let det_dev = (r.determinant() - 1.0).abs();
    gram.amax().max(det_dev)
}

/// A 3D point tagged with the environment it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorldPoint {
    pub xyz: Vector3<f64>,
    pub environment: EnvId,
}

impl WorldPoint {
    pub fn new(xyz: Vector3<f64>, environment: EnvId) -> Self {
        debug_assert!(xyz.iter().all(|v| v.is_finite()));
        Self { xyz, environment }
    }

    pub fn distance(&self, other: &WorldPoint) -> f64 {
        (self.xyz - other.xyz).norm()
    }
}

/// Lifts a pixel at the given depth into the world frame.
pub fn unproject(
    pixel: Vector2<f64>,
    depth: f64,
    intr: &Intrinsics,
    pose: &Pose,
    environment: EnvId,
) -> Result<WorldPoint, GeometryError> {
    if depth <= 0.0 {
        return Err(GeometryError::InvalidDepth(depth));
    }
    if !intr.contains(pixel) {
        return Err(GeometryError::OutOfBounds(pixel.x, pixel.y, intr.width, intr.height));
    }
    let q = Vector3::new(
        (pixel.x - intr.cx) / intr.fx * depth,
        (pixel.y - intr.cy) / intr.fy * depth,
        depth,
    );
    Ok(WorldPoint::new(pose.camera_to_world(q), environment))
}

/// Projects a world point; returns the continuous pixel and its depth.
///
/// The pixel may fall outside the image bounds; callers that need an
/// in-bounds pixel check with [`Intrinsics::contains`].
pub fn project(
    point: &WorldPoint,
    intr: &Intrinsics,
    pose: &Pose,
) -> Result<(Vector2<f64>, f64), GeometryError> {
    let q = pose.world_to_camera(point.xyz);
    if q.z <= 0.0 {
        return Err(GeometryError::BehindCamera(q.z));
    }
    let pixel =
        Vector2::new(intr.fx * q.x / q.z + intr.cx, intr.fy * q.y / q.z + intr.cy);
    Ok((pixel, q.z))
}

/// Transform mapping camera-b coordinates into camera-a coordinates.
pub fn relative_pose(a: &Pose, b: &Pose) -> Pose {
    let r = a.rotation.transpose() * b.rotation;
    let t = a.rotation.transpose() * (b.translation - a.translation);
    Pose { rotation: r, translation: t }
}
