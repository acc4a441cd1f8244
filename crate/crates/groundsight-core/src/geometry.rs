//! Geometric domain types: points, clouds, IMU attitude and the
//! point-normal ground-plane model `a*x + b*y + c*z + d = 0`.
//!
//! # Coordinate convention
//!
//! Camera coordinates are metric with `x` right, `z` forward. After IMU
//! alignment the vertical axis is `y` with gravity pointing along `-y`, so
//! "up" is `+y` and the floor lies below the camera at negative `y`.
//! [`rotate_attitude`] maps a raw (tilted) cloud into this aligned frame by
//! applying `R = Rz(-roll) * Rx(-pitch)`, where `Rx`/`Rz` are the frame
//! rotations defined in [`attitude_rotation`]. That function is the single
//! source of truth for the convention; the sensor itself does not fix the
//! sign of the raw vertical axis, so this is a documented engineering
//! choice, not a hardware datum.
//!
//! Plane normals are canonicalized to `normal.y >= 0` (ties broken toward
//! `normal.x >= 0`, then `normal.z >= 0`), which removes the `+-(n, d)` sign
//! ambiguity of the plane equation.

use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::math::{flt, Mat3};

/// A 3D point (or vector) in meters.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[inline]
    pub fn dot(&self, other: &Point3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn sub(&self, other: &Point3) -> Point3 {
        Point3::new(self.x - other.x, self.y - other.y, self.z - other.z)
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        flt::sqrt(self.dot(self))
    }

    #[inline]
    pub fn distance(&self, other: &Point3) -> f64 {
        self.sub(other).norm()
    }

    #[inline]
    pub(crate) fn scaled(&self, s: f64) -> Point3 {
        Point3::new(self.x * s, self.y * s, self.z * s)
    }

    #[inline]
    pub(crate) fn coord(&self, axis: usize) -> f64 {
        match axis {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }
}

/// Which frame a cloud's coordinates are expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameTag {
    /// Straight from the sensor; may be tilted by the robot's motion.
    Raw,
    /// Rotated so gravity points along `-y`.
    ImuAligned,
}

/// An ordered set of 3D points tagged with its coordinate frame.
///
/// Ingestion (file parsers, depth back-projection) is responsible for
/// dropping non-finite sensor returns; the geometry and filter operations
/// assume finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<Point3>,
    frame: FrameTag,
}

impl PointCloud {
    pub fn new(points: Vec<Point3>, frame: FrameTag) -> Self {
        Self { points, frame }
    }

    /// A raw-frame cloud, dropping any non-finite points.
    pub fn from_sensor(points: Vec<Point3>) -> Self {
        let mut points = points;
        points.retain(Point3::is_finite);
        Self {
            points,
            frame: FrameTag::Raw,
        }
    }

    pub fn points(&self) -> &[Point3] {
        &self.points
    }

    pub fn frame(&self) -> FrameTag {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Point3> {
        self.points.iter()
    }
}

/// Camera pitch and roll from the IMU, in radians.
///
/// Both angles are restricted to `[-pi/2, pi/2]`; the quarter turn itself is
/// allowed so axis-aligned test attitudes stay representable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImuAttitude {
    pitch: f64,
    roll: f64,
}

impl ImuAttitude {
    pub fn new(pitch: f64, roll: f64) -> Result<Self> {
        let limit = core::f64::consts::FRAC_PI_2;
        if !pitch.is_finite()
            || !roll.is_finite()
            || flt::abs(pitch) > limit
            || flt::abs(roll) > limit
        {
            return Err(CoreError::AttitudeOutOfRange);
        }
        Ok(Self { pitch, roll })
    }

    /// The zero attitude (camera level).
    pub fn level() -> Self {
        Self {
            pitch: 0.0,
            roll: 0.0,
        }
    }

    pub fn pitch(&self) -> f64 {
        self.pitch
    }

    pub fn roll(&self) -> f64 {
        self.roll
    }
}

/// Frame rotation about the x axis: `y' = y cos(t) + z sin(t)`,
/// `z' = -y sin(t) + z cos(t)`.
fn rot_x(t: f64) -> Mat3 {
    let (s, c) = (flt::sin(t), flt::cos(t));
    [[1.0, 0.0, 0.0], [0.0, c, s], [0.0, -s, c]]
}

/// Frame rotation about the z axis: `x' = x cos(t) + y sin(t)`,
/// `y' = -x sin(t) + y cos(t)`.
fn rot_z(t: f64) -> Mat3 {
    let (s, c) = (flt::sin(t), flt::cos(t));
    [[c, s, 0.0], [-s, c, 0.0], [0.0, 0.0, 1.0]]
}

/// The raw-to-aligned rotation for an attitude: `Rz(-roll) * Rx(-pitch)`
/// (pitch is undone first, then roll).
///
/// Every consumer of the attitude (cloud alignment, depth masking, ray
/// casting, scene synthesis) goes through this one matrix.
pub fn attitude_rotation(att: ImuAttitude) -> Mat3 {
    crate::math::mat3_mul(&rot_z(-att.roll), &rot_x(-att.pitch))
}

/// The aligned-to-raw (inverse) rotation; rotations are orthonormal so this
/// is the transpose.
pub fn attitude_rotation_inverse(att: ImuAttitude) -> Mat3 {
    crate::math::mat3_transpose(&attitude_rotation(att))
}

#[inline]
pub(crate) fn mat3_apply(m: &Mat3, p: &Point3) -> Point3 {
    Point3::new(
        m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
        m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
        m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z,
    )
}

/// Rotate a raw cloud into the gravity-aligned frame.
///
/// Returns a cloud tagged [`FrameTag::ImuAligned`]; the rotation is rigid,
/// so pairwise distances are preserved.
pub fn rotate_attitude(cloud: &PointCloud, att: ImuAttitude) -> Result<PointCloud> {
    if cloud.frame() != FrameTag::Raw {
        return Err(CoreError::InvalidParam(
            "rotate_attitude expects a raw-frame cloud",
        ));
    }
    let r = attitude_rotation(att);
    let points = cloud.iter().map(|p| mat3_apply(&r, p)).collect();
    Ok(PointCloud::new(points, FrameTag::ImuAligned))
}

/// Unit normal and orthogonal offset of a plane `n . p + d = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneModel {
    normal: Point3,
    offset: f64,
}

impl PlaneModel {
    /// Builds a plane from arbitrary (not necessarily unit) coefficients.
    ///
    /// The coefficients are rescaled so the normal has unit length — which
    /// leaves the zero set of the equation unchanged — and canonicalized to
    /// the sign convention of the module docs.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) {
            return Err(CoreError::InvalidParam("plane coefficients must be finite"));
        }
        let norm = flt::sqrt(a * a + b * b + c * c);
        if norm < 1e-300 {
            return Err(CoreError::DegenerateGeometry);
        }
        let mut normal = Point3::new(a / norm, b / norm, c / norm);
        let mut offset = d / norm;
        let flip = normal.y < 0.0
            || (normal.y == 0.0 && (normal.x < 0.0 || (normal.x == 0.0 && normal.z < 0.0)));
        if flip {
            normal = normal.scaled(-1.0);
            offset = -offset;
        }
        Ok(Self { normal, offset })
    }

    pub fn normal(&self) -> Point3 {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Signed orthogonal distance `a*x + b*y + c*z + d`; zero iff the point
    /// lies on the plane, positive on the `+normal` side.
    #[inline]
    pub fn signed_distance(&self, p: &Point3) -> f64 {
        self.normal.dot(p) + self.offset
    }
}
