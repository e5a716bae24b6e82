#pragma once

#include <Eigen/Dense>

#include "l3e/rng.hpp"

namespace l3e {

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Wrap an angle to (-pi, pi].
double normalize_angle(double a);

// 6-DOF pose as translation plus intrinsic ZYX Euler angles
// (yaw about z, then pitch about y, then roll about x). Radians.
struct Pose6 {
  double x = 0.0, y = 0.0, z = 0.0;
  double roll = 0.0, pitch = 0.0, yaw = 0.0;

  Eigen::Matrix<double, 6, 1> vector() const {
    Eigen::Matrix<double, 6, 1> v;
    v << x, y, z, roll, pitch, yaw;
    return v;
  }
  static Pose6 from_vector(const Eigen::Matrix<double, 6, 1>& v) {
    return Pose6{v[0], v[1], v[2], v[3], v[4], v[5]};
  }
};

// SE(3) element. Rotation kept orthonormal (det +1).
struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidTransform identity() { return {}; }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }
  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const {
    return rotation * v;
  }
};

// Applies b then a.
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);
RigidTransform invert(const RigidTransform& t);

// Project back to (x, y, z, roll, pitch, yaw). Near gimbal lock
// (|cos pitch| < 1e-6) roll is set to zero and yaw absorbs the coupled
// angle; `gimbal_lock`, when given, reports that this happened.
Pose6 to_euler_pose(const RigidTransform& t, bool* gimbal_lock = nullptr);
RigidTransform from_euler_pose(const Pose6& p);

// Rotation angle of the relative rotation between two transforms, radians.
double rotation_angle(const Eigen::Matrix3d& r);

// Standard deviations for the Monte Carlo child-pose perturbations.
// Translations in meters, rotations in degrees (converted when sampling).
struct PerturbationSigmas {
  double x_m = 0.1, y_m = 0.1, z_m = 0.1;
  double roll_deg = 5.0, pitch_deg = 5.0, yaw_deg = 10.0;

  bool valid() const {
    return x_m > 0 && y_m > 0 && z_m > 0 && roll_deg > 0 && pitch_deg > 0 &&
           yaw_deg > 0;
  }
};

// Independent zero-mean Gaussian draw per component, fixed order
// (x, y, z, roll, pitch, yaw).
Pose6 sample_perturbation(const PerturbationSigmas& sigmas, Rng& rng);

}  // namespace l3e
