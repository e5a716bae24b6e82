#include "l3e/se3.hpp"

#include <cmath>

namespace l3e {

double normalize_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

namespace {

// Project a drifted rotation back onto SO(3).
Eigen::Matrix3d reorthonormalize(const Eigen::Matrix3d& r) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  Eigen::Matrix3d out = u * v.transpose();
  if (out.determinant() < 0) {
    u.col(2) *= -1.0;
    out = u * v.transpose();
  }
  return out;
}

double orthonormality_drift(const Eigen::Matrix3d& r) {
  return (r.transpose() * r - Eigen::Matrix3d::Identity())
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  RigidTransform out;
  out.rotation = a.rotation * b.rotation;
  out.translation = a.rotation * b.translation + a.translation;
  if (orthonormality_drift(out.rotation) > 1e-12) {
    out.rotation = reorthonormalize(out.rotation);
  }
  return out;
}

RigidTransform invert(const RigidTransform& t) {
  RigidTransform out;
  out.rotation = t.rotation.transpose();
  out.translation = -(out.rotation * t.translation);
  return out;
}

Pose6 to_euler_pose(const RigidTransform& t, bool* gimbal_lock) {
  const Eigen::Matrix3d& r = t.rotation;
  Pose6 p;
  p.x = t.translation.x();
  p.y = t.translation.y();
  p.z = t.translation.z();

  // R = Rz(yaw) * Ry(pitch) * Rx(roll):
  //   r(2,0) = -sin(pitch), r(2,1) = cos(pitch) sin(roll),
  //   r(1,0) = sin(yaw) cos(pitch), r(0,0) = cos(yaw) cos(pitch).
  const double sp = -r(2, 0);
  const double cp = std::sqrt(std::max(0.0, 1.0 - sp * sp));
  const bool locked = cp < 1e-6;
  if (gimbal_lock) *gimbal_lock = locked;
  if (!locked) {
    p.pitch = std::asin(std::clamp(sp, -1.0, 1.0));
    p.roll = std::atan2(r(2, 1), r(2, 2));
    p.yaw = std::atan2(r(1, 0), r(0, 0));
  } else {
    // Coupled angle assigned entirely to yaw, roll fixed at zero.
    p.pitch = sp > 0 ? kPi / 2.0 : -kPi / 2.0;
    p.roll = 0.0;
    p.yaw = std::atan2(-r(0, 1), r(1, 1));
  }
  p.roll = normalize_angle(p.roll);
  p.yaw = normalize_angle(p.yaw);
  return p;
}

RigidTransform from_euler_pose(const Pose6& p) {
  const double cr = std::cos(p.roll), sr = std::sin(p.roll);
  const double cp = std::cos(p.pitch), sp = std::sin(p.pitch);
  const double cy = std::cos(p.yaw), sy = std::sin(p.yaw);
  RigidTransform t;
  t.rotation << cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr,
      sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr,
      -sp, cp * sr, cp * cr;
  t.translation = Eigen::Vector3d(p.x, p.y, p.z);
  return t;
}

double rotation_angle(const Eigen::Matrix3d& r) {
  const double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

Pose6 sample_perturbation(const PerturbationSigmas& sigmas, Rng& rng) {
  Pose6 p;
  p.x = rng.normal(0.0, sigmas.x_m);
  p.y = rng.normal(0.0, sigmas.y_m);
  p.z = rng.normal(0.0, sigmas.z_m);
  p.roll = rng.normal(0.0, deg2rad(sigmas.roll_deg));
  p.pitch = rng.normal(0.0, deg2rad(sigmas.pitch_deg));
  p.yaw = rng.normal(0.0, deg2rad(sigmas.yaw_deg));
  return p;
}

}  // namespace l3e
