#pragma once

#include <Eigen/Dense>

namespace cuvms {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Rotation matrices are plain 3x3 matrices; is_rotation() checks the
// orthonormality/determinant contract where it matters.
using Rot3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;

// ZYX (yaw-pitch-roll) Euler angles: R = rot_z(alpha) rot_y(beta) rot_x(gamma).
struct EulerZYX {
  double alpha = 0.0;  // yaw [rad]
  double beta = 0.0;   // pitch [rad], kept inside (-pi/2, pi/2)
  double gamma = 0.0;  // roll [rad]
};

Rot3 rot_x(double angle);
Rot3 rot_y(double angle);
Rot3 rot_z(double angle);

Rot3 rotation_zyx(const EulerZYX& angles);
EulerZYX euler_zyx_from(const Rot3& R);

bool is_rotation(const Mat3& R, double tol = 1e-9);

/// Skew-symmetric matrix such that skew(v) * w == v.cross(w).
Mat3 skew(const Vec3& v);

/// Maps ZYX Euler-angle rates to the world-frame angular velocity:
/// omega = euler_rate_map(alpha, beta) * [alpha_dot, beta_dot, gamma_dot].
/// Throws GimbalLockError when |cos(beta)| < 1e-6.
Mat3 euler_rate_map(double alpha, double beta);

struct AxisAngle {
  double angle = 0.0;        // in [0, pi]
  Vec3 axis = Vec3::Zero();  // unit vector; zero when angle == 0
};

/// Axis-angle decomposition of R_goal * R_current^T: rotating R_current by
/// `angle` about `axis` (world frame) reproduces R_goal. The axis is taken
/// from the symmetric part of the error matrix near angle == pi, and is the
/// zero vector below 1e-9 rad where the direction carries no information.
AxisAngle axis_angle_error(const Rot3& R_current, const Rot3& R_goal);

/// Quintic smoothstep: 0 for x <= x_m, 1 for x >= x_M, otherwise
/// 6t^5 - 15t^4 + 10t^3 with t = (x - x_m)/(x_M - x_m).
/// Throws std::invalid_argument if x_m >= x_M.
double smoothstep5(double x, double x_m, double x_M);

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

}  // namespace cuvms
