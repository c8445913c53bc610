#include "cuvms/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "cuvms/errors.hpp"

namespace cuvms {

Rot3 rot_x(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Rot3 r;
  r << 1, 0, 0,
       0, c, -s,
       0, s, c;
  return r;
}

Rot3 rot_y(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Rot3 r;
  r << c, 0, s,
       0, 1, 0,
       -s, 0, c;
  return r;
}

Rot3 rot_z(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Rot3 r;
  r << c, -s, 0,
       s, c, 0,
       0, 0, 1;
  return r;
}

Rot3 rotation_zyx(const EulerZYX& angles) {
  return rot_z(angles.alpha) * rot_y(angles.beta) * rot_x(angles.gamma);
}

EulerZYX euler_zyx_from(const Rot3& R) {
  EulerZYX e;
  e.beta = std::asin(std::clamp(-R(2, 0), -1.0, 1.0));
  e.alpha = std::atan2(R(1, 0), R(0, 0));
  e.gamma = std::atan2(R(2, 1), R(2, 2));
  return e;
}

bool is_rotation(const Mat3& R, double tol) {
  const Mat3 err = R.transpose() * R - Mat3::Identity();
  return err.cwiseAbs().maxCoeff() <= tol && std::abs(R.determinant() - 1.0) <= tol;
}

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0, -v.z(), v.y(),
       v.z(), 0, -v.x(),
       -v.y(), v.x(), 0;
  return m;
}

Mat3 euler_rate_map(double alpha, double beta) {
  const double cb = std::cos(beta);
  if (std::abs(cb) < 1e-6) {
    throw GimbalLockError("euler_rate_map: pitch within 1e-6 of gimbal lock");
  }
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  Mat3 t;
  // Columns: world z (yaw), yawed y (pitch), yawed-pitched x (roll).
  t << 0, -sa, ca * cb,
       0, ca, sa * cb,
       1, 0, -std::sin(beta);
  return t;
}

AxisAngle axis_angle_error(const Rot3& R_current, const Rot3& R_goal) {
  const Rot3 R_err = R_goal * R_current.transpose();
  const double cos_angle = std::clamp((R_err.trace() - 1.0) / 2.0, -1.0, 1.0);
  AxisAngle out;
  out.angle = std::acos(cos_angle);

  if (out.angle < 1e-9) {
    out.angle = 0.0;
    return out;  // axis convention: zero vector, the twist vanishes anyway
  }

  if (out.angle > kPi - 1e-6) {
    // 1/(2 sin) blows up; take the axis from the symmetric part instead.
    // (I + R_err)/2 == axis*axis^T at angle pi, up to O(pi - angle).
    const Mat3 sym = 0.5 * (Mat3::Identity() + R_err);
    int col = 0;
    sym.colwise().norm().maxCoeff(&col);
    Vec3 axis = sym.col(col).normalized();
    // Orient the axis so it agrees with the antisymmetric part when the
    // angle is not exactly pi.
    const Vec3 anti(R_err(2, 1) - R_err(1, 2), R_err(0, 2) - R_err(2, 0),
                    R_err(1, 0) - R_err(0, 1));
    if (anti.dot(axis) < 0.0) {
      axis = -axis;
    }
    out.axis = axis;
    return out;
  }

  const double scale = 1.0 / (2.0 * std::sin(out.angle));
  out.axis = scale * Vec3(R_err(2, 1) - R_err(1, 2), R_err(0, 2) - R_err(2, 0),
                          R_err(1, 0) - R_err(0, 1));
  return out;
}

double smoothstep5(double x, double x_m, double x_M) {
  if (!(x_m < x_M)) {
    throw std::invalid_argument("smoothstep5: requires x_m < x_M");
  }
  if (x <= x_m) return 0.0;
  if (x >= x_M) return 1.0;
  const double t = (x - x_m) / (x_M - x_m);
  return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

double wrap_angle(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  if (w > kPi) w -= 2.0 * kPi;
  return w;
}

}  // namespace cuvms
