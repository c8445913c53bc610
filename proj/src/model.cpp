#include "cuvms/model.hpp"

#include <cmath>

namespace cuvms {

StateVector RobotState::to_vector() const {
  StateVector v;
  v << vehicle.position.x(), vehicle.position.y(), vehicle.position.z(),
      vehicle.attitude.alpha, vehicle.attitude.beta, vehicle.attitude.gamma,
      manipulator.theta1, manipulator.phi1, manipulator.theta2, manipulator.phi2;
  return v;
}

RobotState RobotState::from_vector(const StateVector& v) {
  RobotState s;
  s.vehicle.position = v.head<3>();
  s.vehicle.attitude = {v[idx::alpha], v[idx::beta], v[idx::gamma]};
  s.manipulator = {v[idx::theta1], v[idx::phi1], v[idx::theta2], v[idx::phi2]};
  return s;
}

Vec3 segment_tip_position(double theta, double phi, double length) {
  double sinc, versine_over_theta;  // sin(t)/t and (1-cos(t))/t
  if (std::abs(theta) < kThetaEps) {
    const double t2 = theta * theta;
    sinc = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    versine_over_theta = theta * (0.5 - t2 / 24.0 + t2 * t2 / 720.0);
  } else {
    sinc = std::sin(theta) / theta;
    versine_over_theta = (1.0 - std::cos(theta)) / theta;
  }
  return length * Vec3(sinc, versine_over_theta * std::cos(phi),
                       versine_over_theta * std::sin(phi));
}

Rot3 segment_tip_rotation(double theta, double phi) {
  // Rodrigues about the bending axis [0, -sin(phi), cos(phi)].
  const Vec3 axis(0.0, -std::sin(phi), std::cos(phi));
  const Mat3 ax = skew(axis);
  return Mat3::Identity() + std::sin(theta) * ax + (1.0 - std::cos(theta)) * ax * ax;
}

FramePoses forward_kinematics(const RobotState& state, const GeometryParams& geom) {
  FramePoses f;
  f.R_A = rotation_zyx(state.vehicle.attitude);
  f.p_A = state.vehicle.position;
  f.R_B = f.R_A * geom.R_ab;
  f.p_B = f.p_A + f.R_A * geom.r_ab;
  f.R_C = f.R_B * segment_tip_rotation(state.manipulator.theta1, state.manipulator.phi1);
  f.p_C = f.p_B + f.R_B * segment_tip_position(state.manipulator.theta1,
                                               state.manipulator.phi1, geom.l1);
  f.end_effector.R =
      f.R_C * segment_tip_rotation(state.manipulator.theta2, state.manipulator.phi2);
  f.end_effector.p = f.p_C + f.R_C * segment_tip_position(state.manipulator.theta2,
                                                          state.manipulator.phi2, geom.l2);
  return f;
}

}  // namespace cuvms
