#pragma once

#include "cuvms/geometry.hpp"

namespace cuvms {

inline constexpr int kVehicleDof = 6;
inline constexpr int kManipulatorDof = 4;
inline constexpr int kStateDim = kVehicleDof + kManipulatorDof;
inline constexpr int kReducedStateDim = kStateDim - 2;

// State vector layout: [x_A, y_A, z_A, alpha, beta, gamma, theta1, phi1,
// theta2, phi2]. The reduced (4-DoF vehicle) layout drops beta and gamma.
using StateVector = Eigen::Matrix<double, kStateDim, 1>;

namespace idx {
inline constexpr int x = 0, y = 1, z = 2;
inline constexpr int alpha = 3, beta = 4, gamma = 5;
inline constexpr int theta1 = 6, phi1 = 7, theta2 = 8, phi2 = 9;
}  // namespace idx

struct VehicleState {
  Vec3 position = Vec3::Zero();  // p_A in the global frame [m]
  EulerZYX attitude;
};

struct ManipulatorState {
  double theta1 = 0.0;  // bending angle, segment 1 [rad]
  double phi1 = 0.0;    // bending-plane direction, segment 1 [rad]
  double theta2 = 0.0;
  double phi2 = 0.0;
};

struct RobotState {
  VehicleState vehicle;
  ManipulatorState manipulator;

  StateVector to_vector() const;
  static RobotState from_vector(const StateVector& v);
};

struct GeometryParams {
  double l1 = 0.2;  // segment arc lengths [m]
  double l2 = 0.2;
  Vec3 r_ab = Vec3(0.2, 0.0, -0.1);  // segment-1 base offset in the vehicle frame [m]
  Rot3 R_ab = Rot3::Identity();      // fixed vehicle-to-mount rotation
  double theta_min = -kPi / 3.0;     // bending-angle limits [rad]
  double theta_max = kPi / 3.0;
};

struct Pose {
  Vec3 p = Vec3::Zero();
  Rot3 R = Rot3::Identity();
};

// World poses of the kinematic chain: vehicle {A}, segment-1 base {B},
// segment-2 base {C}, end-effector {D}.
struct FramePoses {
  Rot3 R_A = Rot3::Identity();
  Rot3 R_B = Rot3::Identity();
  Rot3 R_C = Rot3::Identity();
  Vec3 p_A = Vec3::Zero();
  Vec3 p_B = Vec3::Zero();
  Vec3 p_C = Vec3::Zero();
  Pose end_effector;
};

// Below this bending angle the tip position/Jacobian switch to series forms.
inline constexpr double kThetaEps = 1e-4;

/// Tip of a constant-curvature segment in its base frame. The backbone
/// leaves the base along +x and bends toward [0, cos(phi), sin(phi)]:
/// (l/theta) * [sin(theta), (1-cos(theta))cos(phi), (1-cos(theta))sin(phi)].
Vec3 segment_tip_position(double theta, double phi, double length);

/// Base-to-tip rotation: angle theta about the unit axis [0, -sin(phi), cos(phi)].
Rot3 segment_tip_rotation(double theta, double phi);

FramePoses forward_kinematics(const RobotState& state, const GeometryParams& geom);

}  // namespace cuvms
