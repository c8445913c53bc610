#pragma once

#include "cuvms/model.hpp"

namespace cuvms {

enum class VehicleMode { full6, reduced4 };

// Rows are [linear velocity (m/s); angular velocity (rad/s)] in the global
// frame; columns follow the state-vector layout (10 full, 8 reduced).
struct TotalJacobian {
  Eigen::Matrix<double, 6, Eigen::Dynamic> J;
  VehicleMode mode = VehicleMode::full6;
};

// Partial derivatives of the segment tip pose with respect to (theta, phi),
// expressed in the segment base frame.
struct SegmentJacobian {
  Eigen::Matrix<double, 3, 2> position;  // d(tip position)/d(theta, phi)
  Eigen::Matrix<double, 3, 2> rotation;  // angular-velocity map for (theta_dot, phi_dot)
};

SegmentJacobian segment_jacobian(double theta, double phi, double length);

/// Analytic 6x10 Jacobian mapping state rates to the end-effector twist.
/// Throws GimbalLockError near pitch +-pi/2 (Euler-rate map singular).
TotalJacobian total_jacobian(const RobotState& state, const GeometryParams& geom);

/// Drops the pitch and roll columns (indices 4, 5) for vehicles with
/// position + yaw control only.
TotalJacobian reduce_to_4dof(const TotalJacobian& full);

/// Central-difference Jacobian of forward_kinematics; the angular rows come
/// from the axis-angle of R(+h) R(-h)^T divided by 2h. Verification oracle
/// for total_jacobian.
Eigen::Matrix<double, 6, kStateDim> fd_jacobian(const RobotState& state,
                                                const GeometryParams& geom,
                                                double step = 1e-6);

}  // namespace cuvms
