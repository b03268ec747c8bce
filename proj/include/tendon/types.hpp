#pragma once

#include <Eigen/Dense>
#include <vector>

namespace tendon {

/// Joint-space vector (radians or rad/s), length = number of joints.
using JointVector = Eigen::VectorXd;

/// Muscle-space vector (meters, m/s, or newtons), length = number of muscles.
using MuscleVector = Eigen::VectorXd;

/// Muscle Jacobian dl/dtheta, muscles x joints, meters per radian.
using MuscleJacobian = Eigen::MatrixXd;

/// Per-muscle flags: 1 = velocity-constrained and tension-bearing,
/// 0 = managed (inhibited or pre-elongated).
using Mask = std::vector<int>;

enum class Strategy { Basic, Method1, Method2 };

}  // namespace tendon
