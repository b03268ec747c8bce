#pragma once

#include <string>
#include <vector>

#include "tendon/types.hpp"

namespace tendon {

struct Link {
  double length = 0.0;      // meters
  double mass = 0.0;        // kilograms
  double com_offset = 0.0;  // meters along the link axis
};

struct Joint {
  Eigen::Vector3d axis{0, 1, 0};  // unit vector in the parent frame
  double lower = 0.0;             // radians
  double upper = 0.0;
};

struct ViaPoint {
  int link = 0;  // 0 = base, k = link k (distal to joint k-1)
  Eigen::Vector3d offset{0, 0, 0};  // meters, in that link's frame
};

struct MusclePath {
  std::string name;
  std::vector<ViaPoint> via_points;
  double rest_length_offset = 0.0;  // meters added to the segment sum
};

/// Serial-link arm with straight-segment muscle routing.
///
/// Kinematic convention: frame 0 is the base. Joint j rotates frame j+1
/// relative to frame j about `axis` (given in frame j); the origin of frame
/// j+1 sits at the end of link j (at the base for j = 0). Link k's body,
/// COM, and via points live in frame k and extend along local +x.
struct RobotModel {
  std::vector<Link> links;
  std::vector<Joint> joints;
  std::vector<MusclePath> muscles;
  Eigen::Vector3d gravity{0, 0, -9.81};  // m/s^2

  int joint_count() const { return static_cast<int>(joints.size()); }
  int muscle_count() const { return static_cast<int>(muscles.size()); }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

inline constexpr double kJacobianStep = 1e-5;  // radians, central differences

/// World transforms of frames 0..n at the given posture.
std::vector<Eigen::Isometry3d> link_frames(const RobotModel& model,
                                           const JointVector& theta);

/// l = h(theta): straight-segment path lengths plus rest offsets.
/// Throws std::out_of_range if theta violates joint limits.
MuscleVector muscle_lengths(const RobotModel& model, const JointVector& theta);

/// G(theta) by central finite differences with the given step.
/// Requires theta at least `step` inside every joint limit.
MuscleJacobian muscle_jacobian(const RobotModel& model, const JointVector& theta,
                               double step = kJacobianStep);

}  // namespace tendon
