#pragma once

#include "tendon/model.hpp"
#include "tendon/types.hpp"

namespace tendon {

enum class MuscleRole { Agonist, Antagonist, Neutral };

/// |r| below this counts as neutral; a hard zero test is meaningless after
/// finite differences.
inline constexpr double kClassificationTolerance = 1e-9;

/// r = G * direction / ||direction||_2. Throws std::invalid_argument on a
/// zero direction.
MuscleVector moment_arms(const MuscleJacobian& G, const JointVector& direction);

/// Positive r -> antagonist, negative -> agonist, |r| <= tol -> neutral.
std::vector<MuscleRole> classify(const MuscleVector& r,
                                 double tolerance = kClassificationTolerance);

/// q = r / limits, elementwise. Limits must be strictly positive.
MuscleVector speed_index(const MuscleVector& r, const MuscleVector& limits);

/// q for a start->end motion: moment arms at the midpoint posture with
/// direction (end - start).
MuscleVector speed_index_for_motion(const RobotModel& model,
                                    const JointVector& theta_start,
                                    const JointVector& theta_end,
                                    const MuscleVector& limits);

const char* role_name(MuscleRole role);

}  // namespace tendon
