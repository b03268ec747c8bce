#pragma once

#include "tendon/model.hpp"

namespace tendon {

/// Built-in planar 2-DOF arm (shoulder pitch, elbow pitch) with five muscles:
/// an agonist/antagonist pair per joint plus one biarticular muscle spanning
/// both, routed so that for the bundled swing-down motion the antagonist
/// moment arms dominate the agonist ones. Identical to
/// models/reference_arm.json.
RobotModel reference_arm();

/// Swing-down endpoints used by the bundled scenario and the test fixtures.
JointVector reference_arm_theta_start();
JointVector reference_arm_theta_end();

}  // namespace tendon
