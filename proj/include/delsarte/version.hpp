#pragma once

namespace delsarte {

inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace delsarte
