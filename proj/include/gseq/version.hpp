#pragma once

namespace gseq {
inline constexpr const char* kToolVersion = "1.0.0";
}
