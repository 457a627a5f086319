#pragma once

namespace vtx {

// Bump when any sign/transpose/extraction convention changes meaning of
// emitted numbers.
inline constexpr const char* conventions_version = "1";

}  // namespace vtx
