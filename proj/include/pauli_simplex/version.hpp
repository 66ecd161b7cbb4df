#pragma once

namespace pauli_simplex {
inline constexpr const char* kVersion = "1.0.0";
}
