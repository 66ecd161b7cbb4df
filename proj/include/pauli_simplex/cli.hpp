#pragma once

// Command-line front end. Exit codes: 0 success, 2 usage or domain error,
// 3 I/O error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pauli_simplex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Command echo, inputs, results, library version and seed of one invocation.
struct OutputRecord {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;

  nlohmann::ordered_json to_json() const;
};

/// JSON number, or the string token "inf", "-inf" or "nan".
nlohmann::ordered_json number(double v);

/// Serializes with 17 significant digits per number, 2-space indent, trailing LF.
std::string dump_json(const nlohmann::ordered_json& j);

/// "key: value" lines, numbers with 9 significant digits.
std::string dump_text(const OutputRecord& record);

/// %.17g, or inf / -inf / nan.
std::string format_number(double v, int digits = 17);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pauli_simplex::cli
