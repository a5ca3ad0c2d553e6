#pragma once

#include <stdexcept>
#include <string>

namespace qtraj {

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotHermitian : std::invalid_argument {
  explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

struct NotUnitary : std::invalid_argument {
  explicit NotUnitary(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroProbability : std::runtime_error {
  explicit ZeroProbability(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct MixedScenario : std::invalid_argument {
  explicit MixedScenario(const std::string& what) : std::invalid_argument(what) {}
};

// Scenario-file errors carry the offending key so the CLI can name it.
struct ParseError : std::runtime_error {
  std::string key;
  ParseError(const std::string& key_, const std::string& what)
      : std::runtime_error(what), key(key_) {}
};

namespace tol {
// Construction-time checks (exact algebra, closed forms).
inline constexpr double construct = 1e-12;
// Results of iterative or composed numerics (Jacobi sweeps, channel extraction).
inline constexpr double iterative = 1e-10;
// Branch probabilities below this cannot be renormalized.
inline constexpr double zero_probability = 1e-15;
// Kraus operators with eigenvalue weight below this are dropped.
inline constexpr double kraus_rank_cut = 1e-12;
// |beta|^2 within this of {0,1} counts as absorbed (diagnostics only).
inline constexpr double absorption = 1e-3;
}  // namespace tol

}  // namespace qtraj
