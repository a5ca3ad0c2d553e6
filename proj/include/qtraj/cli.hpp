#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace qtraj::cli {

// Exit codes: 0 ok, 2 parse error, 3 domain-validation error, 4 I/O error,
// 5 enumeration budget exceeded.
inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_PARSE = 2;
inline constexpr int EXIT_DOMAIN = 3;
inline constexpr int EXIT_IO = 4;
inline constexpr int EXIT_BUDGET = 5;

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> trajectories;
};

int cmd_run(const std::string& scenario_path, const std::string& out_path,
            const Overrides& ov = {});
int cmd_enumerate(const std::string& scenario_path, const std::string& out_path,
                  const Overrides& ov = {});
int cmd_figure(const std::string& name, const std::string& out_path,
               std::optional<std::uint64_t> seed = {});
int cmd_info(const std::string& scenario_path, const std::string& out_path,
             const Overrides& ov = {});

int run(int argc, const char* const* argv);

}  // namespace qtraj::cli
