#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gdrazin/instance_gen.hpp"
#include "gdrazin/json_io.hpp"

namespace gdrazin::cli {

/// Exit codes: 0 success, 1 a check or verification failed, 2 the input
/// was rejected (usage, parse or dimension error).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitInput = 2;

/// Bad command-line usage such as an unknown case id.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandResult {
    io::Json report;
    int exit_code = kExitOk;
    /// Depth passed to io::dump when printing the report.
    int print_depth = 2;
};

/// Throws UsageError listing every valid id.
CaseRef require_case(std::string_view id);

/// {"inverse", "index", "idempotent"} of the square matrix in `path`.
CommandResult cmd_drazin(const std::filesystem::path& path);

/// Evaluates the case's hypotheses on the spec in `path`: a pair {"a","b"},
/// block spec or Schur spec, or a bundle as written by `gen`. Exit 1 when a
/// condition fails.
CommandResult cmd_check(std::string_view case_id, const std::filesystem::path& path);

/// Instances seed, seed+1, ..., seed+count-1 of the case: each is generated,
/// its hypotheses re-checked, the closed-form inverse computed and compared
/// with the core-nilpotent oracle. RunReport:
///   {"command", "cases": [{case, instances, passed, failed, obligations}],
///    "failures": [...], "notes": [...], "ok", "duration_ms"}
/// The report is identical across runs apart from "duration_ms".
CommandResult cmd_verify(std::string_view case_id, std::size_t count, std::uint64_t seed);

/// Instance bundle {"case", "seed", "instance"}; n and m override the
/// default dimensions.
CommandResult cmd_gen(std::string_view case_id, std::uint64_t seed, std::optional<std::size_t> n = std::nullopt,
                      std::optional<std::size_t> m = std::nullopt);

/// Worked-example fixtures, scalar and matrix algebra properties, and a
/// three-instance verify run for every case, as a RunReport. With
/// `fixture_dir` the fixtures are read from rank_one_blocks.json and
/// schur_blocks.json in that directory instead of the embedded copies.
CommandResult cmd_selftest(const std::optional<std::filesystem::path>& fixture_dir = std::nullopt);

}  // namespace gdrazin::cli
