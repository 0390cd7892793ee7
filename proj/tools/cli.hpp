#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace intervalk::cli {

enum class Command { Certify, Represent, Validate, Oracle, Gen, Selfcheck };
enum class OutputFormat { Text, Json };
enum class GenKind { ChainPlusOne, Random };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNegative = 2;
inline constexpr int kSelfcheckFailed = 3;

struct RunConfig {
    Command command = Command::Certify;
    int k = 1;
    int m = 1;
    int n = 1;
    std::string input_path;
    std::string rep_path;
    OutputFormat output_format = OutputFormat::Text;
    bool decimal = false;
    std::optional<std::string> debug_graph;

    GenKind gen_kind = GenKind::ChainPlusOne;
    int gen_size = 1;
    std::uint64_t seed = 0;
    int orders = 2;

    int max_n = 5;
    int k_max = 3;
    int threads = 1;
};

/// Executes a parsed configuration and returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (honouring INTERVALK_FORMAT as the default output format) and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace intervalk::cli
