#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace galecross::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of every subcommand.
enum ExitCode : int { ok = 0, invariant_failure = 1, input_error = 2 };

struct RunManifest {
  std::string command_line;
  std::uint64_t seed = 0;
  std::string input_hash;  // SHA-256 hex of the input document or of the argument list
  std::string tool_version = kToolVersion;
  std::string timestamp;   // UTC, ISO 8601
  std::vector<std::string> outputs;
};

std::string sha256_hex(std::string_view data);
std::string utc_timestamp();
std::string manifest_to_json(const RunManifest& m);

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Parameters shared by the lemma checks; unused fields are ignored per lemma.
struct VerifyParams {
  int d = 3;
  int m = 6;
  int r = 8;
  int s = 8;
  int trials = 20;
  std::uint64_t seed = 1;
  std::int64_t bound = 1000;
};

/// Per-check CSV table; `all_pass` is false if any row failed.
struct CheckTable {
  std::string header;
  std::vector<std::string> rows;
  bool all_pass = true;

  std::string csv() const;
};

/// Names accepted by `verify --lemma`.
const std::vector<std::string>& lemma_names();

/// Runs the named invariant suite on `trials` seeded instances. Throws InputError for an
/// unknown name or parameters outside the lemma's range.
CheckTable run_lemma_check(const std::string& lemma, const VerifyParams& params);

/// Entry point: `args` excludes the program name. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galecross::cli
