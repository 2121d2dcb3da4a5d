#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace defectkit::cli {

enum class OutputFormat { Json, Text };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kOutsideLanguage = 3;
}  // namespace exit_code

struct RunConfig {
  std::optional<std::string> morphism;
  std::optional<std::string> word;
  std::optional<char> seed;
  std::size_t n_max = 16;
  std::size_t horizon = 50000;
  std::size_t growth_window = 5;
  OutputFormat format = OutputFormat::Json;
  std::string suite;
  std::optional<std::size_t> n;
  std::optional<std::size_t> threshold;
  std::size_t sample = 200;
};

/// Throws PreconditionError unless n_max >= 2, horizon >= n_max, G >= 2.
void validate(const RunConfig& config);

struct OutputFile {
  std::string path;  // relative to the output directory
  std::string content;
};

struct CommandResult {
  int exit_code = exit_code::kOk;
  std::string output;
  std::vector<OutputFile> files;
};

CommandResult cmd_defect(const RunConfig& config);
CommandResult cmd_graphs(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_corpus(const RunConfig& config);

/// Suite ids accepted by cmd_verify.
const std::vector<std::string>& suite_ids();

void write_files(const CommandResult& result, const std::filesystem::path& dir);

std::string_view tool_version() noexcept;

}  // namespace defectkit::cli
