#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zdglab/verify.hpp"

namespace zdg::cli {

struct Config {
  VerifyOptions verify;
  std::string out_dir;  // empty: reports go to stdout
  ReportFormat format = ReportFormat::Json;
  std::uint64_t fields_max_size = 300;
  std::size_t fields_k_min = 2;
  std::size_t fields_k_max = 5;
  std::uint64_t ideals_max_size = 32;
  std::uint32_t structure_n_max = 200;

  /// Throws Parse for unknown keys and InvalidParameter for non-positive numbers.
  void set(std::string_view key, std::string_view value);
};

/// Applies `key = value` lines; '#' starts a comment.
void load_config(Config& cfg, const std::string& path);
void parse_config(Config& cfg, std::string_view text);

/// Splits on commas outside parentheses: "(0,1),(1,0)" -> {"(0,1)", "(1,0)"}.
std::vector<std::string> split_top_level(std::string_view s);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zdg::cli
