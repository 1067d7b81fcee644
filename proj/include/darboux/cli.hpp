#pragma once

#include <optional>
#include <string>

#include "darboux/spec_io.hpp"

namespace darboux {

enum class OutputFormat { human, machine };

struct CliOptions {
  std::string command;
  std::string path;
  std::optional<unsigned long long> seed;
  std::optional<std::string> points;
  std::string filter;
  OutputFormat format = OutputFormat::machine;
};

struct CliResult {
  int exit_code = 0;
  Json report;
};

// Exit codes: 0 success, 1 structural rejection, 2 input error.
CliResult run(const CliOptions& opts);

std::string render(const CliResult& r, OutputFormat format);

}  // namespace darboux
