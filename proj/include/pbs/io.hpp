#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "pbs/errors.hpp"
#include "pbs/instance.hpp"

namespace pbs {

/// Parse failure with the offending 1-based line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line(line) {}

  std::size_t line;
};

// Instance files (see docs/formats.md):
//
//   pbs-instance 1
//   n_sources 2
//   n_dests 2
//   setup_cost 4
//   edge 0 0 3
//   edge 0 1 5/2
//
// '#' starts a comment; blank lines are ignored.
PbsInstance parse_instance(std::string_view text);
std::string write_instance(const PbsInstance& inst);

struct ScheduleFile {
  Schedule schedule;
  std::optional<Rational> cost;  // trailing "cost" line, if present
};

// Schedule files:
//
//   pbs-schedule 1
//   algorithm posa
//   round 3 0:0 1:1
//   round 2 0:1 1:0
//   cost 13
ScheduleFile parse_schedule(std::string_view text);
std::string write_schedule(const Schedule& sched, const Rational& setup_cost);

/// Whole-file read; throws InputError if the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace pbs
