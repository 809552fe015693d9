#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "liftbraid/braid.hpp"
#include "liftbraid/lift.hpp"
#include "liftbraid/monodromy.hpp"
#include "liftbraid/restrict.hpp"

namespace liftbraid::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, invalid_input, inconclusive };
enum class Format { json, text };

struct Report {
  std::string command;
  Status status = Status::ok;
  std::optional<std::size_t> cap;  // inconclusive only
  Json inputs = Json::object();
  Json result;                     // present iff status == ok
  std::string error;
};

/// {"degree": d, "monodromy": [[a, b], ...]}
MonodromySequence parse_covering(std::string_view text);
Json covering_json(const MonodromySequence& s);

/// Whitespace- or comma-separated signed letters, e.g. "2 1 1 -2".
BraidWord parse_braid(std::string_view text, int strands);

/// {"base": j, "word": [...]}
CurveRef parse_curve(const Json& doc, int strands);
IntervalRef parse_interval(const Json& doc, int strands);
/// {"indices": [...], "base": "start" | "end"}
RestrictionSpec parse_restriction(const Json& doc);

/// Flag values, unparsed. Document-valued flags accept inline JSON or a
/// file path.
struct Arguments {
  std::vector<std::string> coverings;
  std::optional<std::string> braid;
  std::optional<int> n;
  std::optional<int> degree;
  std::optional<std::string> omega;
  std::optional<std::size_t> cap;
  std::optional<std::string> base;
  std::optional<std::string> indices;
  std::optional<std::string> restriction;
  std::optional<std::string> curve;
  std::optional<std::string> interval;
  std::optional<std::string> system_a;
  std::optional<std::string> system_b;
  std::optional<std::string> words;
};

const std::vector<std::string>& commands();

/// Runs one command. Never throws for bad input; the status says why.
Report dispatch(const std::string& command, const Arguments& args);

/// One line of JSON or one "key: value" line per field, newline-terminated.
std::string emit(const Report& report, Format format);

int exit_code(const Report& report);

std::string usage();

/// Whole command-line entry point: parses argv, prints the report to out
/// and diagnostics to err, and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liftbraid::cli
