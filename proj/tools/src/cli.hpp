#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "kirchcert/point.hpp"

namespace kirchcert::cli {

enum class OutputFormat { Text, Json };

// Fully resolved invocation.  Everything that influences the run is captured
// here, so a report plus its echoed parameters reproduces the run exactly.
struct RunConfig {
    std::string command;
    std::optional<std::string> graph_name;  // --graph: builtin name such as K4
    std::optional<std::string> file_path;   // --file: graph file on disk
    std::optional<std::string> poly_text;   // --poly: inline polynomial expression
    std::optional<std::string> point_text;  // --point: comma-separated rationals
    std::optional<std::string> s_text;      // --s: rational parameter
    std::optional<int> r;                   // --r: complete-graph parameter
    std::optional<std::string> mode;        // --mode: command-specific selector
    std::uint64_t seed = 0;                 // --seed (never time-derived)
    int trials = 20;                        // --trials
    OutputFormat format = OutputFormat::Text;  // --format
    std::string sweep_name = "all";         // sweep subcommand: suite selector
    int max_vertices = 5;                   // sweep subcommand: corpus bound
    int points_per_graph = 5;               // sweep subcommand: points per graph
};

// Parses "1,3/7,-2" into an exact rational point.  Tokens must match
// -?\d+(/\d+)?; zero denominators are rejected.  When every coordinate is
// nonnegative, the strictly positive ones are recorded as the cone tag.
RationalPoint parse_point(const std::string& text);

// Executes the configured command, writing the report to `out` and error
// diagnostics to `err`.  Exit code: 0 when every verdict is positive, 1 when
// some verdict is negative, 2 on usage or input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace kirchcert::cli
