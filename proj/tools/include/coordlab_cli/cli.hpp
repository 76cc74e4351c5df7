#pragma once

// Batch front end: configuration, row generation and report writers.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coordlab/convexity.hpp"
#include "coordlab/corpus.hpp"
#include "coordlab/domain.hpp"

namespace coordlab::cli {

enum class Command { VerifyIdentities, CheckBounds, Classify, Sweep, Compare };
enum class OutputFormat { Csv, Json, Table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

struct ParamGrid {
  std::vector<double> s;
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> r1;
  std::vector<double> r2;
};

struct RunConfig {
  Command command = Command::CheckBounds;
  std::vector<std::string> corpus_filter;  ///< empty selects the whole corpus
  std::vector<NamedRect> rects;            ///< empty selects the whole suite
  std::vector<std::string> bounds;         ///< empty selects the command default
  ParamGrid params;
  Tolerances tolerances;
  OutputFormat output = OutputFormat::Csv;
  std::optional<std::string> out_path;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::size_t threads = 0;  ///< 0 uses the hardware concurrency
  std::string compare_set = "improvement-remarks";
};

/// Grids used by a command when none are given.
ParamGrid default_grid(Command command);

Command parse_command(const std::string& name);
std::string command_name(Command command);

/// A rectangle given as a suite name or as "a:b:c:d".
NamedRect parse_rect(const std::string& text);

/// Throws InvalidArgument when a grid needed by the command is empty, a
/// label or bound id is unknown, or a parameter is out of range.
void validate(const RunConfig& config);

/// One line of the check report.
struct Row {
  std::string function;
  std::string rect;
  std::string check_id;
  std::optional<double> s, p, q, r1, r2;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double ratio = 0.0;
  bool hypothesis_ok = false;
  std::string verdict;
  bool failed = false;  ///< counts toward exit code 1
};

/// One line of the comparison report.
struct CompareRow {
  std::string function;
  std::string rect;
  std::string comparison;
  std::optional<double> s, p, q;
  double new_rhs = 0.0;
  double reference_rhs = 0.0;
  std::optional<double> ratio;  ///< absent when reference_rhs = 0
  std::optional<double> printed_rhs;
  std::optional<double> printed_ratio;
};

/// Rows of verify-identities, check-bounds, classify or sweep, in the order
/// (function, rect, check, parameters) of the configuration. Throws
/// InvalidArgument on an invalid configuration.
std::vector<Row> build_rows(const RunConfig& config);

std::vector<CompareRow> build_compare_rows(const RunConfig& config);

inline constexpr const char* kCsvHeader =
    "function,rect,check_id,s,p,q,r1,r2,lhs,rhs,margin,ratio,hypothesis_ok,verdict";
inline constexpr const char* kCompareCsvHeader =
    "function,rect,comparison,s,p,q,new_rhs,reference_rhs,ratio,printed_rhs,printed_ratio";

void write_rows(std::ostream& out, const std::vector<Row>& rows, OutputFormat format,
                Command command);
void write_compare_rows(std::ostream& out, const std::vector<CompareRow>& rows,
                        OutputFormat format);

/// Executes the configured batch and writes the report to out (or the
/// configured path). Returns 0, 1 or 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coordlab::cli
