#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coordlab/error.hpp"
#include "coordlab_cli/cli.hpp"

namespace coordlab::cli {

namespace {

void list_corpus(std::ostream& out) {
  out << "functions:\n";
  for (const auto& e : builtin_corpus()) {
    out << "  " << e.fn.label << "  valid_on " << e.fn.valid_on.label() << "  claims {";
    for (std::size_t i = 0; i < e.fn.classes.size(); ++i) {
      out << (i == 0 ? "" : ", ") << e.fn.classes[i].name();
    }
    out << "}  " << e.notes << '\n';
  }
  out << "rectangles:\n";
  for (const auto& nr : named_rect_suite()) {
    out << "  " << nr.name << "  " << nr.rect.label() << '\n';
  }
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  throw InvalidArgument("unknown output format '" + name + "'");
}

bool is_all(const std::vector<std::string>& v) { return v.size() == 1 && v[0] == "all"; }

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  bool failed = false;
  try {
    if (config.command == Command::Compare) {
      write_compare_rows(buffer, build_compare_rows(config), config.output);
    } else {
      const auto rows = build_rows(config);
      for (const auto& r : rows) failed = failed || r.failed;
      write_rows(buffer, rows, config.output, config.command);
    }
  } catch (const InvalidArgument& e) {
    err << "coordlab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DegenerateDomain& e) {
    err << "coordlab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "coordlab: numerical failure: " << e.what() << '\n';
    return kExitConfig;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "coordlab: cannot open '" << *config.out_path << "' for writing\n";
      return kExitConfig;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return failed ? kExitFailure : kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of inequalities for co-ordinated convex functions",
               "coordlab"};
  app.set_config("--config", "", "Read option defaults from a key=value file");

  std::string command;
  std::vector<std::string> corpus;
  std::string corpus_file;
  std::vector<std::string> rects;
  std::vector<std::string> bounds;
  ParamGrid grid;
  Tolerances tol;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::size_t threads = 0;
  std::string set = "improvement-remarks";
  bool list = false;

  app.add_option("command", command,
                 "verify-identities | check-bounds | classify | sweep | compare");
  app.add_flag("--list", list, "List corpus functions and suite rectangles");
  app.add_option("--corpus", corpus, "Corpus labels, comma separated, or 'all'")->delimiter(',');
  app.add_option("--corpus-file", corpus_file, "Manifest file with one corpus label per line");
  app.add_option("--rects", rects, "Suite names or a:b:c:d, comma separated, or 'all'")
      ->delimiter(',');
  app.add_option("--bound", bounds, "Bound ids, comma separated")->delimiter(',');
  app.add_option("--s", grid.s, "Grid of s values")->delimiter(',');
  app.add_option("--p", grid.p, "Grid of Hoelder exponents p")->delimiter(',');
  app.add_option("--q", grid.q, "Grid of power-mean exponents q")->delimiter(',');
  app.add_option("--r1", grid.r1, "Grid of weights r1")->delimiter(',');
  app.add_option("--r2", grid.r2, "Grid of weights r2")->delimiter(',');
  app.add_option("--quad-tol", tol.quad_tol, "Absolute quadrature tolerance");
  app.add_option("--identity-tol", tol.identity_tol, "Identity residual budget");
  app.add_option("--margin-tol", tol.margin_tol, "Allowed bound violation");
  app.add_option("--fd-step", tol.fd_step, "Relative finite-difference step");
  app.add_option("--samples", samples, "Samples per convexity check direction");
  app.add_option("--seed", seed, "Seed of the convexity samplers");
  app.add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  app.add_option("--format", format, "csv | json | table");
  app.add_option("--out", out_path, "Write the report to this path");
  app.add_option("--set", set, "Comparison set of the compare command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  if (list) {
    list_corpus(out);
    return kExitOk;
  }

  RunConfig config;
  try {
    if (command.empty()) throw InvalidArgument("a command is required (see --help)");
    config.command = parse_command(command);
    if (!is_all(corpus)) config.corpus_filter = corpus;
    if (!corpus_file.empty()) {
      std::ifstream manifest(corpus_file);
      if (!manifest) throw InvalidArgument("cannot read manifest '" + corpus_file + "'");
      for (auto& label : read_manifest(manifest)) config.corpus_filter.push_back(label);
    }
    if (!is_all(rects)) {
      for (const auto& r : rects) config.rects.push_back(parse_rect(r));
    }
    config.bounds = bounds;
    config.params = grid;
    config.tolerances = tol;
    config.output = parse_format(format);
    if (!out_path.empty()) config.out_path = out_path;
    config.seed = seed;
    config.samples = samples;
    config.threads = threads;
    config.compare_set = set;
    validate(config);
  } catch (const Error& e) {
    err << "coordlab: " << e.what() << '\n';
    return kExitConfig;
  }
  return run(config, out, err);
}

}  // namespace coordlab::cli
