#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

#include "coordlab/bounds.hpp"
#include "coordlab/error.hpp"
#include "coordlab/identities.hpp"
#include "coordlab_cli/cli.hpp"

namespace coordlab::cli {

namespace {

constexpr std::array<double, 3> kPointFractions = {0.0, 0.4, 1.0};
constexpr std::array<std::pair<double, double>, 4> kAnchorFractions = {
    {{0.0, 1.0}, {0.25, 0.75}, {0.1, 0.6}, {0.5, 0.9}}};

const std::vector<std::string>& corollary_ids() {
  static const std::vector<std::string> ids = {"weighted-sconvex-r0", "weighted-sconvex-r1",
                                               "weighted-holder-r0",  "weighted-holder-r1",
                                               "weighted-power-r0",   "weighted-power-r1"};
  return ids;
}

bool known_bound(const std::string& id) {
  const auto& a = bound_ids();
  const auto& b = corollary_ids();
  return std::find(a.begin(), a.end(), id) != a.end() ||
         std::find(b.begin(), b.end(), id) != b.end();
}

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

struct Task {
  const CorpusEntry* entry;
  NamedRect rect;
};

ParamGrid effective_grid(const RunConfig& config) {
  ParamGrid g = config.params;
  const ParamGrid d = default_grid(config.command);
  if (g.s.empty()) g.s = d.s;
  if (g.p.empty()) g.p = d.p;
  if (g.q.empty()) g.q = d.q;
  if (g.r1.empty()) g.r1 = d.r1;
  if (g.r2.empty()) g.r2 = d.r2;
  return g;
}

std::vector<Task> select_tasks(const RunConfig& config) {
  std::vector<const CorpusEntry*> entries;
  if (config.corpus_filter.empty()) {
    for (const auto& e : builtin_corpus()) entries.push_back(&e);
  } else {
    for (const auto& label : config.corpus_filter) entries.push_back(&find_entry(label));
  }
  const std::vector<NamedRect>& rects =
      config.rects.empty() ? named_rect_suite() : config.rects;

  std::vector<Task> tasks;
  for (const CorpusEntry* e : entries) {
    for (const auto& nr : rects) {
      if (e->fn.valid_on.contains(nr.rect)) tasks.push_back({e, nr});
    }
  }
  if (tasks.empty()) {
    throw InvalidArgument("no selected rectangle lies inside the domain of a selected function");
  }
  return tasks;
}

// Runs fn(i) for i < n on a pool of threads; results keep index order.
template <class Result>
std::vector<Result> parallel_map(std::size_t n, std::size_t threads,
                                 const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t count = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = std::min(count, std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

Row base_row(const Task& t, std::string check_id) {
  Row r;
  r.function = t.entry->fn.label;
  r.rect = t.rect.name;
  r.check_id = std::move(check_id);
  return r;
}

Row identity_row(const Task& t, std::string id, const IdentityResidual& res,
                 std::optional<WeightPair> w) {
  Row r = base_row(t, std::move(id));
  if (w) {
    r.r1 = w->r1();
    r.r2 = w->r2();
  }
  r.lhs = res.lhs;
  r.rhs = res.rhs;
  r.margin = res.budget - res.residual;
  r.ratio = res.residual / res.budget;
  r.hypothesis_ok = true;
  r.verdict = res.pass ? "pass" : "fail";
  r.failed = !res.pass;
  return r;
}

std::vector<Row> identity_rows(const Task& t, const ParamGrid& g, const Tolerances& tol) {
  std::vector<Row> rows;
  const auto& f = t.entry->fn;
  rows.push_back(identity_row(t, "midpoint-identity",
                              verify_identity(IdentityKind::Midpoint, f, t.rect.rect, {}, tol),
                              std::nullopt));
  for (double r1 : g.r1) {
    for (double r2 : g.r2) {
      const WeightPair w(r1, r2);
      rows.push_back(identity_row(
          t, "weighted-identity",
          verify_identity(IdentityKind::WeightedCorner, f, t.rect.rect, w, tol), w));
    }
  }
  return rows;
}

Row class_row(const Task& t, const ConvexityClass& cls, const ConvexityVerdict& v,
              double margin_tol) {
  Row r = base_row(t, cls.name());
  if (cls.carries_s()) r.s = cls.s();
  r.lhs = v.worst_violation;
  r.rhs = margin_tol;
  r.margin = margin_tol - v.worst_violation;
  r.ratio = v.samples != 0 ? static_cast<double>(v.violations) / static_cast<double>(v.samples)
                           : 0.0;
  r.hypothesis_ok = t.entry->fn.claims(cls);
  r.verdict = v.pass ? "no-violation" : "violated";
  r.failed = r.hypothesis_ok && !v.pass;
  return r;
}

std::vector<Row> classify_rows(const Task& t, const ParamGrid& g, const RunConfig& config) {
  std::vector<Row> rows;
  const auto& f = t.entry->fn;
  const Rectangle& rect = t.rect.rect;
  const double tol = config.tolerances.margin_tol;
  std::vector<ConvexityClass> classes = {ConvexityClass::coord_convex(),
                                         ConvexityClass::joint_convex()};
  for (double s : g.s) {
    if (s == 1.0 || rect.nonnegative()) classes.push_back(ConvexityClass::coord_sconvex(s));
  }
  for (const auto& cls : classes) {
    rows.push_back(class_row(t, cls, check_class(f, rect, cls, config.samples, config.seed, tol),
                             tol));
  }
  return rows;
}

// (suffix of the check id, invocation) pairs for one bound id over the grid.
std::vector<std::pair<std::string, BoundInvocation>> expand(const std::string& id,
                                                            const ParamGrid& g,
                                                            const Rectangle& rect) {
  std::vector<std::pair<std::string, BoundInvocation>> out;
  auto add = [&](BoundParams p, std::string suffix = {}) {
    out.push_back({std::move(suffix), BoundInvocation{id, std::move(p)}});
  };

  if (id == "ostrowski-point") {
    for (double u : kPointFractions) {
      for (double v : kPointFractions) {
        BoundParams p;
        p.x = u == 1.0 ? rect.b() : rect.a() + u * rect.width();
        p.y = v == 1.0 ? rect.d() : rect.c() + v * rect.height();
        add(p, "[" + shortest(u) + ";" + shortest(v) + "]");
      }
    }
    return out;
  }
  if (id == "ostrowski-anchored") {
    for (const auto& [f1, g1] : kAnchorFractions) {
      for (const auto& [f2, g2] : kAnchorFractions) {
        BoundParams p;
        auto at = [](double lo, double hi, double frac) {
          return frac == 1.0 ? hi : lo + frac * (hi - lo);
        };
        p.anchors = OstrowskiAnchors{at(rect.a(), rect.b(), f1), at(rect.a(), rect.b(), g1),
                                     at(rect.c(), rect.d(), f2), at(rect.c(), rect.d(), g2)};
        add(p, "[" + shortest(f1) + ";" + shortest(g1) + ";" + shortest(f2) + ";" +
                   shortest(g2) + "]");
      }
    }
    return out;
  }

  const bool uses_s = starts_with(id, "weighted-");
  const bool uses_p = id == "midpoint-holder" || id == "midpoint-sup-holder" ||
                      id == "trap-holder" || starts_with(id, "weighted-holder");
  const bool uses_q = id == "midpoint-power" || id == "trap-power" ||
                      starts_with(id, "weighted-power");
  const bool uses_r = id == "weighted-sconvex" || id == "weighted-holder" ||
                      id == "weighted-power";

  const std::vector<double> none = {0.0};
  for (double s : uses_s ? g.s : none) {
    for (double p : uses_p ? g.p : none) {
      for (double q : uses_q ? g.q : none) {
        for (double r1 : uses_r ? g.r1 : none) {
          for (double r2 : uses_r ? g.r2 : none) {
            BoundParams bp;
            if (uses_s) bp.s = s;
            if (uses_p) bp.p = p;
            if (uses_q) bp.q = q;
            if (uses_r) {
              bp.r1 = r1;
              bp.r2 = r2;
            }
            add(bp);
          }
        }
      }
    }
  }
  return out;
}

std::vector<Row> bound_rows(const Task& t, const ParamGrid& g, const RunConfig& config,
                            const std::vector<std::string>& ids) {
  GateOptions gate;
  gate.samples = config.samples;
  gate.seed = config.seed;
  const BoundEvaluator eval(t.entry->fn, t.rect.rect, config.tolerances, gate);
  std::vector<Row> rows;
  for (const auto& id : ids) {
    for (const auto& [suffix, inv] : expand(id, g, t.rect.rect)) {
      const InequalityReport rep = evaluate_bound(eval, inv);
      Row r = base_row(t, id + suffix);
      r.s = rep.params.s;
      r.p = rep.params.p;
      r.q = rep.params.q;
      r.r1 = rep.params.r1;
      r.r2 = rep.params.r2;
      r.lhs = rep.lhs;
      r.rhs = rep.rhs;
      r.margin = rep.margin;
      r.ratio = rep.ratio;
      r.hypothesis_ok = rep.hypothesis_ok;
      r.verdict = rep.holds ? "holds" : "violated";
      r.failed = rep.hypothesis_ok && !rep.holds;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::vector<std::string> default_bounds(Command command) {
  std::vector<std::string> ids = bound_ids();
  if (command == Command::Sweep) {
    ids.insert(ids.end(), corollary_ids().begin(), corollary_ids().end());
  }
  return ids;
}

void require_all(const std::vector<double>& v, const char* name, bool (*ok)(double),
                 const char* range) {
  for (double x : v) {
    if (!ok(x)) {
      throw InvalidArgument(std::string(name) + " = " + shortest(x) + " outside " + range);
    }
  }
}

}  // namespace

ParamGrid default_grid(Command command) {
  switch (command) {
    case Command::VerifyIdentities:
      return {{}, {}, {}, {0.0, 0.3, 0.7, 1.0}, {0.0, 0.3, 0.7, 1.0}};
    case Command::CheckBounds:
      return {{1.0}, {2.0}, {2.0}, {1.0}, {1.0}};
    case Command::Classify:
      return {{0.25, 0.5, 0.75, 1.0}, {}, {}, {}, {}};
    case Command::Sweep:
      return {{0.25, 0.5, 0.75, 1.0}, {1.5, 2.0, 3.0}, {1.0, 2.0, 4.0}, {0.0, 0.5, 1.0},
              {0.0, 0.5, 1.0}};
    case Command::Compare:
      return {{1.0}, {1.5, 2.0, 3.0}, {1.0, 2.0, 4.0}, {}, {}};
  }
  return {};
}

Command parse_command(const std::string& name) {
  if (name == "verify-identities") return Command::VerifyIdentities;
  if (name == "check-bounds") return Command::CheckBounds;
  if (name == "classify") return Command::Classify;
  if (name == "sweep") return Command::Sweep;
  if (name == "compare") return Command::Compare;
  throw InvalidArgument("unknown command '" + name + "'");
}

std::string command_name(Command command) {
  switch (command) {
    case Command::VerifyIdentities:
      return "verify-identities";
    case Command::CheckBounds:
      return "check-bounds";
    case Command::Classify:
      return "classify";
    case Command::Sweep:
      return "sweep";
    case Command::Compare:
      return "compare";
  }
  return {};
}

NamedRect parse_rect(const std::string& text) {
  for (const auto& nr : named_rect_suite()) {
    if (nr.name == text) return nr;
  }
  std::array<double, 4> v{};
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto res = std::from_chars(p, end, v[i]);
    if (res.ec != std::errc()) throw InvalidArgument("malformed rectangle '" + text + "'");
    p = res.ptr;
    if (i + 1 < v.size()) {
      if (p == end || *p != ':') throw InvalidArgument("malformed rectangle '" + text + "'");
      ++p;
    }
  }
  if (p != end) throw InvalidArgument("malformed rectangle '" + text + "'");
  Rectangle r(v[0], v[1], v[2], v[3]);
  return {r.label(), r};
}

void validate(const RunConfig& config) {
  config.tolerances.validate();
  if (config.samples == 0) throw InvalidArgument("samples must be positive");
  for (const auto& label : config.corpus_filter) find_entry(label);
  for (const auto& id : config.bounds) {
    if (!known_bound(id)) throw InvalidArgument("unknown bound id '" + id + "'");
  }
  if (config.command == Command::Compare && config.compare_set != "improvement-remarks") {
    throw InvalidArgument("unknown comparison set '" + config.compare_set + "'");
  }
  const ParamGrid g = effective_grid(config);
  require_all(g.s, "s", [](double x) { return x > 0.0 && x <= 1.0; }, "(0,1]");
  require_all(g.p, "p", [](double x) { return x > 1.0 && std::isfinite(x); }, "(1,inf)");
  require_all(g.q, "q", [](double x) { return x >= 1.0 && std::isfinite(x); }, "[1,inf)");
  require_all(g.r1, "r1", [](double x) { return x >= 0.0 && x <= 1.0; }, "[0,1]");
  require_all(g.r2, "r2", [](double x) { return x >= 0.0 && x <= 1.0; }, "[0,1]");
}

std::vector<Row> build_rows(const RunConfig& config) {
  validate(config);
  if (config.command == Command::Compare) {
    throw InvalidArgument("compare produces comparison rows");
  }
  const ParamGrid g = effective_grid(config);
  const std::vector<Task> tasks = select_tasks(config);
  const std::vector<std::string> ids =
      config.bounds.empty() ? default_bounds(config.command) : config.bounds;

  auto per_task = parallel_map<std::vector<Row>>(
      tasks.size(), config.threads, [&](std::size_t i) -> std::vector<Row> {
        const Task& t = tasks[i];
        switch (config.command) {
          case Command::VerifyIdentities:
            return identity_rows(t, g, config.tolerances);
          case Command::Classify:
            return classify_rows(t, g, config);
          case Command::CheckBounds:
          case Command::Sweep:
            return bound_rows(t, g, config, ids);
          case Command::Compare:
            break;
        }
        return {};
      });

  std::vector<Row> rows;
  for (auto& chunk : per_task) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(rows));
  }
  return rows;
}

std::vector<CompareRow> build_compare_rows(const RunConfig& config) {
  validate(config);
  const ParamGrid g = effective_grid(config);
  const std::vector<Task> tasks = select_tasks(config);

  auto per_task = parallel_map<std::vector<CompareRow>>(
      tasks.size(), config.threads, [&](std::size_t i) -> std::vector<CompareRow> {
        const Task& t = tasks[i];
        GateOptions gate;
        gate.samples = config.samples;
        gate.seed = config.seed;
        const BoundEvaluator eval(t.entry->fn, t.rect.rect, config.tolerances, gate);
        std::vector<CompareRow> rows;
        auto add = [&](std::string name, const InequalityReport& fresh,
                       const InequalityReport& reference, BoundParams params) {
          CompareRow r;
          r.function = t.entry->fn.label;
          r.rect = t.rect.name;
          r.comparison = std::move(name);
          r.s = params.s;
          r.p = params.p;
          r.q = params.q;
          r.new_rhs = fresh.rhs;
          r.reference_rhs = reference.rhs;
          if (reference.rhs != 0.0) r.ratio = fresh.rhs / reference.rhs;
          r.printed_rhs = fresh.printed_rhs;
          if (fresh.printed_rhs && reference.rhs != 0.0) {
            r.printed_ratio = *fresh.printed_rhs / reference.rhs;
          }
          rows.push_back(std::move(r));
        };
        for (double s : g.s) {
          BoundParams base;
          base.s = s;
          add("weighted-sconvex-r1/trap-convex",
              eval.corollary(CorollaryParent::WeightedSConvex, 1.0, s),
              eval.trapezoid(TrapezoidVariant::Convex), base);
          for (double p : g.p) {
            BoundParams bp = base;
            bp.p = p;
            add("weighted-holder-r1/trap-holder",
                eval.corollary(CorollaryParent::WeightedHolder, 1.0, s,
                               HolderExponents::from_p(p)),
                eval.trapezoid(TrapezoidVariant::Holder, p), bp);
          }
          for (double q : g.q) {
            BoundParams bp = base;
            bp.q = q;
            add("weighted-power-r1/trap-power",
                eval.corollary(CorollaryParent::WeightedPowerMean, 1.0, s, std::nullopt, q),
                eval.trapezoid(TrapezoidVariant::PowerMean, q), bp);
          }
        }
        return rows;
      });

  std::vector<CompareRow> rows;
  for (auto& chunk : per_task) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(rows));
  }
  return rows;
}

}  // namespace coordlab::cli
