#pragma once

// Built-in verification suite: one check per exercise or equation tag.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace tensoralg::exercises {

struct Settings {
  int dim = 3;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

enum class Status { Pass, Fail, Covered };

const char* to_string(Status s) noexcept;

struct Outcome {
  Status status = Status::Pass;
  /// Largest deviation observed against the check's reference.
  double deviation = 0.0;
  /// For Status::Covered: the operations the exercise is realized by.
  std::string covered_by;
};

struct Context {
  /// Dimension for dimension-generic checks; symbol and cross-product
  /// checks stay at 3, Minkowski checks at 4.
  int dim = 3;
  double tolerance = 1e-9;
  std::mt19937_64 rng;

  /// Uniform in [lo, hi), from the raw 64-bit stream.
  double uniform(double lo = -1.0, double hi = 1.0);
};

struct Check {
  std::string id;
  std::string title;
  std::function<Outcome(Context&)> run;
};

/// Sorted by id; ids are unique.
const std::vector<Check>& registry();

struct Entry {
  std::string id;
  std::string title;
  Status status = Status::Pass;
  double deviation = 0.0;
  std::string covered_by;
  /// Exception text when a check throws (reported as a failure).
  std::string error;
  double elapsed_seconds = 0.0;
};

/// Each check draws from its own generator seeded by (seed, id), so the
/// outcome of one check does not depend on which others run.
std::vector<Entry> run(const Settings& settings,
                       const std::function<bool(std::string_view)>& select = {});

bool all_passed(const std::vector<Entry>& entries) noexcept;

/// Aligned text table plus a summary line. Elapsed times only if `timing`.
std::string format_table(const std::vector<Entry>& entries, bool timing);
std::string format_json(const std::vector<Entry>& entries,
                        const Settings& settings, bool timing);

}  // namespace tensoralg::exercises
