#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "support.hpp"

namespace tensoralg::exercises {

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::mt19937_64 generator_for(std::uint64_t seed, std::string_view id) {
  const std::uint64_t h = fnv1a(id);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

std::string deviation_text(const Entry& e) {
  if (e.status == Status::Covered) return "-";
  if (e.deviation == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", e.deviation);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Covered: return "covered-by";
  }
  return "?";
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    detail::Registry out;
    detail::register_algebra(out);
    detail::register_frames(out);
    detail::register_metric(out);
    detail::register_minkowski(out);
    std::sort(out.begin(), out.end(),
              [](const Check& a, const Check& b) { return a.id < b.id; });
    return out;
  }();
  return checks;
}

std::vector<Entry> run(const Settings& settings,
                       const std::function<bool(std::string_view)>& select) {
  std::vector<Entry> entries;
  for (const auto& check : registry()) {
    if (select && !select(check.id)) continue;
    Context ctx{settings.dim, settings.tolerance, generator_for(settings.seed, check.id)};
    Entry e;
    e.id = check.id;
    e.title = check.title;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = check.run(ctx);
      e.status = o.status;
      e.deviation = o.deviation;
      e.covered_by = o.covered_by;
    } catch (const std::exception& ex) {
      e.status = Status::Fail;
      e.deviation = std::nan("");
      e.error = ex.what();
    }
    e.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    entries.push_back(std::move(e));
  }
  return entries;
}

bool all_passed(const std::vector<Entry>& entries) noexcept {
  return std::none_of(entries.begin(), entries.end(),
                      [](const Entry& e) { return e.status == Status::Fail; });
}

std::string format_table(const std::vector<Entry>& entries, bool timing) {
  std::size_t id_width = 2;
  for (const auto& e : entries) id_width = std::max(id_width, e.id.size());
  id_width += 2;

  std::string out = pad("id", id_width) + pad("status", 12) + pad("max-dev", 11);
  if (timing) out += pad("ms", 10);
  out += "check\n";

  std::size_t pass = 0, fail = 0, covered = 0;
  for (const auto& e : entries) {
    out += pad(e.id, id_width) + pad(to_string(e.status), 12) + pad(deviation_text(e), 11);
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", e.elapsed_seconds * 1e3);
      out += pad(buf, 10);
    }
    out += e.title;
    if (e.status == Status::Covered) out += " [" + e.covered_by + "]";
    if (!e.error.empty()) out += " (error: " + e.error + ")";
    out += '\n';
    switch (e.status) {
      case Status::Pass: ++pass; break;
      case Status::Fail: ++fail; break;
      case Status::Covered: ++covered; break;
    }
  }
  out += std::to_string(entries.size()) + " checks: " + std::to_string(pass) + " pass, " +
         std::to_string(fail) + " fail, " + std::to_string(covered) + " covered\n";
  return out;
}

std::string format_json(const std::vector<Entry>& entries, const Settings& settings,
                        bool timing) {
  nlohmann::ordered_json doc;
  doc["dim"] = settings.dim;
  doc["seed"] = settings.seed;
  doc["tolerance"] = settings.tolerance;
  auto& list = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json item;
    item["id"] = e.id;
    item["title"] = e.title;
    item["status"] = to_string(e.status);
    if (e.status == Status::Covered) {
      item["covered_by"] = e.covered_by;
    } else if (std::isfinite(e.deviation)) {
      item["max_deviation"] = e.deviation;
    } else {
      item["max_deviation"] = nullptr;
    }
    if (!e.error.empty()) item["error"] = e.error;
    if (timing) item["elapsed_seconds"] = e.elapsed_seconds;
    list.push_back(std::move(item));
  }
  doc["all_passed"] = all_passed(entries);
  return doc.dump(2) + "\n";
}

}  // namespace tensoralg::exercises
