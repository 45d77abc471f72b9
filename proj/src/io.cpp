#include "tensoralg/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "format.hpp"

namespace tensoralg::io {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw DocumentError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int integer_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) {
    throw DocumentError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

int dim_field(const json& doc) {
  const int dim = integer_field(doc, "dim");
  if (dim < 1) throw DocumentError("\"dim\" must be at least 1");
  return dim;
}

Variance parse_variance(const json& v) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s == "up") return Variance::Up;
    if (s == "down") return Variance::Down;
  }
  throw DocumentError("slot entries must be \"up\" or \"down\", got " + v.dump());
}

void flatten(const json& node, int dim, std::size_t depth, std::size_t rank,
             std::vector<double>& out, const std::string& path) {
  if (depth == rank) {
    if (!node.is_number()) {
      throw DocumentError("expected a number at " + path + ", got " +
                          node.dump() + " (nesting deeper than rank " +
                          std::to_string(rank) + "?)");
    }
    out.push_back(node.get<double>());
    return;
  }
  if (!node.is_array()) {
    throw DocumentError("expected an array at " + path + " (nesting depth " +
                        std::to_string(depth) + " of " + std::to_string(rank) +
                        ")");
  }
  if (node.size() != static_cast<std::size_t>(dim)) {
    throw DocumentError("row " + path + " has " + std::to_string(node.size()) +
                        " entries, expected " + std::to_string(dim));
  }
  for (std::size_t k = 0; k < node.size(); ++k) {
    flatten(node[k], dim, depth + 1, rank, out,
            path + "[" + std::to_string(k) + "]");
  }
}

std::vector<double> matrix_rows(const json& m, int dim, const char* key) {
  std::vector<double> out;
  flatten(m, dim, 0, 2, out, key);
  return out;
}

void write_nested(std::string& out, std::span<const double> comps, int dim,
                  std::size_t depth, std::size_t rank, std::size_t& cursor) {
  if (depth == rank) {
    const double v = comps[cursor++];
    if (!std::isfinite(v)) {
      throw DocumentError("cannot write non-finite component " +
                          detail::format_number(v));
    }
    out += detail::format_number(v, 17);
    return;
  }
  out += '[';
  for (int k = 0; k < dim; ++k) {
    if (k) out += ", ";
    write_nested(out, comps, dim, depth + 1, rank, cursor);
  }
  out += ']';
}

}  // namespace

TensorObject tensor_from_json(const json& doc) {
  const int dim = dim_field(doc);
  const json& slots_node = field(doc, "slots");
  if (!slots_node.is_array()) throw DocumentError("\"slots\" must be an array");
  std::vector<Variance> slots;
  for (const auto& s : slots_node) slots.push_back(parse_variance(s));
  const int weight = doc.contains("weight") ? integer_field(doc, "weight") : 0;
  std::vector<double> comps;
  try {
    comps.reserve(component_count(dim, slots.size()));
  } catch (const ShapeError& e) {
    throw DocumentError(e.what());
  }
  flatten(field(doc, "components"), dim, 0, slots.size(), comps, "components");
  return TensorObject(dim, std::move(slots), weight, std::move(comps));
}

Frame frame_from_json(const json& doc) {
  const int dim = dim_field(doc);
  return frame_from_matrix(TensorObject(dim, {Variance::Up, Variance::Down}, 0,
                                        matrix_rows(field(doc, "c"), dim, "c")));
}

std::vector<TensorObject> basis_from_json(const json& doc) {
  const int dim = dim_field(doc);
  const auto rows = matrix_rows(field(doc, "vectors"), dim, "vectors");
  std::vector<TensorObject> basis;
  const auto n = static_cast<std::size_t>(dim);
  for (std::size_t r = 0; r < n; ++r) {
    basis.emplace_back(dim, std::vector<Variance>{Variance::Up}, 0,
                       std::vector<double>(rows.begin() + static_cast<std::ptrdiff_t>(r * n),
                                           rows.begin() + static_cast<std::ptrdiff_t>((r + 1) * n)));
  }
  return basis;
}

Metric metric_from_json(const json& doc) {
  return Metric::from_tensor(tensor_from_json(doc));
}

einsum::Bindings bindings_from_json(const json& doc) {
  if (!doc.is_object()) throw DocumentError("bindings must be a JSON object");
  einsum::Bindings out;
  if (doc.contains("components")) {
    const json& name = field(doc, "name");
    if (!name.is_string()) throw DocumentError("\"name\" must be a string");
    out.emplace(name.get<std::string>(), tensor_from_json(doc));
    return out;
  }
  for (const auto& [name, tensor] : doc.items()) {
    try {
      out.emplace(name, tensor_from_json(tensor));
    } catch (const DocumentError& e) {
      throw DocumentError("binding '" + name + "': " + e.what());
    }
  }
  return out;
}

std::string write_tensor(const TensorObject& t) {
  std::string out = "{\"dim\": " + std::to_string(t.dim()) + ", \"slots\": [";
  for (std::size_t k = 0; k < t.rank(); ++k) {
    if (k) out += ", ";
    out += '"';
    out += to_string(t.slots()[k]);
    out += '"';
  }
  out += "], \"weight\": " + std::to_string(t.weight()) + ", \"components\": ";
  std::size_t cursor = 0;
  write_nested(out, t.components(), t.dim(), 0, t.rank(), cursor);
  out += '}';
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path.string() + ": " + e.what());
  }
}

}  // namespace tensoralg::io
