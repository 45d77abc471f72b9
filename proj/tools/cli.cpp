#include "cli.hpp"

#include <algorithm>
#include <regex>

#include <CLI11.hpp>

#include "tensoralg/errors.hpp"
#include "tensoralg/exercises.hpp"
#include "tensoralg/io.hpp"
#include "tensoralg/minkowski.hpp"

namespace tensoralg::cli {

namespace {

struct Options {
  std::vector<std::string> bindings;
  std::string mode = "strict";
  std::string expression;

  std::string frame, input, old_doc, new_doc;
  std::optional<int> weight;

  std::string metric, basis;
  std::vector<std::string> vectors;

  double beta = 0.0;

  exercises::Settings settings;
  std::string filter;
  bool json = false;
  bool timing = false;
};

Metric load_metric(const Options& o) {
  if (!o.metric.empty()) return io::metric_from_json(io::read_json_file(o.metric));
  const auto basis = io::basis_from_json(io::read_json_file(o.basis));
  return metric_from_basis(basis);
}

std::vector<TensorObject> load_vectors(const Options& o, std::size_t expected) {
  if (o.vectors.size() != expected) {
    throw DocumentError("expected " + std::to_string(expected) + " vector files, got " +
                        std::to_string(o.vectors.size()));
  }
  std::vector<TensorObject> out;
  for (const auto& path : o.vectors) {
    out.push_back(io::tensor_from_json(io::read_json_file(path)));
  }
  return out;
}

TensorObject scalar_doc(double v, int dim) { return TensorObject::scalar(v, dim); }

int cmd_eval(const Options& o, std::ostream& out) {
  einsum::Bindings all;
  for (const auto& path : o.bindings) {
    for (auto& [name, t] : io::bindings_from_json(io::read_json_file(path))) {
      if (all.contains(name)) throw DocumentError("binding '" + name + "' defined twice");
      all.emplace(name, std::move(t));
    }
  }
  const auto mode = o.mode == "orthogonal" ? einsum::IndexMode::Orthogonal
                                           : einsum::IndexMode::Strict;
  out << io::write_tensor(einsum::evaluate(o.expression, all, mode)) << '\n';
  return 0;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const Frame f = io::frame_from_json(io::read_json_file(o.frame));
  TensorObject t = io::tensor_from_json(io::read_json_file(o.input));
  if (o.weight) t = t.with_weight(*o.weight);
  out << io::write_tensor(transform(t, f)) << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Frame f = io::frame_from_json(io::read_json_file(o.frame));
  const TensorObject a = io::tensor_from_json(io::read_json_file(o.old_doc));
  const TensorObject b = io::tensor_from_json(io::read_json_file(o.new_doc));
  const bool ok = verify_transform_law(a, b, f, o.weight.value_or(0));
  out << (ok ? "pass" : "fail") << '\n';
  return ok ? 0 : 1;
}

int cmd_dot(const Options& o, std::ostream& out) {
  const Metric m = load_metric(o);
  const auto v = load_vectors(o, 2);
  const bool covariant = v[0].rank() == 1 && v[0].slot(0) == Variance::Down;
  const double value = covariant ? inner_covariant(v[0], v[1], m) : inner(v[0], v[1], m);
  out << io::write_tensor(scalar_doc(value, m.dim())) << '\n';
  return 0;
}

int cmd_cross(const Options& o, std::ostream& out) {
  const Metric m = load_metric(o);
  const auto v = load_vectors(o, 2);
  out << io::write_tensor(cross(v[0], v[1], m)) << '\n';
  return 0;
}

int cmd_triple(const Options& o, std::ostream& out) {
  const Metric m = load_metric(o);
  const auto v = load_vectors(o, 3);
  out << io::write_tensor(scalar_doc(triple(v[0], v[1], v[2], m), m.dim())) << '\n';
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::function<bool(std::string_view)> select;
  if (!o.filter.empty()) {
    std::regex pattern;
    try {
      pattern = std::regex(o.filter);
    } catch (const std::regex_error& e) {
      throw DocumentError("invalid --filter pattern: " + std::string(e.what()));
    }
    select = [pattern](std::string_view id) {
      return std::regex_search(id.begin(), id.end(), pattern);
    };
  }
  const auto entries = exercises::run(o.settings, select);
  if (entries.empty()) throw DocumentError("--filter matches no check");
  out << (o.json ? exercises::format_json(entries, o.settings, o.timing)
                 : exercises::format_table(entries, o.timing));
  return exercises::all_passed(entries) ? 0 : 1;
}

void add_metric_options(CLI::App* sub, Options& o) {
  auto* metric = sub->add_option("--metric", o.metric, "metric tensor document (slots down,down)");
  auto* basis = sub->add_option("--basis", o.basis, "basis document");
  metric->excludes(basis);
  sub->add_option("vectors", o.vectors, "vector documents")->required();
  sub->callback([sub, &o] {
    if (o.metric.empty() && o.basis.empty()) {
      throw CLI::RequiredError(sub->get_name() + ": one of --metric or --basis");
    }
  });
}

void report(const std::exception& e, std::string_view expression, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (const auto* p = dynamic_cast<const ParseError*>(&e); p && !expression.empty()) {
    err << "  " << expression << '\n'
        << "  " << std::string(std::min(p->position(), expression.size()), ' ') << "^\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Coordinate tensor algebra toolkit", "tensoralg"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate an index expression");
  eval->add_option("--bindings", o.bindings, "tensor binding documents")->required();
  eval->add_option("--mode", o.mode, "index mode")
      ->check(CLI::IsMember({"strict", "orthogonal"}));
  eval->add_option("expression", o.expression, "index expression")->required();

  auto* tr = app.add_subcommand("transform", "transform a tensor to a new frame");
  tr->add_option("--frame", o.frame, "frame document")->required();
  tr->add_option("--input", o.input, "tensor document")->required();
  tr->add_option("--weight", o.weight, "override the document weight");

  auto* verify = app.add_subcommand("verify-law", "check the weighted transformation law");
  verify->add_option("--frame", o.frame, "frame document")->required();
  verify->add_option("--old", o.old_doc, "components in the old frame")->required();
  verify->add_option("--new", o.new_doc, "components in the new frame")->required();
  verify->add_option("--weight", o.weight, "pseudotensor weight")->required();

  auto* dot = app.add_subcommand("dot", "scalar product g_rs x^r y^s");
  add_metric_options(dot, o);
  auto* crs = app.add_subcommand("cross", "cross product (dim 3)");
  add_metric_options(crs, o);
  auto* tri = app.add_subcommand("triple", "mixed product (dim 3)");
  add_metric_options(tri, o);

  auto* bst = app.add_subcommand("boost", "Lorentz boost along x^1");
  bst->add_option("--beta", o.beta, "v/c")->required();
  auto* rap = app.add_subcommand("rapidity", "rapidity artanh(v/c)");
  rap->add_option("--beta", o.beta, "v/c")->required();

  auto* check = app.add_subcommand("check-exercises", "run the built-in verification suite");
  check->add_option("--dim", o.settings.dim, "dimension for generic checks")
      ->check(CLI::Range(2, 6));
  check->add_option("--seed", o.settings.seed, "random seed");
  check->add_option("--tol", o.settings.tolerance, "tolerance")
      ->check(CLI::PositiveNumber);
  check->add_option("--filter", o.filter, "regular expression on check ids");
  check->add_flag("--json", o.json, "machine-readable report");
  check->add_flag("--timing", o.timing, "include elapsed times");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (tr->parsed()) return cmd_transform(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (dot->parsed()) return cmd_dot(o, out);
    if (crs->parsed()) return cmd_cross(o, out);
    if (tri->parsed()) return cmd_triple(o, out);
    if (bst->parsed()) {
      out << io::write_tensor(minkowski::boost(o.beta).to_tensor()) << '\n';
      return 0;
    }
    if (rap->parsed()) {
      out << io::write_tensor(scalar_doc(minkowski::rapidity(o.beta).psi, 4)) << '\n';
      return 0;
    }
    if (check->parsed()) return cmd_check(o, out);
  } catch (const NumericError& e) {
    report(e, o.expression, err);
    return 2;
  } catch (const std::exception& e) {
    report(e, o.expression, err);
    return 1;
  }
  return 1;
}

}  // namespace tensoralg::cli
