#include "tensoralg/einsum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "indexing.hpp"

namespace tensoralg::einsum {

using Kind = ExpressionError::Kind;

Signature signature_of(const TensorObject& t) {
  return Signature{t.dim(), t.slots(), t.weight()};
}

SignatureMap signatures_of(const Bindings& bindings) {
  SignatureMap out;
  for (const auto& [name, t] : bindings) out.emplace(name, signature_of(t));
  return out;
}

double TermPlan::cost() const noexcept {
  double c = 0.0;
  for (const auto& step : schedule) c += step.cost;
  return c;
}

double ContractionPlan::cost() const noexcept {
  double c = 0.0;
  for (const auto& t : terms) c += t.cost();
  return c;
}

double ContractionPlan::naive_cost() const noexcept {
  double c = 0.0;
  for (const auto& t : terms) c += t.naive_cost;
  return c;
}

namespace {

std::string quote(char letter) { return std::string("'") + letter + "'"; }

std::string describe(const FactorRef& f) {
  return "'" + f.name + "' at position " + std::to_string(f.position);
}

bool contains(const std::vector<char>& v, char c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

// Stacked notation: x_1^r and x^r_1 name the same component. When the
// written variances are a reordering of the binding's, the k-th written Up
// index goes to the k-th Up slot and likewise for Down.
void align_to_slots(FactorRef& f, const Signature& sig) {
  if (f.indices.size() != sig.slots.size()) return;
  std::vector<IndexSpec> ups, downs;
  for (const auto& idx : f.indices) {
    (idx.variance == Variance::Up ? ups : downs).push_back(idx);
  }
  const auto up_slots = static_cast<std::size_t>(
      std::count(sig.slots.begin(), sig.slots.end(), Variance::Up));
  if (ups.size() != up_slots) return;
  std::size_t u = 0, d = 0;
  for (std::size_t k = 0; k < sig.slots.size(); ++k) {
    f.indices[k] = sig.slots[k] == Variance::Up ? ups[u++] : downs[d++];
  }
}

double step_cost(int dim, std::size_t letters) {
  return std::pow(static_cast<double>(dim), static_cast<double>(letters));
}

/// Letters of the intermediate formed from `a` and `b`: shared letters are
/// summed (every letter occurs in at most two operands, so a shared letter
/// is a dummy).
PairwiseStep make_step(std::size_t lhs, std::size_t rhs,
                       const std::vector<char>& a, const std::vector<char>& b,
                       int dim) {
  PairwiseStep step;
  step.lhs = lhs;
  step.rhs = rhs;
  for (char c : a) {
    (contains(b, c) ? step.summed : step.kept).push_back(c);
  }
  for (char c : b) {
    if (!contains(a, c)) step.kept.push_back(c);
  }
  step.cost = step_cost(dim, step.kept.size() + step.summed.size());
  return step;
}

std::vector<PairwiseStep> left_to_right(std::vector<std::vector<char>> ops,
                                        int dim) {
  std::vector<PairwiseStep> steps;
  while (ops.size() > 1) {
    auto step = make_step(0, 1, ops[0], ops[1], dim);
    ops[0] = step.kept;
    ops.erase(ops.begin() + 1);
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<PairwiseStep> greedy(std::vector<std::vector<char>> ops, int dim) {
  std::vector<PairwiseStep> steps;
  while (ops.size() > 1) {
    std::optional<PairwiseStep> best;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        auto step = make_step(i, j, ops[i], ops[j], dim);
        if (!best || step.kept.size() < best->kept.size()) {
          best = std::move(step);
        }
      }
    }
    ops[best->lhs] = best->kept;
    ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(best->rhs));
    steps.push_back(std::move(*best));
  }
  return steps;
}

struct LetterUse {
  char letter;
  int count = 0;
  Variance first = Variance::Up;
  Variance second = Variance::Up;
};

}  // namespace

ContractionPlan validate(const Statement& statement,
                         const SignatureMap& signatures, IndexMode mode) {
  const bool strict = mode == IndexMode::Strict;
  ContractionPlan plan;
  plan.statement = statement;
  plan.mode = mode;

  std::optional<int> dim;
  std::optional<int> weight;
  std::vector<std::pair<char, Variance>> free_reference;

  for (const auto& term : statement.terms) {
    TermPlan tp;
    tp.coefficient = term.coefficient;
    tp.factors = term.factors;

    std::vector<LetterUse> uses;
    for (auto& f : tp.factors) {
      const auto it = signatures.find(f.name);
      if (it == signatures.end()) {
        throw ExpressionError(Kind::UnboundName,
                              "no binding for " + describe(f));
      }
      const Signature& sig = it->second;
      plan.signatures[f.name] = sig;
      if (f.indices.size() != sig.slots.size()) {
        throw ExpressionError(
            Kind::ArityMismatch,
            describe(f) + " is written with " +
                std::to_string(f.indices.size()) + " indices but bound to rank " +
                std::to_string(sig.slots.size()));
      }
      if (dim && *dim != sig.dim) {
        throw ExpressionError(Kind::DimensionMismatch,
                              describe(f) + " has dim " +
                                  std::to_string(sig.dim) + ", expected " +
                                  std::to_string(*dim));
      }
      dim = sig.dim;
      tp.weight += sig.weight;
      if (strict) align_to_slots(f, sig);
      for (std::size_t k = 0; k < f.indices.size(); ++k) {
        const auto& idx = f.indices[k];
        if (strict && idx.variance != sig.slots[k]) {
          throw ExpressionError(
              Kind::VarianceMismatch,
              describe(f) + " slot " + std::to_string(k) + " is written " +
                  to_string(idx.variance) + " but the binding has " +
                  to_string(sig.slots[k]));
        }
        if (idx.is_fixed()) {
          if (idx.fixed_value() > sig.dim) {
            throw ExpressionError(Kind::FixedIndexRange,
                                  describe(f) + " pins index value " +
                                      std::to_string(idx.fixed_value()) +
                                      " beyond dim " + std::to_string(sig.dim));
          }
          continue;
        }
        auto u = std::find_if(uses.begin(), uses.end(), [&](const LetterUse& l) {
          return l.letter == idx.symbol;
        });
        if (u == uses.end()) {
          uses.push_back(LetterUse{idx.symbol, 1, idx.variance, idx.variance});
        } else {
          if (++u->count == 2) u->second = idx.variance;
        }
      }
    }

    for (const auto& u : uses) {
      if (u.count >= 3) {
        throw ExpressionError(Kind::RepeatedIndex,
                              "index " + quote(u.letter) + " appears " +
                                  std::to_string(u.count) +
                                  " times in one term");
      }
    }
    for (const auto& u : uses) {
      if (u.count == 2) {
        if (strict && u.first == u.second) {
          throw ExpressionError(
              Kind::VarianceClash,
              "summed index " + quote(u.letter) + " is " + to_string(u.first) +
                  " twice; one must be upper and one lower");
        }
        tp.dummies.push_back(u.letter);
      } else {
        tp.free.push_back(u.letter);
      }
    }

    // Free-letter agreement across terms.
    std::vector<std::pair<char, Variance>> free_here;
    for (const auto& u : uses) {
      if (u.count == 1) free_here.emplace_back(u.letter, u.first);
    }
    auto sorted_here = free_here;
    std::sort(sorted_here.begin(), sorted_here.end());
    if (plan.terms.empty()) {
      free_reference = sorted_here;
    } else {
      bool same = sorted_here.size() == free_reference.size();
      for (std::size_t k = 0; same && k < sorted_here.size(); ++k) {
        same = sorted_here[k].first == free_reference[k].first &&
               (!strict || sorted_here[k].second == free_reference[k].second);
      }
      if (!same) {
        throw ExpressionError(Kind::FreeIndexMismatch,
                              "free indices differ between summed terms");
      }
    }

    if (weight && *weight != tp.weight) {
      throw ExpressionError(Kind::WeightMismatch,
                            "summed terms have weights " +
                                std::to_string(*weight) + " and " +
                                std::to_string(tp.weight));
    }
    weight = tp.weight;

    // Operands: letters of each factor after pinning digits and tracing
    // letters repeated inside the factor.
    std::size_t distinct = 0;
    for (const auto& f : term.factors) {
      std::vector<char> letters;
      std::vector<char> traced;
      for (const auto& idx : f.indices) {
        if (idx.is_fixed()) continue;
        if (contains(letters, idx.symbol)) {
          traced.push_back(idx.symbol);
        } else {
          letters.push_back(idx.symbol);
        }
      }
      std::erase_if(letters, [&](char c) { return contains(traced, c); });
      tp.operand_letters.push_back(std::move(letters));
    }
    distinct = uses.size();
    tp.naive_cost = step_cost(*dim, distinct);
    tp.schedule = left_to_right(tp.operand_letters, *dim);
    plan.terms.push_back(std::move(tp));
  }

  plan.result.dim = *dim;
  plan.result.weight = *weight;

  if (!statement.target) {
    if (!free_reference.empty()) {
      throw ExpressionError(Kind::TargetLayout,
                            "free indices require a target layout "
                            "(write 'name^.._.. = ...')");
    }
    return plan;
  }

  const auto& target = *statement.target;
  std::vector<char> seen;
  for (const auto& idx : target.indices) {
    if (idx.is_fixed()) {
      throw ExpressionError(Kind::TargetLayout,
                            "target layout cannot pin index values");
    }
    if (contains(seen, idx.symbol)) {
      throw ExpressionError(Kind::TargetLayout,
                            "target repeats index " + quote(idx.symbol));
    }
    seen.push_back(idx.symbol);
    const auto it =
        std::find_if(free_reference.begin(), free_reference.end(),
                     [&](const auto& p) { return p.first == idx.symbol; });
    if (it == free_reference.end()) {
      throw ExpressionError(Kind::TargetLayout,
                            "target index " + quote(idx.symbol) +
                                " is not a free index of the expression");
    }
    if (strict && it->second != idx.variance) {
      throw ExpressionError(Kind::VarianceMismatch,
                            "target index " + quote(idx.symbol) + " is " +
                                to_string(idx.variance) +
                                " but the expression has it " +
                                to_string(it->second));
    }
    plan.result.slots.push_back(idx.variance);
    plan.result_letters.push_back(idx.symbol);
  }
  if (seen.size() != free_reference.size()) {
    throw ExpressionError(Kind::TargetLayout,
                          "target layout is not a permutation of the free "
                          "indices");
  }
  return plan;
}

ContractionPlan order_contractions(ContractionPlan plan) {
  for (auto& t : plan.terms) {
    t.schedule = greedy(t.operand_letters, plan.result.dim);
  }
  return plan;
}

// Execution ------------------------------------------------------------------

namespace {

/// Dense array over a list of distinct letters, first letter outermost.
struct Operand {
  std::vector<char> letters;
  std::vector<double> values;
};

std::size_t letter_position(const std::vector<char>& letters, char c) {
  return static_cast<std::size_t>(
      std::find(letters.begin(), letters.end(), c) - letters.begin());
}

/// Pins digit indices and sums letters repeated inside the factor.
Operand load_factor(const TensorObject& t, const FactorRef& f,
                    const std::vector<char>& letters) {
  const int d = t.dim();
  const auto du = static_cast<std::size_t>(d);
  const auto st = detail::strides(d, t.rank());

  // Per kept letter, the sum of strides of the slots it occupies; same for
  // traced letters. Fixed slots contribute a constant offset.
  std::vector<std::size_t> kept_stride(letters.size(), 0);
  std::vector<char> traced;
  std::vector<std::size_t> traced_stride;
  std::size_t fixed_offset = 0;
  for (std::size_t k = 0; k < f.indices.size(); ++k) {
    const auto& idx = f.indices[k];
    if (idx.is_fixed()) {
      fixed_offset += static_cast<std::size_t>(idx.fixed_value() - 1) * st[k];
      continue;
    }
    const std::size_t p = letter_position(letters, idx.symbol);
    if (p < letters.size()) {
      kept_stride[p] += st[k];
      continue;
    }
    const std::size_t q = letter_position(traced, idx.symbol);
    if (q == traced.size()) {
      traced.push_back(idx.symbol);
      traced_stride.push_back(0);
    }
    traced_stride[q] += st[k];
  }

  const std::size_t n = detail::ipow(du, letters.size());
  const std::size_t inner = detail::ipow(du, traced.size());
  const auto src = t.components();
  Operand op{letters, std::vector<double>(n)};
  for (std::size_t cell = 0; cell < n; ++cell) {
    const std::size_t base =
        fixed_offset + detail::remap(cell, d, kept_stride);
    double sum = 0.0;
    for (std::size_t k = 0; k < inner; ++k) {
      sum += src[base + detail::remap(k, d, traced_stride)];
    }
    op.values[cell] = sum;
  }
  return op;
}

Operand contract_pair(const Operand& a, const Operand& b,
                      const PairwiseStep& step, int dim, Execution exec) {
  const auto du = static_cast<std::size_t>(dim);
  const auto sa = detail::strides(dim, a.letters.size());
  const auto sb = detail::strides(dim, b.letters.size());
  auto stride_in = [&](const Operand& op, const std::vector<std::size_t>& s,
                       char c) -> std::size_t {
    const std::size_t p = letter_position(op.letters, c);
    return p < op.letters.size() ? s[p] : 0;
  };

  std::vector<std::size_t> kept_a, kept_b, sum_a, sum_b;
  for (char c : step.kept) {
    kept_a.push_back(stride_in(a, sa, c));
    kept_b.push_back(stride_in(b, sb, c));
  }
  for (char c : step.summed) {
    sum_a.push_back(stride_in(a, sa, c));
    sum_b.push_back(stride_in(b, sb, c));
  }

  const std::size_t n = detail::ipow(du, step.kept.size());
  const std::size_t inner = detail::ipow(du, step.summed.size());
  Operand out{step.kept, std::vector<double>(n)};
  const double* av = a.values.data();
  const double* bv = b.values.data();
  detail::for_each_cell(n, exec, [&](std::size_t cell) {
    const std::size_t base_a = detail::remap(cell, dim, kept_a);
    const std::size_t base_b = detail::remap(cell, dim, kept_b);
    double sum = 0.0;
    for (std::size_t k = 0; k < inner; ++k) {
      sum += av[base_a + detail::remap(k, dim, sum_a)] *
             bv[base_b + detail::remap(k, dim, sum_b)];
    }
    out.values[cell] = sum;
  });
  return out;
}

void check_binding(const ContractionPlan& plan, const Bindings& bindings,
                   const std::string& name) {
  const auto it = bindings.find(name);
  if (it == bindings.end()) {
    throw ExpressionError(Kind::BindingMismatch, "no binding for '" + name + "'");
  }
  const auto& expected = plan.signatures.at(name);
  const auto actual = signature_of(it->second);
  const bool ok = plan.mode == IndexMode::Strict
                      ? actual == expected
                      : actual.dim == expected.dim &&
                            actual.slots.size() == expected.slots.size() &&
                            actual.weight == expected.weight;
  if (!ok) {
    throw ExpressionError(Kind::BindingMismatch,
                          "binding '" + name + "' (" +
                              it->second.signature_string() +
                              ") does not match the validated signature");
  }
}

}  // namespace

TensorObject execute(const ContractionPlan& plan, const Bindings& bindings,
                     Execution exec) {
  const int d = plan.result.dim;
  for (const auto& [name, sig] : plan.signatures) {
    check_binding(plan, bindings, name);
  }

  const std::size_t n =
      component_count(d, plan.result.slots.size());
  std::vector<double> result(n, 0.0);

  for (std::size_t t = 0; t < plan.terms.size(); ++t) {
    const auto& term = plan.terms[t];
    std::vector<Operand> ops;
    ops.reserve(term.factors.size());
    for (std::size_t f = 0; f < term.factors.size(); ++f) {
      const auto& factor = term.factors[f];
      ops.push_back(load_factor(bindings.find(factor.name)->second, factor,
                                term.operand_letters[f]));
    }
    for (const auto& step : term.schedule) {
      ops[step.lhs] = contract_pair(ops[step.lhs], ops[step.rhs], step, d, exec);
      ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(step.rhs));
    }
    const Operand& last = ops.front();

    // Permute into the result layout.
    std::vector<std::size_t> src_stride(plan.result_letters.size());
    const auto ls = detail::strides(d, last.letters.size());
    for (std::size_t k = 0; k < plan.result_letters.size(); ++k) {
      src_stride[k] = ls[letter_position(last.letters, plan.result_letters[k])];
    }
    const double coeff = term.coefficient;
    for (std::size_t cell = 0; cell < n; ++cell) {
      const double v = coeff * last.values[detail::remap(cell, d, src_stride)];
      result[cell] = t == 0 ? v : result[cell] + v;
    }
  }
  return TensorObject(d, plan.result.slots, plan.result.weight,
                      std::move(result));
}

TensorObject evaluate(std::string_view text, const Bindings& bindings,
                      IndexMode mode, Execution exec) {
  auto plan = order_contractions(validate(parse(text), signatures_of(bindings), mode));
  return execute(plan, bindings, exec);
}

}  // namespace tensoralg::einsum
