#include "tensoralg/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "indexing.hpp"

namespace tensoralg {

const char* to_string(Variance v) noexcept {
  return v == Variance::Up ? "up" : "down";
}

const char* to_string(Symmetry s) noexcept {
  switch (s) {
    case Symmetry::Symmetric:
      return "symmetric";
    case Symmetry::Antisymmetric:
      return "antisymmetric";
    case Symmetry::Neither:
      break;
  }
  return "neither";
}

const char* to_string(ExpressionError::Kind kind) noexcept {
  using K = ExpressionError::Kind;
  switch (kind) {
    case K::UnboundName: return "unbound-name";
    case K::ArityMismatch: return "arity-mismatch";
    case K::VarianceMismatch: return "variance-mismatch";
    case K::RepeatedIndex: return "repeated-index";
    case K::VarianceClash: return "variance-clash";
    case K::FreeIndexMismatch: return "free-index-mismatch";
    case K::TargetLayout: return "target-layout";
    case K::WeightMismatch: return "weight-mismatch";
    case K::DimensionMismatch: return "dimension-mismatch";
    case K::FixedIndexRange: return "fixed-index-range";
    case K::BindingMismatch: return "binding-mismatch";
  }
  return "unknown";
}

std::size_t component_count(int dim, std::size_t rank) {
  if (dim < 1) {
    throw ShapeError("dimension must be at least 1, got " +
                     std::to_string(dim));
  }
  std::size_t n = 1;
  for (std::size_t k = 0; k < rank; ++k) {
    n *= static_cast<std::size_t>(dim);
    if (n > kMaxComponents) {
      throw ShapeError("dense object of dim " + std::to_string(dim) +
                       " and rank " + std::to_string(rank) +
                       " exceeds the component limit");
    }
  }
  return n;
}

bool next_index(std::span<int> idx, int dim) noexcept {
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] <= dim) return true;
    idx[k] = 1;
  }
  return false;
}

TensorObject::TensorObject(int dim, std::vector<Variance> slots, int weight,
                           std::vector<double> components)
    : dim_(dim),
      slots_(std::move(slots)),
      weight_(weight),
      components_(std::move(components)) {
  const std::size_t expected = component_count(dim_, slots_.size());
  if (components_.size() != expected) {
    throw ShapeError("expected " + std::to_string(expected) +
                     " components for dim " + std::to_string(dim_) +
                     " rank " + std::to_string(slots_.size()) + ", got " +
                     std::to_string(components_.size()));
  }
}

TensorObject TensorObject::zeros(int dim, std::vector<Variance> slots,
                                 int weight) {
  const std::size_t n = component_count(dim, slots.size());
  return TensorObject(dim, std::move(slots), weight,
                      std::vector<double>(n, 0.0));
}

TensorObject TensorObject::scalar(double value, int dim, int weight) {
  return TensorObject(dim, {}, weight, {value});
}

Variance TensorObject::slot(std::size_t position) const {
  if (position >= slots_.size()) {
    throw AddressingError("slot position " + std::to_string(position) +
                          " out of range for rank " +
                          std::to_string(slots_.size()));
  }
  return slots_[position];
}

std::size_t TensorObject::count(Variance v) const noexcept {
  return static_cast<std::size_t>(std::count(slots_.begin(), slots_.end(), v));
}

std::size_t TensorObject::offset(std::span<const int> idx) const {
  if (idx.size() != slots_.size()) {
    throw AddressingError("multi-index of length " +
                          std::to_string(idx.size()) + " for rank " +
                          std::to_string(slots_.size()));
  }
  std::size_t off = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > dim_) {
      throw AddressingError("index value " + std::to_string(idx[k]) +
                            " at slot " + std::to_string(k) +
                            " outside 1.." + std::to_string(dim_));
    }
    off = off * static_cast<std::size_t>(dim_) +
          static_cast<std::size_t>(idx[k] - 1);
  }
  return off;
}

double TensorObject::at(std::span<const int> idx) const {
  return components_[offset(idx)];
}

double TensorObject::value() const {
  if (!slots_.empty()) {
    throw ShapeError("value() requires a rank-0 object, got rank " +
                     std::to_string(slots_.size()));
  }
  return components_.front();
}

TensorObject TensorObject::with_weight(int weight) const {
  TensorObject copy = *this;
  copy.weight_ = weight;
  return copy;
}

TensorObject TensorObject::with_slots(std::vector<Variance> slots) const {
  if (slots.size() != slots_.size()) {
    throw ShapeError("relabelled layout has " + std::to_string(slots.size()) +
                     " slots, object has " + std::to_string(slots_.size()));
  }
  TensorObject copy = *this;
  copy.slots_ = std::move(slots);
  return copy;
}

std::string TensorObject::signature_string() const {
  std::string s = "dim " + std::to_string(dim_) + " slots [";
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (k) s += ",";
    s += to_string(slots_[k]);
  }
  s += "] weight " + std::to_string(weight_);
  return s;
}

namespace {

void require_same_signature(const TensorObject& a, const TensorObject& b,
                            const char* op) {
  if (a.dim() != b.dim()) {
    throw ShapeError(std::string(op) + ": dim mismatch (" +
                     std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()) + ")");
  }
  if (a.slots() != b.slots()) {
    throw ShapeError(std::string(op) + ": slots mismatch (" +
                     a.signature_string() + " vs " + b.signature_string() +
                     ")");
  }
  if (a.weight() != b.weight()) {
    throw ShapeError(std::string(op) + ": weight mismatch (" +
                     std::to_string(a.weight()) + " vs " +
                     std::to_string(b.weight()) + ")");
  }
}

void require_slot(const TensorObject& t, std::size_t position) {
  if (position >= t.rank()) {
    throw AddressingError("slot position " + std::to_string(position) +
                          " out of range for rank " +
                          std::to_string(t.rank()));
  }
}

void require_same_variance(const TensorObject& t, std::size_t i,
                           std::size_t j) {
  require_slot(t, i);
  require_slot(t, j);
  if (t.slots()[i] != t.slots()[j]) {
    throw ConventionError("slots " + std::to_string(i) + " and " +
                          std::to_string(j) +
                          " differ in variance; only indices of the same "
                          "kind may be exchanged");
  }
}

}  // namespace

TensorObject add(const TensorObject& a, const TensorObject& b) {
  require_same_signature(a, b, "add");
  std::vector<double> c(a.size());
  const auto x = a.components();
  const auto y = b.components();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x[k] + y[k];
  return TensorObject(a.dim(), a.slots(), a.weight(), std::move(c));
}

TensorObject subtract(const TensorObject& a, const TensorObject& b) {
  require_same_signature(a, b, "subtract");
  std::vector<double> c(a.size());
  const auto x = a.components();
  const auto y = b.components();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x[k] - y[k];
  return TensorObject(a.dim(), a.slots(), a.weight(), std::move(c));
}

TensorObject scale(const TensorObject& a, double k) {
  std::vector<double> c(a.components().begin(), a.components().end());
  for (double& v : c) v *= k;
  return TensorObject(a.dim(), a.slots(), a.weight(), std::move(c));
}

TensorObject outer_product(const TensorObject& a, const TensorObject& b,
                           Execution exec) {
  if (a.dim() != b.dim()) {
    throw ShapeError("outer_product: dim mismatch (" +
                     std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()) + ")");
  }
  std::vector<Variance> slots = a.slots();
  slots.insert(slots.end(), b.slots().begin(), b.slots().end());
  const std::size_t n = component_count(a.dim(), slots.size());
  std::vector<double> c(n);
  const auto x = a.components();
  const auto y = b.components();
  const std::size_t nb = y.size();
  detail::for_each_cell(n, exec, [&](std::size_t k) {
    c[k] = x[k / nb] * y[k % nb];
  });
  return TensorObject(a.dim(), std::move(slots), a.weight() + b.weight(),
                      std::move(c));
}

TensorObject contract(const TensorObject& t, std::size_t up_slot,
                      std::size_t down_slot, Execution exec) {
  require_slot(t, up_slot);
  require_slot(t, down_slot);
  if (up_slot == down_slot) {
    throw AddressingError("contraction needs two distinct slots");
  }
  if (t.slots()[up_slot] != Variance::Up ||
      t.slots()[down_slot] != Variance::Down) {
    throw ConventionError(
        "contraction pairs one upper and one lower index; slots " +
        std::to_string(up_slot) + " (" + to_string(t.slots()[up_slot]) +
        ") and " + std::to_string(down_slot) + " (" +
        to_string(t.slots()[down_slot]) + ") do not qualify");
  }

  const auto in_strides = detail::strides(t.dim(), t.rank());
  std::vector<Variance> slots;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < t.rank(); ++k) {
    if (k == up_slot || k == down_slot) continue;
    slots.push_back(t.slots()[k]);
    kept.push_back(in_strides[k]);
  }
  const std::size_t diag = in_strides[up_slot] + in_strides[down_slot];
  const std::size_t n = component_count(t.dim(), slots.size());
  const auto src = t.components();
  const int d = t.dim();
  std::vector<double> c(n);
  detail::for_each_cell(n, exec, [&](std::size_t o) {
    const std::size_t base = detail::remap(o, d, kept);
    double sum = 0.0;
    for (int m = 0; m < d; ++m) {
      sum += src[base + static_cast<std::size_t>(m) * diag];
    }
    c[o] = sum;
  });
  return TensorObject(d, std::move(slots), t.weight(), std::move(c));
}

TensorObject swap_slots(const TensorObject& t, std::size_t i, std::size_t j) {
  require_same_variance(t, i, j);
  if (i == j) return t;
  auto target = detail::strides(t.dim(), t.rank());
  std::swap(target[i], target[j]);
  std::vector<double> c(t.size());
  const auto src = t.components();
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[detail::remap(k, t.dim(), target)] = src[k];
  }
  return TensorObject(t.dim(), t.slots(), t.weight(), std::move(c));
}

Symmetry symmetry_check(const TensorObject& t, std::size_t i, std::size_t j,
                        double tolerance) {
  require_same_variance(t, i, j);
  auto target = detail::strides(t.dim(), t.rank());
  std::swap(target[i], target[j]);
  bool symmetric = true;
  bool antisymmetric = true;
  const auto src = t.components();
  for (std::size_t k = 0; k < src.size(); ++k) {
    const double a = src[k];
    const double b = src[detail::remap(k, t.dim(), target)];
    if (std::abs(a - b) > tolerance) symmetric = false;
    if (std::abs(a + b) > tolerance) antisymmetric = false;
    if (!symmetric && !antisymmetric) return Symmetry::Neither;
  }
  return symmetric ? Symmetry::Symmetric : Symmetry::Antisymmetric;
}

TensorObject symmetrize(const TensorObject& t, std::size_t i, std::size_t j) {
  return scale(add(t, swap_slots(t, i, j)), 0.5);
}

double max_abs_difference(const TensorObject& a, const TensorObject& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) {
    throw ShapeError("cannot compare " + a.signature_string() + " with " +
                     b.signature_string());
  }
  double m = 0.0;
  const auto x = a.components();
  const auto y = b.components();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double diff = std::abs(x[k] - y[k]);
    if (std::isnan(diff)) return std::numeric_limits<double>::infinity();
    m = std::max(m, diff);
  }
  return m;
}

double max_abs(const TensorObject& a) noexcept {
  double m = 0.0;
  for (double v : a.components()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace tensoralg
