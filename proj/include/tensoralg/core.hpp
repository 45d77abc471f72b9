#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tensoralg/errors.hpp"
#include "tensoralg/execution.hpp"

namespace tensoralg {

/// Position of an index: Up is contravariant (x^r), Down is covariant (x_r).
enum class Variance : std::uint8_t { Up, Down };

const char* to_string(Variance v) noexcept;

/// 1-based index tuple, one entry per slot.
using MultiIndex = std::vector<int>;

/// Largest number of components a dense object may hold.
inline constexpr std::size_t kMaxComponents = 10'000'000;

/// Dense multi-component object over dimension `dim`.
///
/// Components are stored lexicographically by multi-index with slot 0
/// outermost. Index values exposed to callers are 1-based. The slot layout
/// is fixed at construction and every operation documents how it maps
/// slots. `weight` is the pseudotensor weight (0 for true tensors).
class TensorObject {
 public:
  TensorObject(int dim, std::vector<Variance> slots, int weight,
               std::vector<double> components);

  static TensorObject zeros(int dim, std::vector<Variance> slots,
                            int weight = 0);
  static TensorObject scalar(double value, int dim = 3, int weight = 0);

  /// Builds an object by evaluating `f(idx)` at every 1-based multi-index.
  template <typename F>
  static TensorObject generate(int dim, std::vector<Variance> slots,
                               int weight, F&& f);

  int dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return slots_.size(); }
  const std::vector<Variance>& slots() const noexcept { return slots_; }
  Variance slot(std::size_t position) const;
  int weight() const noexcept { return weight_; }
  std::span<const double> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }

  /// Number of slots with the given variance. Rank (m, n) is
  /// (count(Down), count(Up)).
  std::size_t count(Variance v) const noexcept;

  /// Checked component access with a 1-based multi-index.
  double at(std::span<const int> idx) const;
  double operator()(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  /// The single component of a rank-0 object.
  double value() const;

  /// Storage offset of a 1-based multi-index.
  std::size_t offset(std::span<const int> idx) const;

  TensorObject with_weight(int weight) const;
  /// Same components under a different slot layout of equal length.
  TensorObject with_slots(std::vector<Variance> slots) const;

  bool same_signature(const TensorObject& other) const noexcept {
    return dim_ == other.dim_ && slots_ == other.slots_ &&
           weight_ == other.weight_;
  }

  std::string signature_string() const;

  friend bool operator==(const TensorObject&, const TensorObject&) = default;

 private:
  int dim_;
  std::vector<Variance> slots_;
  int weight_;
  std::vector<double> components_;
};

/// dim^rank, throwing ShapeError when it exceeds kMaxComponents.
std::size_t component_count(int dim, std::size_t rank);

/// Advances a 1-based multi-index in lexicographic order (last slot
/// fastest). Returns false after the last index.
bool next_index(std::span<int> idx, int dim) noexcept;

template <typename F>
TensorObject TensorObject::generate(int dim, std::vector<Variance> slots,
                                    int weight, F&& f) {
  const std::size_t n = component_count(dim, slots.size());
  std::vector<double> comps;
  comps.reserve(n);
  MultiIndex idx(slots.size(), 1);
  do {
    comps.push_back(static_cast<double>(f(static_cast<const MultiIndex&>(idx))));
  } while (next_index(idx, dim));
  return TensorObject(dim, std::move(slots), weight, std::move(comps));
}

// Basic operations ----------------------------------------------------------

/// Componentwise sum; dim, slots and weight must agree.
TensorObject add(const TensorObject& a, const TensorObject& b);
TensorObject subtract(const TensorObject& a, const TensorObject& b);
TensorObject scale(const TensorObject& a, double k);

/// Slots of `a` followed by slots of `b`; weights add.
TensorObject outer_product(const TensorObject& a, const TensorObject& b,
                           Execution exec = Execution::Parallel);

/// Sums over a paired Up/Down slot and drops both; remaining slot order is
/// preserved and the weight is unchanged.
TensorObject contract(const TensorObject& t, std::size_t up_slot,
                      std::size_t down_slot,
                      Execution exec = Execution::Parallel);

/// Exchanges two slots of equal variance.
TensorObject swap_slots(const TensorObject& t, std::size_t i, std::size_t j);

enum class Symmetry { Symmetric, Antisymmetric, Neither };

const char* to_string(Symmetry s) noexcept;

inline constexpr double kSymmetryTolerance = 1e-12;

/// Classifies `t` under exchange of slots i and j. A zero object is
/// reported as Symmetric.
Symmetry symmetry_check(const TensorObject& t, std::size_t i, std::size_t j,
                        double tolerance = kSymmetryTolerance);

/// (t + swap_slots(t, i, j)) / 2
TensorObject symmetrize(const TensorObject& t, std::size_t i, std::size_t j);

/// max |a_k - b_k|; signatures must agree in dim and rank.
double max_abs_difference(const TensorObject& a, const TensorObject& b);

/// max |a_k|
double max_abs(const TensorObject& a) noexcept;

}  // namespace tensoralg
