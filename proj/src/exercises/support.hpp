#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tensoralg/core.hpp"
#include "tensoralg/exercises.hpp"
#include "tensoralg/frames.hpp"
#include "tensoralg/metric.hpp"

namespace tensoralg::exercises::detail {

/// Accumulates deviations against limits; any miss fails the check.
struct Tally {
  double deviation = 0.0;
  bool ok = true;

  void within(double dev, double limit);
  void require(bool condition) { ok = ok && condition; }
  Outcome outcome() const;
};

/// |a - b| / max(1, |b|)
double rel(double a, double b);
/// max |a - b| / max(1, max |b|); signatures must match, else infinity.
double rel_diff(const TensorObject& a, const TensorObject& b);

TensorObject random_tensor(Context& ctx, int dim, std::vector<Variance> slots,
                           int weight = 0);
/// Slots [Up, Down], entries in [-1, 1).
TensorObject random_matrix(Context& ctx, int dim);
/// Entries in [-1, 1), resampled until |det| >= 0.1. With `positive`, the
/// first row is negated when needed so that det c > 0.
Frame random_frame(Context& ctx, int dim, bool positive = false);
/// Proper rotation ([Up, Down]) composed of one Givens factor per plane.
TensorObject rotation(Context& ctx, int dim);
/// A^T A + I/2, slots [Down, Down].
Metric random_metric(Context& ctx, int dim);
/// Linearly independent, positively oriented vectors (Up objects).
std::vector<TensorObject> random_basis(Context& ctx, int dim);

/// Unit coordinate vector with a single slot of the given variance.
TensorObject unit(int dim, int r, Variance v);
TensorObject diagonal(const std::vector<double>& d, Variance a, Variance b);

/// Transformation law by brute force: every new component summed over every old
/// index tuple, then scaled by (det γ)^weight.
TensorObject direct_transform(const TensorObject& t, const Frame& f);

Outcome covered(std::string operations);

using Registry = std::vector<Check>;

void register_algebra(Registry& out);
void register_frames(Registry& out);
void register_metric(Registry& out);
void register_minkowski(Registry& out);

}  // namespace tensoralg::exercises::detail
