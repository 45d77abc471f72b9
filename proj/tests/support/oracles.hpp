#pragma once

// Reference implementations used only by tests. Deliberately naive.

#include <random>
#include <string>
#include <vector>

#include "tensoralg/core.hpp"
#include "tensoralg/einsum.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

/// Laplace expansion along the first row.
double cofactor_det(const Matrix& m);
/// Gauss-Jordan with partial pivoting. Throws std::runtime_error if singular.
Matrix gauss_jordan_inverse(Matrix m);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix identity(int n);
double max_diff(const Matrix& a, const Matrix& b);

/// Row r, column s of a rank-2 object (1-based in the object, 0-based here).
Matrix to_matrix(const tensoralg::TensorObject& t);
tensoralg::TensorObject from_matrix(const Matrix& m, tensoralg::Variance row,
                                    tensoralg::Variance col, int weight = 0);

/// Transformation law summed over every old index tuple; c and gamma as plain
/// matrices with c[r][s] = c^r_s.
tensoralg::TensorObject transform_by_sum(const tensoralg::TensorObject& t, const Matrix& c,
                                         const Matrix& gamma, double det_gamma);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(Rng& rng, int n);
/// Random matrix with |det| >= 0.1.
Matrix random_invertible(Rng& rng, int n);
tensoralg::TensorObject random_tensor(Rng& rng, int dim,
                                      std::vector<tensoralg::Variance> slots, int weight = 0);

// Structured index expressions: generated here, rendered to text for the
// engine, and evaluated directly by nested loops for comparison.

struct Index {
  char letter;  // 'a'..'z' or '1'..'9'
  tensoralg::Variance variance;
};

struct Factor {
  std::string name;
  std::vector<Index> indices;
};

struct Term {
  double coefficient = 1.0;
  std::vector<Factor> factors;
};

struct Expression {
  int dim = 3;
  std::vector<Index> target;  // empty: scalar result, no target written
  std::vector<Term> terms;
};

std::string render(const Expression& e);

/// Dimension in [2, 4], up to 3 terms of up to 4 factors, factor rank <= 4,
/// up to 2 free letters, up to 3 dummy pairs per term, at most one pinned
/// index per term. Bindings get slots in written order.
Expression random_expression(Rng& rng, tensoralg::einsum::Bindings& bindings);

/// Brute force: for every assignment of the free letters, sum over every
/// assignment of each term's remaining letters.
tensoralg::TensorObject evaluate(const Expression& e,
                                 const tensoralg::einsum::Bindings& bindings);

/// Renames every dummy letter to a letter not used anywhere in `e`.
Expression rename_dummies(const Expression& e, Rng& rng);

}  // namespace oracle
