#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace tensoralg::detail {

double det_by_permutation_sign(std::span<const double> m, int d) {
  const auto n = static_cast<std::size_t>(d);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double det = 0.0;
  // perm[col] is the row picked from column col.
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    double term = inversions % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t col = 0; col < n; ++col) {
      term *= m[static_cast<std::size_t>(perm[col]) * n + col];
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

double det_by_elimination(std::span<const double> m, int d) {
  const auto n = static_cast<std::size_t>(d);
  std::vector<double> a(m.begin(), m.end());
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a[pivot * n + c], a[col * n + c]);
      }
      det = -det;
    }
    const double p = a[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / p;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

std::vector<double> lu_inverse(std::span<const double> m, int d) {
  const auto n = static_cast<std::size_t>(d);
  std::vector<double> lu(m.begin(), m.end());
  std::vector<std::size_t> piv(n);
  std::iota(piv.begin(), piv.end(), std::size_t{0});
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu[r * n + col]) > std::abs(lu[pivot * n + col])) {
        pivot = r;
      }
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(lu[pivot * n + c], lu[col * n + c]);
      }
      std::swap(piv[pivot], piv[col]);
    }
    const double p = lu[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      lu[r * n + col] /= p;
      const double f = lu[r * n + col];
      for (std::size_t c = col + 1; c < n; ++c) {
        lu[r * n + c] -= f * lu[col * n + c];
      }
    }
  }

  std::vector<double> inv(n * n, 0.0);
  std::vector<double> y(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Solve L y = P e_col, then U x = y.
    for (std::size_t r = 0; r < n; ++r) {
      double s = piv[r] == col ? 1.0 : 0.0;
      for (std::size_t k = 0; k < r; ++k) s -= lu[r * n + k] * y[k];
      y[r] = s;
    }
    for (std::size_t r = n; r-- > 0;) {
      double s = y[r];
      for (std::size_t k = r + 1; k < n; ++k) s -= lu[r * n + k] * inv[k * n + col];
      inv[r * n + col] = s / lu[r * n + r];
    }
  }
  return inv;
}

std::vector<double> matmul(std::span<const double> a,
                           std::span<const double> b, int d) {
  const auto n = static_cast<std::size_t>(d);
  std::vector<double> c(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const double ark = a[r * n + k];
      for (std::size_t s = 0; s < n; ++s) c[r * n + s] += ark * b[k * n + s];
    }
  }
  return c;
}

bool is_singular(double det, std::span<const double> m, int d) {
  double scale = 0.0;
  for (double v : m) scale = std::max(scale, std::abs(v));
  return !(std::abs(det) > 1e-12 * std::pow(scale, d));
}

}  // namespace tensoralg::detail
