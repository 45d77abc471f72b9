#include "tensoralg/minkowski.hpp"

#include <cmath>
#include <string>

#include "format.hpp"

namespace tensoralg::minkowski {

namespace {

constexpr std::array<double, 4> kEta = {1.0, -1.0, -1.0, -1.0};

void require_subluminal(double beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw SuperluminalError("superluminal velocity: |beta| = " +
                            detail::format_number(std::abs(beta)) +
                            " must be below 1");
  }
}

}  // namespace

double mink_product(const FourVector& x, const FourVector& y) noexcept {
  return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

bool is_lorentz(const Matrix4& c, double tolerance) noexcept {
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t r = 0; r < 4; ++r) {
      const double lhs = c[0][s] * c[0][r] - c[1][s] * c[1][r] -
                         c[2][s] * c[2][r] - c[3][s] * c[3][r];
      const double expected = s != r ? 0.0 : (s == 0 ? 1.0 : -1.0);
      if (!(std::abs(lhs - expected) <= tolerance)) return false;
    }
  }
  return true;
}

bool preserves_eta(const Matrix4& c, double tolerance) noexcept {
  Matrix4 eta{};
  for (std::size_t k = 0; k < 4; ++k) eta[k][k] = kEta[k];
  Matrix4 ct{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t s = 0; s < 4; ++s) ct[r][s] = c[s][r];
  }
  const Matrix4 product = multiply(multiply(ct, eta), c);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t s = 0; s < 4; ++s) {
      if (!(std::abs(product[r][s] - eta[r][s]) <= tolerance)) return false;
    }
  }
  return true;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) noexcept {
  Matrix4 c{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t s = 0; s < 4; ++s) c[r][s] += a[r][k] * b[k][s];
    }
  }
  return c;
}

LorentzMatrix LorentzMatrix::from_matrix(const Matrix4& c) {
  if (!is_lorentz(c)) {
    throw ConventionError(
        "matrix does not preserve the pseudoscalar product");
  }
  return LorentzMatrix(c);
}

LorentzMatrix LorentzMatrix::identity() noexcept {
  Matrix4 m{};
  for (std::size_t k = 0; k < 4; ++k) m[k][k] = 1.0;
  return LorentzMatrix(m);
}

FourVector LorentzMatrix::apply(const FourVector& x) const noexcept {
  FourVector y{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t s = 0; s < 4; ++s) y[r] += m_[r][s] * x[s];
  }
  return y;
}

LorentzMatrix LorentzMatrix::after(const LorentzMatrix& first) const noexcept {
  return LorentzMatrix(multiply(m_, first.m_));
}

TensorObject LorentzMatrix::to_tensor() const {
  std::vector<double> comps;
  comps.reserve(16);
  for (const auto& row : m_) comps.insert(comps.end(), row.begin(), row.end());
  return TensorObject(4, {Variance::Up, Variance::Down}, 0, std::move(comps));
}

LorentzMatrix boost(double beta) {
  require_subluminal(beta);
  const double g = 1.0 / std::sqrt(1.0 - beta * beta);
  Matrix4 m{};
  m[0][0] = g;
  m[0][1] = -beta * g;
  m[1][0] = -beta * g;
  m[1][1] = g;
  m[2][2] = 1.0;
  m[3][3] = 1.0;
  return LorentzMatrix(m);
}

Rapidity rapidity(double beta) {
  require_subluminal(beta);
  return Rapidity{std::atanh(beta)};
}

LorentzMatrix boost_from_rapidity(Rapidity psi) {
  const double ch = std::cosh(psi.psi);
  const double sh = std::sinh(psi.psi);
  Matrix4 m{};
  m[0][0] = ch;
  m[0][1] = sh;
  m[1][0] = sh;
  m[1][1] = ch;
  m[2][2] = 1.0;
  m[3][3] = 1.0;
  return LorentzMatrix(m);
}

}  // namespace tensoralg::minkowski
