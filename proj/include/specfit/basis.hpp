#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "specfit/error.hpp"

namespace specfit {

/// Highest derivative order any basis evaluation supports.
inline constexpr int kMaxDerivOrder = 8;

/// Permitted overshoot when a point lands just outside its interval;
/// such points are clamped to the endpoint.
inline constexpr double kIntervalTol = 1e-12;

enum class BasisFamily { Chebyshev, Legendre, CosineOnly, FourierFull };

inline std::string to_string(BasisFamily f) {
  switch (f) {
    case BasisFamily::Chebyshev: return "chebyshev";
    case BasisFamily::Legendre: return "legendre";
    case BasisFamily::CosineOnly: return "cosine";
    case BasisFamily::FourierFull: return "fourier";
  }
  return "?";
}

inline BasisFamily basis_family_from_string(const std::string& s) {
  if (s == "chebyshev") return BasisFamily::Chebyshev;
  if (s == "legendre") return BasisFamily::Legendre;
  if (s == "cosine") return BasisFamily::CosineOnly;
  if (s == "fourier") return BasisFamily::FourierFull;
  throw ConfigError("unknown basis family '" + s + "'");
}

/// Affine map from a physical interval [lo, hi] onto the family's
/// reference interval ([-1,1] for polynomial/cosine families,
/// [0,2pi) for the full Fourier family).
struct AffineMap {
  double lo = -1.0;
  double hi = 1.0;
};

struct BasisSpec1D {
  BasisFamily family = BasisFamily::Chebyshev;
  int n_modes = 1;
  AffineMap map;
};

/// Tensor-product basis over d dimensions. Mode tuples (k_1,...,k_d) are
/// flattened row-major: the last index varies fastest.
struct TensorBasisSpec {
  std::vector<BasisSpec1D> dims;

  int ndim() const { return static_cast<int>(dims.size()); }

  int total_modes() const {
    int t = 1;
    for (const auto& d : dims) t *= d.n_modes;
    return t;
  }
};

using MultiIndex = std::vector<int>;

inline int multi_index_order(const MultiIndex& j) {
  int s = 0;
  for (int v : j) s += v;
  return s;
}

namespace detail {

inline double clamp_to_interval(double x, const AffineMap& m) {
  if (!std::isfinite(x)) throw DomainError("basis evaluation at non-finite coordinate");
  if (m.lo >= m.hi) throw ConfigError("affine map requires lo < hi");
  if (x < m.lo) {
    if (m.lo - x > kIntervalTol)
      throw DomainError("coordinate " + std::to_string(x) + " below interval [" +
                        std::to_string(m.lo) + ", " + std::to_string(m.hi) + "]");
    return m.lo;
  }
  if (x > m.hi) {
    if (x - m.hi > kIntervalTol)
      throw DomainError("coordinate " + std::to_string(x) + " above interval [" +
                        std::to_string(m.lo) + ", " + std::to_string(m.hi) + "]");
    return m.hi;
  }
  return x;
}

// Three-term recurrences differentiated `order` times, carried as
// order+1 parallel sequences in the reference variable.
inline void eval_chebyshev(int n_modes, double xi, int order, double scale_pow, double* out) {
  const int no = order + 1;
  // prev2 = T_{k-1}^{(m)}, prev1 = T_k^{(m)} for m = 0..order
  double prev2[kMaxDerivOrder + 1] = {0};
  double prev1[kMaxDerivOrder + 1] = {0};
  double cur[kMaxDerivOrder + 1] = {0};
  prev2[0] = 1.0;  // T_0
  out[0] = (order == 0 ? 1.0 : 0.0) * scale_pow;
  if (n_modes == 1) return;
  prev1[0] = xi;  // T_1
  if (order >= 1) prev1[1] = 1.0;
  out[1] = prev1[order] * scale_pow;
  for (int k = 2; k < n_modes; ++k) {
    for (int m = 0; m < no; ++m) {
      double t = 2.0 * xi * prev1[m] - prev2[m];
      if (m > 0) t += 2.0 * m * prev1[m - 1];
      cur[m] = t;
    }
    out[k] = cur[order] * scale_pow;
    for (int m = 0; m < no; ++m) {
      prev2[m] = prev1[m];
      prev1[m] = cur[m];
    }
  }
}

inline void eval_legendre(int n_modes, double xi, int order, double scale_pow, double* out) {
  const int no = order + 1;
  double prev2[kMaxDerivOrder + 1] = {0};
  double prev1[kMaxDerivOrder + 1] = {0};
  double cur[kMaxDerivOrder + 1] = {0};
  prev2[0] = 1.0;  // P_0
  out[0] = (order == 0 ? 1.0 : 0.0) * scale_pow;
  if (n_modes == 1) return;
  prev1[0] = xi;  // P_1
  if (order >= 1) prev1[1] = 1.0;
  out[1] = prev1[order] * scale_pow;
  for (int k = 2; k < n_modes; ++k) {
    const double a = (2.0 * k - 1.0) / k;
    const double b = (k - 1.0) / k;
    for (int m = 0; m < no; ++m) {
      double t = a * xi * prev1[m] - b * prev2[m];
      if (m > 0) t += a * m * prev1[m - 1];
      cur[m] = t;
    }
    out[k] = cur[order] * scale_pow;
    for (int m = 0; m < no; ++m) {
      prev2[m] = prev1[m];
      prev1[m] = cur[m];
    }
  }
}

inline void eval_cosine(int n_modes, double xi, int order, double scale_pow, double* out) {
  const double shift = 0.5 * std::numbers::pi * order;
  for (int k = 0; k < n_modes; ++k) {
    const double w = k * std::numbers::pi;
    out[k] = std::pow(w, order) * std::cos(w * xi + shift) * scale_pow;
  }
  if (order > 0) out[0] = 0.0;
}

// Mode ordering {1, cos t, sin t, cos 2t, sin 2t, ...}.
inline void eval_fourier(int n_modes, double xi, int order, double scale_pow, double* out) {
  const double shift = 0.5 * std::numbers::pi * order;
  out[0] = (order == 0 ? 1.0 : 0.0);
  for (int k = 1; k < n_modes; ++k) {
    const int j = (k + 1) / 2;
    const double w = static_cast<double>(j);
    const double arg = w * xi + shift;
    const double v = (k % 2 == 1) ? std::cos(arg) : std::sin(arg);
    out[k] = std::pow(w, order) * v * scale_pow;
  }
}

}  // namespace detail

/// Evaluates all modes of a 1D basis (or their order-th derivative with
/// respect to the physical coordinate) at a physical coordinate x.
inline void eval_basis_1d(const BasisSpec1D& spec, double x, int order, double* out) {
  if (order < 0 || order > kMaxDerivOrder)
    throw UnsupportedOrderError("derivative order " + std::to_string(order) +
                                " outside supported range [0, 8]");
  if (spec.n_modes < 1) throw ConfigError("n_modes must be >= 1");
  const double xc = detail::clamp_to_interval(x, spec.map);
  const double width = spec.map.hi - spec.map.lo;
  if (spec.family == BasisFamily::FourierFull) {
    const double scale = 2.0 * std::numbers::pi / width;
    const double xi = scale * (xc - spec.map.lo);
    detail::eval_fourier(spec.n_modes, xi, order, std::pow(scale, order), out);
    return;
  }
  const double scale = 2.0 / width;
  const double xi = scale * (xc - spec.map.lo) - 1.0;
  const double scale_pow = std::pow(scale, order);
  switch (spec.family) {
    case BasisFamily::Chebyshev:
      detail::eval_chebyshev(spec.n_modes, xi, order, scale_pow, out);
      break;
    case BasisFamily::Legendre:
      detail::eval_legendre(spec.n_modes, xi, order, scale_pow, out);
      break;
    case BasisFamily::CosineOnly:
      detail::eval_cosine(spec.n_modes, xi, order, scale_pow, out);
      break;
    default:
      break;
  }
}

inline Eigen::VectorXd eval_basis_1d(const BasisSpec1D& spec, double x, int order) {
  Eigen::VectorXd v(spec.n_modes);
  eval_basis_1d(spec, x, order, v.data());
  return v;
}

/// Dense design matrix: row p holds the tensor-product basis derivative
/// prod_i phi_{i,k_i}^{(j_i)}(x_{p,i}) for every flattened mode tuple.
/// Intended for tests and small mode counts; the residual engine works
/// from the per-dimension factors instead.
inline Eigen::MatrixXd design_matrix(const TensorBasisSpec& spec,
                                     const Eigen::MatrixXd& points,
                                     const MultiIndex& deriv) {
  const int d = spec.ndim();
  if (static_cast<int>(deriv.size()) != d)
    throw ShapeError("derivative multi-index length does not match basis dimension");
  if (multi_index_order(deriv) > kMaxDerivOrder)
    throw UnsupportedOrderError("total derivative order exceeds 8");
  if (points.cols() != d)
    throw ShapeError("points must have one column per basis dimension");

  const int n = static_cast<int>(points.rows());
  const int total = spec.total_modes();
  Eigen::MatrixXd out(n, total);
  std::vector<Eigen::VectorXd> factors(d);
  for (int p = 0; p < n; ++p) {
    for (int i = 0; i < d; ++i)
      factors[i] = eval_basis_1d(spec.dims[i], points(p, i), deriv[i]);
    // Row-major flattening: last dimension fastest.
    int flat = 0;
    MultiIndex k(d, 0);
    while (true) {
      double v = 1.0;
      for (int i = 0; i < d; ++i) v *= factors[i][k[i]];
      out(p, flat++) = v;
      int i = d - 1;
      while (i >= 0 && ++k[i] == spec.dims[i].n_modes) k[i--] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

}  // namespace specfit
