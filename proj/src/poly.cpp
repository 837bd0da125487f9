#include "polyheat/poly.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace polyheat {

namespace {

constexpr double kCoeffZero = 1e-14;

Eigen::MatrixXd binomial_table(int n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    b(i, 0) = 1.0;
    for (int j = 1; j <= i; ++j) b(i, j) = b(i - 1, j - 1) + (j <= i - 1 ? b(i - 1, j) : 0.0);
  }
  return b;
}

int table_degree(const Eigen::MatrixXcd& c) {
  int deg = 0;
  for (int j = 0; j < c.rows(); ++j)
    for (int k = 0; k < c.cols(); ++k)
      if (std::abs(c(j, k)) > kCoeffZero) deg = std::max(deg, j + k);
  return deg;
}

}  // namespace

SubharmonicPolynomial::SubharmonicPolynomial(Eigen::MatrixXcd coeffs,
                                             const ValidationConfig& cfg)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != coeffs_.cols())
    throw InvalidPolynomial("coefficient table must be square");
  const int n = static_cast<int>(coeffs_.rows());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (std::abs(coeffs_(j, k) - std::conj(coeffs_(k, j))) > cfg.hermitian_tol)
        throw InvalidPolynomial("not real-valued: c_jk != conj(c_kj)");
  // symmetrize to kill roundoff asymmetry
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= j; ++k) {
      cd v = 0.5 * (coeffs_(j, k) + std::conj(coeffs_(k, j)));
      coeffs_(j, k) = v;
      coeffs_(k, j) = std::conj(v);
    }
  degree_ = table_degree(coeffs_);
  if (degree_ > 16) throw InvalidPolynomial("degree > 16 unsupported");

  bool mixed = false;
  for (int j = 1; j < n && !mixed; ++j)
    for (int k = 1; k < n; ++k)
      if (std::abs(coeffs_(j, k)) > kCoeffZero) {
        mixed = true;
        break;
      }
  if (!mixed) throw InvalidPolynomial("harmonic: no c_jk with j,k >= 1");

  const int m = cfg.sample_side;
  for (int ix = 0; ix < m; ++ix)
    for (int iy = 0; iy < m; ++iy) {
      double x = -cfg.sample_radius + 2.0 * cfg.sample_radius * ix / (m - 1);
      double y = -cfg.sample_radius + 2.0 * cfg.sample_radius * iy / (m - 1);
      if (laplacian(cd(x, y)) < cfg.laplacian_floor)
        throw InvalidPolynomial("sampled subharmonicity failed");
    }
}

SubharmonicPolynomial SubharmonicPolynomial::from_terms(
    const std::vector<std::tuple<int, int, cd>>& terms, const ValidationConfig& cfg) {
  int n = 0;
  for (const auto& [j, k, c] : terms) {
    if (j < 0 || k < 0) throw InvalidPolynomial("negative exponent");
    n = std::max({n, j + 1, k + 1});
  }
  Eigen::MatrixXcd table = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [j, k, c] : terms) table(j, k) += c;
  return SubharmonicPolynomial(std::move(table), cfg);
}

double SubharmonicPolynomial::operator()(cd z) const {
  // Horner in zbar per row of z-powers
  cd zb = std::conj(z);
  cd acc = 0;
  cd zj = 1;
  for (int j = 0; j < coeffs_.rows(); ++j) {
    cd row = 0;
    for (int k = static_cast<int>(coeffs_.cols()) - 1; k >= 0; --k) row = row * zb + coeffs_(j, k);
    acc += zj * row;
    zj *= z;
  }
  return acc.real();
}

double SubharmonicPolynomial::laplacian(cd z) const {
  cd zb = std::conj(z);
  cd acc = 0;
  for (int j = 1; j < coeffs_.rows(); ++j)
    for (int k = 1; k < coeffs_.cols(); ++k)
      acc += static_cast<double>(j) * static_cast<double>(k) * coeffs_(j, k) *
             std::pow(z, j - 1) * std::pow(zb, k - 1);
  return 4.0 * acc.real();
}

cd SubharmonicPolynomial::dz(cd z) const {
  cd zb = std::conj(z);
  cd acc = 0;
  for (int j = 1; j < coeffs_.rows(); ++j)
    for (int k = 0; k < coeffs_.cols(); ++k)
      acc += static_cast<double>(j) * coeffs_(j, k) * std::pow(z, j - 1) * std::pow(zb, k);
  return acc;
}

cd SubharmonicPolynomial::dzb(cd z) const { return std::conj(dz(z)); }

cd TaylorTable::evaluate(cd w) const {
  cd dz = w - center;
  cd dzb = std::conj(dz);
  cd acc = 0;
  cd pj = 1;
  for (int j = 0; j < A.rows(); ++j) {
    cd row = 0;
    for (int k = static_cast<int>(A.cols()) - 1; k >= 0; --k) row = row * dzb + A(j, k);
    acc += pj * row;
    pj *= dz;
  }
  return acc;
}

TaylorTable recenter(const SubharmonicPolynomial& p, cd z) {
  const Eigen::MatrixXcd& c = p.coeffs();
  const int n = static_cast<int>(c.rows());
  Eigen::MatrixXd binom = binomial_table(n);
  TaylorTable out;
  out.center = z;
  out.A = Eigen::MatrixXcd::Zero(n, n);
  cd zb = std::conj(z);
  // z^a zbar^b = sum_{j<=a,k<=b} C(a,j) C(b,k) z^{a-j} zbar^{b-k} (w-z)^j conj(w-z)^k
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (std::abs(c(a, b)) == 0.0) continue;
      for (int j = 0; j <= a; ++j)
        for (int k = 0; k <= b; ++k)
          out.A(j, k) += c(a, b) * binom(a, j) * binom(b, k) * std::pow(z, a - j) *
                         std::pow(zb, b - k);
    }
  out.degree = p.degree();
  return out;
}

double twist(const TaylorTable& at_z, cd w) {
  cd dz = w - at_z.center;
  cd acc = 0;
  cd pj = dz;
  for (int j = 1; j < at_z.A.rows(); ++j) {
    acc += at_z.A(j, 0) * pj;
    pj *= dz;
  }
  return -2.0 * acc.imag();
}

double twist(const SubharmonicPolynomial& p, cd z, cd w) { return twist(recenter(p, z), w); }

double lambda_size(const TaylorTable& tbl, double delta) {
  double acc = 0;
  for (int j = 1; j < tbl.A.rows(); ++j)
    for (int k = 1; k < tbl.A.cols(); ++k) {
      double a = std::abs(tbl.A(j, k));
      if (a > kCoeffZero) acc += a * std::pow(delta, j + k);
    }
  return acc;
}

double mu_size(const TaylorTable& tbl, double delta) {
  bool found = false;
  double best = 0;
  for (int j = 1; j < tbl.A.rows(); ++j)
    for (int k = 1; k < tbl.A.cols(); ++k) {
      double a = std::abs(tbl.A(j, k));
      if (a < kCoeffZero) continue;
      double v = std::pow(delta / a, 1.0 / (j + k));
      if (!found || v < best) best = v;
      found = true;
    }
  if (!found) throw DegenerateTable("all A_jk vanish for j,k >= 1");
  return delta == 0.0 ? 0.0 : best;
}

ControlDistance control_distance(const SubharmonicPolynomial& p, const MetricPoint& alpha,
                                 const MetricPoint& beta) {
  TaylorTable at_z = recenter(p, alpha.z);
  TaylorTable at_w = recenter(p, beta.z);
  double dt = alpha.t - beta.t;
  double t_zw = twist(at_w, alpha.z);  // T(z,w): derivatives at w
  double t_wz = twist(at_z, beta.z);   // T(w,z): derivatives at z
  ControlDistance out;
  double sep = std::abs(alpha.z - beta.z);
  out.d = sep + mu_size(at_z, std::abs(dt + t_zw));
  out.d_alt = sep + mu_size(at_z, std::abs(dt + t_wz));
  return out;
}

double ball_volume(const TaylorTable& tbl, double delta) {
  return delta * delta * lambda_size(tbl, delta);
}

PairVolume pair_volume(const SubharmonicPolynomial& p, const MetricPoint& alpha,
                       const MetricPoint& beta) {
  TaylorTable at_z = recenter(p, alpha.z);
  double dt = alpha.t - beta.t;
  double t_wz = twist(at_z, beta.z);
  PairVolume out;
  out.d = control_distance(p, alpha, beta).d;
  out.V = out.d * out.d * lambda_size(at_z, out.d);
  double sep = std::abs(alpha.z - beta.z);
  double arg = std::abs(dt + t_wz);
  double mu = mu_size(at_z, arg);
  out.V_max_form = std::max(sep * sep * lambda_size(at_z, sep), mu * mu * arg);
  return out;
}

ESeries e_series(const SubharmonicPolynomial& p, cd z, cd w) {
  TaylorTable at_z = recenter(p, z);
  TaylorTable at_w = recenter(p, w);
  ESeries out;
  cd dz = w - z;
  cd acc = 0;
  cd pj = dz;
  for (int j = 1; j < at_z.A.rows(); ++j) {
    if (at_z.A.cols() > 1) acc += at_z.A(j, 1) * pj;
    pj *= dz;
  }
  out.value = acc;
  cd dw = z - w;
  cd dwb = std::conj(dw);
  cd dual = 0;
  for (int j = 1; j < at_w.A.rows(); ++j)
    for (int k = 0; k + 1 < at_w.A.cols(); ++k)
      dual += static_cast<double>(k + 1) * at_w.A(j, k + 1) * std::pow(dw, j) * std::pow(dwb, k);
  out.dual = -dual;
  return out;
}

}  // namespace polyheat
