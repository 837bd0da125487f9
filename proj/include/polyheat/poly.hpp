#ifndef POLYHEAT_POLY_HPP
#define POLYHEAT_POLY_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "polyheat/errors.hpp"

namespace polyheat {

using cd = std::complex<double>;

// Real-valued polynomial p(z) = sum c_jk z^j zbar^k on C, stored as a dense
// coefficient table. Construction validates real-valuedness (c_jk = conj(c_kj)),
// nonharmonicity (some c_jk != 0 with j,k >= 1) and sampled subharmonicity of
// the Laplacian 4 * sum j k c_jk z^{j-1} zbar^{k-1}.
class SubharmonicPolynomial {
 public:
  struct ValidationConfig {
    double hermitian_tol = 1e-12;
    double laplacian_floor = -1e-9;
    double sample_radius = 4.0;
    int sample_side = 41;
  };

  SubharmonicPolynomial(Eigen::MatrixXcd coeffs, const ValidationConfig& cfg = {});

  static SubharmonicPolynomial from_terms(
      const std::vector<std::tuple<int, int, cd>>& terms, const ValidationConfig& cfg = {});

  const Eigen::MatrixXcd& coeffs() const { return coeffs_; }
  int degree() const { return degree_; }

  double operator()(cd z) const;
  // 4 d^2 p / dz dzbar
  double laplacian(cd z) const;
  cd dz(cd z) const;   // dp/dz
  cd dzb(cd z) const;  // dp/dzbar

 private:
  Eigen::MatrixXcd coeffs_;
  int degree_ = 0;
};

// Taylor coefficients A_jk(z) = (1/j!k!) d^{j+k} p / dz^j dzbar^k of p recentred
// at a base point; Hermitian (A_jk = conj(A_kj)) and reconstructs p exactly.
struct TaylorTable {
  cd center;
  Eigen::MatrixXcd A;
  int degree = 0;

  cd evaluate(cd w) const;  // sum A_jk (w-z)^j conj(w-z)^k
};

struct MetricPoint {
  cd z;
  double t = 0.0;
};

// Exact binomial recentering of the coefficient table.
TaylorTable recenter(const SubharmonicPolynomial& p, cd z);

// T(w,z) = -2 Im sum_{j>=1} (1/j!) d^j p(z)/dz^j (w-z)^j. Derivatives taken at
// the second argument.
double twist(const SubharmonicPolynomial& p, cd z, cd w);
double twist(const TaylorTable& at_z, cd w);

// Lambda(z,delta) = sum_{j,k>=1} |A_jk(z)| delta^{j+k}
double lambda_size(const TaylorTable& tbl, double delta);

// mu(z,delta) = min over nonzero A_jk (j,k>=1) of |delta/A_jk|^{1/(j+k)};
// coefficients below 1e-14 in modulus count as zero. Throws DegenerateTable
// when no index survives.
double mu_size(const TaylorTable& tbl, double delta);

struct ControlDistance {
  double d = 0.0;      // |z-w| + mu(z, dt + T(z,w))   (paper's d display)
  double d_alt = 0.0;  // |z-w| + mu(z, dt + T(w,z))   (the other ordering)
};

ControlDistance control_distance(const SubharmonicPolynomial& p, const MetricPoint& alpha,
                                 const MetricPoint& beta);

// |B_d(z,delta)| = delta^2 Lambda(z,delta)
double ball_volume(const TaylorTable& tbl, double delta);

struct PairVolume {
  double V = 0.0;         // d^2 Lambda(z,d) with d = control_distance().d
  double V_max_form = 0.0;  // max{|z-w|^2 Lambda(z,|w-z|), mu^2 |dt+T(w,z)|}
  double d = 0.0;
};

PairVolume pair_volume(const SubharmonicPolynomial& p, const MetricPoint& alpha,
                       const MetricPoint& beta);

struct ESeries {
  cd value;  // sum_{j>=1} A_{j1}(z) (w-z)^j
  cd dual;   // -sum_{j>=1,k>=0} (k+1) A_{j,k+1}(w) (z-w)^j conj(z-w)^k
};

ESeries e_series(const SubharmonicPolynomial& p, cd z, cd w);

}  // namespace polyheat

#endif
