#include "polyheat/qse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polyheat {

namespace {

constexpr double kCoeffZero = 1e-14;

// l^{l beta} with 0^0 = 1, in log space.
double pow_ll_beta(double ell, double beta) {
  if (ell <= 0.0) return 1.0;
  return std::exp(ell * beta * std::log(ell));
}

}  // namespace

double QseProfile::bound(int ell) const {
  return C * std::pow(A, ell) * pow_ll_beta(ell, beta);
}

double DecayProfile::moment_constant() const { return std::pow(beta / (a * M_E), beta); }

double nu_continuous(double xi, double beta) {
  if (xi <= 0.0) return 1.0;
  return std::exp(-(beta / M_E) * std::pow(xi, 1.0 / beta));
}

double nu_integer(double t, double a, double beta) {
  if (t <= 0.0) return 1.0;
  double A = std::pow(beta / (a * M_E), beta);
  double xi = t / A;
  // f(n) = n^{n beta} / xi^n, continuous minimizer gamma0 = xi^{1/beta}/e
  double gamma0 = std::pow(xi, 1.0 / beta) / M_E;
  long lo = std::max(1l, static_cast<long>(std::floor(gamma0)) - 2);
  long hi = static_cast<long>(std::ceil(gamma0)) + 2;
  double log_xi = std::log(xi);
  double best = 0.0;  // log f at candidate 1 handled in loop; value 1 candidate below
  bool first = true;
  for (long n = lo; n <= hi; ++n) {
    double lf = static_cast<double>(n) * beta * std::log(static_cast<double>(n)) -
                static_cast<double>(n) * log_xi;
    if (first || lf < best) best = lf;
    first = false;
  }
  {  // n = 1 always a candidate
    double lf = -log_xi;
    if (first || lf < best) best = lf;
  }
  return std::min(1.0, std::exp(best));
}

DecayProfile moments_to_decay(const std::map<int, double>& moments, double beta,
                              const MomentsToDecayConfig& cfg) {
  DecayProfile out;
  out.beta = beta;
  auto it0 = moments.find(0);
  out.C = std::max(it0 != moments.end() ? it0->second : 1.0, 1e-300);

  // r_n = (M_n/C)^{1/(n beta)} / n; a = (beta/e) / sup r_n
  double sup = 0.0;
  int argmax = 0, last = 0;
  std::map<int, double> rates;
  for (const auto& [n, m] : moments) {
    if (n < 1) continue;
    last = std::max(last, n);
    if (m <= 0.0) continue;
    double r = std::pow(m / out.C, 1.0 / (n * beta)) / n;
    rates[n] = r;
    if (r > sup) {
      sup = r;
      argmax = n;
    }
  }
  if (!rates.empty() && argmax == last && last >= 2) {
    int mid = (last + 1) / 2;
    auto it = rates.lower_bound(mid);
    if (it != rates.end() && it->first < last && sup > cfg.growth_factor * it->second)
      throw NonconformingMoments("growth rate still increasing at largest supplied n");
  }
  if (sup <= 0.0) {
    out.a = cfg.a_cap;
    return out;
  }
  out.a = std::min(beta / (M_E * sup), cfg.a_cap);
  return out;
}

QseProfile fit_qse(const std::vector<double>& norms, double beta, int q_tag) {
  QseProfile out;
  out.beta = beta;
  out.q = q_tag;
  out.C = norms.empty() ? 1e-300 : std::max(norms[0], 1e-300);
  double logA = -std::numeric_limits<double>::infinity();
  for (std::size_t ell = 1; ell < norms.size(); ++ell) {
    if (norms[ell] <= 0.0) continue;
    double l = static_cast<double>(ell);
    double la = (std::log(norms[ell]) - std::log(out.C) - l * beta * std::log(l)) / l;
    logA = std::max(logA, la);
  }
  out.A = std::isfinite(logA) ? std::exp(logA) : 0.0;
  return out;
}

MomentEnvelope envelope(const TaylorTable& tbl, int n, double s) {
  MomentEnvelope out;
  out.n = n;
  out.s = s;
  if (n == 0) {
    double count = 0;
    for (int j = 1; j < tbl.A.rows(); ++j)
      for (int k = 1; k < tbl.A.cols(); ++k)
        if (std::abs(tbl.A(j, k)) > kCoeffZero) count += 1.0;
    out.value = count;
    return out;
  }
  // fixed (j,k) ordering for reproducible sums
  double acc = 0;
  for (int j = 1; j < tbl.A.rows(); ++j)
    for (int k = 1; k < tbl.A.cols(); ++k) {
      double a = std::abs(tbl.A(j, k));
      if (a <= kCoeffZero) continue;
      double half_jk = 0.5 * (j + k);
      acc += std::exp(n * std::log(a) + n * half_jk * std::log(s) +
                      n * half_jk * std::log(static_cast<double>(n)));
    }
  out.value = acc;
  return out;
}

EnvelopeChain check_envelope_chain(const TaylorTable& tbl, int n, double s) {
  EnvelopeChain out;
  // E'_{n-1}: (n-1)-powers of |A| and s, but the chain keeps n^{n(j+k)/2}
  double e_shift = 0;
  int terms = 0;
  for (int j = 1; j < tbl.A.rows(); ++j)
    for (int k = 1; k < tbl.A.cols(); ++k) {
      double a = std::abs(tbl.A(j, k));
      if (a <= kCoeffZero) continue;
      ++terms;
      double half_jk = 0.5 * (j + k);
      e_shift += std::exp((n - 1) * (std::log(a) + half_jk * std::log(s)) +
                          n * half_jk * std::log(static_cast<double>(n)));
    }
  if (terms == 0) throw DegenerateTable("empty envelope");
  double e_n = envelope(tbl, n, s).value;
  double b_d = ball_volume(tbl, std::sqrt(s));
  out.mid = e_n / (s * b_d);
  out.upper_ratio = (e_shift / (s * s)) / out.mid;
  double degp = static_cast<double>(tbl.degree);
  double lower = e_shift / (s * s * std::pow(static_cast<double>(n), 0.5 * degp));
  out.lower_ratio = out.mid / lower;
  return out;
}

}  // namespace polyheat
