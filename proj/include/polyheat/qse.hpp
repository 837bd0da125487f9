#ifndef POLYHEAT_QSE_HPP
#define POLYHEAT_QSE_HPP

#include <map>
#include <vector>

#include "polyheat/poly.hpp"

namespace polyheat {

// Claim ||g^(l)||_q <= C A^l l^{l beta} for all l >= 0, with 0^0 = 1.
struct QseProfile {
  double beta = 1.0;
  int q = 2;  // norm tag: 1 or infinity (0 stands for infinity)
  double C = 1.0;
  double A = 1.0;

  double bound(int ell) const;
};

// Claim |phi(t)| <= C exp(-a |t|^{1/beta}). The matched moment constant is
// A = (beta/(a e))^beta.
struct DecayProfile {
  double a = 1.0;
  double beta = 1.0;
  double C = 1.0;

  double moment_constant() const;  // (beta/(a e))^beta
};

// E_n(z,s) = sum_{j,k>=1} |A_jk(z)|^n s^{n(j+k)/2} n^{n(j+k)/2}; E_0 = term count.
struct MomentEnvelope {
  int n = 1;
  double s = 1.0;
  double value = 0.0;
};

// inf_{gamma>=0} gamma^{gamma beta}/xi^gamma = exp(-(beta/e) xi^{1/beta})
double nu_continuous(double xi, double beta);

// inf over integers n>=1 of min{1, (n beta/(a e t^{1/beta}))^{n beta}}; search
// window around the continuous minimizer, the constant 1 always a candidate.
double nu_integer(double t, double a, double beta);

struct MomentsToDecayConfig {
  double a_cap = 1e6;
  double growth_factor = 1.25;  // NonconformingMoments trigger, see ledger
};

// Infers the best decay rate a from moment bounds M_n <= C A^n n^{n beta}
// (C taken from M_0). Throws NonconformingMoments when the normalized growth
// rate is still increasing at the largest supplied n.
DecayProfile moments_to_decay(const std::map<int, double>& moments, double beta,
                              const MomentsToDecayConfig& cfg = {});

// C = norm at l=0 (floored), A = max_{l>=1} (norm_l/(C l^{l beta}))^{1/l};
// minimal A for this C by construction.
QseProfile fit_qse(const std::vector<double>& norms, double beta, int q_tag = 0);

MomentEnvelope envelope(const TaylorTable& tbl, int n, double s);

struct EnvelopeChain {
  // upper_ratio = (E'_{n-1}/s^2) / (E_n/(s B_d))
  // lower_ratio = (E_n/(s B_d)) / (E'_{n-1}/(s^2 n^{deg p/2}))
  // where E'_{n-1} keeps the n^{n(j+k)/2} factor of the chain display.
  double upper_ratio = 0.0;
  double lower_ratio = 0.0;
  double mid = 0.0;
};

EnvelopeChain check_envelope_chain(const TaylorTable& tbl, int n, double s);

}  // namespace polyheat

#endif
