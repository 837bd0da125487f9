#ifndef POLYHEAT_QUADRATURE_HPP
#define POLYHEAT_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace polyheat {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1,1] by Newton on Legendre roots.
inline QuadRule gauss_legendre(int n) {
  QuadRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

inline double integrate_gl(const std::function<double(double)>& f, double a, double b,
                           const QuadRule& rule) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

// tanh-sinh rule on (0,1); robust to algebraic endpoint singularities.
// Nodes come in (x, 1-x ~ via symmetric pair) form; we store both abscissa and
// the distance to the nearer endpoint is implicit in x itself.
inline QuadRule tanh_sinh(double h = 0.08, int max_k = 90) {
  QuadRule r;
  for (int k = -max_k; k <= max_k; ++k) {
    double t = h * k;
    double u = M_PI_2 * std::sinh(t);
    double x = 0.5 * (1.0 + std::tanh(u));
    double w = h * M_PI_2 * std::cosh(t) / (std::cosh(u) * std::cosh(u)) * 0.5;
    if (x <= 0.0 || x >= 1.0 || w < 1e-300) continue;
    r.nodes.push_back(x);
    r.weights.push_back(w);
  }
  return r;
}

inline double integrate_ts01(const std::function<double(double)>& f, const QuadRule& rule) {
  double acc = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

// Adaptive Simpson for smooth integrands (cross-checks, small utilities).
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, int depth = 24) {
  struct Impl {
    const std::function<double(double)>& f;
    double run(double a, double b, double fa, double fm, double fb, double whole, double tol,
               int depth) {
      double m = 0.5 * (a + b);
      double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      double flm = f(lm), frm = f(rm);
      double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
      return run(a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
             run(m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
    }
  } impl{f};
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return impl.run(a, b, fa, fm, fb, whole, tol, depth);
}

}  // namespace polyheat

#endif
