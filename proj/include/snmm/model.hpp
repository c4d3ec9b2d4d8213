#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "snmm/dataset.hpp"

namespace snmm {

// Scalar function on the internal axis (the argument of the unknown shape f).
using Func1D = std::function<double(double)>;

// Semiparametric nonlinear mixed model:
//   y_ij  = a(phi_i; x_ij) + b(phi_i; x_ij) * f(c(phi_i; x_ij)) + eps_ij
//   phi_i = A_i beta + eta_i,  eta_i ~ N(0, Gamma),  eps_ij ~ N(0, sigma2).
struct SnmmModel {
  int p = 0;  // dim(phi_i)
  int q = 0;  // dim(beta)
  std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)> a, b, c;
  std::vector<Eigen::MatrixXd> A;  // one p x q design matrix per individual

  const Eigen::MatrixXd& design(int i) const { return A.at(static_cast<size_t>(i)); }

  double g(const Eigen::VectorXd& phi, const Eigen::VectorXd& x, const Func1D& f) const {
    return a(phi, x) + b(phi, x) * f(c(phi, x));
  }

  // Mean curve for one individual at its design points.
  Eigen::VectorXd curve(const Individual& ind, const Eigen::VectorXd& phi, const Func1D& f) const {
    Eigen::VectorXd out(ind.n());
    for (int j = 0; j < ind.n(); ++j) out[j] = g(phi, ind.x[static_cast<size_t>(j)], f);
    return out;
  }

  void validate(const LongitudinalDataset& data) const;
};

struct ThetaEstimate {
  Eigen::VectorXd beta;
  Eigen::MatrixXd Gamma;
  double sigma2 = 0.0;
};

inline double logistic(double v) {
  // Numerically stable inverse logit.
  if (v >= 0.0) {
    const double e = std::exp(-v);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(v);
  return e / (1.0 + e);
}

// Shape-invariant family used throughout:
//   g = phi1 + amplitude * exp(phi2) * f(x - shift(phi3)),
// with shift = logistic (simulation studies) or identity (auction model).
// A_i = I_p, beta = mu. amplitude lets a scenario fold constants into b so the
// estimated f stays on the scale of the reference truth.
SnmmModel shape_invariant_logit(int n_individuals, double amplitude = 1.0);
SnmmModel shape_invariant_shift(int n_individuals, double amplitude = 1.0);

}  // namespace snmm
