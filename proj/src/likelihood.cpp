#include "snmm/likelihood.hpp"

#include <cmath>

namespace snmm {

double residual_ss(const LongitudinalDataset& data, const SnmmModel& model,
                   const RandomEffects& phi, const Func1D& f) {
  if (phi.size() != data.individuals.size())
    throw config_error("residual_ss: one phi_i per individual required");
  double ss = 0.0;
  for (size_t i = 0; i < data.individuals.size(); ++i) {
    const Individual& ind = data.individuals[i];
    for (int j = 0; j < ind.n(); ++j) {
      const double r = ind.y[j] - model.g(phi[i], ind.x[static_cast<size_t>(j)], f);
      ss += r * r;
    }
  }
  return ss;
}

double complete_log_likelihood(const LongitudinalDataset& data, const SnmmModel& model,
                               const RandomEffects& phi, const Func1D& f,
                               const ThetaEstimate& theta) {
  model.validate(data);
  if (theta.sigma2 <= 0.0) throw numerical_error("complete_log_likelihood: sigma2 must be > 0");
  if (theta.beta.size() != model.q) throw config_error("complete_log_likelihood: beta has wrong size");
  if (theta.Gamma.rows() != model.p || theta.Gamma.cols() != model.p)
    throw config_error("complete_log_likelihood: Gamma has wrong size");
  if (phi.size() != data.individuals.size())
    throw config_error("complete_log_likelihood: one phi_i per individual required");

  Eigen::LLT<Eigen::MatrixXd> llt(theta.Gamma);
  if (llt.info() != Eigen::Success)
    throw numerical_error("complete_log_likelihood: Gamma is not positive definite");
  double logdet = 0.0;
  for (int r = 0; r < model.p; ++r) logdet += 2.0 * std::log(llt.matrixL()(r, r));

  double quad = 0.0;
  for (size_t i = 0; i < data.individuals.size(); ++i) {
    const Eigen::VectorXd eta = phi[i] - model.design(static_cast<int>(i)) * theta.beta;
    quad += eta.dot(llt.solve(eta));
  }

  const double n = data.n_total();
  const double N = data.N();
  const double ss = residual_ss(data, model, phi, f);
  return -0.5 * (n * std::log(theta.sigma2) + N * logdet + ss / theta.sigma2 + quad);
}

}  // namespace snmm
