#include "snmm/model.hpp"

#include <cmath>

namespace snmm {

void SnmmModel::validate(const LongitudinalDataset& data) const {
  if (p <= 0 || q <= 0) throw config_error("model: p and q must be positive");
  if (!a || !b || !c) throw config_error("model: a, b, c must all be set");
  if (static_cast<int>(A.size()) != data.N())
    throw config_error("model: need one design matrix per individual");
  for (const auto& Ai : A)
    if (Ai.rows() != p || Ai.cols() != q)
      throw config_error("model: design matrices must be p x q");
}

static SnmmModel shape_invariant_base(int n_individuals, double amplitude) {
  SnmmModel m;
  m.p = 3;
  m.q = 3;
  m.a = [](const Eigen::VectorXd& phi, const Eigen::VectorXd&) { return phi[0]; };
  m.b = [amplitude](const Eigen::VectorXd& phi, const Eigen::VectorXd&) {
    return amplitude * std::exp(phi[1]);
  };
  m.A.assign(static_cast<size_t>(n_individuals), Eigen::MatrixXd::Identity(3, 3));
  return m;
}

SnmmModel shape_invariant_logit(int n_individuals, double amplitude) {
  SnmmModel m = shape_invariant_base(n_individuals, amplitude);
  m.c = [](const Eigen::VectorXd& phi, const Eigen::VectorXd& x) {
    return x[0] - logistic(phi[2]);
  };
  return m;
}

SnmmModel shape_invariant_shift(int n_individuals, double amplitude) {
  SnmmModel m = shape_invariant_base(n_individuals, amplitude);
  m.c = [](const Eigen::VectorXd& phi, const Eigen::VectorXd& x) { return x[0] - phi[2]; };
  return m;
}

}  // namespace snmm
