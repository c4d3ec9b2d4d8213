#include "snmm/simulate.hpp"

#include <cmath>

#include "snmm/rng.hpp"

namespace snmm {

double eval_study1_f(double t) { return std::sin(2.0 * M_PI * t); }

static double bump(double t, double c) {
  const double norm = (2.0 - std::exp(-40.0 * c) - std::exp(-40.0 * (1.0 - c))) / 40.0;
  return std::exp(-40.0 * std::abs(t - c)) / (2.0 * norm);
}

double eval_study2_f(double t) {
  return 0.6 * std::sin(2.0 * M_PI * t) + 0.2 * bump(t, 0.75) + 0.2 * bump(t, 0.80);
}

static ScenarioSpec study_base() {
  ScenarioSpec sc;
  sc.mu = Eigen::Vector3d(1.0, 0.0, 0.0);
  sc.theta_init.beta = Eigen::Vector3d(1.0, 0.0, 0.0);
  sc.theta_init.Gamma = Eigen::Vector3d(1.0, 0.3, 0.1).asDiagonal();
  sc.theta_init.sigma2 = 2.0;
  return sc;
}

ScenarioSpec study1_scenario() {
  ScenarioSpec sc = study_base();
  sc.name = "study1";
  sc.N = 10;
  sc.J = 10;
  sc.Gamma = Eigen::Vector3d(1.0, 0.25, 0.16).asDiagonal();
  sc.sigma2 = 1.0;
  sc.model = shape_invariant_logit(sc.N, 2.0);
  sc.f_true = eval_study1_f;
  return sc;
}

ScenarioSpec study2_scenario() {
  ScenarioSpec sc = study_base();
  sc.name = "study2";
  sc.N = 10;
  sc.J = 20;
  sc.Gamma = Eigen::Vector3d(0.25, 0.16, 0.04).asDiagonal();
  sc.sigma2 = 0.4;
  sc.model = shape_invariant_logit(sc.N, 2.0);
  sc.f_true = eval_study2_f;
  return sc;
}

SimulatedData simulate_dataset(const ScenarioSpec& sc, std::uint64_t seed) {
  if (sc.N <= 0 || sc.J <= 0) throw config_error("simulate_dataset: N and J must be positive");
  const int p = static_cast<int>(sc.mu.size());
  Eigen::LLT<Eigen::MatrixXd> llt(sc.Gamma);
  if (llt.info() != Eigen::Success)
    throw numerical_error("simulate_dataset: Gamma is not positive definite");
  const Eigen::MatrixXd L = llt.matrixL();
  const double sd = std::sqrt(sc.sigma2);

  RngStream rng(seed, 0);
  SimulatedData out;
  out.data.individuals.resize(static_cast<size_t>(sc.N));
  out.phi.resize(static_cast<size_t>(sc.N));

  for (int i = 0; i < sc.N; ++i) {
    Eigen::VectorXd z(p);
    for (int r = 0; r < p; ++r) z[r] = rng.normal();
    out.phi[static_cast<size_t>(i)] = sc.mu + L * z;
  }
  for (int i = 0; i < sc.N; ++i) {
    Individual& ind = out.data.individuals[static_cast<size_t>(i)];
    ind.id = std::to_string(i + 1);
    ind.x.resize(static_cast<size_t>(sc.J));
    ind.y.resize(sc.J);
    for (int j = 0; j < sc.J; ++j) {
      Eigen::VectorXd x(1);
      x[0] = static_cast<double>(j + 1) / sc.N;  // j/N design; spans (0, J/N]
      ind.x[static_cast<size_t>(j)] = x;
      const double mean = sc.model.g(out.phi[static_cast<size_t>(i)], x, sc.f_true);
      ind.y[j] = mean + (sd > 0.0 ? rng.normal(0.0, sd) : 0.0);
    }
  }
  return out;
}

}  // namespace snmm
