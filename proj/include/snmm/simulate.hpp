#pragma once

#include <cstdint>
#include <string>

#include "snmm/model.hpp"

namespace snmm {

// Reference shape functions for the two simulation studies.
// Study 1: f(t) = sin(2 pi t).
// Study 2: f(t) = 0.6 sin(2 pi t) + 0.2 L_{0.75}(t) + 0.2 L_{0.80}(t) with
// L_c(t) = exp(-40|t-c|) / (2 int_0^1 exp(-40|s-c|) ds); the normalizer has
// the closed form (2 - e^{-40c} - e^{-40(1-c)})/40.
double eval_study1_f(double t);
double eval_study2_f(double t);

// Simulation scenario: longitudinal design t_ij = j/N (j = 1..J), random
// effects phi_i ~ N(mu, Gamma), responses from `model` with truth `f_true`.
struct ScenarioSpec {
  std::string name;
  int N = 0;
  int J = 0;
  Eigen::VectorXd mu;
  Eigen::MatrixXd Gamma;
  double sigma2 = 1.0;
  SnmmModel model;
  Func1D f_true;
  ThetaEstimate theta_init;  // paper's starting values for the fits
};

struct SimulatedData {
  LongitudinalDataset data;
  RandomEffects phi;
};

ScenarioSpec study1_scenario();
ScenarioSpec study2_scenario();

SimulatedData simulate_dataset(const ScenarioSpec& sc, std::uint64_t seed);

}  // namespace snmm
