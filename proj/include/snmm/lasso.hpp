#pragma once

#include "snmm/dictionary.hpp"

namespace snmm {

// Data-driven penalty levels r_{n,j} = sigma ||phi_j||_n sqrt(gamma log(M)/n).
// The inflated variant uses gamma_tilde > gamma in place of gamma (support
// recovery); both exponents are kept for downstream probability bounds.
struct PenaltyLevels {
  enum class Variant { standard, inflated };
  Eigen::VectorXd r;
  double gamma = 2.0;
  double gamma_tilde = std::numeric_limits<double>::quiet_NaN();
  Variant variant = Variant::standard;

  // exponent actually used in the r formula
  double gamma_used() const { return variant == Variant::inflated ? gamma_tilde : gamma; }
  double r_max() const { return r.size() ? r.maxCoeff() : 0.0; }
};

PenaltyLevels penalty_levels(const DictionaryBasis& dict, const WeightedDesign& design,
                             double gamma);
PenaltyLevels penalty_levels_inflated(const DictionaryBasis& dict, const WeightedDesign& design,
                                      double gamma, double gamma_tilde);

// Penalized criterion evaluated directly from the design (no Gram identities):
//   crit(lambda) = (1/n) sum_i (y_i - b_i f_lambda(x_i))^2 + 2 sum_j r_j |lambda_j|.
double crit(const Eigen::VectorXd& lambda, const DictionaryBasis& dict,
            const WeightedDesign& design, const PenaltyLevels& pen);

struct LassoFit {
  Eigen::VectorXd lambda;
  std::vector<int> active;  // indices with lambda_j != 0, ascending
  double objective = 0.0;   // crit at the solution
  Eigen::VectorXd kkt_residuals;
  int iterations = 0;  // coordinate-descent sweeps
};

struct LassoOptions {
  double kkt_tol = 1e-9;
  int max_sweeps = 100000;
};

// Cyclic coordinate descent with covariance updates and an active-set loop;
// ties are resolved by lowest index through the fixed cyclic order. KKT
// residuals are verified at exit:
//   active j:   |bhat_j - (G lambda)_j - r_j sign(lambda_j)|
//   inactive j: |bhat_j - (G lambda)_j| - r_j
LassoFit solve_lasso(const DictionaryBasis& dict, const WeightedDesign& design,
                     const PenaltyLevels& pen, const LassoOptions& opts = {});

// Same solver on precomputed statistics: G = Z'Z/n, bhat = Z'y/n,
// y2_mean = (1/n)||y||^2 (only used for the objective value).
LassoFit solve_lasso_gram(const Eigen::MatrixXd& G, const Eigen::VectorXd& bhat, double y2_mean,
                          const PenaltyLevels& pen, const LassoOptions& opts = {});

struct DantzigCheck {
  bool in_set = false;
  Eigen::VectorXd margins;  // r_j - |(G lambda)_j - bhat_j|
};

DantzigCheck dantzig_check(const Eigen::VectorXd& lambda, const DictionaryBasis& dict,
                           const WeightedDesign& design, const PenaltyLevels& pen,
                           double tol = 0.0);
DantzigCheck dantzig_check_gram(const Eigen::VectorXd& lambda, const Eigen::MatrixXd& G,
                                const Eigen::VectorXd& bhat, const PenaltyLevels& pen,
                                double tol = 0.0);

}  // namespace snmm
