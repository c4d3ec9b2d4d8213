#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "snmm/model.hpp"

namespace snmm {

// One dictionary entry: a scalar function on the internal axis plus a unique
// symbolic descriptor (family + parameters) used in reports and CSV output.
struct Atom {
  std::string descriptor;
  Func1D eval;
};

struct DictionaryBasis {
  std::shared_ptr<const std::vector<Atom>> atoms;
  double lo = 0.0;  // domain the affine-mapped families (Haar, B-spline) live on
  double hi = 1.0;

  int M() const { return atoms ? static_cast<int>(atoms->size()) : 0; }
  const Atom& atom(int j) const { return (*atoms)[static_cast<size_t>(j)]; }
  double eval(int j, double x) const { return (*atoms)[static_cast<size_t>(j)].eval(x); }

  // f_lambda = sum_j lambda_j phi_j; zero coefficients are skipped so the
  // returned function costs O(nnz) per evaluation.
  Func1D combine(const Eigen::VectorXd& lambda) const;

  void validate() const;  // nonempty, unique descriptors
};

// Working regression view of the mixed model at fixed phi:
//   y~_(ij) = y_ij - a(phi_i; x_ij),  x~ = c(phi_i; x_ij),  weight b(phi_i; x_ij).
// Rows are individual-major, observation-minor. sigma is the current noise sd
// used when deriving penalty levels.
struct WeightedDesign {
  Eigen::VectorXd x;
  Eigen::VectorXd b;
  Eigen::VectorXd y;
  double sigma = 1.0;

  int n() const { return static_cast<int>(x.size()); }
};

WeightedDesign transform_to_regression(const LongitudinalDataset& data, const SnmmModel& model,
                                       const RandomEffects& phi, double sigma2);

// ||h||_n = sqrt( (1/n) sum_i b_i^2 h(x_i)^2 ).
double empirical_norm(const Func1D& h, const WeightedDesign& design);

// Z_(ij) = b_i phi_j(x_i); columns are built independently (parallel kernel).
Eigen::MatrixXd design_matrix(const DictionaryBasis& dict, const WeightedDesign& design);

// G_(jk) = (1/n) sum_i b_i^2 phi_j(x_i) phi_k(x_i). The diagonal is summed in
// the same order as empirical_norm so sqrt(G_jj) == ||phi_j||_n exactly.
Eigen::MatrixXd gram_matrix(const DictionaryBasis& dict, const WeightedDesign& design);

// ||phi_j||_n for every atom, bitwise equal to sqrt(diag of gram_matrix).
Eigen::VectorXd atom_norms(const DictionaryBasis& dict, const WeightedDesign& design);

// ---------------------------------------------------------------- builders

// Fourier block {1, cos(pi t), sin(pi t), cos(2 pi j t), sin(2 pi j t),
// j=1..max_freq} evaluated on the raw axis, plus Haar wavelets on the
// affinely mapped axis (t-lo)/(hi-lo) at levels [min_level, max_level].
// drop_coarsest removes that many atoms from the start of the Haar block to
// match the published dictionary size (logged).
struct FourierHaarOptions {
  double lo = -0.4;
  double hi = 1.6;
  int max_freq = 5;
  int haar_min_level = 4;
  int haar_max_level = 7;
  int drop_coarsest = 8;
};
DictionaryBasis study2_fourier_haar(const FourierHaarOptions& opts = {});

// Mixed parametric/spline dictionary for the auction model: clamped B-splines
// of degree 3 and 4 on shared interior knots (mapped axis), power atoms u^e
// (0 for u <= 0), exponential atoms exp(a u) and logistic bumps
// 1/(1+exp(-slope (u - c))).
struct AuctionDictOptions {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> interior_knots = {0.02, 0.05, 0.09, 0.14, 0.25, 0.40, 0.45, 0.50,
                                        0.55, 0.60, 0.75, 0.86, 0.91, 0.95, 0.98};
  std::vector<int> degrees = {3, 4};
  std::vector<double> power_exponents = {0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 1.0, 1.25, 1.5, 2.0};
  std::vector<double> exp_rates = {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.4, 1.7, 2.0, 2.5};
  std::vector<double> logit_centers = {0.2, 0.35, 0.5, 0.65, 0.8};
  double logit_slope = 10.0;
};
DictionaryBasis auction_mixed(const AuctionDictOptions& opts = {});

// Clamped B-spline basis value N_{i,degree}(u) on [0,1] with the given
// interior knots; 0 outside [0,1]. Exposed for tests.
double bspline_basis(const std::vector<double>& interior_knots, int degree, int i, double u);
int bspline_count(const std::vector<double>& interior_knots, int degree);

std::string describe(const DictionaryBasis& dict);

}  // namespace snmm
