#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "snmm/types.hpp"

namespace snmm {

// Longitudinal data: individual i carries n_i design points x_ij (dim d) and
// responses y_ij. Ragged n_i is allowed.
struct Individual {
  std::string id;
  std::vector<Eigen::VectorXd> x;
  Eigen::VectorXd y;

  int n() const { return static_cast<int>(y.size()); }
};

struct LongitudinalDataset {
  std::vector<Individual> individuals;

  int N() const { return static_cast<int>(individuals.size()); }
  int n_total() const {
    int n = 0;
    for (const auto& ind : individuals) n += ind.n();
    return n;
  }
  int xdim() const {
    return individuals.empty() || individuals[0].x.empty()
               ? 0
               : static_cast<int>(individuals[0].x[0].size());
  }

  void validate() const {
    if (individuals.empty()) throw integrity_error("dataset: no individuals");
    const int d = xdim();
    for (const auto& ind : individuals) {
      if (ind.n() < 1) throw integrity_error("dataset: individual " + ind.id + " has no observations");
      if (static_cast<int>(ind.x.size()) != ind.n())
        throw integrity_error("dataset: individual " + ind.id + " has mismatched x/y lengths");
      for (const auto& xj : ind.x)
        if (static_cast<int>(xj.size()) != d)
          throw integrity_error("dataset: individual " + ind.id + " has inconsistent x dimension");
    }
  }
};

// phi_i per individual, aligned with dataset.individuals.
using RandomEffects = std::vector<Eigen::VectorXd>;

}  // namespace snmm
