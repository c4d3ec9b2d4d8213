#pragma once

#include "snmm/model.hpp"

namespace snmm {

// ||y - g(phi, f)||^2 over all individuals and observations.
double residual_ss(const LongitudinalDataset& data, const SnmmModel& model,
                   const RandomEffects& phi, const Func1D& f);

// Complete-data log likelihood of (y, phi), dropping the additive constant
// -(n + N p)/2 log(2 pi):
//   -1/2 { n log sigma2 + N log|Gamma| + ||y - g||^2 / sigma2
//          + sum_i (phi_i - A_i beta)' Gamma^{-1} (phi_i - A_i beta) }.
double complete_log_likelihood(const LongitudinalDataset& data, const SnmmModel& model,
                               const RandomEffects& phi, const Func1D& f,
                               const ThetaEstimate& theta);

}  // namespace snmm
