#include "snmm/dictionary.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "snmm/parallel.hpp"

namespace snmm {

Func1D DictionaryBasis::combine(const Eigen::VectorXd& lambda) const {
  if (lambda.size() != M()) throw config_error("combine: coefficient size != dictionary size");
  std::vector<std::pair<int, double>> terms;
  for (int j = 0; j < M(); ++j)
    if (lambda[j] != 0.0) terms.emplace_back(j, lambda[j]);
  auto atoms_ref = atoms;
  return [atoms_ref, terms](double x) {
    double s = 0.0;
    for (const auto& [j, w] : terms) s += w * (*atoms_ref)[static_cast<size_t>(j)].eval(x);
    return s;
  };
}

void DictionaryBasis::validate() const {
  if (M() < 1) throw config_error("dictionary: no atoms");
  std::set<std::string> seen;
  for (const auto& a : *atoms) {
    if (!a.eval) throw config_error("dictionary: atom '" + a.descriptor + "' has no evaluator");
    if (!seen.insert(a.descriptor).second)
      throw config_error("dictionary: duplicate descriptor '" + a.descriptor + "'");
  }
}

WeightedDesign transform_to_regression(const LongitudinalDataset& data, const SnmmModel& model,
                                       const RandomEffects& phi, double sigma2) {
  if (phi.size() != data.individuals.size())
    throw config_error("transform_to_regression: one phi_i per individual required");
  if (sigma2 <= 0.0) throw numerical_error("transform_to_regression: sigma2 must be > 0");
  WeightedDesign d;
  const int n = data.n_total();
  d.x.resize(n);
  d.b.resize(n);
  d.y.resize(n);
  d.sigma = std::sqrt(sigma2);
  int r = 0;
  for (size_t i = 0; i < data.individuals.size(); ++i) {
    const Individual& ind = data.individuals[i];
    for (int j = 0; j < ind.n(); ++j, ++r) {
      const Eigen::VectorXd& xij = ind.x[static_cast<size_t>(j)];
      const double bij = model.b(phi[i], xij);
      if (bij == 0.0)
        throw numerical_error("transform_to_regression: b vanishes at individual '" + ind.id +
                              "', observation " + std::to_string(j + 1));
      d.b[r] = bij;
      d.x[r] = model.c(phi[i], xij);
      d.y[r] = ind.y[j] - model.a(phi[i], xij);
    }
  }
  return d;
}

double empirical_norm(const Func1D& h, const WeightedDesign& design) {
  double s = 0.0;
  for (int i = 0; i < design.n(); ++i) {
    const double t = design.b[i] * h(design.x[i]);
    s += t * t;
  }
  return std::sqrt(s / design.n());
}

Eigen::MatrixXd design_matrix(const DictionaryBasis& dict, const WeightedDesign& design) {
  dict.validate();
  const int n = design.n();
  const int M = dict.M();
  Eigen::MatrixXd Z(n, M);
  parallel_for(M, [&](std::ptrdiff_t j) {
    const Func1D& f = dict.atom(static_cast<int>(j)).eval;
    for (int i = 0; i < n; ++i) Z(i, j) = design.b[i] * f(design.x[i]);
  });
  return Z;
}

Eigen::MatrixXd gram_matrix(const DictionaryBasis& dict, const WeightedDesign& design) {
  Eigen::setNbThreads(1);  // keep the GEMM independent of the OpenMP worker count
  const Eigen::MatrixXd Z = design_matrix(dict, design);
  const int n = design.n();
  const int M = dict.M();
  Eigen::MatrixXd G = (Z.transpose() * Z) / static_cast<double>(n);
  // Redo the diagonal with plain sequential sums so it matches empirical_norm
  // bit for bit.
  parallel_for(M, [&](std::ptrdiff_t j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += Z(i, j) * Z(i, j);
    G(j, j) = s / n;
  });
  return G;
}

Eigen::VectorXd atom_norms(const DictionaryBasis& dict, const WeightedDesign& design) {
  dict.validate();
  const int n = design.n();
  Eigen::VectorXd norms(dict.M());
  parallel_for(dict.M(), [&](std::ptrdiff_t j) {
    const Func1D& f = dict.atom(static_cast<int>(j)).eval;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = design.b[i] * f(design.x[i]);
      s += t * t;
    }
    norms[j] = std::sqrt(s / n);
  });
  return norms;
}

// ---------------------------------------------------------------- builders

static std::string fmt_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

DictionaryBasis study2_fourier_haar(const FourierHaarOptions& opts) {
  if (opts.hi <= opts.lo) throw config_error("study2_fourier_haar: empty domain");
  if (opts.haar_min_level > opts.haar_max_level)
    throw config_error("study2_fourier_haar: bad Haar level range");
  auto atoms = std::make_shared<std::vector<Atom>>();

  atoms->push_back({"fourier:const", [](double) { return 1.0; }});
  atoms->push_back({"fourier:cos(pi t)", [](double t) { return std::cos(M_PI * t); }});
  atoms->push_back({"fourier:sin(pi t)", [](double t) { return std::sin(M_PI * t); }});
  for (int j = 1; j <= opts.max_freq; ++j) {
    atoms->push_back({"fourier:cos(2pi " + std::to_string(j) + " t)",
                      [j](double t) { return std::cos(2.0 * M_PI * j * t); }});
    atoms->push_back({"fourier:sin(2pi " + std::to_string(j) + " t)",
                      [j](double t) { return std::sin(2.0 * M_PI * j * t); }});
  }
  const int n_fourier = static_cast<int>(atoms->size());

  std::vector<Atom> haar;
  const double lo = opts.lo, span = opts.hi - opts.lo;
  for (int j = opts.haar_min_level; j <= opts.haar_max_level; ++j) {
    const double scale = std::pow(2.0, 0.5 * j);
    const double pieces = std::pow(2.0, j);
    for (int k = 0; k < (1 << j); ++k) {
      std::string d = "haar:j=" + std::to_string(j) + ",k=" + std::to_string(k);
      haar.push_back({d, [lo, span, pieces, scale, k](double t) {
                        const double v = pieces * (t - lo) / span - k;
                        if (v < 0.0 || v >= 1.0) return 0.0;
                        return v < 0.5 ? scale : -scale;
                      }});
    }
  }
  if (opts.drop_coarsest < 0 || opts.drop_coarsest > static_cast<int>(haar.size()))
    throw config_error("study2_fourier_haar: drop_coarsest out of range");
  if (opts.drop_coarsest > 0)
    log_warn("study2_fourier_haar: dropping " + std::to_string(opts.drop_coarsest) +
             " coarsest Haar atoms (" + std::to_string(n_fourier + static_cast<int>(haar.size())) +
             " -> " +
             std::to_string(n_fourier + static_cast<int>(haar.size()) - opts.drop_coarsest) +
             ") to match the published dictionary size");
  atoms->insert(atoms->end(), haar.begin() + opts.drop_coarsest, haar.end());

  DictionaryBasis dict{atoms, opts.lo, opts.hi};
  dict.validate();
  return dict;
}

int bspline_count(const std::vector<double>& interior_knots, int degree) {
  return static_cast<int>(interior_knots.size()) + degree + 1;
}

// Cox-de Boor on the clamped knot vector [0]*(d+1), interior, [1]*(d+1).
static double cox_de_boor(const std::vector<double>& t, int i, int k, double u) {
  if (k == 0) return (t[i] <= u && u < t[i + 1]) ? 1.0 : 0.0;
  double v = 0.0;
  const double d1 = t[i + k] - t[i];
  if (d1 > 0.0) v += (u - t[i]) / d1 * cox_de_boor(t, i, k - 1, u);
  const double d2 = t[i + k + 1] - t[i + 1];
  if (d2 > 0.0) v += (t[i + k + 1] - u) / d2 * cox_de_boor(t, i + 1, k - 1, u);
  return v;
}

double bspline_basis(const std::vector<double>& interior_knots, int degree, int i, double u) {
  const int nb = bspline_count(interior_knots, degree);
  if (i < 0 || i >= nb) throw config_error("bspline_basis: index out of range");
  if (u < 0.0 || u > 1.0) return 0.0;
  if (u == 1.0) return i == nb - 1 ? 1.0 : 0.0;
  std::vector<double> t;
  t.reserve(interior_knots.size() + 2 * static_cast<size_t>(degree) + 2);
  for (int r = 0; r <= degree; ++r) t.push_back(0.0);
  for (double v : interior_knots) t.push_back(v);
  for (int r = 0; r <= degree; ++r) t.push_back(1.0);
  return cox_de_boor(t, i, degree, u);
}

DictionaryBasis auction_mixed(const AuctionDictOptions& opts) {
  if (opts.hi <= opts.lo) throw config_error("auction_mixed: empty domain");
  for (size_t r = 1; r < opts.interior_knots.size(); ++r)
    if (opts.interior_knots[r] <= opts.interior_knots[r - 1])
      throw config_error("auction_mixed: interior knots must be strictly increasing");
  if (!opts.interior_knots.empty() &&
      (opts.interior_knots.front() <= 0.0 || opts.interior_knots.back() >= 1.0))
    throw config_error("auction_mixed: interior knots must lie in (0,1)");

  auto atoms = std::make_shared<std::vector<Atom>>();
  const double lo = opts.lo, span = opts.hi - opts.lo;
  auto mapped = [lo, span](double x) { return (x - lo) / span; };

  for (int deg : opts.degrees) {
    const auto knots = opts.interior_knots;
    for (int i = 0; i < bspline_count(knots, deg); ++i) {
      std::string d = "bspline:deg=" + std::to_string(deg) + ",i=" + std::to_string(i);
      atoms->push_back({d, [knots, deg, i, mapped](double x) {
                          return bspline_basis(knots, deg, i, mapped(x));
                        }});
    }
  }
  for (double e : opts.power_exponents)
    atoms->push_back({"pow:" + fmt_num(e), [e, mapped](double x) {
                        const double u = mapped(x);
                        return u <= 0.0 ? 0.0 : std::pow(u, e);
                      }});
  for (double a : opts.exp_rates)
    atoms->push_back({"exp:" + fmt_num(a),
                      [a, mapped](double x) { return std::exp(a * mapped(x)); }});
  for (double c : opts.logit_centers) {
    const double slope = opts.logit_slope;
    atoms->push_back({"logit:c=" + fmt_num(c), [c, slope, mapped](double x) {
                        return logistic(slope * (mapped(x) - c));
                      }});
  }

  DictionaryBasis dict{atoms, opts.lo, opts.hi};
  dict.validate();
  return dict;
}

std::string describe(const DictionaryBasis& dict) {
  dict.validate();
  std::ostringstream os;
  os << "atoms " << dict.M() << " domain [" << dict.lo << "," << dict.hi << "]\n";
  for (int j = 0; j < dict.M(); ++j) os << j << "," << dict.atom(j).descriptor << "\n";
  return os.str();
}

}  // namespace snmm
