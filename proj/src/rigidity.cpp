#include "wickstar/rigidity.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <algorithm>
#include <array>
#include <limits>

#include "wickstar/parallel.hpp"

namespace wickstar {

GAction g_model_action(const MoebiusMap& gamma) {
  return {"gamma-hat", [gamma](const GPoint& P) { return gamma_hat(gamma, P); }};
}

GAction omega_model_action(const MoebiusMap& phi) {
  if (phi.kind() != MoebiusKind::aut_disk) throw DomainError("omega_model_action: map is not designated Aut(D)");
  return {"T_phi", [phi](const GPoint& P) { return psi_omega_to_g(t_gamma_omega(phi, psi_g_to_omega(P))); }};
}

namespace {

using Mat = Eigen::MatrixXcd;

Complex random_disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * kPi * u(rng);
  return std::polar(r, t);
}

std::vector<double> singular_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

}  // namespace

std::vector<GPoint> sample_g_points(std::mt19937_64& rng, std::size_t n, double radius) {
  std::vector<GPoint> out;
  out.reserve(n);
  while (out.size() < n) {
    const Complex z = random_disk_point(rng, radius);
    const Complex w = random_disk_point(rng, radius);
    out.push_back(psi_omega_to_g(OmegaPoint(SpherePoint(z), SpherePoint(w))));
  }
  return out;
}

MoebiusMap conjugated_hyperbolic_generator() {
  const MoebiusMap s = half_plane_automorphism(1.0, 1.0, -1.0, 1.0);
  const MoebiusMap d = half_plane_automorphism(2.0, 0.0, 0.0, 1.0);
  return s.compose(d).compose(s.inverse());
}

InvarianceExperiment two_hyperbolic_experiment(int degree, std::size_t n_samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InvarianceExperiment e;
  e.name = "two-hyperbolic-d" + std::to_string(degree);
  e.generators = {g_model_action(half_plane_automorphism(2.0, 0.0, 0.0, 1.0)),
                  g_model_action(conjugated_hyperbolic_generator())};
  for (int p = 0; p <= degree; ++p)
    for (int q = 0; q <= degree; ++q) e.basis.push_back(fpq_on_g(p, q));
  e.samples = sample_g_points(rng, n_samples);
  return e;
}

InvarianceExperiment elliptic_experiment(int N, int degree, std::size_t n_samples, std::uint64_t seed) {
  if (N < 2) throw DomainError("elliptic_experiment: N >= 2 required");
  std::mt19937_64 rng(seed);
  InvarianceExperiment e;
  e.name = "elliptic-N" + std::to_string(N) + "-d" + std::to_string(degree);
  e.generators = {omega_model_action(disk_rotation(2.0 * kPi / N))};
  for (int p = 0; p <= degree; ++p)
    for (int q = 0; q <= degree; ++q) e.basis.push_back(fpq_on_g(p, q));
  e.samples = sample_g_points(rng, n_samples);
  return e;
}

InvarianceExperiment scaling_kernel_experiment(int degree, std::size_t n_samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InvarianceExperiment e;
  e.name = "scaling-kernels-d" + std::to_string(degree);
  e.generators = {g_model_action(half_plane_automorphism(2.0, 0.0, 0.0, 1.0))};
  for (int j = 0; j <= degree; ++j) {
    std::vector<Complex> c(static_cast<std::size_t>(j) + 1, 0.0);
    c.back() = 1.0;
    e.basis.push_back(scaling_kernel(EntireFn::polynomial(c)));
  }
  e.samples = sample_g_points(rng, n_samples);
  return e;
}

InvarianceResult invariant_dimension(const InvarianceExperiment& e) {
  const std::size_t nb = e.basis.size();
  const std::size_t ns = e.samples.size();
  const std::size_t ng = e.generators.size();
  if (nb == 0 || ng == 0) throw std::invalid_argument("invariant_dimension: empty basis or generator list");
  if (ns < 3 * nb) throw std::invalid_argument("invariant_dimension: need at least 3 samples per basis element");

  // at[g][i][k] = F_k(gen_g(P_i)); at[ng] holds F_k(P_i).
  std::vector<std::vector<std::vector<Complex>>> at(ng + 1, std::vector<std::vector<Complex>>(ns));
  parallel_for(ns, [&](std::size_t i) {
    for (std::size_t g = 0; g <= ng; ++g) {
      const GPoint P = g == ng ? e.samples[i] : e.generators[g].apply(e.samples[i]);
      auto& row = at[g][i];
      row.resize(nb);
      for (std::size_t k = 0; k < nb; ++k) row[k] = e.basis[k].eval(P);
    }
  });

  std::vector<double> scale(nb, 0.0);
  for (std::size_t k = 0; k < nb; ++k) {
    double acc = 0.0;
    for (std::size_t g = 0; g <= ng; ++g)
      for (std::size_t i = 0; i < ns; ++i) acc += std::norm(at[g][i][k]);
    scale[k] = std::sqrt(acc / static_cast<double>((ng + 1) * ns));
    if (scale[k] == 0.0) scale[k] = 1.0;
  }

  InvarianceResult res;
  Mat E(ns, nb);
  for (std::size_t i = 0; i < ns; ++i) {
    double m = 0.0;
    for (std::size_t k = 0; k < nb; ++k) m = std::max(m, std::abs(at[ng][i][k]) / scale[k]);
    if (m == 0.0) m = 1.0;
    for (std::size_t k = 0; k < nb; ++k) E(i, k) = at[ng][i][k] / scale[k] / m;
  }
  const auto se = singular_values(E);
  res.evaluation_condition = se.front() > 0.0 ? se.back() / se.front() : 0.0;
  res.evaluation_rank_deficient = res.evaluation_condition < 1e-12;

  res.rows = ng * ns;
  Mat D(res.rows, nb);
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t i = 0; i < ns; ++i) {
      double m = 0.0;
      for (std::size_t k = 0; k < nb; ++k)
        m = std::max({m, std::abs(at[g][i][k]) / scale[k], std::abs(at[ng][i][k]) / scale[k]});
      if (m == 0.0) m = 1.0;
      for (std::size_t k = 0; k < nb; ++k) D(g * ns + i, k) = (at[g][i][k] - at[ng][i][k]) / scale[k] / m;
    }
  }

  Eigen::JacobiSVD<Mat> svd(D, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  res.singular_values.assign(s.data(), s.data() + s.size());
  const double smax = res.singular_values.empty() ? 0.0 : res.singular_values.front();
  std::size_t rank = 0;
  for (double v : res.singular_values)
    if (smax > 0.0 && v > e.svd_tol * smax) ++rank;
  res.dimension = static_cast<int>(nb - rank);
  if (rank == 0) {
    res.gap = std::numeric_limits<double>::infinity();
  } else {
    const double kept = res.singular_values[rank - 1];
    const double dropped = rank < res.singular_values.size() ? res.singular_values[rank] : 0.0;
    res.gap = dropped > 0.0 ? kept / dropped : std::numeric_limits<double>::infinity();
  }

  const Mat& V = svd.matrixV();
  for (std::size_t c = rank; c < nb; ++c) {
    std::vector<Complex> v(nb);
    double norm = 0.0;
    for (std::size_t k = 0; k < nb; ++k) {
      v[k] = V(k, c) / scale[k];
      norm += std::norm(v[k]);
    }
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    res.nullspace.push_back(std::move(v));
  }

  double max_col = 0.0;
  std::vector<double> col(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    col[k] = D.col(k).norm();
    max_col = std::max(max_col, col[k]);
  }
  for (std::size_t k = 0; k < nb; ++k)
    if (col[k] <= e.svd_tol * max_col || max_col == 0.0) res.invariant_indices.push_back(k);
  return res;
}

FixedPointDemo hyperbolic_fixed_point_demo(const MoebiusMap& gamma, const GFunction& F, unsigned k, Complex w0,
                                           const std::vector<GPoint>& samples, double invariance_tol,
                                           double radius) {
  if (classify(gamma) != FixedPointType::hyperbolic) throw DomainError("fixed-point demo: map is not hyperbolic");
  FixedPointDemo out;
  const InvarianceReport inv = gamma_hat_invariant(F, gamma, samples, invariance_tol);
  out.invariance_residual = inv.max_residual;
  if (!inv.pass) {
    out.refused = true;
    out.message = "function is not invariant under gamma-hat (residual " + std::to_string(inv.max_residual) + ")";
    if (!inv.failures.empty()) out.message += "; " + inv.failures.front();
    return out;
  }
  const auto fps = fixed_points(gamma);
  const SpherePoint w0p(w0);
  out.fixed_point = projectively_equal(fps[1], w0p) ? fps[0] : fps[1];

  // Equally spaced samples: the DFT is the least-squares polynomial fit of degree < M.
  const std::size_t M = std::max<std::size_t>(32, 4 * (k + 1));
  std::vector<Complex> vals(M);
  for (std::size_t m = 0; m < M; ++m) {
    const Complex e = std::polar(radius, 2.0 * kPi * static_cast<double>(m) / static_cast<double>(M));
    const SpherePoint z = out.fixed_point.is_infinity() ? SpherePoint(Complex(1.0), e)
                                                        : SpherePoint(out.fixed_point.value() + e);
    vals[m] = F.eval(GPoint(z, w0p));
  }
  double fact = 1.0;
  for (unsigned j = 1; j <= k; ++j) {
    fact *= j;
    Complex a = 0.0;
    for (std::size_t m = 0; m < M; ++m)
      a += vals[m] * std::polar(1.0, -2.0 * kPi * static_cast<double>(j * m) / static_cast<double>(M));
    a /= static_cast<double>(M) * std::pow(radius, static_cast<double>(j));
    out.derivative_magnitudes.push_back(fact * std::abs(a));
  }
  return out;
}

std::string to_string(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::obstructed:
      return "obstructed";
    case ObstructionVerdict::constant_only:
      return "constant_only";
    case ObstructionVerdict::consistent_nonconstant:
      return "consistent_nonconstant";
    case ObstructionVerdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr unsigned kFitOrder = 4;  // c_0 .. c_3

// c_n without the global pole guard: only the factors 1 + j hbar, j < n, must be nonzero.
// Polynomial inputs of degree < kFitOrder give terminating series, so hbar
// need only avoid -1/j for j < kFitOrder.
Complex c_n_finite(Complex h, unsigned n) {
  Complex c = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    const Complex den = 1.0 + static_cast<double>(k) * h;
    if (std::abs(den) <= kHbarPoleTol) throw DomainError("hbar at the pole -1/" + std::to_string(k) + " of c_" + std::to_string(n));
    c = c * h / den;
  }
  return c;
}

using Poly = UniPoly<Complex>;

Poly monomial(unsigned k) { return Poly::monomial(k, Complex(1.0)); }

// Least-squares coefficients of v(h) = sum_n a_n c_n(h) over the hbar samples.
struct HbarFit {
  std::vector<Complex> hs;
  Mat V;
  Eigen::JacobiSVD<Mat> svd;
  double condition = 0.0;

  explicit HbarFit(std::vector<Complex> samples) : hs(std::move(samples)), V(hs.size(), kFitOrder) {
    for (std::size_t s = 0; s < hs.size(); ++s)
      for (unsigned n = 0; n < kFitOrder; ++n) V(s, n) = c_n_finite(hs[s], n);
    Mat Vs = V;
    for (unsigned n = 0; n < kFitOrder; ++n) Vs.col(n) /= Vs.col(n).norm();
    const auto sv = singular_values(Vs);
    condition = sv.back() > 0.0 ? sv.front() / sv.back() : std::numeric_limits<double>::infinity();
    svd.compute(V, Eigen::ComputeThinU | Eigen::ComputeThinV);
  }

  // hbar^0, hbar^1, hbar^2 coefficients (c_2 = hbar^2 + O(hbar^3), c_3 = O(hbar^3)).
  std::array<Complex, 3> powers(const Poly& a, const Poly& b, SurfaceKind surface, Complex w) const {
    const auto series = surface_star_exact(a, b, surface);
    Eigen::VectorXcd rhs(hs.size());
    for (std::size_t s = 0; s < hs.size(); ++s) {
      Complex v = 0.0;
      for (const auto& [n, p] : series.terms) v += c_n_finite(hs[s], n) * p.eval_complex(w);
      rhs(s) = v;
    }
    const Eigen::VectorXcd x = svd.solve(rhs);
    return {x(0), x(1), x(2)};
  }
};

}  // namespace

ObstructionReport obstruction_check(double R, const std::vector<Complex>& hs, int degree, std::size_t n_points,
                                    double tol, std::uint64_t seed) {
  if (degree < 0 || degree >= static_cast<int>(kFitOrder)) {
    throw std::invalid_argument("obstruction_check: degree must be in 0 .. 3");
  }
  if (!(R > 1.0) || !std::isfinite(R)) throw DomainError("obstruction_check: modulus R must be > 1");
  if (hs.size() < kFitOrder) throw std::invalid_argument("obstruction_check: at least 4 hbar samples are needed");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (std::abs(hs[i]) <= kHbarPoleTol) throw DomainError("obstruction_check: hbar = 0 sample");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(hs[i] - hs[j]) <= kHbarPoleTol) throw std::invalid_argument("obstruction_check: repeated hbar sample");
  }
  if (n_points == 0) throw std::invalid_argument("obstruction_check: n_points must be positive");

  ObstructionReport rep;
  rep.degree = degree;
  rep.hs = hs;
  const HbarFit fit(hs);
  rep.fit_condition = fit.condition;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Poly id = monomial(1);
  const Poly one = monomial(0);

  // Annulus side: f_R * f_R = f_R^2 + hbar (f_R^2 - 1), read off at chart values.
  double annulus_residual = 0.0;
  for (std::size_t s = 0; s < n_points; ++s) {
    const double rad = std::exp((2.0 * u(rng) - 1.0) * 0.9 * std::log(R));
    const Complex w = chart_f_R(R, std::polar(rad, 2.0 * kPi * u(rng)));
    const auto A = fit.powers(id, id, SurfaceKind::annulus, w);
    annulus_residual = std::max({annulus_residual, std::abs(A[0] - w * w), std::abs(A[1] - (A[0] - 1.0)),
                                 std::abs(A[2])});
  }

  // Punctured side at chart values w = f_0(z).
  std::vector<Complex> ws(n_points);
  for (auto& w : ws) w = chart_f_0(std::polar(std::exp(-(0.3 + 4.7 * u(rng))), 2.0 * kPi * u(rng)));
  const auto punct = [&](const Poly& a, const Poly& b, Complex w) {
    return fit.powers(a, b, SurfaceKind::punctured, w);
  };

  // (I): the hbar^2 coefficient of g * g is w^4 (g'')^2 / 2; it vanishes iff the
  // linear map g -> [hbar^2](g * t^2) = w^4 g'' does, so its nullspace is the answer.
  const int nb = degree + 1;
  Mat L(n_points, nb);
  for (std::size_t s = 0; s < n_points; ++s)
    for (int k = 0; k < nb; ++k) L(s, k) = punct(monomial(k), monomial(2), ws[s])[2];
  std::vector<double> colnorm(nb);
  double maxcol = 0.0;
  for (int k = 0; k < nb; ++k) {
    colnorm[k] = L.col(k).norm();
    maxcol = std::max(maxcol, colnorm[k]);
  }
  const auto sl = singular_values(L);
  int rankL = 0;
  for (double v : sl)
    if (v > tol * std::max(1.0, sl.front())) ++rankL;
  rep.hbar2_nullspace_dim = nb - rankL;
  rep.hbar2_margin = rankL > 0 ? sl[static_cast<std::size_t>(rankL) - 1] : 0.0;
  bool null_is_affine = true;
  for (int k = 0; k < nb; ++k) {
    const bool zero = colnorm[k] <= tol * std::max(1.0, maxcol);
    if (zero != (k <= 1)) null_is_affine = false;
  }

  // (II)+(III): with H the image of f_R^2, [hbar^0] = H and [hbar^1] = H - 1, so
  // [hbar^0] - [hbar^1] = 1 for g = alpha t + beta; unknowns X = alpha^2, Y = alpha beta, Z = beta^2.
  const auto balance = [&](const Poly& a, const Poly& b, Complex w) {
    const auto B = punct(a, b, w);
    return B[0] - B[1];
  };
  Mat A(n_points, 3);
  const Eigen::VectorXcd rhs = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(n_points));
  for (std::size_t s = 0; s < n_points; ++s) {
    A(s, 0) = balance(id, id, ws[s]);
    A(s, 1) = balance(id, one, ws[s]) + balance(one, id, ws[s]);
    A(s, 2) = balance(one, one, ws[s]);
  }
  std::vector<int> live;
  double amax = 0.0;
  for (int c = 0; c < 3; ++c) amax = std::max(amax, A.col(c).norm());
  for (int c = 0; c < 3; ++c)
    if (A.col(c).norm() > tol * std::max(1.0, amax)) live.push_back(c);
  Eigen::Vector3cd xyz = Eigen::Vector3cd::Zero();
  if (!live.empty()) {
    Mat Al(n_points, live.size());
    for (std::size_t j = 0; j < live.size(); ++j) Al.col(static_cast<Eigen::Index>(j)) = A.col(live[j]);
    const Eigen::VectorXcd sol = Al.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
    for (std::size_t j = 0; j < live.size(); ++j) xyz(live[j]) = sol(static_cast<Eigen::Index>(j));
  }
  const double balance_residual = (A * xyz - rhs).cwiseAbs().maxCoeff();
  const bool alpha_sq_free = std::find(live.begin(), live.end(), 0) == live.end();
  rep.beta = std::sqrt(xyz(2));
  rep.alpha = std::abs(rep.beta) > tol ? xyz(1) / rep.beta : Complex(0.0);
  if (!alpha_sq_free && std::abs(rep.alpha * rep.alpha - xyz(0)) > tol) rep.alpha = std::sqrt(xyz(0));
  if (degree == 0) rep.alpha = 0.0;

  // hbar^2 violation of the fitted candidate itself.
  const Poly cand(std::vector<Complex>{rep.beta, rep.alpha});
  double h2 = 0.0;
  for (const Complex& w : ws) h2 = std::max(h2, std::abs(punct(cand, cand, w)[2]));
  rep.residuals = {annulus_residual, balance_residual, h2};

  if (rep.fit_condition > 1e12) {
    rep.verdict = ObstructionVerdict::inconclusive;
    rep.note = "hbar fit is ill-conditioned";
  } else if (annulus_residual > tol) {
    rep.verdict = ObstructionVerdict::inconclusive;
    rep.note = "annulus side does not match f_R * f_R = f_R^2 + hbar (f_R^2 - 1)";
  } else if (degree == 0) {
    rep.verdict = ObstructionVerdict::constant_only;
    rep.note = "only constants g = +-1 balance the hbar^0 and hbar^1 terms";
  } else if (!null_is_affine) {
    rep.verdict = ObstructionVerdict::inconclusive;
    rep.note = "hbar^2 condition did not reduce to g'' = 0";
  } else if (balance_residual > tol) {
    rep.verdict = ObstructionVerdict::obstructed;
    rep.note = "g'' = 0 forced; no affine g balances the hbar^0 and hbar^1 terms";
  } else if (std::abs(rep.alpha) <= tol) {
    rep.verdict = ObstructionVerdict::obstructed;
    rep.note = "g'' = 0 forced, then alpha = 0 and beta = +-1: f_R would map to a constant";
  } else {
    rep.verdict = ObstructionVerdict::consistent_nonconstant;
    rep.note = "a nonconstant candidate satisfies the first three hbar powers";
  }
  return rep;
}

}  // namespace wickstar
