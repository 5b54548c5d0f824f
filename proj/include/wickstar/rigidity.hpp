#ifndef WICKSTAR_RIGIDITY_HPP
#define WICKSTAR_RIGIDITY_HPP

// Desk-scale rigidity experiments: numeric invariant subspaces of function
// spans on G under Fuchsian generators, the fixed-point derivative argument,
// and the annulus / punctured-disk obstruction.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wickstar/sphere.hpp"
#include "wickstar/star.hpp"
#include "wickstar/surface.hpp"

namespace wickstar {

/// A self-map of G with a printable label.
struct GAction {
  std::string label;
  std::function<GPoint(const GPoint&)> apply;
};

/// gamma-hat(z, w) = (gamma z, gamma w).
GAction g_model_action(const MoebiusMap& gamma);
/// Psi o T_phi o Psi^{-1} for phi in Aut(D).
GAction omega_model_action(const MoebiusMap& phi);

struct InvarianceExperiment {
  std::string name;
  std::vector<GAction> generators;
  std::vector<GFunction> basis;
  std::vector<GPoint> samples;
  double svd_tol = 1e-8;
};

struct InvarianceResult {
  int dimension = 0;
  /// Descending spectrum of the scaled difference matrix.
  std::vector<double> singular_values;
  /// Smallest kept over largest discarded singular value (infinite when the latter is 0).
  double gap = 0.0;
  /// Basis elements that are invariant on their own.
  std::vector<std::size_t> invariant_indices;
  /// Orthonormal nullspace basis, in the original (unscaled) coordinates.
  std::vector<std::vector<Complex>> nullspace;
  /// sigma_min / sigma_max of the scaled evaluation matrix.
  double evaluation_condition = 0.0;
  bool evaluation_rank_deficient = false;
  std::size_t rows = 0;
};

/// Numeric nullspace of sum_k a_k (F_k(gamma P) - F_k(P)) = 0 over generators and samples.
InvarianceResult invariant_dimension(const InvarianceExperiment& e);

/// Random points of G = Psi(Omega) built from Omega points with |z|, |w| <= radius.
std::vector<GPoint> sample_g_points(std::mt19937_64& rng, std::size_t n, double radius = 0.9);

/// Second hyperbolic generator s o (z -> 2z) o s^{-1}, s(z) = (z+1)/(1-z): fixed points +-1.
MoebiusMap conjugated_hyperbolic_generator();

InvarianceExperiment two_hyperbolic_experiment(int degree, std::size_t n_samples, std::uint64_t seed);
InvarianceExperiment elliptic_experiment(int N, int degree, std::size_t n_samples, std::uint64_t seed);
InvarianceExperiment scaling_kernel_experiment(int degree, std::size_t n_samples, std::uint64_t seed);

struct FixedPointDemo {
  bool refused = false;
  double invariance_residual = 0.0;
  SpherePoint fixed_point = SpherePoint(0.0);
  /// |g^{(j)}(z0)| for j = 1 .. k, g = F(., w0); computed in the chart 1/z at infinity.
  std::vector<double> derivative_magnitudes;
  std::string message;
};

/// Differentiates F(., w0) at a fixed point of a hyperbolic gamma by a
/// discrete Fourier fit on a circle of the given radius.
FixedPointDemo hyperbolic_fixed_point_demo(const MoebiusMap& gamma, const GFunction& F, unsigned k, Complex w0,
                                           const std::vector<GPoint>& samples, double invariance_tol = 1e-10,
                                           double radius = 1e-2);

enum class ObstructionVerdict { obstructed, constant_only, consistent_nonconstant, inconclusive };
std::string to_string(ObstructionVerdict v);

struct ObstructionReport {
  int degree = 0;
  std::vector<Complex> hs;
  Complex alpha;
  Complex beta;
  /// residuals[k]: worst violation of the hbar^k balance for the fitted candidate
  /// (k = 0: annulus side shape, k = 1: punctured hbar^0/hbar^1 balance, k = 2: hbar^2 term).
  std::vector<double> residuals;
  /// Dimension of the solution space of the hbar^2 condition among polynomials of the degree.
  int hbar2_nullspace_dim = 0;
  /// Smallest nonzero singular value of the hbar^2 condition (0 when degree <= 1).
  double hbar2_margin = 0.0;
  /// Condition number of the hbar fit.
  double fit_condition = 0.0;
  ObstructionVerdict verdict = ObstructionVerdict::inconclusive;
  std::string note;
};

/// Tests whether a linear map with f_R -> g o f_0 (g polynomial of the given
/// degree) can be multiplicative for every hbar, from the first three hbar powers.
ObstructionReport obstruction_check(double R, const std::vector<Complex>& hs, int degree, std::size_t n_points = 12,
                                    double tol = 1e-8, std::uint64_t seed = 7);

}  // namespace wickstar

#endif  // WICKSTAR_RIGIDITY_HPP
