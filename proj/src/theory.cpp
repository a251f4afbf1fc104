#include "pipm/theory.hpp"

#include <cmath>
#include <limits>

#include "pipm/errors.hpp"
#include "pipm/oracle.hpp"
#include "pipm/rng.hpp"

namespace pipm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_complementary(const Vector& x, const Vector& s) {
  if (x.size() != s.size()) throw ContractError("pair sizes differ");
  if (x.cwiseProduct(s).cwiseAbs().maxCoeff() > 1e-10) {
    throw ContractError("pair is not complementary: max |x_i s_i| > 1e-10");
  }
}

}  // namespace

TheoryConstants TheoryConstants::make(double epsilon, double epsilon_perturbed, double psi_p,
                                      double psi_d, double tau_p, double tau_d, double gamma,
                                      int n) {
  TheoryConstants tc;
  tc.epsilon = epsilon;
  tc.epsilon_perturbed = epsilon_perturbed;
  tc.psi_p = psi_p;
  tc.psi_d = psi_d;
  tc.tau_p = tau_p;
  tc.tau_d = tau_d;
  tc.gamma = gamma;
  tc.n = n;
  const double dn = static_cast<double>(n);
  tc.c1 = epsilon_perturbed / dn;
  tc.c2 = dn * std::sqrt(dn) / epsilon_perturbed + dn;
  tc.rho = psi_p / std::max(tau_p, tau_d);
  return tc;
}

Vector perfect_perturbation(const Vector& x_star, const Vector& s_star, double mu_hat) {
  require_complementary(x_star, s_star);
  if (!(mu_hat > 0.0)) throw ContractError("mu_hat must be positive");
  const Vector sigma = x_star + s_star;
  Vector out(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    out[i] = 2.0 * mu_hat / (sigma[i] + std::sqrt(sigma[i] * sigma[i] + 4.0 * mu_hat));
  }
  return out;
}

PerturbationInterval relaxed_interval(const Vector& x_star, const Vector& s_star, double mu_hat,
                                      double xi) {
  require_complementary(x_star, s_star);
  if (!(mu_hat > 0.0)) throw ContractError("mu_hat must be positive");
  if (!(xi > 0.0 && xi < 1.0)) throw ContractError("xi must lie in (0, 1)");
  const Vector sigma = x_star + s_star;
  PerturbationInterval out;
  out.xi = xi;
  out.mu_hat = mu_hat;
  out.lower.resize(sigma.size());
  out.upper.resize(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double lo_disc = std::sqrt(sigma[i] * sigma[i] + 4.0 * xi * mu_hat);
    const double hi_disc = std::sqrt(sigma[i] * sigma[i] + 4.0 * mu_hat / xi);
    out.lower[i] = 2.0 * xi * mu_hat / (sigma[i] + lo_disc);
    out.upper[i] = (2.0 * mu_hat / xi) / (sigma[i] + hi_disc);
  }
  return out;
}

Residuals error_residuals(const StandardLP& lp, const Vector& x, const Vector& y) {
  const Vector s = lp.c - lp.A.transpose() * y;
  const Vector primal_gap = lp.A * x - lp.b;
  const Vector y_pos = y.cwiseMax(0.0);
  const Vector y_neg = (-y).cwiseMax(0.0);

  Residuals out;
  out.r = std::sqrt(x.cwiseMin(s).squaredNorm() + y_pos.cwiseMin(primal_gap).squaredNorm() +
                    y_neg.cwiseMin(-primal_gap).squaredNorm());
  // (b-Ax)_+ and (Ax-b)_+ together contribute |Ax-b| componentwise.
  const double gap = lp.c.dot(x) - lp.b.dot(y);
  out.w = std::sqrt((-s).cwiseMax(0.0).squaredNorm() + primal_gap.squaredNorm() +
                    (-x).cwiseMax(0.0).squaredNorm() + std::pow(std::max(gap, 0.0), 2));
  return out;
}

Residuals error_residuals_feasible(const Vector& x, const Vector& s) {
  Residuals out;
  out.r = x.cwiseMin(s).norm();
  out.w = std::sqrt((-x).cwiseMax(0.0).squaredNorm() + (-s).cwiseMax(0.0).squaredNorm() +
                    std::pow(std::max(x.dot(s), 0.0), 2));
  return out;
}

StandardLP perturbed_problem(const StandardLP& lp, const Vector& lambda) {
  if (lambda.size() != lp.cols()) throw ContractError("lambda must have length n");
  StandardLP out = lp;
  out.b = lp.b + lp.A * lambda;
  out.c = lp.c + lambda;
  return out;
}

double solution_margin(const Vector& x_star, const Vector& s_star, double activity_tol) {
  double margin = kInf;
  for (Eigen::Index i = 0; i < x_star.size(); ++i) {
    margin = std::min(margin, x_star[i] < activity_tol ? s_star[i] : x_star[i]);
  }
  return margin;
}

double min_inactive_value(const Vector& x_star, double activity_tol) {
  double v = kInf;
  for (Eigen::Index i = 0; i < x_star.size(); ++i) {
    if (x_star[i] >= activity_tol) v = std::min(v, x_star[i]);
  }
  return v;
}

double min_strictly_active_value(const Vector& s_star, double activity_tol) {
  double v = kInf;
  for (Eigen::Index i = 0; i < s_star.size(); ++i) {
    if (s_star[i] >= activity_tol) v = std::min(v, s_star[i]);
  }
  return v;
}

namespace {

// Strictly feasible sampling state for the tau search: primal points are
// x(z) = center + N z over the nullspace basis N, dual points s(yw) with
// yw = y* + w.
struct TauSearch {
  const StandardLP& lp;
  Vector lambda;
  Vector x_star, y_star, s_star;
  Matrix nullspace;  // n x (n - rank)
  Vector x_lsq;      // minimum-norm solution of Ax = b

  double best_p = 0.0;
  double best_d = 0.0;

  bool primal_ok(const Vector& x) const { return (x + lambda).minCoeff() > 0.0; }
  bool dual_ok(const Vector& s) const { return (s + lambda).minCoeff() > 0.0; }

  // Evaluates a candidate pair and folds it into the running maxima.
  // Returns true when either maximum improved.
  bool eval(const Vector& x, const Vector& s) {
    const Residuals res = error_residuals_feasible(x, s);
    const double denom = res.r + res.w;
    if (!(denom > 0.0)) return false;
    bool improved = false;
    const double rp = (x - x_star).norm() / denom;
    const double rd = (s - s_star).norm() / denom;
    if (rp > best_p) {
      best_p = rp;
      improved = true;
    }
    if (rd > best_d) {
      best_d = rd;
      improved = true;
    }
    return improved;
  }

  // Coordinate hill climb around (z, w) with shrinking steps.
  void refine(Vector z, const Vector& center, Vector w) {
    const auto x_of = [&](const Vector& zz) -> Vector { return center + nullspace * zz; };
    const auto s_of = [&](const Vector& ww) -> Vector {
      return lp.c - lp.A.transpose() * (y_star + ww);
    };
    double step = 0.25;
    for (int round = 0; round < 4; ++round) {
      for (Eigen::Index j = 0; j < z.size(); ++j) {
        for (const double dir : {step, -step}) {
          Vector zz = z;
          zz[j] += dir;
          const Vector x = x_of(zz);
          if (!primal_ok(x)) continue;
          if (eval(x, s_of(w))) z = zz;
        }
      }
      for (Eigen::Index j = 0; j < w.size(); ++j) {
        for (const double dir : {step, -step}) {
          Vector ww = w;
          ww[j] += dir;
          const Vector s = s_of(ww);
          if (!dual_ok(s)) continue;
          if (eval(x_of(z), s)) w = ww;
        }
      }
      step *= 0.5;
    }
  }
};

}  // namespace

TauEstimate estimate_tau(const StandardLP& lp, const TauOptions& options) {
  validate(lp);
  const int n = lp.cols();
  const int m = lp.rows();

  const OracleSolution sol = oracle_solve(lp, OracleKind::Simplex);

  TauSearch search{lp,
                   options.lambda.size() == 0 ? Vector::Constant(n, 1e-2) : options.lambda,
                   sol.x,
                   sol.y,
                   sol.s,
                   Matrix(),
                   Vector()};
  if (search.lambda.size() != n || search.lambda.minCoeff() <= 0.0) {
    throw ContractError("tau search needs a strictly positive lambda of length n");
  }

  Eigen::FullPivLU<Matrix> lu(lp.A);
  search.nullspace = lu.kernel();
  Eigen::LLT<Matrix> llt(lp.A * lp.A.transpose());
  search.x_lsq = lp.A.transpose() * llt.solve(lp.b);

  // The oracle pair itself (a boundary point of the shifted interior).
  search.eval(sol.x, sol.s);

  Rng rng(options.seed);
  const int z_dim = static_cast<int>(search.nullspace.cols());
  constexpr double kScales[] = {0.01, 0.1, 1.0, 10.0};
  int accepted = 0;

  for (int i = 0; i < options.sample_count; ++i) {
    const double scale = kScales[rng.uniform_int(0, 3)];
    Vector z(z_dim);
    for (int j = 0; j < z_dim; ++j) z[j] = scale * rng.uniform(-1.0, 1.0);
    const Vector& center = (i % 2 == 0) ? search.x_star : search.x_lsq;
    const Vector x = center + search.nullspace * z;

    Vector w(m);
    for (int j = 0; j < m; ++j) w[j] = scale * rng.uniform(-1.0, 1.0);
    const Vector s = lp.c - lp.A.transpose() * (search.y_star + w);

    const bool px = search.primal_ok(x);
    const bool ds = search.dual_ok(s);
    if (!px && !ds) continue;
    const Vector& xe = px ? x : search.x_star;
    const Vector& se = ds ? s : search.s_star;
    ++accepted;
    if (search.eval(xe, se)) {
      search.refine(px ? z : Vector::Zero(z_dim), px ? center : search.x_star,
                    ds ? w : Vector::Zero(m));
    }
  }
  if (accepted == 0) throw OracleError("tau search found no strictly feasible samples");
  return {search.best_p, search.best_d};
}

MuThresholds mu_thresholds(const TheoryConstants& tc) {
  if (!(tc.n > 0) || !(tc.epsilon > 0.0) || !(tc.epsilon_perturbed > 0.0) ||
      !(tc.psi_p > 0.0) || !(std::max(tc.tau_p, tc.tau_d) > 0.0) || !(tc.gamma > 0.0)) {
    throw ContractError("mu_thresholds needs positive constants");
  }
  const double dn = static_cast<double>(tc.n);
  const double tau = std::max(tc.tau_p, tc.tau_d);
  MuThresholds out;
  out.mu_max_lambda = tc.psi_p * tc.epsilon_perturbed /
                      (4.0 * dn * tau * (std::sqrt(dn) + tc.epsilon_perturbed));
  out.mu_bar_max_lambda = tc.epsilon_perturbed * tc.epsilon_perturbed * tc.gamma / (dn * dn);
  out.mu_max = tc.epsilon * tc.epsilon * tc.gamma / (dn * dn);
  return out;
}

}  // namespace pipm
