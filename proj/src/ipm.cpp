#include "pipm/ipm.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "pipm/errors.hpp"
#include "pipm/linsolve.hpp"

namespace pipm {

PerturbationState PerturbationState::zero(int n, double eta, double zeta) {
  return {Vector::Zero(n), Vector::Zero(n), eta, zeta};
}

PerturbationState PerturbationState::uniform(int n, double level, double eta, double zeta) {
  return {Vector::Constant(n, level), Vector::Constant(n, level), eta, zeta};
}

Iterate mehrotra_start(const StandardLP& lp) {
  const int n = lp.cols();
  Eigen::LLT<Matrix> llt(lp.A * lp.A.transpose());
  if (llt.info() != Eigen::Success) {
    throw SingularError("A A^T is not positive definite; run ensure_full_rank first");
  }
  const Vector x_ls = lp.A.transpose() * llt.solve(lp.b);
  const Vector y_ls = llt.solve(lp.A * lp.c);
  const Vector s_ls = lp.c - lp.A.transpose() * y_ls;

  const double dx = std::max(-1.5 * x_ls.minCoeff(), 0.0);
  const double ds = std::max(-1.5 * s_ls.minCoeff(), 0.0);
  const Vector x_shift = x_ls.array() + dx;
  const Vector s_shift = s_ls.array() + ds;
  const double dot = x_shift.dot(s_shift);
  const double sum_x = x_shift.sum();
  const double sum_s = s_shift.sum();
  const double dx_hat = sum_s > 0.0 ? dx + 0.5 * dot / sum_s : dx + 1.0;
  const double ds_hat = sum_x > 0.0 ? ds + 0.5 * dot / sum_x : ds + 1.0;

  Iterate it;
  it.x = x_ls.array() + dx_hat;
  it.y = y_ls;
  it.s = s_ls.array() + ds_hat;
  it.k = 0;
  // The shifts above vanish only in contrived all-zero cases; keep the
  // strict-interior contract regardless.
  if (it.x.minCoeff() <= 0.0) it.x.array() += 1.0;
  if (it.s.minCoeff() <= 0.0) it.s.array() += 1.0;
  (void)n;
  return it;
}

double duality_measure(const Iterate& it, const PerturbationState& p) {
  const Vector xs = it.x + p.lambda;
  const Vector sf = it.s + p.phi;
  return xs.dot(sf) / static_cast<double>(it.x.size());
}

double relative_residual(const StandardLP& lp, const Iterate& it, const PerturbationState& p) {
  const Vector xs = it.x + p.lambda;
  const Vector sf = it.s + p.phi;
  const double mu = xs.dot(sf) / static_cast<double>(it.x.size());
  const Vector rp = lp.A * it.x - lp.b;
  const Vector rd = lp.A.transpose() * it.y + it.s - lp.c;
  const Vector rc = xs.cwiseProduct(sf).array() - mu;
  const double num =
      std::sqrt(rp.squaredNorm() + rd.squaredNorm() + rc.squaredNorm());
  return num / (1.0 + std::max(lp.b.norm(), lp.c.norm()));
}

Direction newton_direction(const StandardLP& lp, const Iterate& it, const PerturbationState& p,
                           double sigma) {
  const int m = lp.rows();
  const int n = lp.cols();
  const Vector xs = it.x + p.lambda;
  const Vector sf = it.s + p.phi;
  if (xs.minCoeff() <= 0.0 || sf.minCoeff() <= 0.0) {
    throw ContractError("newton_direction requires x + lambda > 0 and s + phi > 0");
  }
  const double mu = xs.dot(sf) / static_cast<double>(n);

  const Vector rhs1 = -(lp.A * it.x - lp.b);
  const Vector rhs2 = -(lp.A.transpose() * it.y + it.s - lp.c);
  const Vector rhs3 = -(xs.cwiseProduct(sf).array() - sigma * mu).matrix();
  const double rhs_norm =
      std::sqrt(rhs1.squaredNorm() + rhs2.squaredNorm() + rhs3.squaredNorm());
  const double tol = 1e-8 * (1.0 + rhs_norm);

  // Augmented form: [[-D, A'], [A, 0]] with D = (s+phi)./(x+lambda); the
  // third block is eliminated and dS recovered from it afterwards.
  Matrix K = Matrix::Zero(n + m, n + m);
  const Vector d = sf.cwiseQuotient(xs);
  for (int j = 0; j < n; ++j) K(j, j) = -d[j];
  K.block(n, 0, m, n) = lp.A;

  // Eliminating dS turns the second block into -D dx + A' dy = rhs2 - rhs3./(x+lambda).
  Vector g(n + m);
  g.head(n) = rhs2 - rhs3.cwiseQuotient(xs);
  g.tail(m) = rhs1;

  SymmetricIndefiniteSolver solver(K);
  Vector u = solver.solve(g);

  Direction dir;
  auto recover = [&](const Vector& uu) {
    dir.dx = uu.head(n);
    dir.dy = uu.tail(m);
    dir.ds = (rhs3 - sf.cwiseProduct(dir.dx)).cwiseQuotient(xs);
  };
  auto residual = [&]() {
    const Vector r1 = lp.A * dir.dx - rhs1;
    const Vector r2 = lp.A.transpose() * dir.dy + dir.ds - rhs2;
    const Vector r3 = sf.cwiseProduct(dir.dx) + xs.cwiseProduct(dir.ds) - rhs3;
    return std::sqrt(r1.squaredNorm() + r2.squaredNorm() + r3.squaredNorm());
  };

  recover(u);
  for (int refine = 0; refine < 2 && residual() > tol; ++refine) {
    Vector rg = g;
    rg.head(n) += d.cwiseProduct(u.head(n)) - lp.A.transpose() * u.tail(m);
    rg.tail(m) -= lp.A * u.head(n);
    u += solver.solve(rg);
    recover(u);
  }
  if (residual() > tol) {
    throw SingularError("Newton system residual " + std::to_string(residual()) +
                        " exceeds tolerance " + std::to_string(tol));
  }
  return dir;
}

StepLengths step_lengths(const Iterate& it, const Direction& dir, const PerturbationState& p,
                         double fraction) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  auto boundary = [](const Vector& v, const Vector& shift, const Vector& dv) {
    double a = kInf;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (dv[i] < 0.0) a = std::min(a, (v[i] + shift[i]) / -dv[i]);
    }
    return a;
  };
  StepLengths out;
  const double ap = boundary(it.x, p.lambda, dir.dx);
  const double ad = boundary(it.s, p.phi, dir.ds);
  out.alpha_p = std::min(1.0, fraction * ap);
  out.alpha_d = std::min(1.0, fraction * ad);
  return out;
}

PerturbationState shrink_perturbations(const Iterate& next_it, PerturbationState p) {
  const Vector xs = next_it.x + p.lambda;
  const Vector sf = next_it.s + p.phi;
  if (xs.minCoeff() <= 0.0 || sf.minCoeff() <= 0.0) {
    throw ContractError("shrink_perturbations requires x + lambda > 0 and s + phi > 0");
  }
  const double t = next_it.x.minCoeff();
  const double v = next_it.s.minCoeff();
  if (t > 0.0) {
    p.lambda *= p.eta;
  } else {
    p.lambda = (1.0 - p.zeta) * p.lambda + Vector::Constant(p.lambda.size(), p.zeta * -t);
  }
  if (v > 0.0) {
    p.phi *= p.eta;
  } else {
    p.phi = (1.0 - p.zeta) * p.phi + Vector::Constant(p.phi.size(), p.zeta * -v);
  }
  return p;
}

namespace {

void check_options(const SolveOptions& o) {
  if (o.iter_exact && (o.mu_cap || o.relres_tol)) {
    throw ContractError("iter_exact cannot be combined with mu_cap or relres_tol");
  }
  if (o.iter_exact && *o.iter_exact < 0) throw ContractError("iter_exact must be >= 0");
  if (o.step_fraction <= 0.0 || o.step_fraction >= 1.0) {
    throw ContractError("step_fraction must lie in (0, 1)");
  }
}

TraceRow make_row(int k, const Iterate& it, const PerturbationState& p, const StandardLP& lp,
                  const ActivityPartition& partition, double ap, double ad, double sigma) {
  TraceRow row;
  row.k = k;
  row.it = it;
  row.pert = p;
  row.mu = duality_measure(it, p);
  row.relres = relative_residual(lp, it, p);
  row.alpha_p = ap;
  row.alpha_d = ad;
  row.sigma = sigma;
  row.partition = partition;
  return row;
}

}  // namespace

SolveTrace solve(const StandardLP& lp, const SolveOptions& options, PerturbationState pert) {
  validate(lp);
  check_options(options);
  const int n = lp.cols();
  if (pert.lambda.size() != n || pert.phi.size() != n) {
    throw ContractError("perturbation vectors must have length n");
  }
  if (pert.lambda.minCoeff() < 0.0 || pert.phi.minCoeff() < 0.0) {
    throw ContractError("perturbations must be nonnegative");
  }

  SolveTrace trace;
  Iterate it = mehrotra_start(lp);

  ActivityPartition partition(n, options.cutoff);
  partition.seed_prev_test(threshold_test(it.x, it.s, options.cutoff));
  trace.start = make_row(0, it, pert, lp, partition, 0.0, 0.0, 0.0);

  const int last = options.iter_exact ? *options.iter_exact : options.max_iters;
  trace.status = SolveStatus::IterLimit;
  trace.reason = StopReason::MaxIters;

  for (int k = 1; k <= last; ++k) {
    const double mu = duality_measure(it, pert);
    const double sigma = std::min(options.sigma_cap, options.sigma_mu_scale * mu);

    Direction dir;
    try {
      dir = newton_direction(lp, it, pert, sigma);
    } catch (const SingularError&) {
      trace.status = SolveStatus::IllConditioned;
      trace.reason = StopReason::Failure;
      trace.failed_iteration = k;
      break;
    }

    const StepLengths alpha = step_lengths(it, dir, pert, options.step_fraction);
    it.x += alpha.alpha_p * dir.dx;
    it.y += alpha.alpha_d * dir.dy;
    it.s += alpha.alpha_d * dir.ds;
    it.k = k;

    partition = update_partition(partition, threshold_test(it.x, it.s, options.cutoff));
    trace.rows.push_back(make_row(k, it, pert, lp, partition, alpha.alpha_p, alpha.alpha_d,
                                  sigma));
    const TraceRow& row = trace.rows.back();

    if (options.iter_exact) {
      if (k == *options.iter_exact) {
        trace.status = SolveStatus::Converged;
        trace.reason = StopReason::IterExact;
        break;
      }
    } else {
      if (options.mu_cap && row.mu < *options.mu_cap) {
        trace.status = SolveStatus::Converged;
        trace.reason = StopReason::MuCap;
        break;
      }
      if (options.relres_tol && row.relres < *options.relres_tol) {
        trace.status = SolveStatus::Converged;
        trace.reason = StopReason::RelRes;
        break;
      }
    }

    pert = shrink_perturbations(it, pert);
  }

  if (options.iter_exact && trace.status != SolveStatus::IllConditioned &&
      trace.iterations() == *options.iter_exact) {
    trace.status = SolveStatus::Converged;
    trace.reason = StopReason::IterExact;
  }
  trace.final_pert = pert;
  return trace;
}

SolveTrace solve(const StandardLP& lp, const SolveOptions& options) {
  PerturbationState pert =
      options.initial_perturbation == 0.0
          ? PerturbationState::zero(lp.cols(), options.eta, options.zeta)
          : PerturbationState::uniform(lp.cols(), options.initial_perturbation, options.eta,
                                       options.zeta);
  return solve(lp, options, std::move(pert));
}

void SolveTrace::write_csv(std::ostream& out) const {
  out << "k,mu_lambda,relres,alpha_p,alpha_d,n_active,n_inactive,n_undetermined,"
         "max_lambda,max_phi\n";
  auto emit = [&out](const TraceRow& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%d,%d,%d,%.17g,%.17g\n", r.k,
                  r.mu, r.relres, r.alpha_p, r.alpha_d, r.partition.active_count(),
                  r.partition.inactive_count(), r.partition.undetermined_count(),
                  r.pert.lambda.maxCoeff(), r.pert.phi.maxCoeff());
    out << buf;
  };
  emit(start);
  for (const TraceRow& r : rows) emit(r);
}

}  // namespace pipm
