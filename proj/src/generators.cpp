#include "pipm/generators.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "pipm/errors.hpp"
#include "pipm/rng.hpp"

namespace pipm {
namespace {

struct Dims {
  int m, n;
  double density;
};

Dims draw_dims(Rng& rng, const GeneratorLimits& lim) {
  const int m = rng.uniform_int(lim.m_min, lim.m_max);
  const int n_lo = std::max(lim.n_min, 2 * m + 1);
  const int n_hi = std::min(lim.n_max, 7 * m - 1);
  if (n_lo > n_hi) throw ContractError("generator limits admit no n with 2m < n < 7m");
  const int n = rng.uniform_int(n_lo, n_hi);
  const double density = rng.uniform(lim.density_min, lim.density_max);
  return {m, n, density};
}

Matrix draw_matrix(Rng& rng, int m, int n, double density) {
  Matrix A = Matrix::Zero(m, n);
  for (int i = 0; i < m; ++i) {
    bool nonzero = false;
    while (!nonzero) {
      for (int j = 0; j < n; ++j) {
        A(i, j) = rng.bernoulli(density) ? rng.sign() * rng.uniform01() : 0.0;
        nonzero = nonzero || A(i, j) != 0.0;
      }
    }
  }
  return A;
}

Vector draw_sparse_nonneg(Rng& rng, int n, double density) {
  Vector v = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (rng.bernoulli(density)) v[i] = rng.uniform01();
  }
  return v;
}

GeneratedInstance finish(Rng& rng, Matrix A, Vector x, Vector s, std::uint64_t seed,
                         double density, InstanceKind kind) {
  const int m = static_cast<int>(A.rows());
  Vector y(m);
  for (int i = 0; i < m; ++i) y[i] = rng.uniform01();

  GeneratedInstance inst;
  inst.lp.A = std::move(A);
  inst.lp.b = inst.lp.A * x;
  inst.lp.c = inst.lp.A.transpose() * y + s;
  inst.x = std::move(x);
  inst.y = std::move(y);
  inst.s = std::move(s);
  inst.kind = kind;
  inst.seed = seed;
  inst.density = density;
  validate(inst.lp);
  return inst;
}

}  // namespace

GeneratedInstance generate_feasible_instance(std::uint64_t seed, const GeneratorLimits& lim) {
  Rng rng(seed);
  const Dims d = draw_dims(rng, lim);
  Matrix A = draw_matrix(rng, d.m, d.n, d.density);
  Vector x = draw_sparse_nonneg(rng, d.n, 0.5);
  Vector s = draw_sparse_nonneg(rng, d.n, 0.5);
  return finish(rng, std::move(A), std::move(x), std::move(s), seed, d.density,
                InstanceKind::FeasiblePoint);
}

GeneratedInstance generate_degenerate_instance(std::uint64_t seed, const GeneratorLimits& lim) {
  Rng rng(seed);
  const Dims d = draw_dims(rng, lim);
  Matrix A = draw_matrix(rng, d.m, d.n, d.density);

  // Disjoint supports: nnz(x) < m and nnz(s) < n - m, leaving the remaining
  // indices zero in both vectors.
  const int nx = rng.uniform_int(1, d.m - 1);
  const int ns = rng.uniform_int(1, d.n - d.m - 1);
  std::vector<int> perm(d.n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = d.n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  }
  Vector x = Vector::Zero(d.n);
  Vector s = Vector::Zero(d.n);
  for (int i = 0; i < nx; ++i) x[perm[i]] = rng.uniform01();
  for (int i = 0; i < ns; ++i) s[perm[nx + i]] = rng.uniform01();
  return finish(rng, std::move(A), std::move(x), std::move(s), seed, d.density,
                InstanceKind::DegenerateSolution);
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* kind_name(InstanceKind k) {
  return k == InstanceKind::FeasiblePoint ? "feasible" : "degenerate";
}

void write_vector(std::ostream& out, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out << fmt(v[i]) << "\n";
}

Vector read_vector(std::istream& in, int n, const char* what) {
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    if (!(in >> v[i])) throw Error(std::string("instance file truncated in ") + what);
  }
  return v;
}

}  // namespace

void write_instance(std::ostream& out, const GeneratedInstance& inst) {
  const int m = inst.lp.rows();
  const int n = inst.lp.cols();
  out << m << " " << n << " " << fmt(inst.density) << " " << inst.seed << " "
      << kind_name(inst.kind) << "\n";
  int nnz = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (inst.lp.A(i, j) != 0.0) ++nnz;
    }
  }
  out << nnz << "\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (inst.lp.A(i, j) != 0.0) out << i << " " << j << " " << fmt(inst.lp.A(i, j)) << "\n";
    }
  }
  write_vector(out, inst.lp.b);
  write_vector(out, inst.lp.c);
  write_vector(out, inst.x);
  write_vector(out, inst.y);
  write_vector(out, inst.s);
}

GeneratedInstance read_instance(std::istream& in) {
  GeneratedInstance inst;
  int m, n;
  std::string kind;
  if (!(in >> m >> n >> inst.density >> inst.seed >> kind)) {
    throw Error("instance file has a malformed header");
  }
  if (kind == "feasible") {
    inst.kind = InstanceKind::FeasiblePoint;
  } else if (kind == "degenerate") {
    inst.kind = InstanceKind::DegenerateSolution;
  } else {
    throw Error("unknown instance kind '" + kind + "'");
  }
  int nnz;
  if (!(in >> nnz) || nnz < 0) throw Error("instance file has a bad triple count");
  inst.lp.A = Matrix::Zero(m, n);
  for (int t = 0; t < nnz; ++t) {
    int i, j;
    double v;
    if (!(in >> i >> j >> v) || i < 0 || i >= m || j < 0 || j >= n) {
      throw Error("instance file has a bad COO triple");
    }
    inst.lp.A(i, j) = v;
  }
  inst.lp.b = read_vector(in, m, "b");
  inst.lp.c = read_vector(in, n, "c");
  inst.x = read_vector(in, n, "x");
  inst.y = read_vector(in, m, "y");
  inst.s = read_vector(in, n, "s");
  validate(inst.lp);
  return inst;
}

void save_instance(const std::string& path, const GeneratedInstance& inst) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_instance(out, inst);
}

GeneratedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  return read_instance(in);
}

}  // namespace pipm
