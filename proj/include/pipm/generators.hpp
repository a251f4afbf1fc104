#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pipm/lp.hpp"

namespace pipm {

enum class InstanceKind {
  FeasiblePoint,        // witness (x, y, s) is primal-dual feasible
  DegenerateSolution,   // witness is a complementary, degenerate solution
};

// A generated problem together with the witness point that defined b and c.
struct GeneratedInstance {
  StandardLP lp;
  Vector x, y, s;
  InstanceKind kind = InstanceKind::FeasiblePoint;
  std::uint64_t seed = 0;
  double density = 0.0;
};

// Size and density ranges for the generators. Defaults realize the open
// intervals m in (10,200), n in (20,500) with 2m < n < 7m, density in
// (0.4, 0.8) as inclusive integer / half-open real ranges.
struct GeneratorLimits {
  int m_min = 11;
  int m_max = 199;
  int n_min = 21;
  int n_max = 499;
  double density_min = 0.4;
  double density_max = 0.8;
};

// Draws A of the drawn density (entries sign * uniform(0,1), no zero rows),
// a witness x >= 0, s >= 0 of density about 0.5 and dense y, then sets
// b = A x and c = A'y + s so the witness is a feasible point. Deterministic
// per seed.
GeneratedInstance generate_feasible_instance(std::uint64_t seed, const GeneratorLimits& lim = {});

// As above, but the witness is complementary (x .* s = 0 exactly) with
// nnz(x) < m and nnz(s) < n - m, making it a primal-dual degenerate
// solution of the generated problem.
GeneratedInstance generate_degenerate_instance(std::uint64_t seed, const GeneratorLimits& lim = {});

// Plain-text round-trip: header "m n density seed kind", one line with the
// triple count, COO triples of A, then b, c, x, y, s one value per line.
void write_instance(std::ostream& out, const GeneratedInstance& inst);
GeneratedInstance read_instance(std::istream& in);
void save_instance(const std::string& path, const GeneratedInstance& inst);
GeneratedInstance load_instance(const std::string& path);

}  // namespace pipm
