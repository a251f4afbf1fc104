#include "pipm/mps.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pipm/errors.hpp"

namespace pipm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowType { Objective, Less, Greater, Equal };

struct RawRow {
  std::string name;
  RowType type = RowType::Equal;
  double rhs = 0.0;
  bool has_range = false;
  double range = 0.0;
  std::vector<std::pair<int, double>> entries;  // (variable index, coefficient)
  bool dropped = false;
};

struct RawVar {
  std::string name;
  double cost = 0.0;
  double lb = 0.0;
  double ub = kInf;
  bool dropped = false;
  std::vector<std::pair<int, double>> entries;  // (row index, coefficient)
};

struct RawProblem {
  std::vector<RawRow> rows;  // constraint rows only
  std::vector<RawVar> vars;
  double objective_offset = 0.0;
};

double parse_value(const std::string& tok, int line) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == nullptr || *end != '\0' || !std::isfinite(v)) {
    throw ParseError("bad numeric value '" + tok + "'", line);
  }
  return v;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

class MpsReader {
 public:
  explicit MpsReader(const std::string& path) : path_(path) {}

  RawProblem read() {
    std::ifstream in(path_);
    if (!in) throw Error("cannot open MPS file: " + path_);

    std::string line;
    std::string section;
    while (std::getline(in, line)) {
      ++lineno_;
      if (line.empty() || line[0] == '*') continue;
      if (!std::isspace(static_cast<unsigned char>(line[0]))) {
        section = header_keyword(line);
        if (section == "ENDATA") break;
        continue;
      }
      const auto toks = tokenize(line);
      if (toks.empty()) continue;
      if (section == "ROWS") {
        parse_row(toks);
      } else if (section == "COLUMNS") {
        parse_column(toks);
      } else if (section == "RHS") {
        parse_rhs(toks);
      } else if (section == "RANGES") {
        parse_range(toks);
      } else if (section == "BOUNDS") {
        parse_bound(toks);
      } else if (section == "NAME" || section == "OBJSENSE") {
        throw ParseError("data line outside a data section", lineno_);
      } else {
        throw ParseError("data line before any section header", lineno_);
      }
    }
    if (!seen_objective_) throw ParseError("no objective (N) row", lineno_);
    if (problem_.vars.empty()) throw ParseError("no COLUMNS data", lineno_);
    return std::move(problem_);
  }

 private:
  std::string header_keyword(const std::string& line) {
    const auto toks = tokenize(line);
    const std::string& kw = toks.front();
    if (kw == "NAME" || kw == "ROWS" || kw == "COLUMNS" || kw == "RHS" || kw == "RANGES" ||
        kw == "BOUNDS" || kw == "ENDATA" || kw == "OBJSENSE") {
      return kw;
    }
    throw ParseError("unknown section '" + kw + "'", lineno_);
  }

  void parse_row(const std::vector<std::string>& toks) {
    if (toks.size() != 2) throw ParseError("ROWS line needs a type and a name", lineno_);
    const std::string& name = toks[1];
    RowType type;
    switch (std::toupper(static_cast<unsigned char>(toks[0][0]))) {
      case 'N':
        type = RowType::Objective;
        break;
      case 'L':
        type = RowType::Less;
        break;
      case 'G':
        type = RowType::Greater;
        break;
      case 'E':
        type = RowType::Equal;
        break;
      default:
        throw ParseError("unknown row type '" + toks[0] + "'", lineno_);
    }
    if (type == RowType::Objective) {
      if (!seen_objective_) {
        seen_objective_ = true;
        objective_name_ = name;
      }
      // Further N rows are free rows; their coefficients are discarded.
      free_rows_.insert(name);
      return;
    }
    if (row_index_.count(name)) throw ParseError("duplicate row '" + name + "'", lineno_);
    row_index_[name] = static_cast<int>(problem_.rows.size());
    problem_.rows.push_back(RawRow{name, type, 0.0, false, 0.0, {}, false});
  }

  void parse_column(const std::vector<std::string>& toks) {
    if (toks.size() >= 3 && toks[1].find("MARKER") != std::string::npos) {
      throw ParseError("integer markers are not supported", lineno_);
    }
    if (toks.size() < 3 || toks.size() % 2 == 0) {
      throw ParseError("COLUMNS line needs a column and (row, value) pairs", lineno_);
    }
    const std::string& col = toks[0];
    int j;
    auto it = var_index_.find(col);
    if (it == var_index_.end()) {
      j = static_cast<int>(problem_.vars.size());
      var_index_[col] = j;
      problem_.vars.push_back(RawVar{col, 0.0, 0.0, kInf, false, {}});
    } else {
      j = it->second;
    }
    for (size_t t = 1; t + 1 < toks.size(); t += 2) {
      const double v = parse_value(toks[t + 1], lineno_);
      if (toks[t] == objective_name_) {
        problem_.vars[j].cost += v;
        continue;
      }
      if (free_rows_.count(toks[t])) continue;
      auto rit = row_index_.find(toks[t]);
      if (rit == row_index_.end()) throw ParseError("unknown row '" + toks[t] + "'", lineno_);
      problem_.rows[rit->second].entries.emplace_back(j, v);
      problem_.vars[j].entries.emplace_back(rit->second, v);
    }
  }

  void parse_rhs(const std::vector<std::string>& toks) {
    if (toks.size() < 3 || toks.size() % 2 == 0) {
      throw ParseError("RHS line needs a set name and (row, value) pairs", lineno_);
    }
    for (size_t t = 1; t + 1 < toks.size(); t += 2) {
      const double v = parse_value(toks[t + 1], lineno_);
      if (toks[t] == objective_name_) {
        // An RHS entry on the objective row is the negated constant term.
        problem_.objective_offset -= v;
        continue;
      }
      if (free_rows_.count(toks[t])) continue;
      auto rit = row_index_.find(toks[t]);
      if (rit == row_index_.end()) throw ParseError("unknown row '" + toks[t] + "'", lineno_);
      problem_.rows[rit->second].rhs = v;
    }
  }

  void parse_range(const std::vector<std::string>& toks) {
    if (toks.size() < 3 || toks.size() % 2 == 0) {
      throw ParseError("RANGES line needs a set name and (row, value) pairs", lineno_);
    }
    for (size_t t = 1; t + 1 < toks.size(); t += 2) {
      const double v = parse_value(toks[t + 1], lineno_);
      auto rit = row_index_.find(toks[t]);
      if (rit == row_index_.end()) throw ParseError("unknown row '" + toks[t] + "'", lineno_);
      RawRow& row = problem_.rows[rit->second];
      if (row.type == RowType::Objective) throw ParseError("range on objective row", lineno_);
      row.has_range = true;
      row.range = v;
    }
  }

  void parse_bound(const std::vector<std::string>& toks) {
    if (toks.size() < 3) throw ParseError("BOUNDS line too short", lineno_);
    const std::string& kind = toks[0];
    const std::string& col = toks[2];
    auto it = var_index_.find(col);
    if (it == var_index_.end()) throw ParseError("unknown column '" + col + "'", lineno_);
    RawVar& var = problem_.vars[it->second];
    if (kind == "FR") {
      var.lb = -kInf;
      var.ub = kInf;
      return;
    }
    if (toks.size() < 4) throw ParseError("bound '" + kind + "' needs a value", lineno_);
    const double v = parse_value(toks[3], lineno_);
    if (kind == "UP") {
      if (v < 0.0 && var.lb == 0.0) {
        throw ParseError("negative UP bound with default lower bound", lineno_);
      }
      var.ub = v;
    } else if (kind == "LO") {
      var.lb = v;
    } else if (kind == "FX") {
      var.lb = var.ub = v;
    } else {
      throw ParseError("unsupported bound type '" + kind + "'", lineno_);
    }
  }

  std::string path_;
  int lineno_ = 0;
  bool seen_objective_ = false;
  std::string objective_name_;
  std::unordered_map<std::string, int> row_index_;
  std::unordered_map<std::string, int> var_index_;
  std::unordered_set<std::string> free_rows_;
  RawProblem problem_;
};

int live_entry_count(const RawProblem& p, const RawRow& row) {
  int n = 0;
  for (const auto& [j, v] : row.entries) {
    if (!p.vars[j].dropped && v != 0.0) ++n;
  }
  return n;
}

// Drops coefficient-free rows (after checking they cannot cut anything off)
// and substitutes out variables pinned by singleton equality rows. Repeats
// until stable so a substitution that empties another row is handled too.
void clean_rows(RawProblem& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& row : p.rows) {
      if (row.dropped) continue;
      const int live = live_entry_count(p, row);
      if (live == 0) {
        const double lo = row.type == RowType::Less ? -kInf
                          : row.has_range           ? std::min(row.rhs, row.rhs + row.range)
                                                    : row.rhs;
        const double hi = row.type == RowType::Greater ? kInf
                          : row.has_range ? std::max(row.rhs, row.rhs + row.range)
                          : row.type == RowType::Less ? row.rhs
                                                      : row.rhs;
        const double tol = 1e-12 * (1.0 + std::abs(row.rhs));
        if (lo > tol || hi < -tol) {
          throw InfeasibleError("row '" + row.name + "' has no coefficients but nonzero bounds");
        }
        row.dropped = true;
        changed = true;
        continue;
      }
      if (live == 1 && row.type == RowType::Equal && !row.has_range) {
        int j = -1;
        double a = 0.0;
        for (const auto& [jj, vv] : row.entries) {
          if (!p.vars[jj].dropped && vv != 0.0) {
            j = jj;
            a = vv;
          }
        }
        RawVar& var = p.vars[j];
        const double v = row.rhs / a;
        const double tol = 1e-9 * (1.0 + std::abs(v));
        if (v < var.lb - tol || v > var.ub + tol) {
          throw InfeasibleError("row '" + row.name + "' pins variable '" + var.name +
                                "' outside its bounds");
        }
        // Substitute x_j = v everywhere and retire both row and variable.
        for (const auto& [ri, coeff] : var.entries) {
          if (p.rows[ri].dropped || &p.rows[ri] == &row) continue;
          p.rows[ri].rhs -= coeff * v;
        }
        p.objective_offset += var.cost * v;
        var.dropped = true;
        row.dropped = true;
        changed = true;
      }
    }
  }
}

struct Builder {
  std::vector<std::string> col_names;
  std::vector<double> cost;
  std::vector<double> lb;
  std::vector<double> ub;
  std::vector<std::vector<std::pair<int, double>>> cols;  // (row, coeff)
  std::vector<std::string> row_names;
  std::vector<double> rhs;

  int add_var(const std::string& name, double c, double l, double u) {
    col_names.push_back(name);
    cost.push_back(c);
    lb.push_back(l);
    ub.push_back(u);
    cols.emplace_back();
    return static_cast<int>(cols.size()) - 1;
  }

  int add_row(const std::string& name, double b) {
    row_names.push_back(name);
    rhs.push_back(b);
    return static_cast<int>(rhs.size()) - 1;
  }
};

StandardLP assemble(RawProblem& p) {
  Builder bld;

  // Surviving original variables, in file order.
  std::vector<int> var_map(p.vars.size(), -1);
  for (size_t j = 0; j < p.vars.size(); ++j) {
    if (p.vars[j].dropped) continue;
    var_map[j] = bld.add_var(p.vars[j].name, p.vars[j].cost, p.vars[j].lb, p.vars[j].ub);
  }

  // Every surviving row becomes an equality; inequality and ranged rows get
  // a slack column (ranged slacks carry an upper bound, folded below).
  std::vector<int> row_map(p.rows.size(), -1);
  for (size_t i = 0; i < p.rows.size(); ++i) {
    RawRow& row = p.rows[i];
    if (row.dropped) continue;
    double lo, hi;
    switch (row.type) {
      case RowType::Less:
        lo = row.has_range ? row.rhs - std::abs(row.range) : -kInf;
        hi = row.rhs;
        break;
      case RowType::Greater:
        lo = row.rhs;
        hi = row.has_range ? row.rhs + std::abs(row.range) : kInf;
        break;
      default:
        if (row.has_range) {
          lo = std::min(row.rhs, row.rhs + row.range);
          hi = std::max(row.rhs, row.rhs + row.range);
        } else {
          lo = hi = row.rhs;
        }
        break;
    }
    int r;
    if (lo == hi) {
      r = bld.add_row(row.name, lo);
    } else if (hi == kInf) {  // a'x >= lo:  a'x - w = lo
      r = bld.add_row(row.name, lo);
      const int w = bld.add_var("sl:" + row.name, 0.0, 0.0, kInf);
      bld.cols[w].emplace_back(r, -1.0);
    } else {  // a'x <= hi, maybe with a finite lo:  a'x + w = hi, 0 <= w <= hi-lo
      r = bld.add_row(row.name, hi);
      const int w = bld.add_var("sl:" + row.name, 0.0, 0.0, lo == -kInf ? kInf : hi - lo);
      bld.cols[w].emplace_back(r, 1.0);
    }
    row_map[i] = r;
    for (const auto& [j, v] : row.entries) {
      if (var_map[j] < 0 || v == 0.0) continue;
      bld.cols[var_map[j]].emplace_back(r, v);
    }
  }

  double offset = p.objective_offset;

  // Fold bounds so that every remaining variable has lb = 0, ub = inf.
  const int first_pass_vars = static_cast<int>(bld.cols.size());
  for (int j = 0; j < first_pass_vars; ++j) {
    if (bld.lb[j] == -kInf && bld.ub[j] == kInf) {
      // Free: split into x+ - x-.
      const int neg = bld.add_var(bld.col_names[j] + "-", -bld.cost[j], 0.0, kInf);
      bld.col_names[j] += "+";
      for (const auto& [r, v] : bld.cols[j]) bld.cols[neg].emplace_back(r, -v);
      bld.lb[j] = 0.0;
      continue;
    }
    if (bld.lb[j] == -kInf) {
      // Upper bound only: reflect, x = ub - t with t >= 0.
      for (auto& [r, v] : bld.cols[j]) {
        bld.rhs[r] -= v * bld.ub[j];
        v = -v;
      }
      offset += bld.cost[j] * bld.ub[j];
      bld.cost[j] = -bld.cost[j];
      bld.col_names[j] += ":refl";
      bld.lb[j] = 0.0;
      bld.ub[j] = kInf;
      continue;
    }
    if (bld.lb[j] != 0.0) {
      // Shift to a zero lower bound.
      for (const auto& [r, v] : bld.cols[j]) bld.rhs[r] -= v * bld.lb[j];
      offset += bld.cost[j] * bld.lb[j];
      if (bld.ub[j] != kInf) bld.ub[j] -= bld.lb[j];
      bld.lb[j] = 0.0;
    }
    if (bld.ub[j] != kInf) {
      if (bld.ub[j] < 0.0) {
        throw InfeasibleError("variable '" + bld.col_names[j] + "' has empty bound interval");
      }
      // x + w = ub with a fresh slack row.
      const int r = bld.add_row("ub:" + bld.col_names[j], bld.ub[j]);
      const int w = bld.add_var("ub:" + bld.col_names[j], 0.0, 0.0, kInf);
      bld.cols[j].emplace_back(r, 1.0);
      bld.cols[w].emplace_back(r, 1.0);
      bld.ub[j] = kInf;
    }
  }

  const int m = static_cast<int>(bld.rhs.size());
  const int n = static_cast<int>(bld.cols.size());
  StandardLP lp;
  lp.A = Matrix::Zero(m, n);
  lp.b = Eigen::Map<const Vector>(bld.rhs.data(), m);
  lp.c = Vector::Zero(n);
  for (int j = 0; j < n; ++j) {
    lp.c[j] = bld.cost[j];
    for (const auto& [r, v] : bld.cols[j]) lp.A(r, j) += v;
  }
  lp.objective_offset = offset;
  lp.row_names = std::move(bld.row_names);
  lp.col_names = std::move(bld.col_names);
  validate(lp);
  return lp;
}

}  // namespace

StandardLP load_mps(const std::string& path) {
  MpsReader reader(path);
  RawProblem raw = reader.read();
  clean_rows(raw);
  return assemble(raw);
}

}  // namespace pipm
