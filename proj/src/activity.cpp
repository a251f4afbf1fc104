#include "pipm/activity.hpp"

#include <sstream>

#include "pipm/errors.hpp"

namespace pipm {

std::vector<char> threshold_test(const Vector& x, const Vector& s, double cutoff) {
  if (x.size() != s.size()) throw ContractError("threshold_test: x and s sizes differ");
  std::vector<char> out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out[i] = x[i] < cutoff && s[i] > cutoff;
  }
  return out;
}

ActivityPartition::ActivityPartition(int n, double cutoff)
    : state_(n, State::Undetermined), prev_test_(n, 0), cutoff_(cutoff) {}

IndexSet ActivityPartition::collect(State s) const {
  IndexSet out;
  for (int i = 0; i < size(); ++i) {
    if (state_[i] == s) out.push_back(i);
  }
  return out;
}

int ActivityPartition::count(State s) const {
  int c = 0;
  for (const State st : state_) c += st == s;
  return c;
}

std::string ActivityPartition::to_text() const {
  std::ostringstream out;
  const auto emit = [&](const char* label, const IndexSet& set) {
    out << label << ":";
    for (const int i : set) out << " " << i;
    out << "\n";
  };
  emit("active", active_set());
  emit("inactive", inactive_set());
  emit("undetermined", undetermined_set());
  return out.str();
}

ActivityPartition update_partition(ActivityPartition state, const std::vector<char>& test_now) {
  if (static_cast<int>(test_now.size()) != state.size()) {
    throw ContractError("update_partition: test vector size mismatch");
  }
  using State = ActivityPartition::State;
  for (int i = 0; i < state.size(); ++i) {
    switch (state.state_[i]) {
      case State::Undetermined:
        state.state_[i] = (state.prev_test_[i] && test_now[i]) ? State::Active : State::Inactive;
        break;
      case State::Active:
        if (!test_now[i]) state.state_[i] = State::Undetermined;
        break;
      case State::Inactive:
        if (test_now[i]) state.state_[i] = State::Undetermined;
        break;
    }
  }
  state.prev_test_ = test_now;
  return state;
}

CutoffSets predicted_sets(const Vector& x, const Vector& s, double cutoff) {
  CutoffSets out;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] < cutoff) out.active.push_back(static_cast<int>(i));
  }
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] >= cutoff) out.strictly_active.push_back(static_cast<int>(i));
  }
  return out;
}

PredictionRatios prediction_ratios(const IndexSet& predicted, const IndexSet& actual) {
  const IndexSet both = set_intersection(predicted, actual);
  const IndexSet all = set_union(predicted, actual);
  if (all.empty()) return {0.0, 0.0, 1.0};
  const double u = static_cast<double>(all.size());
  PredictionRatios r;
  r.false_ratio = static_cast<double>(predicted.size() - both.size()) / u;
  r.missed_ratio = static_cast<double>(actual.size() - both.size()) / u;
  r.correct_ratio = static_cast<double>(both.size()) / u;
  return r;
}

}  // namespace pipm
