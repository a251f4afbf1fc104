#pragma once

#include <vector>

#include "pipm/types.hpp"

namespace pipm {

// Entry i is true iff x_i < cutoff and s_i > cutoff (both strict).
std::vector<char> threshold_test(const Vector& x, const Vector& s, double cutoff);

// Three-way split of {0..n-1} into predicted active / predicted inactive /
// undetermined indices, driven by the threshold test with a two-consecutive
// rule before an index may enter the active set.
class ActivityPartition {
 public:
  enum class State : unsigned char { Undetermined, Active, Inactive };

  ActivityPartition() = default;
  explicit ActivityPartition(int n, double cutoff = 1e-5);

  int size() const { return static_cast<int>(state_.size()); }
  double cutoff() const { return cutoff_; }
  State state(int i) const { return state_[i]; }

  IndexSet active_set() const { return collect(State::Active); }
  IndexSet inactive_set() const { return collect(State::Inactive); }
  IndexSet undetermined_set() const { return collect(State::Undetermined); }
  int active_count() const { return count(State::Active); }
  int inactive_count() const { return count(State::Inactive); }
  int undetermined_count() const { return count(State::Undetermined); }

  const std::vector<char>& prev_test() const { return prev_test_; }
  void seed_prev_test(const std::vector<char>& test) { prev_test_ = test; }

  // Serialization: "active: i j k / inactive: ... / undetermined: ..." with
  // sorted 0-based indices.
  std::string to_text() const;

  friend ActivityPartition update_partition(ActivityPartition state,
                                            const std::vector<char>& test_now);

 private:
  IndexSet collect(State s) const;
  int count(State s) const;

  std::vector<State> state_;
  std::vector<char> prev_test_;
  double cutoff_ = 1e-5;
};

// One prediction step. Transitions are decided on the membership *before*
// the update:
//   undetermined -> active   when the test held at both k-1 and k,
//   undetermined -> inactive otherwise,
//   active       -> undetermined when the test fails now,
//   inactive     -> undetermined when the test passes now.
// prev_test is replaced by test_now.
ActivityPartition update_partition(ActivityPartition state, const std::vector<char>& test_now);

// Cut-off prediction at a single point: indices with x_i < cutoff form the
// predicted active set, indices with s_i >= cutoff the predicted strictly
// active set.
struct CutoffSets {
  IndexSet active;
  IndexSet strictly_active;
};
CutoffSets predicted_sets(const Vector& x, const Vector& s, double cutoff);

// Jaccard-style comparison of a predicted index set against an oracle one.
// false + missed + correct = 1; the empty-vs-empty case is defined as a
// perfect prediction (0, 0, 1).
struct PredictionRatios {
  double false_ratio = 0.0;
  double missed_ratio = 0.0;
  double correct_ratio = 1.0;
};
PredictionRatios prediction_ratios(const IndexSet& predicted, const IndexSet& actual);

}  // namespace pipm
