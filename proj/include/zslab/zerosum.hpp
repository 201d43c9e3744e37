#pragma once

#include <optional>
#include <vector>

#include "zslab/core.hpp"

namespace zslab {

struct ZeroSubseqWitness {
  ZnSeq subseq;
  int length() const { return subseq.length(); }
};

// Subsequence-sum facts for a sequence of positive integers: for every
// achievable sum, the maximum (and minimum) subsequence length achieving it.
class SumLenTable {
 public:
  explicit SumLenTable(std::vector<int> terms);

  int size() const { return static_cast<int>(terms_.size()); }
  int total() const { return total_; }
  const std::vector<int>& terms() const { return terms_; }

  bool reachable(int sum) const;
  int max_len(int sum) const;  // -1 when unreachable
  int min_len(int sum) const;
  // sum achievable by a subsequence of length >= min_length?
  bool query(int sum, int min_length) const;

 private:
  std::vector<int> terms_;
  int total_ = 0;
  std::vector<int> max_len_, min_len_;
};

inline SumLenTable build_sum_len_table(std::vector<int> terms) {
  return SumLenTable(std::move(terms));
}

// Witness subsequence of length exactly t and sum 0 mod n, if any.
// Requires 0 <= t <= |s|.
std::optional<ZeroSubseqWitness> has_zero_sum_of_length(const ZnSeq& s, int t);

// Feasibility only; no witness, no steady-state allocation.
bool has_zero_sum_of_length_quick(const ZnSeq& s, int t);

// No subsequence of length exactly n sums to zero. Vacuously true when
// |s| < n.
bool is_n_zero_free(const ZnSeq& s);

// No nonempty subsequence sums to zero.
bool is_zero_free(const ZnSeq& s);

// A maximum-length zero-sum subsequence using only nonzero terms
// (the empty sequence when none exists).
ZeroSubseqWitness max_nonzero_zero_subsequence(const ZnSeq& s);

// Requires mult(0) >= mult(r) for every r. Checks that every subsequence
// sum achieved at some length above n is also achieved at length exactly n.
// A theorem guarantees true; exposed as a falsification-style checker.
bool gao_property_holds(const ZnSeq& s);

namespace detail {

// (max_count+1) x n boolean table; cell [c*n + r] marks a c-term sub-multiset
// with sum r. Starts with only the empty subsequence.
std::vector<char> fresh_zero_sum_table(int max_count, int n);

// Bounded-knapsack layer adding `multiplicity` copies of `value`; O(max_count*n).
void layer_zero_sum_table(std::vector<char>& table, int max_count, int n, int value, int multiplicity);

}  // namespace detail

}  // namespace zslab
