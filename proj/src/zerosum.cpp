#include "zslab/zerosum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zslab {

namespace detail {

// Cells (c, r) with fixed (r - c*value) mod n form chains along which the
// bounded update is a sliding window, so a layer costs O(max_count*n)
// regardless of the multiplicity.
void layer_zero_sum_table(std::vector<char>& table, int max_count, int n, int value, int multiplicity) {
  for (int r0 = 0; r0 < n; ++r0) {
    int last_true = -multiplicity - 1;
    int r = r0;
    for (int c = 0; c <= max_count; ++c) {
      if (table[c * n + r]) {
        last_true = c;
      } else if (last_true >= c - multiplicity) {
        table[c * n + r] = 1;
      }
      r += value;
      if (r >= n) r -= n;
    }
  }
}

std::vector<char> fresh_zero_sum_table(int max_count, int n) {
  std::vector<char> table(static_cast<std::size_t>(max_count + 1) * n, 0);
  table[0] = 1;  // empty subsequence: 0 terms, sum 0
  return table;
}

}  // namespace detail

namespace {

using detail::fresh_zero_sum_table;
using detail::layer_zero_sum_table;

void layer_value(std::vector<char>& feas, int t, int n, int value, int multiplicity) {
  layer_zero_sum_table(feas, t, n, value, multiplicity);
}

std::vector<char> fresh_table(int t, int n) { return fresh_zero_sum_table(t, n); }

void check_length_target(const ZnSeq& s, int t) {
  if (t < 0 || t > s.length())
    throw std::invalid_argument("target length " + std::to_string(t) +
                                " outside [0, " + std::to_string(s.length()) + "]");
}

}  // namespace

SumLenTable::SumLenTable(std::vector<int> terms) : terms_(std::move(terms)) {
  for (int a : terms_) {
    if (a < 1) throw std::invalid_argument("sum-length table needs positive terms, got " + std::to_string(a));
    total_ += a;
  }
  max_len_.assign(total_ + 1, -1);
  min_len_.assign(total_ + 1, -1);
  max_len_[0] = 0;
  min_len_[0] = 0;
  for (int a : terms_) {
    for (int t = total_; t >= a; --t) {
      if (max_len_[t - a] >= 0 && max_len_[t - a] + 1 > max_len_[t]) max_len_[t] = max_len_[t - a] + 1;
      if (min_len_[t - a] >= 0 && (min_len_[t] < 0 || min_len_[t - a] + 1 < min_len_[t]))
        min_len_[t] = min_len_[t - a] + 1;
    }
  }
}

bool SumLenTable::reachable(int sum) const { return sum >= 0 && sum <= total_ && max_len_[sum] >= 0; }

int SumLenTable::max_len(int sum) const {
  return (sum < 0 || sum > total_) ? -1 : max_len_[sum];
}

int SumLenTable::min_len(int sum) const {
  return (sum < 0 || sum > total_) ? -1 : min_len_[sum];
}

bool SumLenTable::query(int sum, int min_length) const { return max_len(sum) >= min_length; }

bool has_zero_sum_of_length_quick(const ZnSeq& s, int t) {
  check_length_target(s, t);
  const int n = s.modulus();
  thread_local std::vector<char> feas;
  feas.assign(static_cast<std::size_t>(t + 1) * n, 0);
  feas[0] = 1;
  for (int r = 0; r < n; ++r)
    if (s.mult(r) > 0) layer_value(feas, t, n, r, s.mult(r));
  return feas[static_cast<std::size_t>(t) * n] != 0;
}

std::optional<ZeroSubseqWitness> has_zero_sum_of_length(const ZnSeq& s, int t) {
  check_length_target(s, t);
  const int n = s.modulus();
  std::vector<int> values;
  for (int r = 0; r < n; ++r)
    if (s.mult(r) > 0) values.push_back(r);

  // one table per processed value, for back-tracking
  std::vector<std::vector<char>> stages;
  stages.reserve(values.size() + 1);
  stages.push_back(fresh_table(t, n));
  for (int v : values) {
    stages.push_back(stages.back());
    layer_value(stages.back(), t, n, v, s.mult(v));
  }
  if (!stages.back()[static_cast<std::size_t>(t) * n]) return std::nullopt;

  ZnSeq witness(n);
  int c = t, r = 0;
  for (int i = static_cast<int>(values.size()) - 1; i >= 0; --i) {
    const int v = values[i];
    const auto& prev = stages[i];
    int taken = -1;
    for (int j = 0; j <= std::min(s.mult(v), c); ++j) {
      int pr = (r - static_cast<long long>(j) * v % n + n) % n;
      if (prev[static_cast<std::size_t>(c - j) * n + pr]) {
        taken = j;
        break;
      }
    }
    if (taken < 0) throw std::logic_error("zero-sum witness reconstruction failed");
    if (taken > 0) witness.add(v, taken);
    c -= taken;
    r = (r - static_cast<long long>(taken) * v % n + n) % n;
  }
  return ZeroSubseqWitness{std::move(witness)};
}

bool is_n_zero_free(const ZnSeq& s) {
  if (s.length() < s.modulus()) return true;
  return !has_zero_sum_of_length_quick(s, s.modulus());
}

bool is_zero_free(const ZnSeq& s) {
  const int n = s.modulus();
  if (s.mult(0) > 0) return false;
  // residues reachable as nonempty subsequence sums
  std::vector<char> reach(n, 0), snap(n);
  for (int r = 1; r < n; ++r) {
    if (s.mult(r) == 0) continue;
    snap = reach;
    int jr = 0;
    for (int j = 1; j <= s.mult(r); ++j) {
      jr += r;
      if (jr >= n) jr -= n;
      if (jr == 0) return false;
      reach[jr] = 1;
      for (int x = 1; x < n; ++x) {
        if (!snap[x]) continue;
        int y = x + jr;
        if (y >= n) y -= n;
        if (y == 0) return false;
        reach[y] = 1;
      }
    }
  }
  return true;
}

ZeroSubseqWitness max_nonzero_zero_subsequence(const ZnSeq& s) {
  const int n = s.modulus();
  std::vector<int> values;
  for (int r = 1; r < n; ++r)
    if (s.mult(r) > 0) values.push_back(r);

  // dp[r] = max term count over sub-multisets of processed values with sum r
  const int UNSET = -1;
  std::vector<std::vector<int>> stages;
  stages.reserve(values.size() + 1);
  stages.emplace_back(n, UNSET);
  stages.back()[0] = 0;
  for (int v : values) {
    const auto& prev = stages.back();
    std::vector<int> next(prev);
    for (int r = 0; r < n; ++r) {
      long long shift = 0;
      for (int j = 1; j <= s.mult(v); ++j) {
        shift += v;
        int pr = static_cast<int>((r - shift % n + n) % n);
        if (prev[pr] != UNSET && prev[pr] + j > next[r]) next[r] = prev[pr] + j;
      }
    }
    stages.push_back(std::move(next));
  }

  ZnSeq witness(n);
  int r = 0, want = stages.back()[0];
  for (int i = static_cast<int>(values.size()) - 1; i >= 0; --i) {
    const int v = values[i];
    const auto& prev = stages[i];
    int taken = -1;
    for (int j = 0; j <= std::min(s.mult(v), want); ++j) {
      int pr = (r - static_cast<long long>(j) * v % n + n) % n;
      if (prev[pr] == want - j) {
        taken = j;
        break;
      }
    }
    if (taken < 0) throw std::logic_error("max zero-sum witness reconstruction failed");
    if (taken > 0) witness.add(v, taken);
    want -= taken;
    r = (r - static_cast<long long>(taken) * v % n + n) % n;
  }
  return ZeroSubseqWitness{std::move(witness)};
}

bool gao_property_holds(const ZnSeq& s) {
  const int n = s.modulus();
  for (int r = 1; r < n; ++r)
    if (s.mult(r) > s.mult(0))
      throw std::invalid_argument("multiplicity of " + std::to_string(r) + " (" +
                                  std::to_string(s.mult(r)) + ") exceeds multiplicity of 0 (" +
                                  std::to_string(s.mult(0)) + ")");
  const int len = s.length();
  if (len <= n) return true;
  std::vector<char> feas = fresh_table(len, n);
  for (int r = 0; r < n; ++r)
    if (s.mult(r) > 0) layer_value(feas, len, n, r, s.mult(r));
  for (int c = n + 1; c <= len; ++c)
    for (int r = 0; r < n; ++r)
      if (feas[static_cast<std::size_t>(c) * n + r] && !feas[static_cast<std::size_t>(n) * n + r])
        return false;
  return true;
}

}  // namespace zslab
