#pragma once

#include <map>
#include <optional>
#include <string>

#include "zslab/core.hpp"

namespace zslab {

// A named extremal sequence together with the properties it is claimed to
// have; callers verify the claims against the engine.
struct FamilyInstance {
  std::string family;
  ZnSeq seq = ZnSeq(1);
  std::map<std::string, int> params;

  int claimed_length = 0;
  bool claims_n_zero_free = true;
  bool claims_not_separable = false;
  std::optional<int> claimed_top1;
  std::optional<int> claimed_uv_sum;
  std::optional<int> claimed_distinct;
};

// 1^{2p-n+1} 2^{n-1-p} joined with 0^{2q-n+1} (-1)^{n-1-q}: the family where
// the combined multiplicity of 0 and 1 is exactly 2k. Requires
// (n-1)/2 <= p < n, (n-1)/2 <= q < n, p + q = n - 1 + k, 0 < k < n.
FamilyInstance gen_equality_uv(int n, int k, int p, int q);

// The sharp witnesses for the smallest possible maximum multiplicity of an
// n-zero-free sequence of length n-1+k, n/2 < k < n:
// different parity: 0^k 1^k 2^{(n-1-k)/2} (-1)^{(n-1-k)/2}, top1 = k;
// same parity:      0^{k+1} 1^{k-1} 2^{(n-k)/2} (-1)^{(n-k-2)/2}, top1 = k+1.
FamilyInstance gen_min_max_mult(int n, int k);

// n-zero-free sequences of length n-1+floor(n/2) with no separable form:
// odd n >= 9: 0^{n-1} 2^{(n-5)/2} 3^2; even n >= 6: 0^{n-1} 2^{n/2-1} 3.
FamilyInstance gen_boundary_counterexample(int n);

// Lower-bound family for g(n,k): k distinct residues, n-zero-free, length
// 2n - 2 - floor(((k-1)/2)^2). Even k >= 2 needs n >= (k^2+2k)/8 + 1;
// odd k >= 3 needs n >= (k^2+4k+3)/8 + 1.
FamilyInstance gen_gnk_lower_bound(int n, int k);

}  // namespace zslab
