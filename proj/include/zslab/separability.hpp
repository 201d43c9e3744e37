#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zslab/core.hpp"

namespace zslab {

// Witness that a sequence g splits, after an affine map, into alpha and beta
// with L(alpha) < n and L(1-beta) < n. Then alpha has no zero term and beta
// has no term equal to 1.
struct Decomposition {
  AffineMap map;  // applied to the original sequence
  ZnSeq alpha;
  ZnSeq beta;

  ZnSeq unioned() const { return alpha + beta; }
};

struct MultStats {
  int u = 0;        // multiplicity of residue 1
  int v = 0;        // multiplicity of residue 0
  int top1 = 0;     // largest multiplicity
  int top2sum = 0;  // sum of the two largest multiplicities
  int k = 0;        // length - (n - 1)
};

// Split s itself (no affine map) into (alpha, beta) with L(alpha) < n and
// L(1-beta) < n, if possible. Decided by a DP over achievable alpha-cost
// totals tracking the minimal complementary beta cost.
std::optional<std::pair<ZnSeq, ZnSeq>> is_separable_fixed(const ZnSeq& s);

// Search the full affine orbit (ascending a, then b) and return the first
// image that splits.
std::optional<Decomposition> is_separable(const ZnSeq& s);

// Intermediate state of the constructive decomposition, for auditing.
// sigma and tau are in the coordinates of the final map; sigma is a
// maximum-length zero-sum subsequence with nonzero terms, tau the remaining
// nonzero terms (zero-free, with lpr sum below n).
struct ProofTrace {
  AffineMap translate;
  int unit = 1;
  ZnSeq sigma;
  ZnSeq tau;
  int zeros = 0;          // multiplicity v of 0 after translation
  int ones_in_sigma = 0;  // w

  ProofTrace() : translate(AffineMap::identity(1)), sigma(1), tau(1) {}
  // The bound the construction guarantees: w equals the sum of lpr(-b) over
  // non-1 terms b of sigma, and L(tau) plus that sum stays below n.
  bool consistent() const;
};

// Constructive decomposition for long n-zero-free sequences:
// translate a maximum-multiplicity term to 0, strip a maximum zero-sum
// subsequence sigma from the nonzero part, normalize the zero-free rest tau
// by the smallest unit c with L(c*tau) < n, and assemble
// alpha = 1^w tau', beta = 0^v {non-1 terms of sigma'}.
// Requires |s| > 3n/2 - 1 and s n-zero-free; internal inconsistencies throw
// logic_error with a state dump.
Decomposition decompose_via_proof(const ZnSeq& s, ProofTrace* trace = nullptr);

bool decomposition_valid(const Decomposition& d);
bool decomposition_matches(const ZnSeq& original, const Decomposition& d);

// The x -> 1-x view of a decomposition: still decomposes the same original
// sequence, with the multiplicities of 0 and 1 interchanged in the union.
Decomposition flip_decomposition(const Decomposition& d);

struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DecompositionProperties {
  std::vector<PropertyCheck> checks;
  MultStats stats;
  bool uv_equality = false;           // u + v == 2k
  bool uv_equality_shape = false;     // matches 1^{2p-n+1}2^{n-1-p} / 0^{2q-n+1}(-1)^{n-1-q}
  bool maxuv_equality = false;        // max(u, v) == k
  bool maxuv_equality_shape = false;  // matches 1^k 2^{(n-1-k)/2} / 0^k (-1)^{(n-1-k)/2}

  bool all_pass() const;
  std::string first_failure() const;
};

// Checks every structural consequence of a valid decomposition of length
// n-1+k: the union is n-zero-free; k <= |alpha| < n and k <= |beta| < n;
// lpr(b) - lpr(a) >= k for all pairs (so alpha and beta are disjoint);
// u+v >= 2k, max(u,v) >= k, min(u,v) >= 2k-n+1 with equality-shape
// detection; and for 2k >= n-1 the top multiplicity equals max(u, v).
DecompositionProperties verify_decomposition_properties(const Decomposition& d, int k);

MultStats mult_stats(const ZnSeq& s);

}  // namespace zslab
