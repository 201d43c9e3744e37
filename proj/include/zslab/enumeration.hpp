#pragma once

#include <functional>

#include "zslab/core.hpp"
#include "zslab/report.hpp"

namespace zslab {

struct EnumOptions {
  int shard_total = 1;
  int shard_index = -1;  // -1: enumerate everything
  // Cut subtrees whose fixed residue prefix already holds an n-term zero
  // sum; emitted classes are then exactly the n-zero-free ones. Maintained
  // incrementally along the search tree.
  bool prune_n_zero_sum = false;
  // Custom hook: residues [0, assigned) of `partial` are fixed; return
  // false to cut the subtree.
  std::function<bool(const ZnSeq& partial, int assigned)> prune;
};

// Emits exactly one representative per similitude orbit of multisets of the
// given length over Z_n (canonical = lex-greatest multiplicity vector), in a
// fixed deterministic order. Work is partitioned across shards by the
// multiplicity prefix (mult[0], mult[1]); pruning is shard-independent, so
// shards tile the exact 1-shard enumeration. Returns the number of complete
// candidate vectors inspected.
long long enumerate_canonical(int n, int length, const EnumOptions& opt,
                              const std::function<void(const ZnSeq&)>& emit);

struct RunSpec {
  int shard_total = 1;
  int shard_index = -1;  // -1: run all shards and merge
  int jobs = 1;
};

// For every length L with 3n/2 - 1 < L <= 2n - 2, over all canonical
// classes: n-zero-freeness must coincide with separability, and the
// constructive decomposer must succeed on every n-zero-free class with all
// its invariants intact.
VerificationReport verify_characterization(int n, const RunSpec& run = {});

// Exhaustive minima of the top and top-two multiplicities over n-zero-free
// classes of length n-1+k, n/2 < k < n, checked against the sharp bounds
// (k or k+1 by parity, and 2k).
VerificationReport min_multiplicities(int n, int k, const RunSpec& run = {});

// Least m such that every sequence of length m with at least k distinct
// terms has an n-term zero sum; exhaustive search downward from 2n-2.
int gnk_bruteforce(int n, int k);

// 2n - 1 - floor(((k-1)/2)^2); requires n >= k and 4 <= k <= sqrt(2n-1)+1.
int gnk_formula(int n, int k);

// Brute-force g(n,k) against the known values (k = 2, 3) and the closed
// formula (4 <= k <= sqrt(2n-1)+1), plus engine checks of the lower-bound
// family instances.
VerificationReport verify_gnk(int n, const RunSpec& run = {});

// At length n-1+floor(n/2), counts separable vs non-separable n-zero-free
// classes; asserts a non-separable class exists for even n >= 6 and odd
// n >= 9, and only reports the counts otherwise.
VerificationReport boundary_survey(int n, const RunSpec& run = {});

}  // namespace zslab
