#include "zslab/extremal.hpp"

#include <stdexcept>
#include <string>

namespace zslab {

namespace {

[[noreturn]] void reject(const std::string& family, const std::string& violated) {
  throw std::invalid_argument(family + ": constraint violated: " + violated);
}

void add_block(ZnSeq& s, int residue, int count) {
  if (count > 0) s.add(residue, count);
}

}  // namespace

FamilyInstance gen_equality_uv(int n, int k, int p, int q) {
  if (n < 2) reject("equality-uv", "n >= 2");
  if (k <= 0 || k >= n) reject("equality-uv", "0 < k < n");
  if (2 * p < n - 1) reject("equality-uv", "(n-1)/2 <= p");
  if (p >= n) reject("equality-uv", "p < n");
  if (2 * q < n - 1) reject("equality-uv", "(n-1)/2 <= q");
  if (q >= n) reject("equality-uv", "q < n");
  if (p + q != n - 1 + k) reject("equality-uv", "p + q = n - 1 + k");

  ZnSeq s(n);
  add_block(s, 1, 2 * p - n + 1);
  add_block(s, 2, n - 1 - p);
  add_block(s, 0, 2 * q - n + 1);
  add_block(s, -1, n - 1 - q);

  FamilyInstance fi;
  fi.family = "equality-uv";
  fi.seq = std::move(s);
  fi.params = {{"n", n}, {"k", k}, {"p", p}, {"q", q}};
  fi.claimed_length = n - 1 + k;
  fi.claimed_uv_sum = 2 * k;
  return fi;
}

FamilyInstance gen_min_max_mult(int n, int k) {
  if (n < 2) reject("min-max-mult", "n >= 2");
  if (2 * k <= n) reject("min-max-mult", "n/2 < k");
  if (k >= n) reject("min-max-mult", "k < n");

  ZnSeq s(n);
  int top1;
  if ((n - k) % 2 == 1) {
    add_block(s, 0, k);
    add_block(s, 1, k);
    add_block(s, 2, (n - 1 - k) / 2);
    add_block(s, -1, (n - 1 - k) / 2);
    top1 = k;
  } else {
    add_block(s, 0, k + 1);
    add_block(s, 1, k - 1);
    add_block(s, 2, (n - k) / 2);
    add_block(s, -1, (n - k - 2) / 2);
    top1 = k + 1;
  }

  FamilyInstance fi;
  fi.family = "min-max-mult";
  fi.seq = std::move(s);
  fi.params = {{"n", n}, {"k", k}};
  fi.claimed_length = n - 1 + k;
  fi.claimed_top1 = top1;
  return fi;
}

FamilyInstance gen_boundary_counterexample(int n) {
  const bool odd_ok = (n % 2 == 1 && n >= 9);
  const bool even_ok = (n % 2 == 0 && n >= 6);
  if (!odd_ok && !even_ok) reject("boundary", "odd n >= 9 or even n >= 6");

  ZnSeq s(n);
  add_block(s, 0, n - 1);
  if (odd_ok) {
    add_block(s, 2, (n - 5) / 2);
    add_block(s, 3, 2);
  } else {
    add_block(s, 2, n / 2 - 1);
    add_block(s, 3, 1);
  }

  FamilyInstance fi;
  fi.family = "boundary";
  fi.seq = std::move(s);
  fi.params = {{"n", n}};
  fi.claimed_length = n - 1 + n / 2;
  fi.claims_not_separable = true;
  return fi;
}

FamilyInstance gen_gnk_lower_bound(int n, int k) {
  if (k < 2) reject("gnk-lower", "k >= 2");
  int zero_block, one_block;
  if (k % 2 == 0) {
    if ((k * k + 2 * k) % 8 != 0) reject("gnk-lower", "(k^2+2k)/8 integral");
    const int drop = (k * k + 2 * k) / 8;
    if (n < drop + 1) reject("gnk-lower", "n >= (k^2+2k)/8 + 1");
    zero_block = one_block = n - drop;
  } else {
    if (k < 3) reject("gnk-lower", "odd k >= 3");
    if ((k * k - 1) % 8 != 0 || (k * k + 4 * k + 3) % 8 != 0)
      reject("gnk-lower", "(k^2-1)/8 and (k^2+4k+3)/8 integral");
    const int drop1 = (k * k + 4 * k + 3) / 8;
    if (n < drop1 + 1) reject("gnk-lower", "n >= (k^2+4k+3)/8 + 1");
    zero_block = n - (k * k - 1) / 8;
    one_block = n - drop1;
  }

  ZnSeq s(n);
  const int neg_top = (k % 2 == 0) ? (k - 2) / 2 : (k - 3) / 2;
  const int pos_top = (k % 2 == 0) ? k / 2 : (k + 1) / 2;
  for (int j = 1; j <= neg_top; ++j) s.add(-j);
  add_block(s, 0, zero_block);
  add_block(s, 1, one_block);
  for (int j = 2; j <= pos_top; ++j) s.add(j);

  FamilyInstance fi;
  fi.family = "gnk-lower";
  fi.seq = std::move(s);
  fi.params = {{"n", n}, {"k", k}};
  fi.claimed_length = 2 * n - 2 - ((k - 1) * (k - 1)) / 4;
  fi.claimed_distinct = k;
  return fi;
}

}  // namespace zslab
