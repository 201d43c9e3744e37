#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "oracle.hpp"
#include "zslab/zerosum.hpp"

using namespace zslab;

namespace {

void check_witness(const ZnSeq& host, const ZeroSubseqWitness& w, int expected_len) {
  CHECK(w.length() == expected_len);
  CHECK(host.contains(w.subseq));
  CHECK(w.subseq.sum() == 0);
}

}  // namespace

TEST_CASE("zero sums of a fixed length") {
  ZnSeq whole = ZnSeq::from_terms(3, {0, 1, 2});
  auto w = has_zero_sum_of_length(whole, 3);
  REQUIRE(w);
  check_witness(whole, *w, 3);

  CHECK(!has_zero_sum_of_length(ZnSeq::from_terms(4, {0, 0, 0, 1, 1, 1}), 4));

  ZnSeq s = parse_seq("n=5: 0^2 1^3 2 4");
  auto w2 = has_zero_sum_of_length(s, 5);
  REQUIRE(w2);
  check_witness(s, *w2, 5);

  // length 0 is witnessed by the empty subsequence
  auto w0 = has_zero_sum_of_length(s, 0);
  REQUIRE(w0);
  CHECK(w0->length() == 0);

  CHECK_THROWS_AS(has_zero_sum_of_length(ZnSeq::from_terms(3, {1}), 2), std::invalid_argument);
}

TEST_CASE("n-zero-freeness") {
  CHECK(is_n_zero_free(parse_seq("n=4: 0^3 1^3")));
  CHECK(is_n_zero_free(parse_seq("n=5: 0^2 1^4 4")));
  CHECK(!is_n_zero_free(ZnSeq::from_terms(3, {0, 1, 2, 1})));
  CHECK(is_n_zero_free(ZnSeq(5)));
  CHECK(is_n_zero_free(ZnSeq::from_terms(6, {0, 0})));  // shorter than n
  CHECK(!is_n_zero_free(parse_seq("n=4: 0^5")));
}

TEST_CASE("zero-freeness") {
  CHECK(is_zero_free(ZnSeq::from_terms(5, {4, 4, 3})));
  CHECK(!is_zero_free(ZnSeq::from_terms(5, {1, 4})));
  CHECK(is_zero_free(ZnSeq(5)));
  CHECK(!is_zero_free(ZnSeq::from_terms(5, {0})));
}

TEST_CASE("maximum zero-sum subsequence with nonzero terms") {
  ZnSeq s1 = ZnSeq::from_terms(5, {4, 4, 3, 0, 0});
  CHECK(max_nonzero_zero_subsequence(s1).length() == 0);

  ZnSeq s2 = ZnSeq::from_terms(4, {1, 1, 2, 3});
  auto w = max_nonzero_zero_subsequence(s2);
  CHECK(w.length() == 3);
  CHECK(w.subseq == ZnSeq::from_terms(4, {1, 1, 2}));
  CHECK(s2.contains(w.subseq));

  CHECK(max_nonzero_zero_subsequence(ZnSeq::from_terms(6, {1, 1, 1, 1, 1})).length() == 0);
}

TEST_CASE("sum-length table") {
  SumLenTable t1 = build_sum_len_table({1, 1, 2});
  CHECK(t1.query(3, 2));
  CHECK(t1.max_len(0) == 0);
  CHECK(t1.max_len(4) == 3);
  // every x in [2l-S, S] = [2, 4] achievable with length >= 2
  for (int x = 2; x <= 4; ++x) CHECK(t1.query(x, 2));

  SumLenTable t2 = build_sum_len_table({2, 2});
  CHECK(!t2.query(1, 1));
  CHECK(t2.reachable(2));
  CHECK(t2.min_len(4) == 2);

  CHECK_THROWS_AS(build_sum_len_table({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(build_sum_len_table({-1}), std::invalid_argument);

  SumLenTable empty = build_sum_len_table({});
  CHECK(empty.max_len(0) == 0);
  CHECK(empty.total() == 0);
}

TEST_CASE("sum-length table against exhaustive subsets") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    int len = 1 + rng() % 10;
    std::vector<int> terms;
    for (int i = 0; i < len; ++i) terms.push_back(1 + rng() % 5);
    SumLenTable t(terms);
    std::vector<int> best(t.total() + 1, -1), least(t.total() + 1, -1);
    for (auto [sum, l] : oracle::naive_subset_sums(terms)) {
      if (l > best[sum]) best[sum] = l;
      if (least[sum] < 0 || l < least[sum]) least[sum] = l;
    }
    for (int x = 0; x <= t.total(); ++x) {
      CHECK(t.max_len(x) == best[x]);
      CHECK(t.min_len(x) == least[x]);
    }
    // removing one term steps down through achievable sums
    for (int x = 1; x <= t.total(); ++x) {
      int L = t.max_len(x);
      if (L < 1) continue;
      bool step = false;
      for (int a : terms)
        if (x - a >= 0 && t.max_len(x - a) >= L - 1) step = true;
      CHECK(step);
    }
  }
}

TEST_CASE("positive sequences with 2l > S") {
  std::mt19937 rng(43);
  int done = 0;
  while (done < 2000) {
    int len = 1 + rng() % 12;
    std::vector<int> terms;
    int sum = 0;
    for (int i = 0; i < len; ++i) {
      static const int bag[6] = {1, 1, 1, 2, 2, 3};
      terms.push_back(bag[rng() % 6]);
      sum += terms.back();
    }
    if (2 * len <= sum) continue;
    ++done;
    const int lo = 2 * len - sum;
    int ones = 0;
    for (int a : terms) ones += (a == 1);
    CHECK(ones >= lo);
    SumLenTable t(terms);
    for (int x = lo; x <= sum; ++x) CHECK(t.query(x, lo));
  }
}

TEST_CASE("long subsequence sums reappear at length exactly n") {
  CHECK(gao_property_holds(ZnSeq::from_terms(3, {0, 0, 1, 1, 2})));
  CHECK(gao_property_holds(ZnSeq::from_terms(4, {0, 0, 1, 1})));
  CHECK(gao_property_holds(ZnSeq::from_terms(2, {0, 0, 1, 1})));
  CHECK_THROWS_AS(gao_property_holds(ZnSeq::from_terms(4, {0, 1, 1})), std::invalid_argument);

  std::mt19937 rng(47);
  int done = 0;
  while (done < 2000) {
    int n = 2 + rng() % 7;
    ZnSeq s = oracle::random_seq(rng, n, rng() % (2 * n + 5));
    int top = 0;
    for (int r = 1; r < n; ++r) top = std::max(top, s.mult(r));
    if (top > s.mult(0)) s.add(0, top - s.mult(0));
    if (s.length() > 2 * n + 4) continue;
    ++done;
    CHECK(gao_property_holds(s));
  }
}

TEST_CASE("engine agrees with exhaustive subset enumeration") {
  std::mt19937 rng(53);
  for (int iter = 0; iter < 3000; ++iter) {
    int n = 1 + rng() % 8;
    ZnSeq s = oracle::random_seq(rng, n, rng() % 15);
    int t = s.length() == 0 ? 0 : static_cast<int>(rng() % (s.length() + 1));
    auto w = has_zero_sum_of_length(s, t);
    CHECK(w.has_value() == oracle::naive_has_zero_sum_of_length(s, t));
    if (w) check_witness(s, *w, t);
    CHECK(has_zero_sum_of_length_quick(s, t) == w.has_value());
    CHECK(is_zero_free(s) == oracle::naive_is_zero_free(s));
    auto mx = max_nonzero_zero_subsequence(s);
    CHECK(mx.length() == oracle::naive_max_nonzero_zero_len(s));
    CHECK(s.contains(mx.subseq));
    CHECK(mx.subseq.sum() == 0);
    CHECK(mx.subseq.mult(0) == 0);
  }
}

TEST_CASE("every sequence of length 2n-1 has an n-term zero sum (small n)") {
  for (int n = 1; n <= 6; ++n) {
    std::function<void(ZnSeq&, int, int)> rec = [&](ZnSeq& s, int from, int rem) {
      if (rem == 0) {
        CHECK(!is_n_zero_free(s));
        return;
      }
      for (int r = from; r < n; ++r) {
        s.add(r);
        rec(s, r, rem - 1);
        s.add(r, -1);
      }
    };
    ZnSeq s(n);
    rec(s, 0, 2 * n - 1);
  }
}

TEST_CASE("zero-sum predicates are affine- and unit-invariant") {
  std::mt19937 rng(59);
  for (int iter = 0; iter < 2000; ++iter) {
    int n = 1 + rng() % 9;
    ZnSeq s = oracle::random_seq(rng, n, rng() % (2 * n + 2));
    AffineMap m = oracle::random_map(rng, n);
    CHECK(is_n_zero_free(s) == is_n_zero_free(apply_affine(s, m)));
    AffineMap c(m.a, 0, n);
    CHECK(is_zero_free(s) == is_zero_free(apply_affine(s, c)));
  }
}
