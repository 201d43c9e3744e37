// Acceptance suite: every exit criterion runs exhaustively at its stated
// range and tolerance (all tolerances are exact integer equalities) and
// prints one pass/fail line.
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "oracle.hpp"
#include "zslab/enumeration.hpp"
#include "zslab/extremal.hpp"
#include "zslab/separability.hpp"
#include "zslab/zerosum.hpp"

using namespace zslab;

namespace {

struct Ctx {
  std::ostringstream log;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    unmet: " << what << "\n";
    }
  }
};

bool egz_sanity(Ctx& c) {
  for (int n = 2; n <= 8; ++n) {
    EnumOptions eo;
    eo.prune_n_zero_sum = true;
    long long classes = 0;
    enumerate_canonical(n, 2 * n - 1, eo, [&](const ZnSeq&) { ++classes; });
    c.expect(classes == 0, "n=" + std::to_string(n) + ": found " + std::to_string(classes) +
                               " n-zero-free classes at length 2n-1");
  }
  return c.ok;
}

bool characterization_equivalence(Ctx& c) {
  for (int n = 2; n <= 9; ++n) {
    VerificationReport rep = verify_characterization(n);
    c.expect(!rep.failed(), "n=" + std::to_string(n) + ": " +
                                (rep.failures.empty() ? "" : *rep.failures.begin()));
    c.expect(rep.counters.at("equiv_failures") == 0, "equivalence failures at n=" + std::to_string(n));
    c.expect(rep.counters.at("proof_failures") == 0,
             "constructive-decomposition failures at n=" + std::to_string(n));
  }
  return c.ok;
}

bool boundary_sharpness(Ctx& c) {
  for (int n : {6, 8, 9, 10, 11}) {
    const FamilyInstance fi = gen_boundary_counterexample(n);
    c.expect(fi.seq.length() == n - 1 + n / 2, "boundary length at n=" + std::to_string(n));
    c.expect(is_n_zero_free(fi.seq),
             to_string(fi.seq) + " should be n-zero-free");
    c.expect(!is_separable(fi.seq).has_value(),
             to_string(fi.seq) + " should not be separable");
  }
  for (int n : {6, 8, 9}) {
    VerificationReport rep = boundary_survey(n);
    c.expect(!rep.failed(), "boundary survey failed at n=" + std::to_string(n));
    c.expect(rep.counters.at("nonseparable") >= 1,
             "no non-separable class found at n=" + std::to_string(n));
  }
  return c.ok;
}

std::map<std::pair<int, int>, VerificationReport>& multiplicity_reports() {
  static std::map<std::pair<int, int>, VerificationReport> cache;
  if (cache.empty()) {
    for (int n = 5; n <= 9; ++n)
      for (int k = n / 2 + 1; k < n; ++k) cache[{n, k}] = min_multiplicities(n, k);
  }
  return cache;
}

bool top_multiplicity_minima(Ctx& c) {
  for (const auto& [nk, rep] : multiplicity_reports()) {
    const auto [n, k] = nk;
    const std::int64_t expected = ((n - k) % 2 == 1) ? k : k + 1;
    c.expect(!rep.failed(), "driver failures at n=" + std::to_string(n) + " k=" + std::to_string(k));
    c.expect(rep.extrema.at("min_top1").value == expected,
             "min top multiplicity at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 " is " + std::to_string(rep.extrema.at("min_top1").value) + ", want " +
                 std::to_string(expected));
  }
  return c.ok;
}

bool combined_multiplicity_minima(Ctx& c) {
  for (const auto& [nk, rep] : multiplicity_reports()) {
    const auto [n, k] = nk;
    c.expect(rep.extrema.at("min_top2sum").value == 2 * k,
             "min combined multiplicity at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 " is " + std::to_string(rep.extrema.at("min_top2sum").value) + ", want " +
                 std::to_string(2 * k));
  }
  return c.ok;
}

bool longest_classes(Ctx& c) {
  for (int n = 2; n <= 9; ++n) {
    EnumOptions eo;
    eo.prune_n_zero_sum = true;
    std::set<std::vector<int>> classes;
    enumerate_canonical(n, 2 * n - 2, eo, [&](const ZnSeq& s) { classes.insert(s.mults()); });
    ZnSeq expect(n);
    expect.add(0, n - 1);
    expect.add(1, n - 1);
    const ZnSeq canon = canonical_similitude(expect).seq;
    c.expect(classes.size() == 1, "n=" + std::to_string(n) + ": " +
                                      std::to_string(classes.size()) +
                                      " classes at length 2n-2, want exactly 1");
    c.expect(classes.count(canon.mults()) == 1,
             "n=" + std::to_string(n) + ": 0^{n-1}1^{n-1} class missing at length 2n-2");
  }
  for (int n = 5; n <= 9; ++n) {
    EnumOptions eo;
    eo.prune_n_zero_sum = true;
    std::set<std::vector<int>> classes;
    enumerate_canonical(n, 2 * n - 3, eo, [&](const ZnSeq& s) { classes.insert(s.mults()); });
    ZnSeq a(n), b(n);
    a.add(0, n - 1);
    a.add(1, n - 2);
    b.add(0, n - 1);
    b.add(1, n - 3);
    b.add(2, 1);
    std::set<std::vector<int>> want{canonical_similitude(a).seq.mults(),
                                    canonical_similitude(b).seq.mults()};
    c.expect(classes == want, "n=" + std::to_string(n) + ": classes at length 2n-3 are not 0^{n-1}1^{n-2} and 0^{n-1}1^{n-3}2");
  }
  return c.ok;
}

bool gnk_table(Ctx& c) {
  for (int n = 3; n <= 9; ++n) {
    VerificationReport rep = verify_gnk(n);
    c.expect(!rep.failed(), "g(n,k) table failures at n=" + std::to_string(n) +
                                (rep.failures.empty() ? "" : ": " + *rep.failures.begin()));
    c.expect(rep.counters.at("g_k2") == 2 * n - 1, "g(n,2) at n=" + std::to_string(n));
    if (n >= 4)
      c.expect(rep.counters.at("g_k3") == 2 * n - 2, "g(n,3) at n=" + std::to_string(n));
  }
  c.expect(gnk_bruteforce(3, 3) == 3, "g(3,3)");
  c.expect(gnk_bruteforce(9, 4) == 15, "g(9,4)");
  c.expect(gnk_bruteforce(9, 5) == 13, "g(9,5)");
  c.expect(gnk_formula(9, 4) == 15, "closed form at (9,4)");
  c.expect(gnk_formula(9, 5) == 13, "closed form at (9,5)");
  return c.ok;
}

bool property_suites(Ctx& c) {
  constexpr int kCases = 10000;

  {  // positive-integer sequences with 2l > S: ones count and interval coverage
    std::mt19937 rng(1001);
    int done = 0;
    while (done < kCases) {
      const int len = 1 + rng() % 12;
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
      if (ones < lo) {
        c.expect(false, "ones-count bound violated");
        return false;
      }
      SumLenTable t(terms);
      for (int x = lo; x <= sum; ++x) {
        if (!t.query(x, lo)) {
          c.expect(false, "interval sum " + std::to_string(x) + " not achievable at length >= " +
                              std::to_string(lo));
          return false;
        }
      }
    }
  }

  {  // sums above length n reappear at length exactly n (under the 0-dominance condition)
    std::mt19937 rng(1002);
    int done = 0;
    while (done < kCases) {
      const int n = 2 + rng() % 7;
      ZnSeq s = oracle::random_seq(rng, n, rng() % (2 * n + 5));
      int top = 0;
      for (int r = 1; r < n; ++r) top = std::max(top, s.mult(r));
      if (top > s.mult(0)) s.add(0, top - s.mult(0));
      if (s.length() > 2 * n + 4) continue;
      ++done;
      if (!gao_property_holds(s)) {
        c.expect(false, "length-n restatement failed at " + to_string(s));
        return false;
      }
    }
  }

  {  // affine and unit invariance of the zero-sum predicates
    std::mt19937 rng(1003);
    for (int i = 0; i < kCases; ++i) {
      const int n = 1 + rng() % 9;
      ZnSeq s = oracle::random_seq(rng, n, rng() % (2 * n + 2));
      AffineMap m = oracle::random_map(rng, n);
      if (is_n_zero_free(s) != is_n_zero_free(apply_affine(s, m))) {
        c.expect(false, "n-zero-freeness not affine invariant at " + to_string(s));
        return false;
      }
      AffineMap unit(m.a, 0, n);
      if (is_zero_free(s) != is_zero_free(apply_affine(s, unit))) {
        c.expect(false, "zero-freeness not unit invariant at " + to_string(s));
        return false;
      }
    }
  }

  {  // canonical form: idempotent, orbit invariant
    std::mt19937 rng(1004);
    for (int i = 0; i < kCases; ++i) {
      const int n = 1 + rng() % 9;
      ZnSeq s = oracle::random_seq(rng, n, rng() % 10);
      auto canon = canonical_similitude(s);
      AffineMap m = oracle::random_map(rng, n);
      if (canonical_similitude(canon.seq).seq != canon.seq ||
          canonical_similitude(apply_affine(s, m)).seq != canon.seq ||
          apply_affine(s, canon.map) != canon.seq) {
        c.expect(false, "canonical-form laws failed at " + to_string(s));
        return false;
      }
    }
  }

  {  // engine vs exhaustive subset enumeration, |s| <= 18, n <= 8
    std::mt19937 rng(1005);
    for (int i = 0; i < kCases; ++i) {
      const int n = 1 + rng() % 8;
      ZnSeq s = oracle::random_seq(rng, n, rng() % 19);
      const int t = s.length() == 0 ? 0 : static_cast<int>(rng() % (s.length() + 1));
      const auto w = has_zero_sum_of_length(s, t);
      if (w.has_value() != oracle::naive_has_zero_sum_of_length(s, t) ||
          (w && (w->length() != t || !s.contains(w->subseq) || w->subseq.sum() != 0))) {
        c.expect(false, "fixed-length zero-sum mismatch at " + to_string(s) + " t=" + std::to_string(t));
        return false;
      }
      if (is_zero_free(s) != oracle::naive_is_zero_free(s)) {
        c.expect(false, "zero-freeness mismatch at " + to_string(s));
        return false;
      }
      if (max_nonzero_zero_subsequence(s).length() != oracle::naive_max_nonzero_zero_len(s)) {
        c.expect(false, "max zero-sum subsequence mismatch at " + to_string(s));
        return false;
      }
    }
  }
  return c.ok;
}

bool sharding_determinism(Ctx& c) {
  const std::string base = "/tmp/zslab_accept_" + std::to_string(getpid());
  const std::string f1 = base + "_s1.json";
  const std::string f4 = base + "_s4.json";
  const std::string cli = ZSLAB_CLI_PATH;
  const std::string cmd1 =
      cli + " --format json --out " + f1 + " verify characterization --n 8";
  const std::string cmd4 =
      cli + " --format json --out " + f4 + " verify characterization --n 8 --shards 4 --jobs 2";
  c.expect(std::system(cmd1.c_str()) == 0, "single-shard CLI run failed");
  c.expect(std::system(cmd4.c_str()) == 0, "four-shard CLI run failed");
  if (!c.ok) return false;

  auto load = [](const std::string& path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
  };
  nlohmann::json a = load(f1), b = load(f4);
  a["report"].erase("wall_ms");
  b["report"].erase("wall_ms");
  c.expect(a.dump() == b.dump(), "reports differ beyond the timing field");
  std::remove(f1.c_str());
  std::remove(f4.c_str());

  // partial shards of the library driver merge to the 1-shard report
  VerificationReport full = verify_characterization(8);
  VerificationReport merged = verify_characterization(8, RunSpec{4, 0, 1});
  for (int i = 1; i < 4; ++i)
    merged = VerificationReport::merged(merged, verify_characterization(8, RunSpec{4, i, 1}));
  full.wall_ms = merged.wall_ms = 0;
  c.expect(full.to_json_string() == merged.to_json_string(),
           "merged partial shards differ from the single-shard run");
  return c.ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(Ctx&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "EGZ sanity: no n-zero-free class at length 2n-1 for n in [2,8]", egz_sanity},
      {2, "equivalence of n-zero-freeness and separability on (3n/2-1, 2n-2], n in [2,9], with the constructive decomposer", characterization_equivalence},
      {3, "boundary sharpness at length n-1+floor(n/2) for n in {6,8,9,10,11}", boundary_sharpness},
      {4, "exact minima of the top multiplicity for n in [5,9], n/2 < k < n", top_multiplicity_minima},
      {5, "exact minima of the combined top-two multiplicity (2k)", combined_multiplicity_minima},
      {6, "lengths 2n-2 and 2n-3 have exactly the known classes", longest_classes},
      {7, "g(n,k) brute force equals the known values and the closed form, n in [3,9]", gnk_table},
      {8, "randomized property suites (>= 10^4 cases each, fixed seeds)", property_suites},
      {9, "determinism and sharding: 1-shard and 4-shard reports are byte-identical apart from timing", sharding_determinism},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Ctx ctx;
    bool ok = false;
    try {
      ok = cr.run(ctx);
    } catch (const std::exception& e) {
      ctx.log << "    exception: " << e.what() << "\n";
      ok = false;
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.id << ": " << cr.name << "\n";
    if (!ok) {
      std::cout << ctx.log.str();
      ++failed;
    }
  }
  std::cout << criteria.size() - failed << " of " << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
