#include "zslab/enumeration.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "zslab/extremal.hpp"
#include "zslab/separability.hpp"
#include "zslab/zerosum.hpp"

namespace zslab {

namespace {

struct Enumerator {
  int n;
  int length;
  const EnumOptions& opt;
  const std::function<void(const ZnSeq&)>& emit;
  ZnContext ctx;
  std::vector<int> mult;
  std::vector<std::vector<char>> zs;  // zs[j]: zero-sum table with residues [0, j) layered
  int shard_depth;
  long long shard_key = 0;
  long long candidates = 0;

  Enumerator(int n_, int length_, const EnumOptions& o, const std::function<void(const ZnSeq&)>& e)
      : n(n_), length(length_), opt(o), emit(e), ctx(n_), mult(n_, 0), shard_depth(std::min(2, n_)) {
    if (opt.prune_n_zero_sum) {
      zs.resize(n + 1);
      zs[0] = detail::fresh_zero_sum_table(n, n);
    }
  }

  void descend(int j, int assigned) {
    if (j == n) {
      ++candidates;
      if (ctx.is_canonical(mult)) emit(ZnSeq(n, mult));
      return;
    }
    const int rem = length - assigned;
    int hi, lo;
    if (j == 0) {
      hi = length;
      lo = (length + n - 1) / n;
    } else {
      const int slots_after = n - j - 1;
      hi = std::min(mult[0], rem);
      lo = std::max(0, rem - slots_after * mult[0]);
    }
    for (int m = hi; m >= lo; --m) {
      mult[j] = m;
      if (opt.prune_n_zero_sum) {
        zs[j + 1] = zs[j];
        detail::layer_zero_sum_table(zs[j + 1], n, n, j, m);
        if (zs[j + 1][static_cast<std::size_t>(n) * n]) continue;
      }
      if (opt.prune) {
        std::vector<int> partial(mult.begin(), mult.begin() + j + 1);
        partial.resize(n, 0);
        if (!opt.prune(ZnSeq(n, std::move(partial)), j + 1)) continue;
      }
      if (j + 1 == shard_depth && opt.shard_index >= 0) {
        const long long key = shard_key++;
        if (key % opt.shard_total != opt.shard_index) continue;
      }
      descend(j + 1, assigned + m);
    }
    mult[j] = 0;
  }
};

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void check_run(const RunSpec& run) {
  if (run.shard_total < 1) throw std::invalid_argument("shard total must be >= 1");
  if (run.shard_index >= run.shard_total)
    throw std::invalid_argument("shard index must be below shard total");
  if (run.shard_index < -1) throw std::invalid_argument("shard index must be >= 0 (or -1 for all)");
  if (run.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

VerificationReport run_sharded(const RunSpec& run,
                               const std::function<VerificationReport(int, int)>& shard_runner,
                               const std::function<void(VerificationReport&)>& finalize) {
  check_run(run);
  if (run.shard_index >= 0) {
    const auto t0 = Clock::now();
    VerificationReport rep = shard_runner(run.shard_index, run.shard_total);
    rep.wall_ms = ms_since(t0);
    return rep;
  }
  const int total = run.shard_total;
  std::vector<VerificationReport> parts(total);
  const int jobs = std::min(run.jobs, total);
  if (jobs <= 1) {
    for (int i = 0; i < total; ++i) {
      const auto t0 = Clock::now();
      parts[i] = shard_runner(i, total);
      parts[i].wall_ms = ms_since(t0);
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (;;) {
          const int i = next.fetch_add(1);
          if (i >= total) return;
          try {
            const auto t0 = Clock::now();
            parts[i] = shard_runner(i, total);
            parts[i].wall_ms = ms_since(t0);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
  }
  VerificationReport merged = parts[0];
  for (int i = 1; i < total; ++i) merged = VerificationReport::merged(merged, parts[i]);
  if (finalize) finalize(merged);
  return merged;
}

VerificationReport shard_report(std::string task, std::map<std::string, std::int64_t> params,
                                int shard_index, int shard_total) {
  VerificationReport rep;
  rep.task = std::move(task);
  rep.params = std::move(params);
  rep.shard_total = shard_total;
  rep.shard_indices = {shard_index};
  return rep;
}

int characterization_length_min(int n) { return (3 * n - 2) / 2 + 1; }

}  // namespace

long long enumerate_canonical(int n, int length, const EnumOptions& opt,
                              const std::function<void(const ZnSeq&)>& emit) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  if (length < 0) throw std::invalid_argument("length must be >= 0");
  if (opt.shard_total < 1 || opt.shard_index >= opt.shard_total)
    throw std::invalid_argument("bad shard spec");
  Enumerator en(n, length, opt, emit);
  en.descend(0, 0);
  return en.candidates;
}

VerificationReport verify_characterization(int n, const RunSpec& run) {
  if (n < 2) throw std::invalid_argument("characterization check needs n >= 2");
  const int lmin = characterization_length_min(n);
  const int lmax = 2 * n - 2;
  const std::map<std::string, std::int64_t> params{
      {"n", n}, {"length_min", lmin}, {"length_max", lmax}};

  auto runner = [&, n](int idx, int total) {
    VerificationReport rep = shard_report("characterization", params, idx, total);
    rep.counters["candidates"] = 0;
    rep.counters["classes"] = 0;
    rep.counters["nzf_classes"] = 0;
    rep.counters["equiv_failures"] = 0;
    rep.counters["proof_failures"] = 0;
    for (int L = lmin; L <= lmax; ++L) {
      rep.counters["classes_len" + std::to_string(L)] = 0;
      rep.counters["nzf_classes_len" + std::to_string(L)] = 0;
      EnumOptions eo;
      eo.shard_total = total;
      eo.shard_index = idx;
      rep.counters["candidates"] += enumerate_canonical(n, L, eo, [&](const ZnSeq& s) {
        rep.bump("classes");
        rep.bump("classes_len" + std::to_string(L));
        const bool nzf = is_n_zero_free(s);
        const auto dec = is_separable(s);
        if (nzf) {
          rep.bump("nzf_classes");
          rep.bump("nzf_classes_len" + std::to_string(L));
        }
        if (nzf != dec.has_value()) {
          rep.bump("equiv_failures");
          rep.fail("n-zero-freeness and separability disagree at " + to_string(s));
        }
        if (!nzf) return;
        try {
          ProofTrace tr;
          Decomposition d = decompose_via_proof(s, &tr);
          std::string why;
          if (!decomposition_matches(s, d)) {
            why = "split does not reproduce the mapped input";
          } else if (!tr.consistent()) {
            why = "trace bound violated";
          } else {
            auto props = verify_decomposition_properties(d, s.length() - (n - 1));
            if (!props.all_pass()) why = props.first_failure();
          }
          if (!why.empty()) {
            rep.bump("proof_failures");
            rep.fail("constructive decomposition of " + to_string(s) + ": " + why);
          }
        } catch (const std::exception& e) {
          rep.bump("proof_failures");
          rep.fail("constructive decomposition of " + to_string(s) + " threw: " + e.what());
        }
      });
    }
    return rep;
  };
  return run_sharded(run, runner, {});
}

VerificationReport min_multiplicities(int n, int k, const RunSpec& run) {
  if (n < 2) throw std::invalid_argument("multiplicity minima need n >= 2");
  if (2 * k <= n || k >= n)
    throw std::invalid_argument("multiplicity minima need n/2 < k < n");
  const int L = n - 1 + k;
  const std::int64_t expected_top1 = ((n - k) % 2 == 1) ? k : k + 1;
  const std::map<std::string, std::int64_t> params{
      {"n", n}, {"k", k}, {"length", L},
      {"expected_top1", expected_top1}, {"expected_top2sum", 2 * k}};

  auto runner = [&, n, L](int idx, int total) {
    VerificationReport rep = shard_report("multiplicities", params, idx, total);
    rep.counters["nzf_classes"] = 0;
    EnumOptions eo;
    eo.shard_total = total;
    eo.shard_index = idx;
    eo.prune_n_zero_sum = true;
    rep.counters["candidates"] = enumerate_canonical(n, L, eo, [&](const ZnSeq& s) {
      rep.bump("nzf_classes");
      const MultStats st = mult_stats(s);
      rep.note_min("min_top1", st.top1, to_string(s));
      rep.note_min("min_top2sum", st.top2sum, to_string(s));
    });
    return rep;
  };
  auto finalize = [expected_top1, k, n](VerificationReport& rep) {
    auto t1 = rep.extrema.find("min_top1");
    auto t2 = rep.extrema.find("min_top2sum");
    if (t1 == rep.extrema.end() || t2 == rep.extrema.end()) {
      rep.fail("no n-zero-free class of length n-1+k found for n=" + std::to_string(n) +
               " k=" + std::to_string(k));
      return;
    }
    if (t1->second.value != expected_top1)
      rep.fail("min top multiplicity is " + std::to_string(t1->second.value) + ", expected " +
               std::to_string(expected_top1) + " (witness " + t1->second.witness + ")");
    if (t2->second.value != 2 * k)
      rep.fail("min combined top-two multiplicity is " + std::to_string(t2->second.value) +
               ", expected " + std::to_string(2 * k) + " (witness " + t2->second.witness + ")");
  };
  return run_sharded(run, runner, finalize);
}

int gnk_formula(int n, int k) {
  if (k < 4) throw std::invalid_argument("closed form needs k >= 4");
  if (n < k) throw std::invalid_argument("closed form needs n >= k");
  if ((k - 1) * (k - 1) > 2 * n - 1)
    throw std::invalid_argument("closed form needs k <= sqrt(2n-1)+1");
  return 2 * n - 1 - ((k - 1) * (k - 1)) / 4;
}

int gnk_bruteforce(int n, int k) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("needs 1 <= k <= n");
  for (int L = 2 * n - 2; L >= k; --L) {
    bool found = false;
    EnumOptions eo;
    eo.prune_n_zero_sum = true;
    enumerate_canonical(n, L, eo, [&](const ZnSeq& s) {
      if (s.distinct_terms() >= k) found = true;
    });
    if (found) return L + 1;
  }
  return k;
}

VerificationReport verify_gnk(int n, const RunSpec& run) {
  if (n < 2) throw std::invalid_argument("g(n,k) verification needs n >= 2");
  int k_assert_max = 2;
  while (k_assert_max + 1 <= n && (k_assert_max) * (k_assert_max) <= 2 * n - 1) ++k_assert_max;
  // loop ends with largest k such that (k-1)^2 <= 2n-1, capped at n
  const int lmax = 2 * n - 2;
  const std::map<std::string, std::int64_t> params{{"n", n}, {"k_max", k_assert_max}};

  auto runner = [&, n](int idx, int total) {
    VerificationReport rep = shard_report("gnk", params, idx, total);
    rep.counters["candidates"] = 0;
    for (int L = 2; L <= lmax; ++L) {
      rep.counters["nzf_classes_len" + std::to_string(L)] = 0;
      EnumOptions eo;
      eo.shard_total = total;
      eo.shard_index = idx;
      eo.prune_n_zero_sum = true;
      rep.counters["candidates"] += enumerate_canonical(n, L, eo, [&](const ZnSeq& s) {
        rep.bump("nzf_classes_len" + std::to_string(L));
        rep.note_max("max_distinct_len" + std::to_string(L), s.distinct_terms(), to_string(s));
      });
    }
    return rep;
  };

  auto finalize = [n, k_assert_max, lmax](VerificationReport& rep) {
    for (int k = 2; k <= k_assert_max; ++k) {
      int g = k;
      for (int L = lmax; L >= 2; --L) {
        auto it = rep.extrema.find("max_distinct_len" + std::to_string(L));
        if (it != rep.extrema.end() && it->second.value >= k) {
          g = L + 1;
          break;
        }
      }
      rep.counters["g_k" + std::to_string(k)] = g;
      std::int64_t expected = -1;
      if (k == 2) {
        expected = 2 * n - 1;
      } else if (k == 3) {
        if (n >= 4) expected = 2 * n - 2;
        else if (n == 3) expected = 3;
      } else {
        expected = gnk_formula(n, k);
      }
      if (expected >= 0 && g != expected)
        rep.fail("g(" + std::to_string(n) + "," + std::to_string(k) + ") brute force gives " +
                 std::to_string(g) + ", expected " + std::to_string(expected));
      // lower-bound family: n-zero-free, k distinct terms, length g-1
      if (expected >= 0 && !(k == 3 && n < 4)) {
        try {
          const FamilyInstance fi = gen_gnk_lower_bound(n, k);
          if (!is_n_zero_free(fi.seq))
            rep.fail("lower-bound family " + to_string(fi.seq) + " is not n-zero-free");
          if (fi.seq.distinct_terms() != k)
            rep.fail("lower-bound family " + to_string(fi.seq) + " does not have k distinct terms");
          if (fi.seq.length() != expected - 1)
            rep.fail("lower-bound family " + to_string(fi.seq) + " does not have length g-1");
          rep.bump("families_checked");
        } catch (const std::exception& e) {
          rep.fail("lower-bound family for k=" + std::to_string(k) + " rejected: " + e.what());
        }
      }
    }
  };
  return run_sharded(run, runner, finalize);
}

VerificationReport boundary_survey(int n, const RunSpec& run) {
  if (n < 3) throw std::invalid_argument("boundary survey needs n >= 3");
  const int L = n - 1 + n / 2;
  const std::map<std::string, std::int64_t> params{{"n", n}, {"length", L}};

  auto runner = [&, n, L](int idx, int total) {
    VerificationReport rep = shard_report("boundary", params, idx, total);
    rep.counters["nzf_classes"] = 0;
    rep.counters["separable"] = 0;
    rep.counters["nonseparable"] = 0;
    EnumOptions eo;
    eo.shard_total = total;
    eo.shard_index = idx;
    eo.prune_n_zero_sum = true;
    rep.counters["candidates"] = enumerate_canonical(n, L, eo, [&](const ZnSeq& s) {
      rep.bump("nzf_classes");
      if (is_separable(s)) {
        rep.bump("separable");
      } else {
        rep.bump("nonseparable");
        rep.note_min("nonseparable_example", s.distinct_terms(), to_string(s));
      }
    });
    return rep;
  };
  auto finalize = [n](VerificationReport& rep) {
    const bool must_exist = (n % 2 == 0 && n >= 6) || (n % 2 == 1 && n >= 9);
    if (must_exist && rep.counters["nonseparable"] == 0)
      rep.fail("expected a non-separable n-zero-free class at the boundary length for n=" +
               std::to_string(n));
  };
  return run_sharded(run, runner, finalize);
}

}  // namespace zslab
