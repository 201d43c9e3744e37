#include "zslab/separability.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "zslab/zerosum.hpp"

namespace zslab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// dp over placed copies: dp[a] = minimal total beta cost among splits whose
// alpha costs sum to a; both budgets capped at n-1.
bool separable_fixed_feasible(const ZnSeq& s, int* best_alpha_cost) {
  const int n = s.modulus();
  const int cap = n - 1;
  thread_local std::vector<int> dp, nd;
  dp.assign(cap + 1, kInf);
  dp[0] = 0;
  for (int r = 0; r < n; ++r) {
    const int m = s.mult(r);
    if (m == 0) continue;
    const int ca = lpr(r, n);
    const int cb = lpr(1 - r, n);
    for (int copy = 0; copy < m; ++copy) {
      nd.assign(cap + 1, kInf);
      for (int a = 0; a <= cap; ++a) {
        if (dp[a] >= kInf) continue;
        if (ca <= cap && a + ca <= cap && dp[a] < nd[a + ca]) nd[a + ca] = dp[a];
        if (cb <= cap && dp[a] + cb <= cap && dp[a] + cb < nd[a]) nd[a] = dp[a] + cb;
      }
      dp.swap(nd);
    }
  }
  for (int a = 0; a <= cap; ++a) {
    if (dp[a] <= cap) {
      if (best_alpha_cost) *best_alpha_cost = a;
      return true;
    }
  }
  return false;
}

std::string dump_state(const char* what, const ZnSeq& input, const ZnSeq& translated,
                       const ZnSeq& sigma, const ZnSeq& tau) {
  std::ostringstream os;
  os << "constructive decomposition inconsistency: " << what
     << "; input " << to_string(input) << "; translated " << to_string(translated)
     << "; sigma " << to_string(sigma) << "; tau " << to_string(tau);
  return os.str();
}

}  // namespace

std::optional<std::pair<ZnSeq, ZnSeq>> is_separable_fixed(const ZnSeq& s) {
  const int n = s.modulus();
  const int cap = n - 1;
  if (!separable_fixed_feasible(s, nullptr)) return std::nullopt;

  // rerun with per-copy history to rebuild one witness split
  std::vector<std::vector<int>> hist;
  std::vector<int> copy_value;
  hist.reserve(s.length());
  copy_value.reserve(s.length());
  std::vector<int> dp(cap + 1, kInf), nd;
  dp[0] = 0;
  for (int r = 0; r < n; ++r) {
    const int m = s.mult(r);
    const int ca = lpr(r, n);
    const int cb = lpr(1 - r, n);
    for (int copy = 0; copy < m; ++copy) {
      hist.push_back(dp);
      copy_value.push_back(r);
      nd.assign(cap + 1, kInf);
      for (int a = 0; a <= cap; ++a) {
        if (dp[a] >= kInf) continue;
        if (ca <= cap && a + ca <= cap && dp[a] < nd[a + ca]) nd[a + ca] = dp[a];
        if (cb <= cap && dp[a] + cb <= cap && dp[a] + cb < nd[a]) nd[a] = dp[a] + cb;
      }
      dp.swap(nd);
    }
  }
  int a = -1;
  for (int i = 0; i <= cap; ++i) {
    if (dp[i] <= cap) {
      a = i;
      break;
    }
  }
  if (a < 0) throw std::logic_error("separability witness pass disagrees with feasibility pass");

  ZnSeq alpha(n), beta(n);
  int bcost = dp[a];
  for (int i = static_cast<int>(hist.size()) - 1; i >= 0; --i) {
    const int r = copy_value[i];
    const int ca = lpr(r, n);
    const int cb = lpr(1 - r, n);
    const auto& prev = hist[i];
    if (ca <= cap && a >= ca && prev[a - ca] == bcost) {
      alpha.add(r);
      a -= ca;
    } else if (cb <= cap && bcost >= cb && prev[a] == bcost - cb) {
      beta.add(r);
      bcost -= cb;
    } else {
      throw std::logic_error("separability witness reconstruction failed");
    }
  }
  return std::make_pair(std::move(alpha), std::move(beta));
}

std::optional<Decomposition> is_separable(const ZnSeq& s) {
  for (const AffineMap& m : affine_maps(s.modulus())) {
    ZnSeq img = apply_affine(s, m);
    if (!separable_fixed_feasible(img, nullptr)) continue;
    auto split = is_separable_fixed(img);
    if (!split) throw std::logic_error("separability passes disagree on " + to_string(img));
    return Decomposition{m, std::move(split->first), std::move(split->second)};
  }
  return std::nullopt;
}

bool ProofTrace::consistent() const {
  const int n = tau.modulus();
  int rest = 0;
  for (int r = 0; r < n; ++r) {
    if (r == 1 % n) continue;
    rest += lpr(-r, n) * sigma.mult(r);
  }
  return ones_in_sigma == rest && lpr_sum(tau) + rest < n;
}

Decomposition decompose_via_proof(const ZnSeq& s, ProofTrace* trace) {
  const int n = s.modulus();
  if (2 * s.length() <= 3 * n - 2)
    throw std::invalid_argument("constructive decomposition needs length > 3n/2 - 1, got length " +
                                std::to_string(s.length()) + " for n=" + std::to_string(n));
  if (!is_n_zero_free(s))
    throw std::invalid_argument("constructive decomposition needs an n-zero-free sequence; " +
                                to_string(s) + " has an n-term zero sum");

  // translate a residue of maximum multiplicity (smallest on ties) to 0
  int r0 = 0;
  for (int r = 1; r < n; ++r)
    if (s.mult(r) > s.mult(r0)) r0 = r;
  AffineMap translate(1, (n - r0) % n, n);
  ZnSeq g = apply_affine(s, translate);
  const int v = g.mult(0);

  ZnSeq nonzero = g;
  if (v > 0) nonzero.add(0, -v);
  ZnSeq sigma0 = max_nonzero_zero_subsequence(nonzero).subseq;
  ZnSeq tau0 = nonzero - sigma0;

  if (!is_zero_free(tau0))
    throw std::logic_error(dump_state("leftover nonzero part is not zero-free", s, g, sigma0, tau0));
  if (2 * tau0.length() <= n)
    throw std::logic_error(dump_state("leftover nonzero part too short", s, g, sigma0, tau0));

  int c = 0;
  for (int u : units(n)) {
    int lsum = 0;
    for (int r = 1; r < n; ++r)
      if (tau0.mult(r) > 0) lsum += lpr(u * r, n) * tau0.mult(r);
    if (lsum < n) {
      c = u;
      break;
    }
  }
  if (c == 0)
    throw std::logic_error(dump_state("no unit brings the zero-free part's lpr sum below n", s, g, sigma0, tau0));

  AffineMap mul(c, 0, n);
  ZnSeq sigma = apply_affine(sigma0, mul);
  ZnSeq tau = apply_affine(tau0, mul);

  const int w = n == 1 ? 0 : sigma.mult(1);
  ZnSeq alpha = tau;
  if (w > 0) alpha.add(1, w);
  ZnSeq beta(n);
  if (v > 0) beta.add(0, v);
  for (int r = 0; r < n; ++r) {
    if (r == 1 || r == 0) continue;
    if (sigma.mult(r) > 0) beta.add(r, sigma.mult(r));
  }

  int rest = 0;
  for (int r = 2; r < n; ++r) rest += lpr(-r, n) * sigma.mult(r);
  if (w != rest)
    throw std::logic_error(dump_state("multiplicity of 1 in sigma does not match its complement sum", s, g, sigma, tau));
  if (lpr_sum(tau) + rest >= n)
    throw std::logic_error(dump_state("strengthened lpr bound fails", s, g, sigma, tau));
  if (lpr_sum(alpha) >= n || lpr_sum(one_minus(beta)) >= n)
    throw std::logic_error(dump_state("assembled split violates the lpr conditions", s, g, sigma, tau));

  Decomposition d{mul.compose(translate), std::move(alpha), std::move(beta)};
  if (!decomposition_matches(s, d))
    throw std::logic_error(dump_state("assembled split is not the mapped input", s, g, sigma, tau));
  if (trace) {
    trace->translate = translate;
    trace->unit = c;
    trace->sigma = std::move(sigma);
    trace->tau = std::move(tau);
    trace->zeros = v;
    trace->ones_in_sigma = w;
  }
  return d;
}

bool decomposition_valid(const Decomposition& d) {
  const int n = d.map.n;
  if (d.alpha.modulus() != n || d.beta.modulus() != n) return false;
  if (n > 1 && d.alpha.mult(0) > 0) return false;
  if (n > 1 && d.beta.mult(1) > 0) return false;
  return lpr_sum(d.alpha) < n && lpr_sum(one_minus(d.beta)) < n;
}

bool decomposition_matches(const ZnSeq& original, const Decomposition& d) {
  if (original.modulus() != d.map.n) return false;
  return decomposition_valid(d) && apply_affine(original, d.map) == d.unioned();
}

Decomposition flip_decomposition(const Decomposition& d) {
  const int n = d.map.n;
  if (n == 1) return d;
  AffineMap flip(n - 1, 1, n);
  return Decomposition{flip.compose(d.map), one_minus(d.beta), one_minus(d.alpha)};
}

bool DecompositionProperties::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string DecompositionProperties::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return "";
}

DecompositionProperties verify_decomposition_properties(const Decomposition& d, int k) {
  const int n = d.map.n;
  if (!decomposition_valid(d)) throw std::invalid_argument("malformed decomposition");
  if (k <= 0 || k >= n)
    throw std::invalid_argument("k=" + std::to_string(k) + " outside (0, n) for n=" + std::to_string(n));
  if (d.alpha.length() + d.beta.length() != n - 1 + k)
    throw std::invalid_argument("|alpha| + |beta| != n - 1 + k");

  DecompositionProperties rep;
  ZnSeq u = d.unioned();
  rep.stats = mult_stats(u);
  auto push = [&rep](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  push("union_n_zero_free", is_n_zero_free(u));
  push("alpha_size", k <= d.alpha.length() && d.alpha.length() < n,
       "|alpha|=" + std::to_string(d.alpha.length()));
  push("beta_size", k <= d.beta.length() && d.beta.length() < n,
       "|beta|=" + std::to_string(d.beta.length()));

  bool gap_ok = true;
  for (int ra = 0; ra < n && gap_ok; ++ra) {
    if (d.alpha.mult(ra) == 0) continue;
    for (int rb = 0; rb < n; ++rb) {
      if (d.beta.mult(rb) == 0) continue;
      if (lpr(rb, n) - lpr(ra, n) < k) {
        gap_ok = false;
        break;
      }
    }
  }
  bool disjoint = true;
  for (int r = 0; r < n; ++r)
    if (d.alpha.mult(r) > 0 && d.beta.mult(r) > 0) disjoint = false;
  push("lpr_gap", gap_ok);
  push("disjoint", disjoint);

  const int uu = rep.stats.u, vv = rep.stats.v;
  push("uv_sum", uu + vv >= 2 * k, "u+v=" + std::to_string(uu + vv));
  push("uv_max", std::max(uu, vv) >= k);
  push("uv_min", std::min(uu, vv) >= 2 * k - n + 1);

  rep.uv_equality = (uu + vv == 2 * k);
  if (rep.uv_equality) {
    const int p = d.alpha.length(), q = d.beta.length();
    ZnSeq ea(n), eb(n);
    ea.add(1, 2 * p - n + 1);
    if (n - 1 - p > 0) ea.add(2, n - 1 - p);
    eb.add(0, 2 * q - n + 1);
    if (n - 1 - q > 0) eb.add(-1, n - 1 - q);
    rep.uv_equality_shape = (2 * p >= n - 1 && 2 * q >= n - 1 && d.alpha == ea && d.beta == eb);
    push("uv_equality_shape", rep.uv_equality_shape,
         "p=" + std::to_string(p) + " q=" + std::to_string(q));
  }

  rep.maxuv_equality = (std::max(uu, vv) == k);
  if (rep.maxuv_equality) {
    bool parity = ((n - k) % 2 == 1);
    bool shape = false;
    if (parity) {
      ZnSeq ea(n), eb(n);
      ea.add(1, k);
      if ((n - 1 - k) / 2 > 0) ea.add(2, (n - 1 - k) / 2);
      eb.add(0, k);
      if ((n - 1 - k) / 2 > 0) eb.add(-1, (n - 1 - k) / 2);
      shape = (d.alpha == ea && d.beta == eb);
    }
    rep.maxuv_equality_shape = shape;
    push("uv_max_equality_shape", shape);
  }

  if (2 * k >= n - 1)
    push("top_mult_is_uv_max", rep.stats.top1 == std::max(uu, vv),
         "top1=" + std::to_string(rep.stats.top1));
  return rep;
}

MultStats mult_stats(const ZnSeq& s) {
  const int n = s.modulus();
  MultStats st;
  st.u = s.mult(1 % n);
  st.v = s.mult(0);
  int top1 = 0, top2 = 0;
  for (int r = 0; r < n; ++r) {
    int m = s.mult(r);
    if (m > top1) {
      top2 = top1;
      top1 = m;
    } else if (m > top2) {
      top2 = m;
    }
  }
  st.top1 = top1;
  st.top2sum = top1 + top2;
  st.k = s.length() - (n - 1);
  return st;
}

}  // namespace zslab
