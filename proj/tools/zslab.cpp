#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zslab/core.hpp"
#include "zslab/enumeration.hpp"
#include "zslab/extremal.hpp"
#include "zslab/separability.hpp"
#include "zslab/zerosum.hpp"

namespace {

using nlohmann::json;
using namespace zslab;

constexpr const char* kRecordSchema = "zslab.record/1";
constexpr int kLargeN = 10;  // verify tasks above this need --allow-large-n

struct OutputSpec {
  std::string format = "text";
  std::string path;
};

void write_output(const OutputSpec& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw std::invalid_argument("cannot open output file " + out.path);
  f << text;
}

json base_record(const std::string& command) {
  json j;
  j["schema"] = kRecordSchema;
  j["command"] = command;
  return j;
}

json decomposition_record(const Decomposition& d) {
  json j;
  j["map"] = {{"a", d.map.a}, {"b", d.map.b}};
  j["alpha"] = to_string(d.alpha);
  j["beta"] = to_string(d.beta);
  j["lpr_alpha"] = lpr_sum(d.alpha);
  j["lpr_one_minus_beta"] = lpr_sum(one_minus(d.beta));
  return j;
}

void print_decomposition(std::ostream& os, const Decomposition& d) {
  const int n = d.map.n;
  os << "map: " << to_string(d.map) << "\n"
     << "alpha: " << to_string(d.alpha) << "\n"
     << "beta: " << to_string(d.beta) << "\n"
     << "L(alpha): " << lpr_sum(d.alpha) << " (< " << n << ")\n"
     << "L(1-beta): " << lpr_sum(one_minus(d.beta)) << " (< " << n << ")\n";
}

int run_check(const std::string& literal, const std::string& in_path, const OutputSpec& out) {
  std::vector<std::string> inputs;
  if (!literal.empty() && !in_path.empty())
    throw std::invalid_argument("give either a sequence literal or --in, not both");
  if (literal.empty() && in_path.empty())
    throw std::invalid_argument("need a sequence literal or --in FILE");
  if (!literal.empty()) {
    inputs.push_back(literal);
  } else {
    std::ifstream f(in_path);
    if (!f) throw std::invalid_argument("cannot open input file " + in_path);
    std::string line;
    while (std::getline(f, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) inputs.push_back(line);
    }
  }

  std::ostringstream os;
  bool first = true;
  for (const std::string& text : inputs) {
    const ZnSeq s = parse_seq(text);
    const int n = s.modulus();
    const bool nzf = is_n_zero_free(s);
    const bool zf = is_zero_free(s);
    const MultStats st = mult_stats(s);
    const bool long_enough = 2 * s.length() > 3 * n - 2;
    std::optional<Decomposition> dec;
    if (long_enough) dec = is_separable(s);

    if (out.format == "json") {
      json j = base_record("check");
      j["sequence"] = to_string(s);
      j["n"] = n;
      j["length"] = s.length();
      j["n_zero_free"] = nzf;
      j["zero_free"] = zf;
      j["stats"] = {{"u", st.u}, {"v", st.v}, {"top1", st.top1}, {"top2sum", st.top2sum}, {"k", st.k}};
      if (long_enough) {
        j["separable"] = dec.has_value();
        if (dec) j["decomposition"] = decomposition_record(*dec);
      }
      os << j.dump() << "\n";
    } else {
      if (!first) os << "\n";
      os << "sequence: " << to_string(s) << "\n"
         << "length: " << s.length() << "\n"
         << "n-zero-free: " << (nzf ? "true" : "false");
      if (!nzf) {
        auto w = has_zero_sum_of_length(s, n);
        if (w) os << "   (witness " << to_string(w->subseq) << ")";
      }
      os << "\n"
         << "zero-free: " << (zf ? "true" : "false") << "\n"
         << "stats: u=" << st.u << " v=" << st.v << " top1=" << st.top1
         << " top2sum=" << st.top2sum << " k=" << st.k << "\n";
      if (long_enough) {
        os << "separable: " << (dec ? "true" : "false") << "\n";
        if (dec) print_decomposition(os, *dec);
      }
    }
    first = false;
  }
  write_output(out, os.str());
  return 0;
}

int run_decompose(const std::string& literal, bool proof_path, const OutputSpec& out) {
  if (literal.empty()) throw std::invalid_argument("need a sequence literal");
  const ZnSeq s = parse_seq(literal);
  std::optional<Decomposition> dec;
  if (proof_path) {
    dec = decompose_via_proof(s);  // precondition violations throw
  } else {
    dec = is_separable(s);
  }

  std::ostringstream os;
  if (out.format == "json") {
    json j = base_record("decompose");
    j["sequence"] = to_string(s);
    j["proof_path"] = proof_path;
    j["separable"] = dec.has_value();
    if (dec) j["decomposition"] = decomposition_record(*dec);
    os << j.dump() << "\n";
  } else {
    os << "sequence: " << to_string(s) << "\n";
    if (!dec) {
      os << "separable: false (searched the full affine orbit)\n";
    } else {
      os << "separable: true\n";
      print_decomposition(os, *dec);
    }
  }
  write_output(out, os.str());
  return 0;
}

struct GenParams {
  int n = 0;
  int k = -1;
  int p = -1;
  int q = -1;
};

FamilyInstance make_family(const std::string& family, const GenParams& gp) {
  auto need = [&](const char* name, int value) {
    if (value < 0) throw std::invalid_argument(family + " needs --" + name);
    return value;
  };
  if (family == "equality-uv")
    return gen_equality_uv(gp.n, need("k", gp.k), need("p", gp.p), need("q", gp.q));
  if (family == "min-max-mult") return gen_min_max_mult(gp.n, need("k", gp.k));
  if (family == "boundary") return gen_boundary_counterexample(gp.n);
  if (family == "gnk-lower") return gen_gnk_lower_bound(gp.n, need("k", gp.k));
  throw std::invalid_argument("unknown family " + family);
}

int run_gen(const std::string& family, const GenParams& gp, bool check, const OutputSpec& out) {
  const FamilyInstance fi = make_family(family, gp);

  std::vector<std::pair<std::string, bool>> results;
  if (check) {
    results.emplace_back("length=" + std::to_string(fi.claimed_length),
                         fi.seq.length() == fi.claimed_length);
    if (fi.claims_n_zero_free) results.emplace_back("n-zero-free", is_n_zero_free(fi.seq));
    if (fi.claimed_top1)
      results.emplace_back("top1=" + std::to_string(*fi.claimed_top1),
                           mult_stats(fi.seq).top1 == *fi.claimed_top1);
    if (fi.claimed_uv_sum) {
      const MultStats st = mult_stats(fi.seq);
      results.emplace_back("u+v=" + std::to_string(*fi.claimed_uv_sum),
                           st.u + st.v == *fi.claimed_uv_sum);
    }
    if (fi.claimed_distinct)
      results.emplace_back("distinct=" + std::to_string(*fi.claimed_distinct),
                           fi.seq.distinct_terms() == *fi.claimed_distinct);
    if (fi.claims_not_separable)
      results.emplace_back("not-separable", !is_separable(fi.seq).has_value());
  }

  std::ostringstream os;
  if (out.format == "json") {
    json j = base_record("gen");
    j["family"] = fi.family;
    j["params"] = fi.params;
    j["sequence"] = to_string(fi.seq);
    json claims = json::object();
    claims["length"] = fi.claimed_length;
    claims["n_zero_free"] = fi.claims_n_zero_free;
    if (fi.claimed_top1) claims["top1"] = *fi.claimed_top1;
    if (fi.claimed_uv_sum) claims["uv_sum"] = *fi.claimed_uv_sum;
    if (fi.claimed_distinct) claims["distinct"] = *fi.claimed_distinct;
    if (fi.claims_not_separable) claims["not_separable"] = true;
    j["claims"] = claims;
    if (check) {
      json checked = json::object();
      for (const auto& [name, pass] : results) checked[name] = pass;
      j["checked"] = checked;
    }
    os << j.dump() << "\n";
  } else {
    os << to_string(fi.seq) << "\n";
    os << "family: " << fi.family;
    for (const auto& [k, v] : fi.params) os << " " << k << "=" << v;
    os << "\n";
    os << "claims: length=" << fi.claimed_length;
    if (fi.claims_n_zero_free) os << " n-zero-free";
    if (fi.claimed_top1) os << " top1=" << *fi.claimed_top1;
    if (fi.claimed_uv_sum) os << " u+v=" << *fi.claimed_uv_sum;
    if (fi.claimed_distinct) os << " distinct=" << *fi.claimed_distinct;
    if (fi.claims_not_separable) os << " not-separable";
    os << "\n";
    for (const auto& [name, pass] : results)
      os << (pass ? "ok " : "FAIL ") << name << "\n";
  }
  write_output(out, os.str());
  for (const auto& [name, pass] : results)
    if (!pass) return 1;
  return 0;
}

RunSpec parse_run_spec(int shards, const std::string& shard, int jobs) {
  RunSpec spec;
  spec.jobs = jobs;
  if (!shard.empty()) {
    if (shards != 1) throw std::invalid_argument("give either --shard or --shards, not both");
    const auto slash = shard.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("--shard wants INDEX/TOTAL, got " + shard);
    try {
      spec.shard_index = std::stoi(shard.substr(0, slash));
      spec.shard_total = std::stoi(shard.substr(slash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("--shard wants INDEX/TOTAL, got " + shard);
    }
    if (spec.shard_index < 0 || spec.shard_index >= spec.shard_total)
      throw std::invalid_argument("shard index must lie below shard total");
  } else {
    spec.shard_total = shards;
    spec.shard_index = -1;
  }
  return spec;
}

int run_verify(const std::string& task, int n, int k, const RunSpec& spec, bool allow_large,
               const OutputSpec& out) {
  if (n > kLargeN && !allow_large)
    throw std::invalid_argument("n=" + std::to_string(n) +
                                " is above the desk-scale default (n <= " + std::to_string(kLargeN) +
                                "); pass --allow-large-n to run anyway");
  VerificationReport rep;
  if (task == "characterization") {
    rep = verify_characterization(n, spec);
  } else if (task == "multiplicities") {
    if (k < 0) throw std::invalid_argument("multiplicities needs --k");
    rep = min_multiplicities(n, k, spec);
  } else if (task == "gnk") {
    rep = verify_gnk(n, spec);
  } else if (task == "boundary") {
    rep = boundary_survey(n, spec);
  } else {
    throw std::invalid_argument("unknown task " + task);
  }

  std::ostringstream os;
  if (out.format == "json") {
    json j = base_record("verify");
    j["report"] = json::parse(rep.to_json_string());
    os << j.dump() << "\n";
  } else {
    os << rep.to_table();
  }
  write_output(out, os.str());
  return rep.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum structure laboratory for cyclic groups Z_n"};
  app.require_subcommand(1);

  std::string format = "text", out_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* check = app.add_subcommand("check", "analyze sequences: zero-freeness, stats, separability");
  std::string check_seq, check_in;
  check->add_option("seq", check_seq, "sequence literal, e.g. \"n=7: 0^4 1^4 2 6\"");
  check->add_option("--in", check_in, "file with one sequence per line");

  auto* decompose = app.add_subcommand("decompose", "split a sequence into alpha and beta");
  std::string dec_seq;
  bool dec_proof = false;
  decompose->add_option("seq", dec_seq, "sequence literal");
  decompose->add_flag("--proof", dec_proof,
                      "use the constructive path (needs length > 3n/2 - 1 and n-zero-freeness)");

  auto* gen = app.add_subcommand("gen", "emit a named extremal family instance");
  std::string gen_family;
  GenParams gp;
  bool gen_check = false;
  gen->add_option("family", gen_family, "equality-uv | min-max-mult | boundary | gnk-lower")
      ->required();
  gen->add_option("--n", gp.n, "modulus")->required();
  gen->add_option("--k", gp.k, "k parameter");
  gen->add_option("--p", gp.p, "p parameter (equality-uv)");
  gen->add_option("--q", gp.q, "q parameter (equality-uv)");
  gen->add_flag("--check", gen_check, "verify the claims with the engine");

  auto* verify = app.add_subcommand("verify", "run an exhaustive verification task");
  std::string ver_task, ver_shard;
  int ver_n = 0, ver_k = -1, ver_shards = 1;
  int ver_jobs = 1;
  if (const char* env = std::getenv("ZSLAB_JOBS")) {
    try {
      ver_jobs = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      ver_jobs = 1;
    }
  }
  bool ver_large = false;
  verify->add_option("task", ver_task, "characterization | multiplicities | gnk | boundary")
      ->required();
  verify->add_option("--n", ver_n, "modulus")->required();
  verify->add_option("--k", ver_k, "k parameter (multiplicities)");
  verify->add_option("--shards", ver_shards, "split the work into this many shards and merge");
  verify->add_option("--shard", ver_shard, "run one shard only, as INDEX/TOTAL");
  verify->add_option("--jobs", ver_jobs, "worker threads (default from ZSLAB_JOBS)");
  verify->add_flag("--allow-large-n", ver_large, "permit n above the desk-scale default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputSpec out{format, out_path};
    if (check->parsed()) return run_check(check_seq, check_in, out);
    if (decompose->parsed()) return run_decompose(dec_seq, dec_proof, out);
    if (gen->parsed()) return run_gen(gen_family, gp, gen_check, out);
    if (verify->parsed())
      return run_verify(ver_task, ver_n, ver_k, parse_run_spec(ver_shards, ver_shard, ver_jobs),
                        ver_large, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
