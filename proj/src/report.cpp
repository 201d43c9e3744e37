#include "zslab/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zslab {

void VerificationReport::note_min(const std::string& name, std::int64_t value, const std::string& witness) {
  auto it = extrema.find(name);
  if (it == extrema.end()) {
    extrema[name] = {value, witness, true};
    return;
  }
  Extremum& e = it->second;
  if (value < e.value || (value == e.value && witness < e.witness)) e = {value, witness, true};
}

void VerificationReport::note_max(const std::string& name, std::int64_t value, const std::string& witness) {
  auto it = extrema.find(name);
  if (it == extrema.end()) {
    extrema[name] = {value, witness, false};
    return;
  }
  Extremum& e = it->second;
  if (value > e.value || (value == e.value && witness < e.witness)) e = {value, witness, false};
}

void VerificationReport::fail(const std::string& message) { failures.insert(message); }

VerificationReport VerificationReport::merged(const VerificationReport& a, const VerificationReport& b) {
  if (a.task != b.task) throw std::invalid_argument("cannot merge reports of different tasks");
  if (a.params != b.params) throw std::invalid_argument("cannot merge reports with different parameters");
  if (a.shard_total != b.shard_total) throw std::invalid_argument("cannot merge reports with different shard layouts");
  VerificationReport out = a;
  for (int idx : b.shard_indices) {
    if (!out.shard_indices.insert(idx).second)
      throw std::invalid_argument("overlapping shards in merge: " + std::to_string(idx));
  }
  for (const auto& [k, v] : b.counters) out.counters[k] += v;
  for (const auto& [k, e] : b.extrema) {
    if (e.minimize)
      out.note_min(k, e.value, e.witness);
    else
      out.note_max(k, e.value, e.witness);
  }
  out.failures.insert(b.failures.begin(), b.failures.end());
  out.wall_ms += b.wall_ms;
  return out;
}

std::string VerificationReport::to_json_string() const {
  nlohmann::json j;
  j["task"] = task;
  j["params"] = params;
  if (complete()) {
    j["coverage"] = "complete";
  } else {
    j["coverage"] = {{"shard_total", shard_total},
                     {"shard_indices", std::vector<int>(shard_indices.begin(), shard_indices.end())}};
  }
  j["counters"] = counters;
  nlohmann::json ext = nlohmann::json::object();
  for (const auto& [k, e] : extrema) ext[k] = {{"value", e.value}, {"witness", e.witness}};
  j["extrema"] = ext;
  j["failures"] = std::vector<std::string>(failures.begin(), failures.end());
  j["wall_ms"] = wall_ms;
  return j.dump();
}

std::string VerificationReport::to_table() const {
  std::ostringstream os;
  os << "task: " << task << "\n";
  for (const auto& [k, v] : params) os << "param " << k << ": " << v << "\n";
  os << "coverage: ";
  if (complete()) {
    os << "complete\n";
  } else {
    os << "shards";
    for (int i : shard_indices) os << ' ' << i;
    os << " of " << shard_total << "\n";
  }
  for (const auto& [k, v] : counters) os << "  " << k << ": " << v << "\n";
  for (const auto& [k, e] : extrema)
    os << "  " << k << ": " << e.value << "   [" << e.witness << "]\n";
  if (failures.empty()) {
    os << "failures: 0\n";
  } else {
    os << "failures: " << failures.size() << "\n";
    for (const auto& f : failures) os << "  FAIL " << f << "\n";
  }
  os << "wall: " << wall_ms << " ms\n";
  return os.str();
}

}  // namespace zslab
