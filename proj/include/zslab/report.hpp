#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace zslab {

// Outcome record of an exhaustive run. Reports over disjoint work shards
// merge associatively and commutatively: counters add, extrema combine,
// failures union. Ties between extremum witnesses go to the smaller witness
// text so the merged report does not depend on shard boundaries.
struct VerificationReport {
  struct Extremum {
    std::int64_t value = 0;
    std::string witness;
    bool minimize = true;
  };

  std::string task;
  std::map<std::string, std::int64_t> params;
  std::map<std::string, std::int64_t> counters;
  std::map<std::string, Extremum> extrema;
  std::set<std::string> failures;
  std::int64_t wall_ms = 0;
  int shard_total = 1;
  std::set<int> shard_indices = {0};

  bool complete() const { return static_cast<int>(shard_indices.size()) == shard_total; }
  bool failed() const { return !failures.empty(); }

  void bump(const std::string& key, std::int64_t delta = 1) { counters[key] += delta; }
  void note_min(const std::string& name, std::int64_t value, const std::string& witness);
  void note_max(const std::string& name, std::int64_t value, const std::string& witness);
  void fail(const std::string& message);

  // Throws when task, params or shard layout are incompatible or overlap.
  static VerificationReport merged(const VerificationReport& a, const VerificationReport& b);

  std::string to_json_string() const;  // stable key order, single line
  std::string to_table() const;        // human-readable
};

}  // namespace zslab
