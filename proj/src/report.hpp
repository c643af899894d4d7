#pragma once

#include <string>

#include <json.hpp>

#include "group.hpp"

namespace engelrad {

inline constexpr const char* kToolName = "engelrad";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

/// Options shared by every report-producing command. Reports are
/// byte-identical for equal options (and any thread count) once timing is
/// disabled.
struct RunOptions {
  std::uint32_t kmax = 0;  // 0: per-group default
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool include_timing = true;
  std::uint32_t max_order = 20000;
};

/// Where the group came from, for the report header.
struct GroupSource {
  std::string description;  // "catalog:s4", "file:groups/foo.perm", "text"
};

Json group_json(const FiniteGroup& g, const GroupSource& source);
Json report_header(const char* command, const RunOptions& opts);
void finish_report(Json& out, const RunOptions& opts, double elapsed_ms);
std::string dump_json(const Json& j);

Json run_info(const FiniteGroup& g, const GroupSource& source, const RunOptions& opts);
Json run_classify(const FiniteGroup& g, const GroupSource& source, const RunOptions& opts);
Json run_radical(const FiniteGroup& g, const GroupSource& source, const RunOptions& opts);

/// One of: engel level, tower index, custom word, sequence word. Exactly one
/// descriptor is used per call, selected by the CLI flags.
struct IdentityRequest {
  enum class Kind { Engel, Tower, CustomWord, SequenceWord } kind = Kind::Engel;
  std::uint32_t engel_n = 1;
  std::vector<std::uint32_t> tower;
  std::string word_expr;
  std::string sequence_text;
  std::uint32_t sequence_index = 1;
};

Json run_check_identity(const FiniteGroup& g, const GroupSource& source,
                        const IdentityRequest& request, const RunOptions& opts,
                        bool* holds_out);

}  // namespace engelrad
