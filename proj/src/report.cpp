#include "report.hpp"

#include <chrono>

#include "engel.hpp"
#include "quasinil.hpp"
#include "quotient.hpp"
#include "radicals.hpp"
#include "varieties.hpp"
#include "verify.hpp"
#include "words.hpp"

namespace engelrad {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

const char* backend_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::Permutation: return "permutation";
    case BackendKind::CayleyTable: return "cayley-table";
    case BackendKind::Matrix: return "matrix";
  }
  return "?";
}

Json index_array(const std::vector<ElementIndex>& v) {
  Json a = Json::array();
  for (ElementIndex e : v) a.push_back(e);
  return a;
}

Json label_array(const FiniteGroup& g, const std::vector<ElementIndex>& v) {
  Json a = Json::array();
  for (ElementIndex e : v) a.push_back(g.element_label(e));
  return a;
}

}  // namespace

Json group_json(const FiniteGroup& g, const GroupSource& source) {
  Json j;
  j["source"] = source.description;
  j["backend"] = backend_name(g.backend());
  j["description"] = g.description();
  j["order"] = g.order();
  return j;
}

Json report_header(const char* command, const RunOptions& opts) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["seed"] = opts.seed;
  return j;
}

void finish_report(Json& out, const RunOptions& opts, double elapsed_ms) {
  if (opts.include_timing) out["timing_ms"] = elapsed_ms;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json run_info(const FiniteGroup& g, const GroupSource& source, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Json out = report_header("info", opts);
  out["group"] = group_json(g, source);
  out["center_order"] = center(g).size();
  Subgroup whole = full_subgroup(g);
  auto cls = nilpotency_class(g, whole);
  auto len = derived_length(g, whole);
  out["nilpotent"] = cls.has_value();
  out["nilpotency_class"] = cls ? Json(*cls) : Json(nullptr);
  out["solvable"] = len.has_value();
  out["derived_length"] = len ? Json(*len) : Json(nullptr);
  out["generators"] = label_array(g, g.generator_indices());
  finish_report(out, opts, ms_since(start));
  return out;
}

Json run_classify(const FiniteGroup& g, const GroupSource& source, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Json out = report_header("classify", opts);
  out["group"] = group_json(g, source);

  RadicalSeries series = upper_radical_series(g, opts.threads);
  QuasiNilClassifier cls(g, opts.kmax);
  out["kmax"] = cls.kmax();
  out["fitting"] =
      index_array(series.members.size() > 1 ? series.members[1].elements
                                            : series.members[0].elements);
  Json series_json = Json::array();
  Json series_orders = Json::array();
  for (const Subgroup& m : series.members) {
    series_json.push_back(index_array(m.elements));
    series_orders.push_back(m.size());
  }
  out["radical_series"] = std::move(series_json);
  out["series_orders"] = std::move(series_orders);
  out["solvable_radical"] = index_array(series.top().elements);

  Json elements = Json::array();
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    Json rec;
    rec["index"] = e;
    rec["label"] = g.element_label(e);
    NilVerdict nil = nil_verdict(g, e);
    rec["is_nil"] = nil.is_nil;
    if (nil.engel_bound) rec["engel_bound"] = *nil.engel_bound;
    NilOrderResult order = cls.nil_order(e);
    rec["nil_order"] = order.nil_order ? Json(*order.nil_order) : Json("none");
    if (!order.nil_order) {
      rec["counterexample"] = index_array(order.counterexample);
      rec["counterexample_verified"] = order.counterexample_verified;
    }
    elements.push_back(std::move(rec));
  }
  out["elements"] = std::move(elements);

  GroupVerification verification = run_verification(g, opts);
  out["verification"] = verification.checks;
  out["all_passed"] = verification.all_passed;
  out["memo"] = Json{{"hits", cls.memo_hits()}, {"misses", cls.memo_misses()}};
  finish_report(out, opts, ms_since(start));
  return out;
}

Json run_radical(const FiniteGroup& g, const GroupSource& source, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Json out = report_header("radical", opts);
  out["group"] = group_json(g, source);

  Subgroup fitting = fitting_subgroup(g, opts.threads);
  Json fit;
  fit["order"] = fitting.size();
  fit["nilpotency_class"] = *fitting.nil_class.value();
  fit["elements"] = index_array(fitting.elements);
  out["fitting"] = std::move(fit);

  RadicalSeries series = upper_radical_series(g, opts.threads);
  Json series_json = Json::array();
  Json series_orders = Json::array();
  for (const Subgroup& m : series.members) {
    series_json.push_back(index_array(m.elements));
    series_orders.push_back(m.size());
  }
  out["series_orders"] = std::move(series_orders);
  out["radical_series"] = std::move(series_json);

  Json rad;
  rad["order"] = series.top().size();
  rad["elements"] = index_array(series.top().elements);
  out["solvable_radical"] = std::move(rad);
  out["semisimple"] = fitting.size() == 1;

  out["fitting_oracle_agrees"] = fitting_oracle(g).elements == fitting.elements;
  out["radical_oracle_agrees"] =
      solvable_radical_oracle(g).elements == series.top().elements;
  finish_report(out, opts, ms_since(start));
  return out;
}

namespace {

Json verdict_json(const FiniteGroup& g, const IdentityVerdict& v) {
  Json j;
  j["identity"] = v.descriptor;
  j["holds"] = v.holds;
  j["mode"] = v.mode == CheckMode::Exhaustive ? "exhaustive" : "sampled";
  j["checked"] = v.checked;
  if (v.mode == CheckMode::Sampled) j["seed"] = v.seed;
  if (!v.holds) {
    j["witness"] = index_array(v.witness);
    j["witness_labels"] = label_array(g, v.witness);
  }
  return j;
}

}  // namespace

Json run_check_identity(const FiniteGroup& g, const GroupSource& source,
                        const IdentityRequest& request, const RunOptions& opts,
                        bool* holds_out) {
  auto start = std::chrono::steady_clock::now();
  Json out = report_header("check-identity", opts);
  out["group"] = group_json(g, source);

  IdentityBudget budget;
  budget.seed = opts.seed;
  budget.threads = opts.threads;
  IdentityVerdict verdict;
  switch (request.kind) {
    case IdentityRequest::Kind::Engel:
      verdict = satisfies_engel_identity(g, request.engel_n, budget);
      break;
    case IdentityRequest::Kind::Tower:
      verdict = satisfies_tower_identity(g, request.tower, budget);
      break;
    case IdentityRequest::Kind::CustomWord:
      verdict = satisfies_word_identity(g, parse_word(request.word_expr), budget);
      break;
    case IdentityRequest::Kind::SequenceWord: {
      WordSequence seq = WordSequence::from_text("sequence", request.sequence_text);
      Word w = seq.word(request.sequence_index);
      verdict = satisfies_word_identity(g, w, budget);
      verdict.descriptor =
          "sequence(u_" + std::to_string(request.sequence_index) + " = " + w.str() + ")";
      // User sequences must behave like a usable word sequence on the group
      // they are checked against; violations are report content.
      SequenceCheckBudget seq_budget;
      seq_budget.seed = opts.seed;
      SequenceCheckReport check = check_sequence(g, seq, seq_budget);
      Json sc;
      sc["vanishes_at_identity"] = check.vanish_at_one_ok;
      sc["vanishing_persists"] = check.persistence_ok;
      sc["indices_checked"] = check.n_checked;
      sc["pairs_checked"] = check.pairs_checked;
      sc["pairs_exhaustive"] = check.pairs_exhaustive;
      if (!check.vanish_at_one_ok) {
        sc["violation_index"] = *check.v1_n;
        sc["violation_element"] = *check.v1_element;
        sc["violation_side"] = check.v1_side;
      }
      if (!check.persistence_ok) {
        sc["violation"] = Json{{"a", *check.p2_a},
                               {"y", *check.p2_g},
                               {"vanished_at", *check.p2_n},
                               {"nonzero_at", *check.p2_m}};
      }
      out["sequence_check"] = std::move(sc);
      break;
    }
  }
  out["verdict"] = verdict_json(g, verdict);
  if (holds_out) *holds_out = verdict.holds;
  finish_report(out, opts, ms_since(start));
  return out;
}

}  // namespace engelrad
