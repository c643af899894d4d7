#include "verify.hpp"

#include <chrono>

#include "catalog.hpp"
#include "engel.hpp"
#include "quasinil.hpp"
#include "radicals.hpp"

namespace engelrad {

namespace {

constexpr std::uint32_t kBaerCap = 200;
constexpr std::uint32_t kQuasiNilCap = 120;
constexpr std::uint32_t kPairwiseCap = 200;

Json index_array(const std::vector<ElementIndex>& v) {
  Json a = Json::array();
  for (ElementIndex e : v) a.push_back(e);
  return a;
}

Json skipped_check(const char* name, std::uint32_t cap) {
  Json j;
  j["name"] = name;
  j["order_cap"] = cap;
  j["skipped"] = true;
  return j;
}

Json check_shell(const char* name, std::uint32_t cap) {
  Json j;
  j["name"] = name;
  j["order_cap"] = cap;
  j["skipped"] = false;
  return j;
}

}  // namespace

GroupVerification run_verification(const FiniteGroup& g, const RunOptions& opts) {
  GroupVerification out;
  auto add = [&](Json check) {
    if (!check["skipped"].get<bool>()) {
      ++out.checks_run;
      if (!check["pass"].get<bool>()) out.all_passed = false;
    }
    out.checks.push_back(std::move(check));
  };

  // Baer equivalence: the nil-element set is the Fitting subgroup computed
  // by the independent normal-closure route, and is product-closed.
  if (g.order() <= kBaerCap) {
    Json j = check_shell("nil_set_equals_fitting_oracle", kBaerCap);
    std::vector<ElementIndex> nil = nil_element_set(g, opts.threads);
    Subgroup oracle = fitting_oracle(g);
    bool equal = nil == oracle.elements;
    bool closed = true;
    std::vector<std::uint8_t> member(g.order(), 0);
    for (ElementIndex e : nil) member[e] = 1;
    for (ElementIndex a : nil) {
      for (ElementIndex b : nil)
        if (!member[g.mul(a, b)]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    j["pass"] = equal && closed;
    j["nil_count"] = static_cast<std::uint32_t>(nil.size());
    j["oracle_count"] = oracle.size();
    j["product_closed"] = closed;
    if (!equal) {
      j["nil_set"] = index_array(nil);
      j["oracle_set"] = index_array(oracle.elements);
    }
    add(std::move(j));
  } else {
    add(skipped_check("nil_set_equals_fitting_oracle", kBaerCap));
  }

  // Radical characterization and per-element nil-orders.
  if (g.order() <= kQuasiNilCap) {
    {
      // The battery always searches at the sound default bound; a smaller
      // user bound would turn radical members into false negatives.
      Json j = check_shell("quasinil_set_equals_radical", kQuasiNilCap);
      SetAgreementReport rep = verify_quasinil_radical(g, 0, opts.threads);
      j["pass"] = rep.pass;
      j["quasinil_count"] = rep.left_size;
      j["radical_count"] = rep.right_size;
      if (!rep.pass) {
        j["only_quasinil"] = index_array(rep.only_left);
        j["only_radical"] = index_array(rep.only_right);
      }
      add(std::move(j));
    }
    {
      Json j = check_shell("nil_order_equals_series_depth", kQuasiNilCap);
      DepthAgreementReport rep = verify_nil_order_depths(g, opts.threads);
      j["pass"] = rep.pass;
      j["elements_checked"] = rep.elements_checked;
      if (!rep.pass) {
        Json bad = Json::array();
        for (const auto& m : rep.mismatches)
          bad.push_back(Json{{"element", m.element},
                             {"nil_order", m.nil_order ? Json(*m.nil_order) : Json("none")},
                             {"series_depth", m.series_depth}});
        j["mismatches"] = std::move(bad);
      }
      add(std::move(j));
    }
    {
      Json j = check_shell("quasinil_implies_nil", kQuasiNilCap);
      NilExistenceReport rep = verify_quasinil_implies_nil(g, opts.threads);
      j["pass"] = rep.pass;
      j["semisimple"] = rep.semisimple;
      j["quasi_nil_count"] = rep.quasi_nil_count;
      j["nil_count"] = rep.nil_count;
      add(std::move(j));
    }
  } else {
    add(skipped_check("quasinil_set_equals_radical", kQuasiNilCap));
    add(skipped_check("nil_order_equals_series_depth", kQuasiNilCap));
    add(skipped_check("quasinil_implies_nil", kQuasiNilCap));
  }

  // Two-generated solvability against radical fullness.
  if (g.order() <= kPairwiseCap) {
    Json j = check_shell("pairwise_solvable_iff_radical_full", kPairwiseCap);
    PairwiseSolvableResult rep = pairwise_solvable(g, 10000, opts.seed);
    bool radical_full = solvable_radical(g, opts.threads).size() == g.order();
    j["pass"] = rep.all_solvable == radical_full;
    j["pairwise_solvable"] = rep.all_solvable;
    j["radical_full"] = radical_full;
    j["pairs_checked"] = rep.pairs_checked;
    if (rep.witness) {
      j["witness_pair"] = Json::array({rep.witness->first, rep.witness->second});
      j["witness_labels"] = Json::array({g.element_label(rep.witness->first),
                                         g.element_label(rep.witness->second)});
    }
    add(std::move(j));
  } else {
    add(skipped_check("pairwise_solvable_iff_radical_full", kPairwiseCap));
  }

  return out;
}

Json run_verify_group(const FiniteGroup& g, const GroupSource& source, const RunOptions& opts,
                      bool* all_passed) {
  auto start = std::chrono::steady_clock::now();
  Json out = report_header("verify", opts);
  out["group"] = group_json(g, source);
  GroupVerification v = run_verification(g, opts);
  out["checks"] = std::move(v.checks);
  out["checks_run"] = v.checks_run;
  out["all_passed"] = v.all_passed;
  if (all_passed) *all_passed = v.all_passed;
  finish_report(out, opts,
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count());
  return out;
}

Json run_verify_suite(const RunOptions& opts, bool* all_passed) {
  auto start = std::chrono::steady_clock::now();
  Json out = report_header("verify", opts);
  out["suite"] = "catalog";
  bool ok = true;
  std::uint32_t total_run = 0;
  Json groups = Json::array();
  for (const std::string& name : builtin_catalog()) {
    GroupConfig cfg;
    cfg.max_order = opts.max_order;
    FiniteGroup g = parse_catalog_spec(name, cfg);
    Json entry;
    entry["name"] = name;
    entry["order"] = g.order();
    GroupVerification v = run_verification(g, opts);
    entry["checks"] = std::move(v.checks);
    entry["all_passed"] = v.all_passed;
    total_run += v.checks_run;
    ok = ok && v.all_passed;
    groups.push_back(std::move(entry));
  }
  out["groups"] = std::move(groups);
  out["checks_run"] = total_run;
  out["all_passed"] = ok;
  if (all_passed) *all_passed = ok;
  finish_report(out, opts,
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count());
  return out;
}

}  // namespace engelrad
