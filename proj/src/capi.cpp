#include "engelrad/engelrad.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "catalog.hpp"
#include "io.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace engelrad;

struct engelrad_group {
  FiniteGroup group;
  GroupSource source;
};

namespace {

thread_local std::string g_last_error;

engelrad_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ENGELRAD_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return ENGELRAD_ERR_PARSE;
    case ErrorCode::OrderCap: return ENGELRAD_ERR_ORDER_CAP;
    case ErrorCode::BadInput: return ENGELRAD_ERR_BAD_INPUT;
    case ErrorCode::Internal: return ENGELRAD_ERR_INTERNAL;
  }
  return ENGELRAD_ERR_INTERNAL;
}

template <typename Fn>
engelrad_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ENGELRAD_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ENGELRAD_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ENGELRAD_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

RunOptions to_run_options(const engelrad_options* opts) {
  RunOptions run;
  if (!opts) {
    run.threads = std::max(1u, std::thread::hardware_concurrency());
    return run;
  }
  run.kmax = opts->kmax;
  run.seed = opts->seed;
  run.threads =
      opts->threads ? opts->threads : std::max(1u, std::thread::hardware_concurrency());
  run.include_timing = opts->include_timing != 0;
  if (opts->max_order) run.max_order = opts->max_order;
  return run;
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

void engelrad_options_init(engelrad_options* opts) {
  if (!opts) return;
  opts->kmax = 0;
  opts->seed = 0;
  opts->threads = 0;
  opts->include_timing = 1;
  opts->max_order = 20000;
}

const char* engelrad_version(void) { return kToolVersion; }

const char* engelrad_last_error(void) { return g_last_error.c_str(); }

engelrad_status engelrad_group_from_catalog(const char* spec, uint32_t max_order,
                                            engelrad_group** out) {
  return guarded([&] {
    require(spec && out, "spec and out must be non-null");
    GroupConfig cfg;
    if (max_order) cfg.max_order = max_order;
    FiniteGroup g = parse_catalog_spec(spec, cfg);
    *out = new engelrad_group{std::move(g), {std::string("catalog:") + spec}};
  });
}

engelrad_status engelrad_group_from_text(const char* text, const char* format,
                                         uint32_t max_order, engelrad_group** out) {
  return guarded([&] {
    require(text && out, "text and out must be non-null");
    GroupConfig cfg;
    if (max_order) cfg.max_order = max_order;
    FiniteGroup g = group_from_text(text, format ? format : "", cfg);
    *out = new engelrad_group{std::move(g), {"text"}};
  });
}

engelrad_status engelrad_group_from_file(const char* path, const char* format,
                                         uint32_t max_order, engelrad_group** out) {
  return guarded([&] {
    require(path && out, "path and out must be non-null");
    GroupConfig cfg;
    if (max_order) cfg.max_order = max_order;
    FiniteGroup g = group_from_file(path, format ? format : "", cfg);
    *out = new engelrad_group{std::move(g), {std::string("file:") + path}};
  });
}

void engelrad_group_free(engelrad_group* g) { delete g; }

uint32_t engelrad_group_order(const engelrad_group* g) { return g ? g->group.order() : 0; }

engelrad_status engelrad_group_mul(const engelrad_group* g, uint32_t a, uint32_t b,
                                   uint32_t* out) {
  return guarded([&] {
    require(g && out, "group and out must be non-null");
    g->group.check_index(a);
    g->group.check_index(b);
    *out = g->group.mul(a, b);
  });
}

engelrad_status engelrad_group_inv(const engelrad_group* g, uint32_t a, uint32_t* out) {
  return guarded([&] {
    require(g && out, "group and out must be non-null");
    g->group.check_index(a);
    *out = g->group.inv(a);
  });
}

engelrad_status engelrad_group_element_label(const engelrad_group* g, uint32_t a, char** out) {
  return guarded([&] {
    require(g && out, "group and out must be non-null");
    g->group.check_index(a);
    *out = dup_string(g->group.element_label(a));
  });
}

engelrad_status engelrad_info_json(const engelrad_group* g, const engelrad_options* opts,
                                   char** out_json) {
  return guarded([&] {
    require(g && out_json, "group and out_json must be non-null");
    *out_json = dup_string(dump_json(run_info(g->group, g->source, to_run_options(opts))));
  });
}

engelrad_status engelrad_classify_json(const engelrad_group* g, const engelrad_options* opts,
                                       char** out_json, int* all_passed) {
  return guarded([&] {
    require(g && out_json, "group and out_json must be non-null");
    Json j = run_classify(g->group, g->source, to_run_options(opts));
    if (all_passed) *all_passed = j["all_passed"].get<bool>() ? 1 : 0;
    *out_json = dup_string(dump_json(j));
  });
}

engelrad_status engelrad_radical_json(const engelrad_group* g, const engelrad_options* opts,
                                      char** out_json, int* oracles_agree) {
  return guarded([&] {
    require(g && out_json, "group and out_json must be non-null");
    Json j = run_radical(g->group, g->source, to_run_options(opts));
    if (oracles_agree)
      *oracles_agree = (j["fitting_oracle_agrees"].get<bool>() &&
                        j["radical_oracle_agrees"].get<bool>())
                           ? 1
                           : 0;
    *out_json = dup_string(dump_json(j));
  });
}

namespace {

engelrad_status run_identity(const engelrad_group* g, IdentityRequest request,
                             const engelrad_options* opts, char** out_json, int* holds) {
  return guarded([&] {
    require(g && out_json, "group and out_json must be non-null");
    bool ok = false;
    Json j = run_check_identity(g->group, g->source, request, to_run_options(opts), &ok);
    if (holds) *holds = ok ? 1 : 0;
    *out_json = dup_string(dump_json(j));
  });
}

}  // namespace

engelrad_status engelrad_check_engel_json(const engelrad_group* g, uint32_t n,
                                          const engelrad_options* opts, char** out_json,
                                          int* holds) {
  IdentityRequest req;
  req.kind = IdentityRequest::Kind::Engel;
  req.engel_n = n;
  return run_identity(g, std::move(req), opts, out_json, holds);
}

engelrad_status engelrad_check_tower_json(const engelrad_group* g, const uint32_t* idx,
                                          size_t k, const engelrad_options* opts,
                                          char** out_json, int* holds) {
  IdentityRequest req;
  req.kind = IdentityRequest::Kind::Tower;
  if (idx) req.tower.assign(idx, idx + k);
  return run_identity(g, std::move(req), opts, out_json, holds);
}

engelrad_status engelrad_check_word_json(const engelrad_group* g, const char* expr,
                                         const engelrad_options* opts, char** out_json,
                                         int* holds) {
  IdentityRequest req;
  req.kind = IdentityRequest::Kind::CustomWord;
  req.word_expr = expr ? expr : "";
  return run_identity(g, std::move(req), opts, out_json, holds);
}

engelrad_status engelrad_check_sequence_json(const engelrad_group* g,
                                             const char* sequence_text, uint32_t index,
                                             const engelrad_options* opts, char** out_json,
                                             int* holds) {
  IdentityRequest req;
  req.kind = IdentityRequest::Kind::SequenceWord;
  req.sequence_text = sequence_text ? sequence_text : "";
  req.sequence_index = index;
  return run_identity(g, std::move(req), opts, out_json, holds);
}

engelrad_status engelrad_verify_group_json(const engelrad_group* g,
                                           const engelrad_options* opts, char** out_json,
                                           int* all_passed) {
  return guarded([&] {
    require(g && out_json, "group and out_json must be non-null");
    bool ok = false;
    Json j = run_verify_group(g->group, g->source, to_run_options(opts), &ok);
    if (all_passed) *all_passed = ok ? 1 : 0;
    *out_json = dup_string(dump_json(j));
  });
}

engelrad_status engelrad_verify_suite_json(const char* suite, const engelrad_options* opts,
                                           char** out_json, int* all_passed) {
  return guarded([&] {
    require(out_json, "out_json must be non-null");
    require(suite && std::string(suite) == "catalog", "unknown suite (expected \"catalog\")");
    bool ok = false;
    Json j = run_verify_suite(to_run_options(opts), &ok);
    if (all_passed) *all_passed = ok ? 1 : 0;
    *out_json = dup_string(dump_json(j));
  });
}

void engelrad_string_free(char* s) { std::free(s); }

}  // extern "C"
