// engelrad command-line tool. Talks to the core exclusively through the
// public C API in engelrad/engelrad.h.
//
// Exit codes: 0 all checks passed, 1 a verification or identity check
// failed, 2 input or usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "engelrad/engelrad.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct GroupDeleter {
  void operator()(engelrad_group* g) const { engelrad_group_free(g); }
};
using GroupPtr = std::unique_ptr<engelrad_group, GroupDeleter>;

struct CommonArgs {
  std::string input;
  std::string format;
  std::string catalog;
  std::uint32_t kmax = 0;
  std::uint32_t max_order = 20000;
  std::uint32_t threads = 0;
  std::uint64_t seed = 0;
  std::string json_path;
  bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_group) {
  if (with_group) {
    cmd->add_option("--input", args.input, "input file (see README for formats)");
    cmd->add_option("--format", args.format, "input format: perm|table|matrix")
        ->check(CLI::IsMember({"perm", "table", "matrix"}));
    cmd->add_option("--catalog", args.catalog,
                    "catalog group, e.g. s4, q8, cyclic,12, ut3_2, a4xa5");
  }
  cmd->add_option("--kmax", args.kmax, "quasi-nil search bound (default: log2-based)");
  cmd->add_option("--max-order", args.max_order, "group order cap (default 20000)");
  cmd->add_option("--threads", args.threads, "worker threads (default: all cores)");
  cmd->add_option("--seed", args.seed, "seed for sampled checks");
  cmd->add_option("--json", args.json_path, "write the JSON report to this file");
  cmd->add_flag("--no-timing", args.no_timing, "omit timing fields from the report");
}

engelrad_options make_options(const CommonArgs& args) {
  engelrad_options opts;
  engelrad_options_init(&opts);
  opts.kmax = args.kmax;
  opts.seed = args.seed;
  opts.threads = args.threads;
  opts.include_timing = args.no_timing ? 0 : 1;
  opts.max_order = args.max_order;
  return opts;
}

int fail_input(const std::string& context) {
  std::cerr << "error: " << context;
  const char* detail = engelrad_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  return kExitInputError;
}

int open_group(const CommonArgs& args, GroupPtr& out) {
  if (args.catalog.empty() == args.input.empty()) {
    std::cerr << "error: pass exactly one of --catalog or --input\n";
    return kExitInputError;
  }
  engelrad_group* raw = nullptr;
  engelrad_status st;
  if (!args.catalog.empty()) {
    st = engelrad_group_from_catalog(args.catalog.c_str(), args.max_order, &raw);
    if (st != ENGELRAD_OK) return fail_input("cannot build catalog group '" + args.catalog + "'");
  } else {
    st = engelrad_group_from_file(args.input.c_str(),
                                  args.format.empty() ? nullptr : args.format.c_str(),
                                  args.max_order, &raw);
    if (st != ENGELRAD_OK) return fail_input("cannot read group from '" + args.input + "'");
  }
  out.reset(raw);
  return kExitPass;
}

int emit(const CommonArgs& args, const char* json) {
  if (args.json_path.empty()) {
    std::cout << json;
    return kExitPass;
  }
  std::ofstream out(args.json_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << args.json_path << "'\n";
    return kExitInputError;
  }
  out << json;
  return kExitPass;
}

struct JsonDeleter {
  void operator()(char* s) const { engelrad_string_free(s); }
};
using JsonPtr = std::unique_ptr<char, JsonDeleter>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group Engel machinery: nil elements, radicals, quasi-nil orders"};
  app.require_subcommand(1);

  CommonArgs info_args, classify_args, radical_args, check_args, verify_args;

  CLI::App* info = app.add_subcommand("info", "order, center, nilpotency, solvability");
  add_common(info, info_args, true);

  CLI::App* classify =
      app.add_subcommand("classify", "per-element nil/quasi-nil classification");
  add_common(classify, classify_args, true);

  CLI::App* radical =
      app.add_subcommand("radical", "Fitting subgroup, radical series, solvable radical");
  add_common(radical, radical_args, true);

  CLI::App* check = app.add_subcommand("check-identity", "check a group identity");
  add_common(check, check_args, true);
  std::uint32_t engel_n = 0;
  std::string tower_arg, word_expr, sequence_path;
  std::uint32_t sequence_index = 0;
  check->add_option("--engel", engel_n, "Engel identity e_n(x,y) = 1");
  check->add_option("--tower", tower_arg, "tower identity, e.g. 1,2,2");
  check->add_option("--word", word_expr, "custom word identity, e.g. [[x1,y],y]");
  check->add_option("--sequence", sequence_path, "sequence file (one word per line)");
  check->add_option("--index", sequence_index, "1-based index into the sequence file");

  CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
  add_common(verify, verify_args, true);
  std::string suite;
  verify->add_option("--suite", suite, "run on the built-in catalog")
      ->check(CLI::IsMember({"catalog"}));

  CLI11_PARSE(app, argc, argv);

  if (info->parsed()) {
    GroupPtr g;
    if (int rc = open_group(info_args, g)) return rc;
    engelrad_options opts = make_options(info_args);
    char* json = nullptr;
    if (engelrad_info_json(g.get(), &opts, &json) != ENGELRAD_OK)
      return fail_input("info failed");
    JsonPtr holder(json);
    return emit(info_args, json);
  }

  if (classify->parsed()) {
    GroupPtr g;
    if (int rc = open_group(classify_args, g)) return rc;
    engelrad_options opts = make_options(classify_args);
    char* json = nullptr;
    int all_passed = 0;
    if (engelrad_classify_json(g.get(), &opts, &json, &all_passed) != ENGELRAD_OK)
      return fail_input("classify failed");
    JsonPtr holder(json);
    if (int rc = emit(classify_args, json)) return rc;
    return all_passed ? kExitPass : kExitCheckFailed;
  }

  if (radical->parsed()) {
    GroupPtr g;
    if (int rc = open_group(radical_args, g)) return rc;
    engelrad_options opts = make_options(radical_args);
    char* json = nullptr;
    int agree = 0;
    if (engelrad_radical_json(g.get(), &opts, &json, &agree) != ENGELRAD_OK)
      return fail_input("radical failed");
    JsonPtr holder(json);
    if (int rc = emit(radical_args, json)) return rc;
    return agree ? kExitPass : kExitCheckFailed;
  }

  if (check->parsed()) {
    int kinds = (engel_n != 0) + !tower_arg.empty() + !word_expr.empty() +
                !sequence_path.empty();
    if (kinds != 1) {
      std::cerr << "error: pass exactly one of --engel, --tower, --word, --sequence\n";
      return kExitInputError;
    }
    GroupPtr g;
    if (int rc = open_group(check_args, g)) return rc;
    engelrad_options opts = make_options(check_args);
    char* json = nullptr;
    int holds = 0;
    engelrad_status st;
    if (engel_n != 0) {
      st = engelrad_check_engel_json(g.get(), engel_n, &opts, &json, &holds);
    } else if (!tower_arg.empty()) {
      std::vector<std::uint32_t> idx;
      std::size_t pos = 0;
      while (pos <= tower_arg.size()) {
        std::size_t comma = tower_arg.find(',', pos);
        std::string part = tower_arg.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
          std::size_t used = 0;
          unsigned long v = std::stoul(part, &used);
          if (used != part.size() || v == 0) throw std::invalid_argument(part);
          idx.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
          std::cerr << "error: bad tower index '" << tower_arg << "'\n";
          return kExitInputError;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      st = engelrad_check_tower_json(g.get(), idx.data(), idx.size(), &opts, &json, &holds);
    } else if (!word_expr.empty()) {
      st = engelrad_check_word_json(g.get(), word_expr.c_str(), &opts, &json, &holds);
    } else {
      if (sequence_index == 0) {
        std::cerr << "error: --sequence needs --index N (1-based)\n";
        return kExitInputError;
      }
      std::ifstream in(sequence_path, std::ios::binary | std::ios::ate);
      if (!in) {
        std::cerr << "error: cannot open '" << sequence_path << "'\n";
        return kExitInputError;
      }
      std::streamsize size = in.tellg();
      if (size > 10 * 1024 * 1024) {
        std::cerr << "error: '" << sequence_path << "' exceeds the 10 MB input limit\n";
        return kExitInputError;
      }
      std::string text(static_cast<std::size_t>(size), '\0');
      in.seekg(0);
      in.read(text.data(), size);
      st = engelrad_check_sequence_json(g.get(), text.c_str(), sequence_index, &opts, &json,
                                        &holds);
    }
    if (st != ENGELRAD_OK) return fail_input("check-identity failed");
    JsonPtr holder(json);
    if (int rc = emit(check_args, json)) return rc;
    return holds ? kExitPass : kExitCheckFailed;
  }

  if (verify->parsed()) {
    engelrad_options opts = make_options(verify_args);
    char* json = nullptr;
    int all_passed = 0;
    if (!suite.empty()) {
      if (engelrad_verify_suite_json(suite.c_str(), &opts, &json, &all_passed) != ENGELRAD_OK)
        return fail_input("verify failed");
    } else {
      GroupPtr g;
      if (int rc = open_group(verify_args, g)) return rc;
      if (engelrad_verify_group_json(g.get(), &opts, &json, &all_passed) != ENGELRAD_OK)
        return fail_input("verify failed");
    }
    JsonPtr holder(json);
    if (int rc = emit(verify_args, json)) return rc;
    return all_passed ? kExitPass : kExitCheckFailed;
  }

  return kExitInputError;
}
