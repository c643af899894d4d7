#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace engelrad {

namespace {

constexpr std::size_t kMaxFileBytes = 10 * 1024 * 1024;

std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

FiniteGroup parse_perm(const std::string& text, GroupConfig cfg) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> cycle_lines;
  std::uint32_t degree = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (is_blank(line)) continue;
    try {
      auto images = parse_cycle_string(line);
      degree = std::max(degree, static_cast<std::uint32_t>(images.size()));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
    cycle_lines.push_back(line);
  }
  PermutationSpec spec;
  spec.degree = degree;
  for (const std::string& l : cycle_lines)
    spec.generators.push_back(parse_cycle_string(l, degree));
  return FiniteGroup::from_permutations(std::move(spec), cfg);
}

FiniteGroup parse_table(const std::string& text, GroupConfig cfg) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint32_t> n;
  TableSpec spec;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (is_blank(line)) continue;
    std::istringstream row(line);
    if (!n) {
      std::int64_t v;
      if (!(row >> v) || v < 1 || v > 65535)
        throw Error(ErrorCode::Parse,
                    "line " + std::to_string(line_no) + ": expected the table order");
      std::string rest;
      if (row >> rest)
        throw Error(ErrorCode::Parse,
                    "line " + std::to_string(line_no) + ": junk after the table order");
      n = static_cast<std::uint32_t>(v);
      continue;
    }
    std::vector<std::uint32_t> entries;
    std::int64_t v;
    while (row >> v) {
      if (v < 0 || v >= *n)
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                          ": entry out of range [0, " +
                                          std::to_string(*n - 1) + "]");
      entries.push_back(static_cast<std::uint32_t>(v));
    }
    if (!row.eof())
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": malformed entry");
    if (entries.size() != *n)
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(*n) + " entries");
    spec.table.push_back(std::move(entries));
  }
  if (!n) throw Error(ErrorCode::Parse, "empty table file");
  if (spec.table.size() != *n)
    throw Error(ErrorCode::Parse, "expected " + std::to_string(*n) + " rows, found " +
                                      std::to_string(spec.table.size()));
  return FiniteGroup::from_table(std::move(spec), cfg);
}

FiniteGroup parse_matrix(const std::string& text, GroupConfig cfg) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  MatrixSpec spec;
  bool have_header = false;
  std::vector<std::int64_t> current;  // entries of the block being read
  std::uint32_t rows_in_block = 0;
  auto flush_block = [&]() {
    if (rows_in_block == 0) return;
    if (rows_in_block != spec.dim)
      throw Error(ErrorCode::Parse, "generator block before line " + std::to_string(line_no) +
                                        " has " + std::to_string(rows_in_block) + " rows, expected " +
                                        std::to_string(spec.dim));
    std::vector<std::uint8_t> m(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
      std::int64_t v = current[i] % static_cast<std::int64_t>(spec.prime);
      if (v < 0) v += spec.prime;
      m[i] = static_cast<std::uint8_t>(v);
    }
    spec.generators.push_back(std::move(m));
    current.clear();
    rows_in_block = 0;
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (is_blank(line)) {
      if (have_header) flush_block();
      continue;
    }
    std::istringstream row(line);
    if (!have_header) {
      std::string word;
      std::int64_t p = 0, n = 0;
      if (!(row >> word >> p >> n) || word != "matrix" || p < 2 || n < 1 || n > 16)
        throw Error(ErrorCode::Parse,
                    "line " + std::to_string(line_no) + ": expected header 'matrix p n'");
      spec.prime = static_cast<std::uint32_t>(p);
      spec.dim = static_cast<std::uint32_t>(n);
      have_header = true;
      continue;
    }
    std::int64_t v;
    std::uint32_t count = 0;
    while (row >> v) {
      current.push_back(v);
      ++count;
    }
    if (!row.eof())
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": malformed entry");
    if (count != spec.dim)
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(spec.dim) + " entries per row");
    ++rows_in_block;
  }
  if (!have_header) throw Error(ErrorCode::Parse, "missing 'matrix p n' header");
  flush_block();
  return FiniteGroup::from_matrices(std::move(spec), cfg);
}

std::string infer_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (is_blank(line)) continue;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (line[i] == '(') return "perm";
    if (line.compare(i, 6, "matrix") == 0) return "matrix";
    if (std::isdigit(static_cast<unsigned char>(line[i]))) return "table";
    break;
  }
  throw Error(ErrorCode::Parse, "cannot infer the input format; pass --format");
}

}  // namespace

FiniteGroup group_from_text(const std::string& text, const std::string& format,
                            GroupConfig cfg) {
  std::string fmt = format.empty() ? infer_format(text) : format;
  if (fmt == "perm") return parse_perm(text, cfg);
  if (fmt == "table") return parse_table(text, cfg);
  if (fmt == "matrix") return parse_matrix(text, cfg);
  throw Error(ErrorCode::InvalidArgument,
              "unknown format '" + fmt + "' (expected perm, table or matrix)");
}

std::string read_file_guarded(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open '" + path + "'");
  std::streamsize size = in.tellg();
  if (size < 0) throw Error(ErrorCode::BadInput, "cannot read '" + path + "'");
  if (static_cast<std::size_t>(size) > kMaxFileBytes)
    throw Error(ErrorCode::BadInput,
                "'" + path + "' exceeds the 10 MB input limit");
  std::string text(static_cast<std::size_t>(size), '\0');
  in.seekg(0);
  in.read(text.data(), size);
  if (!in) throw Error(ErrorCode::BadInput, "short read on '" + path + "'");
  return text;
}

FiniteGroup group_from_file(const std::string& path, const std::string& format,
                            GroupConfig cfg) {
  return group_from_text(read_file_guarded(path), format, cfg);
}

}  // namespace engelrad
