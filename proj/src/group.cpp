#include "group.hpp"

#include <algorithm>
#include <cstring>
#include <random>
#include <sstream>

namespace engelrad {

namespace {

constexpr std::uint32_t kDenseTableCap = 4096;

void append_u16_be(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v >> 8));
  out.push_back(static_cast<char>(v & 0xff));
}

}  // namespace

std::vector<std::uint16_t> permutation_compose(const std::vector<std::uint16_t>& a,
                                               const std::vector<std::uint16_t>& b) {
  // (a*b)(i) = b[a[i]]: apply a first, then b.
  std::vector<std::uint16_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

std::vector<std::uint16_t> permutation_inverse(const std::vector<std::uint16_t>& a) {
  std::vector<std::uint16_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
  return r;
}

std::string permutation_cycle_string(const std::vector<std::uint16_t>& images) {
  std::ostringstream out;
  std::vector<bool> done(images.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (done[start] || images[start] == start) continue;
    any = true;
    out << '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out << ' ';
      out << (p + 1);  // 1-based in cycle notation
      first = false;
      p = images[p];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::vector<std::uint16_t> parse_cycle_string(const std::string& text,
                                              std::uint32_t min_degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t max_point = min_degree;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw Error(ErrorCode::Parse,
                "cycle notation error at position " + std::to_string(i + 1) + ": " + msg);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected point or ')'");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 65535) fail("point out of range");
        ++i;
      }
      if (v == 0) fail("points are 1-based");
      cycle.push_back(static_cast<std::uint32_t>(v));
      max_point = std::max<std::uint32_t>(max_point, static_cast<std::uint32_t>(v));
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      for (std::size_t k = j + 1; k < cycle.size(); ++k)
        if (cycle[j] == cycle[k]) fail("repeated point in cycle");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  std::vector<std::uint16_t> images(max_point);
  for (std::uint32_t p = 0; p < max_point; ++p) images[p] = static_cast<std::uint16_t>(p);
  std::vector<bool> moved(max_point, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      std::uint32_t from = cycle[j] - 1;
      std::uint32_t to = cycle[(j + 1) % cycle.size()] - 1;
      if (moved[from])
        throw Error(ErrorCode::Parse, "point " + std::to_string(from + 1) +
                                          " appears in two cycles");
      moved[from] = true;
      images[from] = static_cast<std::uint16_t>(to);
    }
  }
  return images;
}

std::vector<std::uint8_t> matrix_mul(const std::vector<std::uint8_t>& a,
                                     const std::vector<std::uint8_t>& b,
                                     std::uint32_t dim, std::uint32_t p) {
  std::vector<std::uint8_t> r(static_cast<std::size_t>(dim) * dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t k = 0; k < dim; ++k) {
      std::uint32_t aik = a[i * dim + k];
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < dim; ++j) {
        std::uint32_t v = r[i * dim + j] + aik * b[k * dim + j];
        r[i * dim + j] = static_cast<std::uint8_t>(v % p);
      }
    }
  return r;
}

std::optional<std::vector<std::uint8_t>> matrix_inverse(const std::vector<std::uint8_t>& a,
                                                        std::uint32_t dim, std::uint32_t p) {
  // Gauss-Jordan over F_p.
  std::vector<std::uint32_t> m(static_cast<std::size_t>(dim) * 2 * dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = 0; j < dim; ++j) m[i * 2 * dim + j] = a[i * dim + j];
    m[i * 2 * dim + dim + i] = 1;
  }
  auto mod_pow = [&](std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  for (std::uint32_t col = 0; col < dim; ++col) {
    std::uint32_t pivot = col;
    while (pivot < dim && m[pivot * 2 * dim + col] == 0) ++pivot;
    if (pivot == dim) return std::nullopt;
    if (pivot != col)
      for (std::uint32_t j = 0; j < 2 * dim; ++j)
        std::swap(m[pivot * 2 * dim + j], m[col * 2 * dim + j]);
    std::uint32_t inv_pivot = mod_pow(m[col * 2 * dim + col], p - 2);
    for (std::uint32_t j = 0; j < 2 * dim; ++j)
      m[col * 2 * dim + j] = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(m[col * 2 * dim + j]) * inv_pivot % p);
    for (std::uint32_t row = 0; row < dim; ++row) {
      if (row == col) continue;
      std::uint32_t f = m[row * 2 * dim + col];
      if (f == 0) continue;
      for (std::uint32_t j = 0; j < 2 * dim; ++j) {
        std::uint64_t v = m[row * 2 * dim + j] +
                          static_cast<std::uint64_t>(p - f) * m[col * 2 * dim + j];
        m[row * 2 * dim + j] = static_cast<std::uint32_t>(v % p);
      }
    }
  }
  std::vector<std::uint8_t> r(static_cast<std::size_t>(dim) * dim);
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < dim; ++j)
      r[i * dim + j] = static_cast<std::uint8_t>(m[i * 2 * dim + dim + j]);
  return r;
}

std::string FiniteGroup::canonical_bytes(std::uint32_t elem) const {
  std::string out;
  switch (kind_) {
    case BackendKind::Permutation:
      out.reserve(perm_[elem].size() * 2);
      for (std::uint16_t v : perm_[elem]) append_u16_be(out, v);
      break;
    case BackendKind::Matrix:
      out.assign(mat_[elem].begin(), mat_[elem].end());
      break;
    case BackendKind::CayleyTable:
      append_u16_be(out, static_cast<std::uint16_t>(elem >> 16));
      append_u16_be(out, static_cast<std::uint16_t>(elem & 0xffff));
      break;
  }
  return out;
}

std::string FiniteGroup::make_label(std::uint32_t elem) const {
  switch (kind_) {
    case BackendKind::Permutation:
      return permutation_cycle_string(perm_[elem]);
    case BackendKind::Matrix: {
      std::ostringstream out;
      out << '[';
      for (std::uint32_t i = 0; i < dim_; ++i) {
        if (i) out << ',';
        out << '[';
        for (std::uint32_t j = 0; j < dim_; ++j) {
          if (j) out << ',';
          out << static_cast<unsigned>(mat_[elem][i * dim_ + j]);
        }
        out << ']';
      }
      out << ']';
      return out.str();
    }
    case BackendKind::CayleyTable:
      return std::to_string(elem);
  }
  return {};
}

ElementIndex FiniteGroup::mul_slow(ElementIndex a, ElementIndex b) const {
  std::string key;
  switch (kind_) {
    case BackendKind::Permutation: {
      auto r = permutation_compose(perm_[a], perm_[b]);
      key.reserve(r.size() * 2);
      for (std::uint16_t v : r) append_u16_be(key, v);
      break;
    }
    case BackendKind::Matrix: {
      auto r = matrix_mul(mat_[a], mat_[b], dim_, prime_);
      key.assign(r.begin(), r.end());
      break;
    }
    case BackendKind::CayleyTable:
      throw Error(ErrorCode::Internal, "table backend without table");
  }
  auto it = index_.find(key);
  if (it == index_.end())
    throw Error(ErrorCode::Internal, "product left the enumerated element table");
  return it->second;
}

void FiniteGroup::enumerate_from_generators(GroupConfig cfg) {
  // Breadth-first closure from the identity under right multiplication by
  // the generators; each new level is sorted by canonical byte encoding.
  order_ = 1;
  index_.emplace(canonical_bytes(0), 0);
  std::uint32_t level_begin = 0, level_end = 1;
  std::size_t gen_count =
      kind_ == BackendKind::Permutation ? perm_gens_.size() : mat_gens_.size();
  while (level_begin < level_end) {
    std::vector<std::pair<std::string, std::uint32_t>> batch;  // key -> temp slot
    for (std::uint32_t cur = level_begin; cur < level_end; ++cur) {
      for (std::size_t gi = 0; gi < gen_count; ++gi) {
        std::string key;
        if (kind_ == BackendKind::Permutation) {
          auto r = permutation_compose(perm_[cur], perm_gens_[gi]);
          key.reserve(r.size() * 2);
          for (std::uint16_t v : r) append_u16_be(key, v);
          if (index_.count(key)) continue;
          perm_.push_back(std::move(r));
          index_.emplace(key, 0);  // placeholder; reindexed after sorting
          batch.emplace_back(std::move(key), static_cast<std::uint32_t>(perm_.size() - 1));
        } else {
          auto r = matrix_mul(mat_[cur], mat_gens_[gi], dim_, prime_);
          key.assign(r.begin(), r.end());
          if (index_.count(key)) continue;
          mat_.push_back(std::move(r));
          index_.emplace(key, 0);
          batch.emplace_back(std::move(key), static_cast<std::uint32_t>(mat_.size() - 1));
        }
        if (order_ + batch.size() > cfg.max_order)
          throw Error(ErrorCode::OrderCap,
                      "group order exceeds the configured cap of " +
                          std::to_string(cfg.max_order));
      }
    }
    std::sort(batch.begin(), batch.end());
    // Reorder the freshly discovered reps into canonical positions.
    if (kind_ == BackendKind::Permutation) {
      std::vector<std::vector<std::uint16_t>> level_reps;
      level_reps.reserve(batch.size());
      for (auto& [key, slot] : batch) level_reps.push_back(std::move(perm_[slot]));
      perm_.resize(order_);
      for (auto& rep : level_reps) perm_.push_back(std::move(rep));
    } else {
      std::vector<std::vector<std::uint8_t>> level_reps;
      level_reps.reserve(batch.size());
      for (auto& [key, slot] : batch) level_reps.push_back(std::move(mat_[slot]));
      mat_.resize(order_);
      for (auto& rep : level_reps) mat_.push_back(std::move(rep));
    }
    for (auto& [key, slot] : batch) index_[key] = order_++;
    level_begin = level_end;
    level_end = order_;
  }
}

void FiniteGroup::build_inverses() {
  inv_.resize(order_);
  switch (kind_) {
    case BackendKind::Permutation:
      for (std::uint32_t i = 0; i < order_; ++i) {
        auto r = permutation_inverse(perm_[i]);
        std::string key;
        key.reserve(r.size() * 2);
        for (std::uint16_t v : r) append_u16_be(key, v);
        inv_[i] = index_.at(key);
      }
      break;
    case BackendKind::Matrix:
      for (std::uint32_t i = 0; i < order_; ++i) {
        auto r = matrix_inverse(mat_[i], dim_, prime_);
        if (!r) throw Error(ErrorCode::Internal, "enumerated matrix not invertible");
        std::string key(r->begin(), r->end());
        inv_[i] = index_.at(key);
      }
      break;
    case BackendKind::CayleyTable:
      for (std::uint32_t i = 0; i < order_; ++i) {
        bool found = false;
        for (std::uint32_t j = 0; j < order_; ++j) {
          if (table_[static_cast<std::size_t>(i) * order_ + j] == 0) {
            if (table_[static_cast<std::size_t>(j) * order_ + i] != 0)
              throw Error(ErrorCode::BadInput, "one-sided inverse in table");
            inv_[i] = j;
            found = true;
            break;
          }
        }
        if (!found)
          throw Error(ErrorCode::BadInput,
                      "no inverse for element " + std::to_string(i));
      }
      break;
  }
}

void FiniteGroup::build_dense_table() {
  if (kind_ == BackendKind::CayleyTable || order_ > kDenseTableCap) return;
  table_.resize(static_cast<std::size_t>(order_) * order_);
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b)
      table_[static_cast<std::size_t>(a) * order_ + b] =
          static_cast<std::uint16_t>(mul_slow(a, b));
  has_table_ = true;
}

void FiniteGroup::validate_table(GroupConfig cfg) {
  std::uint32_t n = order_;
  if (n == 0) throw Error(ErrorCode::BadInput, "empty table");
  if (n > cfg.max_order)
    throw Error(ErrorCode::OrderCap, "table order exceeds the configured cap of " +
                                         std::to_string(cfg.max_order));
  for (std::uint32_t j = 0; j < n; ++j)
    if (table_[j] != j)
      throw Error(ErrorCode::BadInput, "row 0 must be the identity row");
  for (std::uint32_t i = 0; i < n; ++i)
    if (table_[static_cast<std::size_t>(i) * n] != i)
      throw Error(ErrorCode::BadInput, "column 0 must be the identity column");
  std::vector<bool> seen(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t v = table_[static_cast<std::size_t>(i) * n + j];
      if (seen[v])
        throw Error(ErrorCode::BadInput,
                    "row " + std::to_string(i) + " is not a permutation (Latin square violation)");
      seen[v] = true;
    }
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t v = table_[static_cast<std::size_t>(i) * n + j];
      if (seen[v])
        throw Error(ErrorCode::BadInput,
                    "column " + std::to_string(j) + " is not a permutation (Latin square violation)");
      seen[v] = true;
    }
  }
  auto at = [&](std::uint32_t a, std::uint32_t b) {
    return table_[static_cast<std::size_t>(a) * n + b];
  };
  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      throw Error(ErrorCode::BadInput, "table is not associative at (" + std::to_string(a) +
                                           "," + std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    // Spot check on a fixed-seed sample; associativity of user tables above
    // order 64 is a documented trust boundary.
    std::mt19937 rng(0xE19E1u);
    for (int t = 0; t < 1500; ++t)
      check_triple(rng() % n, rng() % n, rng() % n);
  }
}

FiniteGroup FiniteGroup::from_permutations(PermutationSpec spec, GroupConfig cfg) {
  FiniteGroup g;
  g.kind_ = BackendKind::Permutation;
  if (spec.degree == 0) spec.degree = 1;
  if (spec.degree > 65535)
    throw Error(ErrorCode::InvalidArgument, "permutation degree out of range");
  g.degree_ = spec.degree;
  for (const auto& p : spec.generators) {
    if (p.size() != spec.degree)
      throw Error(ErrorCode::InvalidArgument, "generator degree mismatch");
    std::vector<bool> seen(spec.degree, false);
    for (std::uint16_t v : p) {
      if (v >= spec.degree || seen[v])
        throw Error(ErrorCode::InvalidArgument, "generator is not a permutation");
      seen[v] = true;
    }
  }
  g.perm_gens_ = std::move(spec.generators);
  std::vector<std::uint16_t> id(g.degree_);
  for (std::uint32_t i = 0; i < g.degree_; ++i) id[i] = static_cast<std::uint16_t>(i);
  g.perm_.push_back(std::move(id));
  g.enumerate_from_generators(cfg);
  g.build_inverses();
  g.build_dense_table();
  g.labels_.reserve(g.order_);
  for (std::uint32_t i = 0; i < g.order_; ++i) g.labels_.push_back(g.make_label(i));
  for (const auto& p : g.perm_gens_) {
    std::string key;
    key.reserve(p.size() * 2);
    for (std::uint16_t v : p) append_u16_be(key, v);
    g.generators_.push_back(g.index_.at(key));
  }
  g.description_ = "permutation(degree=" + std::to_string(g.degree_) +
                   ", generators=" + std::to_string(g.perm_gens_.size()) + ")";
  return g;
}

FiniteGroup FiniteGroup::from_matrices(MatrixSpec spec, GroupConfig cfg) {
  FiniteGroup g;
  g.kind_ = BackendKind::Matrix;
  if (spec.prime < 2 || spec.prime > 251)
    throw Error(ErrorCode::InvalidArgument, "prime out of supported range");
  for (std::uint32_t d = 2; d * d <= spec.prime; ++d)
    if (spec.prime % d == 0)
      throw Error(ErrorCode::InvalidArgument, std::to_string(spec.prime) + " is not prime");
  if (spec.dim == 0 || spec.dim > 16)
    throw Error(ErrorCode::InvalidArgument, "matrix dimension out of range");
  g.prime_ = spec.prime;
  g.dim_ = spec.dim;
  for (auto& m : spec.generators) {
    if (m.size() != static_cast<std::size_t>(spec.dim) * spec.dim)
      throw Error(ErrorCode::InvalidArgument, "generator shape mismatch");
    for (auto& v : m) v = static_cast<std::uint8_t>(v % spec.prime);
    if (!matrix_inverse(m, spec.dim, spec.prime))
      throw Error(ErrorCode::InvalidArgument, "generator matrix is not invertible mod " +
                                                  std::to_string(spec.prime));
  }
  g.mat_gens_ = std::move(spec.generators);
  std::vector<std::uint8_t> id(static_cast<std::size_t>(g.dim_) * g.dim_, 0);
  for (std::uint32_t i = 0; i < g.dim_; ++i) id[i * g.dim_ + i] = 1;
  g.mat_.push_back(std::move(id));
  g.enumerate_from_generators(cfg);
  g.build_inverses();
  g.build_dense_table();
  g.labels_.reserve(g.order_);
  for (std::uint32_t i = 0; i < g.order_; ++i) g.labels_.push_back(g.make_label(i));
  for (const auto& m : g.mat_gens_) {
    std::string key(m.begin(), m.end());
    g.generators_.push_back(g.index_.at(key));
  }
  g.description_ = "matrix(p=" + std::to_string(g.prime_) + ", n=" + std::to_string(g.dim_) +
                   ", generators=" + std::to_string(g.mat_gens_.size()) + ")";
  return g;
}

FiniteGroup FiniteGroup::from_table(TableSpec spec, GroupConfig cfg) {
  FiniteGroup g;
  g.kind_ = BackendKind::CayleyTable;
  std::uint32_t n = static_cast<std::uint32_t>(spec.table.size());
  if (n == 0) throw Error(ErrorCode::BadInput, "empty table");
  if (n > 65535) throw Error(ErrorCode::OrderCap, "table order out of range");
  g.order_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (spec.table[i].size() != n)
      throw Error(ErrorCode::BadInput, "table row " + std::to_string(i) + " has wrong length");
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t v = spec.table[i][j];
      if (v >= n)
        throw Error(ErrorCode::BadInput, "table entry out of range at row " + std::to_string(i));
      g.table_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(v);
    }
  }
  g.has_table_ = true;
  g.validate_table(cfg);
  g.build_inverses();
  if (!spec.labels.empty() && spec.labels.size() != n)
    throw Error(ErrorCode::InvalidArgument, "label count mismatch");
  if (spec.labels.empty()) {
    g.labels_.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) g.labels_.push_back(std::to_string(i));
  } else {
    g.labels_ = std::move(spec.labels);
  }
  g.description_ = spec.description.empty()
                       ? "cayley-table(order=" + std::to_string(n) + ")"
                       : spec.description;
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                        GroupConfig cfg) {
  std::uint64_t n = static_cast<std::uint64_t>(a.order()) * b.order();
  if (n > cfg.max_order)
    throw Error(ErrorCode::OrderCap, "product order " + std::to_string(n) +
                                         " exceeds the configured cap");
  if (n > kDenseTableCap)
    throw Error(ErrorCode::InvalidArgument,
                "product order " + std::to_string(n) +
                    " exceeds the table materialization cap of " +
                    std::to_string(kDenseTableCap));
  std::uint32_t nb = b.order();
  TableSpec spec;
  spec.table.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t xa = x / nb, xb = x % nb;
    for (std::uint32_t y = 0; y < static_cast<std::uint32_t>(n); ++y)
      spec.table[x][y] = a.mul(xa, y / nb) * nb + b.mul(xb, y % nb);
  }
  spec.labels.reserve(n);
  for (std::uint32_t x = 0; x < n; ++x)
    spec.labels.push_back("(" + a.element_label(x / nb) + ", " + b.element_label(x % nb) + ")");
  spec.description = "product(" + a.description() + " x " + b.description() + ")";
  return from_table(std::move(spec), cfg);
}

ElementIndex FiniteGroup::power(ElementIndex a, std::int64_t e) const {
  check_index(a);
  ElementIndex base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  ElementIndex acc = identity();
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint32_t FiniteGroup::element_order(ElementIndex a) const {
  check_index(a);
  std::uint32_t n = 1;
  ElementIndex cur = a;
  while (cur != identity()) {
    cur = mul(cur, a);
    ++n;
    if (n > order_) throw Error(ErrorCode::Internal, "element order exceeds group order");
  }
  return n;
}

ElementIndex FiniteGroup::index_of_permutation(const std::vector<std::uint16_t>& images) const {
  if (kind_ != BackendKind::Permutation)
    throw Error(ErrorCode::InvalidArgument, "not a permutation-backed group");
  std::vector<std::uint16_t> padded = images;
  if (padded.size() < degree_) {
    std::size_t old = padded.size();
    padded.resize(degree_);
    for (std::size_t i = old; i < degree_; ++i) padded[i] = static_cast<std::uint16_t>(i);
  }
  if (padded.size() != degree_)
    throw Error(ErrorCode::InvalidArgument, "degree mismatch");
  std::string key;
  key.reserve(padded.size() * 2);
  for (std::uint16_t v : padded) append_u16_be(key, v);
  auto it = index_.find(key);
  if (it == index_.end())
    throw Error(ErrorCode::InvalidArgument, "permutation is not an element of the group");
  return it->second;
}

}  // namespace engelrad
