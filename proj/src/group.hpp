#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace engelrad {

using ElementIndex = std::uint32_t;

/// Error category carried by every exception thrown from the core.
enum class ErrorCode {
  InvalidArgument,
  Parse,
  OrderCap,
  BadInput,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

enum class BackendKind { Permutation, CayleyTable, Matrix };

/// Permutations are 0-based image vectors: images[i] is the image of point i.
struct PermutationSpec {
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint16_t>> generators;
};

/// Square matrices over F_p, row-major, entries already reduced mod p.
struct MatrixSpec {
  std::uint32_t prime = 0;
  std::uint32_t dim = 0;
  std::vector<std::vector<std::uint8_t>> generators;
};

/// A full multiplication table; table[i][j] = index of element_i * element_j.
/// Index 0 must be the identity. Optional labels decorate reports.
struct TableSpec {
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<std::string> labels;
  std::string description;
};

struct GroupConfig {
  std::uint32_t max_order = 20000;
};

/// A fully enumerated finite group. Elements are dense indices 0..order-1
/// with the identity fixed at index 0. Enumeration from generators is
/// breadth-first with each new level sorted by the backend's canonical byte
/// encoding, so the element ordering is deterministic and reports are
/// diffable. Immutable after construction; safe to share across threads.
class FiniteGroup {
public:
  static FiniteGroup from_permutations(PermutationSpec spec, GroupConfig cfg = {});
  static FiniteGroup from_matrices(MatrixSpec spec, GroupConfig cfg = {});
  static FiniteGroup from_table(TableSpec spec, GroupConfig cfg = {});
  /// Direct product realized as a Cayley table in lexicographic pair order.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    GroupConfig cfg = {});

  std::uint32_t order() const { return order_; }
  ElementIndex identity() const { return 0; }
  BackendKind backend() const { return kind_; }
  const std::string& description() const { return description_; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const {
    if (has_table_) return table_[static_cast<std::size_t>(a) * order_ + b];
    return mul_slow(a, b);
  }
  ElementIndex inv(ElementIndex a) const { return inv_[a]; }
  /// a^b = b^-1 a b
  ElementIndex conjugate(ElementIndex a, ElementIndex b) const {
    return mul(mul(inv(b), a), b);
  }
  /// [a,b] = a^-1 b^-1 a b
  ElementIndex commutator(ElementIndex a, ElementIndex b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  ElementIndex power(ElementIndex a, std::int64_t e) const;
  std::uint32_t element_order(ElementIndex a) const;

  const std::string& element_label(ElementIndex a) const { return labels_[a]; }
  const std::vector<ElementIndex>& generator_indices() const { return generators_; }

  /// Lookup of a permutation-backend element by its image vector; throws for
  /// other backends or unknown images. Used by tests and file replay.
  ElementIndex index_of_permutation(const std::vector<std::uint16_t>& images) const;

  void check_index(ElementIndex a) const {
    if (a >= order_)
      throw Error(ErrorCode::InvalidArgument, "element index out of range");
  }

  std::uint32_t permutation_degree() const { return degree_; }
  std::uint32_t matrix_prime() const { return prime_; }
  std::uint32_t matrix_dim() const { return dim_; }

private:
  FiniteGroup() = default;
  void enumerate_from_generators(GroupConfig cfg);
  void build_inverses();
  void build_dense_table();
  void validate_table(GroupConfig cfg);
  ElementIndex mul_slow(ElementIndex a, ElementIndex b) const;
  std::string canonical_bytes(std::uint32_t elem) const;
  std::string make_label(std::uint32_t elem) const;

  BackendKind kind_ = BackendKind::CayleyTable;
  std::uint32_t order_ = 0;

  std::uint32_t degree_ = 0;
  std::vector<std::vector<std::uint16_t>> perm_;
  std::vector<std::vector<std::uint16_t>> perm_gens_;

  std::uint32_t prime_ = 0;
  std::uint32_t dim_ = 0;
  std::vector<std::vector<std::uint8_t>> mat_;
  std::vector<std::vector<std::uint8_t>> mat_gens_;

  bool has_table_ = false;
  std::vector<std::uint16_t> table_;

  std::vector<ElementIndex> inv_;
  std::vector<ElementIndex> generators_;
  std::unordered_map<std::string, ElementIndex> index_;
  std::vector<std::string> labels_;
  std::string description_;
};

std::vector<std::uint16_t> permutation_compose(const std::vector<std::uint16_t>& a,
                                               const std::vector<std::uint16_t>& b);
std::vector<std::uint16_t> permutation_inverse(const std::vector<std::uint16_t>& a);
std::string permutation_cycle_string(const std::vector<std::uint16_t>& images);
std::vector<std::uint16_t> parse_cycle_string(const std::string& text,
                                              std::uint32_t min_degree = 0);

std::vector<std::uint8_t> matrix_mul(const std::vector<std::uint8_t>& a,
                                     const std::vector<std::uint8_t>& b,
                                     std::uint32_t dim, std::uint32_t p);
std::optional<std::vector<std::uint8_t>> matrix_inverse(const std::vector<std::uint8_t>& a,
                                                        std::uint32_t dim, std::uint32_t p);

}  // namespace engelrad
