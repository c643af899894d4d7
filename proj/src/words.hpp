#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace engelrad {

/// Variable ids: 0 is the distinguished variable y, i >= 1 is x_i.
constexpr std::int32_t kVarY = 0;

struct Letter {
  std::int32_t var;
  std::int8_t sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// A freely reduced word over {x_1, x_2, ..., y}. The empty word is the
/// identity. All constructors and operations keep the reduced invariant.
class Word {
public:
  Word() = default;
  static Word variable(std::int32_t var, std::int8_t sign = 1);
  static Word from_letters(std::vector<Letter> letters);  // reduces

  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  bool operator==(const Word&) const = default;

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(std::int64_t e) const;

  /// Simultaneous substitution; variables missing from the map are kept.
  Word substitute(const std::unordered_map<std::int32_t, Word>& map) const;

  /// Largest subscript of any x_i in the word (0 if none).
  std::int32_t max_x_var() const;
  bool uses_var(std::int32_t var) const;

  std::string str() const;  // grammar-compatible, "1" for the empty word

private:
  std::vector<Letter> letters_;
};

/// [u, v] = u^-1 v^-1 u v
Word word_commutator(const Word& u, const Word& v);

/// e_1 = [x_1, y], e_n = [e_{n-1}, y].
Word engel_word(std::uint32_t n);

/// Assignment of group elements to variables; slot 0 is y, slot i is x_i.
class VarAssignment {
public:
  explicit VarAssignment(std::size_t max_var = 8) : slots_(max_var + 1) {}
  VarAssignment& set(std::int32_t var, ElementIndex e);
  std::optional<ElementIndex> get(std::int32_t var) const;

private:
  std::vector<std::optional<ElementIndex>> slots_;
};

/// Homomorphic image of a word; throws on unassigned variables.
ElementIndex evaluate_word(const FiniteGroup& g, const Word& w, const VarAssignment& assign);

/// c_1 = [a, g], c_{i+1} = [c_i, g]; returns c_n. Equals the evaluation of
/// engel_word(n) at x_1 = a, y = g.
ElementIndex iterated_engel(const FiniteGroup& g, ElementIndex a, ElementIndex base,
                            std::uint32_t n);

/// Tuple (n_1, ..., n_k) of positive integers indexing a tower word.
using TowerIndex = std::vector<std::uint32_t>;

/// A sequence of two-variable words u_1, u_2, ... (variables x_1 and y),
/// either the built-in Engel sequence or a finite user-supplied prefix.
class WordSequence {
public:
  static WordSequence engel();
  static WordSequence from_words(std::string name, std::vector<Word> words);
  /// One word expression per line; blank lines and '#' comments ignored.
  static WordSequence from_text(std::string name, const std::string& text);

  const std::string& name() const { return name_; }
  std::optional<std::uint32_t> bound() const { return bound_; }
  bool is_engel() const { return is_engel_; }
  /// u_n; throws for n = 0 or beyond a finite prefix bound.
  Word word(std::uint32_t n) const;

private:
  std::string name_;
  std::optional<std::uint32_t> bound_;
  bool is_engel_ = false;
  std::shared_ptr<const std::vector<Word>> words_;
};

/// u_{(n_1)} = u_{n_1}(x_1, y); u_{(n_1..n_k)} = u_{n_k}(x_k, u_{(n_1..n_{k-1})}).
Word tower_word(const WordSequence& seq, const TowerIndex& idx);

/// Value of the tower word at (a_1..a_k; y), computed by substituting the
/// inner value as a group element level by level; never expands the word.
ElementIndex evaluate_tower(const FiniteGroup& g, const WordSequence& seq,
                            const TowerIndex& idx, const std::vector<ElementIndex>& xs,
                            ElementIndex y);

struct SequenceCheckBudget {
  std::uint32_t n_max = 6;         // clamped to the sequence bound
  std::uint64_t sample_pairs = 10000;
  std::uint64_t seed = 0;
};

struct SequenceCheckReport {
  bool vanish_at_one_ok = true;  // u_n(a,1) = u_n(1,g) = 1
  std::optional<std::uint32_t> v1_n;
  std::optional<ElementIndex> v1_element;
  std::string v1_side;  // "u_n(a,1)" or "u_n(1,g)"

  bool persistence_ok = true;  // u_n(a,g) = 1 implies u_m(a,g) = 1 for m > n
  std::optional<ElementIndex> p2_a, p2_g;
  std::optional<std::uint32_t> p2_n, p2_m;

  std::uint32_t n_checked = 0;
  bool pairs_exhaustive = false;
  std::uint64_t pairs_checked = 0;

  bool ok() const { return vanish_at_one_ok && persistence_ok; }
};

/// Empirical check of the two defining properties of a usable word sequence
/// on one group: property 1 exhaustively over elements, property 2 on all
/// pairs when |G|^2 fits the sample budget and on sampled pairs otherwise.
SequenceCheckReport check_sequence(const FiniteGroup& g, const WordSequence& seq,
                                   const SequenceCheckBudget& budget = {});

/// Parser for the word-expression grammar:
///   expr := term { "*" term }
///   term := atom [ "^" signed-integer ]
///   atom := var | "[" expr "," expr "]" | "(" expr ")"
///   var  := "x" positive-integer | "y"
/// Throws Error(Parse) with a 1-based position on malformed input.
Word parse_word(const std::string& text);

}  // namespace engelrad
