#include "words.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace engelrad {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().var == l.var && out.back().sign == -l.sign)
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Word Word::variable(std::int32_t var, std::int8_t sign) {
  Word w;
  w.letters_.push_back(Letter{var, sign});
  return w;
}

Word Word::from_letters(std::vector<Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.sign != 1 && l.sign != -1)
      throw Error(ErrorCode::InvalidArgument, "letter sign must be +1 or -1");
    push_reduced(w.letters_, l);
  }
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w;
  w.letters_ = letters_;
  for (Letter l : rhs.letters_) push_reduced(w.letters_, l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(Letter{it->var, static_cast<std::int8_t>(-it->sign)});
  return w;
}

Word Word::pow(std::int64_t e) const {
  if (e == 0) return Word{};
  Word base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Word acc;
  for (std::uint64_t i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

Word Word::substitute(const std::unordered_map<std::int32_t, Word>& map) const {
  Word out;
  for (Letter l : letters_) {
    auto it = map.find(l.var);
    if (it == map.end()) {
      push_reduced(out.letters_, l);
    } else if (l.sign == 1) {
      for (Letter rl : it->second.letters_) push_reduced(out.letters_, rl);
    } else {
      Word inv = it->second.inverse();
      for (Letter rl : inv.letters_) push_reduced(out.letters_, rl);
    }
  }
  return out;
}

std::int32_t Word::max_x_var() const {
  std::int32_t m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.var);
  return m;
}

bool Word::uses_var(std::int32_t var) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [var](const Letter& l) { return l.var == var; });
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) out << '*';
    first = false;
    if (l.var == kVarY)
      out << 'y';
    else
      out << 'x' << l.var;
    if (l.sign < 0) out << "^-1";
  }
  return out.str();
}

Word word_commutator(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

Word engel_word(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Engel words are indexed from 1");
  Word y = Word::variable(kVarY);
  Word e = word_commutator(Word::variable(1), y);
  for (std::uint32_t i = 2; i <= n; ++i) e = word_commutator(e, y);
  return e;
}

VarAssignment& VarAssignment::set(std::int32_t var, ElementIndex e) {
  if (var < 0) throw Error(ErrorCode::InvalidArgument, "negative variable id");
  if (static_cast<std::size_t>(var) >= slots_.size()) slots_.resize(var + 1);
  slots_[var] = e;
  return *this;
}

std::optional<ElementIndex> VarAssignment::get(std::int32_t var) const {
  if (var < 0 || static_cast<std::size_t>(var) >= slots_.size()) return std::nullopt;
  return slots_[var];
}

ElementIndex evaluate_word(const FiniteGroup& g, const Word& w, const VarAssignment& assign) {
  ElementIndex acc = g.identity();
  for (const Letter& l : w.letters()) {
    auto e = assign.get(l.var);
    if (!e)
      throw Error(ErrorCode::InvalidArgument,
                  std::string("unassigned variable ") +
                      (l.var == kVarY ? "y" : "x" + std::to_string(l.var)));
    g.check_index(*e);
    acc = g.mul(acc, l.sign == 1 ? *e : g.inv(*e));
  }
  return acc;
}

ElementIndex iterated_engel(const FiniteGroup& g, ElementIndex a, ElementIndex base,
                            std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Engel iteration starts at 1");
  g.check_index(a);
  g.check_index(base);
  ElementIndex c = g.commutator(a, base);
  for (std::uint32_t i = 1; i < n; ++i) c = g.commutator(c, base);
  return c;
}

WordSequence WordSequence::engel() {
  WordSequence s;
  s.name_ = "engel";
  s.is_engel_ = true;
  return s;
}

WordSequence WordSequence::from_words(std::string name, std::vector<Word> words) {
  if (words.empty())
    throw Error(ErrorCode::InvalidArgument, "a word sequence needs at least one word");
  for (const Word& w : words)
    if (w.max_x_var() > 1)
      throw Error(ErrorCode::InvalidArgument,
                  "sequence words must use only the variables x1 and y");
  WordSequence s;
  s.name_ = std::move(name);
  s.bound_ = static_cast<std::uint32_t>(words.size());
  s.words_ = std::make_shared<const std::vector<Word>>(std::move(words));
  return s;
}

WordSequence WordSequence::from_text(std::string name, const std::string& text) {
  std::vector<Word> words;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) continue;
    try {
      words.push_back(parse_word(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return from_words(std::move(name), std::move(words));
}

Word WordSequence::word(std::uint32_t n) const {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sequence indices start at 1");
  if (is_engel_) return engel_word(n);
  if (bound_ && n > *bound_)
    throw Error(ErrorCode::InvalidArgument,
                "index " + std::to_string(n) + " is beyond the sequence prefix bound " +
                    std::to_string(*bound_));
  return (*words_)[n - 1];
}

Word tower_word(const WordSequence& seq, const TowerIndex& idx) {
  if (idx.empty()) throw Error(ErrorCode::InvalidArgument, "tower index must be nonempty");
  for (std::uint32_t n : idx)
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "tower index entries must be >= 1");
  Word acc = seq.word(idx[0]);
  for (std::size_t level = 1; level < idx.size(); ++level) {
    std::unordered_map<std::int32_t, Word> map;
    map.emplace(1, Word::variable(static_cast<std::int32_t>(level + 1)));
    map.emplace(kVarY, acc);
    acc = seq.word(idx[level]).substitute(map);
  }
  return acc;
}

ElementIndex evaluate_tower(const FiniteGroup& g, const WordSequence& seq,
                            const TowerIndex& idx, const std::vector<ElementIndex>& xs,
                            ElementIndex y) {
  if (xs.size() != idx.size())
    throw Error(ErrorCode::InvalidArgument, "tower arity mismatch");
  ElementIndex v = y;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (seq.is_engel()) {
      v = iterated_engel(g, xs[i], v, idx[i]);
    } else {
      VarAssignment assign(1);
      assign.set(1, xs[i]).set(kVarY, v);
      v = evaluate_word(g, seq.word(idx[i]), assign);
    }
  }
  return v;
}

SequenceCheckReport check_sequence(const FiniteGroup& g, const WordSequence& seq,
                                   const SequenceCheckBudget& budget) {
  SequenceCheckReport rep;
  std::uint32_t n_max = budget.n_max;
  if (seq.bound()) n_max = std::min(n_max, *seq.bound());
  if (n_max == 0) n_max = 1;
  rep.n_checked = n_max;

  std::vector<Word> words;
  words.reserve(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n) words.push_back(seq.word(n));

  // Property 1: u_n(a,1) = 1 and u_n(1,g) = 1 for every element.
  for (std::uint32_t n = 1; n <= n_max && rep.vanish_at_one_ok; ++n) {
    for (std::uint32_t e = 0; e < g.order(); ++e) {
      VarAssignment left(1);
      left.set(1, e).set(kVarY, g.identity());
      if (evaluate_word(g, words[n - 1], left) != g.identity()) {
        rep.vanish_at_one_ok = false;
        rep.v1_n = n;
        rep.v1_element = e;
        rep.v1_side = "u_n(a,1)";
        break;
      }
      VarAssignment right(1);
      right.set(1, g.identity()).set(kVarY, e);
      if (evaluate_word(g, words[n - 1], right) != g.identity()) {
        rep.vanish_at_one_ok = false;
        rep.v1_n = n;
        rep.v1_element = e;
        rep.v1_side = "u_n(1,g)";
        break;
      }
    }
  }

  // Property 2: once u_n(a,g) = 1 the later values stay 1.
  auto check_pair = [&](ElementIndex a, ElementIndex y) -> bool {
    std::optional<std::uint32_t> first_one;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      VarAssignment assign(1);
      assign.set(1, a).set(kVarY, y);
      bool is_one = evaluate_word(g, words[n - 1], assign) == g.identity();
      if (is_one && !first_one) first_one = n;
      if (!is_one && first_one) {
        rep.persistence_ok = false;
        rep.p2_a = a;
        rep.p2_g = y;
        rep.p2_n = *first_one;
        rep.p2_m = n;
        return false;
      }
    }
    return true;
  };
  std::uint64_t all_pairs = static_cast<std::uint64_t>(g.order()) * g.order();
  if (all_pairs <= budget.sample_pairs) {
    rep.pairs_exhaustive = true;
    for (std::uint32_t a = 0; a < g.order() && rep.persistence_ok; ++a)
      for (std::uint32_t y = 0; y < g.order() && rep.persistence_ok; ++y) {
        check_pair(a, y);
        ++rep.pairs_checked;
      }
  } else {
    std::mt19937_64 rng(budget.seed);
    for (std::uint64_t t = 0; t < budget.sample_pairs && rep.persistence_ok; ++t) {
      check_pair(static_cast<ElementIndex>(rng() % g.order()),
                 static_cast<ElementIndex>(rng() % g.order()));
      ++rep.pairs_checked;
    }
  }
  return rep;
}

namespace {

class WordParser {
public:
  explicit WordParser(const std::string& text) : text_(text) {}

  Word parse() {
    Word w = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse,
                "syntax error at position " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Word parse_expr() {
    Word w = parse_term();
    while (eat('*')) w = w * parse_term();
    return w;
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (eat('^')) return atom.pow(parse_signed_int());
    return atom;
  }

  std::int64_t parse_signed_int() {
    skip_ws();
    std::int64_t sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1 << 20) fail("exponent out of range");
      ++pos_;
    }
    return sign * v;
  }

  Word parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected variable, '[' or '('");
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      Word left = parse_expr();
      if (!eat(',')) fail("expected ',' in commutator");
      Word right = parse_expr();
      if (!eat(']')) fail("expected ']'");
      return word_commutator(left, right);
    }
    if (c == '(') {
      ++pos_;
      Word inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'y') {
      ++pos_;
      return Word::variable(kVarY);
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected subscript after 'x'");
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (v > 1 << 16) fail("variable subscript out of range");
        ++pos_;
      }
      if (v == 0) fail("variable subscripts are 1-based");
      return Word::variable(static_cast<std::int32_t>(v));
    }
    fail(std::string("unknown variable or token '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text) { return WordParser(text).parse(); }

}  // namespace engelrad
