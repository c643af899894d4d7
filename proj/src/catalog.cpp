#include "catalog.hpp"

#include <algorithm>
#include <cctype>

namespace engelrad {

namespace {

std::vector<std::uint16_t> n_cycle(std::uint32_t degree) {
  std::vector<std::uint16_t> p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>((i + 1) % degree);
  return p;
}

std::vector<std::uint16_t> transposition(std::uint32_t degree, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint16_t> p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
  std::swap(p[a], p[b]);
  return p;
}

FiniteGroup cyclic(std::uint32_t n, GroupConfig cfg) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
  PermutationSpec spec;
  spec.degree = std::max(n, 1u);
  if (n >= 2) spec.generators.push_back(n_cycle(n));
  return FiniteGroup::from_permutations(std::move(spec), cfg);
}

FiniteGroup dihedral(std::uint32_t n, GroupConfig cfg) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dihedral parameter must be >= 1");
  PermutationSpec spec;
  if (n == 1) {
    spec.degree = 2;
    spec.generators.push_back(transposition(2, 0, 1));
  } else if (n == 2) {
    spec.degree = 4;
    spec.generators.push_back(transposition(4, 0, 1));
    spec.generators.push_back(transposition(4, 2, 3));
  } else {
    spec.degree = n;
    spec.generators.push_back(n_cycle(n));
    std::vector<std::uint16_t> refl(n);
    for (std::uint32_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint16_t>((n - i) % n);
    spec.generators.push_back(std::move(refl));
  }
  return FiniteGroup::from_permutations(std::move(spec), cfg);
}

FiniteGroup symmetric(std::uint32_t n, GroupConfig cfg) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "symmetric parameter must be >= 1");
  PermutationSpec spec;
  spec.degree = std::max(n, 1u);
  if (n >= 2) {
    spec.generators.push_back(transposition(n, 0, 1));
    if (n >= 3) spec.generators.push_back(n_cycle(n));
  }
  return FiniteGroup::from_permutations(std::move(spec), cfg);
}

FiniteGroup alternating(std::uint32_t n, GroupConfig cfg) {
  PermutationSpec spec;
  spec.degree = std::max(n, 1u);
  if (n >= 3) {
    std::vector<std::uint16_t> three(n);
    for (std::uint32_t i = 0; i < n; ++i) three[i] = static_cast<std::uint16_t>(i);
    three[0] = 1; three[1] = 2; three[2] = 0;
    spec.generators.push_back(std::move(three));
    if (n >= 4) {
      std::vector<std::uint16_t> big(n);
      for (std::uint32_t i = 0; i < n; ++i) big[i] = static_cast<std::uint16_t>(i);
      if (n % 2 == 1) {
        for (std::uint32_t i = 0; i < n; ++i) big[i] = static_cast<std::uint16_t>((i + 1) % n);
      } else {
        // (2 3 ... n): an (n-1)-cycle fixing point 1, even for even n.
        for (std::uint32_t i = 1; i < n; ++i)
          big[i] = static_cast<std::uint16_t>(i == n - 1 ? 1 : i + 1);
      }
      spec.generators.push_back(std::move(big));
    }
  }
  return FiniteGroup::from_permutations(std::move(spec), cfg);
}

FiniteGroup quaternion8(GroupConfig cfg) {
  // Q8 as the subgroup <i, j> of SL_2(F_3).
  MatrixSpec spec;
  spec.prime = 3;
  spec.dim = 2;
  spec.generators.push_back({0, 2, 1, 0});
  spec.generators.push_back({1, 1, 1, 2});
  return FiniteGroup::from_matrices(std::move(spec), cfg);
}

FiniteGroup unitriangular(std::uint32_t n, std::uint32_t p, GroupConfig cfg) {
  if (n < 2 || n > 8)
    throw Error(ErrorCode::InvalidArgument, "ut dimension out of supported range [2,8]");
  MatrixSpec spec;
  spec.prime = p;
  spec.dim = n;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) {
      std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
      for (std::uint32_t d = 0; d < n; ++d) m[d * n + d] = 1;
      m[i * n + j] = 1;
      spec.generators.push_back(std::move(m));
    }
  return FiniteGroup::from_matrices(std::move(spec), cfg);
}

FiniteGroup special_linear2(std::uint32_t p, GroupConfig cfg) {
  MatrixSpec spec;
  spec.prime = p;
  spec.dim = 2;
  spec.generators.push_back({1, 1, 0, 1});
  spec.generators.push_back({1, 0, 1, 1});
  return FiniteGroup::from_matrices(std::move(spec), cfg);
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
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
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t q : factors)
      if (mod_pow(g, (p - 1) / q) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw Error(ErrorCode::Internal, "no primitive root found");
}

FiniteGroup general_linear2(std::uint32_t p, GroupConfig cfg) {
  MatrixSpec spec;
  spec.prime = p;
  spec.dim = 2;
  spec.generators.push_back({1, 1, 0, 1});
  spec.generators.push_back({1, 0, 1, 1});
  if (p > 2) {
    std::uint8_t r = static_cast<std::uint8_t>(smallest_primitive_root(p));
    spec.generators.push_back({r, 0, 0, 1});
  }
  return FiniteGroup::from_matrices(std::move(spec), cfg);
}

std::uint32_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw Error(ErrorCode::InvalidArgument, "invalid " + what + ": '" + s + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 1u << 30) throw Error(ErrorCode::InvalidArgument, what + " out of range");
  }
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

FiniteGroup from_token(const std::string& token, GroupConfig cfg);

}  // namespace

FiniteGroup catalog_group(const std::string& name, const std::vector<std::string>& params,
                          GroupConfig cfg) {
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw Error(ErrorCode::InvalidArgument,
                  "catalog '" + name + "' expects " + std::to_string(n) + " parameter(s)");
  };
  if (name == "cyclic") {
    want(1);
    return cyclic(parse_uint(params[0], "order"), cfg);
  }
  if (name == "dihedral") {
    want(1);
    return dihedral(parse_uint(params[0], "parameter"), cfg);
  }
  if (name == "symmetric") {
    want(1);
    return symmetric(parse_uint(params[0], "degree"), cfg);
  }
  if (name == "alternating") {
    want(1);
    return alternating(parse_uint(params[0], "degree"), cfg);
  }
  if (name == "quaternion8") {
    want(0);
    return quaternion8(cfg);
  }
  if (name == "ut") {
    want(2);
    return unitriangular(parse_uint(params[0], "dimension"), parse_uint(params[1], "prime"), cfg);
  }
  if (name == "sl2") {
    want(1);
    return special_linear2(parse_uint(params[0], "prime"), cfg);
  }
  if (name == "gl2") {
    want(1);
    return general_linear2(parse_uint(params[0], "prime"), cfg);
  }
  if (name == "direct_product") {
    if (params.size() < 2)
      throw Error(ErrorCode::InvalidArgument, "direct_product expects at least 2 members");
    FiniteGroup acc = from_token(params[0], cfg);
    for (std::size_t i = 1; i < params.size(); ++i)
      acc = FiniteGroup::direct_product(acc, from_token(params[i], cfg), cfg);
    return acc;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown catalog name '" + name + "'");
}

namespace {

FiniteGroup from_token(const std::string& token, GroupConfig cfg) {
  if (token.empty()) throw Error(ErrorCode::InvalidArgument, "empty catalog token");
  if (token == "q8") return quaternion8(cfg);
  if (token.rfind("sl2_", 0) == 0)
    return special_linear2(parse_uint(token.substr(4), "prime"), cfg);
  if (token.rfind("gl2_", 0) == 0)
    return general_linear2(parse_uint(token.substr(4), "prime"), cfg);
  if (token.rfind("ut", 0) == 0) {
    auto rest = token.substr(2);
    auto parts = split(rest, '_');
    if (parts.size() != 2)
      throw Error(ErrorCode::InvalidArgument, "ut token must look like ut3_2");
    return unitriangular(parse_uint(parts[0], "dimension"), parse_uint(parts[1], "prime"), cfg);
  }
  char head = token[0];
  std::string tail = token.substr(1);
  switch (head) {
    case 'c': return cyclic(parse_uint(tail, "order"), cfg);
    case 'd': return dihedral(parse_uint(tail, "parameter"), cfg);
    case 's': return symmetric(parse_uint(tail, "degree"), cfg);
    case 'a': return alternating(parse_uint(tail, "degree"), cfg);
    default:
      throw Error(ErrorCode::InvalidArgument, "unknown catalog token '" + token + "'");
  }
}

}  // namespace

FiniteGroup parse_catalog_spec(const std::string& spec, GroupConfig cfg) {
  std::string s;
  for (char c : spec) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s.find(',') != std::string::npos) {
    auto parts = split(s, ',');
    std::string name = parts.front();
    parts.erase(parts.begin());
    return catalog_group(name, parts, cfg);
  }
  if (s.find('x') != std::string::npos) {
    auto parts = split(s, 'x');
    if (parts.size() < 2 || std::any_of(parts.begin(), parts.end(),
                                        [](const std::string& p) { return p.empty(); }))
      throw Error(ErrorCode::InvalidArgument, "malformed product token '" + spec + "'");
    FiniteGroup acc = from_token(parts[0], cfg);
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = FiniteGroup::direct_product(acc, from_token(parts[i], cfg), cfg);
    return acc;
  }
  return from_token(s, cfg);
}

const std::vector<std::string>& builtin_catalog() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (int n = 1; n <= 30; ++n) v.push_back("c" + std::to_string(n));
    for (int n = 2; n <= 20; ++n) v.push_back("d" + std::to_string(n));
    v.insert(v.end(), {"q8", "s3", "s4", "s5", "s6", "a4", "a5", "sl2_3",
                       "ut2_2", "ut3_2", "ut4_2", "ut2_3", "ut3_3", "ut4_3",
                       "c2xc2", "c3xc3", "s3xc2", "s3xs3", "q8xc3", "a4xc2",
                       "s4xc6", "a5xc2", "a4xa5", "a5xa5"});
    return v;
  }();
  return names;
}

}  // namespace engelrad
