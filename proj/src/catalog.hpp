#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace engelrad {

/// Construct a named test group. Supported names: cyclic(n), dihedral(n),
/// symmetric(n), alternating(n), quaternion8, ut(n,p), sl2(p), gl2(p),
/// direct_product(token, token, ...). Parameters are decimal strings; product
/// members are compact tokens (see parse_catalog_spec).
FiniteGroup catalog_group(const std::string& name, const std::vector<std::string>& params,
                          GroupConfig cfg = {});

/// Parse a user-facing catalog spec: either "name,param,param" or a compact
/// token like "s4", "c12", "d6", "q8", "a5", "sl2_3", "gl2_5", "ut3_2", or a
/// product of tokens joined with 'x' ("a4xa5").
FiniteGroup parse_catalog_spec(const std::string& spec, GroupConfig cfg = {});

/// The deterministic list of compact tokens making up the built-in test
/// catalog (the `--suite catalog` universe).
const std::vector<std::string>& builtin_catalog();

}  // namespace engelrad
