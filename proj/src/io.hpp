#pragma once

#include <string>

#include "group.hpp"

namespace engelrad {

/// Parses one of the three input formats:
///   perm    one generator per line in cycle notation, '#' comments,
///           degree inferred as the largest point
///   table   first line n, then n rows of n 0-based indices
///   matrix  header "matrix p n", then n-line generator blocks separated by
///           blank lines
/// format may be "perm", "table", "matrix", or empty to infer from the first
/// meaningful line.
FiniteGroup group_from_text(const std::string& text, const std::string& format,
                            GroupConfig cfg = {});

/// Reads the file (rejecting anything over 10 MB) and parses it.
FiniteGroup group_from_file(const std::string& path, const std::string& format,
                            GroupConfig cfg = {});

std::string read_file_guarded(const std::string& path);

}  // namespace engelrad
