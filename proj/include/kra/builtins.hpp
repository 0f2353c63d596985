#pragma once

#include "kra/diagram.hpp"

#include <string>
#include <vector>

namespace kra {

/// Names accepted by builtin(): "sm", "chain", "ym".
std::vector<std::string> builtin_names();

/// `param` is the matrix size N for "ym" and ignored otherwise.
/// Throws std::invalid_argument for unknown names or N < 1.
KrajewskiDiagram builtin(const std::string& name, int param = 0);

} // namespace kra
