#pragma once

#include <optional>
#include <ostream>

#include "document.hpp"

namespace csg::cli {

// Everything `invariants` prints about a semigroup. Models with infinitely
// many gaps get the Apéry and conductor data only.
json invariant_report(const Semigroup& s, const std::optional<NumericalSemigroup>& numerical = std::nullopt);

json decomposition_report(const Semigroup& s);

// Set-notation rendering: sets of tuples in lexicographic order.
void write_text(std::ostream& os, const json& j, int indent = 0);

}  // namespace csg::cli
