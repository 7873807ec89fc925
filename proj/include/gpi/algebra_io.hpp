#pragma once

#include <string>

#include "gpi/algebra.hpp"

namespace gpi {

// JSON algebra document: fields `name`, `group {orders}`, `basis` (labels),
// `deg` (per element: residue tuple plus trailing parity bit), `mult` (list
// of [i, j, k, "p/q"], omitted entries zero), optional `unit`, optional
// `wedderburn {components, radical}`. Rationals are "p/q" strings.
// parse(emit(a)) == a on canonical forms.
GradedAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const GradedAlgebra& a);

GradedAlgebra load_algebra_file(const std::string& path);

// Resolves "catalog:..." specs or file paths to an algebra body.
GradedAlgebra resolve_algebra(const std::string& source);

}  // namespace gpi
