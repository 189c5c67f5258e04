#pragma once

#include <string>

#include "liemech/algebra.hpp"

namespace liemech {

/// JSON form of an algebra definition.  Field names are fixed by
/// schemas/lie_algebra.schema.json: name, dim, basis_labels,
/// structure (dense [k][i][j]), and optionally rep_dim, rep.
std::string algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const std::string& text);

void save_algebra(const LieAlgebra& g, const std::string& path);
LieAlgebra load_algebra(const std::string& path);

/// Builder lookup by CLI name: so3, sl<N>, gl<N>, so<M> (compact),
/// sof<M> (split f-basis), sp<2N>, galilei, cm3, heavy_top3, so31,
/// poincare, abelian<N>.  Anything ending in .json is loaded from disk.
LieAlgebra algebra_by_name(const std::string& spec);

}  // namespace liemech
