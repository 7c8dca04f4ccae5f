#pragma once

// Line-oriented canonical text formats: `.cub` for cubical complexes and
// `.sim` for simplicial complexes.  Serialisation is deterministic
// (dimension-major, lexicographic ids) and round-trips byte-identically.

#include "cubik/complex.hpp"
#include "cubik/simplex.hpp"

#include <string>

namespace cubik {

std::string serialize_cub(const CubicalComplex& X, const std::string& name,
                          const std::vector<std::string>& comments = {});
ComplexPtr parse_cub(const std::string& text, std::string* name_out = nullptr);

std::string serialize_sim(const SimplicialComplex& S, const std::string& name,
                          const std::vector<std::string>& comments = {});
SimpPtr parse_sim(const std::string& text, std::string* name_out = nullptr);

}  // namespace cubik
