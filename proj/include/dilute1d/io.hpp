#ifndef DILUTE1D_IO_HPP
#define DILUTE1D_IO_HPP

#include <json.hpp>
#include <string>

#include "dilute1d/potential.hpp"
#include "dilute1d/scattering.hpp"

namespace dilute1d::io {

inline constexpr const char* kSchema = "dilute1d/1";

// Serialize with doubles at 17 significant digits so reports are
// byte-stable across runs.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

// Potential documents: {"schema": "dilute1d/1", "R0": ..., "atoms":
// [{"x","weight"}], "density": {"xs","vals"}, "dim": d^2, "matrix_part":
// {"i,j": {atoms, density}}, "hard_core": bool}. Unknown fields rejected.
scatter::ScalarPotential scalar_potential_from_json(const nlohmann::json& j);
scatter::MatrixPotential matrix_potential_from_json(const nlohmann::json& j);

nlohmann::ordered_json scalar_result_to_json(
    const scatter::ScatteringScalarResult& r);

}  // namespace dilute1d::io

#endif
