#ifndef DWOP_MATRIX_IO_HPP
#define DWOP_MATRIX_IO_HPP

#include <string>

#include <json.hpp>

#include "dwop/types.hpp"

namespace dwop {

// Matrix file format: {"rows": n, "cols": n, "entries": [[re, im], ...]}
// with entries row-major. Doubles round-trip losslessly.

nlohmann::json matrix_to_json(const Matrixcd& A);
Matrixcd matrix_from_json(const nlohmann::json& j);

Matrixcd read_matrix(const std::string& path);
void write_matrix(const Matrixcd& A, const std::string& path);

}  // namespace dwop

#endif  // DWOP_MATRIX_IO_HPP
