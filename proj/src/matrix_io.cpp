#include "dwop/matrix_io.hpp"

#include <cmath>
#include <fstream>

namespace dwop {

nlohmann::json matrix_to_json(const Matrixcd& A) {
  nlohmann::json entries = nlohmann::json::array();
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      entries.push_back({A(i, j).real(), A(i, j).imag()});
  return {{"rows", A.rows()}, {"cols", A.cols()}, {"entries", entries}};
}

Matrixcd matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw std::invalid_argument("matrix_from_json: expected rows/cols/entries");
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("matrix_from_json: dimensions must be positive");
  const auto& entries = j.at("entries");
  if (!entries.is_array() ||
      static_cast<Index>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix_from_json: entries length mismatch");
  Matrixcd A(rows, cols);
  Index k = 0;
  for (Index i = 0; i < rows; ++i) {
    for (Index j2 = 0; j2 < cols; ++j2, ++k) {
      const auto& e = entries.at(static_cast<size_t>(k));
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix_from_json: entry must be [re, im]");
      const double re = e.at(0).get<double>();
      const double im = e.at(1).get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw std::invalid_argument("matrix_from_json: non-finite value");
      A(i, j2) = {re, im};
    }
  }
  return A;
}

Matrixcd read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_matrix: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return matrix_from_json(j);
}

void write_matrix(const Matrixcd& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_matrix: cannot open " + path);
  out << matrix_to_json(A).dump(2) << '\n';
}

}  // namespace dwop
