#include "knotinv/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace knotinv {

IntegerSymmetricMatrix block_sum(const IntegerSymmetricMatrix& a, const IntegerSymmetricMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  IntegerMatrix s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b(i, j);
  return IntegerSymmetricMatrix(std::move(s));
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntegerMatrix read_square_matrix(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw std::runtime_error("matrix: missing size");
  long n = 0;
  try {
    std::size_t used = 0;
    n = std::stol(tok, &used);
    if (used != tok.size() || n < 0) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    throw std::runtime_error("matrix: bad size '" + tok + "'");
  }
  IntegerMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (!(in >> tok)) throw std::runtime_error("matrix: expected " + std::to_string(n * n) + " entries");
      Integer v;
      if (v.set_str(tok, 10) != 0) throw std::runtime_error("matrix: bad entry '" + tok + "'");
      m(i, j) = v;
    }
  }
  return m;
}

IntegerMatrix parse_square_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_square_matrix(in);
}

IntegerSymmetricMatrix read_symmetric_matrix(std::istream& in) {
  IntegerMatrix m = read_square_matrix(in);
  if (!m.is_symmetric()) throw std::runtime_error("matrix: not symmetric");
  return IntegerSymmetricMatrix(std::move(m));
}

void write_matrix(std::ostream& out, const IntegerMatrix& m) {
  out << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

}  // namespace knotinv
