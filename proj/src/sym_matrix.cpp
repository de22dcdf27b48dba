#include "mergetree/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mergetree/errors.hpp"

namespace mt {

SymMatrix::SymMatrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {
  if (n == 0) throw InvalidMatrix("matrix dimension must be positive");
}

SymMatrix::SymMatrix(const std::vector<std::vector<double>>& rows) : SymMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw InvalidMatrix("row " + std::to_string(i + 1) + " has " +
                          std::to_string(rows[i].size()) + " entries, expected " +
                          std::to_string(n_));
    }
    for (std::size_t j = 0; j < n_; ++j) data_[i * n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw InvalidMatrix("matrix is not symmetric at (" + std::to_string(i + 1) + ", " +
                            std::to_string(j + 1) + ")");
      }
    }
  }
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  data_[i * n_ + j] = value;
  data_[j * n_ + i] = value;
}

std::vector<std::vector<double>> SymMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

ValidityCheck is_valid(const SymMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, i) > m(i, j)) return {false, std::array<std::size_t, 2>{i, j}};
    }
  }
  return {};
}

UltraCheck is_ultra(const SymMatrix& m) {
  if (auto v = is_valid(m); !v) {
    const auto [i, j] = *v.counterexample;
    return {false, std::array<std::size_t, 3>{i, j, j}};
  }
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m(i, j) > std::max(m(i, k), m(k, j))) {
          return {false, std::array<std::size_t, 3>{i, j, k}};
        }
      }
    }
  }
  return {};
}

double linf_distance(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) {
    throw DomainError("matrix dimension mismatch: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  }
  return d;
}

SymMatrix interpolate(const SymMatrix& a, const SymMatrix& b, double lambda) {
  if (a.size() != b.size()) throw DomainError("matrix dimension mismatch");
  SymMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      out.set(i, j, (1.0 - lambda) * a(i, j) + lambda * b(i, j));
    }
  }
  return out;
}

}  // namespace mt
