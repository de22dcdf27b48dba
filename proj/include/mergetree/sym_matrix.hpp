#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace mt {

/// Dense symmetric n×n matrix of reals. Construction rejects asymmetric data.
class SymMatrix {
 public:
  /// n×n matrix filled with `fill`.
  explicit SymMatrix(std::size_t n, double fill = 0.0);
  /// Row-major entries; throws InvalidMatrix unless square and exactly symmetric.
  explicit SymMatrix(const std::vector<std::vector<double>>& rows);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : SymMatrix(std::vector<std::vector<double>>(rows.begin(), rows.end())) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value);

  std::vector<std::vector<double>> rows() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Outcome of is_valid: ok, or the first (i, j) with M_ii > M_ij (0-based).
struct ValidityCheck {
  bool ok = true;
  std::optional<std::array<std::size_t, 2>> counterexample;
  explicit operator bool() const { return ok; }
};

/// Outcome of is_ultra: ok, or the first witness. For a validity failure the
/// witness is (i, j, j); otherwise M_ij > max(M_ik, M_kj).
struct UltraCheck {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> counterexample;
  explicit operator bool() const { return ok; }
};

ValidityCheck is_valid(const SymMatrix& m);
UltraCheck is_ultra(const SymMatrix& m);

/// Maximum absolute entrywise difference, diagonal included.
double linf_distance(const SymMatrix& a, const SymMatrix& b);

/// (1 - lambda) * a + lambda * b.
SymMatrix interpolate(const SymMatrix& a, const SymMatrix& b, double lambda);

}  // namespace mt
