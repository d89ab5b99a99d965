#ifndef QGM_GFMATRIX_HPP
#define QGM_GFMATRIX_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qgm/error.hpp"

namespace qgm {

// Dense matrix over GF(p), p in {2,3,5,7}. Rows and columns carry labels;
// column labels name matroid elements. Immutable after construction.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix() = default;

  static PrimeFieldMatrix build(int p, std::vector<std::string> row_labels,
                                std::vector<std::string> col_labels,
                                std::vector<std::uint8_t> entries);

  int p() const { return p_; }
  int rows() const { return static_cast<int>(row_labels_.size()); }
  int cols() const { return static_cast<int>(col_labels_.size()); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  int col_index(const std::string& label) const;

  std::uint8_t at(int r, int c) const { return entries_[r * cols() + c]; }
  std::vector<std::uint8_t> row(int r) const;

 private:
  int p_ = 2;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::uint8_t> entries_;  // row-major
};

// Field helpers.
std::uint8_t gf_add(int p, std::uint8_t a, std::uint8_t b);
std::uint8_t gf_sub(int p, std::uint8_t a, std::uint8_t b);
std::uint8_t gf_mul(int p, std::uint8_t a, std::uint8_t b);
std::uint8_t gf_inv(int p, std::uint8_t a);

// Reduced row echelon form with zero rows dropped, so the result has
// linearly independent rows and its row count is rank(a). Pivoting walks
// columns in label order; the output keeps the input column order and gets
// fresh row labels r1..rk.
PrimeFieldMatrix reduce(const PrimeFieldMatrix& a);

int gf_rank(const PrimeFieldMatrix& a);

// A nonzero row-space vector of a supported inside s (aligned with a's
// column order), or nullopt when only the zero vector qualifies. Solved by
// eliminating the complement columns first; among valid vectors the reduced
// echelon representative with the lowest pivot label is returned.
std::optional<std::vector<std::uint8_t>> rowspace_vector_with_support(
    const PrimeFieldMatrix& a, const std::set<std::string>& s);

}  // namespace qgm

#endif  // QGM_GFMATRIX_HPP
