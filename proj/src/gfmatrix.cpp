#include "qgm/gfmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace qgm {

namespace {

bool supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

// Column permutation that visits labels in lexicographic order.
std::vector<int> label_order(const std::vector<std::string>& labels) {
  std::vector<int> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return labels[a] < labels[b]; });
  return order;
}

// Gauss-Jordan over the given column visiting order. Rows of m are modified
// in place; returns the pivot column (in storage index) per pivot row.
std::vector<int> rref_in_order(int p, std::vector<std::vector<std::uint8_t>>& m,
                               const std::vector<int>& col_order) {
  std::vector<int> pivots;
  size_t pivot_row = 0;
  for (int col : col_order) {
    if (pivot_row >= m.size()) break;
    size_t sel = pivot_row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[pivot_row], m[sel]);
    std::uint8_t inv = gf_inv(p, m[pivot_row][col]);
    for (std::uint8_t& x : m[pivot_row]) x = gf_mul(p, x, inv);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      std::uint8_t factor = m[r][col];
      for (size_t c = 0; c < m[r].size(); ++c)
        m[r][c] = gf_sub(p, m[r][c], gf_mul(p, factor, m[pivot_row][c]));
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::vector<std::vector<std::uint8_t>> to_rows(const PrimeFieldMatrix& a) {
  std::vector<std::vector<std::uint8_t>> m(a.rows());
  for (int r = 0; r < a.rows(); ++r) m[r] = a.row(r);
  return m;
}

}  // namespace

PrimeFieldMatrix PrimeFieldMatrix::build(int p,
                                         std::vector<std::string> row_labels,
                                         std::vector<std::string> col_labels,
                                         std::vector<std::uint8_t> entries) {
  if (!supported_prime(p))
    throw Error("unsupported field order " + std::to_string(p) +
                " (p must be one of 2, 3, 5, 7)");
  if (entries.size() != row_labels.size() * col_labels.size())
    throw Error("matrix entry count does not match its shape");
  for (std::uint8_t x : entries)
    if (x >= p) throw Error("matrix entry out of range for GF(p)");
  auto unique_labels = [](std::vector<std::string> ls) {
    std::sort(ls.begin(), ls.end());
    return std::adjacent_find(ls.begin(), ls.end()) == ls.end();
  };
  if (!unique_labels(row_labels)) throw Error("duplicate row label");
  if (!unique_labels(col_labels)) throw Error("duplicate column label");
  PrimeFieldMatrix a;
  a.p_ = p;
  a.row_labels_ = std::move(row_labels);
  a.col_labels_ = std::move(col_labels);
  a.entries_ = std::move(entries);
  return a;
}

int PrimeFieldMatrix::col_index(const std::string& label) const {
  for (int c = 0; c < cols(); ++c)
    if (col_labels_[c] == label) return c;
  throw Error("unknown column label '" + label + "'");
}

std::vector<std::uint8_t> PrimeFieldMatrix::row(int r) const {
  return {entries_.begin() + r * cols(), entries_.begin() + (r + 1) * cols()};
}

std::uint8_t gf_add(int p, std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>((a + b) % p);
}

std::uint8_t gf_sub(int p, std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>((a + p - b) % p);
}

std::uint8_t gf_mul(int p, std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>((a * b) % p);
}

std::uint8_t gf_inv(int p, std::uint8_t a) {
  if (a == 0) throw Error("division by zero in GF(p)");
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return static_cast<std::uint8_t>(x);
  throw Error("no inverse (modulus not prime?)");
}

PrimeFieldMatrix reduce(const PrimeFieldMatrix& a) {
  std::vector<std::vector<std::uint8_t>> m = to_rows(a);
  rref_in_order(a.p(), m, label_order(a.col_labels()));
  std::vector<std::uint8_t> entries;
  std::vector<std::string> row_labels;
  int k = 0;
  for (const std::vector<std::uint8_t>& row : m) {
    if (std::all_of(row.begin(), row.end(), [](std::uint8_t x) { return !x; }))
      continue;
    entries.insert(entries.end(), row.begin(), row.end());
    row_labels.push_back("r" + std::to_string(++k));
  }
  return PrimeFieldMatrix::build(a.p(), std::move(row_labels), a.col_labels(),
                                 std::move(entries));
}

int gf_rank(const PrimeFieldMatrix& a) { return reduce(a).rows(); }

std::optional<std::vector<std::uint8_t>> rowspace_vector_with_support(
    const PrimeFieldMatrix& a, const std::set<std::string>& s) {
  std::vector<bool> in_s(a.cols(), false);
  for (const std::string& label : s) in_s[a.col_index(label)] = true;

  // Visit the complement columns first (each block in label order): rows of
  // the RREF that are zero on the complement span exactly the row-space
  // vectors supported inside s.
  std::vector<int> order;
  for (int c : label_order(a.col_labels()))
    if (!in_s[c]) order.push_back(c);
  std::vector<int> s_order;
  for (int c : label_order(a.col_labels()))
    if (in_s[c]) s_order.push_back(c);
  order.insert(order.end(), s_order.begin(), s_order.end());

  std::vector<std::vector<std::uint8_t>> m = to_rows(a);
  std::vector<int> pivots = rref_in_order(a.p(), m, order);

  for (size_t r = 0; r < m.size(); ++r) {
    bool zero_outside = true;
    bool nonzero = false;
    for (int c = 0; c < a.cols(); ++c) {
      if (m[r][c] == 0) continue;
      nonzero = true;
      if (!in_s[c]) zero_outside = false;
    }
    if (nonzero && zero_outside) return m[r];
  }
  return std::nullopt;
}

}  // namespace qgm
