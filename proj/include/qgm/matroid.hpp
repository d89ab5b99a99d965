#ifndef QGM_MATROID_HPP
#define QGM_MATROID_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qgm/error.hpp"
#include "qgm/gfmatrix.hpp"
#include "qgm/graph.hpp"

namespace qgm {

// Subsets of a ground set as bitmasks. Operations that enumerate the whole
// power set refuse ground sets larger than kEnumerationCap.
using Mask = std::uint32_t;
inline constexpr int kEnumerationCap = 20;

int popcount(Mask m);

// Matroid as an independence oracle over a labelled ground set. Elements are
// stored sorted, and bit i of a Mask refers to elements()[i]. Rank and
// closure are computed greedily from the independence query, so they are
// valid for any backend that satisfies the matroid axioms.
class Matroid {
 public:
  virtual ~Matroid() = default;

  const std::vector<std::string>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  Mask full_mask() const {
    return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1;
  }

  int index_of(const std::string& label) const;
  bool has_element(const std::string& label) const;
  Mask mask_of(const std::set<std::string>& labels) const;
  std::set<std::string> labels_of(Mask m) const;

  virtual bool independent(Mask x) const = 0;
  bool independent(const std::set<std::string>& x) const {
    return independent(mask_of(x));
  }

  // Size of a maximal independent subset of x.
  int rank(Mask x) const;
  int rank(const std::set<std::string>& x) const { return rank(mask_of(x)); }
  int rank() const { return rank(full_mask()); }

  // cl(x) = { e : rank(x + e) = rank(x) }.
  Mask closure(Mask x) const;

  // lambda(x) = r(x) + r(E - x) - r(E).
  int lambda(Mask x) const;

 protected:
  explicit Matroid(std::vector<std::string> elements);

 private:
  std::vector<std::string> elements_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

void require_enumerable(const Matroid& m, const char* op);

// All minimal dependent sets, ascending as masks. Needs the enumeration cap.
std::vector<Mask> circuits(const Matroid& m);

// Circuits of the dual, via the dual rank r*(X) = |X| - r(E) + r(E - X).
std::vector<Mask> cocircuits(const Matroid& m);

bool is_circuit(const Matroid& m, Mask x);

// Tutte connectivity: connected (no 1-separation) and free of 2-separations,
// i.e. no partition (X, E-X) with |X|, |E-X| >= 2 and lambda(X) <= 1.
bool is_3_connected(const Matroid& m);

// Matroid with all bases listed. Also the carrier for brute-force results.
class ExplicitMatroid : public Matroid {
 public:
  static std::shared_ptr<const ExplicitMatroid> from_bases(
      std::vector<std::string> elements,
      const std::vector<std::set<std::string>>& bases);
  static std::shared_ptr<const ExplicitMatroid> from_basis_masks(
      std::vector<std::string> elements, std::vector<Mask> bases);

  bool independent(Mask x) const override;
  const std::vector<Mask>& bases() const { return bases_; }

 private:
  ExplicitMatroid(std::vector<std::string> elements, std::vector<Mask> bases);
  std::vector<Mask> bases_;  // sorted, equicardinal
};

// Cycle matroid M(G): independent sets are the edge-sets of forests.
class GraphicMatroid : public Matroid {
 public:
  explicit GraphicMatroid(MultiGraph g);
  bool independent(Mask x) const override;
  const MultiGraph& graph() const { return graph_; }

 private:
  MultiGraph graph_;
  std::vector<std::pair<int, int>> ends_;  // endpoint vertex indices per bit
  int num_vertices_;
};

class UniformMatroid : public Matroid {
 public:
  // Elements e1..en.
  UniformMatroid(int r, int n);
  UniformMatroid(int r, std::vector<std::string> elements);
  bool independent(Mask x) const override;
  int uniform_rank() const { return r_; }

 private:
  int r_;
};

// Columns of a GF(p) matrix; independence is linear independence.
class LinearMatroid : public Matroid {
 public:
  explicit LinearMatroid(PrimeFieldMatrix a);
  bool independent(Mask x) const override;
  const PrimeFieldMatrix& matrix() const { return matrix_; }

 private:
  PrimeFieldMatrix matrix_;
  std::vector<int> col_of_bit_;
};

// M \ D / C via the rank identity r_{M/C}(X) = r_M(X + C) - r_M(C).
// Contraction by dependent sets is allowed.
MatroidPtr minor(MatroidPtr m, const std::set<std::string>& deleted,
                 const std::set<std::string>& contracted);

// M | X.
MatroidPtr restriction(MatroidPtr m, const std::set<std::string>& keep);

// The Vamos matroid: rank 4 on pairs a, b, c, d, whose only non-basis
// 4-sets are the five pair unions other than c+d.
std::shared_ptr<const ExplicitMatroid> vamos();

struct AxiomReport {
  bool ok = true;
  std::string detail;
};

// Independence-system axioms in the augmentation form: empty set present,
// downward closure, and unique minimal dependent subset when augmenting an
// independent set by one element fails.
AxiomReport check_axioms(const std::vector<std::string>& elements,
                         const std::vector<Mask>& family);
AxiomReport check_axioms(const ExplicitMatroid& m);

}  // namespace qgm

#endif  // QGM_MATROID_HPP
