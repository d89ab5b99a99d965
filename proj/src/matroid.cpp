#include "qgm/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace qgm {

int popcount(Mask m) { return std::popcount(m); }

Matroid::Matroid(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) !=
      elements_.end())
    throw Error("duplicate ground set element");
  if (elements_.size() > 32)
    throw Error("ground set larger than 32 elements is not supported");
}

int Matroid::index_of(const std::string& label) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), label);
  if (it == elements_.end() || *it != label)
    throw Error("unknown element '" + label + "'");
  return static_cast<int>(it - elements_.begin());
}

bool Matroid::has_element(const std::string& label) const {
  return std::binary_search(elements_.begin(), elements_.end(), label);
}

Mask Matroid::mask_of(const std::set<std::string>& labels) const {
  Mask m = 0;
  for (const std::string& l : labels) m |= Mask{1} << index_of(l);
  return m;
}

std::set<std::string> Matroid::labels_of(Mask m) const {
  std::set<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (m & (Mask{1} << i)) out.insert(elements_[i]);
  return out;
}

int Matroid::rank(Mask x) const {
  Mask basis = 0;
  for (int i = 0; i < size(); ++i) {
    Mask bit = Mask{1} << i;
    if ((x & bit) && independent(basis | bit)) basis |= bit;
  }
  return popcount(basis);
}

Mask Matroid::closure(Mask x) const {
  Mask basis = 0;
  for (int i = 0; i < size(); ++i) {
    Mask bit = Mask{1} << i;
    if ((x & bit) && independent(basis | bit)) basis |= bit;
  }
  Mask cl = x;
  for (int i = 0; i < size(); ++i) {
    Mask bit = Mask{1} << i;
    if (!(cl & bit) && !independent(basis | bit)) cl |= bit;
  }
  return cl;
}

int Matroid::lambda(Mask x) const {
  return rank(x) + rank(full_mask() & ~x) - rank();
}

void require_enumerable(const Matroid& m, const char* op) {
  if (m.size() > kEnumerationCap)
    throw CapError(std::string(op) + ": ground set exceeds the enumeration "
                   "cap of " + std::to_string(kEnumerationCap) + " elements");
}

std::vector<Mask> circuits(const Matroid& m) {
  require_enumerable(m, "circuits");
  std::vector<Mask> out;
  Mask full = m.full_mask();
  for (Mask x = 1; x <= full; ++x) {
    if (m.independent(x)) continue;
    bool minimal = true;
    for (Mask rest = x; rest && minimal; rest &= rest - 1)
      if (!m.independent(x & ~(rest & -rest))) minimal = false;
    if (minimal) out.push_back(x);
    if (x == full) break;
  }
  return out;
}

namespace {

// Dual oracle: X is coindependent iff E - X spans M.
class DualMatroid : public Matroid {
 public:
  explicit DualMatroid(const Matroid& base)
      : Matroid(base.elements()), base_(base), full_rank_(base.rank()) {}
  bool independent(Mask x) const override {
    return base_.rank(base_.full_mask() & ~x) == full_rank_;
  }

 private:
  const Matroid& base_;
  int full_rank_;
};

}  // namespace

std::vector<Mask> cocircuits(const Matroid& m) {
  require_enumerable(m, "cocircuits");
  return circuits(DualMatroid(m));
}

bool is_circuit(const Matroid& m, Mask x) {
  if (x == 0 || m.independent(x)) return false;
  for (Mask rest = x; rest; rest &= rest - 1)
    if (!m.independent(x & ~(rest & -rest))) return false;
  return true;
}

bool is_3_connected(const Matroid& m) {
  require_enumerable(m, "is_3_connected");
  int n = m.size();
  if (n == 0) return true;
  // Rank table over all subsets; lambda checks become lookups.
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  for (Mask x = 0; x < (Mask{1} << n); ++x)
    ranks[x] = static_cast<std::uint8_t>(m.rank(x));
  int r = ranks[m.full_mask()];
  Mask full = m.full_mask();
  for (Mask x = 1; x < full; ++x) {
    int lam = ranks[x] + ranks[full & ~x] - r;
    if (lam <= 0) return false;  // 1-separation: M not even connected
    if (lam <= 1 && popcount(x) >= 2 && popcount(full & ~x) >= 2) return false;
  }
  return true;
}

ExplicitMatroid::ExplicitMatroid(std::vector<std::string> elements,
                                 std::vector<Mask> bases)
    : Matroid(std::move(elements)), bases_(std::move(bases)) {
  if (bases_.empty()) throw Error("explicit matroid needs at least one basis");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  int r = popcount(bases_.front());
  for (Mask b : bases_)
    if (popcount(b) != r) throw Error("bases are not equicardinal");
}

std::shared_ptr<const ExplicitMatroid> ExplicitMatroid::from_bases(
    std::vector<std::string> elements,
    const std::vector<std::set<std::string>>& bases) {
  // Two-phase: element indexing needs a Matroid, so build masks by hand.
  std::vector<std::string> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::string, int> idx;
  for (size_t i = 0; i < sorted.size(); ++i) idx[sorted[i]] = (int)i;
  std::vector<Mask> masks;
  for (const std::set<std::string>& b : bases) {
    Mask m = 0;
    for (const std::string& l : b) {
      auto it = idx.find(l);
      if (it == idx.end()) throw Error("basis uses unknown element '" + l + "'");
      m |= Mask{1} << it->second;
    }
    masks.push_back(m);
  }
  return from_basis_masks(std::move(sorted), std::move(masks));
}

std::shared_ptr<const ExplicitMatroid> ExplicitMatroid::from_basis_masks(
    std::vector<std::string> elements, std::vector<Mask> bases) {
  return std::shared_ptr<const ExplicitMatroid>(
      new ExplicitMatroid(std::move(elements), std::move(bases)));
}

bool ExplicitMatroid::independent(Mask x) const {
  for (Mask b : bases_)
    if ((x & b) == x) return true;
  return false;
}

GraphicMatroid::GraphicMatroid(MultiGraph g)
    : Matroid(g.edge_labels()), graph_(std::move(g)) {
  num_vertices_ = graph_.vertex_count();
  std::map<std::string, int> vidx;
  for (int i = 0; i < num_vertices_; ++i) vidx[graph_.vertices()[i]] = i;
  for (const std::string& label : elements()) {
    const Edge& e = graph_.edge(label);
    ends_.emplace_back(vidx[e.u], vidx[e.v]);
  }
}

bool GraphicMatroid::independent(Mask x) const {
  // Union-find; an edge closing a cycle (or any loop) makes x dependent.
  std::vector<int> parent(num_vertices_);
  for (int i = 0; i < num_vertices_; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < size(); ++i) {
    if (!(x & (Mask{1} << i))) continue;
    int a = find(ends_[i].first), b = find(ends_[i].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

UniformMatroid::UniformMatroid(int r, int n)
    : Matroid([n] {
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
        return labels;
      }()),
      r_(r) {
  if (r < 0 || r > n) throw Error("uniform matroid needs 0 <= r <= n");
}

UniformMatroid::UniformMatroid(int r, std::vector<std::string> elements)
    : Matroid(std::move(elements)), r_(r) {
  if (r < 0 || r > size()) throw Error("uniform matroid needs 0 <= r <= n");
}

bool UniformMatroid::independent(Mask x) const { return popcount(x) <= r_; }

LinearMatroid::LinearMatroid(PrimeFieldMatrix a)
    : Matroid(a.col_labels()), matrix_(std::move(a)) {
  for (const std::string& label : elements())
    col_of_bit_.push_back(matrix_.col_index(label));
}

bool LinearMatroid::independent(Mask x) const {
  // Column elimination over the selected columns.
  int p = matrix_.p();
  int k = popcount(x);
  if (k == 0) return true;
  if (k > matrix_.rows()) return false;
  std::vector<std::vector<std::uint8_t>> cols;
  for (int i = 0; i < size(); ++i) {
    if (!(x & (Mask{1} << i))) continue;
    std::vector<std::uint8_t> col(matrix_.rows());
    for (int r = 0; r < matrix_.rows(); ++r)
      col[r] = matrix_.at(r, col_of_bit_[i]);
    cols.push_back(std::move(col));
  }
  int rows = matrix_.rows();
  std::vector<bool> used(rows, false);
  for (size_t c = 0; c < cols.size(); ++c) {
    int pivot = -1;
    for (int r = 0; r < rows; ++r) {
      if (!used[r] && cols[c][r] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;  // column dependent on earlier ones
    used[pivot] = true;
    std::uint8_t inv = gf_inv(p, cols[c][pivot]);
    for (size_t o = c + 1; o < cols.size(); ++o) {
      std::uint8_t factor = gf_mul(p, cols[o][pivot], inv);
      if (factor == 0) continue;
      for (int r = 0; r < rows; ++r)
        cols[o][r] = gf_sub(p, cols[o][r], gf_mul(p, factor, cols[c][r]));
    }
  }
  return true;
}

namespace {

class MinorMatroid : public Matroid {
 public:
  MinorMatroid(MatroidPtr base, std::vector<std::string> elements,
               Mask contracted)
      : Matroid(std::move(elements)),
        base_(std::move(base)),
        contracted_(contracted) {
    for (const std::string& label : this->elements())
      bit_in_base_.push_back(base_->index_of(label));
    contracted_rank_ = base_->rank(contracted_);
  }

  bool independent(Mask x) const override {
    Mask base_x = contracted_;
    int k = 0;
    for (int i = 0; i < size(); ++i) {
      if (x & (Mask{1} << i)) {
        base_x |= Mask{1} << bit_in_base_[i];
        ++k;
      }
    }
    return base_->rank(base_x) - contracted_rank_ == k;
  }

 private:
  MatroidPtr base_;
  Mask contracted_;
  int contracted_rank_;
  std::vector<int> bit_in_base_;
};

}  // namespace

MatroidPtr minor(MatroidPtr m, const std::set<std::string>& deleted,
                 const std::set<std::string>& contracted) {
  for (const std::string& l : deleted)
    if (contracted.count(l))
      throw Error("minor: element '" + l + "' both deleted and contracted");
  Mask cmask = m->mask_of(contracted);
  Mask dmask = m->mask_of(deleted);
  (void)dmask;
  std::vector<std::string> remaining;
  for (const std::string& l : m->elements())
    if (!deleted.count(l) && !contracted.count(l)) remaining.push_back(l);
  return std::make_shared<MinorMatroid>(std::move(m), std::move(remaining),
                                        cmask);
}

MatroidPtr restriction(MatroidPtr m, const std::set<std::string>& keep) {
  std::set<std::string> del;
  for (const std::string& l : m->elements())
    if (!keep.count(l)) del.insert(l);
  return minor(std::move(m), del, {});
}

std::shared_ptr<const ExplicitMatroid> vamos() {
  std::vector<std::string> elements = {"a1", "a2", "b1", "b2",
                                       "c1", "c2", "d1", "d2"};
  // Pair masks in sorted element order: a=bits 0,1; b=2,3; c=4,5; d=6,7.
  Mask a = 0b00000011, b = 0b00001100, c = 0b00110000, d = 0b11000000;
  std::vector<Mask> circuit_hyperplanes = {a | b, a | c, a | d, b | c, b | d};
  std::vector<Mask> bases;
  for (Mask x = 0; x < (Mask{1} << 8); ++x) {
    if (popcount(x) != 4) continue;
    if (std::find(circuit_hyperplanes.begin(), circuit_hyperplanes.end(), x) ==
        circuit_hyperplanes.end())
      bases.push_back(x);
  }
  return ExplicitMatroid::from_basis_masks(std::move(elements),
                                           std::move(bases));
}

AxiomReport check_axioms(const std::vector<std::string>& elements,
                         const std::vector<Mask>& family) {
  int n = static_cast<int>(elements.size());
  if (n > kEnumerationCap)
    throw CapError("check_axioms: ground set exceeds the enumeration cap");
  std::vector<bool> in(std::size_t{1} << n, false);
  for (Mask x : family) in[x] = true;

  if (!in[0]) return {false, "empty set is not in the family"};

  for (Mask x : family)
    for (Mask rest = x; rest; rest &= rest - 1)
      if (!in[x & ~(rest & -rest)])
        return {false, "family is not downward closed"};

  // Minimal dependent sets, for the unique-augmentation condition.
  std::vector<Mask> min_dep;
  for (Mask x = 1; x < (Mask{1} << n); ++x) {
    if (in[x]) continue;
    bool minimal = true;
    for (Mask rest = x; rest && minimal; rest &= rest - 1)
      if (!in[x & ~(rest & -rest)]) minimal = false;
    if (minimal) min_dep.push_back(x);
  }

  for (Mask x : family) {
    for (int e = 0; e < n; ++e) {
      Mask bit = Mask{1} << e;
      if (x & bit) continue;
      Mask y = x | bit;
      if (in[y]) continue;
      int count = 0;
      for (Mask c : min_dep)
        if ((c & y) == c) ++count;
      if (count != 1)
        return {false, "augmenting a set by '" + elements[e] + "' leaves " +
                           std::to_string(count) + " minimal dependent sets"};
    }
  }
  return {true, ""};
}

AxiomReport check_axioms(const ExplicitMatroid& m) {
  require_enumerable(m, "check_axioms");
  std::vector<Mask> family;
  for (Mask x = 0; x <= m.full_mask(); ++x) {
    if (m.independent(x)) family.push_back(x);
    if (x == m.full_mask()) break;
  }
  return check_axioms(m.elements(), family);
}

}  // namespace qgm
