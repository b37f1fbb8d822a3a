#include "oabkit/permgroups.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "oabkit/errors.h"

namespace oabkit {
namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p.images()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw PreconditionError("not a permutation: " + ToString());
    seen[v] = true;
  }
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::FromOneIndexed(std::span<const long> images) {
  std::vector<std::uint32_t> zero_based;
  zero_based.reserve(images.size());
  for (long v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size())
      throw PreconditionError("permutation image out of range: " +
                              std::to_string(v));
    zero_based.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return Permutation(std::move(zero_based));
}

std::vector<long> Permutation::OneIndexed() const {
  std::vector<long> out;
  out.reserve(images_.size());
  for (auto v : images_) out.push_back(static_cast<long>(v) + 1);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree())
    throw DimensionError("composing permutations of different degree");
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[i] = images_[other(i)];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::Inverse() const {
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    images[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::Doubled() const { return Concatenate(*this, *this); }

RowVector Permutation::Apply(std::span<const Integer> x) const {
  if (x.size() != degree())
    throw DimensionError("vector length does not match permutation degree");
  RowVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[images_[i]] = x[i];
  return y;
}

IntMatrix Permutation::Matrix() const {
  IntMatrix p(degree(), degree());
  for (std::size_t i = 0; i < degree(); ++i) p(i, images_[i]) = 1;
  return p;
}

std::string Permutation::ToString() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

Permutation Concatenate(const Permutation& a, const Permutation& b) {
  std::vector<std::uint32_t> images = a.images();
  const auto shift = static_cast<std::uint32_t>(a.degree());
  for (auto v : b.images()) images.push_back(v + shift);
  return Permutation(std::move(images));
}

std::vector<std::string> PermGroup::generator_names() const {
  std::vector<std::string> names;
  for (const auto& [name, perm] : generators_) names.push_back(name);
  return names;
}

bool PermGroup::Contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

const Permutation& PermGroup::generator(const std::string& name) const {
  for (const auto& [n, perm] : generators_)
    if (n == name) return perm;
  throw PreconditionError("unknown generator: " + name);
}

std::vector<std::vector<std::size_t>> PermGroup::Orbits() const {
  std::vector<std::size_t> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [name, g] : generators_)
    for (std::size_t i = 0; i < degree_; ++i) {
      std::size_t a = find(i), b = find(g(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < degree_; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> orbits;
  for (auto& [root, members] : by_root) orbits.push_back(std::move(members));
  return orbits;
}

PermGroup Close(std::vector<NamedPermutation> generators, std::size_t degree,
                std::size_t cap) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].second.degree() != degree)
      throw PreconditionError("generator " + generators[k].first +
                              " has wrong degree");
    for (std::size_t l = 0; l < k; ++l)
      if (generators[l].first == generators[k].first)
        throw PreconditionError("duplicate generator name " +
                                generators[k].first);
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::Identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& [name, g] : generators) {
      Permutation next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw LimitError("group order exceeds cap of " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  return group;
}

bool IsInvariant(const IntMatrix& m, const PermGroup& group) {
  if (!m.is_square() || m.rows() != group.degree())
    throw DimensionError("matrix size does not match group degree");
  for (const auto& [name, g] : group.generators())
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != m(g(i), g(j))) return false;
  return true;
}

namespace {

struct IndexSignature {
  std::vector<Integer> a_row, a_col, b_row, b_col;
  Integer a_diag, b_diag;

  bool operator==(const IndexSignature& o) const {
    return a_diag == o.a_diag && b_diag == o.b_diag && a_row == o.a_row &&
           a_col == o.a_col && b_row == o.b_row && b_col == o.b_col;
  }
};

IndexSignature SignatureOf(const IntMatrix& a, const IntMatrix& b,
                           std::size_t i) {
  IndexSignature s{a.row(i), a.column(i), b.row(i), b.column(i), a(i, i),
                   b(i, i)};
  std::sort(s.a_row.begin(), s.a_row.end());
  std::sort(s.a_col.begin(), s.a_col.end());
  std::sort(s.b_row.begin(), s.b_row.end());
  std::sort(s.b_col.begin(), s.b_col.end());
  return s;
}

class SymmetrySearch {
 public:
  SymmetrySearch(const IntMatrix& a, const IntMatrix& b, std::size_t cap)
      : a_(a), b_(b), n_(a.rows()), cap_(cap), image_(n_), used_(n_, false) {
    std::vector<IndexSignature> sig;
    for (std::size_t i = 0; i < n_; ++i) sig.push_back(SignatureOf(a, b, i));
    candidates_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t c = 0; c < n_; ++c)
        if (sig[i] == sig[c]) candidates_[i].push_back(c);
  }

  std::vector<Permutation> Run() {
    Extend(0);
    return std::move(found_);
  }

 private:
  bool Consistent(std::size_t i, std::size_t c) const {
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t gj = image_[j];
      if (a_(i, j) != a_(c, gj) || a_(j, i) != a_(gj, c)) return false;
      if (b_(i, j) != b_(c, gj) || b_(j, i) != b_(gj, c)) return false;
    }
    return true;
  }

  void Extend(std::size_t i) {
    if (i == n_) {
      if (found_.size() >= cap_)
        throw LimitError("symmetry group exceeds cap of " +
                         std::to_string(cap_));
      found_.emplace_back(image_);
      return;
    }
    for (std::size_t c : candidates_[i]) {
      if (used_[c] || !Consistent(i, c)) continue;
      used_[c] = true;
      image_[i] = static_cast<std::uint32_t>(c);
      Extend(i + 1);
      used_[c] = false;
    }
  }

  const IntMatrix& a_;
  const IntMatrix& b_;
  std::size_t n_;
  std::size_t cap_;
  std::vector<std::uint32_t> image_;
  std::vector<bool> used_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<Permutation> found_;
};

}  // namespace

PermGroup SymmetryGroup(const IntMatrix& a, const IntMatrix& b,
                        const SymmetryOptions& options) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("symmetry group needs square matrices of equal size");
  const std::size_t n = a.rows();
  if (n > options.max_degree)
    throw LimitError("symmetry search limited to degree " +
                     std::to_string(options.max_degree));
  std::vector<Permutation> elements = SymmetrySearch(a, b, options.cap).Run();
  // Sorted by construction: indices are assigned in order, candidates
  // ascending.
  std::vector<NamedPermutation> generators;
  PermGroup closure = Close({}, n, options.cap);
  for (const auto& p : elements) {
    if (closure.Contains(p)) continue;
    generators.emplace_back("g" + std::to_string(generators.size() + 1), p);
    closure = Close(generators, n, options.cap);
    if (closure.order() == elements.size()) break;
  }
  return closure;
}

std::vector<RowVector> OrbitSums(const PermGroup& group) {
  std::vector<RowVector> sums;
  for (const auto& orbit : group.Orbits()) {
    RowVector v = ZeroVector(group.degree());
    for (std::size_t i : orbit) v[i] = 1;
    sums.push_back(std::move(v));
  }
  return sums;
}

const IntMatrix& InducedAction::matrix(const std::string& name) const {
  for (const auto& [n, m] : matrices)
    if (n == name) return m;
  throw PreconditionError("no action matrix for generator " + name);
}

IntMatrix ReduceColumns(const IntMatrix& m, std::span<const Integer> orders) {
  if (orders.size() != m.cols())
    throw DimensionError("order list does not match matrix columns");
  IntMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = ReduceMod(m(i, j), orders[j]);
  return r;
}

bool CongruentModOrders(const IntMatrix& a, const IntMatrix& b,
                        std::span<const Integer> orders) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return ReduceColumns(a, orders) == ReduceColumns(b, orders);
}

IntMatrix CokernelActionMatrix(const CokerPresentation& coker,
                               const Permutation& g) {
  const std::size_t m = coker.num_generators();
  IntMatrix action(m, m);
  for (std::size_t k = 0; k < m; ++k)
    action.set_row(k, coker.Coordinates(g.Apply(coker.Section(k))));
  return action;
}

IntMatrix KernelActionMatrix(const std::vector<RowVector>& basis,
                             const Permutation& g) {
  const std::size_t k = basis.size();
  IntMatrix action(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    auto coefficients = SolveInLattice(basis, g.Apply(basis[r]));
    if (!coefficients)
      throw PreconditionError("kernel lattice is not stable under " +
                              g.ToString());
    action.set_row(r, *coefficients);
  }
  return action;
}

InducedAction InducedCokernelAction(const IntMatrix& m, const PermGroup& group) {
  if (!IsInvariant(m, group))
    throw PreconditionError("matrix is not invariant under the group");
  CokerPresentation coker = Cokernel(m);
  InducedAction action;
  action.orders = coker.orders();
  for (const auto& [name, g] : group.generators())
    action.matrices.emplace_back(name, CokernelActionMatrix(coker, g));
  return action;
}

InducedAction InducedKernelAction(const IntMatrix& m, const PermGroup& group) {
  if (!IsInvariant(m, group))
    throw PreconditionError("matrix is not invariant under the group");
  std::vector<RowVector> basis = KernelBasis(m);
  InducedAction action;
  action.orders.assign(basis.size(), Integer(0));
  for (const auto& [name, g] : group.generators())
    action.matrices.emplace_back(name, KernelActionMatrix(basis, g));
  return action;
}

bool IsHomomorphism(const InducedAction& action, const PermGroup& group) {
  const std::size_t m = action.orders.size();
  std::vector<std::pair<const Permutation*, const IntMatrix*>> gens;
  for (const auto& [name, g] : group.generators())
    gens.emplace_back(&g, &action.matrix(name));
  for (const auto& [g, mat] : gens)
    if (mat->rows() != m || mat->cols() != m) return false;

  std::unordered_map<Permutation, IntMatrix, PermutationHash> image;
  std::deque<Permutation> queue;
  Permutation id = Permutation::Identity(group.degree());
  image.emplace(id, IntMatrix::Identity(m));
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation e = std::move(queue.front());
    queue.pop_front();
    const IntMatrix me = image.at(e);
    for (const auto& [g, mg] : gens) {
      // Acting by e then g: c |-> c * M_e * M_g.
      IntMatrix composed = ReduceColumns(me * *mg, action.orders);
      Permutation ge = *g * e;
      auto it = image.find(ge);
      if (it == image.end()) {
        image.emplace(ge, std::move(composed));
        queue.push_back(std::move(ge));
      } else if (!CongruentModOrders(it->second, composed, action.orders)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace oabkit
