#include "oabkit/exactla.h"

#include <algorithm>

#include "oabkit/errors.h"

namespace oabkit {
namespace {

// Quotient rounded toward zero, so |a - q*b| < |b|.
Integer TruncatedQuotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool Divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Smallest |S(i,j)| over the trailing submatrix starting at (t,t), first in
// row-major order on ties.
bool FindSubmatrixPivot(const IntMatrix& s, std::size_t t, std::size_t* pi,
                        std::size_t* pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Integer a = ::abs(s(i, j));
      if (!found || a < best) {
        best = a;
        *pi = i;
        *pj = j;
        found = true;
      }
    }
  return found;
}

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : s_(m),
        u_(IntMatrix::Identity(m.rows())),
        v_(IntMatrix::Identity(m.cols())),
        v_inv_(IntMatrix::Identity(m.cols())) {}

  SmithForm Run() {
    const std::size_t limit = std::min(s_.rows(), s_.cols());
    std::size_t rank = 0;
    for (std::size_t t = 0; t < limit; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!FindSubmatrixPivot(s_, t, &pi, &pj)) break;
      SwapRows(t, pi);
      SwapColumns(t, pj);
      ReduceCross(t);
      if (s_(t, t) < 0) {
        s_.negate_row(t);
        u_.negate_row(t);
      }
      rank = t + 1;
    }
    SmithForm form;
    form.invariant_factors.reserve(limit);
    for (std::size_t t = 0; t < limit; ++t)
      form.invariant_factors.push_back(s_(t, t));
    form.rank = rank;
    form.U = std::move(u_);
    form.V = std::move(v_);
    form.V_inverse = std::move(v_inv_);
    form.S = std::move(s_);
    return form;
  }

 private:
  void SwapRows(std::size_t a, std::size_t b) {
    s_.swap_rows(a, b);
    u_.swap_rows(a, b);
  }
  void SwapColumns(std::size_t a, std::size_t b) {
    s_.swap_columns(a, b);
    v_.swap_columns(a, b);
    v_inv_.swap_rows(a, b);
  }
  // row[i] += f * row[t]
  void AddRow(std::size_t i, std::size_t t, const Integer& f) {
    s_.add_row_multiple(i, t, f);
    u_.add_row_multiple(i, t, f);
  }
  // col[j] += f * col[t]
  void AddColumn(std::size_t j, std::size_t t, const Integer& f) {
    s_.add_column_multiple(j, t, f);
    v_.add_column_multiple(j, t, f);
    v_inv_.add_row_multiple(t, j, -f);
  }

  // Clears row t and column t outside the pivot and makes the pivot divide
  // every entry of the trailing submatrix.
  void ReduceCross(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s_.rows(); ++i) {
        if (s_(i, t) == 0) continue;
        AddRow(i, t, -TruncatedQuotient(s_(i, t), s_(t, t)));
        if (s_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (s_(t, j) == 0) continue;
        AddColumn(j, t, -TruncatedQuotient(s_(t, j), s_(t, t)));
        if (s_(t, j) != 0) clean = false;
      }
      if (!clean) {
        MoveSmallestCrossEntryToPivot(t);
        continue;
      }
      bool fixed_divisibility = false;
      for (std::size_t i = t + 1; i < s_.rows() && !fixed_divisibility; ++i)
        for (std::size_t j = t + 1; j < s_.cols(); ++j) {
          if (!Divides(s_(t, t), s_(i, j))) {
            AddRow(t, i, Integer(1));
            fixed_divisibility = true;
            break;
          }
        }
      if (!fixed_divisibility) return;
    }
  }

  void MoveSmallestCrossEntryToPivot(std::size_t t) {
    Integer best = ::abs(s_(t, t));
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      if (s_(i, t) != 0 && ::abs(s_(i, t)) < best) {
        best = ::abs(s_(i, t));
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < s_.cols(); ++j) {
      if (s_(t, j) != 0 && ::abs(s_(t, j)) < best) {
        best = ::abs(s_(t, j));
        bi = t;
        bj = j;
      }
    }
    SwapRows(t, bi);
    SwapColumns(t, bj);
  }

  IntMatrix s_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix v_inv_;
};

}  // namespace

SmithForm SmithNormalForm(const IntMatrix& m) {
  if (m.empty()) throw PreconditionError("Smith normal form of empty matrix");
  return SmithReducer(m).Run();
}

std::size_t Rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  return SmithNormalForm(m).rank;
}

Integer Determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(),
                     previous.get_mpz_t());
      }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IsUnimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  return ::abs(Determinant(m)) == 1;
}

std::vector<RowVector> HermiteNormalForm(std::vector<RowVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw DimensionError("ragged row list");
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < n && pivot_row < rows.size(); ++c) {
    // Euclid on column c among rows pivot_row.. until one nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || ::abs(rows[i][c]) < ::abs(rows[best][c]))
          best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool others_zero = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = TruncatedQuotient(rows[i][c], rows[pivot_row][c]);
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[pivot_row][j];
        if (rows[i][c] != 0) others_zero = false;
      }
      if (others_zero) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& v : rows[pivot_row]) v = -v;
    const Integer& p = rows[pivot_row][c];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<RowVector> KernelBasis(const IntMatrix& m) {
  if (m.rows() == 0) return {};
  if (m.cols() == 0) {
    std::vector<RowVector> basis;
    for (std::size_t i = 0; i < m.rows(); ++i)
      basis.push_back(UnitVector(m.rows(), i));
    return basis;
  }
  SmithForm form = SmithNormalForm(m);
  std::vector<RowVector> basis;
  for (std::size_t i = form.rank; i < m.rows(); ++i)
    basis.push_back(form.U.row(i));
  return HermiteNormalForm(std::move(basis));
}

Integer ReduceMod(const Integer& x, const Integer& modulus) {
  if (modulus == 0) return x;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  if (r < 0) r += ::abs(modulus);
  return r;
}

CokerPresentation::CokerPresentation(std::vector<Integer> factors,
                                     IntMatrix to_coordinates,
                                     IntMatrix from_coordinates)
    : factors_(std::move(factors)),
      to_coordinates_(std::move(to_coordinates)),
      from_coordinates_(std::move(from_coordinates)) {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i] != 1) generators_.push_back(i);
}

std::vector<Integer> CokerPresentation::orders() const {
  std::vector<Integer> out;
  for (std::size_t i : generators_) out.push_back(factors_[i]);
  return out;
}

std::size_t CokerPresentation::free_rank() const {
  return static_cast<std::size_t>(
      std::count(factors_.begin(), factors_.end(), Integer(0)));
}

Integer CokerPresentation::torsion_order() const {
  Integer order = 1;
  for (const auto& d : factors_)
    if (d > 1) order *= d;
  return order;
}

RowVector CokerPresentation::Coordinates(std::span<const Integer> x) const {
  RowVector full = Multiply(x, to_coordinates_);
  RowVector out;
  out.reserve(generators_.size());
  for (std::size_t i : generators_) out.push_back(ReduceMod(full[i], factors_[i]));
  return out;
}

RowVector CokerPresentation::Section(std::size_t k) const {
  return from_coordinates_.row(generators_.at(k));
}

bool CokerPresentation::SameClass(std::span<const Integer> a,
                                  std::span<const Integer> b) const {
  return Coordinates(a) == Coordinates(b);
}

bool CokerPresentation::IsZeroClass(std::span<const Integer> x) const {
  return IsZero(Coordinates(x));
}

IntMatrix CokerPresentation::ProjectionMatrix() const {
  const std::size_t n = ambient_dimension();
  IntMatrix p(n, generators_.size());
  for (std::size_t i = 0; i < n; ++i) p.set_row(i, Coordinates(UnitVector(n, i)));
  return p;
}

CokerPresentation Cokernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0 || n == 0) {
    return CokerPresentation(std::vector<Integer>(n, Integer(0)),
                             IntMatrix::Identity(n), IntMatrix::Identity(n));
  }
  SmithForm form = SmithNormalForm(m);
  std::vector<Integer> factors = form.invariant_factors;
  factors.resize(n, Integer(0));
  return CokerPresentation(std::move(factors), std::move(form.V),
                           std::move(form.V_inverse));
}

std::optional<RowVector> SolveInLattice(const IntMatrix& rows,
                                        std::span<const Integer> target) {
  if (target.size() != rows.cols())
    throw DimensionError("target length does not match lattice vectors");
  if (rows.rows() == 0 || rows.cols() == 0) {
    if (!IsZero(target)) return std::nullopt;
    return ZeroVector(rows.rows());
  }
  // x R = t  <=>  (x U^{-1}) S = t V, with z = x U^{-1}.
  SmithForm form = SmithNormalForm(rows);
  RowVector w = Multiply(target, form.V);
  RowVector z = ZeroVector(rows.rows());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < form.rank) {
      const Integer& s = form.invariant_factors[i];
      if (!Divides(s, w[i])) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), w[i].get_mpz_t(), s.get_mpz_t());
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return Multiply(z, form.U);
}

std::optional<RowVector> SolveInLattice(const std::vector<RowVector>& rows,
                                        std::span<const Integer> target) {
  for (const auto& r : rows)
    if (r.size() != target.size())
      throw DimensionError("lattice vector length mismatch");
  return SolveInLattice(IntMatrix::FromRows(rows, target.size()), target);
}

AbelianGroupType AbelianType(std::span<const Integer> orders) {
  AbelianGroupType type;
  if (orders.empty()) return type;
  std::vector<Integer> magnitudes;
  for (const auto& d : orders) magnitudes.push_back(::abs(d));
  SmithForm form = SmithNormalForm(IntMatrix::Diagonal(magnitudes));
  for (const auto& d : form.invariant_factors) {
    if (d == 0)
      ++type.free_rank;
    else if (d > 1)
      type.torsion.push_back(d);
  }
  return type;
}

AbelianGroupType Direct(const AbelianGroupType& a, const AbelianGroupType& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  orders.resize(orders.size() + a.free_rank + b.free_rank, Integer(0));
  return AbelianType(orders);
}

std::string ToString(const AbelianGroupType& type) {
  if (type.is_trivial()) return "0";
  std::string s;
  for (const auto& d : type.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  for (std::size_t i = 0; i < type.free_rank; ++i) {
    if (!s.empty()) s += " + ";
    s += "Z";
  }
  return s;
}

}  // namespace oabkit
