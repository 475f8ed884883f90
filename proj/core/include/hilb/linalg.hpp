#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hilb/errors.hpp"
#include "hilb/field.hpp"

namespace hilb {

/// Sparse coordinate vector: (index, coefficient) pairs, ascending indices,
/// no explicit zeros.
template <class K>
using SparseVec = std::vector<std::pair<std::int32_t, typename K::Elem>>;

template <class K>
SparseVec<K> sparse_axpy(const K& F, const SparseVec<K>& a,
                         const typename K::Elem& c, const SparseVec<K>& b) {
  SparseVec<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      auto v = F.mul(c, b[j].second);
      if (!F.is_zero(v)) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      auto v = F.add(a[i].second, F.mul(c, b[j].second));
      if (!F.is_zero(v)) out.emplace_back(a[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

/// A linear operator given by its columns (images of the unit vectors).
template <class K>
struct LinOp {
  int n = 0;  // ambient dimension (square operators throughout)
  std::vector<SparseVec<K>> cols;

  static LinOp zero(int n) { return LinOp{n, std::vector<SparseVec<K>>(n)}; }

  SparseVec<K> apply(const K& F, const SparseVec<K>& v) const {
    std::map<std::int32_t, typename K::Elem> acc;
    for (auto& [j, c] : v)
      for (auto& [i, a] : cols[j]) {
        auto it = acc.find(i);
        if (it == acc.end())
          acc.emplace(i, F.mul(c, a));
        else {
          it->second = F.add(it->second, F.mul(c, a));
          if (F.is_zero(it->second)) acc.erase(it);
        }
      }
    return SparseVec<K>(acc.begin(), acc.end());
  }

  /// this + c * other.
  LinOp plus(const K& F, const typename K::Elem& c, const LinOp& other) const {
    LinOp r;
    r.n = n;
    r.cols.resize(n);
    for (int j = 0; j < n; ++j) r.cols[j] = sparse_axpy(F, cols[j], c, other.cols[j]);
    return r;
  }

  LinOp compose(const K& F, const LinOp& inner) const {
    LinOp r;
    r.n = n;
    r.cols.resize(n);
    for (int j = 0; j < n; ++j) r.cols[j] = apply(F, inner.cols[j]);
    return r;
  }
};

/// A subspace of K^ambient held as a canonical reduced-row-echelon basis:
/// rows sorted by pivot, pivot coefficient 1, pivot coordinate eliminated
/// from every other row.  Equality of subspaces is row-list equality.
template <class K>
class Subspace {
 public:
  Subspace(const K& F, int ambient) : F_(F), ambient_(ambient) {}

  static Subspace zero(const K& F, int ambient) { return Subspace(F, ambient); }

  static Subspace full(const K& F, int ambient) {
    Subspace s(F, ambient);
    for (int i = 0; i < ambient; ++i)
      s.rows_.push_back({{i, F.one()}});
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec<K>>& rows() const { return rows_; }
  const K& field() const { return F_; }

  /// Residual of v after eliminating every pivot coordinate.
  SparseVec<K> reduce(SparseVec<K> v) const {
    std::size_t i = 0;
    while (i < v.size()) {
      int r = row_with_pivot(v[i].first);
      if (r < 0) {
        ++i;
        continue;
      }
      v = sparse_axpy(F_, v, F_.neg(v[i].second), rows_[r]);
      // coordinates below the eliminated pivot are untouched, keep position
    }
    return v;
  }

  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const SparseVec<K>& v) {
    SparseVec<K> r = reduce(v);
    if (r.empty()) return false;
    auto inv = F_.inv(r.front().second);
    for (auto& [i, c] : r) c = F_.mul(inv, c);
    int pivot = r.front().first;
    for (auto& row : rows_) {
      auto it = std::lower_bound(
          row.begin(), row.end(), pivot,
          [](const auto& p, int x) { return p.first < x; });
      if (it != row.end() && it->first == pivot)
        row = sparse_axpy(F_, row, F_.neg(it->second), r);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const SparseVec<K>& a, int x) {
                                  return a.front().first < x;
                                });
    rows_.insert(pos, std::move(r));
    return true;
  }

  std::vector<int> pivots() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (auto& r : rows_) p.push_back(r.front().first);
    return p;
  }

  /// Coordinates that are not pivots, ascending: a basis of the quotient.
  std::vector<int> complement_coords() const {
    std::vector<int> out;
    auto p = pivots();
    std::size_t k = 0;
    for (int i = 0; i < ambient_; ++i) {
      if (k < p.size() && p[k] == i)
        ++k;
      else
        out.push_back(i);
    }
    return out;
  }

  bool operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || rows_.size() != o.rows_.size()) return false;
    return rows_ == o.rows_;
  }

 private:
  int row_with_pivot(int c) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), c,
                               [](const SparseVec<K>& a, int x) {
                                 return a.front().first < x;
                               });
    if (it == rows_.end() || it->front().first != c) return -1;
    return static_cast<int>(it - rows_.begin());
  }

  K F_;
  int ambient_;
  std::vector<SparseVec<K>> rows_;
};

/// Reduced row echelon form of an arbitrary row list; returns the canonical
/// rows and the rank.
template <class K>
std::pair<std::vector<SparseVec<K>>, int> rref(const K& F, int ambient,
                                               const std::vector<SparseVec<K>>& rows) {
  Subspace<K> s(F, ambient);
  for (auto& r : rows) s.insert(r);
  return {s.rows(), s.dim()};
}

/// Kernel of the linear conditions `rows` (each row is one functional).
template <class K>
Subspace<K> kernel_from_constraints(const K& F, int ambient,
                                    const std::vector<SparseVec<K>>& rows) {
  Subspace<K> c(F, ambient);
  for (auto& r : rows) c.insert(r);
  Subspace<K> ker(F, ambient);
  auto free_coords = c.complement_coords();
  for (int f : free_coords) {
    SparseVec<K> v{{f, F.one()}};
    for (auto& row : c.rows()) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& p, int x) { return p.first < x; });
      if (it != row.end() && it->first == f)
        v = sparse_axpy(F, v, F.neg(it->second), {{row.front().first, F.one()}});
    }
    std::sort(v.begin(), v.end());
    ker.insert(v);
  }
  return ker;
}

template <class K>
Subspace<K> kernel(const K& F, const LinOp<K>& op) {
  // M v = 0 as row constraints: transpose the column-sparse operator.
  std::map<std::int32_t, SparseVec<K>> rows;
  for (int j = 0; j < op.n; ++j)
    for (auto& [i, c] : op.cols[j]) rows[i].emplace_back(j, c);
  std::vector<SparseVec<K>> rr;
  rr.reserve(rows.size());
  for (auto& [i, r] : rows) rr.push_back(std::move(r));
  return kernel_from_constraints(F, op.n, rr);
}

namespace detail {
/// Residuals of op's columns mod W, transposed into constraint rows over the
/// domain: v is in the preimage of W iff it kills every row.
template <class K>
std::vector<SparseVec<K>> preimage_constraints(const K&, const LinOp<K>& op,
                                               const Subspace<K>& W) {
  std::map<std::int32_t, SparseVec<K>> rows;
  for (int j = 0; j < op.n; ++j) {
    SparseVec<K> r = W.reduce(op.cols[j]);
    for (auto& [i, c] : r) rows[i].emplace_back(j, c);
  }
  std::vector<SparseVec<K>> rr;
  rr.reserve(rows.size());
  for (auto& [i, r] : rows) rr.push_back(std::move(r));
  return rr;
}
}  // namespace detail

/// Largest subspace X with op(X) contained in W.
template <class K>
Subspace<K> preimage(const K& F, const LinOp<K>& op, const Subspace<K>& W) {
  if (op.n != W.ambient()) throw DimensionMismatch("preimage: ambient mismatch");
  return kernel_from_constraints(F, op.n, detail::preimage_constraints(F, op, W));
}

/// dim of preimage(op, W) without materializing a basis.
template <class K>
int preimage_dim(const K& F, const LinOp<K>& op, const Subspace<K>& W) {
  if (op.n != W.ambient()) throw DimensionMismatch("preimage_dim: ambient mismatch");
  auto rows = detail::preimage_constraints(F, op, W);
  Subspace<K> c(F, op.n);
  for (auto& r : rows) c.insert(r);
  return op.n - c.dim();
}

template <class K>
Subspace<K> sum(const Subspace<K>& U, const Subspace<K>& V) {
  if (U.ambient() != V.ambient()) throw DimensionMismatch("sum: ambient mismatch");
  Subspace<K> s = U;
  for (auto& r : V.rows()) s.insert(r);
  return s;
}

/// Computed via a kernel so that dim U + dim V = dim sum + dim intersection
/// holds by construction of the parametrization.
template <class K>
Subspace<K> intersect(const K& F, const Subspace<K>& U, const Subspace<K>& V) {
  if (U.ambient() != V.ambient()) throw DimensionMismatch("intersect: ambient mismatch");
  const Subspace<K>& small = U.dim() <= V.dim() ? U : V;
  const Subspace<K>& big = U.dim() <= V.dim() ? V : U;
  std::map<std::int32_t, SparseVec<K>> rows;
  int k = 0;
  for (auto& u : small.rows()) {
    SparseVec<K> r = big.reduce(u);
    for (auto& [i, c] : r) rows[i].emplace_back(k, c);
    ++k;
  }
  std::vector<SparseVec<K>> rr;
  for (auto& [i, r] : rows) rr.push_back(std::move(r));
  Subspace<K> coeffs = kernel_from_constraints(F, small.dim(), rr);
  Subspace<K> out(F, U.ambient());
  for (auto& kv : coeffs.rows()) {
    SparseVec<K> w;
    for (auto& [i, c] : kv) w = sparse_axpy(F, w, c, small.rows()[i]);
    out.insert(w);
  }
  return out;
}

/// dim(U/V) for V a subspace of U (membership checked).
template <class K>
int quotient_dim(const Subspace<K>& U, const Subspace<K>& V) {
  if (U.ambient() != V.ambient())
    throw DimensionMismatch("quotient_dim: ambient mismatch");
  for (auto& r : V.rows())
    if (!U.contains(r)) throw NotASubspace("quotient_dim: V is not inside U");
  return U.dim() - V.dim();
}

}  // namespace hilb
