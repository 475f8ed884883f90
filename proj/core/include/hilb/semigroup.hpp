#pragma once

#include <utility>
#include <vector>

#include "hilb/poly.hpp"

namespace hilb {

/// Combinatorics of a numerical semigroup S = <a_1 < ... < a_k>, gcd 1, and
/// of the local ring k[[t^a : a in S]].  Everything here is computed by
/// integer enumeration; no linear algebra.  This is the independent backend
/// the subspace engine is checked against in dimension one.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<long long> gens);

  const std::vector<long long>& gens() const { return gens_; }
  long long multiplicity() const { return gens_.front(); }

  bool contains(long long s) const;

  /// Largest n with s in (n-fold generator sumset) + S; requires s in S.
  int order(long long s) const;

  /// Largest integer not in S (-1 when 1 is a generator).
  long long frobenius() const { return frobenius_; }

  std::vector<long long> minimal_generators() const;

  /// H(A, n) = #{ s in S : order(s) = n }.
  long long hilbert(int n) const;

  /// rho_n = l(m^{n+1} / x m^n) for x = t^multiplicity.
  long long rho(int n) const;
  std::vector<long long> rho_table(int upto) const;

  /// Smallest r with m^{r+1} = x m^r (first vanishing rho; the tail stays 0).
  int reduction_number() const;

  /// h-numerator [1, rho_0-rho_1, rho_1-rho_2, ...] of the Hilbert series.
  std::vector<long long> h_numerator() const;

  /// e_0 = multiplicity; e_i = sum_j C(j, i-1) rho_j for i >= 1.
  std::vector<long long> hilbert_coefficients(int upto) const;

  /// Semigroup elements with order(s) < N, sorted by (order, value): the
  /// monomial basis of A/m^N.
  std::vector<std::pair<long long, int>> truncation_basis(int N) const;

  /// One decomposition of s into generator indices (empty for s = 0).
  std::vector<int> decompose(long long s) const;

  /// Binomial relations x^u - x^v of the defining toric ideal, complete for
  /// all monomials of total degree <= degree_cap.
  std::vector<IPoly> toric_relations(int degree_cap) const;

 private:
  void ensure_order_horizon(int n) const;

  std::vector<long long> gens_;
  long long frobenius_ = -1;
  std::vector<char> member_;                       // membership on [0, horizon)
  mutable std::vector<std::vector<char>> layers_;  // layers_[n][s] : s in nE+S
  mutable long long horizon_ = 0;
};

}  // namespace hilb
