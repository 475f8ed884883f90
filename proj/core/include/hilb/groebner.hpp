#pragma once

#include <unordered_map>
#include <vector>

#include "hilb/linalg.hpp"
#include "hilb/poly.hpp"

namespace hilb {

/// Groebner basis of I + m^N under grevlex, computed with arithmetic
/// truncated at total degree N (any term of degree >= N is zero in A/m^N, so
/// dropping it is reduction by the implicit degree-N monomial generators).
///
/// Beyond the classical pair loop, completeness against the implicit m^N
/// generators needs one extra closure: for every basis element f and every
/// monomial u with deg(u * lm(f)) == N, the truncation of u * tail(f) must
/// reduce to zero; nonzero remainders join the basis.  Pairs of two
/// monomial generators have zero S-polynomials, and any pair (f, monomial)
/// with a larger lcm is chained through one of these boundary pairs.
template <class K>
class TruncatedGB {
 public:
  TruncatedGB(const K& F, int nvars, int trunc, const std::vector<IPoly>& gens,
              std::size_t universe_cap = 2'000'000);
  TruncatedGB(const K& F, int nvars, int trunc, const std::vector<Poly<K>>& gens,
              std::size_t universe_cap = 2'000'000);

  const K& field() const { return F_; }
  int nvars() const { return nv_; }
  int trunc() const { return N_; }
  const std::vector<Poly<K>>& basis() const { return basis_; }

  /// Standard monomials (grevlex ascending); the basis of A/m^N.
  const std::vector<Monomial>& standard_monomials() const { return std_; }
  int std_index(const Monomial& m) const;

  /// Normal form of a monomial of degree < N in standard-basis coordinates.
  const SparseVec<K>& nf(const Monomial& m) const;
  SparseVec<K> nf_poly(const Poly<K>& p) const;

  /// Re-checks every S-polynomial (including the m^N boundary pairs) against
  /// the final basis; throws CrossCheckFailure on any nonzero remainder.
  void certify(const std::vector<Poly<K>>& original_gens) const;

 private:
  void add_pairs_for(std::size_t idx);
  void drain_pairs();
  bool boundary_pass();
  bool add_poly(Poly<K> p);
  Poly<K> reduce_full(Poly<K> p) const;
  void minimalize();
  void build_tables(std::size_t universe_cap);
  Poly<K> spoly(const Poly<K>& f, const Poly<K>& g) const;

  K F_;
  int nv_;
  int N_;
  std::vector<Poly<K>> basis_;
  struct Pair {
    int deg;
    Monomial lcm;
    std::size_t i, j;
  };
  std::vector<Pair> pairs_;

  std::vector<Monomial> universe_;
  std::unordered_map<std::uint64_t, int> uni_index_;
  std::vector<Monomial> std_;
  std::unordered_map<std::uint64_t, int> std_index_;
  std::vector<SparseVec<K>> nf_;
};

}  // namespace hilb
