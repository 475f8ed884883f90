#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilb/field.hpp"
#include "hilb/monomial.hpp"

namespace hilb {

/// Presentation-level polynomial with exact integer coefficients.  Terms are
/// kept sorted grevlex-descending with nonzero coefficients (canonical form).
struct IPoly {
  std::vector<std::pair<Monomial, BigInt>> terms;
  int nvars = 0;

  bool is_zero() const { return terms.empty(); }
  int degree() const;      // max total degree, -1 for 0
  int min_degree() const;  // min total degree, -1 for 0

  void normalize();  // sort, merge, drop zeros

  static IPoly zero(int nvars) { return IPoly{{}, nvars}; }
  static IPoly term(int nvars, const Monomial& m, BigInt c);

  IPoly add(const IPoly& o) const;
  IPoly sub(const IPoly& o) const;
  IPoly mul(const IPoly& o) const;
  IPoly scale(const BigInt& c) const;

  /// Substitute variable `var` by the polynomial `repl` and drop the variable
  /// (every term must have its `var`-exponent reachable by repeated
  /// multiplication).  Used to eliminate a variable along a linear relation.
  IPoly substitute(int var, const IPoly& repl) const;

  std::string str(const std::vector<std::string>& vars) const;
};

/// Engine polynomial over a field K, sorted grevlex-descending (leading term
/// first).  All products are truncated at total degree >= trunc (terms that
/// deep in the maximal-ideal filtration are identically zero in A/m^N).
template <class K>
struct Poly {
  using Elem = typename K::Elem;
  std::vector<std::pair<Monomial, Elem>> terms;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Elem& lc() const { return terms.front().second; }
  int degree() const { return terms.empty() ? -1 : terms.front().first.degree(); }
};

template <class K>
Poly<K> poly_from_ipoly(const K& F, const IPoly& p, int trunc);

/// r = a + c * u * b, truncated at degree `trunc`.
template <class K>
Poly<K> poly_axpy(const K& F, int nvars, const Poly<K>& a,
                  const typename K::Elem& c, const Monomial& u,
                  const Poly<K>& b, int trunc);

template <class K>
Poly<K> poly_monic(const K& F, const Poly<K>& p);

template <class K>
std::string poly_str(const K& F, const Poly<K>& p,
                     const std::vector<std::string>& vars);

}  // namespace hilb
