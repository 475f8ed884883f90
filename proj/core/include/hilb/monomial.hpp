#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hilb/errors.hpp"

namespace hilb {

/// Hard cap on polynomial-ring variables; enough for every presentation the
/// toolkit accepts (extensions included).
inline constexpr int kMaxVars = 8;

/// An exponent vector with cached total degree.  The number of variables in
/// play is tracked by the surrounding ring, not the monomial.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }

  static Monomial var(int i) {
    Monomial m;
    m.e[i] = 1;
    m.deg = 1;
    return m;
  }

  int exp(int i) const { return e[i]; }
  int degree() const { return deg; }
  bool is_one() const { return deg == 0; }

  Monomial mul(const Monomial& o) const {
    Monomial r;
    int d = deg + o.deg;
    if (d > 255) throw ResourceLimit("monomial degree overflow");
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  /// Quotient o / this; caller guarantees divisibility.
  Monomial divide_into(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
    r.deg = static_cast<std::uint16_t>(o.deg - deg);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
      d += r.e[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < kMaxVars; ++i) k = (k << 8) | e[i];
    return k;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Graded reverse-lexicographic order: degree first, ties broken so that the
/// monomial whose last differing exponent is larger compares smaller.
inline bool grevlex_less(const Monomial& a, const Monomial& b, int nvars) {
  if (a.deg != b.deg) return a.deg < b.deg;
  for (int i = nvars - 1; i >= 0; --i) {
    int d = int(a.e[i]) - int(b.e[i]);
    if (d != 0) return d > 0;
  }
  return false;
}

/// Calls fn(m) for every monomial in `nvars` variables of total degree `d`.
void for_each_monomial_of_degree(int nvars, int d,
                                 const std::function<void(const Monomial&)>& fn);

/// All monomials of degree < bound, sorted grevlex-ascending.
std::vector<Monomial> monomials_below(int nvars, int bound);

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace hilb
