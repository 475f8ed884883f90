#include "hilb/poly.hpp"

#include <algorithm>
#include <map>

namespace hilb {

void for_each_monomial_of_degree(int nvars, int d,
                                 const std::function<void(const Monomial&)>& fn) {
  Monomial m;
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      m.e[var] = static_cast<std::uint8_t>(rem);
      m.deg = static_cast<std::uint16_t>(d);
      fn(m);
      m.e[var] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      m.e[var] = static_cast<std::uint8_t>(k);
      self(self, var + 1, rem - k);
    }
    m.e[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) fn(Monomial::one());
    return;
  }
  rec(rec, 0, d);
}

std::vector<Monomial> monomials_below(int nvars, int bound) {
  std::vector<Monomial> out;
  for (int d = 0; d < bound; ++d) {
    std::vector<Monomial> layer;
    for_each_monomial_of_degree(nvars, d, [&](const Monomial& m) { layer.push_back(m); });
    std::sort(layer.begin(), layer.end(), [&](const Monomial& a, const Monomial& b) {
      return grevlex_less(a, b, nvars);
    });
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m.e[i] > 1) s += "^" + std::to_string(int(m.e[i]));
  }
  return s;
}

int IPoly::degree() const {
  int d = -1;
  for (auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

int IPoly::min_degree() const {
  int d = -1;
  for (auto& [m, c] : terms)
    if (d < 0 || m.degree() < d) d = m.degree();
  return d;
}

void IPoly::normalize() {
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return grevlex_less(b.first, a.first, nvars);
  });
  std::vector<std::pair<Monomial, BigInt>> out;
  for (auto& [m, c] : terms) {
    if (!out.empty() && out.back().first == m)
      out.back().second += c;
    else
      out.emplace_back(m, c);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms = std::move(out);
}

IPoly IPoly::term(int nvars, const Monomial& m, BigInt c) {
  IPoly p{{}, nvars};
  if (c != 0) p.terms.emplace_back(m, std::move(c));
  return p;
}

IPoly IPoly::add(const IPoly& o) const {
  IPoly r{terms, nvars};
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  r.normalize();
  return r;
}

IPoly IPoly::sub(const IPoly& o) const { return add(o.scale(-1)); }

IPoly IPoly::scale(const BigInt& c) const {
  IPoly r{{}, nvars};
  if (c == 0) return r;
  r.terms.reserve(terms.size());
  for (auto& [m, a] : terms) r.terms.emplace_back(m, a * c);
  return r;
}

IPoly IPoly::mul(const IPoly& o) const {
  IPoly r{{}, nvars};
  for (auto& [m, a] : terms)
    for (auto& [n, b] : o.terms) r.terms.emplace_back(m.mul(n), a * b);
  r.normalize();
  return r;
}

IPoly IPoly::substitute(int var, const IPoly& repl) const {
  IPoly out = IPoly::zero(nvars);
  for (auto& [m, c] : terms) {
    Monomial rest = m;
    int k = rest.e[var];
    rest.e[var] = 0;
    rest.deg = static_cast<std::uint16_t>(rest.deg - k);
    IPoly piece = IPoly::term(nvars, rest, c);
    for (int i = 0; i < k; ++i) piece = piece.mul(repl);
    out = out.add(piece);
  }
  return out;
}

std::string IPoly::str(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : terms) {
    BigInt a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (m.is_one())
      s += a.str();
    else if (a == 1)
      s += monomial_str(m, vars);
    else
      s += a.str() + "*" + monomial_str(m, vars);
  }
  return s;
}

template <class K>
Poly<K> poly_from_ipoly(const K& F, const IPoly& p, int trunc) {
  Poly<K> out;
  for (auto& [m, c] : p.terms) {
    if (m.degree() >= trunc) continue;
    auto e = F.from_bigint(c);
    if (!F.is_zero(e)) out.terms.emplace_back(m, e);
  }
  // IPoly is already sorted descending; dropping terms keeps the order.
  return out;
}

template <class K>
Poly<K> poly_axpy(const K& F, int nvars, const Poly<K>& a,
                  const typename K::Elem& c, const Monomial& u,
                  const Poly<K>& b, int trunc) {
  Poly<K> out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  auto scaled = [&](std::size_t idx) -> std::pair<Monomial, typename K::Elem> {
    return {u.mul(b.terms[idx].first), F.mul(c, b.terms[idx].second)};
  };
  // Skip products that truncate away; both inputs are sorted descending and
  // multiplying by a fixed monomial preserves grevlex order.
  auto skip = [&]() {
    while (j < b.terms.size() && u.degree() + b.terms[j].first.degree() >= trunc) ++j;
  };
  skip();
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j >= b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    auto [bm, bc] = scaled(j);
    if (i >= a.terms.size()) {
      out.terms.emplace_back(bm, bc);
      ++j;
      skip();
      continue;
    }
    const auto& am = a.terms[i].first;
    if (am == bm) {
      auto s = F.add(a.terms[i].second, bc);
      if (!F.is_zero(s)) out.terms.emplace_back(am, s);
      ++i, ++j;
      skip();
    } else if (grevlex_less(bm, am, nvars)) {
      out.terms.push_back(a.terms[i++]);
    } else {
      out.terms.emplace_back(bm, bc);
      ++j;
      skip();
    }
  }
  return out;
}

template <class K>
Poly<K> poly_monic(const K& F, const Poly<K>& p) {
  Poly<K> out = p;
  if (out.is_zero() || F.is_one(out.lc())) return out;
  auto s = F.inv(out.lc());
  for (auto& [m, c] : out.terms) c = F.mul(s, c);
  return out;
}

template <class K>
std::string poly_str(const K& F, const Poly<K>& p,
                     const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto& [m, c] : p.terms) {
    if (!s.empty()) s += " + ";
    s += F.str(c);
    if (!m.is_one()) s += "*" + monomial_str(m, vars);
  }
  return s;
}

template Poly<PrimeField> poly_from_ipoly(const PrimeField&, const IPoly&, int);
template Poly<RationalField> poly_from_ipoly(const RationalField&, const IPoly&, int);
template Poly<PrimeField> poly_axpy(const PrimeField&, int, const Poly<PrimeField>&,
                                    const PrimeField::Elem&, const Monomial&,
                                    const Poly<PrimeField>&, int);
template Poly<RationalField> poly_axpy(const RationalField&, int,
                                       const Poly<RationalField>&,
                                       const RationalField::Elem&, const Monomial&,
                                       const Poly<RationalField>&, int);
template Poly<PrimeField> poly_monic(const PrimeField&, const Poly<PrimeField>&);
template Poly<RationalField> poly_monic(const RationalField&, const Poly<RationalField>&);
template std::string poly_str(const PrimeField&, const Poly<PrimeField>&,
                              const std::vector<std::string>&);
template std::string poly_str(const RationalField&, const Poly<RationalField>&,
                              const std::vector<std::string>&);

}  // namespace hilb
