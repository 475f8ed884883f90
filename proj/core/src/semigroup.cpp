#include "hilb/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hilb/errors.hpp"

namespace hilb {

NumericalSemigroup::NumericalSemigroup(std::vector<long long> gens)
    : gens_(std::move(gens)) {
  if (gens_.empty()) throw ValidationError("semigroup needs generators");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  long long g = 0;
  for (long long a : gens_) {
    if (a < 1) throw ValidationError("semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw ValidationError("semigroup generators must have gcd 1");

  // Membership DP out past every gap: F < a_min * a_max.
  long long bound = gens_.front() * gens_.back() + gens_.back() + 2;
  member_.assign(static_cast<std::size_t>(bound), 0);
  member_[0] = 1;
  for (long long s = 1; s < bound; ++s)
    for (long long a : gens_) {
      if (a <= s && member_[static_cast<std::size_t>(s - a)]) {
        member_[static_cast<std::size_t>(s)] = 1;
        break;
      }
    }
  for (long long s = bound - 1; s >= 0; --s)
    if (!member_[static_cast<std::size_t>(s)]) {
      frobenius_ = s;
      break;
    }
}

bool NumericalSemigroup::contains(long long s) const {
  if (s < 0) return false;
  if (s >= static_cast<long long>(member_.size())) return true;  // past Frobenius
  return member_[static_cast<std::size_t>(s)] != 0;
}

void NumericalSemigroup::ensure_order_horizon(int n) const {
  // Every s <= horizon gets a correct "in nE+S" bit for layers 0..n.
  long long needed = frobenius_ + (n + 2) * gens_.back() + 2;
  if (horizon_ >= needed && static_cast<int>(layers_.size()) > n) return;
  horizon_ = needed;
  int depth = std::max<int>(n + 1, static_cast<int>(layers_.size()));
  layers_.assign(static_cast<std::size_t>(depth) + 1, {});
  auto& l0 = layers_[0];
  l0.assign(static_cast<std::size_t>(horizon_), 0);
  for (long long s = 0; s < horizon_; ++s)
    l0[static_cast<std::size_t>(s)] = contains(s) ? 1 : 0;
  for (std::size_t k = 1; k < layers_.size(); ++k) {
    auto& lk = layers_[k];
    lk.assign(static_cast<std::size_t>(horizon_), 0);
    const auto& prev = layers_[k - 1];
    for (long long s = 0; s < horizon_; ++s) {
      for (long long a : gens_) {
        if (a <= s && prev[static_cast<std::size_t>(s - a)]) {
          lk[static_cast<std::size_t>(s)] = 1;
          break;
        }
      }
    }
  }
}

int NumericalSemigroup::order(long long s) const {
  if (!contains(s)) throw Error("order: not a semigroup element");
  if (s == 0) return 0;
  int n = 1;
  while (true) {
    ensure_order_horizon(n + 1);
    if (s < horizon_ && !layers_[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(s)])
      return n;
    if (s >= horizon_) {
      // Far past the Frobenius number: order grows like s / a_max.
      ensure_order_horizon(static_cast<int>(s / gens_.front()) + 1);
    }
    ++n;
  }
}

std::vector<long long> NumericalSemigroup::minimal_generators() const {
  std::vector<long long> out;
  for (long long a : gens_) {
    bool sum = false;
    for (long long b : gens_) {
      if (b >= a) break;
      if (contains(a - b) && a - b > 0) {
        sum = true;
        break;
      }
    }
    if (!sum) out.push_back(a);
  }
  return out;
}

long long NumericalSemigroup::hilbert(int n) const {
  ensure_order_horizon(n + 1);
  const auto& ln = layers_[static_cast<std::size_t>(n)];
  const auto& ln1 = layers_[static_cast<std::size_t>(n + 1)];
  long long count = 0;
  for (long long s = 0; s < horizon_; ++s)
    if (ln[static_cast<std::size_t>(s)] && !ln1[static_cast<std::size_t>(s)]) ++count;
  return count;
}

long long NumericalSemigroup::rho(int n) const {
  // Count s with order(s) >= n+1 such that s - e is not in m^n.
  ensure_order_horizon(n + 2);
  long long e = multiplicity();
  const auto& top = layers_[static_cast<std::size_t>(n + 1)];
  const auto& base = layers_[static_cast<std::size_t>(n)];
  long long count = 0;
  for (long long s = 0; s < horizon_; ++s) {
    if (!top[static_cast<std::size_t>(s)]) continue;
    bool in_shift = s >= e && s - e < horizon_ && base[static_cast<std::size_t>(s - e)];
    if (!in_shift) ++count;
  }
  return count;
}

std::vector<long long> NumericalSemigroup::rho_table(int upto) const {
  std::vector<long long> out;
  for (int n = 0; n <= upto; ++n) out.push_back(rho(n));
  return out;
}

int NumericalSemigroup::reduction_number() const {
  for (int n = 0; n < 256; ++n)
    if (rho(n) == 0) return n;
  throw NoStabilization("reduction number not found below 256");
}

std::vector<long long> NumericalSemigroup::h_numerator() const {
  int r = reduction_number();
  auto rhos = rho_table(r + 1);
  std::vector<long long> h{1};
  for (int i = 1; i <= r; ++i) h.push_back(rhos[i - 1] - rhos[i]);
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::vector<long long> NumericalSemigroup::hilbert_coefficients(int upto) const {
  int r = reduction_number();
  auto rhos = rho_table(r + 1);
  std::vector<long long> e{multiplicity()};
  for (int i = 1; i <= upto; ++i) {
    long long sum = 0;
    for (int j = i - 1; j <= r; ++j) {
      if (j < 0) continue;
      // C(j, i-1)
      long long binom = 1;
      for (int t = 0; t < i - 1; ++t) binom = binom * (j - t) / (t + 1);
      sum += binom * rhos[static_cast<std::size_t>(j)];
    }
    e.push_back(sum);
  }
  return e;
}

std::vector<std::pair<long long, int>> NumericalSemigroup::truncation_basis(int N) const {
  ensure_order_horizon(N + 1);
  std::vector<std::pair<long long, int>> out;
  for (long long s = 0; s < horizon_; ++s) {
    if (!layers_[0][static_cast<std::size_t>(s)]) continue;
    if (layers_[static_cast<std::size_t>(N)][static_cast<std::size_t>(s)]) continue;
    int ord = 0;
    for (int n = N - 1; n >= 0; --n)
      if (layers_[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]) {
        ord = n;
        break;
      }
    out.emplace_back(s, ord);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

std::vector<int> NumericalSemigroup::decompose(long long s) const {
  if (!contains(s)) throw Error("decompose: not a semigroup element");
  std::vector<int> word;
  while (s > 0) {
    bool found = false;
    for (std::size_t i = gens_.size(); i-- > 0;) {
      long long a = gens_[i];
      if (a <= s && contains(s - a)) {
        word.push_back(static_cast<int>(i));
        s -= a;
        found = true;
        break;
      }
    }
    if (!found) throw Error("decompose: stuck (internal)");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<IPoly> NumericalSemigroup::toric_relations(int degree_cap) const {
  if (degree_cap > 24)
    throw ConversionOverflow("toric relation degree cap " +
                             std::to_string(degree_cap) + " exceeds limit 24");
  int k = static_cast<int>(gens_.size());
  if (k > kMaxVars) throw ValidationError("too many semigroup generators to present");
  std::map<long long, std::vector<Monomial>> classes;
  for (int d = 1; d <= degree_cap; ++d) {
    for_each_monomial_of_degree(k, d, [&](const Monomial& m) {
      long long w = 0;
      for (int i = 0; i < k; ++i) w += static_cast<long long>(m.e[i]) * gens_[i];
      classes[w].push_back(m);
    });
  }
  std::vector<IPoly> out;
  for (auto& [w, ms] : classes) {
    if (ms.size() < 2) continue;
    std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
      return grevlex_less(a, b, k);
    });
    const Monomial& rep = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) {
      // Differences with a common variable factor through a lower-weight
      // relation already in the list.
      if (!ms[i].coprime(rep)) continue;
      IPoly rel = IPoly::term(k, ms[i], 1).sub(IPoly::term(k, rep, 1));
      out.push_back(std::move(rel));
    }
  }
  return out;
}

}  // namespace hilb
