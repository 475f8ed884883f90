#include "hilb/hilbert.hpp"

#include <algorithm>

namespace hilb {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long long HilbertSeries::coefficient(int i) const {
  long long s = 0;
  for (std::size_t j = 0; j < h.size(); ++j)
    s += h[j] * binom(static_cast<long long>(j), i);
  return s;
}

long long hilbert_coefficient(const HilbertSeries& hs, int i) {
  if (i < 0) throw Error("hilbert_coefficient: negative index");
  return hs.coefficient(i);
}

std::string HilbertSeries::pretty() const {
  std::string s;
  for (std::size_t j = 0; j < h.size(); ++j) {
    long long c = h[j];
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (j == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a);
      s += "z";
      if (j > 1) s += "^" + std::to_string(j);
    }
  }
  return s.empty() ? "0" : s;
}

std::optional<HilbertSeries> detect_series(const std::vector<long long>& H) {
  int M = static_cast<int>(H.size());
  if (M == 0 || H[0] != 1) return std::nullopt;
  for (int d = 0; d < M; ++d) {
    // c = H * (1-z)^d
    std::vector<long long> c(static_cast<std::size_t>(M), 0);
    for (int n = 0; n < M; ++n) {
      long long v = 0;
      for (int k = 0; k <= std::min(n, d); ++k)
        v += ((k % 2) ? -1 : 1) * binom(d, k) * H[static_cast<std::size_t>(n - k)];
      c[static_cast<std::size_t>(n)] = v;
    }
    int s = -1;
    for (int n = 0; n < M; ++n)
      if (c[static_cast<std::size_t>(n)] != 0) s = n;
    if (s < 0) continue;  // zero ring; excluded upstream
    if (M - 1 - s >= d + 2) {
      HilbertSeries hs;
      hs.d = d;
      hs.h.assign(c.begin(), c.begin() + s + 1);
      if (hs.h[0] != 1) return std::nullopt;
      return hs;
    }
  }
  return std::nullopt;
}

template <class K>
SeriesResult h_polynomial(const K& F, const RingSpec& spec, const BuildOptions& opt,
                          int n_cap) {
  int N = 0;
  if (spec.is_extension()) {
    // The numerator is detected honestly below, but the base series tells us
    // where stabilization can first happen, skipping useless small builds.
    const RingSpec* cur = &spec;
    int extra = 0;
    while (cur->is_extension()) {
      extra += cur->extension().extra;
      cur = cur->extension().base.get();
    }
    SeriesResult base = h_polynomial(F, *cur, opt, n_cap);
    N = base.series.degree() + base.series.d + extra + 3;
  } else {
    N = std::max(4, max_generator_degree(spec) + 3);
  }

  std::optional<HilbertSeries> prev;
  while (N <= n_cap) {
    auto A = build_truncation(F, spec, N, opt);
    auto H = A->hilbert_values();
    auto cur = detect_series(H);
    if (cur && prev && *cur == *prev) {
      SeriesResult r;
      r.series = *cur;
      r.H = std::move(H);
      r.n_used = N;
      r.postulation_index = hilbert_samuel_check(r.series, r.H);
      if (spec.is_quotient() && spec.quotient().declared_dim &&
          *spec.quotient().declared_dim != r.series.d)
        throw DimensionMismatch(
            "declared dimension " + std::to_string(*spec.quotient().declared_dim) +
            " but computed " + std::to_string(r.series.d));
      return r;
    }
    prev = cur;
    N += 2;
  }
  throw NoStabilization("Hilbert series did not stabilize below order cap");
}

template <class K>
long long hilbert_function(const K& F, const RingSpec& spec, int n,
                           const BuildOptions& opt) {
  if (n < 0) throw Error("hilbert_function: negative index");
  std::function<std::optional<long long>(int)> query =
      [&](int N) -> std::optional<long long> {
    if (N < n + 2) return std::nullopt;
    auto A = build_truncation(F, spec, N, opt);
    return A->hilbert_value(n);
  };
  return stabilize<long long>(query, std::max(4, n + 2), 2, 40).value;
}

int hilbert_samuel_check(const HilbertSeries& hs, const std::vector<long long>& H) {
  int d = hs.d;
  std::vector<long long> e;
  for (int i = 0; i <= d; ++i) e.push_back(hs.coefficient(i));
  long long acc = 0;
  int postulation = 0;
  for (int n = 0; n < static_cast<int>(H.size()); ++n) {
    acc += H[static_cast<std::size_t>(n)];
    long long p = 0;
    for (int i = 0; i <= d; ++i)
      p += ((i % 2) ? -1 : 1) * e[static_cast<std::size_t>(i)] *
           binom(n + d - i, d - i);
    if (acc != p) postulation = n + 1;
  }
  if (postulation >= static_cast<int>(H.size()))
    throw CrossCheckFailure(
        "Hilbert-Samuel polynomial never matches the computed lengths");
  return postulation;
}

template SeriesResult h_polynomial(const PrimeField&, const RingSpec&,
                                   const BuildOptions&, int);
template SeriesResult h_polynomial(const RationalField&, const RingSpec&,
                                   const BuildOptions&, int);
template long long hilbert_function(const PrimeField&, const RingSpec&, int,
                                    const BuildOptions&);
template long long hilbert_function(const RationalField&, const RingSpec&, int,
                                    const BuildOptions&);

}  // namespace hilb
