#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilb/algebra.hpp"

namespace hilb {

long long binom(long long n, long long k);

/// Hilbert series as dimension d plus the integer numerator over (1-z)^d.
struct HilbertSeries {
  int d = 0;
  std::vector<long long> h;  // h[0] = 1, trailing coefficient nonzero

  bool operator==(const HilbertSeries&) const = default;

  int degree() const { return static_cast<int>(h.size()) - 1; }

  /// e_i = h^(i)(1) / i! = sum_j h_j C(j, i).
  long long coefficient(int i) const;

  /// Numerator printed in the z variable, e.g. "1 + 3z + 3z^3 - z^4".
  std::string pretty() const;
};

/// e_i from a numerator (the spec-level operation).
long long hilbert_coefficient(const HilbertSeries& hs, int i);

struct SeriesResult {
  HilbertSeries series;
  std::vector<long long> H;  // H(0), H(1), ... as computed (length n_used)
  int n_used = 0;            // truncation order that certified the numerator
  int postulation_index = 0;
  bool operator==(const SeriesResult& o) const { return series == o.series; }
};

/// Detects (d, numerator) from an initial segment of the Hilbert function:
/// the smallest d for which H * (1-z)^d is a polynomial with at least d+2
/// trailing zero confirmations inside the computed window.
std::optional<HilbertSeries> detect_series(const std::vector<long long>& H);

/// Computes the Hilbert series of the spec, growing the truncation until the
/// numerator stabilizes and a rerun two orders higher agrees.  Checks the
/// declared dimension when present.
template <class K>
SeriesResult h_polynomial(const K& F, const RingSpec& spec,
                          const BuildOptions& opt = {}, int n_cap = 40);

/// Stabilized single Hilbert-function value.
template <class K>
long long hilbert_function(const K& F, const RingSpec& spec, int n,
                           const BuildOptions& opt = {});

/// Verifies l(A/m^{n+1}) = P_A(n) for every computed n past the postulation
/// index; returns that index.  A failure means the truncation lied.
int hilbert_samuel_check(const HilbertSeries& hs, const std::vector<long long>& H);

inline long long multiplicity(const HilbertSeries& hs) { return hs.coefficient(0); }

/// h = mu(m) - d = H(1) - d.
inline long long embedding_codim(const HilbertSeries& hs) {
  return (hs.h.size() > 1 ? hs.h[1] : 0);
}

}  // namespace hilb
