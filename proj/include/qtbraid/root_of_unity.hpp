#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qtb {

/// q = exp(2 pi i s / N) with N odd and gcd(s, N) = 1.  Powers of q are
/// looked up by exact integer exponent, never by repeated multiplication.
class RootOfUnityParams {
 public:
  /// Throws UnsupportedParameters for even N, N < 3 or gcd(s, N) != 1.
  RootOfUnityParams(int n, int s);

  int order() const noexcept { return n_; }
  int s() const noexcept { return s_; }

  std::complex<double> q() const { return q_pow(1); }
  std::complex<double> q_pow(std::int64_t k) const;

  /// exp(2 pi i / N), the primitive root used for kernel adjustments.
  std::complex<double> zeta_pow(std::int64_t k) const;

 private:
  int n_;
  int s_;
  std::vector<std::complex<double>> zeta_;
};

}  // namespace qtb
