#include "qtbraid/root_of_unity.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qtbraid/error.hpp"
#include "qtbraid/integer_forms.hpp"

namespace qtb {

RootOfUnityParams::RootOfUnityParams(int n, int s) : n_(n), s_(s) {
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorCode::UnsupportedParameters,
                "N must be odd and at least 3, got " + std::to_string(n));
  }
  if (std::gcd(s, n) != 1) {
    throw Error(ErrorCode::UnsupportedParameters,
                "s must be coprime to N, got s=" + std::to_string(s) + " N=" + std::to_string(n));
  }
  zeta_.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    zeta_.emplace_back(std::cos(angle), std::sin(angle));
  }
}

std::complex<double> RootOfUnityParams::zeta_pow(std::int64_t k) const {
  return zeta_[static_cast<std::size_t>(positive_mod(k, n_))];
}

std::complex<double> RootOfUnityParams::q_pow(std::int64_t k) const {
  return zeta_pow(positive_mod(k, n_) * s_);
}

}  // namespace qtb
