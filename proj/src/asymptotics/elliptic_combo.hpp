#pragma once

#include "lovelab/specfun.hpp"

namespace lovelab::asymptotics::detail {

// a K + b E + c k'^2 K + d k'^2 E, with a power series in k for small k
// where the combination cancels.
struct EllipticCombo {
  double a, b, c, d;
};

double evaluate(const EllipticCombo& w, specfun::Modulus m);

inline constexpr EllipticCombo combo_A{0.0, 1.0, -1.0, 0.0};   // E - k'^2 K
inline constexpr EllipticCombo combo_B{-1.0, 2.0, -1.0, 0.0};  // 2E - (1 + k'^2) K
inline constexpr EllipticCombo combo_D{0.0, -2.0, 4.0, -2.0};  // 4k'^2 K - 2(1 + k'^2) E

// Modulus 1/r for r = 1 + s, complement exact in s.
specfun::Modulus inverse_modulus(double s);

}  // namespace lovelab::asymptotics::detail
