#pragma once

namespace leray::special {

/// Modified Bessel function of the second kind, order zero, for x > 0.
/// Power series for x <= 2, Steed's continued fraction beyond.
double bessel_k0(double x);

/// e^x K₀(x); finite for all x > 0.
double bessel_k0_scaled(double x);

}  // namespace leray::special
