#ifndef PLU_NUMDIFF_HPP
#define PLU_NUMDIFF_HPP

#include <cmath>
#include <stdexcept>

namespace plu {

/// Central finite difference (f(x+h) - f(x-h)) / (2h). This is the oracle
/// every analytic gradient in the project is checked against; it must stay
/// independent of the code it verifies.
template <typename F>
double central_diff(F&& f, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("central_diff: h must be > 0");
  const double fp = f(x + h);
  const double fm = f(x - h);
  if (!std::isfinite(fp) || !std::isfinite(fm)) {
    throw std::runtime_error("central_diff: non-finite value at probe point");
  }
  return (fp - fm) / (2.0 * h);
}

/// Tolerance rule used by all gradient checks: relative 'rel' on the larger
/// magnitude, with an absolute floor 'abs_floor' for values near zero.
inline bool grad_close(double analytic, double numeric, double rel,
                       double abs_floor) {
  const double diff = std::fabs(analytic - numeric);
  const double scale = std::fmax(std::fabs(analytic), std::fabs(numeric));
  return diff <= std::fmax(abs_floor, rel * scale);
}

/// Relative error with a small floor in the denominator, for reporting.
inline double rel_error(double analytic, double numeric) {
  const double diff = std::fabs(analytic - numeric);
  const double scale =
      std::fmax(std::fmax(std::fabs(analytic), std::fabs(numeric)), 1e-12);
  return diff / scale;
}

}  // namespace plu

#endif  // PLU_NUMDIFF_HPP
