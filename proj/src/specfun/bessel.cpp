#include "lovelab/errors.hpp"
#include "lovelab/specfun.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <mutex>

namespace lovelab::specfun {

namespace {
std::once_flag gsl_handler_once;
}

double bessel_scaled(BesselKind kind, double x) {
  if (!(x > 0.0)) throw DomainError("scaled Bessel needs x > 0");
  std::call_once(gsl_handler_once, [] { gsl_set_error_handler_off(); });
  gsl_sf_result res;
  int status = GSL_SUCCESS;
  switch (kind) {
    case BesselKind::I1: status = gsl_sf_bessel_I1_scaled_e(x, &res); break;
    case BesselKind::I2: status = gsl_sf_bessel_In_scaled_e(2, x, &res); break;
    case BesselKind::K1: status = gsl_sf_bessel_K1_scaled_e(x, &res); break;
  }
  // underflow of I2 near 0 is a legitimate zero
  if (status != GSL_SUCCESS && status != GSL_EUNDRFLW)
    throw DomainError(std::string("scaled Bessel failed: ") + gsl_strerror(status));
  return res.val;
}

}  // namespace lovelab::specfun
