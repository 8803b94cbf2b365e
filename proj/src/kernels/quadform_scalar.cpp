#include "qgame/kernels.hpp"

namespace qgame::kernels::detail {

void quadratic_values_scalar(const FormCoefficients& f, const double* w, const double* x,
                             const double* y, const double* z, std::size_t n, double* out) {
  const double* c = f.c;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = w[i], b = x[i], d = y[i], e = z[i];
    const double diag = c[0] * a * a + c[1] * b * b + c[2] * d * d + c[3] * e * e;
    const double off = a * (c[4] * b + c[5] * d + c[6] * e) + b * (c[7] * d + c[8] * e) + c[9] * d * e;
    out[i] = diag + off;
  }
}

}  // namespace qgame::kernels::detail
