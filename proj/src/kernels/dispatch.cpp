#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qgame/kernels.hpp"

namespace qgame::kernels {

namespace {

// Batches are processed in blocks so the argmax scan stays in cache.
constexpr std::size_t kBlock = 256;

Isa detect_isa() {
  if (const char* env = std::getenv("QGAME_KERNEL"); env && std::string(env) == "scalar")
    return Isa::kScalar;
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

void run(Isa isa, const FormCoefficients& f, const VectorBatch& batch, std::size_t begin,
         std::size_t n, double* out) {
  if (isa == Isa::kAvx2) {
    if (!isa_available(Isa::kAvx2)) throw std::runtime_error("AVX2 kernel requested but unsupported");
    detail::quadratic_values_avx2(f, batch.w() + begin, batch.x() + begin, batch.y() + begin,
                                  batch.z() + begin, n, out);
  } else {
    detail::quadratic_values_scalar(f, batch.w() + begin, batch.x() + begin, batch.y() + begin,
                                    batch.z() + begin, n, out);
  }
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::kScalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return has;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = detect_isa();
  return isa;
}

VectorBatch::VectorBatch(std::span<const Vec4> vectors) {
  for (const auto& v : vectors) push(v);
}

VectorBatch::VectorBatch(std::span<const Su2Element> strategies) {
  for (const auto& s : strategies) push(s.vector());
}

void VectorBatch::push(const Vec4& v) {
  w_.push_back(v[0]);
  x_.push_back(v[1]);
  y_.push_back(v[2]);
  z_.push_back(v[3]);
}

FormCoefficients form_coefficients(const Eigen::Matrix4d& p) {
  return {{p(0, 0), p(1, 1), p(2, 2), p(3, 3), 2.0 * p(0, 1), 2.0 * p(0, 2), 2.0 * p(0, 3),
           2.0 * p(1, 2), 2.0 * p(1, 3), 2.0 * p(2, 3)}};
}

void quadratic_values(const Eigen::Matrix4d& p, const VectorBatch& batch, std::span<double> out,
                      Isa isa) {
  if (out.size() != batch.size()) throw std::invalid_argument("output span size mismatch");
  run(isa, form_coefficients(p), batch, 0, batch.size(), out.data());
}

BatchMax max_quadratic_value(const Eigen::Matrix4d& p, const VectorBatch& batch, Isa isa) {
  if (batch.size() == 0) throw std::invalid_argument("empty batch");
  const FormCoefficients f = form_coefficients(p);
  double buf[kBlock];
  BatchMax best{0.0, batch.size()};
  for (std::size_t begin = 0; begin < batch.size(); begin += kBlock) {
    const std::size_t n = std::min(kBlock, batch.size() - begin);
    run(isa, f, batch, begin, n, buf);
    for (std::size_t i = 0; i < n; ++i)
      if (best.index == batch.size() || buf[i] > best.value) best = {buf[i], begin + i};
  }
  return best;
}

}  // namespace qgame::kernels
