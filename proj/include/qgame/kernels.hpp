#pragma once

// Batched evaluation of real quadratic forms u^T P u over many unit
// 4-vectors. Used to tabulate restricted games and by grid-search oracles.
//
// A scalar reference kernel and an AVX2+FMA kernel are built; the AVX2 one
// is picked at runtime when the CPU supports it. Setting QGAME_KERNEL=scalar
// forces the reference kernel.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "qgame/su2.hpp"

namespace qgame::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();

/// Structure-of-arrays copy of a list of 4-vectors.
class VectorBatch {
 public:
  VectorBatch() = default;
  explicit VectorBatch(std::span<const Vec4> vectors);
  explicit VectorBatch(std::span<const Su2Element> strategies);

  std::size_t size() const { return w_.size(); }
  const double* w() const { return w_.data(); }
  const double* x() const { return x_.data(); }
  const double* y() const { return y_.data(); }
  const double* z() const { return z_.data(); }

 private:
  void push(const Vec4& v);

  std::vector<double> w_, x_, y_, z_;
};

/// The ten distinct coefficients of a symmetric 4x4 form:
/// P00 P11 P22 P33 2P01 2P02 2P03 2P12 2P13 2P23. Reads the upper triangle.
struct FormCoefficients {
  double c[10];
};
FormCoefficients form_coefficients(const Eigen::Matrix4d& p);

/// out[i] = u_i^T P u_i. out.size() must equal batch.size().
void quadratic_values(const Eigen::Matrix4d& p, const VectorBatch& batch, std::span<double> out,
                      Isa isa = active_isa());

struct BatchMax {
  double value;
  std::size_t index;  // first index attaining the maximum
};

/// Requires a nonempty batch.
BatchMax max_quadratic_value(const Eigen::Matrix4d& p, const VectorBatch& batch,
                             Isa isa = active_isa());

namespace detail {

void quadratic_values_scalar(const FormCoefficients& f, const double* w, const double* x,
                             const double* y, const double* z, std::size_t n, double* out);

// Only callable when isa_available(Isa::kAvx2).
void quadratic_values_avx2(const FormCoefficients& f, const double* w, const double* x,
                           const double* y, const double* z, std::size_t n, double* out);

}  // namespace detail

}  // namespace qgame::kernels
