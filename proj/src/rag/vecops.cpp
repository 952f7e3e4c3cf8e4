#include "rubiscot/rag/vecops.hpp"

#include <algorithm>
#include <cmath>

#include "rubiscot/error.hpp"

namespace rubiscot::vecops {

double dot_scalar(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double squared_norm_scalar(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

#if defined(RUBISCOT_HAVE_AVX2_TU)
namespace detail {
double dot_avx2(std::span<const double> a, std::span<const double> b);
double squared_norm_avx2(std::span<const double> v);
bool cpu_has_avx2();
}  // namespace detail
#endif

DotFn dot_kernel_avx2() {
#if defined(RUBISCOT_HAVE_AVX2_TU)
  return &detail::dot_avx2;
#else
  return nullptr;
#endif
}

NormFn squared_norm_kernel_avx2() {
#if defined(RUBISCOT_HAVE_AVX2_TU)
  return &detail::squared_norm_avx2;
#else
  return nullptr;
#endif
}

namespace {

struct Dispatch {
  DotFn dot = &dot_scalar;
  NormFn norm = &squared_norm_scalar;
  bool avx2 = false;

  Dispatch() {
#if defined(RUBISCOT_HAVE_AVX2_TU)
    if (detail::cpu_has_avx2()) {
      dot = &detail::dot_avx2;
      norm = &detail::squared_norm_avx2;
      avx2 = true;
    }
#endif
  }
};

const Dispatch& dispatch() {
  static const Dispatch d;
  return d;
}

}  // namespace

bool avx2_active() { return dispatch().avx2; }

double dot(std::span<const double> a, std::span<const double> b) {
  return dispatch().dot(a, b);
}

double squared_norm(std::span<const double> v) { return dispatch().norm(v); }

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vectors of length " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  double na = squared_norm(a);
  double nb = squared_norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw Error(ErrorCode::ZeroVector, "cosine is undefined for an all-zero vector");
  }
  double value = dot(a, b) / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(value, -1.0, 1.0);
}

}  // namespace rubiscot::vecops
