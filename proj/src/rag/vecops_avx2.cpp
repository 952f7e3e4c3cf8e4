// AVX2/FMA variants of the retrieval kernels. This translation unit is the
// only one compiled with -mavx2 -mfma; callers must gate on cpu_has_avx2().

#include <immintrin.h>

#include <span>

namespace rubiscot::vecops::detail {

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

}  // namespace

double dot_avx2(std::span<const double> a, std::span<const double> b) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    __m256d va = _mm256_loadu_pd(a.data() + i);
    __m256d vb = _mm256_loadu_pd(b.data() + i);
    acc = _mm256_fmadd_pd(va, vb, acc);
  }
  double sum = hsum(acc);
  for (; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double squared_norm_avx2(std::span<const double> v) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= v.size(); i += 4) {
    __m256d x = _mm256_loadu_pd(v.data() + i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  double sum = hsum(acc);
  for (; i < v.size(); ++i) sum += v[i] * v[i];
  return sum;
}

}  // namespace rubiscot::vecops::detail
