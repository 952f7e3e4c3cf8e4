#pragma once

#include <span>

namespace rubiscot::vecops {

// Similarity kernels for retrieval scoring. The scalar versions are the
// reference implementations; dot() and squared_norm() dispatch to an AVX2
// variant when the CPU supports it. Both variants accumulate in double, so
// they agree to reassociation error (~1e-15 for unit-scale inputs).

using DotFn = double (*)(std::span<const double>, std::span<const double>);
using NormFn = double (*)(std::span<const double>);

double dot_scalar(std::span<const double> a, std::span<const double> b);
double squared_norm_scalar(std::span<const double> v);

// nullptr when the binary was built without the AVX2 translation unit.
DotFn dot_kernel_avx2();
NormFn squared_norm_kernel_avx2();

// true when the dispatcher selected the AVX2 variant at load time
bool avx2_active();

double dot(std::span<const double> a, std::span<const double> b);
double squared_norm(std::span<const double> v);

// dot(a,b) / (|a||b|), clamped to [-1, 1].
// Throws DimensionMismatch / ZeroVector.
double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace rubiscot::vecops
