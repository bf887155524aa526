#pragma once

// Named test functions for experiments:
//   const1, linear, poly:<c0,c1,...>, exp, sin<k>, runge, extremal:<n>

#include <string_view>
#include <vector>

#include "hahn_lsq/lsq.hpp"

namespace hahn_lsq {

/// sum_j coeffs[j] t^j. derivative_sup(k) bounds |p^{(k)}| by the sum of the
/// absolute coefficients of p^{(k)}, which is exact up to that bound on [-1, 1].
FunctionSpec polynomial_function(std::vector<double> coeffs, std::string name = "poly");

FunctionSpec exp_function();
/// sin(k t), derivative_sup(m) = k^m.
FunctionSpec sin_function(int k);
/// 1 / (1 + 25 t^2); no derivative certificate.
FunctionSpec runge_function();

/// Resolve a registry name. `params` is needed for extremal:<n>. Throws
/// ParameterError for unknown or malformed names.
FunctionSpec make_function(std::string_view name, const HahnParams& params);

}  // namespace hahn_lsq
