#include "hahn_lsq/functions.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "hahn_lsq/errors.hpp"

namespace hahn_lsq {

namespace {

template <class T>
T parse_number(std::string_view text, std::string_view context) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParameterError("function name '" + std::string(context) + "': cannot parse '" +
                         std::string(text) + "'");
  }
  return value;
}

}  // namespace

FunctionSpec polynomial_function(std::vector<double> coeffs, std::string name) {
  if (coeffs.empty()) {
    coeffs.push_back(0.0);
  }
  FunctionSpec f;
  f.name = std::move(name);
  f.evaluator = [coeffs](double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = acc * t + *it;
    }
    return acc;
  };
  f.derivative_sup = [coeffs](int k) -> std::optional<double> {
    if (k < 0) {
      return std::nullopt;
    }
    double bound = 0.0;
    for (std::size_t j = static_cast<std::size_t>(k); j < coeffs.size(); ++j) {
      double falling = 1.0;  // j (j-1) ... (j-k+1)
      for (int i = 0; i < k; ++i) {
        falling *= static_cast<double>(j) - i;
      }
      bound += std::abs(coeffs[j]) * falling;
    }
    return bound;
  };
  return f;
}

FunctionSpec exp_function() {
  FunctionSpec f;
  f.name = "exp";
  f.evaluator = [](double t) { return std::exp(t); };
  f.derivative_sup = [](int k) -> std::optional<double> {
    if (k < 0) {
      return std::nullopt;
    }
    return std::numbers::e;
  };
  return f;
}

FunctionSpec sin_function(int k) {
  FunctionSpec f;
  f.name = "sin" + std::to_string(k);
  const double freq = k;
  f.evaluator = [freq](double t) { return std::sin(freq * t); };
  f.derivative_sup = [freq](int m) -> std::optional<double> {
    if (m < 0) {
      return std::nullopt;
    }
    return std::pow(std::abs(freq), m);
  };
  return f;
}

FunctionSpec runge_function() {
  FunctionSpec f;
  f.name = "runge";
  f.evaluator = [](double t) { return 1.0 / (1.0 + 25.0 * t * t); };
  return f;
}

FunctionSpec make_function(std::string_view name, const HahnParams& params) {
  if (name == "const1") {
    return polynomial_function({1.0}, "const1");
  }
  if (name == "linear") {
    return polynomial_function({0.0, 1.0}, "linear");
  }
  if (name == "exp") {
    return exp_function();
  }
  if (name == "runge") {
    return runge_function();
  }
  if (name.starts_with("poly:")) {
    std::vector<double> coeffs;
    std::string_view rest = name.substr(5);
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_number<double>(rest.substr(0, comma), name));
      if (comma == std::string_view::npos) {
        break;
      }
      rest = rest.substr(comma + 1);
    }
    return polynomial_function(std::move(coeffs), std::string(name));
  }
  if (name.starts_with("sin")) {
    return sin_function(parse_number<int>(name.substr(3), name));
  }
  if (name.starts_with("extremal:")) {
    return extremal_function(parse_number<int>(name.substr(9), name), params);
  }
  throw ParameterError("unknown function '" + std::string(name) +
                       "' (expected const1, linear, poly:<c0,c1,...>, exp, sin<k>, runge, extremal:<n>)");
}

}  // namespace hahn_lsq
