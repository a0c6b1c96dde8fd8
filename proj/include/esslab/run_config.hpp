#ifndef ESSLAB_RUN_CONFIG_HPP
#define ESSLAB_RUN_CONFIG_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "esslab/errors.hpp"
#include "esslab/fock_oracle.hpp"

namespace esslab {

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 1u << 15;

inline double parse_real(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError("not a finite number: '" + std::string(s) + "'");
  }
  return v;
}

/// Inclusive start:stop:step range; a bare number is a one-point range.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::size_t count() const {
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  }
  std::vector<double> values() const {
    std::vector<double> v(count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = start + static_cast<double>(i) * step;
    return v;
  }
};

inline Range parse_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto c = text.find(':', pos);
    parts.push_back(text.substr(pos, c == std::string_view::npos ? std::string_view::npos : c - pos));
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  if (parts.size() == 1) {
    const double x = parse_real(parts[0]);
    return {x, x, 1.0};
  }
  if (parts.size() != 3) throw ConfigError("range must be start:stop:step, got '" + std::string(text) + "'");
  Range r{parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
  if (!(r.step > 0.0)) throw ConfigError("range step must be > 0");
  if (r.stop < r.start) throw ConfigError("range is empty (stop < start)");
  if (r.count() > 10'000'000) throw ConfigError("range has too many points");
  return r;
}

inline std::size_t validate_dim(long long dim) {
  if (dim < static_cast<long long>(kMinDim) || dim > static_cast<long long>(kMaxDim)) {
    throw ConfigError("dim must lie in [" + std::to_string(kMinDim) + ", " + std::to_string(kMaxDim) + "]");
  }
  return static_cast<std::size_t>(dim);
}

/// Truncation from ESSLAB_DIM when set, else `fallback`.
inline std::size_t dim_from_env(std::size_t fallback = kDefaultDim) {
  const char* env = std::getenv("ESSLAB_DIM");
  if (!env || !*env) return fallback;
  const double v = parse_real(env);
  if (v != std::floor(v)) throw ConfigError("ESSLAB_DIM must be an integer");
  return validate_dim(static_cast<long long>(v));
}

struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  std::size_t dim = kDefaultDim;
  std::string out_path;
  std::string format = "csv";

  bool has(const std::string& key) const { return params.count(key) != 0; }
  Range range(const std::string& key, std::string_view fallback) const {
    auto it = params.find(key);
    return parse_range(it == params.end() ? fallback : std::string_view(it->second));
  }
  double real(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : parse_real(it->second);
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

}  // namespace esslab

#endif  // ESSLAB_RUN_CONFIG_HPP
