#pragma once

// Text forms of complex arguments: "a", "bi", "a+bi", "a-bi", "i", "-i"
// (spaces ignored), and grid specs "start:stop:count".

#include <charconv>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "barnes/errors.hpp"
#include "barnes/kernels/complex_util.hpp"

namespace barnes {

namespace detail {

inline double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw domain_error("cannot parse complex number '" + std::string(whole) + "'");
  return v;
}

}  // namespace detail

inline Complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw domain_error("cannot parse empty complex number");
  if (s.back() != 'i') return {detail::parse_real(s, text), 0};
  s.pop_back();
  // split at the last sign that is not an exponent sign and not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : detail::parse_real(re, text), detail::parse_real(im, text)};
}

/// Equally spaced points from start to stop inclusive.
inline std::vector<Complex<double>> parse_grid(std::string_view spec) {
  const auto a = spec.find(':');
  const auto b = a == std::string_view::npos ? a : spec.find(':', a + 1);
  if (b == std::string_view::npos || spec.find(':', b + 1) != std::string_view::npos)
    throw domain_error("grid must be start:stop:count, got '" + std::string(spec) + "'");
  const Complex<double> start = parse_complex(spec.substr(0, a));
  const Complex<double> stop = parse_complex(spec.substr(a + 1, b - a - 1));
  const std::string_view cs = spec.substr(b + 1);
  long count = 0;
  const auto [ptr, ec] = std::from_chars(cs.data(), cs.data() + cs.size(), count);
  if (ec != std::errc() || ptr != cs.data() + cs.size() || count < 1)
    throw domain_error("grid count must be a positive integer, got '" + std::string(cs) + "'");
  std::vector<Complex<double>> pts;
  for (long k = 0; k < count; ++k)
    pts.push_back(count == 1 ? start : start + (stop - start) * (double(k) / double(count - 1)));
  if (count > 1) pts.back() = stop;
  return pts;
}

}  // namespace barnes
