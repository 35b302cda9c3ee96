// Copyright 2026 The graphshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHSHARE_WEIGHT_HPP_
#define GRAPHSHARE_WEIGHT_HPP_

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace graphshare {

// Exact rational. Always kept in lowest terms with a positive denominator.
// Vertex weights are non-negative; intermediate quantities (differences in
// separator bounds) may use the same type.
using Weight = boost::rational<std::int64_t>;

}  // namespace graphshare

// Boost 1.74 implements `integer == rational` by calling `rational ==
// integer`, which C++20's reversed-operator rules send straight back to the
// same function. Exact non-template overloads win overload resolution and
// break the cycle.
namespace boost {

inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(std::int64_t a, const rational<std::int64_t>& b) { return !(b == a); }
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == std::int64_t{b}; }
inline bool operator==(int a, const rational<std::int64_t>& b) { return b == std::int64_t{a}; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == std::int64_t{b}); }
inline bool operator!=(int a, const rational<std::int64_t>& b) { return !(b == std::int64_t{a}); }

}  // namespace boost

namespace graphshare {

inline Weight make_weight(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("weight denominator is zero");
  return Weight(num, den);
}

// "p/q" with q >= 1; integers are printed as "p/1".
inline std::string to_string(const Weight& w) {
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

namespace detail {

inline std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  if (text.empty()) return std::nullopt;
  const char* first = text.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace detail

// Accepts "p/q" or "p". Returns nullopt on malformed input or zero denominator.
inline std::optional<Weight> parse_weight(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = detail::parse_int(text);
    if (!num) return std::nullopt;
    return Weight(*num);
  }
  auto num = detail::parse_int(text.substr(0, slash));
  auto den = detail::parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Weight(*num, *den);
}

inline Weight half(const Weight& w) { return w / 2; }

}  // namespace graphshare

#endif  // GRAPHSHARE_WEIGHT_HPP_
