#include "eqbif/turn.hpp"

#include <cmath>
#include <numbers>

namespace eqbif {

void Turn::normalize() {
  if (den_ == 0) throw std::invalid_argument("turn with zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  num_ %= den_;
  if (num_ < 0) num_ += den_;
  std::int64_t g = std::gcd(num_, den_);
  if (g == 0) g = 1;
  num_ /= g;
  den_ /= g;
  if (num_ == 0) den_ = 1;
}

Turn Turn::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Turn(std::stoll(s), 1);
  return Turn(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

double Turn::radians() const {
  return 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

Turn Turn::operator+(const Turn& o) const {
  std::int64_t l = std::lcm(den_, o.den_);
  return Turn(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

Turn Turn::operator-(const Turn& o) const { return *this + (-o); }

Turn Turn::divided(std::int64_t k) const {
  if (k <= 0) throw std::invalid_argument("turn division by non-positive integer");
  return Turn(num_, den_ * k);
}

std::strong_ordering Turn::operator<=>(const Turn& o) const {
  // Both normalized to [0,1), compare num/den exactly.
  __int128 a = static_cast<__int128>(num_) * o.den_;
  __int128 b = static_cast<__int128>(o.num_) * den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Turn::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= s.size())
    throw std::invalid_argument("rational must be given as \"p/q\": " + s);
  std::size_t used = 0;
  Rational r;
  std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
  r.p = std::stoll(ps, &used);
  if (used != ps.size()) throw std::invalid_argument("bad numerator in " + s);
  r.q = std::stoll(qs, &used);
  if (used != qs.size()) throw std::invalid_argument("bad denominator in " + s);
  if (r.p <= 0 || r.q <= 0) throw std::invalid_argument("rational must be positive: " + s);
  std::int64_t g = std::gcd(r.p, r.q);
  r.p /= g;
  r.q /= g;
  return r;
}

} // namespace eqbif
