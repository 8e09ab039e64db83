#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace eqbif {

// Exact angle as a fraction of a full turn, reduced into [0, 1).
class Turn {
public:
  constexpr Turn() = default;
  Turn(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  static Turn from_string(const std::string& s);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double radians() const;

  Turn operator+(const Turn& o) const;
  Turn operator-(const Turn& o) const;
  Turn operator-() const { return Turn(-num_, den_); }
  Turn operator*(std::int64_t k) const { return Turn(num_ * k, den_); }
  // One preimage of this angle under z -> z^k (the branch in [0, 1/k)).
  Turn divided(std::int64_t k) const;

  bool operator==(const Turn&) const = default;
  std::strong_ordering operator<=>(const Turn& o) const;

  std::string str() const;

private:
  void normalize();
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Turn& t) { return os << t.str(); }

// Exact positive rational used for nu = p/q.
struct Rational {
  std::int64_t p = 1;
  std::int64_t q = 1;
  static Rational parse(const std::string& s);
  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

} // namespace eqbif
