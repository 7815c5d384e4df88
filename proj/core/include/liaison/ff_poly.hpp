#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace liaison {

inline constexpr int kPolyVars = 4;
inline constexpr std::array<char, kPolyVars> kVarNames{'x', 'y', 'z', 'w'};
inline constexpr int kDefaultDegreeCap = 64;

using Exponents = std::array<std::uint8_t, kPolyVars>;

bool is_prime(std::uint32_t n) noexcept;

/// Graded lexicographic order with x > y > z > w, largest monomial first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

/// Sparse polynomial in x, y, z, w over F_p. Coefficients live in [0, p) and
/// zero terms are never stored.
class FFPoly {
 public:
  using Terms = std::map<Exponents, std::uint32_t, GradedLexGreater>;

  /// Zero polynomial. Throws NotPrime unless p is a prime below 2^31.
  explicit FFPoly(std::uint32_t p, int degree_cap = kDefaultDegreeCap);

  static FFPoly constant(std::uint32_t p, std::int64_t c);
  static FFPoly variable(std::uint32_t p, int index);
  static FFPoly monomial(std::uint32_t p, std::int64_t c, const Exponents& e);
  /// Parses a sum of terms `c*x^e1*y^e2*z^e3*w^e4` joined by + and -.
  static FFPoly parse(std::string_view text, std::uint32_t p, int degree_cap = kDefaultDegreeCap);

  std::uint32_t prime() const noexcept { return p_; }
  int degree_cap() const noexcept { return cap_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  /// Number of leading variables (x, y, z, w order) needed to express the polynomial.
  int variables_used() const noexcept;

  FFPoly operator-() const;
  FFPoly& operator+=(const FFPoly& o);
  FFPoly& operator-=(const FFPoly& o);
  FFPoly& operator*=(const FFPoly& o);
  friend FFPoly operator+(FFPoly a, const FFPoly& b) { return a += b; }
  friend FFPoly operator-(FFPoly a, const FFPoly& b) { return a -= b; }
  friend FFPoly operator*(FFPoly a, const FFPoly& b) { return a *= b; }
  FFPoly scaled(std::int64_t c) const;

  FFPoly derivative(int var) const;
  /// Value at a point of F_p^4; coordinates are reduced mod p.
  std::uint32_t eval(std::span<const std::uint32_t> point) const;

  /// Canonical text, largest monomial first; coefficients above p/2 print negative.
  std::string to_string() const;

  friend bool operator==(const FFPoly& a, const FFPoly& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }
  /// Total order for use in sorted containers (prime, then terms).
  friend bool operator<(const FFPoly& a, const FFPoly& b);

 private:
  void add_term(const Exponents& e, std::uint64_t c);
  void require_same_field(const FFPoly& o) const;

  std::uint32_t p_;
  int cap_;
  Terms terms_;
};

}  // namespace liaison
