#include "liaison/ff_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "liaison/error.hpp"

namespace liaison {

namespace {

int degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

std::uint32_t reduce(std::int64_t c, std::uint32_t p) {
  const std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t pow_mod(std::uint64_t base, unsigned exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

FFPoly::FFPoly(std::uint32_t p, int degree_cap) : p_(p), cap_(degree_cap) {
  if (!is_prime(p) || p >= (1U << 31)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
  }
  if (degree_cap < 0 || degree_cap > 255) {
    throw Error(ErrorCode::PreconditionViolated, "degree cap must lie in [0, 255]");
  }
}

FFPoly FFPoly::constant(std::uint32_t p, std::int64_t c) {
  FFPoly out(p);
  out.add_term(Exponents{}, reduce(c, p));
  return out;
}

FFPoly FFPoly::variable(std::uint32_t p, int index) {
  if (index < 0 || index >= kPolyVars) {
    throw Error(ErrorCode::PreconditionViolated, "variable index out of range");
  }
  Exponents e{};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(p, 1, e);
}

FFPoly FFPoly::monomial(std::uint32_t p, std::int64_t c, const Exponents& e) {
  FFPoly out(p);
  out.add_term(e, reduce(c, p));
  return out;
}

void FFPoly::add_term(const Exponents& e, std::uint64_t c) {
  c %= p_;
  if (c == 0) return;
  if (degree_of(e) > cap_) {
    throw Error(ErrorCode::DegreeCapExceeded,
                "term of degree " + std::to_string(degree_of(e)) + " exceeds cap " +
                    std::to_string(cap_));
  }
  auto [it, inserted] = terms_.try_emplace(e, static_cast<std::uint32_t>(c));
  if (!inserted) {
    const auto sum = (static_cast<std::uint64_t>(it->second) + c) % p_;
    if (sum == 0) {
      terms_.erase(it);
    } else {
      it->second = static_cast<std::uint32_t>(sum);
    }
  }
}

void FFPoly::require_same_field(const FFPoly& o) const {
  if (o.p_ != p_) {
    throw Error(ErrorCode::FieldMismatch,
                "F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_) + " operands");
  }
}

bool FFPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

int FFPoly::total_degree() const noexcept {
  return terms_.empty() ? -1 : degree_of(terms_.begin()->first);
}

int FFPoly::variables_used() const noexcept {
  int used = 0;
  for (const auto& [e, c] : terms_) {
    for (int v = kPolyVars - 1; v >= used; --v) {
      if (e[static_cast<std::size_t>(v)] != 0) {
        used = v + 1;
        break;
      }
    }
  }
  return used;
}

FFPoly FFPoly::operator-() const {
  FFPoly out(p_, cap_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, p_ - c);
  return out;
}

FFPoly& FFPoly::operator+=(const FFPoly& o) {
  require_same_field(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FFPoly& FFPoly::operator-=(const FFPoly& o) {
  require_same_field(o);
  for (const auto& [e, c] : o.terms_) add_term(e, p_ - c);
  return *this;
}

FFPoly& FFPoly::operator*=(const FFPoly& o) {
  require_same_field(o);
  FFPoly out(p_, std::min(cap_, o.cap_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e{};
      for (std::size_t v = 0; v < e.size(); ++v) {
        const int sum = ea[v] + eb[v];
        if (sum > 255) throw Error(ErrorCode::DegreeCapExceeded, "exponent overflow");
        e[v] = static_cast<std::uint8_t>(sum);
      }
      out.add_term(e, static_cast<std::uint64_t>(ca) * cb % p_);
    }
  }
  *this = std::move(out);
  return *this;
}

FFPoly FFPoly::scaled(std::int64_t c) const {
  FFPoly out(p_, cap_);
  const std::uint64_t k = reduce(c, p_);
  for (const auto& [e, coeff] : terms_) out.add_term(e, k * coeff % p_);
  return out;
}

FFPoly FFPoly::derivative(int var) const {
  if (var < 0 || var >= kPolyVars) {
    throw Error(ErrorCode::PreconditionViolated, "variable index out of range");
  }
  FFPoly out(p_, cap_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] = static_cast<std::uint8_t>(e[v] - 1);
    out.add_term(d, static_cast<std::uint64_t>(c) * (e[v] % p_) % p_);
  }
  return out;
}

std::uint32_t FFPoly::eval(std::span<const std::uint32_t> point) const {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t term = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      const std::uint32_t coord = v < point.size() ? point[v] : 0;
      term = term * pow_mod(coord, e[v], p_) % p_;
    }
    acc += term;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

std::string FFPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c > p_ / 2;
    const std::uint32_t magnitude = negative ? p_ - c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kVarNames[v];
      if (e[v] > 1) mono += '^' + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += std::to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += std::to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

bool operator<(const FFPoly& a, const FFPoly& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return GradedLexGreater{}(x.first, y.first);
        return x.second < y.second;
      });
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::uint32_t p, int cap) : text_(text), p_(p), cap_(cap) {}

  FFPoly parse() {
    FFPoly out(p_, cap_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      FFPoly term = parse_term();
      out += negative ? -term : term;
      skip_ws();
    }
    return out;
  }

 private:
  FFPoly parse_term() {
    std::int64_t coeff = 1;
    Exponents e{};
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = static_cast<std::int64_t>(reduce(coeff, p_)) *
                static_cast<std::int64_t>(parse_int(p_));
      } else {
        const auto* found = std::find(kVarNames.begin(), kVarNames.end(), ch);
        if (found == kVarNames.end()) fail(std::string("unexpected character '") + ch + "'");
        ++pos_;
        std::int64_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("missing exponent");
          power = parse_int(0);
        }
        auto& slot = e[static_cast<std::size_t>(found - kVarNames.begin())];
        if (slot + power > 255) fail("exponent too large");
        slot = static_cast<std::uint8_t>(slot + power);
      }
      skip_ws();
      expect_factor = !at_end() && peek() == '*';
      if (expect_factor) ++pos_;
    }
    FFPoly term(p_, cap_);
    term += FFPoly::monomial(p_, coeff, e);
    return term;
  }

  // Digits reduced mod `modulus`; modulus 0 keeps the exact value (capped).
  std::int64_t parse_int(std::uint32_t modulus) {
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (modulus != 0) {
        v %= modulus;
      } else if (v > 1000) {
        fail("exponent too large");
      }
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(text_) + "'");
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::uint32_t p_;
  int cap_;
  std::size_t pos_ = 0;
};

}  // namespace

FFPoly FFPoly::parse(std::string_view text, std::uint32_t p, int degree_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return TermParser(text, p, degree_cap).parse();
}

}  // namespace liaison
