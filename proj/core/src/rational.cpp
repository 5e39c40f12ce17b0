#include "theta/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "theta/errors.hpp"

namespace theta {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// INT64_MIN is excluded so negation of an inline value never overflows.
constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits_small(i128 v) { return v >= -static_cast<i128>(kSmallMax) && v <= kSmallMax; }

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = abs128(v);
  auto hi = static_cast<std::uint64_t>(u >> 64);
  auto lo = static_cast<std::uint64_t>(u);
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
  r <<= 64;
  mpz_class low;
  mpz_import(low.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
  r += low;
  if (neg) r = -r;
  return r;
}

bool mpz_to_small(const mpz_class& z, std::int64_t& out) {
  if (!z.fits_slong_p()) return false;
  long v = z.get_si();
  if (v == std::numeric_limits<long>::min()) return false;
  out = v;
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    *this = from_mpq(mpq_class(mpz_class(static_cast<long>(value))));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpz_class& value) { *this = from_mpq(mpq_class(value)); }

Rational::Rational(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  *this = from_mpq(std::move(v));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgument("Rational: zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  *this = from_mpq(std::move(v));
}

Rational Rational::from_mpq(mpq_class value) {
  Rational r;
  std::int64_t n = 0;
  std::int64_t d = 1;
  if (mpz_to_small(value.get_num(), n) && mpz_to_small(value.get_den(), d)) {
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(value));
  r.num_ = 0;
  r.den_ = 1;
  return r;
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0) return Rational();
  if (fits_small(num) && fits_small(den)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  return from_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num_text = slash == std::string_view::npos ? text : text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num_text, true) || !valid_int(den_text, false))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  std::string num_s(num_text);
  if (!num_s.empty() && num_s.front() == '+') num_s.erase(0, 1);
  mpz_class num(num_s, 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits_small(s)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    std::int64_t g = std::gcd(a.den_, b.den_);
    i128 num = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
    i128 den = static_cast<i128>(a.den_) * (b.den_ / g);
    return Rational::from_wide(num, den);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits_small(num) && fits_small(den)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    return Rational::from_wide(num, den);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InvalidArgument("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    std::int64_t bn = b.num_;
    std::int64_t bd = b.den_;
    if (bn < 0) {
      bn = -bn;
      bd = -bd;
    }
    Rational inv;
    inv.num_ = bd;
    inv.den_ = bn;
    return a * inv;
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace theta
