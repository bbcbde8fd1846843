#include "slocc/gaussian_rational.hpp"

#include <cctype>
#include <functional>

namespace slocc {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  return {Rational(num, den), 0};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(i)");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero in Q(i)");
  if (sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

// Unsigned rational: DIGITS ['/' DIGITS]
Rational parse_unsigned_rational(std::string_view text, std::string_view whole) {
  auto bad = [&]() { return ParseError("malformed Gaussian rational", std::string(whole)); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!all_digits(num)) throw bad();
  if (slash != std::string_view::npos && !all_digits(den)) throw bad();
  Integer n(std::string(num), 10);
  Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
  if (sgn(d) == 0) throw ParseError("zero denominator in Gaussian rational", std::string(whole));
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_signed_rational(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '-') return -parse_unsigned_rational(text.substr(1), whole);
  return parse_unsigned_rational(text, whole);
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string imag;
  Rational mag = abs(im_);
  if (mag != 1) imag = rational_text(mag);
  imag += 'i';
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rational_text(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty Gaussian rational", "");
  if (text.back() != 'i') return {parse_signed_rational(text, text), 0};

  std::string_view body = text.substr(0, text.size() - 1);
  // A sign after the first character separates the real and imaginary parts.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    bool negative = !body.empty() && body.front() == '-';
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    if (negative) body.remove_prefix(1);
    Rational im = body.empty() ? Rational(1) : parse_unsigned_rational(body, text);
    return {0, negative ? Rational(-im) : im};
  }
  Rational re = parse_signed_rational(body.substr(0, split), text);
  std::string_view imag = body.substr(split + 1);
  Rational im = imag.empty() ? Rational(1) : parse_unsigned_rational(imag, text);
  if (body[split] == '-') im = -im;
  return {re, im};
}

std::size_t GaussianRational::hash() const {
  auto limb = [](const Integer& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * (sgn(z) < 0 ? 31 : 1);
  };
  std::size_t h = limb(re_.get_num());
  h = h * 1000003u ^ limb(re_.get_den());
  h = h * 1000003u ^ limb(im_.get_num());
  h = h * 1000003u ^ limb(im_.get_den());
  return h;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

bool is_positive(const GaussianRational& z) {
  return sgn(z.re()) > 0 || (sgn(z.re()) == 0 && sgn(z.im()) > 0);
}

std::strong_ordering canonical_compare(const GaussianRational& a, const GaussianRational& b) {
  auto bucket = [](const GaussianRational& z) { return is_positive(z) ? 0 : (z.is_zero() ? 1 : 2); };
  int ba = bucket(a), bb = bucket(b);
  if (ba != bb) return ba <=> bb;
  const GaussianRational x = ba == 2 ? -a : a;
  const GaussianRational y = ba == 2 ? -b : b;
  int c = cmp(x.re(), y.re());
  if (c == 0) c = cmp(x.im(), y.im());
  return c <=> 0;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational{};
  auto modulus = exact_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = exact_sqrt(Rational((z.re() + *modulus) / 2));
  if (!x) return std::nullopt;
  GaussianRational root;
  if (sgn(*x) != 0) {
    root = GaussianRational(*x, z.im() / (2 * *x));
  } else {
    auto y = exact_sqrt(Rational(-z.re()));
    if (!y) return std::nullopt;
    root = GaussianRational(0, *y);
  }
  if (root * root != z) return std::nullopt;
  if (!is_positive(root)) root = -root;
  return root;
}

GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool GaussianInteger::is_unit() const { return norm() == 1; }

namespace {

// Nearest integer to n/d for d > 0.
Integer round_div(const Integer& n, const Integer& d) {
  Integer q;
  Integer twice = 2 * n + d;
  Integer den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

bool divides(const GaussianInteger& b, const GaussianInteger& a) {
  if (b.is_zero()) return a.is_zero();
  GaussianInteger num = a * b.conj();
  Integer n = b.norm();
  return mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t());
}

GaussianInteger exact_div(const GaussianInteger& a, const GaussianInteger& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero in Z[i]");
  if (sgn(b.im) == 0) {
    if (!mpz_divisible_p(a.re.get_mpz_t(), b.re.get_mpz_t()) || !mpz_divisible_p(a.im.get_mpz_t(), b.re.get_mpz_t()))
      throw ArithmeticError("inexact division in Z[i]");
    GaussianInteger q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  GaussianInteger num = a * b.conj();
  Integer n = b.norm();
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
    throw ArithmeticError("inexact division in Z[i]");
  GaussianInteger q;
  mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
  return q;
}

GaussianInteger gauss_mod(const GaussianInteger& a, const GaussianInteger& b) {
  GaussianInteger num = a * b.conj();
  Integer n = b.norm();
  GaussianInteger q{round_div(num.re, n), round_div(num.im, n)};
  return a - q * b;
}

GaussianInteger normalizing_unit(const GaussianInteger& z) {
  // Multiply by i^k until re > 0 and im >= 0.
  if (sgn(z.re) > 0 && sgn(z.im) >= 0) return {1, 0};
  if (sgn(z.im) > 0 && sgn(z.re) <= 0) return {0, -1};
  if (sgn(z.re) < 0 && sgn(z.im) <= 0) return {-1, 0};
  return {0, 1};
}

GaussianInteger gauss_gcd(GaussianInteger a, GaussianInteger b) {
  // Pure integers stay in Z, which is the common case.
  if (sgn(a.im) == 0 && sgn(b.im) == 0) {
    Integer g = gcd(a.re, b.re);
    return {g, 0};
  }
  while (!b.is_zero()) {
    GaussianInteger r = gauss_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * normalizing_unit(a);
}

Integer denominator_lcm(const GaussianRational& z) { return lcm(z.re().get_den(), z.im().get_den()); }

}  // namespace slocc
