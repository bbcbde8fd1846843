#include "slocc/unipoly.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace slocc {

UniPoly::UniPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const GaussianRational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UniPoly UniPoly::indeterminate() { return monomial(1, 1); }

UniPoly UniPoly::monomial(const GaussianRational& c, int k) {
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const GaussianRational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

GaussianRational UniPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(UniPoly a, const GaussianRational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

GaussianRational UniPoly::eval(const GaussianRational& t) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<GaussianRational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * GaussianRational(static_cast<long>(k)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    bool negative = !compound && text.front() == '-';
    if (negative) text.erase(0, 1);
    if (compound) text = "(" + text + ")";
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << "-";
    first = false;
    if (k == 0) {
      os << text;
      continue;
    }
    if (text != "1") os << text << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<GaussianRational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<GaussianRational> q(static_cast<std::size_t>(a.degree() - db + 1));
  GaussianRational inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    GaussianRational c = r[static_cast<std::size_t>(k)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0(1), s1;
  UniPoly t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  GaussianRational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw ArithmeticError("squarefree part of the zero polynomial");
  UniPoly g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_integer(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n <= 1) return;
  Integer m = n;
  for (unsigned long p = 2; p < 10000 && p * p <= m; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  if (m == 1) return;
  std::vector<Integer> stack{m};
  while (!stack.empty()) {
    Integer x = stack.back();
    stack.pop_back();
    if (x == 1) continue;
    if (mpz_probab_prime_p(x.get_mpz_t(), 30) != 0) {
      ++out[x];
      continue;
    }
    Integer d = pollard_rho(x);
    stack.push_back(d);
    stack.push_back(x / d);
  }
}

// A Gaussian prime above the rational prime p (p = 2 or p = 1 mod 4).
GaussianInteger split_prime(const Integer& p) {
  if (p == 2) return {1, 1};
  Integer e = (p - 1) / 4;
  for (unsigned long c = 2;; ++c) {
    Integer t;
    Integer base(c);
    mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    Integer sq = t * t + 1;
    if (mpz_divisible_p(sq.get_mpz_t(), p.get_mpz_t())) return gauss_gcd(GaussianInteger{p, 0}, GaussianInteger{t, 1});
  }
}

}  // namespace

std::vector<GaussianInteger> gaussian_divisors(const GaussianInteger& z) {
  if (z.is_zero()) throw ArithmeticError("divisors of zero");
  std::map<Integer, unsigned> rational;
  factor_integer(z.norm(), rational);
  std::vector<std::pair<GaussianInteger, unsigned>> primes;
  GaussianInteger rest = z;
  auto take = [&](const GaussianInteger& pi) {
    unsigned e = 0;
    while (divides(pi, rest)) {
      rest = exact_div(rest, pi);
      ++e;
    }
    if (e > 0) primes.emplace_back(pi, e);
  };
  for (const auto& [p, mult] : rational) {
    (void)mult;
    if (p == 2) {
      take({1, 1});
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      take({p, 0});
    } else {
      GaussianInteger pi = split_prime(p);
      take(pi);
      GaussianInteger other = pi.conj();
      take(other * normalizing_unit(other));
    }
  }
  std::vector<GaussianInteger> divisors{GaussianInteger{1, 0}};
  for (const auto& [pi, e] : primes) {
    std::size_t n = divisors.size();
    GaussianInteger power{1, 0};
    for (unsigned k = 1; k <= e; ++k) {
      power = power * pi;
      for (std::size_t j = 0; j < n; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  for (auto& d : divisors) d = d * normalizing_unit(d);
  return divisors;
}

std::vector<GaussianRational> gaussian_rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw ArithmeticError("roots of the zero polynomial");
  std::vector<GaussianRational> roots;
  // Strip the factor T^k.
  std::size_t low = 0;
  while (f.coeffs()[low].is_zero()) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<GaussianRational> rest(f.coeffs().begin() + static_cast<std::ptrdiff_t>(low), f.coeffs().end());
  UniPoly g(rest);
  if (g.degree() >= 1) {
    Integer den = 1;
    for (const auto& c : g.coeffs()) den = lcm(den, denominator_lcm(c));
    auto integral = [&](const GaussianRational& c) {
      GaussianRational s = c * GaussianRational(Rational(den));
      return GaussianInteger{s.re().get_num(), s.im().get_num()};
    };
    GaussianInteger a0 = integral(g.coeffs().front());
    GaussianInteger an = integral(g.leading());
    const std::array<GaussianInteger, 4> units{GaussianInteger{1, 0}, GaussianInteger{0, 1}, GaussianInteger{-1, 0},
                                               GaussianInteger{0, -1}};
    auto numerators = gaussian_divisors(a0);
    auto denominators = gaussian_divisors(an);
    for (const auto& p : numerators) {
      for (const auto& q : denominators) {
        GaussianRational base = p.to_rational() / q.to_rational();
        for (const auto& u : units) {
          GaussianRational candidate = base * u.to_rational();
          if (std::find(roots.begin(), roots.end(), candidate) != roots.end()) continue;
          if (g.eval(candidate).is_zero()) roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return canonical_compare(a, b) < 0; });
  return roots;
}

}  // namespace slocc
