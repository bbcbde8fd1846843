#include "slocc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace slocc {

Monomial Monomial::variable(int k, unsigned power) {
  Monomial m;
  m.set(k, power);
  return m;
}

void Monomial::set(int k, unsigned e) {
  if (k < 0 || k >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e > 255) throw ArithmeticError("exponent overflow");
  auto& slot = exps_[static_cast<std::size_t>(k)];
  degree_ = degree_ - slot + e;
  slot = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int k = 0; k < kMaxVars; ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (int k = 0; k < kMaxVars; ++k) q.exps_[k] = static_cast<std::uint8_t>(other.exps_[k] - exps_[k]);
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l;
  for (int k = 0; k < kMaxVars; ++k) {
    l.exps_[k] = std::max(exps_[k], other.exps_[k]);
    l.degree_ += l.exps_[k];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int k = 0; k < kMaxVars; ++k)
    if (exps_[k] != 0 && other.exps_[k] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial p;
  for (int k = 0; k < kMaxVars; ++k) {
    unsigned e = unsigned{a.exps_[k]} + b.exps_[k];
    if (e > 255) throw ArithmeticError("exponent overflow");
    p.exps_[k] = static_cast<std::uint8_t>(e);
  }
  p.degree_ = a.degree_ + b.degree_;
  return p;
}

std::size_t Monomial::hash() const {
  std::size_t h = degree_;
  for (auto e : exps_) h = h * 131 + e;
  return h;
}

Ring::Ring(int nvars, MonomialOrder order, int block_size) : nvars_(nvars), order_(order), block_size_(block_size) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
  if (order == MonomialOrder::block && (block_size <= 0 || block_size >= nvars))
    throw std::invalid_argument("block order needs 0 < block size < variable count");
  for (int k = 0; k < nvars; ++k) names_.push_back("x" + std::to_string(k + 1));
}

Ring::Ring(std::vector<std::string> names, MonomialOrder order, int block_size)
    : Ring(static_cast<int>(names.size()), order, block_size) {
  names_ = std::move(names);
}

Ring Ring::with_order(MonomialOrder order, int block_size) const {
  Ring r(names_, order, block_size);
  return r;
}

namespace {

int degrevlex_compare(const Monomial& a, const Monomial& b, int from, int to) {
  unsigned da = 0, db = 0;
  for (int k = from; k < to; ++k) {
    da += a[k];
    db += b[k];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int k = to - 1; k >= from; --k)
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  return 0;
}

}  // namespace

int Ring::compare(const Monomial& a, const Monomial& b) const {
  switch (order_) {
    case MonomialOrder::lex:
      for (int k = 0; k < nvars_; ++k)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
      return 0;
    case MonomialOrder::degrevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (int k = nvars_ - 1; k >= 0; --k)
        if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
      return 0;
    case MonomialOrder::block:
      if (int c = degrevlex_compare(a, b, 0, block_size_); c != 0) return c;
      return degrevlex_compare(a, b, block_size_, nvars_);
  }
  return 0;
}

MultiPoly::MultiPoly(Ring ring, const GaussianRational& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, constant});
}

MultiPoly::MultiPoly(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize_terms();
}

void MultiPoly::normalize_terms() {
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ring_.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

MultiPoly MultiPoly::variable(const Ring& ring, int k) {
  if (k < 0 || k >= ring.nvars()) throw std::out_of_range("variable index out of range");
  MultiPoly p(ring);
  p.terms_.push_back({Monomial::variable(k), 1});
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0); }

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

GaussianRational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return {};
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("polynomial ring mismatch");
}

namespace {

// Merge two descending term lists, negating b when subtracting.
std::vector<Term> merge_terms(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      GaussianRational s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_ring(rhs);
  terms_ = merge_terms(ring_, terms_, rhs.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_ring(rhs);
  terms_ = merge_terms(ring_, terms_, rhs.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].monomial == b.terms_[k].monomial) || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  return true;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coeff);
  std::unordered_map<Monomial, GaussianRational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  return MultiPoly(a.ring_, std::move(terms));
}

MultiPoly MultiPoly::times_term(const Monomial& m, const GaussianRational& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(ring_, GaussianRational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly pow(const MultiPoly& p, unsigned e) { return p.pow(e); }

GaussianRational MultiPoly::eval(std::span<const GaussianRational> point) const {
  if (static_cast<int>(point.size()) != ring_.nvars()) throw std::invalid_argument("evaluation point has wrong length");
  // Powers are cached per variable since invariant evaluation is hot.
  std::vector<std::vector<GaussianRational>> powers(point.size());
  GaussianRational sum;
  for (const auto& t : terms_) {
    GaussianRational v = t.coeff;
    for (int k = 0; k < ring_.nvars() && !v.is_zero(); ++k) {
      unsigned e = t.monomial[k];
      if (e == 0) continue;
      auto& pk = powers[static_cast<std::size_t>(k)];
      if (pk.empty()) pk.push_back(1);
      while (pk.size() <= e) pk.push_back(pk.back() * point[static_cast<std::size_t>(k)]);
      v *= pk[e];
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::partial_derivative(int k) const {
  if (k < 0 || k >= ring_.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[k];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(k, e - 1);
    terms.push_back({m, t.coeff * GaussianRational(static_cast<long>(e))});
  }
  return MultiPoly(ring_, std::move(terms));
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> values, const Ring& target) const {
  if (static_cast<int>(values.size()) != ring_.nvars()) throw std::invalid_argument("substitution has wrong length");
  for (const auto& v : values)
    if (!(v.ring() == target)) throw std::invalid_argument("polynomial ring mismatch");
  std::vector<std::vector<MultiPoly>> powers(values.size());
  MultiPoly sum(target);
  for (const auto& t : terms_) {
    MultiPoly prod(target, t.coeff);
    for (int k = 0; k < ring_.nvars() && !prod.is_zero(); ++k) {
      unsigned e = t.monomial[k];
      if (e == 0) continue;
      auto& pk = powers[static_cast<std::size_t>(k)];
      if (pk.empty()) pk.emplace_back(target, GaussianRational(1));
      while (pk.size() <= e) pk.push_back(pk.back() * values[static_cast<std::size_t>(k)]);
      prod = prod * pk[e];
    }
    sum += prod;
  }
  return sum;
}

MultiPoly MultiPoly::in_ring(const Ring& ring) const {
  if (ring.nvars() != ring_.nvars()) throw std::invalid_argument("polynomial ring mismatch");
  return MultiPoly(ring, terms_);
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * terms_.front().coeff.inverse();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool compound = !t.coeff.is_real() && sgn(t.coeff.re()) != 0;
    bool negative = !compound && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (compound) c = "(" + c + ")";
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << "-";
    first = false;
    bool unit = c == "1";
    if (t.monomial.degree() == 0) {
      os << c;
      continue;
    }
    if (!unit) os << c << "*";
    bool first_var = true;
    for (int k = 0; k < ring_.nvars(); ++k) {
      unsigned e = t.monomial[k];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_.name(k);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace slocc

namespace slocc {

namespace {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end]))) ++end;
    std::string token(text_.substr(std::min(pos_, text_.size()), end - std::min(pos_, text_.size())));
    if (token.empty()) token = "<end>";
    throw ParseError("polynomial: " + what + " at '" + token + "'", token);
  }

  MultiPoly expr() {
    MultiPoly sum(ring_);
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    for (;;) {
      MultiPoly t = term();
      sum += negative ? -t : t;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        return sum;
    }
  }

  MultiPoly term() {
    MultiPoly p = power();
    while (accept('*')) p = p * power();
    return p;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) base = base.pow(integer());
    return base;
  }

  unsigned integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("expected a term");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer num(std::string(text_.substr(start, pos_ - start)));
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t d = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (d == pos_) fail("expected a denominator");
        den = Integer(std::string(text_.substr(d, pos_ - d)));
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return MultiPoly(ring_, GaussianRational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_.names();
      auto it = std::find(names.begin(), names.end(), name);
      if (it != names.end()) return MultiPoly::variable(ring_, static_cast<int>(it - names.begin()));
      if (name == "i") return MultiPoly(ring_, GaussianRational::imaginary_unit());
      pos_ = start;
      fail("unknown variable");
    }
    fail("unexpected character");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(const Ring& ring, std::string_view text) { return PolyParser(ring, text).run(); }

}  // namespace slocc
