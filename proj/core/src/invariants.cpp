#include "slocc/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "invariant_data.hpp"
#include "slocc/weyl.hpp"

namespace slocc {

const GaussianRational& InvariantSignature::operator[](int k) const {
  switch (k) {
    case 0: return H;
    case 1: return L;
    case 2: return M;
    case 3: return D;
    default: throw std::out_of_range("signature index must be 0..3");
  }
}

std::string InvariantSignature::to_string() const {
  return "(" + H.to_string() + ", " + L.to_string() + ", " + M.to_string() + ", " + D.to_string() + ")";
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

MultiPoly parse_monomial_list(const Ring& ring, const data::InvariantRecord& rec) {
  std::string_view text(rec.monomials);
  if (fnv1a(text) != rec.checksum) throw std::logic_error(std::string("checksum mismatch in invariant ") + rec.name);
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    GaussianRational sign(1);
    if (!item.empty() && item.front() == '-') {
      sign = GaussianRational(-1);
      item.remove_prefix(1);
    }
    Monomial m;
    int degree = 0;
    std::size_t p = 0;
    while (p < item.size()) {
      std::size_t q = item.find('.', p);
      if (q == std::string_view::npos) q = item.size();
      int index = std::stoi(std::string(item.substr(p, q - p)));
      if (index < 1 || index > kOddDim) throw std::logic_error(std::string("bad variable index in invariant ") + rec.name);
      m.set(index - 1, m[index - 1] + 1);
      ++degree;
      p = q + 1;
    }
    if (degree != rec.degree) throw std::logic_error(std::string("monomial of wrong degree in invariant ") + rec.name);
    terms.push_back({m, sign});
    pos = end + 1;
  }
  if (static_cast<int>(terms.size()) != rec.terms)
    throw std::logic_error(std::string("wrong term count in invariant ") + rec.name);
  return MultiPoly(ring, std::move(terms));
}

// Amplitudes of the family's parametrised point, as polynomials in l1..l4.
std::array<MultiPoly, kOddDim> family_amplitudes(int label) {
  const Ring& ring = parameter_ring();
  std::array<MultiPoly, 4> coords{MultiPoly(ring), MultiPoly(ring), MultiPoly(ring), MultiPoly(ring)};
  int n = family_parameter_count(label);
  for (int k = 0; k < n; ++k) {
    std::vector<GaussianRational> unit(static_cast<std::size_t>(n));
    unit[static_cast<std::size_t>(k)] = 1;
    CartanPoint p = family_point(label, unit);
    for (int j = 0; j < 4; ++j)
      if (!p[j].is_zero()) coords[j] += p[j] * MultiPoly::variable(ring, k);
  }
  std::array<MultiPoly, kOddDim> amps;
  amps.fill(MultiPoly(ring));
  for (int j = 0; j < 4; ++j) {
    StateVector u = cartan(j + 1);
    for (int k = 0; k < kOddDim; ++k)
      if (!u[k].is_zero()) amps[k] += u[k] * coords[j];
  }
  return amps;
}

}  // namespace

InvariantSet::InvariantSet() : ring_(kOddDim) {
  const auto& records = data::invariant_records();
  for (int k = 0; k < 4; ++k) {
    polys_[k] = parse_monomial_list(ring_, records[k]);
    if (!polys_[k].is_homogeneous()) throw std::logic_error(std::string("invariant is not homogeneous: ") + records[k].name);
  }
}

const InvariantSet& InvariantSet::instance() {
  static const InvariantSet set;
  return set;
}

const InvariantSet& load_invariants() { return InvariantSet::instance(); }

InvariantSignature evaluate_signature(const StateVector& x) {
  const auto& inv = InvariantSet::instance();
  const auto& amps = x.amplitudes();
  std::span<const GaussianRational> point(amps.data(), amps.size());
  return {inv[0].eval(point), inv[1].eval(point), inv[2].eval(point), inv[3].eval(point)};
}

const Ring& parameter_ring() {
  static const Ring ring(std::vector<std::string>{"l1", "l2", "l3", "l4"});
  return ring;
}

const Ring& signature_ring() {
  static const Ring ring(std::vector<std::string>{"H", "L", "M", "D"});
  return ring;
}

CheckReport check_infinitesimal_invariance() {
  CheckReport report{"infinitesimal invariance", 0, {}};
  const auto& inv = InvariantSet::instance();
  const Ring& ring = inv.ring();
  const Algebra& alg = Algebra::instance();
  static const std::array<const char*, 3> slot{"h", "e", "f"};
  for (int a = 0; a < kEvenDim; ++a) {
    Matrix act = alg.odd_action(LieElement::basis(a));
    std::array<MultiPoly, kOddDim> image;
    for (int k = 0; k < kOddDim; ++k) {
      image[k] = MultiPoly(ring);
      for (int j = 0; j < kOddDim; ++j)
        if (!act(k, j).is_zero()) image[k] += act(k, j) * MultiPoly::variable(ring, j);
    }
    for (int p = 0; p < 4; ++p) {
      MultiPoly derivative(ring);
      for (int k = 0; k < kOddDim; ++k)
        if (!image[k].is_zero()) derivative += image[k] * inv[p].partial_derivative(k);
      report.expect(derivative.is_zero(), std::string(slot[a % 3]) + std::to_string(a / 3 + 1) + " on " +
                                               InvariantSet::names[p]);
    }
  }
  return report;
}

std::array<MultiPoly, 4> symbolic_family_values(int label) {
  auto amps = family_amplitudes(label);
  const auto& inv = InvariantSet::instance();
  std::array<MultiPoly, 4> out;
  for (int p = 0; p < 4; ++p) out[p] = inv[p].substitute(amps, parameter_ring());
  return out;
}

std::array<MultiPoly, 4> tabulated_family_values(int label) {
  if (label < 1 || label > kNumFamilies) throw std::out_of_range("family label must be 1..11");
  std::array<MultiPoly, 4> out;
  for (int p = 0; p < 4; ++p)
    out[p] = label == kNumFamilies ? MultiPoly(parameter_ring())
                                   : MultiPoly::parse(parameter_ring(), data::family_value_rows()[label][p]);
  return out;
}

CheckReport check_family_values() {
  CheckReport report{"family invariant values", 0, {}};
  for (int label = 1; label <= kNumFamilies; ++label) {
    auto computed = symbolic_family_values(label);
    auto table = tabulated_family_values(label);
    for (int p = 0; p < 4; ++p)
      report.expect(computed[p] == table[p], "family " + std::to_string(label) + " " + InvariantSet::names[p] +
                                                 ": computed " + computed[p].to_string() + ", tabulated " +
                                                 table[p].to_string());
  }
  return report;
}

std::vector<MultiPoly> relation_generators(int label) {
  if (label < 2 || label > 10) throw std::out_of_range("relation rows exist for families 2..10");
  std::vector<MultiPoly> out;
  for (const char* text : data::relation_rows()[label]) out.push_back(MultiPoly::parse(signature_ring(), text));
  return out;
}

CheckReport check_relations(int label) {
  CheckReport report{"relations of family " + std::to_string(label), 0, {}};
  auto values = tabulated_family_values(label);
  for (const auto& rel : relation_generators(label)) {
    MultiPoly residual = rel.substitute(values, parameter_ring());
    report.expect(residual.is_zero(), "family " + std::to_string(label) + ": " + rel.to_string() + " leaves " +
                                          residual.to_string());
  }
  return report;
}

CheckReport check_all_relations() {
  CheckReport report{"invariant relations", 0, {}};
  for (int label = 2; label <= 10; ++label) report.merge(check_relations(label));
  return report;
}

}  // namespace slocc
