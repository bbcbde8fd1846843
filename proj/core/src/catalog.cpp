#include "slocc/catalog.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "catalog_data.hpp"
#include "slocc/jordan.hpp"
#include "slocc/weyl.hpp"

namespace slocc {

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::nilpotent: return "nilpotent";
    case ClassKind::semisimple: return "semisimple";
    case ClassKind::mixed: return "mixed";
  }
  return "?";
}

std::string OrbitClassLabel::name() const {
  switch (kind) {
    case ClassKind::nilpotent: return "nilpotent/" + std::to_string(index);
    case ClassKind::semisimple: return "semisimple/" + std::to_string(family);
    case ClassKind::mixed: return "mixed/" + std::to_string(family) + "," + std::to_string(index);
  }
  return "?";
}

OrbitClassLabel OrbitClassLabel::parse(const std::string& name) {
  auto slash = name.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("unknown class label: " + name);
  std::string kind = name.substr(0, slash);
  std::string rest = name.substr(slash + 1);
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
      throw std::invalid_argument("unknown class label: " + name);
    return std::stoi(s);
  };
  OrbitClassLabel l;
  if (kind == "nilpotent") {
    l.kind = ClassKind::nilpotent;
    l.index = number(rest);
  } else if (kind == "semisimple") {
    l.kind = ClassKind::semisimple;
    l.family = number(rest);
  } else if (kind == "mixed") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("unknown class label: " + name);
    l.kind = ClassKind::mixed;
    l.family = number(rest.substr(0, comma));
    l.index = number(rest.substr(comma + 1));
  } else {
    throw std::invalid_argument("unknown class label: " + name);
  }
  static constexpr int part_counts[] = {0, 0, 1, 2, 4, 4, 4, 6, 6, 6, 13};
  bool valid = l.kind == ClassKind::nilpotent    ? l.index >= 1 && l.index <= 31
               : l.kind == ClassKind::semisimple ? l.family >= 1 && l.family <= 10
                                                 : l.family >= 2 && l.family <= 10 && l.index >= 1 &&
                                                       l.index <= part_counts[l.family];
  if (!valid) throw std::invalid_argument("no such class: " + name);
  return l;
}

std::vector<SL2Quad> parse_generators(const std::string& text) {
  std::vector<SL2Quad> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("generator list: " + what, text.substr(std::min(pos, text.size())));
  };
  auto symbol = [&](char c) -> Mat2 {
    switch (c) {
      case 'I': return mat::I();
      case 'J': return mat::J();
      case 'K': return mat::K();
      case 'L': return mat::L();
      default: fail("unknown symbol");
    }
    return {};
  };
  while (pos < text.size()) {
    if (text[pos] == ',' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::array<Mat2, 4> f;
    for (int k = 0; k < 4; ++k) {
      bool negative = pos < text.size() && text[pos] == '-';
      if (negative) ++pos;
      if (pos >= text.size()) fail("unexpected end");
      f[k] = symbol(text[pos++]);
      if (negative) f[k] = -f[k];
      char expected = k < 3 ? ',' : ')';
      if (pos >= text.size() || text[pos] != expected) fail(std::string("expected '") + expected + "'");
      ++pos;
    }
    out.emplace_back(f);
  }
  return out;
}

namespace {

StabilizerDescriptor descriptor(const data::StabilizerRow& row) {
  StabilizerDescriptor d;
  d.tabulated = true;
  d.anchor = row.anchor;
  d.identity_component = row.component.text;
  for (const char* p : row.component.parameters) d.parameter_names.emplace_back(p);
  d.parameter_nonzero = row.component.nonzero;
  d.identity_component_dim = row.component.dim;
  d.identity_element = row.component.build;
  std::string gens = row.generators;
  if (!gens.empty()) {
    d.component_generators = parse_generators(gens);
    std::size_t start = 0;
    while (start < gens.size()) {
      std::size_t end = gens.find(')', start);
      d.generator_text.push_back(gens.substr(start, end + 1 - start));
      start = end + 1;
      while (start < gens.size() && (gens[start] == ',' || gens[start] == ' ')) ++start;
    }
  }
  return d;
}

StabilizerDescriptor untabulated(const StateVector& rep) {
  StabilizerDescriptor d;
  d.identity_component = "not tabulated";
  d.identity_component_dim = centralizer(rep).dim_even;
  return d;
}

StabilizerDescriptor whole_group() {
  StabilizerDescriptor d;
  d.identity_component = "SL(2)^4";
  d.identity_component_dim = 12;
  return d;
}

std::vector<GaussianRational> default_parameters(int family) {
  switch (family) {
    case 1: return {2, 3, 4, 7};
    case 2: return {1, 2, 4};
    case 3:
    case 4:
    case 5:
    case 6: return {1, 2};
    case 11: return {};
    default: return {1};
  }
}

std::string family_formula(int family) {
  int n = family_parameter_count(family);
  if (n == 0) return "0";
  std::string out;
  for (int k = 0; k < n; ++k) {
    std::vector<GaussianRational> unit(static_cast<std::size_t>(n));
    unit[static_cast<std::size_t>(k)] = 1;
    CartanPoint p = family_point(family, unit);
    std::string inner;
    int terms = 0;
    for (int j = 0; j < 4; ++j) {
      if (p[j].is_zero()) continue;
      std::string u = "u" + std::to_string(j + 1);
      if (terms == 0)
        inner += (p[j] == GaussianRational(-1) ? "-" : "") + u;
      else
        inner += (p[j] == GaussianRational(-1) ? " - " : " + ") + u;
      ++terms;
    }
    if (k > 0) out += " + ";
    out += "l" + std::to_string(k + 1) + "*" + (terms > 1 ? "(" + inner + ")" : inner);
  }
  return out;
}

std::string d_tag(int k) { return "D" + std::to_string(k); }

StateVector representative_in(const Catalog& cat, const OrbitClassLabel& label,
                              const std::vector<GaussianRational>& params);
std::string s_class_in(const Catalog& cat, const OrbitClassLabel& label);

}  // namespace

int s_representative_family(int family) {
  if (family == 5 || family == 6) return 4;
  if (family == 8 || family == 9) return 7;
  return family;
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

Catalog::Catalog() {
  build_parts();
  build_g0();
  build_s();
}

void Catalog::build_parts() {
  for (const auto& row : data::nilpotent_orbit_rows())
    orbits_.push_back(std::string_view(row.representative) == "0" ? StateVector() : StateVector::parse(row.representative));
  parts_.assign(kNumFamilies + 1, {});
  part_targets_.assign(kNumFamilies + 1, {});
  for (const auto& row : data::mixed_part_rows()) {
    if (static_cast<int>(parts_[row.i].size()) != row.j - 1) throw std::logic_error("nilpotent parts out of order");
    parts_[row.i].push_back(StateVector::parse(row.element));
    part_targets_[row.i].push_back(row.n_family);
  }
  for (int i : {5, 6, 8, 9}) {
    int base = s_representative_family(i);
    if (parts_[i].size() != parts_[base].size()) throw std::logic_error("permuted family has a different part count");
    part_targets_[i] = part_targets_[base];
  }
  for (const auto& row : data::d_family_rows())
    d_nilpotents_.push_back(std::string_view(row.nilpotent) == "0" ? StateVector() : StateVector::parse(row.nilpotent));
}

void Catalog::build_g0() {
  const auto& nil_rows = data::nilpotent_s_class_rows();
  for (int k = 1; k <= 31; ++k) {
    CatalogEntry e;
    e.level = Level::G0;
    e.label.kind = ClassKind::nilpotent;
    e.label.index = k;
    e.name = e.label.name();
    e.anchor = "table:nilpotent-orbits#" + std::to_string(k);
    e.description = orbits_[k - 1].to_string();
    e.d_family = d_tag(orbit_n_family(k));
    e.s_class = "N" + std::to_string(orbit_n_family(k));
    if (k == 31) {
      e.stabilizer = whole_group();
    } else {
      e.stabilizer = untabulated(orbits_[k - 1]);
      for (const auto& row : nil_rows)
        if (row.orbit == k) e.stabilizer = descriptor(row.stabilizer);
    }
    g0_.push_back(std::move(e));
  }
  const auto& ss_rows = data::semisimple_stabilizer_rows();
  for (int i = 1; i <= 10; ++i) {
    CatalogEntry e;
    e.level = Level::G0;
    e.label.kind = ClassKind::semisimple;
    e.label.family = i;
    e.name = e.label.name();
    e.anchor = "table:semisimple-families#" + std::to_string(i);
    e.description = family_formula(i);
    e.parameter_count = family_parameter_count(i);
    e.default_parameters = default_parameters(i);
    e.constraint = family_condition_text(i);
    e.d_family = "D1";
    e.s_class = "SS" + std::to_string(s_representative_family(i));
    e.stabilizer = descriptor(ss_rows[static_cast<std::size_t>(i - 1)]);
    g0_.push_back(std::move(e));
  }
  const auto& mt_rows = data::mixed_s_class_rows();
  for (int i = 2; i <= 10; ++i)
    for (int j = 1; j <= mixed_count(i); ++j) {
      CatalogEntry e;
      e.level = Level::G0;
      e.label.kind = ClassKind::mixed;
      e.label.family = i;
      e.label.index = j;
      e.name = e.label.name();
      e.anchor = "list:nilpotent-parts#" + std::to_string(i) + "," + std::to_string(j);
      e.description = family_formula(i) + " + " + nilpotent_part(i, j).to_string();
      e.parameter_count = family_parameter_count(i);
      e.default_parameters = default_parameters(i);
      e.constraint = family_condition_text(i);
      e.d_family = d_tag(part_n_family(i, j));
      e.s_class = s_class_in(*this, e.label);
      e.stabilizer = untabulated(representative_in(*this, e.label, e.default_parameters));
      for (const auto& row : mt_rows)
        if (row.i == i && row.j == j) e.stabilizer = descriptor(row.stabilizer);
      g0_.push_back(std::move(e));
    }
}

void Catalog::build_s() {
  {
    CatalogEntry e;
    e.level = Level::S;
    e.name = "N1";
    e.label.kind = ClassKind::nilpotent;
    e.label.index = 31;
    e.anchor = "table:d-families#D1";
    e.description = "0";
    e.s_class = "N1";
    e.d_family = "D1";
    e.stabilizer = whole_group();
    s_.push_back(std::move(e));
  }
  for (const auto& row : data::nilpotent_s_class_rows()) {
    CatalogEntry e;
    e.level = Level::S;
    e.name = "N" + std::to_string(row.n_family);
    e.label.kind = ClassKind::nilpotent;
    e.label.index = row.orbit;
    e.anchor = row.stabilizer.anchor;
    e.description = nilpotent_orbit(row.orbit).to_string();
    e.s_class = e.name;
    e.d_family = d_tag(row.n_family);
    e.stabilizer = descriptor(row.stabilizer);
    s_.push_back(std::move(e));
  }
  const auto& ss_rows = data::semisimple_stabilizer_rows();
  int n = 0;
  for (const auto& row : data::semisimple_s_class_rows()) {
    ++n;
    CatalogEntry e;
    e.level = Level::S;
    e.name = "SS" + std::to_string(row.family);
    e.label.kind = ClassKind::semisimple;
    e.label.family = row.family;
    e.anchor = "table:semisimple-s-classes#" + std::to_string(n);
    e.description = family_formula(row.family);
    e.parameter_count = family_parameter_count(row.family);
    e.default_parameters = default_parameters(row.family);
    e.constraint = family_condition_text(row.family) + "; up to " + row.group;
    e.s_class = e.name;
    e.d_family = "D1";
    e.stabilizer = descriptor(ss_rows[static_cast<std::size_t>(row.family - 1)]);
    s_.push_back(std::move(e));
  }
  for (const auto& row : data::mixed_s_class_rows()) {
    CatalogEntry e;
    e.level = Level::S;
    e.name = "MT" + std::to_string(row.i) + "." + std::to_string(row.j);
    e.label.kind = ClassKind::mixed;
    e.label.family = row.i;
    e.label.index = row.j;
    e.anchor = row.stabilizer.anchor;
    e.description = family_formula(row.i) + " + " + nilpotent_part(row.i, row.j).to_string();
    e.parameter_count = family_parameter_count(row.i);
    e.default_parameters = default_parameters(row.i);
    e.constraint = family_condition_text(row.i);
    e.s_class = e.name;
    e.d_family = d_tag(row.n_family);
    e.stabilizer = descriptor(row.stabilizer);
    if (row.n_family != part_n_family(row.i, row.j)) throw std::logic_error("inconsistent family tag for " + e.name);
    s_.push_back(std::move(e));
  }
  for (auto& e : g0_) e.label.s_class = e.s_class;
  for (auto& e : s_) e.label.s_class = e.s_class;
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto* list : {&g0_, &s_})
    for (const auto& e : *list)
      if (e.name == name) return &e;
  return nullptr;
}

Census Catalog::census(Level level) const {
  Census c;
  for (const auto& e : entries(level)) {
    switch (e.label.kind) {
      case ClassKind::nilpotent: ++c.nilpotent; break;
      case ClassKind::semisimple: ++c.semisimple; break;
      case ClassKind::mixed: ++c.mixed; break;
    }
  }
  return c;
}

int Catalog::mixed_count(int family) const {
  if (family < 2 || family > 10) return 0;
  return static_cast<int>(parts_[static_cast<std::size_t>(family)].size());
}

const StateVector& Catalog::nilpotent_part(int family, int j) const {
  if (j < 1 || j > mixed_count(family))
    throw std::out_of_range("no nilpotent part (" + std::to_string(family) + "," + std::to_string(j) + ")");
  return parts_[static_cast<std::size_t>(family)][static_cast<std::size_t>(j - 1)];
}

const StateVector& Catalog::nilpotent_orbit(int k) const {
  if (k < 1 || k > 31) throw std::out_of_range("nilpotent orbit must be 1..31");
  return orbits_[static_cast<std::size_t>(k - 1)];
}

const StateVector& Catalog::d_family_nilpotent(int k) const {
  if (k < 1 || k > 9) throw std::out_of_range("D-family must be 1..9");
  return d_nilpotents_[static_cast<std::size_t>(k - 1)];
}

int Catalog::orbit_n_family(int orbit) const {
  if (orbit < 1 || orbit > 31) throw std::out_of_range("nilpotent orbit must be 1..31");
  return data::nilpotent_orbit_rows()[static_cast<std::size_t>(orbit - 1)].n_family;
}

int Catalog::part_n_family(int family, int j) const {
  nilpotent_part(family, j);
  return part_targets_[static_cast<std::size_t>(family)][static_cast<std::size_t>(j - 1)];
}

bool Catalog::part_n_family_tabulated(int family, int j) const {
  nilpotent_part(family, j);
  return family == 2 || family == 3 || family == 4 || family == 7 || family == 10;
}

namespace {

StateVector representative_in(const Catalog& cat, const OrbitClassLabel& label,
                              const std::vector<GaussianRational>& params) {
  auto semisimple_part = [&](int family) {
    if (family < 1 || family > kNumFamilies) throw std::invalid_argument("family must be 1..11");
    if (static_cast<int>(params.size()) != family_parameter_count(family))
      throw std::invalid_argument("family " + std::to_string(family) + " takes " +
                                  std::to_string(family_parameter_count(family)) + " parameters");
    CartanPoint p = family_point(family, params);
    if (!in_canonical_open_set(family, p))
      throw std::invalid_argument("parameters violate the condition of family " + std::to_string(family) + ": " +
                                  family_condition_text(family));
    return cartan_element(p);
  };
  switch (label.kind) {
    case ClassKind::nilpotent:
      if (!params.empty()) throw std::invalid_argument("nilpotent classes take no parameters");
      return cat.nilpotent_orbit(label.index);
    case ClassKind::semisimple:
      return semisimple_part(label.family);
    case ClassKind::mixed:
      if (cat.mixed_count(label.family) == 0) throw std::invalid_argument("family " + std::to_string(label.family) + " has no mixed classes");
      return semisimple_part(label.family) + cat.nilpotent_part(label.family, label.index);
  }
  throw std::invalid_argument("bad label");
}

std::string s_class_in(const Catalog& cat, const OrbitClassLabel& label) {
  switch (label.kind) {
    case ClassKind::nilpotent: return "N" + std::to_string(cat.orbit_n_family(label.index));
    case ClassKind::semisimple:
      if (label.family == 11) return "N1";
      return "SS" + std::to_string(s_representative_family(label.family));
    case ClassKind::mixed: {
      int base = s_representative_family(label.family);
      int target = cat.part_n_family(label.family, label.index);
      for (const auto& row : data::mixed_s_class_rows())
        if (row.i == base && row.n_family == target) return "MT" + std::to_string(row.i) + "." + std::to_string(row.j);
      throw std::logic_error("no S-class for " + label.name());
    }
  }
  return "?";
}

}  // namespace

StateVector representative(const OrbitClassLabel& label, const std::vector<GaussianRational>& params) {
  return representative_in(Catalog::instance(), label, params);
}

StateVector representative(const OrbitClassLabel& label) {
  if (label.kind == ClassKind::nilpotent) return representative(label, {});
  return representative(label, label.parameters.empty() ? default_parameters(label.family) : label.parameters);
}

const StabilizerDescriptor& stabilizer_of(const OrbitClassLabel& label) {
  const CatalogEntry* e = Catalog::instance().find(label.name());
  if (e == nullptr || e->level != Level::G0) throw std::invalid_argument("unknown class " + label.name());
  return e->stabilizer;
}

std::string s_class_of(const OrbitClassLabel& label) { return s_class_in(Catalog::instance(), label); }

std::string d_family_of(const OrbitClassLabel& label) {
  const Catalog& cat = Catalog::instance();
  switch (label.kind) {
    case ClassKind::nilpotent: return d_tag(cat.orbit_n_family(label.index));
    case ClassKind::semisimple: return "D1";
    case ClassKind::mixed: return d_tag(cat.part_n_family(label.family, label.index));
  }
  return "?";
}

Census list_classes(Level level) { return Catalog::instance().census(level); }

CheckReport stabilizer_selfcheck() {
  CheckReport report{"stabiliser self-check", 0, {}};
  static const std::array<GaussianRational, 5> nonzero_pool{GaussianRational(2), GaussianRational::ratio(-1, 3),
                                                            GaussianRational(1, 1), GaussianRational::ratio(3, 2),
                                                            GaussianRational(0, -2)};
  static const std::array<GaussianRational, 5> any_pool{GaussianRational(0), GaussianRational(1),
                                                        GaussianRational::ratio(-5, 2), GaussianRational(0, 1),
                                                        GaussianRational(3, -1)};
  const Catalog& cat = Catalog::instance();
  for (Level level : {Level::G0, Level::S})
    for (const auto& e : cat.entries(level)) {
      const StabilizerDescriptor& d = e.stabilizer;
      if (!d.tabulated) continue;
      StateVector rep = representative(e.label, e.default_parameters);
      std::string where = e.name + " [" + d.anchor + "]";
      for (std::size_t g = 0; g < d.component_generators.size(); ++g)
        report.expect(group_act(d.component_generators[g], rep) == rep,
                      where + ": generator " + d.generator_text[g] + " does not fix the representative");
      if (d.identity_component_dim > 0) {
        for (int s = 0; s < 4; ++s) {
          std::vector<GaussianRational> values;
          for (std::size_t k = 0; k < d.parameter_names.size(); ++k) {
            std::size_t slot = (static_cast<std::size_t>(s) + 2 * k) % 5;
            values.push_back(d.parameter_nonzero[k] ? nonzero_pool[slot] : any_pool[slot]);
          }
          SL2Quad g = d.identity_element(values);
          report.expect(group_act(g, rep) == rep,
                        where + ": identity component sample " + std::to_string(s + 1) + " does not fix the representative");
        }
      }
      report.expect(d.identity_component_dim == centralizer(rep).dim_even,
                    where + ": identity component dimension " + std::to_string(d.identity_component_dim) +
                        " differs from dim z_g0 = " + std::to_string(centralizer(rep).dim_even));
    }
  return report;
}

}  // namespace slocc
