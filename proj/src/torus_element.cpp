#include "rtk/torus_element.hpp"

#include <set>
#include <sstream>

#include "rtk/errors.hpp"

namespace rtk {

namespace {

Rat mod1(Rat q) {
  Int n = numerator(q), d = denominator(q);
  Int r = n % d;
  if (r < 0) r += d;
  return Rat(r, d);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw malformed_element("bad rational '" + s + "'");
  }
}

}  // namespace

Unit Unit::from_rational(const Rat& r) {
  if (r == 0) throw malformed_element("torus entries must be nonzero");
  Unit u;
  if (r < 0) {
    u.magnitude = -r;
    u.rotation = Rat(1, 2);
  } else {
    u.magnitude = r;
  }
  return u;
}

Unit Unit::parse(const std::string& s) {
  auto at = s.find('@');
  Unit u = from_rational(parse_rat(at == std::string::npos ? s : s.substr(0, at)));
  if (at != std::string::npos) u.rotation = mod1(u.rotation + parse_rat(s.substr(at + 1)));
  return u;
}

Unit Unit::operator*(const Unit& o) const {
  return {magnitude * o.magnitude, mod1(rotation + o.rotation)};
}

Unit Unit::inverse() const { return {Rat(1) / magnitude, mod1(-rotation)}; }

std::string Unit::str() const {
  std::ostringstream out;
  if (rotation == Rat(1, 2)) out << "-" << magnitude;
  else {
    out << magnitude;
    if (rotation != 0) out << "@" << rotation;
  }
  return out.str();
}

TorusElement parse_torus_element(SimpleType type, const std::string& csv) {
  TorusElement t{type, {}};
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) t.entries.push_back(Unit::parse(tok));
  return t;
}

ElementRegularity element_regularity(SimpleType type, const TorusElement& t) {
  validate(type);
  if (type.family != Family::B && type.family != Family::C && type.family != Family::D)
    throw malformed_element("element regularity applies to types B, C, D");
  const std::size_t m = static_cast<std::size_t>(type.rank);
  if (t.entries.size() != m)
    throw malformed_element("expected " + std::to_string(m) + " eigenvalues");
  for (const Unit& u : t.entries)
    if (u.magnitude <= 0) throw malformed_element("torus entries must be nonzero");

  ElementRegularity out;
  out.regular_in_H = true;
  for (std::size_t i = 0; i < m && out.regular_in_H; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if ((t.entries[i] * t.entries[j].inverse()).is_one() ||
          (t.entries[i] * t.entries[j]).is_one()) {
        out.regular_in_H = false;
        break;
      }
    }
  }
  if (out.regular_in_H) {
    for (std::size_t j = 0; j < m; ++j) {
      if (type.family == Family::C && (t.entries[j] * t.entries[j]).is_one())
        out.regular_in_H = false;
      if (type.family == Family::B && t.entries[j].is_one()) out.regular_in_H = false;
    }
  }

  std::vector<Unit> eigen;
  for (const Unit& u : t.entries) eigen.push_back(u);
  if (type.family == Family::B) eigen.push_back(Unit::one());
  for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it)
    eigen.push_back(it->inverse());
  out.regular_in_GL = true;
  for (std::size_t i = 0; i < eigen.size() && out.regular_in_GL; ++i)
    for (std::size_t j = i + 1; j < eigen.size(); ++j)
      if (eigen[i] == eigen[j]) {
        out.regular_in_GL = false;
        break;
      }
  return out;
}

}  // namespace rtk
