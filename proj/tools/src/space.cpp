#include "lefschetz_cli/space.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz_cli/registry.hpp"

#include <cctype>

namespace lefschetz::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::optional<int> cp_index(const std::string& t) {
  if (t.size() < 3 || t.compare(0, 2, "cp") != 0) return std::nullopt;
  int m = 0;
  for (std::size_t i = 2; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
    m = m * 10 + (t[i] - '0');
    if (m > 64) return std::nullopt;
  }
  if (m < 1) return std::nullopt;
  return m;
}

}  // namespace

Space parse_space(const std::string& expr) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : expr) {
    if (ch == 'x' || ch == '*') {
      tokens.push_back(trim(cur));
      cur.clear();
    } else {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
  }
  tokens.push_back(trim(cur));

  Space s;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.empty()) throw BadParameter("empty factor in space '" + expr + "'");
    if (auto m = cp_index(t)) {
      s.factors.push_back(cp_ring(*m));
    } else if (registry_text(t)) {
      auto model = registry_model(t);
      if (i == 0) s.base = model;
      s.factors.push_back(model.ring());
    } else {
      throw BadParameter("unknown factor '" + t + "' (expected a registry name or cp<m>)");
    }
    if (!s.name.empty()) s.name += "x";
    s.name += t;
  }
  s.ring = s.factors.front();
  for (std::size_t i = 1; i < s.factors.size(); ++i) s.ring = kunneth(s.ring, s.factors[i]);
  s.ring = s.ring.renamed(s.name);
  return s;
}

ClassVector Space::lift(const ClassVector& c) const {
  ClassVector out = c;
  CohomologyRing acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = kunneth(acc, factors[i]);
    out = acc.tensor(out, factors[i].unit());
  }
  return out;
}

ClassVector Space::base_class(const std::string& text, int degree) const {
  const std::string t = trim(text);
  if (t == "0") return ring.zero(degree);
  if (!base) throw BadParameter("classes given as forms need a registry manifold as the first factor");
  const auto form = parse_form(t, base->dim(), degree);
  try {
    return lift(base->ring().class_of(form));
  } catch (const std::invalid_argument&) {
    throw BadParameter("'" + t + "' is not closed on " + base->name());
  }
}

}  // namespace lefschetz::cli
