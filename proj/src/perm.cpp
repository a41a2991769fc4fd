#include "loopforge/perm.hpp"

#include <cctype>
#include <sstream>

#include "loopforge/error.hpp"

namespace loopforge {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<Elem>(i);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Elem>(i);
  return r;
}

bool is_permutation(std::span<const Elem> p) {
  std::vector<char> seen(p.size(), 0);
  for (Elem x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::string cycle_string(const Perm& p) {
  std::ostringstream out;
  std::vector<char> done(p.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = p[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm parse_cycles(std::size_t degree, std::string_view text) {
  Perm p = identity_perm(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::ParseError, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<Elem> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail(Errc::ParseError, "unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(Errc::ParseError, "bad character in cycle: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (v >= degree) fail(Errc::ParseError, "point " + std::to_string(v) + " out of range");
      if (used[v]) fail(Errc::ParseError, "point " + std::to_string(v) + " repeated");
      used[v] = 1;
      cycle.push_back(static_cast<Elem>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

}  // namespace loopforge
