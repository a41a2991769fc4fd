#include "loopforge/group_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace loopforge {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_size(const std::string& token, const std::string& what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::ParseError, "expected a number for " + what + ", got '" + token + "'");
  return std::stoul(token);
}

}  // namespace

std::vector<Elem> parse_index_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<Elem> out;
  std::string tok;
  while (in >> tok) out.push_back(static_cast<Elem>(parse_size(tok, "element index")));
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupPtr parse_group_text(const std::string& text, const BuildOptions& options) {
  std::istringstream in(text);
  std::string raw;
  std::string kind;
  std::size_t size = 0;
  std::vector<std::string> body;
  std::map<std::size_t, std::string> labels;
  std::size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "format") {
      if (!kind.empty()) fail(Errc::ParseError, "duplicate format line " + std::to_string(lineNo));
      std::string n;
      ls >> kind >> n;
      if (kind != "perm" && kind != "table")
        fail(Errc::ParseError, "unknown format '" + kind + "'");
      size = parse_size(n, "format size");
    } else if (head == "label") {
      std::string idx;
      ls >> idx;
      std::string rest;
      std::getline(ls, rest);
      labels[parse_size(idx, "label index")] = strip_comment(rest);
    } else {
      if (kind.empty()) fail(Errc::ParseError, "missing format line before line " + std::to_string(lineNo));
      body.push_back(line);
    }
  }
  if (kind.empty()) fail(Errc::ParseError, "missing format line");

  GroupPtr g;
  if (kind == "perm") {
    std::vector<Perm> gens;
    for (const auto& line : body) gens.push_back(parse_cycles(size, line));
    if (gens.empty()) gens.push_back(identity_perm(size));
    g = build_from_generators(size, gens, options);
  } else {
    if (body.size() != size)
      fail(Errc::ParseError, "expected " + std::to_string(size) + " table rows, got " +
                                 std::to_string(body.size()));
    std::vector<std::vector<Elem>> table;
    for (const auto& line : body) table.push_back(parse_index_list(line));
    g = build_from_table(table, {}, options);
  }
  if (labels.empty()) return g;
  auto names = g->labels();
  for (const auto& [i, s] : labels) {
    if (i >= names.size()) fail(Errc::ParseError, "label index out of range");
    names[i] = s;
  }
  std::vector<Elem> mul(g->table().begin(), g->table().end());
  return GroupTable::trusted(g->order(), std::move(mul), std::move(names));
}

GroupPtr read_group_file(const std::filesystem::path& path, const BuildOptions& options) {
  return parse_group_text(read_text_file(path), options);
}

std::string format_group_table(const GroupTable& g) {
  std::ostringstream out;
  out << "format table " << g.order() << "\n";
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
  for (Elem a = 0; a < g.order(); ++a) out << "label " << a << " " << g.label(a) << "\n";
  return out.str();
}

}  // namespace loopforge
