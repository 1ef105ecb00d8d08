#include "frustra/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "frustra/errors.hpp"

namespace frustra {

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

std::vector<RawSentiment> parse_sentiments(const std::string& text) {
  std::vector<RawSentiment> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    ++lineno;

    // tokenize on whitespace and commas
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r'))
        ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',' && line[j] != '\r')
        ++j;
      if (j > i) toks.push_back(line.substr(i, j - i));
      i = j;
    }
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() < 3)
      raise(Errc::ParseError, "line " + std::to_string(lineno) + ": expected `source target value`");
    RawSentiment s;
    if (!parse_int(toks[0], s.source) || !parse_int(toks[1], s.target) ||
        !parse_int(toks[2], s.value))
      raise(Errc::ParseError, "line " + std::to_string(lineno) + ": not an integer triple");
    out.push_back(s);
  }
  return out;
}

std::vector<RawSentiment> load_sentiments(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sentiments(ss.str());
}

std::string export_edge_list(const SignedGraph& g) {
  std::vector<std::pair<std::pair<Label, Label>, int>> rows;
  rows.reserve(g.edges.size());
  for (const SignedEdge& e : g.edges) {
    Label a = g.labels[e.u];
    Label b = g.labels[e.v];
    if (a > b) std::swap(a, b);
    rows.push_back({{a, b}, e.sign});
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [pair, sign] : rows) {
    out += std::to_string(pair.first);
    out += ' ';
    out += std::to_string(pair.second);
    out += ' ';
    out += sign > 0 ? "1" : "-1";
    out += '\n';
  }
  return out;
}

} // namespace frustra
