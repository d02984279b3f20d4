#include <algorithm>
#include <cctype>
#include <sstream>

#include "cli/cli.hpp"
#include "ehrwt/errors.hpp"

namespace ehrwt::cli {

namespace {

struct Token {
  std::string text;
  std::size_t offset;
};

struct Line {
  std::vector<Token> tokens;
  std::size_t offset;
  std::size_t number;
};

// Blanks out /* ... */ comments while keeping offsets and newlines intact.
std::string strip_comments(std::string_view text) {
  std::string out(text);
  std::size_t pos = 0;
  while ((pos = out.find("/*", pos)) != std::string::npos) {
    const std::size_t end = out.find("*/", pos + 2);
    if (end == std::string::npos) throw ParseError("unterminated comment", pos);
    for (std::size_t i = pos; i < end + 2; ++i) {
      if (out[i] != '\n') out[i] = ' ';
    }
    pos = end + 2;
  }
  return out;
}

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    Line line{{}, start, number};
    std::size_t i = start;
    while (i < end) {
      while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      const std::size_t tok = i;
      while (i < end && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i > tok) line.tokens.push_back(Token{text.substr(tok, i - tok), tok});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
    ++number;
  }
  return lines;
}

Integer parse_integer(const Token& t) {
  std::string_view body = t.text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const bool ok = !body.empty() && std::all_of(body.begin(), body.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (!ok) throw ParseError("expected an integer, found '" + t.text + "'", t.offset);
  return Integer(t.text[0] == '+' ? t.text.substr(1) : t.text, 10);
}

std::size_t parse_count(const Token& t, const char* what) {
  const Integer v = parse_integer(t);
  if (v < 0 || !v.fits_ulong_p()) {
    throw ParseError(std::string(what) + " must be a non-negative integer", t.offset);
  }
  return v.get_ui();
}

void expect_tokens(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError(std::string(what) + " on line " + std::to_string(line.number) +
                         " needs " + std::to_string(count) + " entries, found " +
                         std::to_string(line.tokens.size()),
                     line.offset);
  }
}

std::vector<IntVector> read_matrix(const std::vector<Line>& lines, std::size_t first,
                                   std::size_t rows, std::size_t cols, std::size_t end_offset) {
  if (lines.size() < first + rows) {
    throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(lines.size() - first),
                     end_offset);
  }
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = lines[first + r];
    if (std::isalpha(static_cast<unsigned char>(line.tokens.front().text.front()))) {
      throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(r),
                       line.offset);
    }
    expect_tokens(line, cols, "vertex row");
    IntVector v;
    for (const auto& t : line.tokens) v.push_back(parse_integer(t));
    out.push_back(std::move(v));
  }
  return out;
}

[[noreturn]] void reject_keyword(const Token& t) {
  static const char* const kGuided[] = {"inequalities", "polynomial", "WeightedEhrhartSeries",
                                        "Integral"};
  for (const char* k : kGuided) {
    if (t.text == k) {
      throw ParseError("Normaliz keyword '" + t.text +
                           "' is not supported; give the vertices with amb_space/polytope "
                           "and use the native weighted or integral subcommand",
                       t.offset);
    }
  }
  throw ParseError("unsupported keyword '" + t.text + "'", t.offset);
}

}  // namespace

LatticePolytope read_polytope(std::string_view raw) {
  const std::string text = strip_comments(raw);
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty polytope description", 0);

  const Line& head = lines.front();
  const Token& keyword = head.tokens.front();
  std::vector<IntVector> vertices;
  std::size_t next = 0;

  if (keyword.text == "vertices") {
    expect_tokens(head, 3, "header 'vertices m s'");
    const std::size_t m = parse_count(head.tokens[1], "vertex count");
    const std::size_t s = parse_count(head.tokens[2], "ambient dimension");
    if (m == 0) throw ParseError("polytope needs at least one vertex", head.tokens[1].offset);
    if (s == 0) throw ParseError("ambient dimension must be positive", head.tokens[2].offset);
    vertices = read_matrix(lines, 1, m, s, text.size());
    next = 1 + m;
  } else if (keyword.text == "amb_space") {
    expect_tokens(head, 2, "header 'amb_space N'");
    const std::size_t amb = parse_count(head.tokens[1], "amb_space");
    if (amb < 2) throw ParseError("amb_space must be at least 2", head.tokens[1].offset);
    if (lines.size() < 2) throw ParseError("missing 'polytope m' block", text.size());
    const Line& block = lines[1];
    if (block.tokens.front().text != "polytope") reject_keyword(block.tokens.front());
    expect_tokens(block, 2, "header 'polytope m'");
    const std::size_t m = parse_count(block.tokens[1], "vertex count");
    if (m == 0) throw ParseError("polytope needs at least one vertex", block.tokens[1].offset);
    vertices = read_matrix(lines, 2, m, amb - 1, text.size());
    next = 2 + m;
  } else {
    reject_keyword(keyword);
  }

  if (next < lines.size()) {
    const Token& extra = lines[next].tokens.front();
    if (std::isalpha(static_cast<unsigned char>(extra.text.front()))) reject_keyword(extra);
    throw ParseError("more rows than declared", extra.offset);
  }
  return LatticePolytope(std::move(vertices));
}

std::string write_native(const LatticePolytope& polytope) {
  std::ostringstream out;
  out << "vertices " << polytope.vertices().size() << ' ' << polytope.ambient_dim() << '\n';
  for (const auto& v : polytope.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
  return out.str();
}

std::vector<IntVector> parse_rows(std::string_view text) {
  std::vector<IntVector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    IntVector row;
    std::size_t i = start;
    while (i < end) {
      while (i < end && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      const std::size_t tok = i;
      while (i < end && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',') ++i;
      if (i > tok) row.push_back(parse_integer(Token{std::string(text.substr(tok, i - tok)), tok}));
    }
    if (row.empty()) throw ParseError("empty row", start);
    rows.push_back(std::move(row));
    start = end + 1;
  }
  return rows;
}

}  // namespace ehrwt::cli
