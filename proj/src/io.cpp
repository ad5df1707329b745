#include "sharply/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace sharply::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Iterates meaningful (non-blank, non-comment) lines with 1-based numbers.
struct Lines {
  std::vector<std::string> raw;
  std::size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        raw.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) raw.push_back(cur);
  }

  std::optional<std::pair<std::string, int>> next() {
    while (pos < raw.size()) {
      std::string s = trim(raw[pos]);
      int num = static_cast<int>(pos) + 1;
      ++pos;
      if (s.empty() || s[0] == '#') continue;
      return std::make_pair(s, num);
    }
    return std::nullopt;
  }

  // Line number to report when input ends too early.
  int end_line() const { return static_cast<int>(raw.size()) + 1; }
};

std::vector<int> parse_ints(const std::string& s, int line) {
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size())
      throw ParseError(line, "expected an integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

int parse_single_int(const std::string& s, int line, const std::string& what) {
  std::vector<int> v = parse_ints(s, line);
  if (v.size() != 1)
    throw ParseError(line, "expected a single integer for " + what);
  return v[0];
}

// Requires "key:" prefix and returns the remainder of the line.
std::string expect_key(const std::string& s, int line, const std::string& key) {
  const std::string prefix = key + ":";
  if (s.size() < prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
    throw ParseError(line, "expected '" + prefix + "'");
  return trim(s.substr(prefix.size()));
}

std::vector<std::vector<int>> parse_table_block(Lines& lines, int order,
                                                const std::string& name) {
  std::vector<std::vector<int>> table;
  for (int r = 0; r < order; ++r) {
    auto ln = lines.next();
    if (!ln)
      throw ParseError(lines.end_line(), name + " table: missing row " +
                                             std::to_string(r));
    auto [s, num] = *ln;
    std::vector<int> row = parse_ints(s, num);
    if (static_cast<int>(row.size()) != order)
      throw ParseError(num, name + " table row " + std::to_string(r) +
                                " has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(order));
    for (int v : row)
      if (v < 0 || v >= order)
        throw ParseError(num, name + " table row " + std::to_string(r) +
                                  " has out-of-range entry " +
                                  std::to_string(v));
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace

std::string print_group(const FiniteGroup& G) {
  std::ostringstream out;
  out << "degree: " << G.degree << "\n";
  for (const Permutation& g : G.generators) {
    out << "gen:";
    for (int img : g.images) out << ' ' << img;
    out << "\n";
  }
  return out.str();
}

FiniteGroup parse_group(const std::string& text) {
  Lines lines(text);
  auto first = lines.next();
  if (!first) throw ParseError(lines.end_line(), "missing 'degree:' line");
  auto [s, num] = *first;
  int degree = parse_single_int(expect_key(s, num, "degree"), num, "degree");
  if (degree <= 0) throw ParseError(num, "degree must be positive");

  std::vector<Permutation> gens;
  while (auto ln = lines.next()) {
    auto [g, gnum] = *ln;
    std::vector<int> images = parse_ints(expect_key(g, gnum, "gen"), gnum);
    if (static_cast<int>(images.size()) != degree)
      throw ParseError(gnum, "generator has " + std::to_string(images.size()) +
                                 " images, expected " +
                                 std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (int img : images) {
      if (img < 0 || img >= degree)
        throw ParseError(gnum, "generator image " + std::to_string(img) +
                                   " out of range");
      if (seen[img])
        throw ParseError(gnum, "generator repeats image " +
                                   std::to_string(img));
      seen[img] = true;
    }
    gens.push_back(Permutation{std::move(images)});
  }

  if (gens.empty()) {
    FiniteGroup G;
    G.degree = degree;
    G.elements = {identity_perm(degree)};
    G.label = "parsed group";
    return G;
  }
  FiniteGroup G = generate_group(gens);
  G.label = "parsed group";
  return G;
}

std::string print_table(const NearStructure& S) {
  std::ostringstream out;
  out << "order: " << S.order << "\n";
  out << "zero: " << S.zero << "\n";
  out << "one: " << S.one << "\n";
  out << "add:\n";
  for (int a = 0; a < S.order; ++a) {
    for (int b = 0; b < S.order; ++b) {
      if (b) out << ' ';
      out << S.add[a][b];
    }
    out << "\n";
  }
  out << "mul:\n";
  for (int a = 0; a < S.order; ++a) {
    for (int b = 0; b < S.order; ++b) {
      if (b) out << ' ';
      out << S.mul[a][b];
    }
    out << "\n";
  }
  return out.str();
}

NearStructure parse_table(const std::string& text) {
  Lines lines(text);

  auto take = [&lines](const std::string& key) {
    auto ln = lines.next();
    if (!ln)
      throw ParseError(lines.end_line(), "missing '" + key + ":' line");
    auto [s, num] = *ln;
    return std::make_pair(expect_key(s, num, key), num);
  };

  auto [order_s, order_line] = take("order");
  int order = parse_single_int(order_s, order_line, "order");
  if (order < 2) throw ParseError(order_line, "order must be at least 2");

  auto [zero_s, zero_line] = take("zero");
  int zero = parse_single_int(zero_s, zero_line, "zero");
  if (zero < 0 || zero >= order)
    throw ParseError(zero_line, "zero element out of range");

  auto [one_s, one_line] = take("one");
  int one = parse_single_int(one_s, one_line, "one");
  if (one < 0 || one >= order)
    throw ParseError(one_line, "one element out of range");
  if (one == zero) throw ParseError(one_line, "zero and one must differ");

  auto [add_s, add_line] = take("add");
  if (!add_s.empty())
    throw ParseError(add_line, "unexpected text after 'add:'");
  std::vector<std::vector<int>> add = parse_table_block(lines, order, "add");

  auto [mul_s, mul_line] = take("mul");
  if (!mul_s.empty())
    throw ParseError(mul_line, "unexpected text after 'mul:'");
  std::vector<std::vector<int>> mul = parse_table_block(lines, order, "mul");

  if (auto extra = lines.next())
    throw ParseError(extra->second, "unexpected line after tables");

  NearStructure S;
  S.order = order;
  S.zero = zero;
  S.one = one;
  S.add = std::move(add);
  S.mul = std::move(mul);
  S.label = "parsed table";
  return S;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace sharply::io
