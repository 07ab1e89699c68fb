#include "dglab/table.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace dglab {

namespace {

std::string position_message(int line, int column, const std::string& message) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << message;
  return os.str();
}

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits input into tokens per line, dropping blank and comment lines.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    ++lineno;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      toks.push_back(Token{std::string(line.substr(start, i - start)), lineno,
                           static_cast<int>(start) + 1});
    }
    if (!toks.empty() && toks[0].text[0] != '#') lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(position_message(line, column, message)),
      line_(line),
      column_(column) {}

CayleyTable::CayleyTable(std::vector<std::string> names, std::vector<int> products)
    : order_(static_cast<int>(names.size())),
      names_(std::move(names)),
      products_(std::move(products)) {
  if (order_ < 1) throw std::invalid_argument("table order must be >= 1");
  if (products_.size() != static_cast<size_t>(order_) * order_)
    throw std::invalid_argument("products matrix must have order^2 entries");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("element names must be non-empty");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate element name: " + n);
  }
  for (int v : products_)
    if (v < 0 || v >= order_)
      throw std::invalid_argument("product entry out of range");
}

int CayleyTable::product(int i, int j) const {
  if (i < 0 || i >= order_ || j < 0 || j >= order_)
    throw std::out_of_range("element index out of range");
  return at(i, j);
}

int CayleyTable::index_of(std::string_view name) const noexcept {
  for (int i = 0; i < order_; ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  return -1;
}

std::string CayleyTable::encode() const {
  std::string out;
  out.reserve(products_.size());
  for (int v : products_) out.push_back(static_cast<char>('0' + v));
  return out;
}

CayleyTable parse_table(std::string_view text) {
  auto lines = tokenize_lines(text);
  size_t li = 0;
  if (li >= lines.size()) throw ParseError(1, 1, "missing 'elements:' header");
  const auto& header = lines[li];
  if (header[0].text != "elements:")
    throw ParseError(header[0].line, header[0].column,
                     "expected 'elements:' header, found '" + header[0].text + "'");
  if (header.size() < 2)
    throw ParseError(header[0].line, header[0].column, "no element names given");
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  for (size_t k = 1; k < header.size(); ++k) {
    const auto& tok = header[k];
    if (!index.emplace(tok.text, static_cast<int>(names.size())).second)
      throw ParseError(tok.line, tok.column, "duplicate element name '" + tok.text + "'");
    names.push_back(tok.text);
  }
  const int n = static_cast<int>(names.size());
  ++li;
  if (li >= lines.size() || lines[li][0].text != "table:") {
    int l = li < lines.size() ? lines[li][0].line : header[0].line + 1;
    int c = li < lines.size() ? lines[li][0].column : 1;
    throw ParseError(l, c, "expected 'table:' line");
  }
  if (lines[li].size() > 1)
    throw ParseError(lines[li][1].line, lines[li][1].column,
                     "unexpected token after 'table:'");
  ++li;
  std::vector<int> products;
  products.reserve(static_cast<size_t>(n) * n);
  for (int row = 0; row < n; ++row, ++li) {
    if (li >= lines.size()) {
      const auto& last = lines.back().back();
      throw ParseError(last.line + 1, 1,
                       "expected " + std::to_string(n) + " table rows, found " +
                           std::to_string(row));
    }
    const auto& toks = lines[li];
    if (static_cast<int>(toks.size()) != n)
      throw ParseError(toks[0].line, toks[0].column,
                       "expected " + std::to_string(n) + " entries in row, found " +
                           std::to_string(toks.size()));
    for (const auto& tok : toks) {
      auto it = index.find(tok.text);
      if (it == index.end())
        throw ParseError(tok.line, tok.column, "unknown element '" + tok.text + "'");
      products.push_back(it->second);
    }
  }
  if (li < lines.size())
    throw ParseError(lines[li][0].line, lines[li][0].column,
                     "unexpected extra row after " + std::to_string(n) + " table rows");
  return CayleyTable(std::move(names), std::move(products));
}

std::string emit_table(const CayleyTable& table) {
  std::string out = "elements:";
  for (const auto& n : table.names()) {
    out += ' ';
    out += n;
  }
  out += "\ntable:\n";
  for (int i = 0; i < table.order(); ++i) {
    for (int j = 0; j < table.order(); ++j) {
      if (j > 0) out += ' ';
      out += table.name(table.at(i, j));
    }
    out += '\n';
  }
  return out;
}

int power(const CayleyTable& table, int g, long long k) {
  if (g < 0 || g >= table.order()) throw std::out_of_range("element index out of range");
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  // Power sequences over a finite table enter a cycle within `order` steps;
  // record the prefix then reduce k modulo the cycle length.
  std::vector<int> seq{g};
  std::vector<int> first_seen(static_cast<size_t>(table.order()), -1);
  first_seen[static_cast<size_t>(g)] = 0;
  int cur = g;
  for (;;) {
    if (static_cast<long long>(seq.size()) >= k)
      return seq[static_cast<size_t>(k - 1)];
    cur = table.at(cur, g);
    int& pos = first_seen[static_cast<size_t>(cur)];
    if (pos >= 0) {
      long long cycle_start = pos;
      long long cycle_len = static_cast<long long>(seq.size()) - cycle_start;
      long long idx = cycle_start + (k - 1 - cycle_start) % cycle_len;
      return seq[static_cast<size_t>(idx)];
    }
    pos = static_cast<int>(seq.size());
    seq.push_back(cur);
  }
}

std::vector<int> global_identities(const CayleyTable& table) {
  const int n = table.order();
  std::vector<bool> is_id(static_cast<size_t>(n), false);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      if (table.at(g, x) == g || table.at(x, g) == g) is_id[static_cast<size_t>(x)] = true;
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (is_id[static_cast<size_t>(x)]) out.push_back(x);
  return out;
}

bool contains(const std::vector<int>& sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

ElementProfile element_profile(const CayleyTable& table, int g) {
  const int n = table.order();
  if (g < 0 || g >= n) throw std::out_of_range("element index out of range");
  ElementProfile p;
  p.element = g;
  for (int x = 0; x < n; ++x) {
    if (table.at(g, x) == g) p.rightIdentities.push_back(x);
    if (table.at(x, g) == g) p.leftIdentities.push_back(x);
  }
  p.identities = p.rightIdentities;
  p.identities.insert(p.identities.end(), p.leftIdentities.begin(),
                      p.leftIdentities.end());
  std::sort(p.identities.begin(), p.identities.end());
  p.identities.erase(std::unique(p.identities.begin(), p.identities.end()),
                     p.identities.end());
  for (int h = 0; h < n; ++h) {
    if (contains(p.identities, table.at(g, h)) || contains(p.identities, table.at(h, g)))
      p.def21Inverses.push_back(h);
  }
  for (int h : p.def21Inverses) {
    if (contains(p.rightIdentities, table.at(h, g)) &&
        contains(p.leftIdentities, table.at(g, h)))
      p.dInverses.push_back(h);
  }
  auto ids = global_identities(table);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int cur = g;
  for (int k = 1; k <= n + 1; ++k) {
    if (contains(ids, cur)) {
      p.order = k;
      break;
    }
    if (seen[static_cast<size_t>(cur)]) break;
    seen[static_cast<size_t>(cur)] = true;
    cur = table.at(cur, g);
  }
  return p;
}

std::vector<ElementProfile> all_profiles(const CayleyTable& table) {
  std::vector<ElementProfile> out;
  out.reserve(static_cast<size_t>(table.order()));
  for (int g = 0; g < table.order(); ++g) out.push_back(element_profile(table, g));
  return out;
}

}  // namespace dglab
