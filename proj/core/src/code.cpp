#include "smippc/code.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smippc {

namespace {

constexpr std::uint32_t kMaxAlphabet = 65536;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

// ---------------------------------------------------------------------------
// InfSymbol
// ---------------------------------------------------------------------------

InfSymbol inf_add(InfSymbol a, std::uint32_t g, std::uint32_t modulus) {
  require(modulus >= 1, "inf_add: modulus must be positive");
  if (a.infinite) return a;
  return InfSymbol::fin((a.value + g) % modulus);
}

Symbol canonical(InfSymbol a, std::uint32_t s) {
  require(s >= 1 && s < kMaxAlphabet, "canonical: modulus out of range");
  if (a.infinite) return static_cast<Symbol>(s);
  require(a.value < s, "canonical: finite value out of range");
  return static_cast<Symbol>(a.value);
}

// ---------------------------------------------------------------------------
// Code
// ---------------------------------------------------------------------------

Code::Code(std::size_t n, std::uint32_t q, std::vector<Codeword> codewords)
    : n_(n), q_(q), words_(std::move(codewords)) {
  require(n_ >= 1, "Code: length must be positive");
  require(q_ >= 2 && q_ <= kMaxAlphabet, "Code: alphabet must be in [2, 65536]");
  require(!words_.empty(), "Code: at least one codeword required");
  for (const Codeword& w : words_) {
    require(w.size() == n_, "Code: codeword length mismatch");
    for (Symbol s : w) require(s < q_, "Code: symbol out of range");
  }
  std::set<Codeword> distinct(words_.begin(), words_.end());
  require(distinct.size() == words_.size(), "Code: duplicate codeword");
}

const Codeword& Code::codeword(std::uint32_t index) const {
  require(index >= 1 && index <= words_.size(), "Code: index out of range");
  return words_[index - 1];
}

// ---------------------------------------------------------------------------
// Pattern
// ---------------------------------------------------------------------------

Pattern::Pattern(std::uint32_t q, std::vector<std::vector<Symbol>> sets)
    : q_(q), sets_(std::move(sets)) {
  require(q_ >= 2 && q_ <= kMaxAlphabet, "Pattern: alphabet must be in [2, 65536]");
  require(!sets_.empty(), "Pattern: at least one position required");
  for (std::vector<Symbol>& set : sets_) {
    require(!set.empty(), "Pattern: empty position set");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    require(set.back() < q_, "Pattern: symbol out of range");
  }
}

const std::vector<Symbol>& Pattern::set(std::size_t position) const {
  require(position >= 1 && position <= sets_.size(),
          "Pattern: position out of range");
  return sets_[position - 1];
}

// ---------------------------------------------------------------------------
// Coalition
// ---------------------------------------------------------------------------

Coalition::Coalition(IndexSet members) : members_(std::move(members)) {
  require(!members_.empty(), "Coalition: must be nonempty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  require(members_.front() >= 1, "Coalition: indices are 1-based");
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Pattern desc(const Code& code, const Coalition& coalition) {
  require(coalition.members().back() <= code.size(),
          "desc: coalition index out of range");
  std::vector<std::vector<Symbol>> sets(code.length());
  for (std::uint32_t index : coalition.members()) {
    const Codeword& w = code.codeword(index);
    for (std::size_t p = 0; p < code.length(); ++p) sets[p].push_back(w[p]);
  }
  return Pattern(code.alphabet(), std::move(sets));
}

std::vector<Symbol> coordinate_set(const Code& code, std::size_t position) {
  require(position >= 1 && position <= code.length(),
          "coordinate_set: position out of range");
  std::vector<Symbol> out;
  out.reserve(code.size());
  for (const Codeword& w : code.codewords()) out.push_back(w[position - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Codeword> shortened(const Code& code, Symbol symbol,
                                std::size_t position) {
  require(position >= 1 && position <= code.length(),
          "shortened: position out of range");
  std::vector<Codeword> out;
  for (const Codeword& w : code.codewords()) {
    if (w[position - 1] != symbol) continue;
    Codeword rest;
    rest.reserve(w.size() - 1);
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (p != position - 1) rest.push_back(w[p]);
    }
    out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet pattern_members(const Code& code, const Pattern& r) {
  require(r.length() == code.length(), "pattern_members: length mismatch");
  require(r.alphabet() == code.alphabet(), "pattern_members: alphabet mismatch");
  IndexSet out;
  for (std::uint32_t i = 1; i <= code.size(); ++i) {
    const Codeword& w = code.codeword(i);
    bool inside = true;
    for (std::size_t p = 0; p < code.length() && inside; ++p) {
      const std::vector<Symbol>& set = r.sets()[p];
      inside = std::binary_search(set.begin(), set.end(), w[p]);
    }
    if (inside) out.push_back(i);
  }
  return out;
}

std::size_t hamming_distance(const Codeword& a, const Codeword& b) {
  require(a.size() == b.size(), "hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t p = 0; p < a.size(); ++p) d += (a[p] != b[p]) ? 1 : 0;
  return d;
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

std::string serialize(const Code& code, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  out << code.length() << ' ' << code.size() << ' ' << code.alphabet() << '\n';
  for (const Codeword& w : code.codewords()) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (p > 0) out << ' ';
      out << w[p];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(start, end - start + 1));
  }
  return out;
}

long parse_int(const std::string& token, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("parse: bad integer in ") + what);
  }
  if (used != token.size())
    throw std::invalid_argument(std::string("parse: bad integer in ") + what);
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(line);
  while (std::getline(in, token, sep)) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

}  // namespace

Code parse_code(const std::string& text) {
  std::vector<std::string> lines = data_lines(text);
  if (lines.empty()) throw std::invalid_argument("parse: missing header");
  std::vector<std::string> header = split(lines[0], ' ');
  if (header.size() != 3)
    throw std::invalid_argument("parse: header must be 'n M q'");
  long n = parse_int(header[0], "header");
  long m = parse_int(header[1], "header");
  long q = parse_int(header[2], "header");
  if (n < 1 || m < 1 || q < 2 || q > 65536)
    throw std::invalid_argument("parse: header values out of range");
  if (static_cast<long>(lines.size()) != m + 1)
    throw std::invalid_argument("parse: codeword count mismatch");
  std::vector<Codeword> words;
  words.reserve(static_cast<std::size_t>(m));
  for (long row = 1; row <= m; ++row) {
    std::vector<std::string> tokens = split(lines[static_cast<std::size_t>(row)], ' ');
    if (static_cast<long>(tokens.size()) != n)
      throw std::invalid_argument("parse: wrong symbol count in codeword");
    Codeword w;
    w.reserve(static_cast<std::size_t>(n));
    for (const std::string& token : tokens) {
      long value = parse_int(token, "codeword");
      if (value < 0 || value >= q)
        throw std::invalid_argument("parse: symbol out of range");
      w.push_back(static_cast<Symbol>(value));
    }
    words.push_back(std::move(w));
  }
  return Code(static_cast<std::size_t>(n), static_cast<std::uint32_t>(q),
              std::move(words));
}

std::string serialize(const Pattern& pattern) {
  std::ostringstream out;
  for (const std::vector<Symbol>& set : pattern.sets()) {
    if (set.size() == pattern.alphabet()) {
      out << "*\n";
      continue;
    }
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (k > 0) out << ',';
      out << set[k];
    }
    out << '\n';
  }
  return out.str();
}

Pattern parse_pattern(const std::string& text, std::size_t n, std::uint32_t q) {
  std::vector<std::string> lines = data_lines(text);
  if (lines.size() != n)
    throw std::invalid_argument("parse: pattern line count mismatch");
  std::vector<std::vector<Symbol>> sets;
  sets.reserve(n);
  for (const std::string& line : lines) {
    if (line == "*") {
      std::vector<Symbol> full(q);
      for (std::uint32_t v = 0; v < q; ++v) full[v] = static_cast<Symbol>(v);
      sets.push_back(std::move(full));
      continue;
    }
    std::vector<Symbol> set;
    for (const std::string& token : split(line, ',')) {
      long value = parse_int(token, "pattern");
      if (value < 0 || value >= static_cast<long>(q))
        throw std::invalid_argument("parse: pattern symbol out of range");
      set.push_back(static_cast<Symbol>(value));
    }
    if (set.empty()) throw std::invalid_argument("parse: empty pattern position");
    sets.push_back(std::move(set));
  }
  return Pattern(q, std::move(sets));
}

}  // namespace smippc
