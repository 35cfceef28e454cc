#include "teachlab/concepts.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace teachlab {

void require_same_domain(int n1, int n2) {
  if (n1 != n2)
    throw InputError("domain size mismatch: " + std::to_string(n1) + " vs " + std::to_string(n2));
}

bool agrees_on(const Concept& c, const Concept& c2, const InstanceSet& s) {
  require_same_domain(c.size(), c2.size());
  require_same_domain(c.size(), s.size());
  for (int w = 0; w < c.word_count(); ++w)
    if ((c.data()[w] ^ c2.data()[w]) & s.data()[w]) return false;
  return true;
}

InstanceSet difference_set(const Concept& c, const Concept& c2) {
  require_same_domain(c.size(), c2.size());
  return (c ^ c2).retag<InstanceTag>();
}

Concept complement(const Concept& c) { return ~c; }

ConceptClass::ConceptClass(int n) : n_(n) {
  if (n < 1) throw InputError("domain size must be at least 1");
}

ConceptClass::ConceptClass(int n, std::vector<Concept> concepts) : ConceptClass(n) {
  concepts_.reserve(concepts.size());
  for (auto& c : concepts) {
    if (!add(c)) throw InputError("duplicate concept " + c.to_string());
  }
}

bool ConceptClass::add(const Concept& c) {
  require_same_domain(n_, c.size());
  auto [it, inserted] = index_.emplace(c, static_cast<int>(concepts_.size()));
  if (!inserted) return false;
  concepts_.push_back(c);
  return true;
}

int ConceptClass::index_of(const Concept& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

bool ConceptClass::same_members(const ConceptClass& other) const {
  if (n_ != other.n_ || size() != other.size()) return false;
  return std::all_of(concepts_.begin(), concepts_.end(), [&](const Concept& c) { return other.contains(c); });
}

ConceptClass ConceptClass::subclass(const std::vector<std::size_t>& indices) const {
  ConceptClass out(n_);
  for (std::size_t i : indices) out.add(concepts_.at(i));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError(std::string("expected an integer for ") + what + ", got '" + std::string(s) + "'");
  return value;
}

ConceptClass parse_class(std::string_view text) {
  int n = -1;
  ConceptClass k;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      if (line.substr(0, 2) != "n=") throw InputError("class file: missing 'n=<int>' header");
      n = parse_int(line.substr(2), "n");
      if (n < 1) throw InputError("class file: n must be at least 1");
      k = ConceptClass(n);
      continue;
    }
    if (static_cast<int>(line.size()) != n)
      throw InputError("class file line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " characters, got " + std::to_string(line.size()));
    Concept c;
    try {
      c = Concept::from_string(line);
    } catch (const std::invalid_argument&) {
      throw InputError("class file line " + std::to_string(line_no) + ": only 0/1 allowed");
    }
    if (!k.add(c)) throw InputError("class file line " + std::to_string(line_no) + ": duplicate concept " + c.to_string());
  }
  if (n < 0) throw InputError("class file: missing 'n=<int>' header");
  return k;
}

std::string serialize_class(const ConceptClass& k) {
  std::string out = "n=" + std::to_string(k.domain_size()) + "\n";
  for (const auto& c : k) {
    out += c.to_string();
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

ConceptClass read_class_file(const std::string& path) { return parse_class(read_text_file(path)); }

void write_class_file(const std::string& path, const ConceptClass& k) { write_text_file(path, serialize_class(k)); }

}  // namespace teachlab
