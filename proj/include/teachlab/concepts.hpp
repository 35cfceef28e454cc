#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "teachlab/bitset.hpp"

namespace teachlab {

struct ConceptTag;
struct InstanceTag;

/// Membership vector over [n]: position x-1 holds C(x).
using Concept = BasicBitSet<ConceptTag>;
/// Subset of the domain [n].
using InstanceSet = BasicBitSet<InstanceTag>;

/// Raised for malformed input: bad files, mismatched domains, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_same_domain(int n1, int n2);

/// True iff c and c2 carry the same label on every instance of s.
bool agrees_on(const Concept& c, const Concept& c2, const InstanceSet& s);

/// {x : c(x) != c2(x)}.
InstanceSet difference_set(const Concept& c, const Concept& c2);

Concept complement(const Concept& c);

/**
 * Duplicate-free, order-preserving list of concepts over a shared domain [n].
 */
class ConceptClass {
 public:
  ConceptClass() = default;
  explicit ConceptClass(int n);
  /// Throws InputError on duplicates or domain mismatch.
  ConceptClass(int n, std::vector<Concept> concepts);

  int domain_size() const { return n_; }
  std::size_t size() const { return concepts_.size(); }
  bool empty() const { return concepts_.empty(); }

  const Concept& operator[](std::size_t i) const { return concepts_[i]; }
  const std::vector<Concept>& concepts() const { return concepts_; }
  auto begin() const { return concepts_.begin(); }
  auto end() const { return concepts_.end(); }

  /// Appends c; returns false (and leaves the class unchanged) if c is already present.
  bool add(const Concept& c);
  bool contains(const Concept& c) const { return index_.count(c) != 0; }
  /// Index of c, or -1.
  int index_of(const Concept& c) const;

  /// Same concepts ignoring order.
  bool same_members(const ConceptClass& other) const;

  ConceptClass subclass(const std::vector<std::size_t>& indices) const;

 private:
  int n_ = 0;
  std::vector<Concept> concepts_;
  std::unordered_map<Concept, int, BitSetHash> index_;
};

/// Reads the `n=<int>` + one bit string per line format. '#' lines are comments.
ConceptClass parse_class(std::string_view text);
std::string serialize_class(const ConceptClass& k);

ConceptClass read_class_file(const std::string& path);
void write_class_file(const std::string& path, const ConceptClass& k);

// Small shared text helpers for the file codecs.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::vector<std::string_view> split_lines(std::string_view text);
std::string_view trim(std::string_view s);
int parse_int(std::string_view s, const char* what);

}  // namespace teachlab
