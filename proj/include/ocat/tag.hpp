#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ocat {

// Canonical structured token tree used as a cell identifier. A tag is an
// integer or text atom, an ordered list, or a set; set children are sorted
// and deduplicated at construction, so building a tag from the same content
// always yields the same value. Immutable, cheap to copy, hash precomputed.
class Tag {
 public:
  enum class Kind : std::uint8_t { Int, Atom, List, Set };

  Tag();  // Int 0

  static Tag num(std::int64_t value);
  static Tag atom(std::string text);
  static Tag list(std::vector<Tag> items);
  static Tag set(std::vector<Tag> items);

  Kind kind() const { return node_->kind; }
  std::int64_t intValue() const;
  const std::string& text() const;
  const std::vector<Tag>& items() const;

  std::size_t hash() const { return node_->hash; }
  std::string str() const;

  friend bool operator==(const Tag& a, const Tag& b);
  friend std::strong_ordering operator<=>(const Tag& a, const Tag& b);
  friend bool operator<(const Tag& a, const Tag& b) { return (a <=> b) < 0; }

 private:
  struct Node {
    Kind kind = Kind::Int;
    std::int64_t value = 0;
    std::string text;
    std::vector<Tag> items;
    std::size_t hash = 0;
  };
  explicit Tag(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TagHash {
  std::size_t operator()(const Tag& t) const { return t.hash(); }
};

}  // namespace ocat
