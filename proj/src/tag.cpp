#include "ocat/tag.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocat {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_of(Tag::Kind kind, std::int64_t value, const std::string& text,
                    const std::vector<Tag>& items) {
  std::size_t h = static_cast<std::size_t>(kind) * 0x100000001b3ULL + 1469598103934665603ULL;
  switch (kind) {
    case Tag::Kind::Int:
      h = mix(h, static_cast<std::size_t>(value));
      break;
    case Tag::Kind::Atom:
      for (char c : text) h = mix(h, static_cast<unsigned char>(c));
      break;
    case Tag::Kind::List:
    case Tag::Kind::Set:
      for (const Tag& t : items) h = mix(h, t.hash());
      break;
  }
  return h;
}

bool atom_needs_quotes(const std::string& s) {
  if (s.empty()) return true;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '-' || c == '+' || c == '*' || c == '/' || c == '.';
    if (!ok) return true;
  }
  return false;
}

void print(const Tag& t, std::string& out) {
  switch (t.kind()) {
    case Tag::Kind::Int:
      out += std::to_string(t.intValue());
      break;
    case Tag::Kind::Atom:
      if (atom_needs_quotes(t.text())) {
        out += '"';
        for (char c : t.text()) {
          if (c == '"' || c == '\\') out += '\\';
          out += c;
        }
        out += '"';
      } else {
        out += t.text();
      }
      break;
    case Tag::Kind::List:
    case Tag::Kind::Set: {
      out += t.kind() == Tag::Kind::List ? '(' : '{';
      bool first = true;
      for (const Tag& c : t.items()) {
        if (!first) out += ' ';
        first = false;
        print(c, out);
      }
      out += t.kind() == Tag::Kind::List ? ')' : '}';
      break;
    }
  }
}

}  // namespace

Tag::Tag() : Tag(num(0)) {}

Tag Tag::num(std::int64_t value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Int;
  n->value = value;
  n->hash = hash_of(n->kind, value, n->text, n->items);
  return Tag(std::move(n));
}

Tag Tag::atom(std::string text) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->text = std::move(text);
  n->hash = hash_of(n->kind, 0, n->text, n->items);
  return Tag(std::move(n));
}

Tag Tag::list(std::vector<Tag> items) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::List;
  n->items = std::move(items);
  n->hash = hash_of(n->kind, 0, n->text, n->items);
  return Tag(std::move(n));
}

Tag Tag::set(std::vector<Tag> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Set;
  n->items = std::move(items);
  n->hash = hash_of(n->kind, 0, n->text, n->items);
  return Tag(std::move(n));
}

std::int64_t Tag::intValue() const {
  if (kind() != Kind::Int) throw std::logic_error("Tag: not an integer atom");
  return node_->value;
}

const std::string& Tag::text() const {
  if (kind() != Kind::Atom) throw std::logic_error("Tag: not a text atom");
  return node_->text;
}

const std::vector<Tag>& Tag::items() const {
  if (kind() != Kind::List && kind() != Kind::Set) throw std::logic_error("Tag: not a node");
  return node_->items;
}

std::string Tag::str() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Tag& a, const Tag& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Tag& a, const Tag& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Tag::Kind::Int:
      return a.intValue() <=> b.intValue();
    case Tag::Kind::Atom:
      return a.text().compare(b.text()) <=> 0;
    case Tag::Kind::List:
    case Tag::Kind::Set: {
      const auto& x = a.items();
      const auto& y = b.items();
      std::size_t n = std::min(x.size(), y.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (auto c = x[i] <=> y[i]; c != 0) return c;
      }
      return x.size() <=> y.size();
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace ocat
