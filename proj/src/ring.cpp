#include "germcalc/ring.hpp"

#include <set>
#include <stdexcept>

namespace germ {

namespace {
bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  if (!alpha(s[0])) return false;
  for (char c : s)
    if (!alnum(c)) return false;
  return true;
}
}  // namespace

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::optional<int> RingContext::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const RingContext>(std::move(names));
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("operands live in different rings");
}

}  // namespace germ
