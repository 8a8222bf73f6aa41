#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace germ {

/// An ordered list of variable names fixing the ambient ring of formal germs.
class RingContext {
public:
  explicit RingContext(std::vector<std::string> names);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const RingContext& o) const { return names_ == o.names_; }
  bool operator!=(const RingContext& o) const { return names_ != o.names_; }

private:
  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(std::vector<std::string> names);

/// Rings are compared by content so independently built contexts interoperate.
inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const Ring& a, const Ring& b);

}  // namespace germ
