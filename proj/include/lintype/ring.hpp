#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lintype {

// An ordered set of variable names.  Cheap to copy; equality is by content,
// so independently constructed rings with the same variables interoperate.
class Ring {
public:
  Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return vars_->size(); }
  const std::string& name(std::size_t i) const { return (*vars_)[i]; }
  const std::vector<std::string>& names() const { return *vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Ring& other) const {
    return vars_ == other.vars_ || *vars_ == *other.vars_;
  }
  bool operator!=(const Ring& other) const { return !(*this == other); }

  // Ring with extra variables appended.
  Ring extended(const std::vector<std::string>& extra) const;
  // Ring with variable i removed.
  Ring without(std::size_t i) const;

  // `count` names "stem1", "stem2", ... that do not clash with existing
  // variables (extra underscores are appended to the stem on collision).
  std::vector<std::string> fresh_names(const std::string& stem,
                                       std::size_t count) const;

private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

}  // namespace lintype
