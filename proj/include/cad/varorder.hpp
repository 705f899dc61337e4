#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cad/rational.hpp"

namespace cad {

/// Variable index: position in a VarOrder, 0-based. Position i holds x_{i+1}
/// in the ordering x_1 < x_2 < ... < x_n; higher index = higher variable.
using Var = int;

/// An ordered list of distinct variable names fixing the ambient ring.
class VarOrder {
 public:
  explicit VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("variable order must be nonempty");
    for (size_t i = 0; i < names_.size(); ++i)
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw Error("duplicate variable name: " + names_[i]);
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Var v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Var> index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Var>(i);
    return std::nullopt;
  }

  bool operator==(const VarOrder& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

inline VarOrderPtr make_order(std::vector<std::string> names) {
  return std::make_shared<const VarOrder>(std::move(names));
}

}  // namespace cad
