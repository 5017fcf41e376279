#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsym {

/// A search would exceed one of its configured limits.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(std::string bound, std::size_t limit, std::size_t requested)
      : std::runtime_error(bound + " limit " + std::to_string(limit) + " exceeded (needed " +
                           std::to_string(requested) + ")"),
        bound_(std::move(bound)),
        limit_(limit) {}

  const std::string& bound() const { return bound_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string bound_;
  std::size_t limit_;
};

}  // namespace gsym
