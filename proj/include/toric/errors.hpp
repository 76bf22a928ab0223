#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toric {

// Group materialization outgrew the configured element cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t order_so_far, std::uint64_t cap)
      : std::runtime_error("element cap exceeded: " +
                           std::to_string(order_so_far) + " elements, cap " +
                           std::to_string(cap)),
        order_so_far_(order_so_far),
        cap_(cap) {}
  std::uint64_t order_so_far() const { return order_so_far_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t order_so_far_;
  std::uint64_t cap_;
};

// The subgroup has a nonzero element supported on a single coordinate axis,
// so it does not define a toric singularity.
class InvalidSingularity : public std::runtime_error {
 public:
  explicit InvalidSingularity(const std::string& what)
      : std::runtime_error(what) {}
};

// A prime-order shortcut was applied to a point of composite order.
class NotPrimeOrder : public std::runtime_error {
 public:
  explicit NotPrimeOrder(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace toric

#endif
