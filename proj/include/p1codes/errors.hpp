#ifndef P1CODES_ERRORS_HPP
#define P1CODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace p1codes {

// Evaluation hit a pole; carries the pole order.
class pole_error : public std::runtime_error {
  public:
    pole_error(const std::string& what, int order) : std::runtime_error(what), order_(order) {}
    int order() const { return order_; }

  private:
    int order_;
};

// A configured budget (enumeration size, closure bound, scan size, ...) would be exceeded.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace p1codes

#endif
