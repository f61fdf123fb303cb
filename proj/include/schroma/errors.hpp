#ifndef SCHROMA_ERRORS_HPP
#define SCHROMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schroma {

// All library errors carry a stable machine-readable name so the CLI can
// report it on stderr and map to exit codes.
class error : public std::runtime_error {
 public:
  error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct invalid_input_error : error {
  explicit invalid_input_error(const std::string& what)
      : error("invalid-input", what) {}
};

struct domain_error : error {
  explicit domain_error(const std::string& what) : error("domain-error", what) {}
};

struct no_unit_pairs_error : error {
  explicit no_unit_pairs_error(const std::string& what)
      : error("no-unit-pairs", what) {}
};

struct precondition_error : error {
  explicit precondition_error(const std::string& what)
      : error("precondition-error", what) {}
};

struct ambiguity_error : error {
  explicit ambiguity_error(const std::string& what)
      : error("ambiguity-error", what) {}
};

struct not_applicable_error : error {
  explicit not_applicable_error(const std::string& what)
      : error("not-applicable", what) {}
};

struct no_params_found_error : error {
  explicit no_params_found_error(const std::string& what)
      : error("no-params-found", what) {}
};

struct bracketing_error : error {
  explicit bracketing_error(const std::string& what)
      : error("bracketing-error", what) {}
};

}  // namespace schroma

#endif  // SCHROMA_ERRORS_HPP
