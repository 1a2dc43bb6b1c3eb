#ifndef TMSR_ERROR_HPP
#define TMSR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tmsr {

enum class Errc {
  parse_error,
  not_a_group,
  even_order,
  even_m,
  trivial_group_unsupported,
  search_space_too_large,
  identity_in_set,
  precondition_violated,
  x_not_in_r,
  wrong_order,
  no_connection_set,
  not_automorphism,
  ceiling_exceeded,
  too_large,
  wrong_case,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::not_a_group: return "NotAGroup";
    case Errc::even_order: return "EvenOrder";
    case Errc::even_m: return "EvenM";
    case Errc::trivial_group_unsupported: return "TrivialGroupUnsupported";
    case Errc::search_space_too_large: return "SearchSpaceTooLarge";
    case Errc::identity_in_set: return "IdentityInSet";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::x_not_in_r: return "XNotInR";
    case Errc::wrong_order: return "WrongOrder";
    case Errc::no_connection_set: return "NoConnectionSet";
    case Errc::not_automorphism: return "NotAutomorphism";
    case Errc::ceiling_exceeded: return "CeilingExceeded";
    case Errc::too_large: return "TooLarge";
    case Errc::wrong_case: return "WrongCase";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tmsr

#endif  // TMSR_ERROR_HPP
