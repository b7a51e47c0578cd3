#pragma once

#include <stdexcept>
#include <string>

namespace schur {

// Every failure mode the library reports.  Each carries a human-readable
// message naming the first offending cell / element / column.
enum class Errc {
  malformed_table,
  not_associative,
  no_identity,
  missing_inverse,
  action_not_homomorphism,
  not_automorphism,
  not_a_subgroup,
  not_normal,
  not_p_group,
  budget_exceeded,
  non_positive_order,
  not_a_direct_factor,
  not_a_complex,
  internal_free_rank,
  bound_violation,
  unsupported_order,
  parse_error,
  semantic_error,
  no_complement,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_table: return "MalformedTable";
    case Errc::not_associative: return "NotAssociative";
    case Errc::no_identity: return "NoIdentity";
    case Errc::missing_inverse: return "MissingInverse";
    case Errc::action_not_homomorphism: return "ActionNotHomomorphism";
    case Errc::not_automorphism: return "NotAutomorphism";
    case Errc::not_a_subgroup: return "NotASubgroup";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_p_group: return "NotPGroup";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::non_positive_order: return "NonPositiveOrder";
    case Errc::not_a_direct_factor: return "NotADirectFactor";
    case Errc::not_a_complex: return "NotAComplex";
    case Errc::internal_free_rank: return "InternalFreeRank";
    case Errc::bound_violation: return "BoundViolation";
    case Errc::unsupported_order: return "UnsupportedOrder";
    case Errc::parse_error: return "ParseError";
    case Errc::semantic_error: return "SemanticError";
    case Errc::no_complement: return "NoComplement";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace schur
