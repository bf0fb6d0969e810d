#include "vlogic/error.hpp"

namespace vlogic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::arity: return "arity";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::lexical: return "lexical";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::unbalanced: return "unbalanced_parenthesis";
    case ErrorKind::unknown_identity: return "unknown_identity";
    case ErrorKind::missing_variable: return "missing_variable";
    case ErrorKind::non_binary: return "non_binary";
    case ErrorKind::cap_exceeded: return "cap_exceeded";
    case ErrorKind::variable_clash: return "variable_clash";
    case ErrorKind::template_mismatch: return "template_mismatch";
  }
  return "unknown";
}

}  // namespace vlogic
