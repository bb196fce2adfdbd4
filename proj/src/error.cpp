#include "fillobs/error.hpp"

namespace fillobs {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::UnknownConstructor: return "UnknownConstructor";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::ParamRange: return "ParamRange";
    case ErrorKind::UnbalancedParens: return "UnbalancedParens";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Axiom: return "AxiomViolation";
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::Precondition: return "PreconditionError";
    case ErrorKind::TorsionKunneth: return "TorsionKunneth";
    case ErrorKind::Coefficient: return "CoefficientError";
    }
    return "Error";
}

} // namespace fillobs
