#pragma once

#include <stdexcept>
#include <string>

namespace dks {

// Every failure the library reports carries one of these kinds. The CLI maps
// them to stable exit codes, so the order here must not be reshuffled.
enum class ErrorKind {
    MalformedHeader,
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    KTooLarge,
    NotBlockGraph,
    NotFound,
    BudgetTooLarge,
    BudgetExceeded,
    SolverNotApplicable,
    DeletionSetTooLarge,
    InvalidDeletionSet,
    SyntaxError,
    BadLabel,
    JoinSameLabel,
    RelabelSameLabel,
    NotCograph,
    WeightLengthMismatch,
    InvalidPartition,
    CompositionSpaceTooLarge,
    StrategyNotApplicable,
    InvalidSpec,
    IoError,
};

inline const char *error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::KTooLarge: return "KTooLarge";
    case ErrorKind::NotBlockGraph: return "NotBlockGraph";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SolverNotApplicable: return "SolverNotApplicable";
    case ErrorKind::DeletionSetTooLarge: return "DeletionSetTooLarge";
    case ErrorKind::InvalidDeletionSet: return "InvalidDeletionSet";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::JoinSameLabel: return "JoinSameLabel";
    case ErrorKind::RelabelSameLabel: return "RelabelSameLabel";
    case ErrorKind::NotCograph: return "NotCograph";
    case ErrorKind::WeightLengthMismatch: return "WeightLengthMismatch";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::CompositionSpaceTooLarge: return "CompositionSpaceTooLarge";
    case ErrorKind::StrategyNotApplicable: return "StrategyNotApplicable";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // Exit codes: 0 = ok, 1 = unexpected failure, 2.. = enumerated kinds.
    int exit_code() const { return 2 + static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &msg) { throw Error(kind, msg); }

} // namespace dks
