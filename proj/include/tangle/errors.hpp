#pragma once

#include <stdexcept>
#include <string>

namespace tangle {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct AllZeroWeights : Error {
    AllZeroWeights() : Error("weight table: every raw weight is zero") {}
};
struct NegativeWeight : Error {
    NegativeWeight() : Error("weight table: negative raw weight") {}
};
struct UnknownNode : Error {
    UnknownNode() : Error("node id outside weight table") {}
};
struct UnknownBlock : Error {
    UnknownBlock() : Error("block not known to this view") {}
};
struct UnknownTransaction : Error {
    UnknownTransaction() : Error("transaction not known to this view") {}
};
struct UnknownInput : Error {
    UnknownInput() : Error("transaction input references an unknown output") {}
};
struct ValueMismatch : Error {
    ValueMismatch() : Error("transaction input and output values differ") {}
};
struct PastConeDoubleSpend : Error {
    PastConeDoubleSpend() : Error("transaction past cone is not conflict-free") {}
};
struct ThetaOutOfRange : Error {
    ThetaOutOfRange() : Error("confirmation threshold must lie in (0.5, 1]") {}
};
struct NotAConflict : Error {
    NotAConflict() : Error("set contains a transaction that is not a conflict") {}
};
struct NotABranch : Error {
    NotABranch() : Error("set is not a branch") {}
};
struct NotAReality : Error {
    NotAReality() : Error("branch is not maximal") {}
};
struct CoinOutOfRange : Error {
    CoinOutOfRange() : Error("common coin value outside [0.5, theta]") {}
};
struct InconsistentWeights : Error {
    InconsistentWeights() : Error("conflict weight function violates monotonicity or consistency") {}
};
struct InvalidVotingBranch : Error {
    InvalidVotingBranch() : Error("aggregated voting branch is not conflict-free") {}
};
struct NoEligibleTip : Error {
    NoEligibleTip() : Error("tip selection exhausted its redraw budget") {}
};
struct InfeasiblePartition : Error {
    InfeasiblePartition() : Error("no honest partition satisfies the safety-break inequality") {}
};
struct WrongFixture : Error {
    explicit WrongFixture(const std::string& what) : Error("fixture precondition violated: " + what) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config: " + what) {}
};

}  // namespace tangle
