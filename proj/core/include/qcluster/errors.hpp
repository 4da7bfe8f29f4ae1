#pragma once

#include <stdexcept>
#include <string>

namespace qcluster {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define QCLUSTER_ERROR(Name)              \
    struct Name : Error {                 \
        using Error::Error;               \
        Name() : Error(#Name) {}          \
    }

QCLUSTER_ERROR(ZeroAssignment);
QCLUSTER_ERROR(FrozenVertex);
QCLUSTER_ERROR(RankTooSmall);
QCLUSTER_ERROR(UnknownKind);
QCLUSTER_ERROR(NotUnimodular);
QCLUSTER_ERROR(SizeTooLarge);
QCLUSTER_ERROR(IndexOutOfRange);
QCLUSTER_ERROR(NotClosed);
QCLUSTER_ERROR(SchemaError);
QCLUSTER_ERROR(LoopEdge);
QCLUSTER_ERROR(DisconnectedGraph);
QCLUSTER_ERROR(UnknownNode);
QCLUSTER_ERROR(MissingColoring);
QCLUSTER_ERROR(CountMismatch);
QCLUSTER_ERROR(NotASink);
QCLUSTER_ERROR(HasIncomingGaugeArrow);
QCLUSTER_ERROR(UnknownPartition);
QCLUSTER_ERROR(NotGaugeEdge);
QCLUSTER_ERROR(NotInSpan);

#undef QCLUSTER_ERROR

}  // namespace qcluster
