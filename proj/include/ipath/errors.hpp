#ifndef IPATH_ERRORS_HPP
#define IPATH_ERRORS_HPP

#include <stdexcept>

namespace ipath {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define IPATH_DECLARE_ERROR(name)                                                                  \
    class name : public Error {                                                                    \
    public:                                                                                        \
        using Error::Error;                                                                        \
    }

IPATH_DECLARE_ERROR(DegenerateInterval);
IPATH_DECLARE_ERROR(DuplicateEndpoint);
IPATH_DECLARE_ERROR(DuplicateVertexId);
IPATH_DECLARE_ERROR(EmptySet);
IPATH_DECLARE_ERROR(InvalidPath);
IPATH_DECLARE_ERROR(NormalizationFailed);
IPATH_DECLARE_ERROR(BudgetExceeded);
IPATH_DECLARE_ERROR(DoubleAugment);
IPATH_DECLARE_ERROR(MissingDummies);
IPATH_DECLARE_ERROR(InvalidSpecialPartition);
IPATH_DECLARE_ERROR(CorruptParentChain);
IPATH_DECLARE_ERROR(LiftFailure);
IPATH_DECLARE_ERROR(TooLarge);
IPATH_DECLARE_ERROR(InvalidSpec);
IPATH_DECLARE_ERROR(ParseError);
IPATH_DECLARE_ERROR(InvalidGraph);

#undef IPATH_DECLARE_ERROR

} // namespace ipath

#endif
