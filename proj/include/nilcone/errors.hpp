#pragma once

#include <stdexcept>
#include <string>

namespace nilcone {

// Domain errors carry a stable machine-readable code, used verbatim by the
// CLI for one-line stderr diagnostics.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define NILCONE_ERROR(Name)                                              \
    class Name : public domain_error {                                   \
    public:                                                              \
        explicit Name(const std::string& what) : domain_error(#Name, what) {} \
    }

NILCONE_ERROR(WeightMismatch);
NILCONE_ERROR(InvalidPartition);
NILCONE_ERROR(InvalidClass);
NILCONE_ERROR(InvalidGenus);
NILCONE_ERROR(InvalidHNType);
NILCONE_ERROR(TotalMismatch);
NILCONE_ERROR(NotUnitriangular);
NILCONE_ERROR(IncompatibleXi);
NILCONE_ERROR(MassMismatch);
NILCONE_ERROR(TrailingZero);
NILCONE_ERROR(NegativeRank);
NILCONE_ERROR(UnsupportedRank);
NILCONE_ERROR(UnsupportedMixedType);
NILCONE_ERROR(NotInDictionary);
NILCONE_ERROR(UnknownEntries);
NILCONE_ERROR(ParseError);

#undef NILCONE_ERROR

} // namespace nilcone
