#pragma once

#include <stdexcept>
#include <string>

namespace sumprod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field
struct CompositeModulus : Error { using Error::Error; };
struct EvenModulus : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct OrderNotDividing : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };

// sets
struct ModulusMismatch : Error { using Error::Error; };
struct EmptyOperand : Error { using Error::Error; };
struct ZeroDilation : Error { using Error::Error; };
struct NonPositiveK : Error { using Error::Error; };
struct TooSmall : Error { using Error::Error; };

// stats / spectrum
struct BadThreshold : Error { using Error::Error; };
struct DensityViolation : Error { using Error::Error; };
struct NotASubsetOfSpec : Error { using Error::Error; };
struct BadJ : Error { using Error::Error; };

// verify
struct CaseExplosion : Error { using Error::Error; };

}  // namespace sumprod
