#ifndef K3MOD_ARITH_HPP
#define K3MOD_ARITH_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace k3mod {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy, mirrored by the CLI exit codes.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};
struct IdentityError : std::runtime_error {
    explicit IdentityError(const std::string& what) : std::runtime_error(what) {}
};

Int factorial(unsigned long n);

// Binomial coefficient binom(top, k) for arbitrary integer top, via the
// falling factorial top(top-1)...(top-k+1)/k!; integral for every integer top.
Int binomial(const Int& top, unsigned long k);

Int gcd(const Int& a, const Int& b);

// Representative of q mod 2Z in [0, 2).
Rat mod_2z(const Rat& q);

inline int sign(const Rat& q) { return sgn(q); }

}  // namespace k3mod

#endif
