#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace hamming {

using BigInt = mpz_class;
using Rational = mpq_class;

// counts[i] = number of vertices with digit-sum residue i, exact.
using ResidueCounts = std::vector<BigInt>;

inline BigInt pow_int(std::uint64_t base, std::uint64_t exp) {
    static_assert(sizeof(unsigned long) == 8, "needs 64-bit unsigned long");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t r) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return b;
}

inline std::optional<std::uint64_t> to_u64(const BigInt& x) {
    if (sgn(x) < 0 || !mpz_fits_ulong_p(x.get_mpz_t()))
        return std::nullopt;
    return mpz_get_ui(x.get_mpz_t());
}

}  // namespace hamming
