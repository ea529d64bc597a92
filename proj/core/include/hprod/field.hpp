#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hprod {

using Residue = std::uint32_t;

/// Arithmetic in the prime field GF(D) for an odd prime D.
///
/// Residues are kept in [0, D). D must be below 2^31 so that products of two
/// residues fit in 64 bits before reduction.
class Field {
public:
    explicit Field(std::uint32_t prime) : p_(prime) {
        if (prime < 3 || prime % 2 == 0 || !is_prime(prime))
            throw std::invalid_argument("field order must be an odd prime, got " +
                                        std::to_string(prime));
        if (prime >= (1u << 31))
            throw std::invalid_argument("field order too large");
    }

    [[nodiscard]] std::uint32_t order() const { return p_; }

    [[nodiscard]] Residue add(Residue a, Residue b) const {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
    [[nodiscard]] Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] Residue mul(Residue a, Residue b) const {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }

    /// Multiplicative inverse via Fermat; a must be nonzero.
    [[nodiscard]] Residue inv(Residue a) const {
        if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
        return pow(a, p_ - 2);
    }

    [[nodiscard]] Residue pow(Residue base, std::uint64_t e) const {
        std::uint64_t result = 1, b = base % p_;
        while (e) {
            if (e & 1) result = result * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<Residue>(result);
    }

    /// Maps an arbitrary signed integer to its residue.
    [[nodiscard]] Residue reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }

    friend bool operator==(const Field&, const Field&) = default;

    static bool is_prime(std::uint32_t v) {
        if (v < 2) return false;
        for (std::uint64_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace hprod
