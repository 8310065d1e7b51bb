#pragma once

// Seeded random values for property tests.

#include "qeuler/cyclo.hpp"
#include "qeuler/ratfunc.hpp"
#include "qeuler/zpoly.hpp"

#include <random>
#include <vector>

namespace qeuler::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }
    std::uint64_t u64() { return rng_(); }

    /// Uniform in [-2^bits, 2^bits].
    Int integer(unsigned bits) {
        Int r = 0;
        for (unsigned done = 0; done < bits; done += 32) {
            r <<= 32;
            r += static_cast<unsigned long>(rng_() & 0xffffffffu);
        }
        if (bits % 32) r >>= (32 - bits % 32);
        return coin() ? Int(-r) : r;
    }

    ZPoly zpoly(long max_deg, unsigned bits) {
        std::vector<Int> c(static_cast<std::size_t>(range(0, max_deg) + 1));
        for (auto& x : c) x = integer(bits);
        return ZPoly(std::move(c));
    }

    ZPoly nonzero_zpoly(long max_deg, unsigned bits) {
        for (;;) {
            ZPoly z = zpoly(max_deg, bits);
            if (!z.is_zero()) return z;
        }
    }

    Rat rational(long bound) {
        Rat r(range(-bound, bound), range(1, bound));
        r.canonicalize();
        return r;
    }

    RatFunc ratfunc(long max_deg = 3, unsigned bits = 4) {
        return RatFunc(zpoly(max_deg, bits), nonzero_zpoly(max_deg, bits));
    }

    RatFunc nonzero_ratfunc(long max_deg = 3, unsigned bits = 4) {
        return RatFunc(nonzero_zpoly(max_deg, bits), nonzero_zpoly(max_deg, bits));
    }

    CycloRF cyclo(CycloRing ring, long max_deg = 2, unsigned bits = 3) {
        std::vector<RatFunc> c(ring.phi());
        for (auto& x : c) x = coin() ? ratfunc(max_deg, bits) : RatFunc(zpoly(max_deg, bits));
        return CycloRF::from_coeffs(ring, c);
    }

    CycloRF nonzero_cyclo(CycloRing ring, long max_deg = 2, unsigned bits = 3) {
        for (;;) {
            CycloRF a = cyclo(ring, max_deg, bits);
            if (!a.is_zero()) return a;
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace qeuler::testing
