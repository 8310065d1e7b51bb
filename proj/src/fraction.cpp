#include "fraction.hpp"

#include "qeuler/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace qeuler::detail {

void normalize_content(std::span<ZPoly> nums, ZPoly& den) {
    Int c = den.content();
    for (const auto& n : nums) {
        if (c == 1) break;
        const Int cn = n.content();
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
    }
    if (c != 1) {
        den.divexact(c);
        for (auto& n : nums) n.divexact(c);
    }
    if (sgn(den.lc()) < 0) {
        den = -den;
        for (auto& n : nums) n = -n;
    }
}

void canonicalize(std::span<ZPoly> nums, ZPoly& den, const ZPoly* bound) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    if (std::all_of(nums.begin(), nums.end(), [](const ZPoly& n) { return n.is_zero(); })) {
        den = ZPoly{1};
        return;
    }
    if (!den.is_constant() && !(bound && bound->is_constant())) {
        std::vector<std::size_t> order(nums.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return nums[a].degree() < nums[b].degree(); });
        ZPoly g = bound ? gcd(*bound, den) : gcd(den, ZPoly{});
        for (std::size_t i : order) {
            if (nums[i].is_zero()) continue;
            g = gcd(g, nums[i]);
            if (g.is_constant()) break;
        }
        if (!g.is_constant()) {
            den = divexact(den, g);
            for (auto& n : nums) {
                if (!n.is_zero()) n = divexact(n, g);
            }
        }
    }
    normalize_content(nums, den);
}

void substitute_q_inverse(std::span<ZPoly> nums, ZPoly& den) {
    long top = den.degree();
    for (const auto& n : nums) top = std::max(top, n.degree());
    const auto len = static_cast<std::size_t>(top + 1);
    std::size_t v = std::numeric_limits<std::size_t>::max();
    den = den.reversed(len);
    v = den.q_valuation();
    for (auto& n : nums) {
        n = n.reversed(len);
        if (!n.is_zero()) v = std::min(v, n.q_valuation());
    }
    if (v > 0) {
        den = den.shifted_down(v);
        for (auto& n : nums) n = n.shifted_down(v);
    }
    if (sgn(den.lc()) < 0) {
        den = -den;
        for (auto& n : nums) n = -n;
    }
}

}  // namespace qeuler::detail
