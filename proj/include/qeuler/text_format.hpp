#pragma once

// Canonical text form used by the CLI, reports and fixtures.
//
//   polynomial : sparse, highest degree first, e.g. "3*q^2 - 1/2*q + 1"; "0"
//   RatFunc    : "<numerator> / <monic denominator>", e.g. "-q - 1 / q - 1"
//   CycloRF    : coefficients of zeta^0, zeta^1, ... joined by "; "

#include "qeuler/cyclo.hpp"
#include "qeuler/ratfunc.hpp"

#include <string>
#include <string_view>

namespace qeuler {

std::string to_string(const QPoly& p, char var = 'q');
std::string to_string(const RatFunc& r);
std::string to_string(const CycloRF& a);

QPoly parse_qpoly(std::string_view text, char var = 'q');
RatFunc parse_ratfunc(std::string_view text);
/// Throws ParseError unless the text holds exactly ring.phi() coefficients.
CycloRF parse_cyclo(std::string_view text, CycloRing ring);
/// "3", "-1/2"
Rat parse_rat(std::string_view text);

}  // namespace qeuler
