// Command-line front end. Exit codes: 0 certified / verified, 1 not
// certified / refuted, 2 input error.

#ifndef IRRCERT_CLI_HPP
#define IRRCERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "irrcert/criteria.hpp"

namespace irrcert {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Deterministic SVG of Ap(a, b, q_k), Ap(a, b, lower sqrt(q_k)) (or the
/// bisector when q_k = 1) and floating-point root markers. Throws
/// std::invalid_argument when a == b or |f(a)| < |f(b)| fails.
std::string render_apollonius_svg(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k,
                                  DivisorClass cls, const FactorConfig& cfg = {});

}  // namespace irrcert

#endif  // IRRCERT_CLI_HPP
