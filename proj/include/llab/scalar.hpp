#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace llab {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator), so equality is literal equality and arithmetic never rounds.
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

/// Strict parser for "p", "-p" or "p/q" with q > 0 after reduction.
/// Throws input_error on anything else, including a zero denominator.
Scalar parse_rational(std::string_view text);

/// Canonical form: "p" or "p/q" with q > 1.
std::string to_string(const Scalar& q);

/// True iff q >= 0 and sqrt(q) is again rational; then *root is that sqrt.
bool exact_sqrt(const Scalar& q, Scalar* root);

} // namespace llab
