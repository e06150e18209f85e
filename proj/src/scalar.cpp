#include "llab/scalar.hpp"

#include "llab/errors.hpp"

#include <cctype>

namespace llab {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Scalar parse_rational(std::string_view text) {
    const auto bad = [&] {
        return input_error("malformed rational '" + std::string(text) +
                           "' (expected 'p' or 'p/q' with q != 0)");
    };

    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer_token(num) || !is_integer_token(den)) throw bad();

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw bad();

    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q) {
    return q.get_str();
}

bool exact_sqrt(const Scalar& q, Scalar* root) {
    if (sgn(q) < 0) return false;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (root) *root = Scalar(rn, rd); // already reduced since num/den were
    return true;
}

} // namespace llab
