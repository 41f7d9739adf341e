#pragma once

/**
 * The two companion sequences behind every closed form in the library:
 *
 *   a_n: 1, 1, 3, 11, 41, 153, ...   x_n = 4 x_{n-1} - x_{n-2}, (a_0,a_1)=(1,1)
 *   s_n: 0, 1, 4, 15, 56, 209, ...   same recurrence, (s_0,s_1)=(0,1)
 *
 * s_n counts the spanning trees of the ladder on 2n vertices. Both sequences
 * admit Binet closed forms over Q(sqrt 3) with base 2 + sqrt 3; binet_value
 * evaluates those exactly, and check_identity evaluates both sides of the
 * classical identities relating the two sequences.
 */

#include "laddermat/rational.hpp"

#include <optional>

namespace laddermat {

enum class SeqKind { A, S };

/// Element p + q*sqrt(3) of Q(sqrt 3); components stay in lowest terms.
struct QuadExt {
    BigRational rational_part;
    BigRational root3_part;

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.rational_part + y.rational_part,
                x.root3_part + y.root3_part};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.rational_part - y.rational_part,
                x.root3_part - y.root3_part};
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return {x.rational_part * y.rational_part +
                    3 * x.root3_part * y.root3_part,
                x.rational_part * y.root3_part +
                    x.root3_part * y.rational_part};
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.rational_part == y.rational_part &&
               x.root3_part == y.root3_part;
    }

    /// True when the value is a plain rational integer.
    bool is_integral() const {
        return root3_part == 0 && denominator(rational_part) == 1;
    }
};

/// n-th term by linear iteration; exact and total for every n >= 0.
BigInt seq_value(SeqKind kind, unsigned n);

/// Binet evaluation alpha*lambda^n + beta*lambda^{-n} in Q(sqrt 3).
QuadExt binet_value(SeqKind kind, unsigned n);

/**
 * The identities checked by check_identity:
 *   Sum          s_n = sum_{i=1..n} a_i
 *   DoubleS      2 s_n = a_{n+1} - a_n
 *   Convolution  a_{n+1} - a_n = a_{k+1} a_{n-k+1} - a_k a_{n-k}    (needs k)
 *   Split        s_n = a_k s_{n-k} + a_{n-k+1} s_k                  (needs k)
 *   Square       (a_{n+1}+a_n)^2 = 3 (a_{n+1}-a_n)^2 + 4
 *   WeightedSum  sum_{i+j=n+1} a_i a_j against both printed closed forms
 *   FactorOdd    (a_{n+1}+a_n-2)/(a_{n+1}-a_n) = (s_{k+1}+s_k)/(s_{k+1}-s_k),
 *                n = 2k+1
 *   FactorEven   same left side = (s_{k+1}+2s_k+s_{k-1})/(s_{k+1}-s_{k-1}),
 *                n = 2k, k >= 1
 */
enum class IdentityId {
    Sum,
    DoubleS,
    Convolution,
    Split,
    Square,
    WeightedSum,
    FactorOdd,
    FactorEven
};

/**
 * Evaluates both sides of the named identity exactly and reports equality.
 * Raises std::domain_error naming the violated bound when k is missing,
 * out of range, or n has the wrong parity for the factorization cases.
 */
bool check_identity(IdentityId id, unsigned n,
                    std::optional<unsigned> k = std::nullopt);

} // namespace laddermat
