#include "laddermat/sequences.hpp"

#include <stdexcept>
#include <string>

namespace laddermat {

BigInt seq_value(SeqKind kind, unsigned n) {
    BigInt prev = kind == SeqKind::A ? 1 : 0;
    if (n == 0)
        return prev;
    BigInt curr = 1;
    for (unsigned i = 2; i <= n; ++i) {
        BigInt next = 4 * curr - prev;
        prev = std::move(curr);
        curr = std::move(next);
    }
    return curr;
}

namespace {

QuadExt quad_pow(QuadExt base, unsigned exp) {
    QuadExt out{1, 0};
    while (exp > 0) {
        if (exp & 1u)
            out = out * base;
        base = base * base;
        exp >>= 1u;
    }
    return out;
}

BigInt a_val(unsigned n) { return seq_value(SeqKind::A, n); }
BigInt s_val(unsigned n) { return seq_value(SeqKind::S, n); }

[[noreturn]] void bound_error(const std::string& message) {
    throw std::domain_error("check_identity: " + message);
}

unsigned require_k(std::optional<unsigned> k, const char* name) {
    if (!k)
        bound_error(std::string(name) + " requires k");
    return *k;
}

} // namespace

QuadExt binet_value(SeqKind kind, unsigned n) {
    const QuadExt lambda{2, 1};
    const QuadExt lambda_inv{2, -1};
    QuadExt alpha, beta;
    if (kind == SeqKind::A) {
        alpha = {BigRational(1, 2), BigRational(-1, 6)};
        beta = {BigRational(1, 2), BigRational(1, 6)};
    } else {
        alpha = {0, BigRational(1, 6)};
        beta = {0, BigRational(-1, 6)};
    }
    return alpha * quad_pow(lambda, n) + beta * quad_pow(lambda_inv, n);
}

bool check_identity(IdentityId id, unsigned n, std::optional<unsigned> k) {
    switch (id) {
    case IdentityId::Sum: {
        BigInt total = 0;
        for (unsigned i = 1; i <= n; ++i)
            total += a_val(i);
        return s_val(n) == total;
    }
    case IdentityId::DoubleS:
        return 2 * s_val(n) == a_val(n + 1) - a_val(n);
    case IdentityId::Convolution: {
        const unsigned kk = require_k(k, "Convolution");
        if (kk > n)
            bound_error("Convolution requires k <= n, got k = " +
                        std::to_string(kk) + ", n = " + std::to_string(n));
        return a_val(n + 1) - a_val(n) ==
               a_val(kk + 1) * a_val(n - kk + 1) - a_val(kk) * a_val(n - kk);
    }
    case IdentityId::Split: {
        const unsigned kk = require_k(k, "Split");
        if (kk > n)
            bound_error("Split requires k <= n, got k = " +
                        std::to_string(kk) + ", n = " + std::to_string(n));
        return s_val(n) ==
               a_val(kk) * s_val(n - kk) + a_val(n - kk + 1) * s_val(kk);
    }
    case IdentityId::Square: {
        const BigInt sum = a_val(n + 1) + a_val(n);
        const BigInt diff = a_val(n + 1) - a_val(n);
        return sum * sum == 3 * diff * diff + 4;
    }
    case IdentityId::WeightedSum: {
        BigInt conv = 0;
        for (unsigned i = 1; i <= n; ++i)
            conv += a_val(i) * a_val(n + 1 - i);
        const BigInt an1 = a_val(n + 1);
        const BigInt an = a_val(n);
        const BigRational first =
            make_rational(BigInt(n) * (an1 + an) + (an1 - an), 6);
        const BigRational second =
            make_rational(BigInt(n + 1) * s_val(n) + BigInt(n) * an, 3);
        return BigRational(conv) == first && BigRational(conv) == second;
    }
    case IdentityId::FactorOdd: {
        const unsigned kk = require_k(k, "FactorOdd");
        if (n != 2 * kk + 1)
            bound_error("FactorOdd requires n = 2k + 1, got n = " +
                        std::to_string(n) + ", k = " + std::to_string(kk));
        const BigRational left = make_rational(a_val(n + 1) + a_val(n) - 2,
                                               a_val(n + 1) - a_val(n));
        const BigRational right = make_rational(s_val(kk + 1) + s_val(kk),
                                                s_val(kk + 1) - s_val(kk));
        return left == right;
    }
    case IdentityId::FactorEven: {
        const unsigned kk = require_k(k, "FactorEven");
        if (kk < 1)
            bound_error("FactorEven requires k >= 1, got k = 0");
        if (n != 2 * kk)
            bound_error("FactorEven requires n = 2k, got n = " +
                        std::to_string(n) + ", k = " + std::to_string(kk));
        const BigRational left = make_rational(a_val(n + 1) + a_val(n) - 2,
                                               a_val(n + 1) - a_val(n));
        const BigRational right =
            make_rational(s_val(kk + 1) + 2 * s_val(kk) + s_val(kk - 1),
                          s_val(kk + 1) - s_val(kk - 1));
        return left == right;
    }
    }
    throw std::logic_error("check_identity: unhandled identity id");
}

} // namespace laddermat
