#include "shw/vandermonde.hpp"

#include <stdexcept>

namespace shw {

namespace {

void require_tuples(const BracketContext& ctx, const std::vector<Exponents>& tuples) {
    if (tuples.size() != ctx.arity()) {
        throw std::invalid_argument("expected " + std::to_string(ctx.arity()) +
                                    " power tuples, got " + std::to_string(tuples.size()));
    }
    for (const Exponents& t : tuples) {
        if (t.size() != ctx.dimension()) {
            throw std::invalid_argument("power tuple length differs from the context dimension");
        }
    }
}

}  // namespace

Rat van_det(const BracketContext& ctx, const std::vector<Exponents>& tuples, DetMode mode) {
    require_tuples(ctx, tuples);
    const std::size_t n = ctx.arity();
    std::vector<Rat> cells(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        const MultiIndex& row = ctx.row(j);
        for (std::size_t c = 0; c < n; ++c) {
            Rat entry = 1;
            for (std::size_t i = 0; i < row.size() && entry != 0; ++i) {
                entry *= pow_rational(tuples[c][i], row[i]);
            }
            cells[j * n + c] = std::move(entry);
        }
    }
    return rational_determinant(cells, n, mode);
}

Rat quasi_triangular_det(const BracketContext& ctx, const std::vector<Exponents>& tuples,
                         DetMode mode) {
    require_tuples(ctx, tuples);
    const std::size_t n = ctx.arity();
    std::vector<Rat> cells(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        const MultiIndex& row = ctx.row(j);
        for (std::size_t c = 0; c < n; ++c) {
            Rat entry = 1;
            for (std::size_t i = 0; i < row.size() && entry != 0; ++i) {
                entry *= falling_factorial(tuples[c][i], row[i]);
            }
            cells[j * n + c] = std::move(entry);
        }
    }
    return rational_determinant(cells, n, mode);
}

VanishingCertificate vanishing_certificate(const BracketContext& ctx,
                                           const std::vector<Exponents>& tuples) {
    require_tuples(ctx, tuples);
    VanishingCertificate cert;
    const std::size_t n = tuples.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (tuples[a] == tuples[b]) {
                cert.kind = VanishingCertificate::Kind::DuplicateColumns;
                cert.first = a;
                cert.second = b;
                return cert;
            }
        }
    }
    bool natural = true;
    for (const Exponents& t : tuples) {
        if (!all_natural(t)) {
            natural = false;
            break;
        }
    }
    for (unsigned i = 0; i < ctx.dimension(); ++i) {
        bool constant = true;
        for (std::size_t c = 1; c < n && constant; ++c) {
            constant = tuples[c][i] == tuples[0][i];
        }
        if (!constant) {
            continue;
        }
        // An all-zero coordinate of natural tuples is deferred to the
        // degree-sum condition below, which then necessarily fires.
        if (tuples[0][i] != 0 || !natural) {
            cert.kind = VanishingCertificate::Kind::ConstantCoordinate;
            cert.coordinate = i;
            return cert;
        }
    }
    if (natural) {
        for (unsigned i = 0; i < ctx.dimension(); ++i) {
            Rat sum = 0;
            for (const Exponents& t : tuples) {
                sum += t[i];
            }
            if (sum < ctx.per_coordinate_shift()) {
                cert.kind = VanishingCertificate::Kind::DeficientDegree;
                cert.coordinate = i;
                return cert;
            }
        }
    }
    return cert;
}

Rat ordinary_vandermonde_factored(const std::vector<Rat>& ms) {
    Rat product = 1;
    for (std::size_t i = 0; i < ms.size() && product != 0; ++i) {
        for (std::size_t j = i + 1; j < ms.size() && product != 0; ++j) {
            product *= ms[j] - ms[i];
        }
    }
    return product;
}

}  // namespace shw
