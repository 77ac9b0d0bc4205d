#include "checks/checks.hpp"

#include "shw/algebra.hpp"
#include "shw/closed_forms.hpp"
#include "shw/parser.hpp"
#include "shw/vandermonde.hpp"
#include "shw/wronskian.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace shw::checks {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw CheckFailure(message);
    }
}

GenPolynomial poly(const char* text, unsigned dimension) {
    return parse_poly(text, dimension);
}

Rat random_rational(std::mt19937& rng, int magnitude, int max_denominator) {
    std::uniform_int_distribution<int> numerator(-magnitude, magnitude);
    std::uniform_int_distribution<int> denominator(1, max_denominator);
    return Rat(numerator(rng), denominator(rng));
}

std::vector<Exponents> random_tuples(std::mt19937& rng, std::size_t count, unsigned dimension,
                                     int magnitude, int max_denominator) {
    std::vector<Exponents> tuples(count);
    for (Exponents& tuple : tuples) {
        for (unsigned i = 0; i < dimension; ++i) {
            tuple.push_back(random_rational(rng, magnitude, max_denominator));
        }
    }
    return tuples;
}

// All natural exponent tuples of the given total degree, in some fixed order.
void homogeneous_tuples(unsigned dimension, unsigned degree, Exponents& prefix,
                        std::vector<Exponents>& out) {
    if (prefix.size() + 1 == dimension) {
        prefix.push_back(Rat(degree));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned take = 0; take <= degree; ++take) {
        prefix.push_back(Rat(take));
        homogeneous_tuples(dimension, degree - take, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Exponents> homogeneous_tuples(unsigned dimension, unsigned degree) {
    std::vector<Exponents> out;
    Exponents prefix;
    homogeneous_tuples(dimension, degree, prefix, out);
    return out;
}

// Ascending index combinations of size `choose` from [0, m).
template <typename Fn>
void combinations(std::size_t m, std::size_t choose, Fn&& fn) {
    if (choose > m) {
        return;
    }
    std::vector<std::size_t> idx(choose);
    for (std::size_t i = 0; i < choose; ++i) {
        idx[i] = i;
    }
    for (;;) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t pos = choose;
        while (pos > 0 && idx[pos - 1] == m - choose + pos - 1) {
            --pos;
        }
        if (pos == 0) {
            return;
        }
        ++idx[pos - 1];
        for (std::size_t q = pos; q < choose; ++q) {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

std::string describe_point(const Exponents& p, const Exponents& q) {
    std::ostringstream out;
    out << "p=(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        out << (i ? "," : "") << p[i];
    }
    out << ") q=(";
    for (std::size_t i = 0; i < q.size(); ++i) {
        out << (i ? "," : "") << q[i];
    }
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// 1. The order-one pair bracket reproduces the classical 2x2 traceless table.
void check_pair_bracket_table() {
    BracketContext ctx(1, 1);
    const GenPolynomial e = poly("1", 1);
    const GenPolynomial h = poly("-2*x", 1);
    const GenPolynomial f = poly("-x^2", 1);
    require(bracket(ctx, {h, e}) == e * Rat(2), "[h,e] must equal 2e");
    require(bracket(ctx, {h, f}) == f * Rat(-2), "[h,f] must equal -2f");
    require(bracket(ctx, {e, f}) == h, "[e,f] must equal h");
}

// ---------------------------------------------------------------------------
// 2. Removing one rung from the divided-power ladder leaves the complementary
//    divided power: [1, ..., x^l/l! removed, ..., x^n/n!] = x^(n-l)/(n-l)!.
void check_divided_power_tower() {
    for (unsigned n = 2; n <= 6; ++n) {
        BracketContext ctx(1, n - 1);
        std::vector<GenPolynomial> ladder;
        for (unsigned j = 0; j <= n; ++j) {
            ladder.push_back(GenPolynomial::monomial({Rat(j)}, Rat(Int(1), factorial(j))));
        }
        for (unsigned skip = 0; skip <= n; ++skip) {
            std::vector<GenPolynomial> args;
            for (unsigned j = 0; j <= n; ++j) {
                if (j != skip) {
                    args.push_back(ladder[j]);
                }
            }
            const GenPolynomial expected =
                GenPolynomial::monomial({Rat(n - skip)}, Rat(Int(1), factorial(n - skip)));
            require(bracket(ctx, args) == expected,
                    "ladder bracket off at arity " + std::to_string(n) + ", removed rung " +
                        std::to_string(skip));
        }
    }
}

// ---------------------------------------------------------------------------
// 3. The three planar order-one algebras with a single quadratic top: full
//    bracket tables, and closure stabilizing at dimension four.
void check_planar_top_tables() {
    BracketContext ctx(2, 1);
    struct Entry {
        const char* a;
        const char* b;
        const char* c;
        const char* value;
    };
    const Entry table[] = {
        {"1", "x", "y", "1"},
        {"1", "x", "x^2", "0"},     {"1", "y", "x^2", "-2*x"},  {"x", "y", "x^2", "-x^2"},
        {"1", "x", "x*y", "x"},     {"1", "y", "x*y", "-y"},    {"x", "y", "x*y", "-x*y"},
        {"1", "x", "y^2", "2*y"},   {"1", "y", "y^2", "0"},     {"x", "y", "y^2", "-y^2"},
    };
    for (const Entry& entry : table) {
        const GenPolynomial value =
            bracket(ctx, {poly(entry.a, 2), poly(entry.b, 2), poly(entry.c, 2)});
        require(value == poly(entry.value, 2),
                std::string("[") + entry.a + "," + entry.b + "," + entry.c + "] must equal " +
                    entry.value + ", engine gave " + format_poly(value));
    }
    for (const char* top : {"x^2", "x*y", "y^2"}) {
        const GrowthReport report =
            closure_iterate(ctx, {poly("1", 2), poly("x", 2), poly("y", 2), poly(top, 2)});
        require(report.status == GrowthReport::Status::Stabilized && report.dims.back() == 4,
                std::string("closure of the ") + top + " algebra must stabilize at dimension 4");
    }
}

// ---------------------------------------------------------------------------
// 4. The power-tuple determinant agrees with its falling-factorial form on
//    random rational inputs, and takes the pinned value 4 on the standard
//    rows at (d,k) = (2,2).
void check_vandermonde_two_forms() {
    std::mt19937 rng(20260823u);
    for (unsigned d = 1; d <= 3; ++d) {
        for (unsigned k = 1; k <= 3; ++k) {
            BracketContext ctx(d, k);
            for (int trial = 0; trial < 200; ++trial) {
                const std::vector<Exponents> tuples = random_tuples(rng, ctx.arity(), d, 9, 4);
                require(van_det(ctx, tuples) == quasi_triangular_det(ctx, tuples),
                        "the two determinant forms disagree at d=" + std::to_string(d) +
                            " k=" + std::to_string(k) + " trial " + std::to_string(trial));
            }
        }
    }
    BracketContext c22(2, 2);
    std::vector<Exponents> standard;
    for (const MultiIndex& row : c22.rows()) {
        standard.push_back(to_exponents(row));
    }
    require(van_det(c22, standard) == 4, "standard-row determinant at (2,2) must be 4");
    require(quasi_triangular_det(c22, standard) == 4,
            "standard-row falling-factorial determinant at (2,2) must be 4");
}

// ---------------------------------------------------------------------------
// 5. Adding a common constant to any coordinate of every power tuple leaves
//    the determinant unchanged.
void check_translation_invariance() {
    std::mt19937 rng(31415u);
    for (unsigned d = 1; d <= 3; ++d) {
        for (unsigned k = 1; k <= 3; ++k) {
            BracketContext ctx(d, k);
            for (int trial = 0; trial < 100; ++trial) {
                const std::vector<Exponents> tuples = random_tuples(rng, ctx.arity(), d, 6, 3);
                Exponents shift;
                for (unsigned i = 0; i < d; ++i) {
                    shift.push_back(random_rational(rng, 6, 3));
                }
                std::vector<Exponents> moved = tuples;
                for (Exponents& tuple : moved) {
                    for (unsigned i = 0; i < d; ++i) {
                        tuple[i] += shift[i];
                    }
                }
                require(van_det(ctx, tuples) == van_det(ctx, moved),
                        "translation changed the determinant at d=" + std::to_string(d) +
                            " k=" + std::to_string(k) + " trial " + std::to_string(trial));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// 6. Row-sum identities: over all derivative rows, each coordinate sums to
//    k N/(d+1) and the total to k d N/(d+1), both integral, for d,k <= 8.
void check_degree_shift_sums() {
    for (unsigned d = 1; d <= 8; ++d) {
        for (unsigned k = 1; k <= 8; ++k) {
            const std::vector<MultiIndex> rows = enumerate_rows(d, k);
            const Int n = arity(d, k);
            require(Int(rows.size()) == n, "row count must equal C(d+k,k)");
            require((Int(k) * n) % (d + 1) == 0, "per-coordinate sum must be integral");
            const Int expected = Int(k) * n / (d + 1);
            Int total = 0;
            for (unsigned i = 0; i < d; ++i) {
                Int sum = 0;
                for (const MultiIndex& row : rows) {
                    sum += row[i];
                }
                require(sum == expected, "coordinate sum mismatch at d=" + std::to_string(d) +
                                             " k=" + std::to_string(k));
                total += sum;
            }
            require(total == Int(d) * expected, "total sum mismatch at d=" + std::to_string(d) +
                                                    " k=" + std::to_string(k));
            BracketContext ctx(d, k);
            require(ctx.per_coordinate_shift() == Rat(expected) &&
                        ctx.total_shift() == Rat(Int(d) * expected),
                    "context shifts disagree with the enumerated sums");
        }
    }
}

// ---------------------------------------------------------------------------
// 7. Replacing one standard slot by an arbitrary monomial: the closed-form
//    single-slot bracket equals the engine, exhaustively for d,k <= 3 over
//    every slot and every monomial with exponents up to k+2.
void check_slot_replacement_formula() {
    for (unsigned d = 1; d <= 3; ++d) {
        for (unsigned k = 1; k <= 3; ++k) {
            BracketContext ctx(d, k);
            const std::vector<GenPolynomial> base = standard_monomials(ctx);
            std::vector<unsigned> exponent(d, 0);
            for (;;) {
                Exponents a;
                for (unsigned value : exponent) {
                    a.push_back(Rat(value));
                }
                for (std::size_t j = 1; j <= ctx.arity(); ++j) {
                    std::vector<GenPolynomial> args = base;
                    args[j - 1] = GenPolynomial::monomial(a, Rat(1));
                    require(lonely_structure_bracket(ctx, j, a) == bracket(ctx, args),
                            "single-slot closed form off at d=" + std::to_string(d) +
                                " k=" + std::to_string(k) + " slot " + std::to_string(j));
                }
                std::size_t i = 0;
                while (i < d && exponent[i] == k + 2) {
                    exponent[i] = 0;
                    ++i;
                }
                if (i == d) {
                    break;
                }
                ++exponent[i];
            }
        }
    }
}

// ---------------------------------------------------------------------------
// 8. The two-top bracket formula in the plane: closed form versus engine on
//    full exponent grids for k <= 3 and random samples for k = 4, 5; the
//    unnormalized-argument constants 2, 48, 331776 and 19813556551680 are
//    pinned and reproduced.
void check_top_pair_formula() {
    const auto run_point = [](const BracketContext& ctx, const std::vector<GenPolynomial>& base,
                              const Exponents& p, const Exponents& q) {
        std::vector<GenPolynomial> args = base;
        args[0] = GenPolynomial::monomial(q, Rat(1));
        args[1] = GenPolynomial::monomial(p, Rat(1));
        const GenPolynomial engine = bracket(ctx, args);
        const MonomialValue closed = golden_bracket(ctx, p, q);
        require(closed.to_polynomial(2) == engine,
                "two-top closed form off at k=" + std::to_string(ctx.order()) + " " +
                    describe_point(p, q));
    };

    for (unsigned k = 1; k <= 3; ++k) {
        BracketContext ctx(2, k);
        const std::vector<GenPolynomial> base = standard_monomials(ctx);
        for (unsigned n1 = 0; n1 <= 5; ++n1) {
            for (unsigned n2 = 0; n2 <= 5; ++n2) {
                for (unsigned m1 = 0; m1 <= 5; ++m1) {
                    for (unsigned m2 = 0; m2 <= 5; ++m2) {
                        run_point(ctx, base, {Rat(n1), Rat(n2)}, {Rat(m1), Rat(m2)});
                    }
                }
            }
        }
    }
    std::mt19937 rng(88001u);
    std::uniform_int_distribution<int> exponent(0, 5);
    for (unsigned k = 4; k <= 5; ++k) {
        BracketContext ctx(2, k);
        const std::vector<GenPolynomial> base = standard_monomials(ctx);
        for (int trial = 0; trial < 200; ++trial) {
            run_point(ctx, base,
                      {Rat(exponent(rng)), Rat(exponent(rng))},
                      {Rat(exponent(rng)), Rat(exponent(rng))});
        }
    }

    // Unnormalized arguments scale the bracket by the product of the slot
    // factorials; the resulting overall constants are pinned literally.
    const std::array<const char*, 4> pinned = {"2", "48", "331776", "19813556551680"};
    for (unsigned k = 2; k <= 5; ++k) {
        BracketContext ctx(2, k);
        Int product = 1;
        for (std::size_t j = 2; j < ctx.arity(); ++j) {
            product *= multi_factorial(ctx.row(j));
        }
        const Int constant = product / (factorial(k) * factorial(k - 1));
        require(constant == Int(pinned[k - 2]),
                "unnormalized constant at k=" + std::to_string(k) + " must be " + pinned[k - 2]);
        const std::vector<GenPolynomial> base = standard_monomials_unnormalized(ctx);
        for (int trial = 0; trial < 25; ++trial) {
            const Exponents p = {Rat(exponent(rng)), Rat(exponent(rng))};
            const Exponents q = {Rat(exponent(rng)), Rat(exponent(rng))};
            std::vector<GenPolynomial> args = base;
            args[0] = GenPolynomial::monomial(q, Rat(1));
            args[1] = GenPolynomial::monomial(p, Rat(1));
            const Rat dp = p[0] + p[1];
            const Rat dq = q[0] + q[1];
            Rat coefficient(constant);
            for (unsigned l = 2; l <= k; ++l) {
                coefficient *= (dp - l) * (dq - l);
            }
            coefficient *= (dp - 1) * q[0] - (dq - 1) * p[0];
            GenPolynomial expected(2);
            if (coefficient != 0) {
                expected = GenPolynomial::monomial({p[0] + q[0] - 1, p[1] + q[1]}, coefficient);
            }
            require(bracket(ctx, args) == expected,
                    "unnormalized two-top value off at k=" + std::to_string(k) + " " +
                        describe_point(p, q));
        }
    }
}

// ---------------------------------------------------------------------------
// 9. Replacing the constant slot by q and the x^2 slot by p (unnormalized
//    arguments): the engine reproduces the closed-form family with pinned
//    constants -1, -48, -497664 and -39627113103360 for k = 2..5.
void check_square_slot_replacement() {
    const std::array<const char*, 4> pinned = {"-1", "-48", "-497664", "-39627113103360"};
    std::mt19937 rng(99017u);
    std::uniform_int_distribution<int> exponent(0, 6);
    for (unsigned k = 2; k <= 5; ++k) {
        BracketContext ctx(2, k);
        const Rat constant{Int(pinned[k - 2])};
        const std::vector<GenPolynomial> base = standard_monomials_unnormalized(ctx);
        require(ctx.row(3) == MultiIndex({2, 0}), "slot 4 must carry the x^2 row in the plane");
        for (int trial = 0; trial < 50; ++trial) {
            const Exponents p = {Rat(exponent(rng)), Rat(exponent(rng))};
            const Exponents q = {Rat(exponent(rng)), Rat(exponent(rng))};
            std::vector<GenPolynomial> args = base;
            args[0] = GenPolynomial::monomial(q, Rat(1));
            args[3] = GenPolynomial::monomial(p, Rat(1));
            const Rat dp = p[0] + p[1];
            const Rat dq = q[0] + q[1];
            Rat coefficient = constant;
            for (unsigned l = 3; l <= k; ++l) {
                coefficient *= (dp - l) * (dq - l);
            }
            coefficient *= (dp - 1) * (dp - 2) * q[0] * (q[0] - 1) -
                           (dq - 1) * (dq - 2) * p[0] * (p[0] - 1);
            GenPolynomial expected(2);
            if (coefficient != 0) {
                expected =
                    GenPolynomial::monomial({p[0] + q[0] - 2, p[1] + q[1]}, coefficient);
            }
            require(bracket(ctx, args) == expected,
                    "square-slot replacement off at k=" + std::to_string(k) + " " +
                        describe_point(p, q));
        }
    }
}

// ---------------------------------------------------------------------------
// 10. A single homogeneous top of degree k+1 over the full degree-k space
//     always closes with dimension N+1, for d,k <= 3 and 20 random tops each.
void check_single_top_closure() {
    std::mt19937 rng(55100u);
    std::uniform_int_distribution<int> coefficient(-3, 3);
    for (unsigned d = 1; d <= 3; ++d) {
        for (unsigned k = 1; k <= 3; ++k) {
            BracketContext ctx(d, k);
            const std::vector<Exponents> monomials = homogeneous_tuples(d, k + 1);
            for (int trial = 0; trial < 20; ++trial) {
                GenPolynomial top(d);
                for (const Exponents& exponents : monomials) {
                    top.add_term(exponents, Rat(coefficient(rng)));
                }
                if (top.is_zero()) {
                    top.add_term(monomials.front(), Rat(1));
                }
                std::vector<GenPolynomial> generators = standard_monomials(ctx);
                generators.push_back(top);
                const SpanBasis basis = span_reduce(generators, d);
                require(basis.size() == ctx.arity() + 1,
                        "single-top span must have dimension N+1 at d=" + std::to_string(d) +
                            " k=" + std::to_string(k));
                require(is_closed(ctx, basis).closed,
                        "single-top span must be closed at d=" + std::to_string(d) +
                            " k=" + std::to_string(k) + " trial " + std::to_string(trial));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// 11. Divergence: for the two-top and pure-power-tower generator shapes, the
//     witness sequence yields ten consecutive nonzero steps whose degrees
//     advance by k, and closure runs into the degree cap with strictly
//     increasing dimensions.
void check_growth_divergence() {
    struct Case {
        unsigned d;
        unsigned k;
        const char* p;
        const char* q;
    };
    const Case cases[] = {
        {2, 1, "x^2", "x*y"},   {2, 1, "y^2", "x*y"},   {2, 1, "x^3", "x^2"},
        {2, 1, "y^3", "y^2"},   {2, 2, "y^3", "x^2*y"}, {2, 2, "x*y^2", "x^2*y"},
        {2, 2, "y^3", "x*y^2"}, {2, 2, "x^4", "x^3"},   {3, 1, "z^2", "x*y"},
        {3, 1, "x^2", "y*z"},   {3, 1, "z^3", "z^2"},
    };
    for (const Case& c : cases) {
        BracketContext ctx(c.d, c.k);
        const GenPolynomial p = poly(c.p, c.d);
        const GenPolynomial q = poly(c.q, c.d);
        const std::string label = std::string("(p=") + c.p + ", q=" + c.q + ", d=" +
                                  std::to_string(c.d) + ", k=" + std::to_string(c.k) + ")";
        const std::vector<WitnessStep> steps = divergence_witness(ctx, p, q, 10);
        require(steps.size() == 11, "witness sequence must carry 11 entries " + label);
        const Rat base_degree = total_of(p.leading_exponents());
        for (std::size_t n = 0; n < steps.size(); ++n) {
            require(steps[n].coefficient != 0, "witness coefficient vanished " + label);
            require(total_of(steps[n].monomial.leading_exponents()) ==
                        base_degree + Rat(n * c.k),
                    "witness degree off the arithmetic progression at step " +
                        std::to_string(n) + " " + label);
        }
        std::vector<GenPolynomial> generators = standard_monomials(ctx);
        generators.push_back(p);
        generators.push_back(q);
        const GrowthReport report = closure_iterate(ctx, generators, 16, 2 * (c.k + 1));
        require(report.status == GrowthReport::Status::DegreeCapHit,
                "closure must run into the degree cap " + label);
        for (std::size_t i = 1; i < report.dims.size(); ++i) {
            require(report.dims[i - 1] < report.dims[i],
                    "dimensions must increase strictly up to the cap " + label);
        }
    }
}

// ---------------------------------------------------------------------------
// 12. Perfection: the symmetric quadratic top in three coordinates is perfect
//     with its four pinned relations; the planar x*y algebra is perfect; the
//     x^2, y^2 and spatial x*y algebras are not (with the pinned missing
//     directions); and the existence of a perfect single-monomial top matches
//     the closed criterion k(d-1) <= 1 on six small grids.
void check_perfection_survey() {
    BracketContext c31(3, 1);
    const GenPolynomial sym = poly("x*y + y*z + z*x", 3);
    require(bracket(c31, {poly("x", 3), poly("y", 3), poly("z", 3), sym}) == sym,
            "[x,y,z,p] must reproduce p for the symmetric top");
    require(bracket(c31, {poly("1", 3), poly("x", 3), poly("y", 3), sym}) == poly("x + y", 3),
            "[1,x,y,p] must equal x + y");
    require(bracket(c31, {poly("1", 3), poly("x", 3), poly("z", 3), sym}) == poly("-x - z", 3),
            "[1,x,z,p] must equal -x - z");
    require(bracket(c31, {poly("1", 3), poly("y", 3), poly("z", 3), sym}) == poly("y + z", 3),
            "[1,y,z,p] must equal y + z");
    const SpanBasis sym_span = span_reduce(
        {poly("1", 3), poly("x", 3), poly("y", 3), poly("z", 3), sym}, 3);
    require(is_perfect(c31, sym_span).perfect, "the symmetric-top algebra must be perfect");

    BracketContext c21(2, 1);
    const auto planar_span = [&](const char* top) {
        return span_reduce({poly("1", 2), poly("x", 2), poly("y", 2), poly(top, 2)}, 2);
    };
    require(is_perfect(c21, planar_span("x*y")).perfect, "the x*y algebra must be perfect");
    const PerfectReport rep_x2 = is_perfect(c21, planar_span("x^2"));
    require(!rep_x2.perfect && rep_x2.missing.size() == 1 &&
                rep_x2.missing.contains(poly("y", 2)),
            "the x^2 algebra must miss exactly the direction y");
    const PerfectReport rep_y2 = is_perfect(c21, planar_span("y^2"));
    require(!rep_y2.perfect && rep_y2.missing.size() == 1 &&
                rep_y2.missing.contains(poly("x", 2)),
            "the y^2 algebra must miss exactly the direction x");
    const SpanBasis spatial = span_reduce(
        {poly("1", 3), poly("x", 3), poly("y", 3), poly("z", 3), poly("x*y", 3)}, 3);
    const PerfectReport rep_xy3 = is_perfect(c31, spatial);
    require(!rep_xy3.perfect && rep_xy3.missing.contains(poly("z", 3)),
            "the spatial x*y algebra must miss the direction z");

    const std::array<std::pair<unsigned, unsigned>, 6> grids = {
        {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}};
    for (const auto& [d, k] : grids) {
        BracketContext ctx(d, k);
        bool any_perfect = false;
        for (const Exponents& top : homogeneous_tuples(d, k + 1)) {
            std::vector<GenPolynomial> generators = standard_monomials(ctx);
            generators.push_back(GenPolynomial::monomial(top, Rat(1)));
            if (is_perfect(ctx, span_reduce(generators, d)).perfect) {
                any_perfect = true;
            }
        }
        require(any_perfect == monomial_top_perfect_possible(d, k),
                "perfect-monomial-top existence must match k(d-1) <= 1 at d=" +
                    std::to_string(d) + " k=" + std::to_string(k));
    }
}

// ---------------------------------------------------------------------------
// 13. Shifted generalized monomials: the coefficient-and-sum law against the
//     engine on random rational index tuples, and the classical one-variable
//     relation [a_i, a_j] = (j-i) a_{i+j}.
void check_shifted_power_relations() {
    BracketContext c11(1, 1);
    const WittBracket pinned = witt_bracket(c11, {{Rat(3)}, {Rat(5)}});
    require(pinned.omega == 2 && pinned.index_sum == Exponents{Rat(8)},
            "the pair (3,5) must bracket to 2 a_8");
    for (int i = -3; i <= 3; ++i) {
        for (int j = i; j <= 4; ++j) {
            const WittBracket wb = witt_bracket(c11, {{Rat(i)}, {Rat(j)}});
            require(wb.omega == Rat(j - i), "one-variable coefficient must be j-i");
        }
    }
    std::mt19937 rng(77700u);
    const std::array<std::pair<unsigned, unsigned>, 3> grids = {{{1, 1}, {1, 2}, {2, 1}}};
    for (const auto& [d, k] : grids) {
        BracketContext ctx(d, k);
        for (int trial = 0; trial < 100; ++trial) {
            const std::vector<Exponents> indices = random_tuples(rng, ctx.arity(), d, 6, 3);
            const WittBracket wb = witt_bracket(ctx, indices);
            std::vector<GenPolynomial> args;
            for (const Exponents& index : indices) {
                args.push_back(witt_generator(ctx, index));
            }
            const GenPolynomial expected = witt_generator(ctx, wb.index_sum) * wb.omega;
            require(bracket(ctx, args) == expected,
                    "shifted-monomial bracket law fails at d=" + std::to_string(d) +
                        " k=" + std::to_string(k) + " trial " + std::to_string(trial));
        }
    }
}

// ---------------------------------------------------------------------------
// 14. Uniqueness of the constant-valued bracket: among all natural monomial
//     argument sets with bounded exponents, only the standard set produces a
//     nonzero constant.
void check_constant_bracket_uniqueness() {
    const std::array<std::pair<unsigned, unsigned>, 3> grids = {{{1, 1}, {1, 2}, {2, 1}}};
    for (const auto& [d, k] : grids) {
        BracketContext ctx(d, k);
        // Any natural argument set reaching a constant has per-coordinate
        // exponent sums equal to the shift, so the bound shift+1 is complete.
        const unsigned bound = static_cast<unsigned>(
            numerator(ctx.per_coordinate_shift()).convert_to<unsigned long>()) + 1;
        std::vector<Exponents> universe;
        for (unsigned degree = 0; degree <= bound * d; ++degree) {
            for (const Exponents& tuple : homogeneous_tuples(d, degree)) {
                bool admissible = true;
                for (const Rat& e : tuple) {
                    if (e > bound) {
                        admissible = false;
                    }
                }
                if (admissible) {
                    universe.push_back(tuple);
                }
            }
        }
        std::vector<Exponents> standard;
        for (const MultiIndex& row : ctx.rows()) {
            standard.push_back(to_exponents(row));
        }
        std::sort(standard.begin(), standard.end());
        const Exponents zero(d, Rat(0));
        unsigned hits = 0;
        combinations(universe.size(), ctx.arity(), [&](const std::vector<std::size_t>& idx) {
            std::vector<Exponents> tuples;
            for (std::size_t position : idx) {
                tuples.push_back(universe[position]);
            }
            const MonomialValue value = bracket_monomial(ctx, tuples);
            const bool constant = value.coefficient != 0 && value.exponents == zero;
            std::sort(tuples.begin(), tuples.end());
            require(constant == (tuples == standard),
                    "constant-valued argument sets must be exactly the standard one at d=" +
                        std::to_string(d) + " k=" + std::to_string(k));
            if (constant) {
                ++hits;
            }
        });
        require(hits == 1, "the standard set must appear exactly once in the search");
        // Repeating a monomial kills the bracket outright.
        std::vector<Exponents> repeated(ctx.arity(), standard.front());
        require(bracket_monomial(ctx, repeated).coefficient == 0,
                "repeated arguments must bracket to zero");
    }
}

}  // namespace

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = {
        {"pair-bracket-table", "order-one pair brackets reproduce the classical traceless table",
         check_pair_bracket_table},
        {"divided-power-tower", "removing one rung of the divided-power ladder leaves its mirror",
         check_divided_power_tower},
        {"planar-top-tables", "planar quadratic-top bracket tables and dimension-four closure",
         check_planar_top_tables},
        {"vandermonde-two-forms", "power and falling-factorial determinants agree",
         check_vandermonde_two_forms},
        {"translation-invariance", "power-tuple determinants ignore common coordinate shifts",
         check_translation_invariance},
        {"degree-shift-sums", "derivative-row degree sums match the shift constants for d,k <= 8",
         check_degree_shift_sums},
        {"slot-replacement-formula", "single-slot closed form equals the engine exhaustively",
         check_slot_replacement_formula},
        {"top-pair-formula", "two-top closed form and its unnormalized constants",
         check_top_pair_formula},
        {"square-slot-replacement", "constant and x^2 slots replaced: closed family with pinned constants",
         check_square_slot_replacement},
        {"single-top-closure", "one homogeneous top always closes at dimension N+1",
         check_single_top_closure},
        {"growth-divergence", "two-top and tower shapes grow without bound",
         check_growth_divergence},
        {"perfection-survey", "perfect and imperfect spans match their pinned verdicts",
         check_perfection_survey},
        {"shifted-power-relations", "shifted generalized monomials close with determinant weights",
         check_shifted_power_relations},
        {"constant-bracket-uniqueness", "only the standard arguments bracket to a constant",
         check_constant_bracket_uniqueness},
    };
    return checks;
}

unsigned run_all(std::ostream& out) {
    const std::vector<Check>& checks = all_checks();
    unsigned failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        out << "[" << std::setw(2) << i + 1 << "/" << checks.size() << "] " << checks[i].name
            << " ... " << std::flush;
        try {
            checks[i].body();
            out << "PASS\n";
        } catch (const std::exception& error) {
            ++failures;
            out << "FAIL\n    " << error.what() << "\n";
        }
    }
    return failures;
}

}  // namespace shw::checks
