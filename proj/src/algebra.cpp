#include "shw/algebra.hpp"

#include "shw/parallel.hpp"
#include "shw/parser.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace shw {

namespace {

void require_context_match(const BracketContext& ctx, unsigned dimension) {
    if (ctx.dimension() != dimension) {
        throw std::invalid_argument("span dimension differs from the bracket context dimension");
    }
}

// Visits every ascending index subset of size `choose` drawn from [0, m);
// the visitor returns false to stop early.
template <typename Fn>
void for_each_subset(std::size_t m, std::size_t choose, Fn&& fn) {
    if (choose > m) {
        return;
    }
    std::vector<std::size_t> idx(choose);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) {
            return;
        }
        // Advance the rightmost index that still has room, resetting the tail.
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

// Exact bracket of arbitrary polynomials through the monomial coefficient
// formula: expand multilinearly over the argument terms and sum the resulting
// monomial brackets.  Choices with a repeated power tuple contribute zero
// (duplicate determinant columns) and are skipped outright.
GenPolynomial bracket_of_list(const BracketContext& ctx,
                              const std::vector<const GenPolynomial*>& args) {
    GenPolynomial out(ctx.dimension());
    const std::size_t n = args.size();
    std::vector<GenPolynomial::TermMap::const_iterator> begin(n), end(n), pick(n);
    for (std::size_t i = 0; i < n; ++i) {
        begin[i] = args[i]->terms().begin();
        end[i] = args[i]->terms().end();
        if (begin[i] == end[i]) {
            return out;  // a zero argument kills every bracket
        }
        pick[i] = begin[i];
    }
    std::vector<Exponents> tuple(n);
    for (;;) {
        bool duplicate = false;
        for (std::size_t i = 0; i < n && !duplicate; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (pick[i]->first == pick[j]->first) {
                    duplicate = true;
                    break;
                }
            }
        }
        if (!duplicate) {
            for (std::size_t i = 0; i < n; ++i) {
                tuple[i] = pick[i]->first;
            }
            const MonomialValue value = bracket_monomial(ctx, tuple);
            if (value.coefficient != 0) {
                Rat coefficient = value.coefficient;
                for (std::size_t i = 0; i < n; ++i) {
                    coefficient *= pick[i]->second;
                }
                out.add_term(*value.exponents, coefficient);
            }
        }
        std::size_t i = n - 1;
        for (;;) {
            ++pick[i];
            if (pick[i] != end[i]) {
                break;
            }
            pick[i] = begin[i];
            if (i == 0) {
                return out;
            }
            --i;
        }
    }
}

std::vector<const GenPolynomial*> gather(const std::vector<GenPolynomial>& elements,
                                         const std::vector<std::size_t>& idx) {
    std::vector<const GenPolynomial*> args;
    args.reserve(idx.size());
    for (std::size_t position : idx) {
        args.push_back(&elements[position]);
    }
    return args;
}

// Degree-(k+1) part of a polynomial (the canonical order is graded, so terms
// of equal norm are contiguous).
GenPolynomial homogeneous_top(const GenPolynomial& p, unsigned k) {
    GenPolynomial out(p.dimension());
    const Rat target(k + 1);
    for (const auto& [exponents, coefficient] : p.terms()) {
        if (total_of(exponents) == target) {
            out.add_term(exponents, coefficient);
        }
    }
    return out;
}

// A degree-(k+1) sub-tuple of `tall`, filled greedily from the given end.
// With at least two positive coordinates and total degree >= k+2, filling
// from the front and from the back give two distinct tuples.
Exponents top_divisor(const Exponents& tall, unsigned k, bool from_front) {
    Exponents out(tall.size(), Rat(0));
    Rat room(k + 1);
    for (std::size_t step = 0; step < tall.size() && room > 0; ++step) {
        const std::size_t i = from_front ? step : tall.size() - 1 - step;
        const Rat take = tall[i] < room ? tall[i] : room;
        out[i] = take;
        room -= take;
    }
    return out;
}

}  // namespace

SpanBasis bracket_image(const BracketContext& ctx, const SpanBasis& basis) {
    require_context_match(ctx, basis.dimension());
    SpanBasis image(basis.dimension());
    const std::vector<GenPolynomial> elements = basis.elements();
    const std::size_t n = ctx.arity();
    if (elements.size() < n) {
        return image;
    }
    std::vector<std::vector<std::size_t>> subsets;
    for_each_subset(elements.size(), n, [&](const std::vector<std::size_t>& idx) {
        subsets.push_back(idx);
        return true;
    });
    std::vector<GenPolynomial> values(subsets.size(), GenPolynomial(basis.dimension()));
    parallel_for(subsets.size(), [&](std::size_t s) {
        values[s] = bracket_of_list(ctx, gather(elements, subsets[s]));
    });
    for (GenPolynomial& value : values) {
        image.insert(std::move(value));
    }
    return image;
}

ClosureReport is_closed(const BracketContext& ctx, const SpanBasis& basis) {
    require_context_match(ctx, basis.dimension());
    ClosureReport report;
    report.closed = true;
    const std::vector<GenPolynomial> elements = basis.elements();
    for_each_subset(elements.size(), ctx.arity(), [&](const std::vector<std::size_t>& idx) {
        GenPolynomial value = bracket_of_list(ctx, gather(elements, idx));
        if (basis.reduce(value).is_zero()) {
            return true;
        }
        ClosureWitness witness;
        for (std::size_t position : idx) {
            witness.arguments.push_back(elements[position]);
        }
        witness.value = std::move(value);
        report.closed = false;
        report.witness = std::move(witness);
        return false;
    });
    return report;
}

PerfectReport is_perfect(const BracketContext& ctx, const SpanBasis& basis) {
    require_context_match(ctx, basis.dimension());
    const SpanBasis image = bracket_image(ctx, basis);
    PerfectReport report;
    report.missing = SpanBasis(basis.dimension());
    for (const GenPolynomial& element : basis.elements()) {
        GenPolynomial remainder = image.reduce(element);
        if (!remainder.is_zero()) {
            report.missing.insert(std::move(remainder));
        }
    }
    bool contained = true;
    for (const GenPolynomial& element : image.elements()) {
        if (!basis.contains(element)) {
            contained = false;
            break;
        }
    }
    report.perfect = contained && report.missing.empty();
    return report;
}

bool monomial_top_perfect_possible(unsigned dimension, unsigned order) {
    if (dimension < 1 || order < 1) {
        throw std::invalid_argument("dimension and order must both be at least 1");
    }
    return order * (dimension - 1) <= 1;
}

Classification classify(const BracketContext& ctx, const SpanBasis& basis) {
    require_context_match(ctx, basis.dimension());
    Classification out;

    // Every monomial of degree <= k must be present, else the span is deemed
    // inconsistent before anything else is inspected.
    for (const MultiIndex& row : ctx.rows()) {
        if (!basis.contains(GenPolynomial::monomial(to_exponents(row), Rat(1)))) {
            out.kind = Classification::Kind::Inconsistent;
            return out;
        }
    }

    const std::vector<GenPolynomial> elements = basis.elements();
    const Rat k_degree(ctx.order());
    bool beyond = false;
    bool natural = true;
    for (const GenPolynomial& element : elements) {
        if (!element.all_natural_exponents()) {
            natural = false;
        } else if (total_of(element.leading_exponents()) > k_degree) {
            beyond = true;
        }
    }
    if (natural && !beyond) {
        out.kind = Classification::Kind::Trivial;
        return out;
    }
    if (!natural) {
        out.kind = Classification::Kind::Unresolved;
        return out;
    }

    // Support monomials above degree k, highest first.
    std::map<Exponents, bool, TermOrder> high;
    for (const GenPolynomial& element : elements) {
        for (const auto& [exponents, coefficient] : element.terms()) {
            (void)coefficient;
            if (total_of(exponents) > k_degree) {
                high.emplace(exponents, true);
            }
        }
    }

    const Rat top_degree(ctx.order() + 1);
    const Exponents* first_tall = nullptr;
    for (const auto& [exponents, flag] : high) {
        (void)flag;
        if (total_of(exponents) <= top_degree) {
            continue;
        }
        unsigned positive = 0;
        for (const Rat& e : exponents) {
            if (e > 0) {
                ++positive;
            }
        }
        if (positive >= 2) {
            // A monomial of degree > k+1 in two coordinates forces two
            // independent degree-(k+1) directions; report two of its
            // degree-(k+1) divisors as the pair.
            out.kind = Classification::Kind::Chubby;
            out.first_top =
                GenPolynomial::monomial(top_divisor(exponents, ctx.order(), true), Rat(1));
            out.second_top =
                GenPolynomial::monomial(top_divisor(exponents, ctx.order(), false), Rat(1));
            return out;
        }
        if (first_tall == nullptr) {
            first_tall = &exponents;
        }
    }
    if (first_tall != nullptr) {
        out.kind = Classification::Kind::Lanky;
        for (std::size_t i = 0; i < first_tall->size(); ++i) {
            if ((*first_tall)[i] > 0) {
                out.coordinate = static_cast<unsigned>(i);
                const Rat height = (*first_tall)[i] - ctx.order();
                out.ell = static_cast<unsigned>(numerator(height).convert_to<unsigned long>());
                break;
            }
        }
        return out;
    }

    // Nothing beyond degree k+1: count the independent top directions.
    std::vector<GenPolynomial> tops;
    for (const GenPolynomial& element : elements) {
        if (total_of(element.leading_exponents()) == top_degree) {
            tops.push_back(homogeneous_top(element, ctx.order()));
        }
    }
    if (tops.size() == 1) {
        out.kind = Classification::Kind::Lonely;
        out.top = std::move(tops.front());
    } else {
        out.kind = Classification::Kind::Chubby;
        out.first_top = std::move(tops[0]);
        out.second_top = std::move(tops[1]);
    }
    return out;
}

GrowthReport closure_iterate(const BracketContext& ctx,
                             const std::vector<GenPolynomial>& generators, unsigned max_iter,
                             unsigned max_degree) {
    if (max_iter < 1) {
        throw std::invalid_argument("at least one iteration is required");
    }
    if (max_degree == 0) {
        max_degree = 4 * (ctx.order() + 1);
    }
    if (max_degree < ctx.order() + 1) {
        throw std::invalid_argument("the degree cap must be at least k+1");
    }
    const Rat cap(max_degree);

    GrowthReport report;
    report.final_basis = SpanBasis(ctx.dimension());
    SpanBasis& basis = report.final_basis;

    // `family` holds an audited generating set: every bracket of arguments
    // drawn purely from it already lies in the span.  `fresh` holds the
    // directions adjoined since; the next pass only needs subsets touching it.
    std::vector<GenPolynomial> family;
    std::vector<GenPolynomial> fresh;
    for (const GenPolynomial& generator : generators) {
        if (generator.dimension() != ctx.dimension()) {
            throw std::invalid_argument("generator dimension differs from the context dimension");
        }
        if (basis.insert(generator)) {
            fresh.push_back(generator);
            const Rat degree = total_of(generator.leading_exponents());
            if (degree > report.max_degree_seen) {
                report.max_degree_seen = degree;
            }
        }
    }
    report.dims.push_back(basis.size());
    if (report.max_degree_seen > cap) {
        report.status = GrowthReport::Status::DegreeCapHit;
        return report;
    }

    const std::size_t n = ctx.arity();
    for (unsigned iter = 0; iter < max_iter; ++iter) {
        const std::size_t audited = family.size();
        std::vector<GenPolynomial> combined = family;
        combined.insert(combined.end(), fresh.begin(), fresh.end());
        std::vector<GenPolynomial> adjoined;
        bool capped = false;
        for_each_subset(combined.size(), n, [&](const std::vector<std::size_t>& idx) {
            if (idx.back() < audited) {
                return true;  // all arguments audited: bracket already in span
            }
            GenPolynomial value = bracket_of_list(ctx, gather(combined, idx));
            if (value.is_zero() || !basis.insert(value)) {
                return true;
            }
            const Rat degree = total_of(value.leading_exponents());
            if (degree > report.max_degree_seen) {
                report.max_degree_seen = degree;
            }
            adjoined.push_back(std::move(value));
            if (degree > cap) {
                capped = true;  // growth past the cap: stop mid-pass
                return false;
            }
            return true;
        });
        family = std::move(combined);
        fresh = std::move(adjoined);
        report.dims.push_back(basis.size());
        if (capped) {
            report.status = GrowthReport::Status::DegreeCapHit;
            return report;
        }
        if (report.dims[report.dims.size() - 2] == report.dims.back()) {
            report.status = GrowthReport::Status::Stabilized;
            return report;
        }
    }
    report.status = GrowthReport::Status::IterCapHit;
    return report;
}

std::vector<WitnessStep> divergence_witness(const BracketContext& ctx, const GenPolynomial& p,
                                            const GenPolynomial& q, unsigned length) {
    if (!p.is_monomial() || !q.is_monomial() || !p.all_natural_exponents() ||
        !q.all_natural_exponents() || p.dimension() != ctx.dimension() ||
        q.dimension() != ctx.dimension()) {
        throw std::invalid_argument("p and q must be natural monomials in the context dimension");
    }
    const unsigned k = ctx.order();
    const Exponents np = p.leading_exponents();
    const Exponents mq = q.leading_exponents();
    if (total_of(mq) != Rat(k + 1)) {
        throw std::invalid_argument("q must have total degree k+1");
    }

    std::size_t q_positive = 0;
    std::size_t q_coordinate = 0;
    for (std::size_t i = 0; i < mq.size(); ++i) {
        if (mq[i] > 0) {
            ++q_positive;
            q_coordinate = i;
        }
    }

    std::size_t divide_coordinate = 0;
    if (q_positive == 1) {
        // Pure-power tower: p must sit higher on the same coordinate.
        if (np[q_coordinate] != total_of(np) || total_of(np) < Rat(k + 2)) {
            throw std::invalid_argument(
                "with a pure-power q, p must be a power of the same coordinate of degree >= k+2");
        }
        divide_coordinate = q_coordinate;
    } else {
        if (total_of(np) != Rat(k + 1) || np == mq) {
            throw std::invalid_argument(
                "with a mixed q, p must be a distinct monomial of total degree k+1");
        }
        while (divide_coordinate < mq.size() && mq[divide_coordinate] <= np[divide_coordinate]) {
            ++divide_coordinate;
        }
    }

    std::vector<GenPolynomial> args = standard_monomials(ctx);
    args[0] = GenPolynomial::monomial(mq, Rat(1));
    const std::size_t slot = 1 + divide_coordinate;

    std::vector<WitnessStep> steps;
    steps.reserve(length + 1);
    GenPolynomial current = GenPolynomial::monomial(np, Rat(1));
    steps.push_back({p.leading_coefficient(), current});
    for (unsigned n = 1; n <= length; ++n) {
        args[slot] = current;
        GenPolynomial value = bracket(ctx, args);
        if (value.is_zero()) {
            throw std::logic_error("divergence step " + std::to_string(n) +
                                   " vanished; the growth argument guarantees a nonzero value");
        }
        current = GenPolynomial::monomial(value.leading_exponents(), Rat(1));
        steps.push_back({value.leading_coefficient(), current});
    }
    return steps;
}

DegreeSumDiagnostics degree_sum_diagnostics(const BracketContext& ctx, const SpanBasis& basis) {
    require_context_match(ctx, basis.dimension());
    DegreeSumDiagnostics out;
    const std::vector<Exponents> support = basis.support();
    const std::size_t n = ctx.arity();
    out.truncated = support.size() < n;
    out.promising = true;
    const Rat shift = ctx.per_coordinate_shift();
    for (unsigned i = 0; i < ctx.dimension(); ++i) {
        std::vector<Rat> degrees;
        degrees.reserve(support.size());
        for (const Exponents& exponents : support) {
            degrees.push_back(exponents[i]);
        }
        std::sort(degrees.begin(), degrees.end(), [](const Rat& a, const Rat& b) { return a > b; });
        Rat sum(0);
        for (std::size_t t = 0; t < degrees.size() && t < n; ++t) {
            sum += degrees[t];
        }
        DegreeSumDiagnostics::Label label = DegreeSumDiagnostics::Label::Exact;
        if (sum < shift) {
            label = DegreeSumDiagnostics::Label::Deficient;
        } else if (sum > shift) {
            label = DegreeSumDiagnostics::Label::Abundant;
        }
        if (label != DegreeSumDiagnostics::Label::Abundant) {
            out.promising = false;
        }
        out.sums.push_back(sum);
        out.labels.push_back(label);
    }
    return out;
}

AlgebraFile load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open algebra file: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& error) {
        throw std::invalid_argument("algebra file " + path + " is not valid JSON: " + error.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("order") ||
        !doc.contains("generators")) {
        throw std::invalid_argument("algebra file " + path +
                                    " must be an object with dim, order and generators");
    }
    if (!doc["dim"].is_number_integer() || !doc["order"].is_number_integer() ||
        !doc["generators"].is_array()) {
        throw std::invalid_argument("algebra file " + path +
                                    ": dim and order must be integers, generators an array");
    }
    const long long dim = doc["dim"].get<long long>();
    const long long order = doc["order"].get<long long>();
    if (dim < 1 || dim > static_cast<long long>(kMaxNamedVariables)) {
        throw std::invalid_argument("algebra file " + path + ": dim must lie in 1.." +
                                    std::to_string(kMaxNamedVariables));
    }
    if (order < 1) {
        throw std::invalid_argument("algebra file " + path + ": order must be at least 1");
    }
    AlgebraFile out;
    out.dimension = static_cast<unsigned>(dim);
    out.order = static_cast<unsigned>(order);
    for (const auto& entry : doc["generators"]) {
        if (!entry.is_string()) {
            throw std::invalid_argument("algebra file " + path +
                                        ": generators must be polynomial strings");
        }
        try {
            out.generators.push_back(parse_poly(entry.get<std::string>(), out.dimension));
        } catch (const std::invalid_argument& error) {
            throw std::invalid_argument("algebra file " + path + ", generator \"" +
                                        entry.get<std::string>() + "\": " + error.what());
        }
    }
    return out;
}

}  // namespace shw
