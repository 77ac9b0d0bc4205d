// Experiments on subalgebras of polynomials under the Wronskian bracket:
// bracket-image spans, closure and perfection tests, a taxonomy of spans by
// their degree-(k+1) content, divergence sequences for the unbounded-growth
// cases, and degree-sum diagnostics.
#pragma once

#include "shw/span.hpp"
#include "shw/wronskian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shw {

// Span of the bracket over all N-element subsets of the basis; multilinearity
// and total antisymmetry make subsets of basis vectors sufficient.
SpanBasis bracket_image(const BracketContext& ctx, const SpanBasis& basis);

struct ClosureWitness {
    std::vector<GenPolynomial> arguments;  // an N-subset of the basis
    GenPolynomial value;                   // its bracket, outside the span
};

struct ClosureReport {
    bool closed = false;
    std::optional<ClosureWitness> witness;  // present exactly when not closed
};

// Closed iff every bracket of basis vectors reduces into the span.
ClosureReport is_closed(const BracketContext& ctx, const SpanBasis& basis);

struct PerfectReport {
    bool perfect = false;
    SpanBasis missing;  // directions of the span absent from the bracket image
    PerfectReport() : missing(1) {}
};

// Perfect iff the bracket image equals the span itself.
PerfectReport is_perfect(const BracketContext& ctx, const SpanBasis& basis);

// Whether a single monomial top of degree k+1 can ever yield a perfect span:
// true exactly when k(d-1) <= 1, i.e. d = 1 (any k) or (d,k) = (2,1).
bool monomial_top_perfect_possible(unsigned dimension, unsigned order);

struct Classification {
    enum class Kind { Inconsistent, Trivial, Lonely, Chubby, Lanky, Unresolved };

    Kind kind = Kind::Unresolved;
    // Lonely: the unique degree-(k+1) direction.
    std::optional<GenPolynomial> top;
    // Chubby: two independent degree-(k+1) directions the span forces.
    std::optional<GenPolynomial> first_top;
    std::optional<GenPolynomial> second_top;
    // Lanky: the tower coordinate (0-based) and the height above k+1.
    std::optional<unsigned> coordinate;
    std::optional<unsigned> ell;
};

// Taxonomy of the span as given (no closure applied first):
//   Inconsistent — some polynomial of degree <= k is missing;
//   Trivial      — the span consists of degree-<= k polynomials only;
//   Lonely       — exactly one degree-(k+1) direction beyond, nothing higher;
//   Chubby       — at least two such directions are present or forced (a
//                  monomial of degree > k+1 divisible by two coordinates
//                  forces two);
//   Lanky        — the content above degree k is a pure power (x^i)^(k+ell);
//   Unresolved   — fractional or negative exponents put the span outside the
//                  taxonomy.
Classification classify(const BracketContext& ctx, const SpanBasis& basis);

struct GrowthReport {
    enum class Status { Stabilized, DegreeCapHit, IterCapHit };

    Status status = Status::IterCapHit;
    // dims[0] is the dimension of the reduced generators; each further entry
    // is the dimension after one more bracket-image adjunction.
    std::vector<std::size_t> dims;
    Rat max_degree_seen{0};
    SpanBasis final_basis;
    GrowthReport() : final_basis(1) {}
};

// Repeatedly adjoins the bracket image and re-reduces.  Stops when the
// dimension survives a full iteration unchanged (Stabilized), when content
// beyond max_degree appears (DegreeCapHit), or after max_iter iterations
// (IterCapHit).  max_degree 0 selects the default cap 4(k+1).
GrowthReport closure_iterate(const BracketContext& ctx,
                             const std::vector<GenPolynomial>& generators,
                             unsigned max_iter = 16, unsigned max_degree = 0);

struct WitnessStep {
    Rat coefficient;        // scalar relating the bracket value to the monomial
    GenPolynomial monomial; // monic representative
};

// The unbounded-growth sequence p_0 = p, p_{n+1} ~ [q, ..., p_n, ...] with all
// other slots holding standard monomials.  Accepts the two shapes that force
// divergence: a pure-power pair q = (x^i)^(k+1), p = (x^i)^(k+ell) with
// ell >= 2, or two distinct degree-(k+1) monomials where q involves at least
// two coordinates.  Inputs are normalized to monic representatives; the first
// entry reports p's original coefficient.  Returns length+1 steps.  A zero
// coefficient along the way would contradict the growth argument and raises
// std::logic_error.
std::vector<WitnessStep> divergence_witness(const BracketContext& ctx, const GenPolynomial& p,
                                            const GenPolynomial& q, unsigned length);

struct DegreeSumDiagnostics {
    enum class Label { Deficient, Exact, Abundant };

    std::vector<Rat> sums;      // per coordinate: the N largest degrees summed
    std::vector<Label> labels;  // comparison against the per-coordinate shift
    bool promising = false;     // abundant in every coordinate
    bool truncated = false;     // fewer than N distinct support monomials
};

// Per-coordinate degree budget of the span's support versus the shift the
// bracket subtracts.  A deficient coordinate forces every bracket to vanish;
// an exact one confines the image to coordinate degree zero.
DegreeSumDiagnostics degree_sum_diagnostics(const BracketContext& ctx, const SpanBasis& basis);

struct AlgebraFile {
    unsigned dimension = 1;
    unsigned order = 1;
    std::vector<GenPolynomial> generators;
};

// Reads { "dim": int, "order": int, "generators": [strings] } with generators
// in the polynomial grammar.  Malformed files raise std::invalid_argument.
AlgebraFile load_algebra(const std::string& path);

}  // namespace shw
