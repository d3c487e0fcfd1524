#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "monoinv/error.hpp"
#include "monoinv/interval.hpp"

namespace monoinv {

// x -> slope * x + intercept
struct Affine {
    Rational slope;
    Rational intercept;

    Rational at(const Rational& x) const { return slope * x + intercept; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

// Left and right limits at a knot; a jump iff left_limit < right_limit.
struct Breakpoint {
    Rational x;
    Rational left_limit;
    Rational right_limit;

    bool is_jump() const { return left_limit < right_limit; }
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

enum class Version { Left, Right };

// The version class [G] of a non-decreasing function that is real valued and
// piecewise affine on an open regular domain (lo, hi), embedded into the
// extended reals with -inf at and left of lo and +inf at and right of hi.
//
// Stored as knots x_1 < ... < x_k strictly inside the domain and one affine
// map per open segment. No value is stored at a knot, so a jump is described
// by its two one-sided limits only. The representation is canonical: a knot
// separating two identical affine maps is dropped, which makes structural
// equality the same thing as equality of classes.
class PiecewiseMonotone {
public:
    // Validates and canonicalizes. Throws Error with kind
    //   UnorderedBreakpoints  knots not strictly increasing or not interior,
    //   NonMonotone           negative slope or a downward jump,
    //   ConstantFunction      the class is constant on its domain,
    //   InvalidInterval       malformed domain or piece count.
    static PiecewiseMonotone from_pieces(ExtendedReal lo, ExtendedReal hi, std::vector<Rational> knots,
                                         std::vector<Affine> pieces);

    // Breakpoint form: needs at least one breakpoint (it anchors the values)
    // and breakpoints.size() + 1 slopes. Consecutive limits must agree with
    // the slope in between, else Error(InconsistentBreakpoints).
    static PiecewiseMonotone from_breakpoints(const Interval& domain, const std::vector<Breakpoint>& breakpoints,
                                              const std::vector<Rational>& slopes);

    static PiecewiseMonotone affine(const Interval& domain, Rational slope, Rational intercept);
    static PiecewiseMonotone identity(const Interval& domain = Interval::real_line());

    const ExtendedReal& lo() const { return lo_; }
    const ExtendedReal& hi() const { return hi_; }
    Interval regular_domain() const { return Interval::open(lo_, hi_); }

    std::span<const Rational> knots() const { return knots_; }
    std::span<const Affine> pieces() const { return pieces_; }
    std::size_t segment_count() const { return pieces_.size(); }

    // Segment i spans (segment_lo(i), segment_hi(i)).
    ExtendedReal segment_lo(std::size_t i) const;
    ExtendedReal segment_hi(std::size_t i) const;

    Rational left_limit(std::size_t knot) const { return pieces_[knot].at(knots_[knot]); }
    Rational right_limit(std::size_t knot) const { return pieces_[knot + 1].at(knots_[knot]); }
    bool is_jump(std::size_t knot) const { return left_limit(knot) < right_limit(knot); }
    std::vector<Breakpoint> breakpoints() const;

    // Index of the segment containing x; x must be inside the domain and not a knot.
    std::size_t segment_of(const Rational& x) const;
    // Index of x in knots(), if x is a knot.
    std::optional<std::size_t> knot_index(const Rational& x) const;

    // Limits of the real part at the domain ends: G(lo+) and G(hi-).
    ExtendedReal lower_limit() const;
    ExtendedReal upper_limit() const;

    friend bool operator==(const PiecewiseMonotone&, const PiecewiseMonotone&) = default;

private:
    PiecewiseMonotone() = default;

    ExtendedReal lo_;
    ExtendedReal hi_;
    std::vector<Rational> knots_;
    std::vector<Affine> pieces_;
};

// Re-checks every invariant (throws like from_pieces). Idempotent.
void validate(const PiecewiseMonotone& g);

// G_l(x) = G(x-) or G_r(x) = G(x+) of the embedded function.
ExtendedReal eval(const PiecewiseMonotone& g, const Rational& x, Version version);

// The excluded case of a generalized inverse: constant `value` on `domain`.
struct DegenerateInverse {
    Interval domain;
    Rational value;
};

using InverseClass = std::variant<PiecewiseMonotone, DegenerateInverse>;

// Generalized inverse by flipping the completed graph of G: sloped pieces
// invert, jumps of G become flats, flats of G become jumps, and the vertical
// boundary pieces at finite domain ends become flats at lo and hi.
InverseClass inverse_class(const PiecewiseMonotone& g);

// Same, but the excluded constant case throws Error(ConstantFunction).
PiecewiseMonotone generalized_inverse(const PiecewiseMonotone& g);

// I_G, the open regular domain.
Interval regular_domain(const PiecewiseMonotone& g);
// M_G = int(G^-1(I_H)), open; may be empty.
Interval mass_interval(const PiecewiseMonotone& g);
// S_G = cl(G^-1(M_H)), closed (infinite ends stay open).
Interval supporting_interval(const PiecewiseMonotone& g);
// I_H and M_H of the inverse, read off G directly (valid in the degenerate case too).
Interval inverse_regular_domain(const PiecewiseMonotone& g);
Interval inverse_mass_interval(const PiecewiseMonotone& g);

// Restriction to an open I inside the regular domain, re-embedded.
// Errors: EmptyInterval, InvalidInterval (I not inside), ConstantFunction.
PiecewiseMonotone restrict(const PiecewiseMonotone& g, const Interval& interval);

bool versions_equal(const PiecewiseMonotone& a, const PiecewiseMonotone& b);

// Maximal open segments of M_G on which G is constant.
std::vector<Interval> constancy_set(const PiecewiseMonotone& g);
std::vector<Rational> jump_locations(const PiecewiseMonotone& g);
bool has_jump(const PiecewiseMonotone& g);

// Extends a finite domain end by the constant limit value, so the result
// lives on the whole real line (the distribution function of the measure
// extended by zero).
PiecewiseMonotone extend_to_line(const PiecewiseMonotone& g);

// x -> -G(-x); swaps the roles of the left and right versions.
PiecewiseMonotone mirror(const PiecewiseMonotone& g);

// Definitional inverses computed by scanning G:
//   lower_inverse(t) = inf{x : t <= G_r(x)}   (= H_l(t))
//   upper_inverse(t) = sup{x : G_l(x) <= t}   (= H_r(t))
ExtendedReal lower_inverse(const PiecewiseMonotone& g, const ExtendedReal& t);
ExtendedReal upper_inverse(const PiecewiseMonotone& g, const ExtendedReal& t);

// int(G^-1(I)) for an open I.
Interval preimage_interior(const PiecewiseMonotone& g, const Interval& interval);

}  // namespace monoinv
