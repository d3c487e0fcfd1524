#pragma once

#include <vector>

#include "monoinv/interval.hpp"
#include "monoinv/piecewise_monotone.hpp"
#include "monoinv/step_function.hpp"

namespace monoinv {

struct Atom {
    Rational location;
    Rational mass;
    friend bool operator==(const Atom&, const Atom&) = default;
};

// Constant density on the open interval (lo, hi); either end may be infinite.
struct UniformPiece {
    ExtendedReal lo;
    ExtendedReal hi;
    Rational density;
    friend bool operator==(const UniformPiece&, const UniformPiece&) = default;
};

// Locally finite Borel measure on an open carrier: finitely many atoms plus
// finitely many uniform pieces. Canonical form (sorted, coinciding atoms
// summed, touching pieces of equal density merged) makes == measure equality.
class PiecewiseMeasure {
public:
    // Throws Error(InvalidMeasure) for nonpositive masses or densities,
    // overlapping pieces, or atoms/pieces outside the carrier.
    PiecewiseMeasure(Interval carrier, std::vector<Atom> atoms, std::vector<UniformPiece> pieces);

    static PiecewiseMeasure zero(Interval carrier);
    // Lebesgue measure restricted to `support` (empty support gives zero).
    static PiecewiseMeasure lebesgue(Interval carrier, const Interval& support);

    const Interval& carrier() const { return carrier_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<UniformPiece>& pieces() const { return pieces_; }
    bool is_zero() const { return atoms_.empty() && pieces_.empty(); }

    // Mass of an arbitrary interval (closed ends pick up atoms).
    ExtendedReal measure_of(const Interval& set) const;

    friend bool operator==(const PiecewiseMeasure&, const PiecewiseMeasure&) = default;

private:
    Interval carrier_;
    std::vector<Atom> atoms_;
    std::vector<UniformPiece> pieces_;
};

PiecewiseMeasure operator+(const PiecewiseMeasure& a, const PiecewiseMeasure& b);

// mu_G on I_G: jumps become atoms, slopes become densities.
PiecewiseMeasure associated_measure(const PiecewiseMonotone& g);

// Right-continuous G with G(z+) = 0 whose associated measure is m.
// Errors: ZeroMeasure, AnchorOutsideCarrier.
PiecewiseMonotone distribution_function(const PiecewiseMeasure& m, const Rational& anchor);

struct LebesgueDecomposition {
    PiecewiseMeasure abs;
    PiecewiseMeasure sing;
};

// With respect to Lebesgue measure: the singular part is purely atomic.
LebesgueDecomposition lebesgue_decompose(const PiecewiseMeasure& m);

// Radon-Nikodym derivative w.r.t. Lebesgue measure, 0 off the pieces.
// Error(NotAbsolutelyContinuous) when m has atoms.
StepFunction density(const PiecewiseMeasure& m);

// Image measure of m under the real part of t, carried on the regular domain
// of t's inverse. Errors: VersionAmbiguous (an atom sits on a jump of t),
// CarrierMismatch (m not carried inside I_t, or mass lands on the image's
// boundary).
PiecewiseMeasure pushforward(const PiecewiseMeasure& m, const PiecewiseMonotone& t);

enum class LebesgueMass {
    Own,        // lambda_G: Lebesgue on M_G, carried on I_G
    OfInverse,  // lambda_H: Lebesgue on M_H, carried on I_H
};

PiecewiseMeasure lebesgue_restricted(const PiecewiseMonotone& g, LebesgueMass which = LebesgueMass::OfInverse);

// a << b. Error(CarrierMismatch) for different carriers.
bool is_abs_cont_wrt(const PiecewiseMeasure& a, const PiecewiseMeasure& b);

// The three characterizations of absolute continuity of the generalized
// inverse H on an open I inside I_H, each computed on its own:
struct AbsContinuityVerdicts {
    Interval preimage;       // M = int(G^-1(I))
    bool inverse_continuous;  // H has no jump inside I
    bool positive_density;    // slopes of G > 0 a.e. on M
    bool lebesgue_dominated;  // lambda|M << mu_G
};

// Error(PreconditionFailed) if I is not an open nonempty subinterval of I_H.
AbsContinuityVerdicts abs_continuity_verdicts(const PiecewiseMonotone& g, const Interval& interval);

// Common verdict of the three; Error(InternalInconsistency) if they differ.
bool gen_inverse_abs_cont(const PiecewiseMonotone& g, const Interval& interval);

struct InverseRuleSegment {
    Interval segment;
    Rational g_abs;         // slope of G
    Rational h_prime_at_g;  // (h o G) on the segment
    bool holds;             // g_abs == 1 / (h o G)
};

struct InverseRuleReport {
    Interval mass_interval;
    std::vector<InverseRuleSegment> segments;
    bool holds = true;
};

// Segment-wise check of g_abs = 1/(h o G) on M_G, h the derivative of the
// generalized inverse. Error(PreconditionFailed) unless H is absolutely
// continuous on I_H.
InverseRuleReport inverse_rule_check(const PiecewiseMonotone& g);

}  // namespace monoinv
