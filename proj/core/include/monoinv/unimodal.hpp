#pragma once

#include <optional>

#include "monoinv/measure.hpp"
#include "monoinv/piecewise_monotone.hpp"
#include "monoinv/step_function.hpp"

namespace monoinv {

// Closed [lo, hi]; infinite ends mean the mode escapes to -inf or +inf.
struct ModalInterval {
    ExtendedReal lo;
    ExtendedReal hi;
    friend bool operator==(const ModalInterval&, const ModalInterval&) = default;
};

struct ShapeVerdict {
    bool holds = false;
    std::optional<ModalInterval> modes;  // set iff holds
};

// Segment values non-decreasing then non-increasing; with extend_by_zero a 0
// is appended past every finite carrier end. Modes: closure of the argmax.
ShapeVerdict is_quasi_concave(const StepFunction& f, bool extend_by_zero);
// Non-increasing then non-decreasing; modes: closure of the argmin.
ShapeVerdict is_quasi_convex(const StepFunction& f);

// F convex up to some nu and concave after it, read off the slopes and jumps
// of F extended to the whole line.
ShapeVerdict cdf_shape_check(const PiecewiseMonotone& F);
// Q concave up to alpha and convex after it, continuous at alpha.
ShapeVerdict qf_shape_check(const PiecewiseMonotone& Q);

// Generalized inverse of F extended to the whole line, so its regular domain
// is (F(lo+), F(hi-)).
InverseClass quantile_function(const PiecewiseMonotone& F);

// Slopes of the quantile function; 0 on its domain when it is constant.
// Error(QfNotAbsolutelyContinuous) when the quantile function jumps.
StepFunction quantile_density(const PiecewiseMonotone& F);

struct Classification {
    bool cdf_unimodal = false;
    std::optional<ModalInterval> modes;
    bool dens_unimodal_abs_part = false;
    std::optional<ModalInterval> abs_modes;
    bool quantile_unimodal = false;
    std::optional<ModalInterval> quantile_modes;
    std::optional<Atom> atom_at_mode;
    bool qf_absolutely_continuous = false;
};

// Throws Error(InternalInconsistency) if the verdicts contradict each other.
Classification classify(const PiecewiseMonotone& F);

// Q(alpha_lo+) == nu_lo and Q(alpha_hi-) == nu_hi for a unimodal F.
bool modal_correspondence_holds(const PiecewiseMonotone& F, const Classification& c);

}  // namespace monoinv
