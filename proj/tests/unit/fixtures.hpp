#pragma once

#include <doctest.h>

#include "monoinv/measure.hpp"
#include "monoinv/piecewise_monotone.hpp"

namespace fx {

using namespace monoinv;

inline Rational q(long n, long d = 1) { return make_rational(n, d); }
inline ExtendedReal e(long n, long d = 1) { return ExtendedReal(q(n, d)); }
inline ExtendedReal ninf() { return ExtendedReal::neg_inf(); }
inline ExtendedReal pinf() { return ExtendedReal::pos_inf(); }

// CDF of lambda|(0,1/2) + lambda|(3/2,2).
inline PiecewiseMonotone fix_a() {
    return PiecewiseMonotone::from_pieces(ninf(), pinf(), {0, q(1, 2), q(3, 2), 2},
                                          {{0, 0}, {1, 0}, {0, q(1, 2)}, {1, -1}, {0, 1}});
}

// Uniform CDF on the real line.
inline PiecewiseMonotone fix_b() { return PiecewiseMonotone::from_pieces(ninf(), pinf(), {0, 1}, {{0, 0}, {1, 0}, {0, 1}}); }

// Dirac at 0.
inline PiecewiseMonotone fix_c() { return PiecewiseMonotone::from_pieces(ninf(), pinf(), {0}, {{0, 0}, {0, 1}}); }

// 1/2 U(0,1) + 1/2 delta_{1/2}.
inline PiecewiseMonotone fix_d() {
    return PiecewiseMonotone::from_pieces(ninf(), pinf(), {0, q(1, 2), 1},
                                          {{0, 0}, {q(1, 2), 0}, {q(1, 2), q(1, 2)}, {0, 1}});
}

inline PiecewiseMeasure fix_d_measure() {
    return PiecewiseMeasure(Interval::real_line(), {{q(1, 2), q(1, 2)}}, {{e(0), e(1), q(1, 2)}});
}

template <class F>
ErrorKind error_kind(F&& f) {
    try {
        f();
    } catch (const Error& err) {
        return err.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InternalInconsistency;
}

}  // namespace fx
