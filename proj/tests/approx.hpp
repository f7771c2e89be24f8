/**
 * @file approx.hpp
 * @brief Multiprecision closeness assertion shared by the numeric suites.
 *        Include after doctest.h.
 */
#pragma once

#include <random>

#include "ellcorr/numerics.hpp"

namespace testnum {

inline ellcorr::Real pi_real()
{
    ellcorr::Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

/// Uniform draw in [0, 1) from a deterministic generator.
inline double udraw(std::mt19937_64& g) { return (g() >> 11) * 0x1.0p-53; }

}  // namespace testnum

#define CHECK_NEAR(expr_a, expr_b, tolstr)                                               \
    do {                                                                                 \
        ellcorr::Real na_ = (expr_a);                                                    \
        ellcorr::Real nb_ = (expr_b);                                                    \
        ellcorr::Real nd_ = abs(na_ - nb_);                                              \
        INFO("lhs  = ", na_.str(30), "\nrhs  = ", nb_.str(30), "\ndiff = ", nd_.str(6)); \
        CHECK(nd_ < ellcorr::Real(tolstr));                                              \
    } while (0)
