#pragma once

#include "smoothdiv/ball.hpp"
#include "smoothdiv/rational.hpp"

namespace smoothdiv {

// Bernoulli numbers with B_1 = -1/2; exact, cached up to m = 64.
const Rat& bernoulli_number(unsigned m);

// Bernoulli polynomial B_j(t), convention B_2(t) = t^2 - t + 1/6.
Rat bernoulli_poly(unsigned j, const Rat& t);

// B_j({x})
Rat periodic_bernoulli(unsigned j, const Rat& x);

// psi(x) = {x} - 1/2
Rat psi_rat(const Rat& x);

// psi_2(x) = psi(x)^2 / 2 - 1/8, the antiderivative of psi vanishing at
// integers; ranges over [-1/8, 0]
Rat psi2_rat(const Rat& x);

// Gamma_j = 2 eta(j) j! / (2 pi)^j with eta(j) = zeta(j) for even j and 1 for
// odd j; dominates sup_t |B_j({t})|. Even j is exact: Gamma_j = |B_j|.
Ball gamma_factor(unsigned j, mpfr_prec_t prec);

// sup_t |B_3({t})| = sqrt(3)/36, for the sharpness test against Gamma_3
Ball sup_abs_b3(mpfr_prec_t prec);

}  // namespace smoothdiv
