#pragma once
// Fixed polynomials of the ratio analysis, in s, w, k (k is the cubic coefficient kappa).

#include "q4/exactpoly.hpp"

namespace q4::catalogue {

// 6(s-1)(s-k) w' = riccati_rhs
const RatPoly& riccati_rhs();
const RatPoly& riccati_denominator();  // 6(s-1)(s-k)

// w'' = concavity_a * concavity_b / (18 (s-1)^2 (s-k)^2)
const RatPoly& concavity_a();
const RatPoly& concavity_b();

// w''' = third_numerator / (108 (s-1)^3 (s-k)^3)
const RatPoly& third_numerator();
const RatPoly& third_eliminant();  // univariate in w

// d/ds (w''/w''' + (s - b)/3) = inflection_a * inflection_b / (17496 (s-1)^6 (s-k)^6 w'''^2)
const RatPoly& inflection_a();
const RatPoly& inflection_a_coeff(int i);   // coefficient of w^i, i = 0..2
const RatPoly& inflection_b_printed();      // as published, with the sign typo
const RatPoly& inflection_b();              // corrected
const RatPoly& inflection_b_eliminant();    // bivariate in s, k

// Derivative of inflection_a along the Riccati flow (times the common denominator).
RatPoly inflection_a_flow();

}  // namespace q4::catalogue
