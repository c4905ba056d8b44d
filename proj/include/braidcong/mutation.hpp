#pragma once

// Build-time fault injection used by the mutation-soundness acceptance check.
// Production builds leave BRAIDCONG_MUTATION undefined (== 0).

#ifndef BRAIDCONG_MUTATION
#define BRAIDCONG_MUTATION 0
#endif

namespace braidcong {

enum class Mutation : int {
  none = 0,
  burau_block = 1,           // transposes the off-diagonal of the Burau generator block
  form_sign = 2,             // negates the alternating form
  y_formula = 3,             // flips the sign of the lambda_{n-1} term in the step-two vector
  certificate_exponent = 4,  // bumps the exponent of the T_y factor by m
};

inline constexpr Mutation active_mutation = static_cast<Mutation>(BRAIDCONG_MUTATION);

}  // namespace braidcong
