#pragma once

#include <cstdint>

#include "ffdigit/field.hpp"

namespace ffdigit {

enum class DigitFunctionKind { ThueMorse, RudinShapiro };

// Sum of the B-digits of xi mod p; the fast path is the precomputed
// Tr(delta xi) table, which the field construction cross-checks against the
// digit-sum definition.
inline std::uint32_t thue_morse(const FieldContext& ctx, Fq xi) {
  return ctx.thue_morse(xi);
}

// Sum of consecutive digit products x_i x_{i+1} mod p; 0 for r = 1.
std::uint32_t rudin_shapiro(const FieldContext& ctx, Fq xi);

std::uint32_t digit_function(const FieldContext& ctx, DigitFunctionKind kind, Fq xi);

}  // namespace ffdigit
