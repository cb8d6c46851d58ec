#include "ffdigit/digitfn.hpp"

namespace ffdigit {

std::uint32_t rudin_shapiro(const FieldContext& ctx, Fq xi) {
  const auto d = ctx.digits_of(xi);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    acc += static_cast<std::uint64_t>(d[i]) * d[i + 1];
  return static_cast<std::uint32_t>(acc % ctx.p());
}

std::uint32_t digit_function(const FieldContext& ctx, DigitFunctionKind kind, Fq xi) {
  return kind == DigitFunctionKind::ThueMorse ? thue_morse(ctx, xi) : rudin_shapiro(ctx, xi);
}

}  // namespace ffdigit
