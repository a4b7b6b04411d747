#include "bitrev/methods.hpp"

namespace bitrev {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kStockham: return "stockham";
    case Method::kBitwise: return "bitwise";
    case Method::kBytewise: return "bytewise";
    case Method::kPair: return "pair";
    case Method::kCobra: return "cobra";
    case Method::kCobraInPlace: return "cobra_inplace";
    case Method::kXor: return "xor";
    case Method::kUnrolled: return "unrolled";
    case Method::kRecursive: return "recursive";
    case Method::kSemiRecursive: return "semirecursive";
    case Method::kParallel: return "parallel";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace bitrev
