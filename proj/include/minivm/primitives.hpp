#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "minivm/value.hpp"

// Reference semantics for the runtime primitives. The compiled form of each
// operator is the inlined tag-dispatch template built in
// inline_primitives.cpp; the functions here define what those templates must
// compute and are what the reference AST interpreter executes. Differential
// tests hold the two paths to the same answers.

namespace minivm::rt {

// Static error messages shared by both execution paths.
namespace errmsg {
inline constexpr std::string_view kNumericOperand =
    "operator requires numeric operands";
inline constexpr std::string_view kBitwiseOperand =
    "bitwise operator requires int32-convertible operands";
inline constexpr std::string_view kCompareOperand =
    "relational comparison requires numeric operands";
inline constexpr std::string_view kNotCallable = "value is not callable";
inline constexpr std::string_view kBadPropertyBase =
    "cannot access property on this value";
inline constexpr std::string_view kNoSuchProperty =
    "no such property on this value";
inline constexpr std::string_view kBadIndex = "invalid index for this value";
inline constexpr std::string_view kBadPropertyPut =
    "cannot assign property on this value";
inline constexpr std::string_view kNegativeArrayIndex =
    "array index must be non-negative";
}  // namespace errmsg

// Overflow-checked int32 arithmetic: empty result signals overflow.
std::optional<int32_t> addI32Ovf(int32_t a, int32_t b);
std::optional<int32_t> subI32Ovf(int32_t a, int32_t b);
std::optional<int32_t> mulI32Ovf(int32_t a, int32_t b);

// Exact int32 division: engaged only when the quotient is exact and
// representable; otherwise the caller falls back to float64 division.
std::optional<int32_t> divI32Exact(int32_t a, int32_t b);
// Checked int32 remainder: empty on b == 0 or INT32_MIN % -1.
std::optional<int32_t> modI32Checked(int32_t a, int32_t b);

int32_t shlI32(int32_t a, int32_t b);  // count masked to 5 bits
int32_t shrI32(int32_t a, int32_t b);  // arithmetic shift

// float64 that converts exactly to an int32 (used by the bitwise slow path).
std::optional<int32_t> exactInt32(double d);

enum class BitOp : uint8_t { And, Or, Xor, Shl, Shr };
enum class CmpOp : uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

// Operator semantics. All take/return tagged values; heap access for the
// string/object arms. These throw RuntimeError exactly where the inlined
// templates reach an error terminator.
Value primAdd(Heap& heap, Value x, Value y);
Value primSub(Heap& heap, Value x, Value y);
Value primMul(Heap& heap, Value x, Value y);
Value primDiv(Heap& heap, Value x, Value y);
Value primMod(Heap& heap, Value x, Value y);
Value primBit(Heap& heap, BitOp op, Value x, Value y);
Value primNeg(Heap& heap, Value x);
Value primNot(Heap& heap, Value x);
// Relational (< <= > >=): numbers only.
Value primRel(Heap& heap, CmpOp op, Value x, Value y);
// Equality (== !=): tag-strict, no coercion across tags.
Value primEq(Heap& heap, CmpOp op, Value x, Value y);
Value primToString(Heap& heap, Value x);

Value primGetProp(Heap& heap, Value base, const std::string& name);
Value primGetIndex(Heap& heap, Value base, Value index);
void primPutProp(Heap& heap, Value base, const std::string& name, Value v);
void primPutIndex(Heap& heap, Value base, Value index, Value v);

bool cmpI32(CmpOp op, int32_t a, int32_t b);
bool cmpF64(CmpOp op, double a, double b);

}  // namespace minivm::rt
