#include "minivm/primitives.hpp"

#include <cmath>
#include <limits>

namespace minivm::rt {

std::optional<int32_t> addI32Ovf(int32_t a, int32_t b) {
  int64_t r = int64_t(a) + int64_t(b);
  if (r < INT32_MIN || r > INT32_MAX) return std::nullopt;
  return int32_t(r);
}

std::optional<int32_t> subI32Ovf(int32_t a, int32_t b) {
  int64_t r = int64_t(a) - int64_t(b);
  if (r < INT32_MIN || r > INT32_MAX) return std::nullopt;
  return int32_t(r);
}

std::optional<int32_t> mulI32Ovf(int32_t a, int32_t b) {
  int64_t r = int64_t(a) * int64_t(b);
  if (r < INT32_MIN || r > INT32_MAX) return std::nullopt;
  return int32_t(r);
}

std::optional<int32_t> divI32Exact(int32_t a, int32_t b) {
  if (b == 0) return std::nullopt;
  if (a == INT32_MIN && b == -1) return std::nullopt;
  if (a % b != 0) return std::nullopt;
  return a / b;
}

std::optional<int32_t> modI32Checked(int32_t a, int32_t b) {
  if (b == 0) return std::nullopt;
  if (a == INT32_MIN && b == -1) return std::nullopt;
  return a % b;  // truncated, sign of dividend
}

int32_t shlI32(int32_t a, int32_t b) {
  return int32_t(uint32_t(a) << (uint32_t(b) & 31));
}

int32_t shrI32(int32_t a, int32_t b) { return a >> (uint32_t(b) & 31); }

std::optional<int32_t> exactInt32(double d) {
  if (std::isnan(d) || d < double(INT32_MIN) || d > double(INT32_MAX))
    return std::nullopt;
  int32_t i = int32_t(d);
  if (double(i) != d) return std::nullopt;
  return i;
}

bool cmpI32(CmpOp op, int32_t a, int32_t b) {
  switch (op) {
    case CmpOp::Eq: return a == b;
    case CmpOp::Ne: return a != b;
    case CmpOp::Lt: return a < b;
    case CmpOp::Le: return a <= b;
    case CmpOp::Gt: return a > b;
    case CmpOp::Ge: return a >= b;
  }
  return false;
}

bool cmpF64(CmpOp op, double a, double b) {
  switch (op) {
    case CmpOp::Eq: return a == b;
    case CmpOp::Ne: return a != b;
    case CmpOp::Lt: return a < b;
    case CmpOp::Le: return a <= b;
    case CmpOp::Gt: return a > b;
    case CmpOp::Ge: return a >= b;
  }
  return false;
}

static bool isNumber(Value v) { return v.isInt() || v.isFloat(); }
static double asF64(Value v) { return v.isInt() ? double(v.i32) : v.f64; }

Value primAdd(Heap& heap, Value x, Value y) {
  if (x.isInt() && y.isInt()) {
    if (auto r = addI32Ovf(x.i32, y.i32)) return Value::makeInt(*r);
    return Value::makeFloat(double(x.i32) + double(y.i32));
  }
  if (isNumber(x) && isNumber(y))
    return Value::makeFloat(asF64(x) + asF64(y));
  // Eval both args as strings and concatenate them.
  std::string s = toStringValue(heap, x) + toStringValue(heap, y);
  return Value::heapRef(TypeTag::String, heap.newString(std::move(s)));
}

Value primSub(Heap& heap, Value x, Value y) {
  if (x.isInt() && y.isInt()) {
    if (auto r = subI32Ovf(x.i32, y.i32)) return Value::makeInt(*r);
    return Value::makeFloat(double(x.i32) - double(y.i32));
  }
  if (isNumber(x) && isNumber(y))
    return Value::makeFloat(asF64(x) - asF64(y));
  (void)heap;
  throw RuntimeError(std::string(errmsg::kNumericOperand));
}

Value primMul(Heap& heap, Value x, Value y) {
  if (x.isInt() && y.isInt()) {
    if (auto r = mulI32Ovf(x.i32, y.i32)) return Value::makeInt(*r);
    return Value::makeFloat(double(x.i32) * double(y.i32));
  }
  if (isNumber(x) && isNumber(y))
    return Value::makeFloat(asF64(x) * asF64(y));
  (void)heap;
  throw RuntimeError(std::string(errmsg::kNumericOperand));
}

Value primDiv(Heap& heap, Value x, Value y) {
  if (x.isInt() && y.isInt()) {
    if (auto r = divI32Exact(x.i32, y.i32)) return Value::makeInt(*r);
    return Value::makeFloat(double(x.i32) / double(y.i32));
  }
  if (isNumber(x) && isNumber(y))
    return Value::makeFloat(asF64(x) / asF64(y));
  (void)heap;
  throw RuntimeError(std::string(errmsg::kNumericOperand));
}

Value primMod(Heap& heap, Value x, Value y) {
  if (x.isInt() && y.isInt()) {
    if (auto r = modI32Checked(x.i32, y.i32)) return Value::makeInt(*r);
    return Value::makeFloat(std::fmod(double(x.i32), double(y.i32)));
  }
  if (isNumber(x) && isNumber(y))
    return Value::makeFloat(std::fmod(asF64(x), asF64(y)));
  (void)heap;
  throw RuntimeError(std::string(errmsg::kNumericOperand));
}

static int32_t toBitOperand(Value v) {
  if (v.isInt()) return v.i32;
  if (v.isFloat()) {
    if (auto i = exactInt32(v.f64)) return *i;
  }
  throw RuntimeError(std::string(errmsg::kBitwiseOperand));
}

Value primBit(Heap& heap, BitOp op, Value x, Value y) {
  (void)heap;
  int32_t a = toBitOperand(x);
  int32_t b = toBitOperand(y);
  switch (op) {
    case BitOp::And: return Value::makeInt(a & b);
    case BitOp::Or: return Value::makeInt(a | b);
    case BitOp::Xor: return Value::makeInt(a ^ b);
    case BitOp::Shl: return Value::makeInt(shlI32(a, b));
    case BitOp::Shr: return Value::makeInt(shrI32(a, b));
  }
  return Value::makeInt(0);
}

Value primNeg(Heap& heap, Value x) {
  if (x.isInt()) {
    if (auto r = subI32Ovf(0, x.i32)) return Value::makeInt(*r);
    return Value::makeFloat(-double(x.i32));
  }
  if (x.isFloat()) return Value::makeFloat(-x.f64);
  (void)heap;
  throw RuntimeError(std::string(errmsg::kNumericOperand));
}

Value primNot(Heap& heap, Value x) { return Value::makeBool(!truthy(heap, x)); }

Value primRel(Heap& heap, CmpOp op, Value x, Value y) {
  if (x.isInt() && y.isInt()) return Value::makeBool(cmpI32(op, x.i32, y.i32));
  if (isNumber(x) && isNumber(y))
    return Value::makeBool(cmpF64(op, asF64(x), asF64(y)));
  (void)heap;
  throw RuntimeError(std::string(errmsg::kCompareOperand));
}

Value primEq(Heap& heap, CmpOp op, Value x, Value y) {
  bool eq;
  if (x.tag != y.tag) {
    eq = false;
  } else {
    switch (x.tag) {
      case TypeTag::Int32: eq = x.i32 == y.i32; break;
      case TypeTag::Float64: eq = x.f64 == y.f64; break;  // NaN != NaN
      case TypeTag::Const: eq = x.cst == y.cst; break;
      case TypeTag::String: eq = heap.str(x.ref) == heap.str(y.ref); break;
      default: eq = x.ref == y.ref; break;  // reference identity
    }
  }
  return Value::makeBool(op == CmpOp::Eq ? eq : !eq);
}

Value primToString(Heap& heap, Value x) {
  if (x.tag == TypeTag::String) return x;
  return Value::heapRef(TypeTag::String, heap.newString(toStringValue(heap, x)));
}

Value primGetProp(Heap& heap, Value base, const std::string& name) {
  switch (base.tag) {
    case TypeTag::Object: {
      const auto& fields = heap.object(base.ref);
      auto it = fields.find(name);
      return it == fields.end() ? Value::undefined() : it->second;
    }
    case TypeTag::Array:
      if (name == "length")
        return Value::makeInt(int32_t(heap.array(base.ref).size()));
      throw RuntimeError(std::string(errmsg::kNoSuchProperty));
    case TypeTag::String:
      if (name == "length")
        return Value::makeInt(int32_t(heap.str(base.ref).size()));
      throw RuntimeError(std::string(errmsg::kNoSuchProperty));
    default:
      throw RuntimeError(std::string(errmsg::kBadPropertyBase));
  }
}

Value primGetIndex(Heap& heap, Value base, Value index) {
  switch (base.tag) {
    case TypeTag::Object:
      return primGetProp(heap, base, toStringValue(heap, index));
    case TypeTag::Array: {
      if (!index.isInt()) throw RuntimeError(std::string(errmsg::kBadIndex));
      const auto& elems = heap.array(base.ref);
      if (index.i32 < 0 || size_t(index.i32) >= elems.size())
        return Value::undefined();
      return elems[size_t(index.i32)];
    }
    case TypeTag::String: {
      if (!index.isInt()) throw RuntimeError(std::string(errmsg::kBadIndex));
      const auto& s = heap.str(base.ref);
      if (index.i32 < 0 || size_t(index.i32) >= s.size())
        return Value::undefined();
      return Value::heapRef(TypeTag::String,
                            heap.newString(std::string(1, s[size_t(index.i32)])));
    }
    default:
      throw RuntimeError(std::string(errmsg::kBadPropertyBase));
  }
}

void primPutProp(Heap& heap, Value base, const std::string& name, Value v) {
  if (base.tag != TypeTag::Object)
    throw RuntimeError(std::string(errmsg::kBadPropertyPut));
  heap.object(base.ref)[name] = v;
}

void primPutIndex(Heap& heap, Value base, Value index, Value v) {
  switch (base.tag) {
    case TypeTag::Object:
      heap.object(base.ref)[toStringValue(heap, index)] = v;
      return;
    case TypeTag::Array: {
      if (!index.isInt()) throw RuntimeError(std::string(errmsg::kBadIndex));
      if (index.i32 < 0)
        throw RuntimeError(std::string(errmsg::kNegativeArrayIndex));
      auto& elems = heap.array(base.ref);
      if (size_t(index.i32) >= elems.size())
        elems.resize(size_t(index.i32) + 1, Value::undefined());
      elems[size_t(index.i32)] = v;
      return;
    }
    default:
      throw RuntimeError(std::string(errmsg::kBadPropertyPut));
  }
}

}  // namespace minivm::rt
