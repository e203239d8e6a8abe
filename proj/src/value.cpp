#include "minivm/value.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

namespace minivm::rt {

std::string_view tagName(TypeTag t) {
  switch (t) {
    case TypeTag::Int32: return "int32";
    case TypeTag::Float64: return "float64";
    case TypeTag::Const: return "const";
    case TypeTag::String: return "string";
    case TypeTag::Object: return "object";
    case TypeTag::Array: return "array";
    case TypeTag::Closure: return "closure";
  }
  return "?";
}

std::string_view tagTestName(TypeTag t) {
  switch (t) {
    case TypeTag::Int32: return "is_i32";
    case TypeTag::Float64: return "is_f64";
    case TypeTag::Const: return "is_const";
    case TypeTag::String: return "is_string";
    case TypeTag::Object: return "is_object";
    case TypeTag::Array: return "is_array";
    case TypeTag::Closure: return "is_closure";
  }
  return "?";
}

bool truthy(const Heap& heap, Value v) {
  switch (v.tag) {
    case TypeTag::Int32: return v.i32 != 0;
    case TypeTag::Float64: return v.f64 != 0.0 && !std::isnan(v.f64);
    case TypeTag::Const: return v.cst == ConstKind::True;
    case TypeTag::String: return !heap.str(v.ref).empty();
    case TypeTag::Object:
    case TypeTag::Array:
    case TypeTag::Closure: return true;
  }
  return false;
}

static std::string floatToString(double d) {
  if (std::isnan(d)) return "NaN";
  if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

static constexpr int kMaxToStringDepth = 32;

std::string toStringValue(const Heap& heap, Value v, int depth) {
  if (depth > kMaxToStringDepth)
    throw RuntimeError("string conversion recursion limit exceeded");
  switch (v.tag) {
    case TypeTag::Int32: return std::to_string(v.i32);
    case TypeTag::Float64: return floatToString(v.f64);
    case TypeTag::Const:
      switch (v.cst) {
        case ConstKind::True: return "true";
        case ConstKind::False: return "false";
        case ConstKind::Null: return "null";
        case ConstKind::Undefined: return "undefined";
      }
      return "?";
    case TypeTag::String: return heap.str(v.ref);
    case TypeTag::Object: return "[object]";
    case TypeTag::Array: {
      std::string out;
      const auto& elems = heap.array(v.ref);
      for (size_t i = 0; i < elems.size(); i++) {
        if (i) out += ",";
        out += toStringValue(heap, elems[i], depth + 1);
      }
      return out;
    }
    case TypeTag::Closure: return "[closure]";
  }
  return "?";
}

std::string display(const Heap& heap, Value v, int depth) {
  if (depth > kMaxToStringDepth) return "...";
  switch (v.tag) {
    case TypeTag::String: {
      std::string out = "\"";
      for (char c : heap.str(v.ref)) {
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\t': out += "\\t"; break;
          default: out += c;
        }
      }
      out += "\"";
      return out;
    }
    case TypeTag::Object: {
      std::string out = "{";
      bool first = true;
      for (const auto& [k, val] : heap.object(v.ref)) {
        if (!first) out += ", ";
        first = false;
        out += k + ": " + display(heap, val, depth + 1);
      }
      out += "}";
      return out;
    }
    case TypeTag::Array: {
      std::string out = "[";
      const auto& elems = heap.array(v.ref);
      for (size_t i = 0; i < elems.size(); i++) {
        if (i) out += ", ";
        out += display(heap, elems[i], depth + 1);
      }
      out += "]";
      return out;
    }
    default: return toStringValue(heap, v, depth);
  }
}

bool sameValue(Value a, Value b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case TypeTag::Int32: return a.i32 == b.i32;
    case TypeTag::Float64:
      // bit equality so NaN == NaN and +0 != -0 for dedup purposes
      return std::memcmp(&a.f64, &b.f64, sizeof(double)) == 0;
    case TypeTag::Const: return a.cst == b.cst;
    default: return a.ref == b.ref;
  }
}

}  // namespace minivm::rt
