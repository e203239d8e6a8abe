#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minivm::rt {

// The seven value categories used for type dispatch. `Const` covers the
// miscellaneous constants true, false, null and undefined.
enum class TypeTag : uint8_t {
  Int32 = 0,
  Float64,
  Const,
  String,
  Object,
  Array,
  Closure,
};

inline constexpr int kNumTags = 7;

std::string_view tagName(TypeTag t);      // "int32", "float64", ...
std::string_view tagTestName(TypeTag t);  // "is_i32", "is_f64", ...

enum class ConstKind : uint8_t { True, False, Null, Undefined };

// Raised by primitives and by the engines for conditions like bitwise ops on
// non-numbers. Messages are static strings shared between the reference
// interpreter and the compiled templates so both paths fail identically.
struct RuntimeError : std::runtime_error {
  explicit RuntimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tagged value. Heap kinds (string/object/array/closure) hold a table index.
struct Value {
  TypeTag tag;
  union {
    int32_t i32;
    double f64;
    ConstKind cst;
    uint32_t ref;
  };

  Value() : tag(TypeTag::Const), cst(ConstKind::Undefined) {}

  static Value makeInt(int32_t v) {
    Value r;
    r.tag = TypeTag::Int32;
    r.i32 = v;
    return r;
  }
  static Value makeFloat(double v) {
    Value r;
    r.tag = TypeTag::Float64;
    r.f64 = v;
    return r;
  }
  static Value makeConst(ConstKind k) {
    Value r;
    r.tag = TypeTag::Const;
    r.cst = k;
    return r;
  }
  static Value makeBool(bool b) {
    return makeConst(b ? ConstKind::True : ConstKind::False);
  }
  static Value undefined() { return makeConst(ConstKind::Undefined); }
  static Value null() { return makeConst(ConstKind::Null); }
  static Value heapRef(TypeTag t, uint32_t r) {
    Value v;
    v.tag = t;
    v.ref = r;
    return v;
  }

  bool isInt() const { return tag == TypeTag::Int32; }
  bool isFloat() const { return tag == TypeTag::Float64; }
  bool isConst() const { return tag == TypeTag::Const; }
};

struct Closure {
  uint32_t funcId = 0;
  std::vector<Value> captures;  // cell handles, one per captured variable
};

// Growable value heap: strings, objects, arrays, closures, and cells.
// Nothing is ever deallocated (no GC in scope). Cells are the boxed storage
// for variables captured by closures; a cell handle is represented as an
// object-tagged value whose ref lies in the upper index range and never
// escapes to user code.
class Heap {
 public:
  static constexpr uint32_t kCellBase = 0x80000000u;

  uint32_t newString(std::string s) {
    strings_.push_back(std::move(s));
    return static_cast<uint32_t>(strings_.size() - 1);
  }
  const std::string& str(uint32_t ref) const { return strings_.at(ref); }

  uint32_t newObject() {
    objects_.emplace_back();
    return static_cast<uint32_t>(objects_.size() - 1);
  }
  std::map<std::string, Value>& object(uint32_t ref) { return objects_.at(ref); }
  const std::map<std::string, Value>& object(uint32_t ref) const {
    return objects_.at(ref);
  }

  uint32_t newArray() {
    arrays_.emplace_back();
    return static_cast<uint32_t>(arrays_.size() - 1);
  }
  std::vector<Value>& array(uint32_t ref) { return arrays_.at(ref); }
  const std::vector<Value>& array(uint32_t ref) const { return arrays_.at(ref); }

  uint32_t newClosure(uint32_t funcId, std::vector<Value> captures) {
    closures_.push_back(Closure{funcId, std::move(captures)});
    return static_cast<uint32_t>(closures_.size() - 1);
  }
  const Closure& closure(uint32_t ref) const { return closures_.at(ref); }

  Value newCell() {
    cells_.push_back(Value::undefined());
    return Value::heapRef(TypeTag::Object,
                          kCellBase + static_cast<uint32_t>(cells_.size() - 1));
  }
  Value cellGet(Value cell) const { return cells_.at(cell.ref - kCellBase); }
  void cellSet(Value cell, Value v) { cells_.at(cell.ref - kCellBase) = v; }

 private:
  std::vector<std::string> strings_;
  std::vector<std::map<std::string, Value>> objects_;  // sorted keys: determinism
  std::vector<std::vector<Value>> arrays_;
  std::vector<Closure> closures_;
  std::vector<Value> cells_;
};

// ToBoolean for conditions. Not a type test: conditions branch on this
// directly without tag dispatch.
bool truthy(const Heap& heap, Value v);

// String conversion used by the `+` fallback arm and `to_string`.
// float64 uses shortest round-trip decimal; consts print their names;
// arrays join comma-separated elements. Depth-capped to stay total on
// self-referencing arrays.
std::string toStringValue(const Heap& heap, Value v, int depth = 0);

// Diagnostic/deep rendering used for result hashing and test comparisons:
// like toStringValue, but quotes strings and prints object/array structure.
std::string display(const Heap& heap, Value v, int depth = 0);

// Exact structural equality of two runtime values (same tag, same payload;
// heap kinds by reference identity). Used by tests and version dedup checks.
bool sameValue(Value a, Value b);

}  // namespace minivm::rt
