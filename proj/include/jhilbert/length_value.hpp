#pragma once

#include <cstdint>
#include <string>

namespace jh {

/// A length that is a natural number, known to be infinite, or not determined
/// because a truncation search ran out of budget.
class LengthValue {
 public:
  enum class Kind { Finite, Infinite, NonStabilized };

  static LengthValue finite(std::int64_t n) { return LengthValue(Kind::Finite, n, {}); }
  static LengthValue infinite() { return LengthValue(Kind::Infinite, 0, {}); }
  static LengthValue nonStabilized(std::string reason) {
    return LengthValue(Kind::NonStabilized, 0, std::move(reason));
  }

  Kind kind() const { return kind_; }
  bool isFinite() const { return kind_ == Kind::Finite; }
  bool isInfinite() const { return kind_ == Kind::Infinite; }
  /// Throws std::logic_error unless finite.
  std::int64_t value() const;
  const std::string& reason() const { return reason_; }
  std::string toString() const;

  bool operator==(const LengthValue& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::Finite || value_ == o.value_);
  }

 private:
  LengthValue(Kind k, std::int64_t v, std::string r) : kind_(k), value_(v), reason_(std::move(r)) {}

  Kind kind_;
  std::int64_t value_;
  std::string reason_;
};

}  // namespace jh
