#pragma once

#include <string>

#include "edgeideal/errors.hpp"

namespace edgeideal {

/// Coefficient field: GF(p) for a prime p, or the rationals.
class FieldSpec {
 public:
  enum class Kind { prime, rational };

  static FieldSpec gf(int p) {
    if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(Kind::prime, p);
  }
  static FieldSpec gf2() { return FieldSpec(Kind::prime, 2); }
  static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }

  /// Accepts "gf2", "gf:p" and "q".
  static FieldSpec parse(const std::string& text) {
    if (text == "gf2") return gf2();
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
      std::size_t used = 0;
      int p = 0;
      try {
        p = std::stoi(text.substr(3), &used);
      } catch (const std::exception&) {
        throw ValidationError("bad field '" + text + "'");
      }
      if (used != text.size() - 3) throw ValidationError("bad field '" + text + "'");
      return gf(p);
    }
    throw ValidationError("bad field '" + text + "' (expected gf2, gf:p or q)");
  }

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  /// 0 for the rationals.
  int characteristic() const { return p_; }

  std::string name() const {
    if (kind_ == Kind::rational) return "q";
    return p_ == 2 ? "gf2" : "gf:" + std::to_string(p_);
  }

  bool operator==(const FieldSpec&) const = default;

  static bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  FieldSpec(Kind kind, int p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::prime;
  int p_ = 2;
};

}  // namespace edgeideal
