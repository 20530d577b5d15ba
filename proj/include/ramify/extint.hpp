#pragma once

#include <string>

#include "ramify/errors.hpp"

namespace ramify {

// Nonnegative integer extended with +infinity.  Infinity absorbs addition.
class ExtInt {
 public:
  ExtInt() : v_(0), inf_(false) {}
  ExtInt(long long v) : v_(v), inf_(false) {}
  static ExtInt infinity() {
    ExtInt e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  long long value() const {
    if (inf_) fail(Errc::BadSpec, "infinite value used where a finite one is required");
    return v_;
  }

  ExtInt operator+(const ExtInt& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtInt(v_ + o.v_);
  }
  bool operator==(const ExtInt& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator!=(const ExtInt& o) const { return !(*this == o); }
  bool operator<(const ExtInt& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }

  static ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  long long v_;
  bool inf_;
};

}  // namespace ramify
