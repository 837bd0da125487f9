#ifndef POLYHEAT_BIGINT_HPP
#define POLYHEAT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polyheat {

// Minimal signed arbitrary-precision integer. Only what the path coefficients
// need: products of small factors (n! up to n=40 and beyond), addition,
// comparison, printing. Little-endian base-2^32 limbs.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v) {  // NOLINT: implicit by design
    if (v < 0) {
      negative_ = true;
      v = -v;
    }
    std::uint64_t u = static_cast<std::uint64_t>(v);
    while (u != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
      u >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }
  bool negative() const { return negative_ && !limbs_.empty(); }

  BigInt& operator*=(std::uint32_t m) {
    if (m == 0) {
      limbs_.clear();
      negative_ = false;
      return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
    return *this;
  }

  BigInt& negate() {
    if (!limbs_.empty()) negative_ = !negative_;
    return *this;
  }

  BigInt& operator+=(const BigInt& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
      *this = other;
      return *this;
    }
    if (negative_ == other.negative_) {
      add_magnitude(other.limbs_);
      return *this;
    }
    int cmp = compare_magnitude(limbs_, other.limbs_);
    if (cmp == 0) {
      limbs_.clear();
      negative_ = false;
    } else if (cmp > 0) {
      sub_magnitude(limbs_, other.limbs_);
    } else {
      std::vector<std::uint32_t> tmp = other.limbs_;
      sub_magnitude(tmp, limbs_);
      limbs_ = std::move(tmp);
      negative_ = other.negative_;
    }
    return *this;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative() == b.negative() && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

  // Exact when the value fits; callers guard (binet guards n <= 90).
  std::int64_t to_int64() const {
    std::uint64_t u = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
    return negative() ? -static_cast<std::int64_t>(u) : static_cast<std::int64_t>(u);
  }

  double to_double() const {
    double v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return negative() ? -v : v;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      for (int d = 0; d < 9; ++d) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (negative()) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
  }

  static BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
  }

 private:
  static int compare_magnitude(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void add_magnitude(const std::vector<std::uint32_t>& other) {
    if (other.size() > limbs_.size()) limbs_.resize(other.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t cur = carry + limbs_[i] + (i < other.size() ? other[i] : 0u);
      limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  // Requires |a| >= |b|.
  static void sub_magnitude(std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      if (cur < 0) {
        cur += (1ll << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      a[i] = static_cast<std::uint32_t>(cur);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
  bool negative_ = false;
};

}  // namespace polyheat

#endif
