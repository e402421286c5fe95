#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace holderlab {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs
// (little-endian, no leading zero limbs). Sized for desk-scale exact
// decisions: a few thousand bits at most, schoolbook arithmetic throughout.
class BigInt {
public:
    BigInt() = default;

    BigInt(std::int64_t v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(u));
        if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
    }

    static BigInt from_uint64(std::uint64_t u) {
        BigInt r;
        if (u == 0) return r;
        r.sign_ = 1;
        r.mag_.push_back(static_cast<std::uint32_t>(u));
        if (u >> 32) r.mag_.push_back(static_cast<std::uint32_t>(u >> 32));
        return r;
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size();) {
            std::size_t chunk_len = std::min<std::size_t>(9, s.size() - i);
            std::uint32_t chunk = 0;
            std::uint32_t scale = 1;
            for (std::size_t j = 0; j < chunk_len; ++j, ++i) {
                char c = s[i];
                if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                scale *= 10;
            }
            r = r.mul_small(scale).add_small(chunk);
        }
        if (neg && !r.is_zero()) r.sign_ = -1;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return r;
        if (c > 0) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated toward zero; remainder carries the dividend's sign.
    static std::pair<BigInt, BigInt> div_mod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        BigInt q, r;
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        return {q, r};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return div_mod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return div_mod(a, b).second; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        std::vector<std::uint32_t> x = a.mag_, y = b.mag_;
        if (x.empty()) return make_mag(std::move(y));
        if (y.empty()) return make_mag(std::move(x));
        std::size_t tx = trailing_zero_bits(x), ty = trailing_zero_bits(y);
        std::size_t shift = std::min(tx, ty);
        shr_bits(x, tx);
        for (;;) {
            shr_bits(y, trailing_zero_bits(y));
            if (cmp_mag(x, y) > 0) std::swap(x, y);
            y = sub_mag(y, x);
            if (y.empty()) break;
        }
        shl_bits(x, shift);
        return make_mag(std::move(x));
    }

    static BigInt pow(const BigInt& base, std::uint64_t e) {
        BigInt result(1), b = base;
        while (e) {
            if (e & 1) result = result * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return result;
    }

    // Exact k-th root of a nonnegative value, if one exists.
    static std::optional<BigInt> nth_root_exact(const BigInt& n, std::uint64_t k) {
        if (k == 0) throw std::invalid_argument("BigInt: zeroth root");
        if (n.is_negative()) throw std::invalid_argument("BigInt: root of negative value");
        if (n.is_zero() || n.is_one() || k == 1) return n;
        std::size_t bits = n.bit_length();
        BigInt lo(1), hi = pow(BigInt(2), bits / k + 1);
        while (lo <= hi) {
            BigInt mid = (lo + hi) / BigInt(2);
            BigInt mp = pow(mid, k);
            if (mp == n) return mid;
            if (mp < n)
                lo = mid + BigInt(1);
            else
                hi = mid - BigInt(1);
        }
        return std::nullopt;
    }

    bool fits_uint64() const { return sign_ >= 0 && mag_.size() <= 2; }

    std::uint64_t to_uint64() const {
        if (!fits_uint64()) throw std::overflow_error("BigInt: does not fit uint64");
        std::uint64_t v = 0;
        if (mag_.size() > 1) v = static_cast<std::uint64_t>(mag_[1]) << 32;
        if (!mag_.empty()) v |= mag_[0];
        return v;
    }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        std::uint64_t v = 0;
        if (mag_.size() > 1) v = static_cast<std::uint64_t>(mag_[1]) << 32;
        if (!mag_.empty()) v |= mag_[0];
        if (sign_ >= 0) return v <= static_cast<std::uint64_t>(INT64_MAX);
        return v <= static_cast<std::uint64_t>(INT64_MAX) + 1;
    }

    std::int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        std::uint64_t v = 0;
        if (mag_.size() > 1) v = static_cast<std::uint64_t>(mag_[1]) << 32;
        if (!mag_.empty()) v |= mag_[0];
        return sign_ < 0 ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    }

    double to_double() const {
        double v = 0.0;
        for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
        return sign_ < 0 ? -v : v;
    }

    std::size_t bit_length() const {
        if (mag_.empty()) return 0;
        std::uint32_t top = mag_.back();
        std::size_t b = 0;
        while (top) {
            ++b;
            top >>= 1;
        }
        return (mag_.size() - 1) * 32 + b;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            for (int j = 0; j < 9; ++j) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static BigInt make_mag(std::vector<std::uint32_t> mag) {
        BigInt r;
        r.mag_ = std::move(mag);
        trim(r.mag_);
        r.sign_ = r.mag_.empty() ? 0 : 1;
        return r;
    }

    BigInt mul_small(std::uint32_t m) const {
        BigInt r;
        if (sign_ == 0 || m == 0) return r;
        r.mag_.resize(mag_.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < mag_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * m + carry;
            r.mag_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r.mag_[mag_.size()] = static_cast<std::uint32_t>(carry);
        trim(r.mag_);
        r.sign_ = sign_;
        return r;
    }

    BigInt add_small(std::uint32_t v) const {
        return *this + BigInt(static_cast<std::int64_t>(v));
    }

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // Requires a >= b.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += 1ll << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(r[i + j]) + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = static_cast<std::uint64_t>(r[k]) + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        trim(r);
        return r;
    }

    static std::size_t bit_length_mag(const std::vector<std::uint32_t>& m) {
        if (m.empty()) return 0;
        std::uint32_t top = m.back();
        std::size_t b = 0;
        while (top) {
            ++b;
            top >>= 1;
        }
        return (m.size() - 1) * 32 + b;
    }

    static std::size_t trailing_zero_bits(const std::vector<std::uint32_t>& m) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i]) {
                std::uint32_t v = m[i];
                std::size_t b = 0;
                while (!(v & 1)) {
                    v >>= 1;
                    ++b;
                }
                return i * 32 + b;
            }
        }
        return 0;
    }

    static void shl_bits(std::vector<std::uint32_t>& m, std::size_t bits) {
        if (m.empty() || bits == 0) return;
        std::size_t limbs = bits / 32, rem = bits % 32;
        if (rem) {
            std::uint32_t carry = 0;
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint32_t next = m[i] >> (32 - rem);
                m[i] = (m[i] << rem) | carry;
                carry = next;
            }
            if (carry) m.push_back(carry);
        }
        m.insert(m.begin(), limbs, 0u);
    }

    static void shr_bits(std::vector<std::uint32_t>& m, std::size_t bits) {
        if (m.empty() || bits == 0) return;
        std::size_t limbs = bits / 32, rem = bits % 32;
        if (limbs >= m.size()) {
            m.clear();
            return;
        }
        m.erase(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(limbs));
        if (rem) {
            for (std::size_t i = 0; i + 1 < m.size(); ++i)
                m[i] = (m[i] >> rem) | (m[i + 1] << (32 - rem));
            m.back() >>= rem;
        }
        trim(m);
    }

    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (a.empty()) return;
        if (cmp_mag(a, b) < 0) {
            r = a;
            return;
        }
        if (b.size() == 1) {
            std::uint64_t d = b[0];
            q.assign(a.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            trim(q);
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        std::size_t shift = bit_length_mag(a) - bit_length_mag(b);
        std::vector<std::uint32_t> t = b;
        shl_bits(t, shift);
        q.assign(shift / 32 + 1, 0);
        r = a;
        for (std::size_t s = shift + 1; s-- > 0;) {
            if (cmp_mag(r, t) >= 0) {
                r = sub_mag(r, t);
                q[s / 32] |= 1u << (s % 32);
            }
            shr_bits(t, 1);
        }
        trim(q);
        trim(r);
    }
};

}  // namespace holderlab
