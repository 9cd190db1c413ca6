#pragma once

// Arbitrary-precision signed integers. Smith normal form reduction can grow
// intermediate entries past 64 bits even for small presentations, so the
// homology pipeline runs on these throughout.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace spaceform {

class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { neg_ = true; }
        unsigned long long u = neg_ ? -static_cast<unsigned long long>(v) : v;
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
            u >>= 32;
        }
    }

    bool is_zero() const { return mag_.empty(); }
    bool negative() const { return neg_; }
    int signum() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_;
            r.trim();
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        BigInt r;
        if (c == 0) return r;
        if (c > 0) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.neg_ = b.neg_;
        }
        r.trim();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                               r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.neg_ = a.neg_ != b.neg_;
        r.trim();
        return r;
    }

    // Truncated division (C semantics): quotient rounds toward zero and the
    // remainder carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        if (a.is_zero()) return;
        // binary long division on magnitudes
        const int bits = static_cast<int>(a.mag_.size()) * 32;
        std::vector<uint32_t> quo(a.mag_.size(), 0), rem;
        for (int i = bits - 1; i >= 0; --i) {
            shl1(rem);
            if (a.bit(i)) {
                if (rem.empty()) rem.push_back(1);
                else rem[0] |= 1;
            }
            if (cmp_mag(rem, b.mag_) >= 0) {
                rem = sub_mag(rem, b.mag_);
                quo[i / 32] |= (1u << (i % 32));
            }
        }
        q.mag_ = quo;
        q.neg_ = a.neg_ != b.neg_;
        q.trim();
        r.mag_ = rem;
        r.neg_ = a.neg_;
        r.trim();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r.abs();
        }
        return a;
    }

    bool fits_ll() const { return mag_.size() <= 2 && !(mag_.size() == 2 && (mag_[1] >> 31)); }

    long long to_ll() const {
        unsigned long long u = 0;
        for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
        long long v = static_cast<long long>(u);
        return neg_ ? -v : v;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string digits;
        BigInt t = abs();
        BigInt ten(10);
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, ten, q, r);
            digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.mag_[0])));
            t = q;
        }
        if (neg_) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

  private:
    bool neg_ = false;
    std::vector<uint32_t> mag_; // little endian limbs, no trailing zeros

    bool bit(int i) const {
        size_t limb = static_cast<size_t>(i) / 32;
        if (limb >= mag_.size()) return false;
        return (mag_[limb] >> (i % 32)) & 1u;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }

    static int cmp_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (size_t i = x.size(); i-- > 0;)
            if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& x,
                                         const std::vector<uint32_t>& y) {
        std::vector<uint32_t> z;
        z.reserve(std::max(x.size(), y.size()) + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
            uint64_t s = carry;
            if (i < x.size()) s += x[i];
            if (i < y.size()) s += y[i];
            z.push_back(static_cast<uint32_t>(s & 0xffffffffu));
            carry = s >> 32;
        }
        if (carry) z.push_back(static_cast<uint32_t>(carry));
        return z;
    }

    // requires x >= y
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& x,
                                         const std::vector<uint32_t>& y) {
        std::vector<uint32_t> z(x.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            int64_t s = static_cast<int64_t>(x[i]) - borrow - (i < y.size() ? y[i] : 0);
            if (s < 0) {
                s += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            z[i] = static_cast<uint32_t>(s);
        }
        while (!z.empty() && z.back() == 0) z.pop_back();
        return z;
    }

    static void shl1(std::vector<uint32_t>& v) {
        uint32_t carry = 0;
        for (auto& limb : v) {
            uint32_t nc = limb >> 31;
            limb = (limb << 1) | carry;
            carry = nc;
        }
        if (carry) v.push_back(carry);
    }
};

} // namespace spaceform
