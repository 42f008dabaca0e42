#pragma once

#include <ostream>
#include <string>

#include "linkforms/numeric.hpp"

namespace linkforms {

/// The signature monoid: Z/8Z with an absorbing element adjoined.
/// Addition is the cyclic group law, except that inf + a = inf for all a.
class Z8Bar {
 public:
    constexpr Z8Bar() = default;
    constexpr explicit Z8Bar(long long v) : v_(static_cast<int>(((v % 8) + 8) % 8)) {}

    static constexpr Z8Bar inf() {
        Z8Bar z;
        z.inf_ = true;
        return z;
    }

    constexpr bool is_inf() const { return inf_; }
    constexpr int value() const { return v_; }

    friend constexpr Z8Bar operator+(Z8Bar a, Z8Bar b) {
        if (a.inf_ || b.inf_) return inf();
        return Z8Bar(a.v_ + b.v_);
    }
    friend constexpr Z8Bar operator-(Z8Bar a, Z8Bar b) {
        if (a.inf_ || b.inf_) return inf();
        return Z8Bar(a.v_ - b.v_);
    }
    Z8Bar& operator+=(Z8Bar o) { return *this = *this + o; }

    friend constexpr bool operator==(Z8Bar a, Z8Bar b) {
        return a.inf_ == b.inf_ && a.v_ == b.v_;
    }
    friend constexpr bool operator!=(Z8Bar a, Z8Bar b) { return !(a == b); }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, Z8Bar z) { return os << z.str(); }

 private:
    int v_ = 0;
    bool inf_ = false;
};

/// The sign group {+1,-1} embeds in Z/8 as {0,4} under addition; odd-prime
/// signatures are stored that way so tables stay uniform across flavors.
constexpr Z8Bar sign_to_z8(int sign) { return Z8Bar(sign == 1 ? 0 : 4); }

inline int z8_to_sign(Z8Bar z) {
    if (z.is_inf() || (z.value() != 0 && z.value() != 4))
        throw error("not an encoded sign: " + z.str());
    return z.value() == 0 ? 1 : -1;
}

}  // namespace linkforms
