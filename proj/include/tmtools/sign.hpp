#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmtools {

// A value in {+1, -1}. The only constructors are the factories below, so
// arithmetic on Sign cannot leave the domain.
class Sign {
  public:
    static constexpr Sign plus() noexcept { return Sign(+1); }
    static constexpr Sign minus() noexcept { return Sign(-1); }

    static Sign from_value(int v) {
        if (v != 1 && v != -1)
            throw std::domain_error("Sign::from_value: " + std::to_string(v) + " is not +1 or -1");
        return Sign(v);
    }

    constexpr int value() const noexcept { return v_; }

    constexpr Sign operator-() const noexcept { return Sign(-v_); }
    friend constexpr Sign operator*(Sign a, Sign b) noexcept { return Sign(a.v_ * b.v_); }
    friend constexpr bool operator==(Sign a, Sign b) noexcept { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Sign a, Sign b) noexcept { return a.v_ != b.v_; }

    char symbol() const noexcept { return v_ > 0 ? '+' : '-'; }

  private:
    constexpr explicit Sign(int v) noexcept : v_(static_cast<std::int8_t>(v)) {}
    std::int8_t v_;
};

} // namespace tmtools
