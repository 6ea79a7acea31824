#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "arith.hpp"
#include "error.hpp"

namespace cmbound {

/*
 * Discriminant of an imaginary quadratic order: D < 0, D = 0 or 1 mod 4,
 * split as D = f^2 * d_K with d_K fundamental and f >= 1 the conductor.
 */
class Discriminant
{
    i64 value_ = -3;
    i64 fundamental_ = -3;
    i64 conductor_ = 1;

  public:
    static bool is_valid(i64 d) { return d < 0 && (mod_floor(d, 4) == 0 || mod_floor(d, 4) == 1); }

    static bool is_fundamental_value(i64 d)
    {
        if (!is_valid(d))
            return false;
        if (mod_floor(d, 4) == 1)
            return is_squarefree(d);
        i64 m = d / 4;
        i64 r = mod_floor(m, 4);
        return (r == 2 || r == 3) && is_squarefree(m);
    }

    explicit Discriminant(i64 d)
        : value_(d)
    {
        if (!is_valid(d))
            throw invalid_argument("not a negative discriminant = 0,1 mod 4: " + std::to_string(d));
        /* |D| = s t^2 with s squarefree */
        i64 s = 1, t = 1;
        for (auto const & pp : factor(d)) {
            for (int i = 0; i < pp.e / 2; ++i)
                t *= pp.p;
            if (pp.e % 2 == 1)
                s *= pp.p;
        }
        if (mod_floor(-s, 4) == 1) {
            fundamental_ = -s;
            conductor_ = t;
        } else {
            fundamental_ = -4 * s;
            conductor_ = t / 2;
        }
    }

    static Discriminant from_parts(i64 fundamental, i64 conductor)
    {
        if (!is_fundamental_value(fundamental))
            throw invalid_argument("not a fundamental discriminant: " + std::to_string(fundamental));
        if (conductor < 1)
            throw invalid_argument("conductor must be positive");
        return Discriminant(conductor * conductor * fundamental);
    }

    i64 value() const noexcept { return value_; }
    i64 abs() const noexcept { return -value_; }
    i64 fundamental_part() const noexcept { return fundamental_; }
    i64 conductor() const noexcept { return conductor_; }
    bool is_fundamental() const noexcept { return conductor_ == 1; }

    auto operator<=>(Discriminant const & o) const { return value_ <=> o.value_; }
    bool operator==(Discriminant const & o) const { return value_ == o.value_; }

    friend std::ostream & operator<<(std::ostream & os, Discriminant const & d) { return os << d.value_; }
};

} // namespace cmbound
