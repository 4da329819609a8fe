#pragma once

#include "qcong/arith.hpp"

namespace qcong {

// Integer matrix [[a,b],[c,d]]. The multiplier formulas require det = 1 and a
// representative with c > 0 (or c = 0, d > 0); A and -A act identically on the
// upper half-plane, so normalized() flips the sign when needed.
struct Mat2 {
    Int a, b, c, d;

    Int det() const { return a * d - b * c; }

    Mat2 normalized() const {
        if (c < 0 || (c == 0 && d < 0))
            return {-a, -b, -c, -d};
        return *this;
    }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    // T = [[1,1],[0,1]], the unit translation.
    static Mat2 shift() { return {1, 1, 0, 1}; }

    std::string str() const {
        return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() +
               "," + d.get_str() + "]]";
    }
};

} // namespace qcong
