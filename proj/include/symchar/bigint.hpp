#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symchar {

// All counts and sizes are exact. Gadget item sizes grow like r^10 with r in
// the thousands, so fixed-width integers are never used on a value path.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(unsigned long n) {
    Int f = 1;
    for (unsigned long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::string to_decimal(const Int& v) { return v.str(); }

inline Int parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer literal: " + s);
    return Int(s);
}

struct IntVectorHash {
    std::size_t operator()(const std::vector<Int>& v) const {
        std::size_t seed = v.size();
        for (const Int& x : v) boost::hash_combine(seed, x);
        return seed;
    }
};

}  // namespace symchar
