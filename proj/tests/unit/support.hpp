#pragma once

#include "pvi/parse.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace pvi::test {

inline RationalFunction e(const char *text) { return parse(text); }

// Seed for the randomized properties; PVI_TEST_SEED pins it.
inline unsigned seed()
{
    static const unsigned s = [] {
        if (const char *env = std::getenv("PVI_TEST_SEED")) return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        return static_cast<unsigned>(std::random_device{}());
    }();
    return s;
}

inline Rational random_rational(std::mt19937 &rng, long range = 9)
{
    std::uniform_int_distribution<long> num(-range, range), den(1, range);
    return make_rational(num(rng), den(rng));
}

// small random polynomial in the given symbols
inline RationalFunction random_polynomial(std::mt19937 &rng, const std::vector<std::string> &vars, int terms = 3,
                                          int max_degree = 2)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    RationalFunction p;
    for (int k = 0; k < terms; ++k) {
        RationalFunction m(random_rational(rng));
        for (const auto &v : vars) m *= RationalFunction::variable(v).pow(deg(rng));
        p += m;
    }
    return p;
}

inline RationalFunction random_rf(std::mt19937 &rng, const std::vector<std::string> &vars)
{
    RationalFunction den;
    while (den.is_zero()) den = random_polynomial(rng, vars);
    return random_polynomial(rng, vars) / den;
}

}  // namespace pvi::test
