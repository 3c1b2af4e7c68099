#ifndef RICCATI_FUZZ_HPP
#define RICCATI_FUZZ_HPP

#include <cstdint>

#include "riccati/riccati_poly.hpp"
#include "riccati/riccati_trig.hpp"

namespace riccati {

/// Outcome of a seeded property run over random equations: counts of
/// theorem-bound violations (always expected to be zero), certification or
/// degree-cap failures, and how often the search had to admit rational
/// incompleteness.
struct FuzzReport {
    int count = 0;
    int max_eta = 0;
    std::uint64_t seed = 0;
    int violations = 0;
    int incomplete = 0;
    int solutions_total = 0;
    int max_solutions_seen = 0;
};

FuzzReport fuzz_poly(int count, int max_eta, std::uint64_t seed);
FuzzReport fuzz_trig(int count, int max_eta, std::uint64_t seed);

}  // namespace riccati

#endif
