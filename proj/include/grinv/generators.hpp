#pragma once

#include <cstdint>
#include <random>

#include "grinv/persistence_module.hpp"

namespace grinv {

// Deterministic source of randomness: identical seeds reproduce identical
// artifacts bit for bit, across platforms. Draws avoid std distributions,
// whose outputs are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // value in [0, n)
    std::size_t below(std::size_t n) {
        if (n == 0) throw input_error("empty range");
        return static_cast<std::size_t>(next() % n);
    }
    // uniform-enough in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1p-53; }
    bool chance(double prob) { return unit() < prob; }

private:
    std::mt19937_64 engine_;
};

// Random finite poset on n elements: edges v_i -> v_j for i < j with the
// given density, then the reflexive-transitive closure. Density 0 gives the
// antichain, density 1 the total order on the generation order. The
// connected variant links components with extra random relations.
Poset random_poset(std::uint64_t seed, std::size_t n, double density, bool connected = false);
PosetPtr random_poset_ptr(std::uint64_t seed, std::size_t n, double density,
                          bool connected = false);

// A random interval: everything between a random element and a random
// element of its upset.
std::vector<int> random_interval(Rng& rng, const Poset& p);

// A list of interval carriers; each is the whole poset with probability
// `whole_probability`, otherwise a random interval.
std::vector<std::vector<int>> random_interval_list(Rng& rng, const Poset& p, std::size_t count,
                                                   double whole_probability);

struct PlantedModule {
    PersistenceModule module;
    std::size_t planted_mult = 0; // number of summands supported everywhere
    std::vector<std::vector<int>> intervals;
};

// Direct sum of the given interval modules, conjugated at every object by a
// random invertible change of basis. The multiplicity of the constant
// summand is known by construction: the number of carriers equal to the
// whole index.
PlantedModule planted_module(std::uint64_t seed, const PosetPtr& p,
                             const std::vector<std::vector<int>>& intervals, FieldSpec field);

// Convenience: random carriers first, then the planted sum.
PlantedModule random_planted_module(std::uint64_t seed, const PosetPtr& p, std::size_t summands,
                                    double whole_probability, FieldSpec field);

// A random invertible square matrix, sampled by rejection.
Matrix random_invertible(Rng& rng, FieldSpec field, std::size_t n);

} // namespace grinv
