#include "grinv/generators.hpp"

#include <algorithm>
#include <set>

namespace grinv {

Poset random_poset(std::uint64_t seed, std::size_t n, double density, bool connected) {
    if (n == 0) throw input_error("a poset needs at least one element");
    Rng rng(seed);
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(density)) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Poset p = Poset::from_relation_pairs(ids, rel);
    if (connected) {
        while (true) {
            const auto components = p.connected_components(p.all_elements());
            if (components.size() <= 1) break;
            const std::size_t ci = rng.below(components.size());
            std::size_t cj = rng.below(components.size() - 1);
            if (cj >= ci) ++cj;
            const int a = components[ci][rng.below(components[ci].size())];
            const int b = components[cj][rng.below(components[cj].size())];
            rel.emplace_back(std::min(a, b), std::max(a, b));
            p = Poset::from_relation_pairs(ids, rel);
        }
    }
    return p;
}

PosetPtr random_poset_ptr(std::uint64_t seed, std::size_t n, double density, bool connected) {
    return std::make_shared<Poset>(random_poset(seed, n, density, connected));
}

std::vector<int> random_interval(Rng& rng, const Poset& p) {
    const int a = static_cast<int>(rng.below(p.size()));
    const std::vector<int> up = p.upset({a});
    const int b = up[rng.below(up.size())];
    const std::vector<int> down = p.downset({b});
    std::vector<int> interval;
    std::set<int> in_down(down.begin(), down.end());
    for (int e : up)
        if (in_down.count(e)) interval.push_back(e);
    return interval;
}

std::vector<std::vector<int>> random_interval_list(Rng& rng, const Poset& p, std::size_t count,
                                                   double whole_probability) {
    std::vector<std::vector<int>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (rng.chance(whole_probability))
            out.push_back(p.all_elements());
        else
            out.push_back(random_interval(rng, p));
    }
    return out;
}

Matrix random_invertible(Rng& rng, FieldSpec field, std::size_t n) {
    while (true) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (field.is_prime_field())
                    m.set(i, j, Rational(static_cast<long long>(rng.below(field.p))));
                else
                    m.set(i, j, Rational(static_cast<long long>(rng.below(5)) - 2));
            }
        if (is_invertible(m)) return m;
    }
}

PlantedModule planted_module(std::uint64_t seed, const PosetPtr& p,
                             const std::vector<std::vector<int>>& intervals, FieldSpec field) {
    ModuleIndex index(p);
    for (const auto& carrier : intervals)
        if (!p->is_interval(carrier))
            throw precondition_error("a planted carrier is not an interval");

    PersistenceModule sum = zero_module(index, field);
    std::size_t planted = 0;
    for (const auto& carrier : intervals) {
        sum = direct_sum(sum, interval_module(index, carrier, field));
        if (carrier.size() == p->size()) ++planted;
    }

    Rng rng(seed);
    std::vector<Matrix> change, change_inv;
    for (std::size_t c = 0; c < sum.dims().size(); ++c) {
        change.push_back(random_invertible(rng, field, sum.dims()[c]));
        change_inv.push_back(inverse(change.back()));
    }
    std::vector<Matrix> maps;
    for (std::size_t g = 0; g < sum.generators().size(); ++g) {
        const Generator& gen = sum.generators()[g];
        maps.push_back(
            multiply(change[gen.tgt], multiply(sum.generator_map(g), change_inv[gen.src])));
    }
    return PlantedModule{sum.replace_maps(std::move(maps)), planted, intervals};
}

PlantedModule random_planted_module(std::uint64_t seed, const PosetPtr& p, std::size_t summands,
                                    double whole_probability, FieldSpec field) {
    Rng rng(seed);
    const auto intervals = random_interval_list(rng, *p, summands, whole_probability);
    return planted_module(seed ^ 0x9e3779b97f4a7c15ull, p, intervals, field);
}

} // namespace grinv
