#include "grinv/minimal.hpp"

#include <algorithm>
#include <set>

namespace grinv {

namespace {

// One recursion step works for both directions: "up" uses maxima/upsets,
// "down" uses minima/downsets.
SChain s_chain_directed(const Poset& p, bool up) {
    if (p.size() == 0) throw precondition_error("chain of an empty poset");
    SChain out;
    std::vector<int> stage =
        up ? p.maxima(p.all_elements()) : p.minima(p.all_elements());
    out.stages.push_back(stage);
    while (true) {
        std::set<int> in_stage(stage.begin(), stage.end());
        std::vector<int> bad;
        for (int q = 0; q < static_cast<int>(p.size()); ++q) {
            if (in_stage.count(q)) continue; // its fiber contains q's bound, connected
            std::vector<int> fiber_all = up ? p.upset({q}) : p.downset({q});
            std::vector<int> fiber;
            for (int t : fiber_all)
                if (in_stage.count(t)) fiber.push_back(t);
            if (!p.is_connected(fiber)) bad.push_back(q);
        }
        const std::vector<int> added = up ? p.maxima(bad) : p.minima(bad);
        if (added.empty()) break;
        std::vector<int> next = stage;
        next.insert(next.end(), added.begin(), added.end());
        std::sort(next.begin(), next.end());
        stage = std::move(next);
        out.stages.push_back(stage);
    }
    out.stabilization_index = out.stages.size() - 1;
    const std::size_t bound = out.stages.front().size();
    if (out.stabilization_index + 1 > bound)
        throw internal_error("chain stabilized later than the extreme-point bound");
    return out;
}

} // namespace

SChain s_chain(const Poset& p) { return s_chain_directed(p, true); }
SChain s_chain_initial(const Poset& p) { return s_chain_directed(p, false); }

SubposetEmbedding minimal_final_subposet(const PosetPtr& p) {
    return SubposetEmbedding::full(p, s_chain(*p).stages.back());
}

SubposetEmbedding minimal_initial_subposet(const PosetPtr& p) {
    return SubposetEmbedding::full(p, s_chain_initial(*p).stages.back());
}

ConnectorPolicy ConnectorPolicy::explicit_pair(std::string from, std::string to) {
    ConnectorPolicy c;
    c.kind = Kind::pair;
    c.pair = {std::move(from), std::move(to)};
    return c;
}

namespace {

SubposetEmbedding union_embedding(const PosetPtr& p, const std::vector<int>& carrier,
                                  const std::vector<std::pair<int, int>>& base,
                                  const std::vector<std::pair<int, int>>& added) {
    std::vector<std::pair<int, int>> rel = base;
    rel.insert(rel.end(), added.begin(), added.end());
    return SubposetEmbedding::with_relations(p, carrier, rel);
}

// Violations of connectedness, finality and initiality, all at once; the
// greedy connector search drives this to zero.
std::size_t mrk_deficiency(const SubposetEmbedding& e) {
    std::size_t d = e.sub_poset()->connected_components(e.sub_poset()->all_elements()).size() - 1;
    const Poset& ambient = *e.ambient();
    for (int q = 0; q < static_cast<int>(ambient.size()); ++q) {
        const auto fu = e.fiber_up(q);
        if (fu.empty() || !e.sub_poset()->is_connected(fu)) ++d;
        const auto fd = e.fiber_down(q);
        if (fd.empty() || !e.sub_poset()->is_connected(fd)) ++d;
    }
    return d;
}

} // namespace

MrkResult construct_mrk(const PosetPtr& p, const ConnectorPolicy& policy) {
    if (!p->is_connected(p->all_elements()))
        throw precondition_error("the restriction subposet needs a connected poset");
    const std::vector<int> fin = s_chain(*p).stages.back();
    const std::vector<int> init = s_chain_initial(*p).stages.back();

    std::vector<int> carrier = fin;
    carrier.insert(carrier.end(), init.begin(), init.end());
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

    // each part keeps its own induced order; cross relations only through
    // the added connectors
    std::vector<std::pair<int, int>> base;
    for (int a : fin)
        for (int b : fin)
            if (a != b && p->leq(a, b)) base.emplace_back(a, b);
    for (int a : init)
        for (int b : init)
            if (a != b && p->leq(a, b)) base.emplace_back(a, b);

    MrkResult result;
    SubposetEmbedding bare = union_embedding(p, carrier, base, {});
    result.components_joined =
        bare.sub_poset()->connected_components(bare.sub_poset()->all_elements()).size();

    std::vector<std::pair<int, int>> candidates; // (init element, fin element)
    for (int s : init)
        for (int t : fin)
            if (s != t && p->leq(s, t)) candidates.emplace_back(s, t);
    std::sort(candidates.begin(), candidates.end());

    std::vector<std::pair<int, int>> added;
    std::optional<SubposetEmbedding> chosen;

    // Greedily adds candidate relations until `measure` reaches zero. The
    // measure never increases when relations are added, and the full
    // candidate set always reaches zero, so picking the least non-improving
    // pair when stuck still terminates.
    auto grow_until = [&](std::size_t (*measure)(const SubposetEmbedding&)) {
        std::size_t current = measure(*chosen);
        while (current != 0) {
            std::optional<std::pair<int, int>> best;
            std::size_t best_score = current;
            for (const auto& cand : candidates) {
                if (std::count(added.begin(), added.end(), cand)) continue;
                std::vector<std::pair<int, int>> trial = added;
                trial.push_back(cand);
                const std::size_t score = measure(union_embedding(p, carrier, base, trial));
                if (score < best_score) {
                    best_score = score;
                    best = cand;
                }
            }
            if (!best) {
                for (const auto& cand : candidates)
                    if (!std::count(added.begin(), added.end(), cand)) {
                        best = cand;
                        best_score = current;
                        break;
                    }
            }
            if (!best)
                throw internal_error("connector candidates exhausted before reaching the goal");
            added.push_back(*best);
            chosen = union_embedding(p, carrier, base, added);
            current = measure(*chosen);
        }
    };

    bool honor_user_pair = false;
    if (policy.kind == ConnectorPolicy::Kind::pair) {
        const auto a = p->find(policy.pair.first);
        const auto b = p->find(policy.pair.second);
        const bool valid = a && b && std::count(init.begin(), init.end(), *a) > 0 &&
                           std::count(fin.begin(), fin.end(), *b) > 0 && p->leq(*a, *b) &&
                           *a != *b;
        if (valid) {
            added.emplace_back(*a, *b);
            chosen = union_embedding(p, carrier, base, added);
            honor_user_pair = true;
        } else {
            result.notes.push_back("connector pair (" + policy.pair.first + ", " +
                                   policy.pair.second +
                                   ") is not a valid relation from the initial part to the "
                                   "final part; falling back to the least valid pair");
        }
    }

    if (honor_user_pair) {
        // keep the requested shape: only restore connectedness if needed
        grow_until(+[](const SubposetEmbedding& e) {
            return e.sub_poset()->connected_components(e.sub_poset()->all_elements()).size() - 1;
        });
    } else {
        chosen = bare;
        if (mrk_deficiency(bare) != 0) {
            // a single connector first, in lexicographic order
            bool done = false;
            for (const auto& cand : candidates) {
                SubposetEmbedding trial = union_embedding(p, carrier, base, {cand});
                if (mrk_deficiency(trial) == 0) {
                    added.push_back(cand);
                    chosen = trial;
                    done = true;
                    break;
                }
            }
            if (!done) grow_until(&mrk_deficiency);
        }
    }

    result.embedding = *chosen;
    result.added_relations = added;
    if (!added.empty()) result.added_relation = added.front();
    result.is_final = result.embedding.is_final();
    result.is_initial = result.embedding.is_initial();
    return result;
}

namespace {

std::pair<int, PersistenceModule> poset_colimit_witness(const PosetPtr& ambient,
                                                        const std::optional<int>& witness,
                                                        FieldSpec field) {
    if (!witness)
        throw precondition_error("the map is final; no colimit witness exists");
    const int c = *witness;
    PersistenceModule m = indicator_module(ModuleIndex(ambient), ambient->upset({c}), field);
    return {c, std::move(m)};
}

} // namespace

std::pair<int, PersistenceModule> colimit_witness(const SubposetEmbedding& f, FieldSpec field) {
    return poset_colimit_witness(f.ambient(), f.finality_witness(), field);
}

std::pair<int, PersistenceModule> colimit_witness(const MonotoneMap& f, FieldSpec field) {
    return poset_colimit_witness(f.target(), f.finality_witness(), field);
}

std::pair<int, PersistenceModule> colimit_witness(const FunctorData& f, FieldSpec field) {
    const auto witness = finality_witness(f);
    if (!witness)
        throw precondition_error("the functor is final; no colimit witness exists");
    return {*witness, linearized_hom_module(f.target(), *witness, field)};
}

WlogTriple find_wlog_triple(const SubposetEmbedding& f) {
    if (!f.is_full()) throw precondition_error("the search needs a full embedding");
    const Poset& p = *f.ambient();
    std::vector<int> disconnected; // elements with a disconnected nonempty fiber
    for (int q = 0; q < static_cast<int>(p.size()); ++q) {
        const auto fiber = f.fiber_up(q);
        if (fiber.empty())
            throw precondition_error("some fiber is empty; the complement witness applies");
        if (!f.sub_poset()->is_connected(fiber)) disconnected.push_back(q);
    }
    if (disconnected.empty())
        throw precondition_error("every fiber is connected; the embedding is final");

    // ascend to a maximal element with disconnected fiber
    int x = disconnected.front();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int q : disconnected)
            if (p.less(x, q)) {
                x = q;
                moved = true;
                break;
            }
    }

    const std::vector<int> maxima = p.maxima(p.all_elements());
    const auto components = f.sub_poset()->connected_components(f.fiber_up(x));
    auto component_of = [&](int ambient_elem) -> int {
        const auto pos = f.carrier_position(ambient_elem);
        if (!pos) return -1;
        for (std::size_t ci = 0; ci < components.size(); ++ci)
            if (std::count(components[ci].begin(), components[ci].end(), *pos)) return static_cast<int>(ci);
        return -1;
    };
    int z = -1, z_prime = -1, z_comp = -1;
    for (int m : maxima) {
        if (!p.leq(x, m)) continue;
        const int comp = component_of(m);
        if (comp < 0)
            throw internal_error("a maximal element above the witness is outside the image");
        if (z < 0) {
            z = m;
            z_comp = comp;
        } else if (comp != z_comp) {
            z_prime = m;
            break;
        }
    }
    if (z < 0 || z_prime < 0)
        throw internal_error("disconnected fiber without maxima in distinct components");
    return WlogTriple{x, z, z_prime};
}

PersistenceModule mult_witness(const SubposetEmbedding& f, FieldSpec field) {
    if (!f.is_full()) throw precondition_error("the witness construction needs a full embedding");
    const PosetPtr& ambient = f.ambient();
    if (!ambient->is_connected(ambient->all_elements()))
        throw precondition_error("the witness construction needs a connected ambient poset");
    if (f.is_final()) throw precondition_error("the embedding is final; no witness exists");

    for (int q = 0; q < static_cast<int>(ambient->size()); ++q)
        if (f.fiber_up(q).empty()) {
            // the image avoids the whole upset: the indicator of the
            // complement restricts to the constant module
            std::vector<int> complement;
            const std::vector<int> up = ambient->upset({q});
            std::set<int> in_up(up.begin(), up.end());
            for (int e = 0; e < static_cast<int>(ambient->size()); ++e)
                if (!in_up.count(e)) complement.push_back(e);
            return indicator_module(ModuleIndex(ambient), complement, field);
        }

    const WlogTriple triple = find_wlog_triple(f);
    std::vector<int> strict_up;
    for (int e : ambient->upset({triple.x}))
        if (e != triple.x) strict_up.push_back(e);
    const auto components = ambient->connected_components(strict_up);
    std::vector<bool> in_gamma(ambient->size(), false);
    bool found = false;
    for (const auto& comp : components)
        if (std::count(comp.begin(), comp.end(), triple.z)) {
            for (int e : comp) in_gamma[e] = true;
            found = true;
        }
    if (!found) throw internal_error("component of the first maximum not found");
    if (in_gamma[triple.z_prime])
        throw internal_error("the two maxima fell into one component above the witness");

    std::vector<std::size_t> dims(ambient->size(), 1);
    dims[triple.x] = 2;
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : ambient->covers()) {
        if (b == triple.x) {
            maps.emplace(std::pair{a, b}, Matrix::from_ints(field, {{1}, {1}}));
        } else if (a == triple.x) {
            maps.emplace(std::pair{a, b}, in_gamma[b] ? Matrix::from_ints(field, {{1, 0}})
                                                      : Matrix::from_ints(field, {{0, 1}}));
        } else {
            maps.emplace(std::pair{a, b}, Matrix::identity(field, 1));
        }
    }
    return PersistenceModule::over_poset(ambient, field, std::move(dims), maps);
}

Poset worst_case_poset(std::size_t k) {
    if (k < 2) throw input_error("the sharp-bound family needs k >= 2");
    std::vector<std::string> elements;
    for (std::size_t i = 1; i <= k; ++i) elements.push_back("p" + std::to_string(i));
    for (std::size_t i = 1; i + 1 <= k; ++i) elements.push_back("s" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    covers.emplace_back("s1", "p1");
    covers.emplace_back("s1", "p2");
    for (std::size_t i = 2; i + 1 <= k; ++i) {
        covers.emplace_back("s" + std::to_string(i), "s" + std::to_string(i - 1));
        covers.emplace_back("s" + std::to_string(i), "p" + std::to_string(i + 1));
    }
    return Poset::from_covers(std::move(elements), covers);
}

} // namespace grinv
