#include "grinv/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace grinv {

namespace {

void close_transitively(std::vector<std::vector<bool>>& r) {
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
}

void check_antisymmetry(const std::vector<std::vector<bool>>& r,
                        const std::vector<std::string>& ids) {
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (r[i][j] && r[j][i])
                throw input_error("relation has a cycle through '" + ids[i] + "' and '" +
                                  ids[j] + "'");
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         std::vector<std::string>* warnings) {
    Poset p;
    p.elements_ = std::move(elements);
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < p.elements_.size(); ++i) {
        if (!index.emplace(p.elements_[i], static_cast<int>(i)).second)
            throw input_error("duplicate element id '" + p.elements_[i] + "'");
    }
    const std::size_t n = p.elements_.size();
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
    std::vector<std::pair<int, int>> given;
    for (const auto& [a, b] : covers) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw input_error("unknown element id '" + a + "'");
        if (ib == index.end()) throw input_error("unknown element id '" + b + "'");
        if (ia->second == ib->second)
            throw input_error("self-relation on '" + a + "' is redundant");
        p.leq_[ia->second][ib->second] = true;
        given.emplace_back(ia->second, ib->second);
    }
    close_transitively(p.leq_);
    check_antisymmetry(p.leq_, p.elements_);
    p.finish_construction();
    if (warnings) {
        std::set<std::pair<int, int>> reduced(p.covers_.begin(), p.covers_.end());
        for (const auto& [a, b] : given)
            if (!reduced.count({a, b}))
                warnings->push_back("relation " + p.elements_[a] + " <= " + p.elements_[b] +
                                    " is implied by the others (kept)");
    }
    return p;
}

Poset Poset::from_relation_pairs(std::vector<std::string> elements,
                                 const std::vector<std::pair<int, int>>& pairs) {
    Poset p;
    p.elements_ = std::move(elements);
    const std::size_t n = p.elements_.size();
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
            throw input_error("relation index out of range");
        p.leq_[a][b] = true;
    }
    close_transitively(p.leq_);
    check_antisymmetry(p.leq_, p.elements_);
    p.finish_construction();
    return p;
}

void Poset::finish_construction() {
    const int n = static_cast<int>(elements_.size());
    covers_.clear();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq_[a][b]) continue;
            bool through = false;
            for (int c = 0; c < n && !through; ++c)
                through = c != a && c != b && leq_[a][c] && leq_[c][b];
            if (!through) covers_.emplace_back(a, b);
        }
    std::sort(covers_.begin(), covers_.end());
}

int Poset::index_of(const std::string& id) const {
    auto it = std::find(elements_.begin(), elements_.end(), id);
    if (it == elements_.end()) throw input_error("unknown element id '" + id + "'");
    return static_cast<int>(it - elements_.begin());
}

std::optional<int> Poset::find(const std::string& id) const {
    auto it = std::find(elements_.begin(), elements_.end(), id);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<int>(it - elements_.begin());
}

std::vector<int> Poset::all_elements() const {
    std::vector<int> v(size());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<int> Poset::upset(const std::vector<int>& s) const {
    std::vector<int> out;
    for (int p = 0; p < static_cast<int>(size()); ++p)
        for (int x : s) {
            if (x < 0 || x >= static_cast<int>(size()))
                throw input_error("element index out of range");
            if (leq_[x][p]) {
                out.push_back(p);
                break;
            }
        }
    return out;
}

std::vector<int> Poset::downset(const std::vector<int>& s) const {
    std::vector<int> out;
    for (int p = 0; p < static_cast<int>(size()); ++p)
        for (int x : s) {
            if (x < 0 || x >= static_cast<int>(size()))
                throw input_error("element index out of range");
            if (leq_[p][x]) {
                out.push_back(p);
                break;
            }
        }
    return out;
}

std::vector<int> Poset::maxima(const std::vector<int>& s) const {
    std::vector<int> out;
    for (int a : s) {
        bool dominated = false;
        for (int b : s)
            if (a != b && leq_[a][b]) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(a);
    }
    return sorted_unique(out);
}

std::vector<int> Poset::minima(const std::vector<int>& s) const {
    std::vector<int> out;
    for (int a : s) {
        bool dominates = false;
        for (int b : s)
            if (a != b && leq_[b][a]) {
                dominates = true;
                break;
            }
        if (!dominates) out.push_back(a);
    }
    return sorted_unique(out);
}

bool Poset::is_connected(const std::vector<int>& s) const {
    return !s.empty() && connected_components(s).size() == 1;
}

std::vector<std::vector<int>> Poset::connected_components(const std::vector<int>& s) const {
    const std::vector<int> v = sorted_unique(s);
    std::vector<int> comp(v.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find_root = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (comparable(v[i], v[j])) comp[find_root(i)] = find_root(j);
    std::vector<std::vector<int>> groups;
    std::vector<int> root_to_group(v.size(), -1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int r = find_root(static_cast<int>(i));
        if (root_to_group[r] < 0) {
            root_to_group[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[root_to_group[r]].push_back(v[i]);
    }
    return groups;
}

bool Poset::is_convex(const std::vector<int>& s) const {
    std::vector<bool> in(size(), false);
    for (int x : s) {
        if (x < 0 || x >= static_cast<int>(size()))
            throw input_error("element index out of range");
        in[x] = true;
    }
    for (int a : s)
        for (int b : s)
            if (leq_[a][b])
                for (int c = 0; c < static_cast<int>(size()); ++c)
                    if (!in[c] && leq_[a][c] && leq_[c][b]) return false;
    return true;
}

bool Poset::is_interval(const std::vector<int>& s) const {
    return is_convex(s) && is_connected(s);
}

std::vector<int> Poset::linear_extension() const {
    const int n = static_cast<int>(size());
    std::vector<int> indeg(n, 0);
    for (const auto& [a, b] : covers_) {
        (void)a;
        ++indeg[b];
    }
    std::set<int> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.insert(i);
    std::vector<int> out;
    while (!ready.empty()) {
        const int v = *ready.begin();
        ready.erase(ready.begin());
        out.push_back(v);
        for (const auto& [a, b] : covers_)
            if (a == v && --indeg[b] == 0) ready.insert(b);
    }
    if (static_cast<int>(out.size()) != n) throw internal_error("linear extension failed");
    return out;
}

PosetPtr make_poset(std::vector<std::string> elements,
                    const std::vector<std::pair<std::string, std::string>>& covers,
                    std::vector<std::string>* warnings) {
    return std::make_shared<Poset>(Poset::from_covers(std::move(elements), covers, warnings));
}

MonotoneMap::MonotoneMap(PosetPtr source, PosetPtr target, std::vector<int> object_map)
    : source_(std::move(source)), target_(std::move(target)), object_map_(std::move(object_map)) {
    if (!source_ || !target_) throw input_error("monotone map needs source and target");
    if (object_map_.size() != source_->size())
        throw input_error("object map size does not match source");
    for (int t : object_map_)
        if (t < 0 || t >= static_cast<int>(target_->size()))
            throw input_error("object map value out of range");
    const int n = static_cast<int>(source_->size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (source_->leq(a, b) && !target_->leq(object_map_[a], object_map_[b]))
                throw input_error("map is not monotone: " + source_->id(a) +
                                  " <= " + source_->id(b) + " but images are not ordered");
}

std::vector<int> MonotoneMap::fiber_up(int p) const {
    if (p < 0 || p >= static_cast<int>(target_->size()))
        throw input_error("element index out of range");
    std::vector<int> out;
    for (int q = 0; q < static_cast<int>(source_->size()); ++q)
        if (target_->leq(p, object_map_[q])) out.push_back(q);
    return out;
}

std::vector<int> MonotoneMap::fiber_down(int p) const {
    if (p < 0 || p >= static_cast<int>(target_->size()))
        throw input_error("element index out of range");
    std::vector<int> out;
    for (int q = 0; q < static_cast<int>(source_->size()); ++q)
        if (target_->leq(object_map_[q], p)) out.push_back(q);
    return out;
}

namespace {

Poset restrict_to(const Poset& p, const std::vector<int>& subset) {
    std::vector<std::string> ids;
    ids.reserve(subset.size());
    for (int x : subset) ids.push_back(p.id(x));
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            if (i != j && p.leq(subset[i], subset[j]))
                rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Poset::from_relation_pairs(std::move(ids), rel);
}

} // namespace

Poset MonotoneMap::comma_fiber_up(int p) const { return restrict_to(*source_, fiber_up(p)); }
Poset MonotoneMap::comma_fiber_down(int p) const { return restrict_to(*source_, fiber_down(p)); }

std::optional<int> MonotoneMap::finality_witness() const {
    for (int p = 0; p < static_cast<int>(target_->size()); ++p) {
        const std::vector<int> f = fiber_up(p);
        if (f.empty() || !source_->is_connected(f)) return p;
    }
    return std::nullopt;
}

std::optional<int> MonotoneMap::initiality_witness() const {
    for (int p = 0; p < static_cast<int>(target_->size()); ++p) {
        const std::vector<int> f = fiber_down(p);
        if (f.empty() || !source_->is_connected(f)) return p;
    }
    return std::nullopt;
}

SubposetEmbedding SubposetEmbedding::full(PosetPtr ambient, const std::vector<int>& carrier) {
    std::vector<std::pair<int, int>> rel;
    for (int a : carrier)
        for (int b : carrier)
            if (a != b && ambient->leq(a, b)) rel.emplace_back(a, b);
    return with_relations(std::move(ambient), carrier, rel);
}

SubposetEmbedding SubposetEmbedding::full_by_ids(PosetPtr ambient,
                                                 const std::vector<std::string>& carrier) {
    std::vector<int> idx;
    idx.reserve(carrier.size());
    for (const auto& id : carrier) idx.push_back(ambient->index_of(id));
    return full(std::move(ambient), idx);
}

SubposetEmbedding SubposetEmbedding::with_relations(
    PosetPtr ambient, const std::vector<int>& carrier,
    const std::vector<std::pair<int, int>>& relations) {
    if (!ambient) throw input_error("embedding needs an ambient poset");
    SubposetEmbedding e;
    e.ambient_ = std::move(ambient);
    e.carrier_ = sorted_unique(carrier);
    if (e.carrier_.empty()) throw input_error("embedding carrier must be nonempty");
    for (int x : e.carrier_)
        if (x < 0 || x >= static_cast<int>(e.ambient_->size()))
            throw input_error("carrier index out of range");
    std::vector<int> pos(e.ambient_->size(), -1);
    for (std::size_t i = 0; i < e.carrier_.size(); ++i) pos[e.carrier_[i]] = static_cast<int>(i);

    std::vector<std::string> ids;
    for (int x : e.carrier_) ids.push_back(e.ambient_->id(x));
    std::vector<std::pair<int, int>> rel;
    for (const auto& [a, b] : relations) {
        if (a < 0 || b < 0 || a >= static_cast<int>(e.ambient_->size()) ||
            b >= static_cast<int>(e.ambient_->size()))
            throw input_error("relation index out of range");
        if (pos[a] < 0 || pos[b] < 0)
            throw input_error("relation endpoint outside the carrier");
        if (a == b) continue;
        if (!e.ambient_->leq(a, b))
            throw input_error("relation " + e.ambient_->id(a) + " <= " + e.ambient_->id(b) +
                              " does not hold in the ambient poset");
        rel.emplace_back(pos[a], pos[b]);
    }
    e.sub_poset_ = std::make_shared<Poset>(Poset::from_relation_pairs(std::move(ids), rel));

    e.full_ = true;
    for (std::size_t i = 0; i < e.carrier_.size() && e.full_; ++i)
        for (std::size_t j = 0; j < e.carrier_.size() && e.full_; ++j)
            if (e.ambient_->leq(e.carrier_[i], e.carrier_[j]) !=
                e.sub_poset_->leq(static_cast<int>(i), static_cast<int>(j)))
                e.full_ = false;
    return e;
}

std::optional<int> SubposetEmbedding::carrier_position(int ambient_index) const {
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), ambient_index);
    if (it == carrier_.end() || *it != ambient_index) return std::nullopt;
    return static_cast<int>(it - carrier_.begin());
}

MonotoneMap SubposetEmbedding::as_monotone_map() const {
    return MonotoneMap(sub_poset_, ambient_, carrier_);
}

std::vector<int> SubposetEmbedding::fiber_up(int p) const {
    if (p < 0 || p >= static_cast<int>(ambient_->size()))
        throw input_error("element index out of range");
    std::vector<int> out;
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (ambient_->leq(p, carrier_[i])) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> SubposetEmbedding::fiber_down(int p) const {
    if (p < 0 || p >= static_cast<int>(ambient_->size()))
        throw input_error("element index out of range");
    std::vector<int> out;
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (ambient_->leq(carrier_[i], p)) out.push_back(static_cast<int>(i));
    return out;
}

Poset SubposetEmbedding::comma_fiber_up(int p) const {
    return restrict_to(*sub_poset_, fiber_up(p));
}

Poset SubposetEmbedding::comma_fiber_down(int p) const {
    return restrict_to(*sub_poset_, fiber_down(p));
}

std::optional<int> SubposetEmbedding::finality_witness() const {
    for (int p = 0; p < static_cast<int>(ambient_->size()); ++p) {
        const std::vector<int> f = fiber_up(p);
        if (f.empty() || !sub_poset_->is_connected(f)) return p;
    }
    return std::nullopt;
}

std::optional<int> SubposetEmbedding::initiality_witness() const {
    for (int p = 0; p < static_cast<int>(ambient_->size()); ++p) {
        const std::vector<int> f = fiber_down(p);
        if (f.empty() || !sub_poset_->is_connected(f)) return p;
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> SubposetEmbedding::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(carrier_.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && sub_poset_->leq(i, j)) out.emplace_back(i, j);
    return out;
}

bool is_final_embedding(const SubposetEmbedding& f) { return f.is_final(); }
bool is_initial_embedding(const SubposetEmbedding& f) { return f.is_initial(); }

SubposetEmbedding compose(const SubposetEmbedding& outer, const SubposetEmbedding& inner) {
    if (inner.ambient() != outer.sub_poset() && !(*inner.ambient() == *outer.sub_poset()))
        throw input_error("compose: inner embedding is not into the outer subposet");
    std::vector<int> carrier;
    carrier.reserve(inner.carrier().size());
    for (int pos : inner.carrier()) carrier.push_back(outer.carrier()[pos]);
    std::vector<std::pair<int, int>> rel;
    const int n = static_cast<int>(inner.carrier().size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && inner.sub_poset()->leq(i, j))
                rel.emplace_back(outer.carrier()[inner.carrier()[i]],
                                 outer.carrier()[inner.carrier()[j]]);
    return SubposetEmbedding::with_relations(outer.ambient(), carrier, rel);
}

} // namespace grinv
