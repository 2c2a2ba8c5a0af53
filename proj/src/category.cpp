#include "grinv/category.hpp"

#include <algorithm>
#include <numeric>

namespace grinv {

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<MorphismData> morphisms,
                         std::vector<int> identities, std::vector<std::vector<int>> compose)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)),
      identities_(std::move(identities)), compose_(std::move(compose)) {
    const int nobj = static_cast<int>(objects_.size());
    const int nmor = static_cast<int>(morphisms_.size());
    for (int i = 0; i < nobj; ++i)
        for (int j = i + 1; j < nobj; ++j)
            if (objects_[i] == objects_[j])
                throw input_error("duplicate object id '" + objects_[i] + "'");
    for (const auto& m : morphisms_)
        if (m.src < 0 || m.src >= nobj || m.tgt < 0 || m.tgt >= nobj)
            throw input_error("morphism '" + m.id + "' has bad endpoints");
    if (static_cast<int>(identities_.size()) != nobj)
        throw input_error("one identity per object required");
    for (int c = 0; c < nobj; ++c) {
        const int e = identities_[c];
        if (e < 0 || e >= nmor || morphisms_[e].src != c || morphisms_[e].tgt != c)
            throw input_error("identity of '" + objects_[c] + "' is not an endomorphism");
    }
    if (static_cast<int>(compose_.size()) != nmor)
        throw input_error("composition table must be morphisms x morphisms");
    for (const auto& row : compose_)
        if (static_cast<int>(row.size()) != nmor)
            throw input_error("composition table must be morphisms x morphisms");

    for (int g = 0; g < nmor; ++g)
        for (int f = 0; f < nmor; ++f) {
            const bool composable = morphisms_[f].tgt == morphisms_[g].src;
            const int gf = compose_[g][f];
            if (!composable) {
                if (gf != -1)
                    throw input_error("composition defined on a non-composable pair (" +
                                      morphisms_[g].id + ", " + morphisms_[f].id + ")");
                continue;
            }
            if (gf < 0 || gf >= nmor)
                throw input_error("composition missing for pair (" + morphisms_[g].id + ", " +
                                  morphisms_[f].id + ")");
            if (morphisms_[gf].src != morphisms_[f].src || morphisms_[gf].tgt != morphisms_[g].tgt)
                throw input_error("composite of (" + morphisms_[g].id + ", " + morphisms_[f].id +
                                  ") has wrong endpoints");
        }
    for (int f = 0; f < nmor; ++f) {
        if (compose_[f][identities_[morphisms_[f].src]] != f ||
            compose_[identities_[morphisms_[f].tgt]][f] != f)
            throw input_error("identity is not neutral for '" + morphisms_[f].id + "'");
    }
    for (int h = 0; h < nmor; ++h)
        for (int g = 0; g < nmor; ++g) {
            if (morphisms_[g].tgt != morphisms_[h].src) continue;
            const int hg = compose_[h][g];
            for (int f = 0; f < nmor; ++f) {
                if (morphisms_[f].tgt != morphisms_[g].src) continue;
                if (compose_[h][compose_[g][f]] != compose_[hg][f])
                    throw input_error("composition is not associative at (" + morphisms_[h].id +
                                      ", " + morphisms_[g].id + ", " + morphisms_[f].id + ")");
            }
        }
}

int FinCategory::object_index(const std::string& id) const {
    auto it = std::find(objects_.begin(), objects_.end(), id);
    if (it == objects_.end()) throw input_error("unknown object id '" + id + "'");
    return static_cast<int>(it - objects_.begin());
}

int FinCategory::morphism_index(const std::string& id) const {
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
        if (morphisms_[i].id == id) return static_cast<int>(i);
    throw input_error("unknown morphism id '" + id + "'");
}

int FinCategory::compose(int g, int f) const {
    if (g < 0 || f < 0 || g >= static_cast<int>(morphisms_.size()) ||
        f >= static_cast<int>(morphisms_.size()))
        throw input_error("morphism index out of range");
    const int gf = compose_[g][f];
    if (gf < 0)
        throw input_error("morphisms '" + morphisms_[g].id + "' and '" + morphisms_[f].id +
                          "' are not composable");
    return gf;
}

std::vector<int> FinCategory::hom(int src, int tgt) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
        if (morphisms_[i].src == src && morphisms_[i].tgt == tgt)
            out.push_back(static_cast<int>(i));
    return out;
}

bool FinCategory::is_connected() const {
    return object_count() > 0 && object_components().size() == 1;
}

std::vector<std::vector<int>> FinCategory::object_components() const {
    const int n = static_cast<int>(object_count());
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> root = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& m : morphisms_) comp[root(m.src)] = root(m.tgt);
    std::vector<std::vector<int>> groups;
    std::vector<int> seen(n, -1);
    for (int i = 0; i < n; ++i) {
        const int r = root(i);
        if (seen[r] < 0) {
            seen[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[seen[r]].push_back(i);
    }
    return groups;
}

bool FinCategory::is_convex_objects(const std::vector<int>& s) const {
    std::vector<bool> in(object_count(), false);
    for (int x : s) {
        if (x < 0 || x >= static_cast<int>(object_count()))
            throw input_error("object index out of range");
        in[x] = true;
    }
    // a morphism of the full subcategory that factors through an outside
    // object breaks convexity
    const int nmor = static_cast<int>(morphisms_.size());
    for (int f = 0; f < nmor; ++f) {
        if (!in[morphisms_[f].src] || !in[morphisms_[f].tgt]) continue;
        for (int g = 0; g < nmor; ++g) {
            if (morphisms_[g].src != morphisms_[f].src) continue;
            if (in[morphisms_[g].tgt]) continue;
            for (int h = 0; h < nmor; ++h) {
                if (morphisms_[h].src != morphisms_[g].tgt ||
                    morphisms_[h].tgt != morphisms_[f].tgt)
                    continue;
                if (compose_[h][g] == f) return false;
            }
        }
    }
    return true;
}

bool FinCategory::is_connected_objects(const std::vector<int>& s) const {
    if (s.empty()) return false;
    std::vector<bool> in(object_count(), false);
    for (int x : s) in[x] = true;
    std::vector<int> comp(object_count());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> root = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& m : morphisms_)
        if (in[m.src] && in[m.tgt]) comp[root(m.src)] = root(m.tgt);
    const int r0 = root(s.front());
    return std::all_of(s.begin(), s.end(), [&](int x) { return root(x) == r0; });
}

bool FinCategory::is_interval_objects(const std::vector<int>& s) const {
    return is_convex_objects(s) && is_connected_objects(s);
}

FinCategoryPtr poset_to_category(const PosetPtr& p) {
    std::vector<std::string> objects = p->elements();
    std::vector<MorphismData> morphisms;
    const int n = static_cast<int>(p->size());
    std::vector<std::vector<int>> hom_index(n, std::vector<int>(n, -1));
    std::vector<int> identities(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p->leq(a, b)) {
                hom_index[a][b] = static_cast<int>(morphisms.size());
                morphisms.push_back({p->id(a) + "<" + p->id(b), a, b});
                if (a == b) identities[a] = hom_index[a][b];
            }
    const int nmor = static_cast<int>(morphisms.size());
    std::vector<std::vector<int>> table(nmor, std::vector<int>(nmor, -1));
    for (int g = 0; g < nmor; ++g)
        for (int f = 0; f < nmor; ++f)
            if (morphisms[f].tgt == morphisms[g].src)
                table[g][f] = hom_index[morphisms[f].src][morphisms[g].tgt];
    return std::make_shared<FinCategory>(std::move(objects), std::move(morphisms),
                                         std::move(identities), std::move(table));
}

FinCategoryPtr opposite(const FinCategoryPtr& c) {
    std::vector<MorphismData> morphisms;
    morphisms.reserve(c->morphism_count());
    for (std::size_t m = 0; m < c->morphism_count(); ++m) {
        const auto& d = c->morphism(m);
        morphisms.push_back({d.id, d.tgt, d.src});
    }
    std::vector<int> identities;
    for (std::size_t o = 0; o < c->object_count(); ++o)
        identities.push_back(c->identity_of(static_cast<int>(o)));
    const int nmor = static_cast<int>(morphisms.size());
    std::vector<std::vector<int>> table(nmor, std::vector<int>(nmor, -1));
    for (int g = 0; g < nmor; ++g)
        for (int f = 0; f < nmor; ++f)
            if (morphisms[f].tgt == morphisms[g].src)
                table[g][f] = c->compose(f, g); // reversed order in the opposite
    return std::make_shared<FinCategory>(c->objects(), std::move(morphisms),
                                         std::move(identities), std::move(table));
}

FunctorData::FunctorData(FinCategoryPtr source, FinCategoryPtr target,
                         std::vector<int> object_map, std::vector<int> morphism_map)
    : source_(std::move(source)), target_(std::move(target)), object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {
    if (!source_ || !target_) throw input_error("functor needs source and target");
    if (object_map_.size() != source_->object_count())
        throw input_error("functor object map has wrong size");
    if (morphism_map_.size() != source_->morphism_count())
        throw input_error("functor morphism map has wrong size");
    for (int o : object_map_)
        if (o < 0 || o >= static_cast<int>(target_->object_count()))
            throw input_error("functor object map value out of range");
    for (std::size_t m = 0; m < morphism_map_.size(); ++m) {
        const int fm = morphism_map_[m];
        if (fm < 0 || fm >= static_cast<int>(target_->morphism_count()))
            throw input_error("functor morphism map value out of range");
        const auto& sm = source_->morphism(static_cast<int>(m));
        const auto& tm = target_->morphism(fm);
        if (tm.src != object_map_[sm.src] || tm.tgt != object_map_[sm.tgt])
            throw input_error("functor does not preserve endpoints at '" + sm.id + "'");
    }
    for (std::size_t o = 0; o < source_->object_count(); ++o)
        if (morphism_map_[source_->identity_of(static_cast<int>(o))] !=
            target_->identity_of(object_map_[o]))
            throw input_error("functor does not preserve the identity of '" +
                              source_->object_id(static_cast<int>(o)) + "'");
    for (std::size_t g = 0; g < source_->morphism_count(); ++g)
        for (std::size_t f = 0; f < source_->morphism_count(); ++f) {
            if (source_->morphism(static_cast<int>(f)).tgt !=
                source_->morphism(static_cast<int>(g)).src)
                continue;
            const int gf = source_->compose(static_cast<int>(g), static_cast<int>(f));
            if (morphism_map_[gf] !=
                target_->compose(morphism_map_[g], morphism_map_[f]))
                throw input_error("functor does not preserve composition");
        }
}

FunctorData FunctorData::opposite_functor() const {
    return FunctorData(opposite(source_), opposite(target_), object_map_, morphism_map_);
}

FunctorData identity_functor(const FinCategoryPtr& c) {
    std::vector<int> omap(c->object_count());
    std::iota(omap.begin(), omap.end(), 0);
    std::vector<int> mmap(c->morphism_count());
    std::iota(mmap.begin(), mmap.end(), 0);
    return FunctorData(c, c, std::move(omap), std::move(mmap));
}

FunctorData poset_functor(const MonotoneMap& f, const FinCategoryPtr& source_cat,
                          const FinCategoryPtr& target_cat) {
    std::vector<int> omap = f.object_map();
    std::vector<int> mmap(source_cat->morphism_count(), -1);
    for (std::size_t m = 0; m < source_cat->morphism_count(); ++m) {
        const auto& d = source_cat->morphism(static_cast<int>(m));
        const std::string tid =
            f.target()->id(omap[d.src]) + "<" + f.target()->id(omap[d.tgt]);
        mmap[m] = target_cat->morphism_index(tid);
    }
    return FunctorData(source_cat, target_cat, std::move(omap), std::move(mmap));
}

CommaCategory comma_category(int d, const FunctorData& f) {
    const FinCategory& src = *f.source();
    const FinCategory& tgt = *f.target();
    if (d < 0 || d >= static_cast<int>(tgt.object_count()))
        throw input_error("object index out of range");
    std::vector<std::pair<int, int>> objs; // (j, arrow d -> F(j))
    for (int j = 0; j < static_cast<int>(src.object_count()); ++j)
        for (int arrow : tgt.hom(d, f.apply_object(j))) objs.emplace_back(j, arrow);
    auto find_obj = [&](int j, int arrow) {
        for (std::size_t k = 0; k < objs.size(); ++k)
            if (objs[k].first == j && objs[k].second == arrow) return static_cast<int>(k);
        throw internal_error("comma object lookup failed");
    };
    std::vector<std::string> names;
    names.reserve(objs.size());
    for (const auto& [j, arrow] : objs)
        names.push_back("(" + src.object_id(j) + "|" + tgt.morphism(arrow).id + ")");

    // a morphism (j,a) -> (j',a') for each g: j -> j' with F(g) a = a'
    std::vector<MorphismData> morphisms;
    std::vector<std::pair<int, int>> mor_src_g; // (comma source object, source morphism g)
    for (std::size_t k = 0; k < objs.size(); ++k) {
        const auto& [j, arrow] = objs[k];
        for (std::size_t g = 0; g < src.morphism_count(); ++g) {
            const auto& gd = src.morphism(static_cast<int>(g));
            if (gd.src != j) continue;
            const int image = tgt.compose(f.apply_morphism(static_cast<int>(g)), arrow);
            const int to = find_obj(gd.tgt, image);
            morphisms.push_back({names[k] + "->" + names[to] + ":" + gd.id,
                                 static_cast<int>(k), to});
            mor_src_g.emplace_back(static_cast<int>(k), static_cast<int>(g));
        }
    }
    std::vector<int> identities(objs.size(), -1);
    for (std::size_t m = 0; m < morphisms.size(); ++m) {
        const auto& [k, g] = mor_src_g[m];
        if (src.is_identity(g)) identities[k] = static_cast<int>(m);
    }
    const int nmor = static_cast<int>(morphisms.size());
    std::vector<std::vector<int>> table(nmor, std::vector<int>(nmor, -1));
    auto find_mor = [&](int from, int g) {
        for (std::size_t m = 0; m < morphisms.size(); ++m)
            if (mor_src_g[m].first == from && mor_src_g[m].second == g)
                return static_cast<int>(m);
        throw internal_error("comma morphism lookup failed");
    };
    for (int gm = 0; gm < nmor; ++gm)
        for (int fm = 0; fm < nmor; ++fm) {
            if (morphisms[fm].tgt != morphisms[gm].src) continue;
            const int composite = src.compose(mor_src_g[gm].second, mor_src_g[fm].second);
            table[gm][fm] = find_mor(mor_src_g[fm].first, composite);
        }
    return CommaCategory{FinCategory(std::move(names), std::move(morphisms),
                                     std::move(identities), std::move(table)),
                         std::move(objs)};
}

CommaCategory comma_category_from(const FunctorData& f, int d) {
    CommaCategory op = comma_category(d, f.opposite_functor());
    return op;
}

std::optional<int> finality_witness(const FunctorData& f) {
    for (int d = 0; d < static_cast<int>(f.target()->object_count()); ++d) {
        const CommaCategory c = comma_category(d, f);
        if (!c.category.is_connected()) return d;
    }
    return std::nullopt;
}

bool is_final(const FunctorData& f) { return !finality_witness(f).has_value(); }

std::optional<int> initiality_witness(const FunctorData& f) {
    return finality_witness(f.opposite_functor());
}

bool is_initial(const FunctorData& f) { return !initiality_witness(f).has_value(); }

} // namespace grinv
