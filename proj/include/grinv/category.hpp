#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grinv/poset.hpp"

namespace grinv {

struct MorphismData {
    std::string id;
    int src;
    int tgt;
};

// Finite category with an explicit total composition table, validated at
// construction: identities neutral, composition associative and defined
// exactly on composable pairs.
class FinCategory {
public:
    // compose[g][f] = index of g after f when tgt(f) == src(g), else -1.
    FinCategory(std::vector<std::string> objects, std::vector<MorphismData> morphisms,
                std::vector<int> identities, std::vector<std::vector<int>> compose);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::string& object_id(int i) const { return objects_.at(i); }
    int object_index(const std::string& id) const;
    const MorphismData& morphism(int m) const { return morphisms_.at(m); }
    int morphism_index(const std::string& id) const;
    int identity_of(int object) const { return identities_.at(object); }
    bool is_identity(int m) const { return identities_[morphisms_[m].src] == m && morphisms_[m].src == morphisms_[m].tgt; }

    // g after f; throws when not composable.
    int compose(int g, int f) const;

    std::vector<int> hom(int src, int tgt) const; // morphism indices, ascending

    // Zigzag connectivity on objects.
    bool is_connected() const;
    std::vector<std::vector<int>> object_components() const;

    // Convexity of the full subcategory on an object set, and interval =
    // convex and connected.
    bool is_convex_objects(const std::vector<int>& s) const;
    bool is_interval_objects(const std::vector<int>& s) const;
    bool is_connected_objects(const std::vector<int>& s) const;

private:
    std::vector<std::string> objects_;
    std::vector<MorphismData> morphisms_;
    std::vector<int> identities_;
    std::vector<std::vector<int>> compose_;
};

using FinCategoryPtr = std::shared_ptr<const FinCategory>;

FinCategoryPtr poset_to_category(const PosetPtr& p);
FinCategoryPtr opposite(const FinCategoryPtr& c);

// Structure-preserving map of finite categories; validated at construction.
class FunctorData {
public:
    FunctorData(FinCategoryPtr source, FinCategoryPtr target, std::vector<int> object_map,
                std::vector<int> morphism_map);

    const FinCategoryPtr& source() const { return source_; }
    const FinCategoryPtr& target() const { return target_; }
    int apply_object(int j) const { return object_map_.at(j); }
    int apply_morphism(int m) const { return morphism_map_.at(m); }
    const std::vector<int>& object_map() const { return object_map_; }
    const std::vector<int>& morphism_map() const { return morphism_map_; }

    FunctorData opposite_functor() const;

private:
    FinCategoryPtr source_, target_;
    std::vector<int> object_map_, morphism_map_;
};

FunctorData identity_functor(const FinCategoryPtr& c);

// Lifts a monotone map to the corresponding functor of poset categories.
FunctorData poset_functor(const MonotoneMap& f, const FinCategoryPtr& source_cat,
                          const FinCategoryPtr& target_cat);

// The comma category d/F (objects are pairs (j, f: d -> F(j))) together with
// labels back into the source.
struct CommaCategory {
    FinCategory category;
    std::vector<std::pair<int, int>> objects; // (source object j, target morphism f)
};

CommaCategory comma_category(int d, const FunctorData& f);      // d/F
CommaCategory comma_category_from(const FunctorData& f, int d); // F/d

// Least target object whose comma category is empty or disconnected.
std::optional<int> finality_witness(const FunctorData& f);
bool is_final(const FunctorData& f);
// Initiality goes through the opposite functor.
std::optional<int> initiality_witness(const FunctorData& f);
bool is_initial(const FunctorData& f);

} // namespace grinv
