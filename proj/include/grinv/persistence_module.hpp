#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "grinv/category.hpp"
#include "grinv/matrix.hpp"
#include "grinv/poset.hpp"

namespace grinv {

// One generating morphism of the index: a Hasse cover for posets, a
// non-identity morphism for categories.
struct Generator {
    int src;
    int tgt;
    int morphism; // category morphism index, -1 for poset covers
    std::string label;
};

// The indexing shape of a module: a finite poset or a finite category.
class ModuleIndex {
public:
    ModuleIndex(PosetPtr p) : v_(std::move(p)) {}
    ModuleIndex(FinCategoryPtr c) : v_(std::move(c)) {}

    bool is_poset() const { return std::holds_alternative<PosetPtr>(v_); }
    const PosetPtr& poset() const;
    const FinCategoryPtr& category() const;

    std::size_t object_count() const;
    const std::string& object_id(int i) const;
    int object_index(const std::string& id) const;
    std::vector<Generator> generators() const;
    bool is_connected() const;
    bool is_interval_objects(const std::vector<int>& s) const;
    bool is_convex_objects(const std::vector<int>& s) const;

    bool same_shape_as(const ModuleIndex& other) const;

private:
    std::variant<PosetPtr, FinCategoryPtr> v_;
};

struct ValidationResult {
    bool ok = true;
    std::string message; // names the first violating square or triple
};

// A pointwise finite-dimensional functor from the index into vector spaces
// over the chosen field: a dimension per object, a matrix per generating
// morphism. Shape conformance is enforced at construction; functoriality
// (path independence / table compatibility) is checked by validate().
class PersistenceModule {
public:
    PersistenceModule(ModuleIndex index, FieldSpec field, std::vector<std::size_t> dims,
                      std::vector<Matrix> generator_maps);

    // Poset convenience: maps keyed by cover pairs (ambient indices).
    static PersistenceModule over_poset(PosetPtr p, FieldSpec field,
                                        std::vector<std::size_t> dims,
                                        const std::map<std::pair<int, int>, Matrix>& cover_maps);

    const ModuleIndex& index() const { return index_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim_at(int object) const { return dims_.at(object); }
    std::size_t total_dim() const;

    const std::vector<Generator>& generators() const { return generators_; }
    const Matrix& generator_map(std::size_t g) const { return maps_.at(g); }

    ValidationResult validate() const;

    // The matrix of an arbitrary relation p <= q of a poset index, computed
    // along the lexicographically least cover path. For a validated module
    // every cover path gives the same answer.
    Matrix composite(int p, int q) const;
    // The matrix of an arbitrary morphism of a category index.
    Matrix morphism_matrix(int m) const;

    PersistenceModule replace_maps(std::vector<Matrix> new_maps) const;

private:
    ModuleIndex index_;
    FieldSpec field_;
    std::vector<std::size_t> dims_;
    std::vector<Generator> generators_;
    std::vector<Matrix> maps_;
};

// Indicator module of a convex object set: the field on the carrier,
// identities inside, zero elsewhere.
PersistenceModule indicator_module(ModuleIndex index, const std::vector<int>& carrier,
                                   FieldSpec field);

// Interval module: indicator of a carrier that must be convex and connected.
PersistenceModule interval_module(ModuleIndex index, const std::vector<int>& carrier,
                                  FieldSpec field);

// The constant one-dimensional module on the whole index.
PersistenceModule entire_interval_module(ModuleIndex index, FieldSpec field);

PersistenceModule zero_module(ModuleIndex index, FieldSpec field);

PersistenceModule direct_sum(const PersistenceModule& a, const PersistenceModule& b);

// Restriction along a subposet embedding: dimensions pull back along the
// carrier, and the sub-order's covers pick up the ambient composites. A
// non-full embedding keeps only its own relations, which is the whole point.
PersistenceModule restrict(const PersistenceModule& m, const SubposetEmbedding& f);
PersistenceModule restrict(const PersistenceModule& m, const MonotoneMap& f);
PersistenceModule restrict(const PersistenceModule& m, const FunctorData& f);

// Free module on an object: dimension |Hom(c, c')| at c', morphisms act by
// post-composition. For posets this is the indicator module of the upset.
PersistenceModule linearized_hom_module(const FinCategoryPtr& c, int object, FieldSpec field);
PersistenceModule free_module_on(const ModuleIndex& index, int object, FieldSpec field);

} // namespace grinv
