#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grinv/errors.hpp"

namespace grinv {

// Finite poset. Elements are opaque string ids; the input order is the
// iteration and tie-breaking order for everything downstream. Immutable
// after construction.
class Poset {
public:
    // Builds the reflexive-transitive closure of the given cover pairs.
    // Rejects cycles. Pairs already implied by the others are redundant;
    // they are accepted and reported through `warnings`.
    static Poset from_covers(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& covers,
                             std::vector<std::string>* warnings = nullptr);

    // Builds from an explicit relation given as index pairs (i <= j). The
    // reflexive-transitive closure is taken; cycles are rejected.
    static Poset from_relation_pairs(std::vector<std::string> elements,
                                     const std::vector<std::pair<int, int>>& pairs);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& id(int i) const { return elements_.at(i); }
    int index_of(const std::string& id) const; // throws input_error when unknown
    std::optional<int> find(const std::string& id) const;

    bool leq(int a, int b) const { return leq_[a][b]; }
    bool less(int a, int b) const { return a != b && leq_[a][b]; }
    bool comparable(int a, int b) const { return leq_[a][b] || leq_[b][a]; }

    // Hasse edges (transitive reduction of leq), sorted by (src, tgt).
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    std::vector<int> all_elements() const;
    std::vector<int> upset(const std::vector<int>& s) const;
    std::vector<int> downset(const std::vector<int>& s) const;
    std::vector<int> maxima(const std::vector<int>& s) const;
    std::vector<int> minima(const std::vector<int>& s) const;

    // Connectivity of the comparability graph of the induced order on s.
    // The empty set is not connected.
    bool is_connected(const std::vector<int>& s) const;
    std::vector<std::vector<int>> connected_components(const std::vector<int>& s) const;

    bool is_convex(const std::vector<int>& s) const;
    bool is_interval(const std::vector<int>& s) const;

    // A linear extension preferring small input indices (deterministic).
    std::vector<int> linear_extension() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.elements_ == b.elements_ && a.leq_ == b.leq_;
    }

private:
    Poset() = default;
    void finish_construction(); // covers + validation from leq_

    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::pair<int, int>> covers_;
};

using PosetPtr = std::shared_ptr<const Poset>;

PosetPtr make_poset(std::vector<std::string> elements,
                    const std::vector<std::pair<std::string, std::string>>& covers,
                    std::vector<std::string>* warnings = nullptr);

// A monotone map between posets, not necessarily injective or full.
class MonotoneMap {
public:
    MonotoneMap(PosetPtr source, PosetPtr target, std::vector<int> object_map);

    const PosetPtr& source() const { return source_; }
    const PosetPtr& target() const { return target_; }
    int apply(int src_index) const { return object_map_.at(src_index); }
    const std::vector<int>& object_map() const { return object_map_; }

    // Source indices q with F(q) >= p (dually <=). The comma fiber carries
    // the source's order, which is what finality is about.
    std::vector<int> fiber_up(int p) const;
    std::vector<int> fiber_down(int p) const;
    Poset comma_fiber_up(int p) const;
    Poset comma_fiber_down(int p) const;

    // Least target element whose up-fiber is empty or disconnected in the
    // source order; nullopt when the map is final (dually initial).
    std::optional<int> finality_witness() const;
    std::optional<int> initiality_witness() const;
    bool is_final() const { return !finality_witness().has_value(); }
    bool is_initial() const { return !initiality_witness().has_value(); }

private:
    PosetPtr source_, target_;
    std::vector<int> object_map_;
};

// An injective-on-objects subposet embedding whose relation may be coarser
// than the ambient-induced one. Non-full embeddings are first-class: the
// restriction subposet that preserves generalized rank is generally not full.
class SubposetEmbedding {
public:
    // Full embedding: carrier with the ambient-induced order.
    static SubposetEmbedding full(PosetPtr ambient, const std::vector<int>& carrier);
    static SubposetEmbedding full_by_ids(PosetPtr ambient,
                                         const std::vector<std::string>& carrier);

    // Non-full embedding: the relation is the reflexive-transitive closure
    // of the given pairs (ambient indices), which must hold in the ambient.
    static SubposetEmbedding with_relations(PosetPtr ambient, const std::vector<int>& carrier,
                                            const std::vector<std::pair<int, int>>& relations);

    const PosetPtr& ambient() const { return ambient_; }
    const std::vector<int>& carrier() const { return carrier_; }
    bool is_full() const { return full_; }

    // The carrier as a poset in its own right (same element ids).
    const PosetPtr& sub_poset() const { return sub_poset_; }

    // Position of an ambient index within the carrier, if present.
    std::optional<int> carrier_position(int ambient_index) const;

    MonotoneMap as_monotone_map() const;

    std::vector<int> fiber_up(int p) const;   // carrier positions
    std::vector<int> fiber_down(int p) const; // carrier positions
    Poset comma_fiber_up(int p) const;
    Poset comma_fiber_down(int p) const;

    std::optional<int> finality_witness() const;   // ambient index
    std::optional<int> initiality_witness() const; // ambient index
    bool is_final() const { return !finality_witness().has_value(); }
    bool is_initial() const { return !initiality_witness().has_value(); }

    // Relation pairs (carrier positions, strict) of the sub-order.
    std::vector<std::pair<int, int>> relation_pairs() const;

private:
    SubposetEmbedding() = default;

    PosetPtr ambient_;
    std::vector<int> carrier_; // ambient indices, strictly increasing
    PosetPtr sub_poset_;       // carrier with sub-order
    bool full_ = false;
};

bool is_final_embedding(const SubposetEmbedding& f);
bool is_initial_embedding(const SubposetEmbedding& f);

// inner embeds into outer.sub_poset(); the composite embeds into outer's ambient.
SubposetEmbedding compose(const SubposetEmbedding& outer, const SubposetEmbedding& inner);

} // namespace grinv
