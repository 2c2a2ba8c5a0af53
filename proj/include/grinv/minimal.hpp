#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grinv/persistence_module.hpp"
#include "grinv/rank.hpp"

namespace grinv {

// The increasing chain of full subposets that stabilizes to the minimal
// final (dually initial) subposet: stage 0 is the maxima, each later stage
// adds the maximal points whose up-fiber into the previous stage is
// disconnected.
struct SChain {
    std::vector<std::vector<int>> stages; // ambient indices, sorted
    std::size_t stabilization_index = 0;  // least l with S_l = S_{l+1}
};

SChain s_chain(const Poset& p);         // final side: maxima and upsets
SChain s_chain_initial(const Poset& p); // initial side: minima and downsets

// Full embedding of the stable stage; final (dually initial), and contained
// in every final (dually initial) full subposet.
SubposetEmbedding minimal_final_subposet(const PosetPtr& p);
SubposetEmbedding minimal_initial_subposet(const PosetPtr& p);

// How to pick the relation that connects the minimal initial part to the
// minimal final part.
struct ConnectorPolicy {
    enum class Kind { least, pair } kind = Kind::least;
    std::pair<std::string, std::string> pair; // used when kind == pair

    static ConnectorPolicy least() { return ConnectorPolicy{}; }
    static ConnectorPolicy explicit_pair(std::string from, std::string to);
};

struct MrkResult {
    SubposetEmbedding embedding;
    std::vector<std::pair<int, int>> added_relations; // ambient index pairs
    std::optional<std::pair<int, int>> added_relation; // first connector, if any
    std::size_t components_joined = 1; // components of the bare union
    bool is_final = false;
    bool is_initial = false;
    std::vector<std::string> notes;
};

// Builds the connected restriction subposet: the union of the two minimal
// subposets, each carrying its own induced order, glued by added ambient
// relations. The default policy searches connectors until the embedding is
// final, initial and connected; an explicit pair is honored as given and the
// achieved status reported.
MrkResult construct_mrk(const PosetPtr& p, const ConnectorPolicy& policy = ConnectorPolicy::least());

// A module whose colimit changes under restriction along a non-final map:
// the free module at a witness object. Errors when the map is final.
std::pair<int, PersistenceModule> colimit_witness(const SubposetEmbedding& f, FieldSpec field);
std::pair<int, PersistenceModule> colimit_witness(const MonotoneMap& f, FieldSpec field);
std::pair<int, PersistenceModule> colimit_witness(const FunctorData& f, FieldSpec field);

struct WlogTriple {
    int x;
    int z;
    int z_prime;
};

// For a full non-final embedding with all fibers nonempty: a maximal element
// x with disconnected fiber together with two maxima of the ambient poset in
// distinct fiber components; found by ascending from below.
WlogTriple find_wlog_triple(const SubposetEmbedding& f);

// A module with entire-interval multiplicity zero whose restriction along
// the given full non-final embedding has multiplicity one.
PersistenceModule mult_witness(const SubposetEmbedding& f, FieldSpec field);

// The family showing the stabilization bound of the chain is attained:
// 2k-1 elements with maxima p_1..p_k and a descending tail s_1..s_{k-1}.
Poset worst_case_poset(std::size_t k);

} // namespace grinv
