#pragma once

#include <vector>

#include "grinv/persistence_module.hpp"

namespace grinv {

// The limit realized inside the product of the pointwise spaces: dim, a
// basis of the solution space, and the universal cone into each object.
struct LimitData {
    std::size_t dim = 0;
    Matrix basis;             // (sum of dims) x dim, columns span the limit
    std::vector<Matrix> cone; // per object: dims[c] x dim
};

struct ColimitData {
    std::size_t dim = 0;
    std::vector<Matrix> cocone; // per object: dim x dims[c]
};

// The canonical limit-to-colimit map.
struct PsiData {
    Matrix matrix;
    std::size_t rank = 0;
};

LimitData limit(const PersistenceModule& m);
ColimitData colimit(const PersistenceModule& m);

// Requires a connected index (the map is object-independent only then);
// computes the composite at every object and checks they agree.
PsiData psi(const PersistenceModule& m);

std::size_t generalized_rank(const PersistenceModule& m);

// Multiplicity of the entire interval module, which equals the generalized
// rank: the module splits off exactly that many constant summands.
std::size_t mult_entire(const PersistenceModule& m);

// Independent route: solve for a basis of maps from the constant module into
// m (sections) and from m onto the constant module (cosections), then take
// the rank of their composition pairing.
std::size_t hom_pairing_multiplicity(const PersistenceModule& m);

struct SplitResult {
    std::size_t rank = 0;
    PersistenceModule complement; // same index, dims reduced by rank, psi = 0
};

// Splits off the constant summands: picks a complement of ker(psi) in the
// limit, pushes it into each object space, completes to bases and conjugates.
SplitResult split_entire_interval(const PersistenceModule& m);

// The canonical map colim(MF) -> colim(M) induced by the restricted cocone;
// an isomorphism exactly when the restriction does not lose colimit data.
Matrix colimit_comparison(const PersistenceModule& m, const SubposetEmbedding& f);
Matrix colimit_comparison(const PersistenceModule& m, const MonotoneMap& f);
Matrix colimit_comparison(const PersistenceModule& m, const FunctorData& f);

// Dual: the canonical map lim(M) -> lim(MF).
Matrix limit_comparison(const PersistenceModule& m, const SubposetEmbedding& f);
Matrix limit_comparison(const PersistenceModule& m, const MonotoneMap& f);
Matrix limit_comparison(const PersistenceModule& m, const FunctorData& f);

} // namespace grinv
