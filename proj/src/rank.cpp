#include "grinv/rank.hpp"

#include <numeric>

namespace grinv {

namespace {

std::vector<std::size_t> block_offsets(const PersistenceModule& m) {
    std::vector<std::size_t> off(m.dims().size() + 1, 0);
    for (std::size_t i = 0; i < m.dims().size(); ++i) off[i + 1] = off[i] + m.dims()[i];
    return off;
}

void require_connected(const PersistenceModule& m) {
    if (!m.index().is_connected())
        throw precondition_error(
            "the limit-to-colimit map needs a connected index; this index is disconnected");
}

// Difference map whose kernel is the limit: one block row per generator,
// sending (x_c) to M(g) x_src - x_tgt.
Matrix limit_system(const PersistenceModule& m) {
    const auto off = block_offsets(m);
    const auto& gens = m.generators();
    std::size_t rows = 0;
    for (const auto& g : gens) rows += m.dim_at(g.tgt);
    Matrix d(m.field(), rows, m.total_dim());
    std::size_t r0 = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& g = gens[gi];
        const Matrix& mat = m.generator_map(gi);
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j)
                d.set(r0 + i, off[g.src] + j, mat.at(i, j));
        for (std::size_t i = 0; i < m.dim_at(g.tgt); ++i) {
            const Rational current = d.at(r0 + i, off[g.tgt] + i);
            d.set(r0 + i, off[g.tgt] + i, current - 1);
        }
        r0 += m.dim_at(g.tgt);
    }
    return d;
}

// Difference map whose cokernel is the colimit: one block column per
// generator, sending x in M(src) to i_tgt(M(g) x) - i_src(x).
Matrix colimit_system(const PersistenceModule& m) {
    const auto off = block_offsets(m);
    const auto& gens = m.generators();
    std::size_t cols = 0;
    for (const auto& g : gens) cols += m.dim_at(g.src);
    Matrix e(m.field(), m.total_dim(), cols);
    std::size_t c0 = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& g = gens[gi];
        const Matrix& mat = m.generator_map(gi);
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j)
                e.set(off[g.tgt] + i, c0 + j, mat.at(i, j));
        for (std::size_t j = 0; j < m.dim_at(g.src); ++j) {
            const Rational current = e.at(off[g.src] + j, c0 + j);
            e.set(off[g.src] + j, c0 + j, current - 1);
        }
        c0 += m.dim_at(g.src);
    }
    return e;
}

// Stacked cone of M over the source of the restriction: row blocks are the
// lambda at the image of each source object.
Matrix stacked_restricted_cone(const PersistenceModule& m, const LimitData& lim,
                               const std::vector<int>& object_map,
                               const std::vector<std::size_t>& src_dims) {
    std::size_t rows = 0;
    for (std::size_t d : src_dims) rows += d;
    Matrix s(m.field(), rows, lim.dim);
    std::size_t r0 = 0;
    for (std::size_t j = 0; j < object_map.size(); ++j) {
        const Matrix& lam = lim.cone[object_map[j]];
        for (std::size_t i = 0; i < lam.rows(); ++i)
            for (std::size_t k = 0; k < lam.cols(); ++k) s.set(r0 + i, k, lam.at(i, k));
        r0 += src_dims[j];
    }
    return s;
}

Matrix stacked_restricted_cocone(const PersistenceModule& m, const ColimitData& colim,
                                 const std::vector<int>& object_map,
                                 const std::vector<std::size_t>& src_dims) {
    std::size_t cols = 0;
    for (std::size_t d : src_dims) cols += d;
    Matrix s(m.field(), colim.dim, cols);
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < object_map.size(); ++j) {
        const Matrix& gam = colim.cocone[object_map[j]];
        for (std::size_t i = 0; i < gam.rows(); ++i)
            for (std::size_t k = 0; k < gam.cols(); ++k) s.set(i, c0 + k, gam.at(i, k));
        c0 += src_dims[j];
    }
    return s;
}

Matrix full_cocone(const PersistenceModule& m, const ColimitData& colim) {
    std::vector<int> all(m.dims().size());
    std::iota(all.begin(), all.end(), 0);
    return stacked_restricted_cocone(m, colim, all, m.dims());
}

Matrix comparison_of_colimits(const PersistenceModule& m, const PersistenceModule& restricted,
                              const std::vector<int>& object_map) {
    const ColimitData cm = colimit(m);
    const ColimitData cr = colimit(restricted);
    // h with h gamma_MF = gamma_M F: solve against the full restricted cocone
    const Matrix pi_r = full_cocone(restricted, cr);
    const Matrix target = stacked_restricted_cocone(m, cm, object_map, restricted.dims());
    auto h = solve(pi_r.transpose(), target.transpose());
    if (!h) throw internal_error("colimit comparison system is inconsistent");
    return h->transpose();
}

Matrix comparison_of_limits(const PersistenceModule& m, const PersistenceModule& restricted,
                            const std::vector<int>& object_map) {
    const LimitData lm = limit(m);
    const LimitData lr = limit(restricted);
    const Matrix target = stacked_restricted_cone(m, lm, object_map, restricted.dims());
    auto k = solve(lr.basis, target);
    if (!k) throw internal_error("limit comparison system is inconsistent");
    return *k;
}

std::vector<int> embedding_object_map(const SubposetEmbedding& f) { return f.carrier(); }

} // namespace

LimitData limit(const PersistenceModule& m) {
    const auto off = block_offsets(m);
    LimitData out;
    out.basis = kernel_basis(limit_system(m));
    out.dim = out.basis.cols();
    out.cone.reserve(m.dims().size());
    for (std::size_t c = 0; c < m.dims().size(); ++c)
        out.cone.push_back(out.basis.block(off[c], 0, m.dims()[c], out.dim));
    return out;
}

ColimitData colimit(const PersistenceModule& m) {
    const auto off = block_offsets(m);
    ColimitData out;
    const Matrix proj = cokernel_projection(colimit_system(m));
    out.dim = proj.rows();
    out.cocone.reserve(m.dims().size());
    for (std::size_t c = 0; c < m.dims().size(); ++c)
        out.cocone.push_back(proj.block(0, off[c], out.dim, m.dims()[c]));
    return out;
}

PsiData psi(const PersistenceModule& m) {
    require_connected(m);
    const LimitData lim = limit(m);
    const ColimitData colim = colimit(m);
    PsiData out;
    bool first = true;
    for (std::size_t c = 0; c < m.dims().size(); ++c) {
        const Matrix candidate = multiply(colim.cocone[c], lim.cone[c]);
        if (first) {
            out.matrix = candidate;
            first = false;
        } else if (!(candidate == out.matrix)) {
            throw internal_error("limit-to-colimit composite differs between objects " +
                                 m.index().object_id(0) + " and " + m.index().object_id(c));
        }
    }
    if (first) throw internal_error("empty index has no limit-to-colimit map");
    out.rank = rank(out.matrix);
    return out;
}

std::size_t generalized_rank(const PersistenceModule& m) { return psi(m).rank; }

std::size_t mult_entire(const PersistenceModule& m) { return generalized_rank(m); }

std::size_t hom_pairing_multiplicity(const PersistenceModule& m) {
    require_connected(m);
    // sections: tuples (v_c) with M(g) v_src = v_tgt, i.e. maps from the
    // constant module into m
    const Matrix sections = kernel_basis(limit_system(m));
    // cosections: tuples of covectors (w_c) with w_tgt M(g) = w_src; build
    // the system on transposes with the roles of source and target swapped
    const auto off = block_offsets(m);
    const auto& gens = m.generators();
    std::size_t rows = 0;
    for (const auto& g : gens) rows += m.dim_at(g.src);
    Matrix dual(m.field(), rows, m.total_dim());
    std::size_t r0 = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& g = gens[gi];
        const Matrix mt = m.generator_map(gi).transpose();
        for (std::size_t i = 0; i < mt.rows(); ++i)
            for (std::size_t j = 0; j < mt.cols(); ++j)
                dual.set(r0 + i, off[g.tgt] + j, mt.at(i, j));
        for (std::size_t i = 0; i < m.dim_at(g.src); ++i) {
            const Rational current = dual.at(r0 + i, off[g.src] + i);
            dual.set(r0 + i, off[g.src] + i, current - 1);
        }
        r0 += m.dim_at(g.src);
    }
    const Matrix cosections = kernel_basis(dual);

    // pairing(i, j) = value of cosection_j after section_i at an object;
    // connectedness makes the value object-independent, which we verify
    const std::size_t ns = sections.cols(), nc = cosections.cols();
    Matrix pairing(m.field(), ns, nc);
    bool have_value = false;
    std::vector<std::vector<Rational>> reference(ns, std::vector<Rational>(nc));
    for (std::size_t c = 0; c < m.dims().size(); ++c) {
        if (m.dims()[c] == 0) continue;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < nc; ++j) {
                Rational v = 0;
                for (std::size_t t = 0; t < m.dims()[c]; ++t)
                    v = field_add(m.field(), v,
                                  field_mul(m.field(), sections.at(off[c] + t, i),
                                            cosections.at(off[c] + t, j)));
                if (!have_value) {
                    reference[i][j] = v;
                } else if (reference[i][j] != v) {
                    throw internal_error("pairing value depends on the object");
                }
            }
        have_value = true;
    }
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < nc; ++j) pairing.set(i, j, reference[i][j]);
    return rank(pairing);
}

SplitResult split_entire_interval(const PersistenceModule& m) {
    const PsiData p = psi(m);
    const LimitData lim = limit(m);
    const ColimitData colim = colimit(m);
    const std::size_t r = p.rank;

    // complement of ker(psi) in the limit: pivot columns of its RREF
    const std::vector<std::size_t> pivot_cols = rref(p.matrix).second;
    // basis of im(psi) inside the colimit, completed to a full basis
    const Matrix w = p.matrix.select_columns(pivot_cols);
    const Matrix t = complete_basis(w);
    const Matrix t_inv = inverse(t);
    const Matrix proj_im = t_inv.block(0, 0, r, t.cols());

    std::vector<Matrix> basis_change, basis_change_inv;
    std::vector<std::size_t> new_dims(m.dims().size());
    for (std::size_t c = 0; c < m.dims().size(); ++c) {
        const Matrix lam_tilde = lim.cone[c].select_columns(pivot_cols); // dims_c x r
        const Matrix gam_tilde = multiply(proj_im, colim.cocone[c]);     // r x dims_c
        const Matrix ker = kernel_basis(gam_tilde);                      // dims_c x (dims_c - r)
        if (ker.cols() + r != m.dims()[c])
            throw internal_error("split: complement dimension mismatch at object " +
                                 m.index().object_id(c));
        const Matrix b = hstack(lam_tilde, ker);
        if (!is_invertible(b))
            throw internal_error("split: images and complement do not span object " +
                                 m.index().object_id(c));
        basis_change.push_back(b);
        basis_change_inv.push_back(inverse(b));
        new_dims[c] = m.dims()[c] - r;
    }

    std::vector<Matrix> new_maps;
    for (std::size_t gi = 0; gi < m.generators().size(); ++gi) {
        const auto& g = m.generators()[gi];
        const Matrix conj =
            multiply(basis_change_inv[g.tgt], multiply(m.generator_map(gi), basis_change[g.src]));
        // expect [[I_r, 0], [0, N(g)]]
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < conj.cols(); ++j) {
                const Rational expected(i == j ? 1 : 0);
                if (j < r && conj.at(i, j) != expected)
                    throw internal_error("split: constant block is not the identity");
                if (j >= r && conj.at(i, j) != 0)
                    throw internal_error("split: upper right block is nonzero");
            }
        for (std::size_t i = r; i < conj.rows(); ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (conj.at(i, j) != 0)
                    throw internal_error("split: lower left block is nonzero");
        new_maps.push_back(conj.block(r, r, conj.rows() - r, conj.cols() - r));
    }
    return SplitResult{r, PersistenceModule(m.index(), m.field(), std::move(new_dims),
                                            std::move(new_maps))};
}

Matrix colimit_comparison(const PersistenceModule& m, const SubposetEmbedding& f) {
    return comparison_of_colimits(m, restrict(m, f), embedding_object_map(f));
}

Matrix colimit_comparison(const PersistenceModule& m, const MonotoneMap& f) {
    return comparison_of_colimits(m, restrict(m, f), f.object_map());
}

Matrix colimit_comparison(const PersistenceModule& m, const FunctorData& f) {
    return comparison_of_colimits(m, restrict(m, f), f.object_map());
}

Matrix limit_comparison(const PersistenceModule& m, const SubposetEmbedding& f) {
    return comparison_of_limits(m, restrict(m, f), embedding_object_map(f));
}

Matrix limit_comparison(const PersistenceModule& m, const MonotoneMap& f) {
    return comparison_of_limits(m, restrict(m, f), f.object_map());
}

Matrix limit_comparison(const PersistenceModule& m, const FunctorData& f) {
    return comparison_of_limits(m, restrict(m, f), f.object_map());
}

} // namespace grinv
