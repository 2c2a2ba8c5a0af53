#include "grinv/persistence_module.hpp"

#include <algorithm>
#include <functional>

namespace grinv {

const PosetPtr& ModuleIndex::poset() const {
    if (!is_poset()) throw input_error("index is a category, not a poset");
    return std::get<PosetPtr>(v_);
}

const FinCategoryPtr& ModuleIndex::category() const {
    if (is_poset()) throw input_error("index is a poset, not a category");
    return std::get<FinCategoryPtr>(v_);
}

std::size_t ModuleIndex::object_count() const {
    return is_poset() ? poset()->size() : category()->object_count();
}

const std::string& ModuleIndex::object_id(int i) const {
    return is_poset() ? poset()->id(i) : category()->object_id(i);
}

int ModuleIndex::object_index(const std::string& id) const {
    return is_poset() ? poset()->index_of(id) : category()->object_index(id);
}

std::vector<Generator> ModuleIndex::generators() const {
    std::vector<Generator> out;
    if (is_poset()) {
        for (const auto& [a, b] : poset()->covers())
            out.push_back({a, b, -1, poset()->id(a) + "<" + poset()->id(b)});
    } else {
        const FinCategory& c = *category();
        for (int m = 0; m < static_cast<int>(c.morphism_count()); ++m)
            if (!c.is_identity(m))
                out.push_back({c.morphism(m).src, c.morphism(m).tgt, m, c.morphism(m).id});
    }
    return out;
}

bool ModuleIndex::is_connected() const {
    if (is_poset()) return poset()->is_connected(poset()->all_elements());
    return category()->is_connected();
}

bool ModuleIndex::is_interval_objects(const std::vector<int>& s) const {
    if (is_poset()) return poset()->is_interval(s);
    return category()->is_interval_objects(s);
}

bool ModuleIndex::is_convex_objects(const std::vector<int>& s) const {
    if (is_poset()) return poset()->is_convex(s);
    return category()->is_convex_objects(s);
}

bool ModuleIndex::same_shape_as(const ModuleIndex& other) const {
    if (is_poset() != other.is_poset()) return false;
    if (is_poset()) return poset() == other.poset() || *poset() == *other.poset();
    if (category() == other.category()) return true;
    const FinCategory& a = *category();
    const FinCategory& b = *other.category();
    if (a.objects() != b.objects() || a.morphism_count() != b.morphism_count()) return false;
    for (std::size_t m = 0; m < a.morphism_count(); ++m) {
        const auto& ma = a.morphism(static_cast<int>(m));
        const auto& mb = b.morphism(static_cast<int>(m));
        if (ma.id != mb.id || ma.src != mb.src || ma.tgt != mb.tgt) return false;
    }
    return true;
}

PersistenceModule::PersistenceModule(ModuleIndex index, FieldSpec field,
                                     std::vector<std::size_t> dims,
                                     std::vector<Matrix> generator_maps)
    : index_(std::move(index)), field_(field), dims_(std::move(dims)),
      generators_(index_.generators()), maps_(std::move(generator_maps)) {
    if (dims_.size() != index_.object_count())
        throw input_error("one dimension per object required");
    if (maps_.size() != generators_.size())
        throw input_error("one matrix per generating morphism required, expected " +
                          std::to_string(generators_.size()) + " got " +
                          std::to_string(maps_.size()));
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        const auto& gen = generators_[g];
        const Matrix& m = maps_[g];
        if (m.field() != field_)
            throw input_error("map for " + gen.label + " is over the wrong field");
        if (m.rows() != dims_[gen.tgt] || m.cols() != dims_[gen.src])
            throw input_error("map for " + gen.label + " must be " +
                              std::to_string(dims_[gen.tgt]) + "x" +
                              std::to_string(dims_[gen.src]) + ", got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

PersistenceModule PersistenceModule::over_poset(
    PosetPtr p, FieldSpec field, std::vector<std::size_t> dims,
    const std::map<std::pair<int, int>, Matrix>& cover_maps) {
    ModuleIndex index(p);
    std::vector<Matrix> maps;
    for (const auto& gen : index.generators()) {
        auto it = cover_maps.find({gen.src, gen.tgt});
        if (it == cover_maps.end())
            throw input_error("missing map for cover " + gen.label);
        maps.push_back(it->second);
    }
    if (cover_maps.size() != maps.size())
        throw input_error("maps given for non-cover relations");
    return PersistenceModule(std::move(index), field, std::move(dims), std::move(maps));
}

std::size_t PersistenceModule::total_dim() const {
    std::size_t t = 0;
    for (std::size_t d : dims_) t += d;
    return t;
}

namespace {

// Composites of a poset-index module along least cover paths, with a check
// that every first step agrees. Returns the first disagreement, if any.
struct CompositeEngine {
    const PersistenceModule& m;
    const Poset& p;
    std::map<std::pair<int, int>, Matrix> memo;
    std::map<std::pair<int, int>, const Matrix*> cover_map;
    bool check_all_paths;
    std::string violation;

    CompositeEngine(const PersistenceModule& mod, bool check)
        : m(mod), p(*mod.index().poset()), check_all_paths(check) {
        for (std::size_t g = 0; g < m.generators().size(); ++g)
            cover_map[{m.generators()[g].src, m.generators()[g].tgt}] = &m.generator_map(g);
    }

    const Matrix& get(int a, int b) {
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        if (a == b)
            return memo.emplace(std::pair{a, b}, Matrix::identity(m.field(), m.dim_at(a)))
                .first->second;
        std::vector<Matrix> candidates;
        std::vector<int> first_steps;
        for (const auto& [src, mid] : p.covers()) {
            if (src != a || !p.leq(mid, b)) continue;
            const Matrix step = *cover_map.at({src, mid});
            candidates.push_back(mid == b ? step : multiply(get(mid, b), step));
            first_steps.push_back(mid);
            if (!check_all_paths) break;
        }
        if (candidates.empty()) throw internal_error("no cover path found");
        for (std::size_t i = 1; i < candidates.size(); ++i)
            if (violation.empty() && !(candidates[i] == candidates[0]))
                violation = "paths from " + p.id(a) + " to " + p.id(b) +
                            " disagree: first steps via " + p.id(first_steps[0]) + " and " +
                            p.id(first_steps[i]);
        return memo.emplace(std::pair{a, b}, candidates[0]).first->second;
    }
};

} // namespace

ValidationResult PersistenceModule::validate() const {
    if (index_.is_poset()) {
        CompositeEngine eng(*this, /*check_all_paths=*/true);
        const Poset& p = *index_.poset();
        for (int a = 0; a < static_cast<int>(p.size()); ++a)
            for (int b = 0; b < static_cast<int>(p.size()); ++b) {
                if (a == b || !p.leq(a, b)) continue;
                eng.get(a, b);
                if (!eng.violation.empty()) return {false, eng.violation};
            }
        return {true, ""};
    }
    const FinCategory& c = *index_.category();
    const int nmor = static_cast<int>(c.morphism_count());
    for (int g = 0; g < nmor; ++g)
        for (int f = 0; f < nmor; ++f) {
            if (c.morphism(f).tgt != c.morphism(g).src) continue;
            const int gf = c.compose(g, f);
            const Matrix lhs = morphism_matrix(gf);
            const Matrix rhs = multiply(morphism_matrix(g), morphism_matrix(f));
            if (!(lhs == rhs))
                return {false, "composite of (" + c.morphism(g).id + ", " + c.morphism(f).id +
                                   ") does not match the table entry " + c.morphism(gf).id};
        }
    return {true, ""};
}

Matrix PersistenceModule::composite(int a, int b) const {
    const Poset& p = *index_.poset();
    if (!p.leq(a, b))
        throw input_error("no relation " + p.id(a) + " <= " + p.id(b));
    CompositeEngine eng(*this, /*check_all_paths=*/false);
    return eng.get(a, b);
}

Matrix PersistenceModule::morphism_matrix(int m) const {
    const FinCategory& c = *index_.category();
    if (c.is_identity(m)) return Matrix::identity(field_, dims_[c.morphism(m).src]);
    for (std::size_t g = 0; g < generators_.size(); ++g)
        if (generators_[g].morphism == m) return maps_[g];
    throw internal_error("morphism has no stored matrix");
}

PersistenceModule PersistenceModule::replace_maps(std::vector<Matrix> new_maps) const {
    return PersistenceModule(index_, field_, dims_, std::move(new_maps));
}

PersistenceModule indicator_module(ModuleIndex index, const std::vector<int>& carrier,
                                   FieldSpec field) {
    if (!index.is_convex_objects(carrier))
        throw precondition_error("carrier is not convex");
    std::vector<bool> in(index.object_count(), false);
    for (int x : carrier) in[x] = true;
    std::vector<std::size_t> dims(index.object_count(), 0);
    for (int x : carrier) dims[x] = 1;
    std::vector<Matrix> maps;
    for (const auto& gen : index.generators()) {
        Matrix m(field, dims[gen.tgt], dims[gen.src]);
        if (in[gen.src] && in[gen.tgt]) m.set(0, 0, Rational(1));
        maps.push_back(std::move(m));
    }
    return PersistenceModule(std::move(index), field, std::move(dims), std::move(maps));
}

PersistenceModule interval_module(ModuleIndex index, const std::vector<int>& carrier,
                                  FieldSpec field) {
    if (!index.is_convex_objects(carrier))
        throw precondition_error("interval carrier is not convex");
    const bool connected = index.is_poset() ? index.poset()->is_connected(carrier)
                                            : index.category()->is_connected_objects(carrier);
    if (!connected) throw precondition_error("interval carrier is not connected");
    return indicator_module(std::move(index), carrier, field);
}

PersistenceModule entire_interval_module(ModuleIndex index, FieldSpec field) {
    std::vector<int> all(index.object_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return indicator_module(std::move(index), all, field);
}

PersistenceModule zero_module(ModuleIndex index, FieldSpec field) {
    std::vector<std::size_t> dims(index.object_count(), 0);
    std::vector<Matrix> maps;
    for (std::size_t g = 0; g < index.generators().size(); ++g)
        maps.push_back(Matrix(field, 0, 0));
    return PersistenceModule(std::move(index), field, std::move(dims), std::move(maps));
}

PersistenceModule direct_sum(const PersistenceModule& a, const PersistenceModule& b) {
    if (!a.index().same_shape_as(b.index()))
        throw input_error("direct sum requires the same index");
    if (a.field() != b.field()) throw input_error("direct sum requires the same field");
    std::vector<std::size_t> dims(a.dims().size());
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims()[i] + b.dims()[i];
    std::vector<Matrix> maps;
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
        const Generator& gen = a.generators()[g];
        Matrix m(a.field(), dims[gen.tgt], dims[gen.src]);
        const Matrix& ma = a.generator_map(g);
        const Matrix& mb = b.generator_map(g);
        for (std::size_t i = 0; i < ma.rows(); ++i)
            for (std::size_t j = 0; j < ma.cols(); ++j) m.set(i, j, ma.at(i, j));
        for (std::size_t i = 0; i < mb.rows(); ++i)
            for (std::size_t j = 0; j < mb.cols(); ++j)
                m.set(ma.rows() + i, ma.cols() + j, mb.at(i, j));
        maps.push_back(std::move(m));
    }
    return PersistenceModule(a.index(), a.field(), std::move(dims), std::move(maps));
}

PersistenceModule restrict(const PersistenceModule& m, const SubposetEmbedding& f) {
    if (!m.index().is_poset()) throw input_error("embedding restriction needs a poset module");
    if (!(m.index().poset() == f.ambient() || *m.index().poset() == *f.ambient()))
        throw input_error("embedding is not into the module's index");
    const std::vector<int>& carrier = f.carrier();
    std::vector<std::size_t> dims(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) dims[i] = m.dim_at(carrier[i]);
    ModuleIndex index(f.sub_poset());
    std::vector<Matrix> maps;
    for (const auto& gen : index.generators())
        maps.push_back(m.composite(carrier[gen.src], carrier[gen.tgt]));
    return PersistenceModule(std::move(index), m.field(), std::move(dims), std::move(maps));
}

PersistenceModule restrict(const PersistenceModule& m, const MonotoneMap& f) {
    if (!m.index().is_poset()) throw input_error("monotone restriction needs a poset module");
    if (!(m.index().poset() == f.target() || *m.index().poset() == *f.target()))
        throw input_error("map is not into the module's index");
    std::vector<std::size_t> dims(f.source()->size());
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = m.dim_at(f.apply(static_cast<int>(i)));
    ModuleIndex index(f.source());
    std::vector<Matrix> maps;
    for (const auto& gen : index.generators())
        maps.push_back(m.composite(f.apply(gen.src), f.apply(gen.tgt)));
    return PersistenceModule(std::move(index), m.field(), std::move(dims), std::move(maps));
}

PersistenceModule restrict(const PersistenceModule& m, const FunctorData& f) {
    if (m.index().is_poset()) throw input_error("functor restriction needs a category module");
    if (!ModuleIndex(f.target()).same_shape_as(m.index()))
        throw input_error("functor is not into the module's index");
    std::vector<std::size_t> dims(f.source()->object_count());
    for (std::size_t i = 0; i < dims.size(); ++i)
        dims[i] = m.dim_at(f.apply_object(static_cast<int>(i)));
    ModuleIndex index(f.source());
    std::vector<Matrix> maps;
    for (const auto& gen : index.generators())
        maps.push_back(m.morphism_matrix(f.apply_morphism(gen.morphism)));
    return PersistenceModule(std::move(index), m.field(), std::move(dims), std::move(maps));
}

PersistenceModule linearized_hom_module(const FinCategoryPtr& c, int object, FieldSpec field) {
    const FinCategory& cat = *c;
    if (object < 0 || object >= static_cast<int>(cat.object_count()))
        throw input_error("object index out of range");
    std::vector<std::vector<int>> basis(cat.object_count());
    std::vector<std::size_t> dims(cat.object_count());
    for (int o = 0; o < static_cast<int>(cat.object_count()); ++o) {
        basis[o] = cat.hom(object, o);
        dims[o] = basis[o].size();
    }
    auto basis_pos = [&](int o, int morphism) {
        const auto& b = basis[o];
        const auto it = std::find(b.begin(), b.end(), morphism);
        if (it == b.end()) throw internal_error("hom basis lookup failed");
        return static_cast<std::size_t>(it - b.begin());
    };
    ModuleIndex index(c);
    std::vector<Matrix> maps;
    for (const auto& gen : index.generators()) {
        Matrix m(field, dims[gen.tgt], dims[gen.src]);
        for (std::size_t col = 0; col < basis[gen.src].size(); ++col) {
            const int image = cat.compose(gen.morphism, basis[gen.src][col]);
            m.set(basis_pos(gen.tgt, image), col, Rational(1));
        }
        maps.push_back(std::move(m));
    }
    return PersistenceModule(std::move(index), field, std::move(dims), std::move(maps));
}

PersistenceModule free_module_on(const ModuleIndex& index, int object, FieldSpec field) {
    if (index.is_poset()) {
        const Poset& p = *index.poset();
        if (object < 0 || object >= static_cast<int>(p.size()))
            throw input_error("object index out of range");
        return indicator_module(index, p.upset({object}), field);
    }
    return linearized_hom_module(index.category(), object, field);
}

} // namespace grinv
