#include "grinv/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace grinv {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where,
                       const std::string& what) {
    throw input_error(source + ": " + where + ": " + what);
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

std::string check_id(const std::string& source, const std::string& where, const Json& j) {
    if (!j.is_string()) fail(source, where, "expected a string id");
    const std::string id = j.get<std::string>();
    if (id.empty()) fail(source, where, "empty id");
    if (id.find('<') != std::string::npos)
        fail(source, where, "id '" + id + "' may not contain '<'");
    return id;
}

Rational entry_to_scalar(const std::string& source, const std::string& where,
                         const FieldSpec& field, const Json& j) {
    if (j.is_number_integer()) {
        return field_normalize(field, Rational(static_cast<long long>(j.get<std::int64_t>())));
    }
    if (j.is_string()) {
        try {
            return parse_scalar(field, j.get<std::string>());
        } catch (const input_error& e) {
            fail(source, where, e.what());
        }
    }
    fail(source, where, "matrix entries must be integers or 'a/b' strings");
}

Matrix parse_matrix(const std::string& source, const std::string& where, const FieldSpec& field,
                    const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) fail(source, where, "expected an array of rows");
    if (j.size() != rows)
        fail(source, where,
             "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            fail(source, where,
                 "row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m.set(i, k, entry_to_scalar(source, where, field, row[k]));
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& v = m.at(i, j);
            if (denominator(v) == 1 && numerator(v) >= std::numeric_limits<std::int64_t>::min() &&
                numerator(v) <= std::numeric_limits<std::int64_t>::max())
                row.push_back(static_cast<std::int64_t>(numerator(v)));
            else
                row.push_back(scalar_to_string(v));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

PosetPtr parse_poset_block(const std::string& source, const Json& j,
                           std::vector<std::string>* warnings) {
    if (!j.is_object()) fail(source, "poset", "expected an object");
    if (!j.contains("elements") || !j["elements"].is_array())
        fail(source, "poset.elements", "expected an array of ids");
    std::vector<std::string> elements;
    for (const Json& e : j["elements"]) elements.push_back(check_id(source, "poset.elements", e));
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        if (!j["covers"].is_array()) fail(source, "poset.covers", "expected an array of pairs");
        for (const Json& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2)
                fail(source, "poset.covers", "each cover is a [src, tgt] pair");
            covers.emplace_back(check_id(source, "poset.covers", c[0]),
                                check_id(source, "poset.covers", c[1]));
        }
    }
    for (const auto& key : j.items())
        if (key.key() != "elements" && key.key() != "covers")
            fail(source, "poset." + key.key(), "unknown key");
    try {
        return make_poset(std::move(elements), covers, warnings);
    } catch (const input_error& e) {
        fail(source, "poset", e.what());
    }
}

FinCategoryPtr parse_category_block(const std::string& source, const Json& j) {
    if (!j.is_object()) fail(source, "category", "expected an object");
    for (const char* key : {"objects", "morphisms", "identities", "compose"})
        if (!j.contains(key)) fail(source, std::string("category.") + key, "missing");
    std::vector<std::string> objects;
    for (const Json& o : j["objects"]) objects.push_back(check_id(source, "category.objects", o));
    auto object_index = [&](const Json& id) {
        const std::string s = check_id(source, "category", id);
        const auto it = std::find(objects.begin(), objects.end(), s);
        if (it == objects.end()) fail(source, "category", "unknown object '" + s + "'");
        return static_cast<int>(it - objects.begin());
    };
    std::vector<MorphismData> morphisms;
    for (const Json& m : j["morphisms"]) {
        if (!m.is_array() || m.size() != 3)
            fail(source, "category.morphisms", "each morphism is [id, src, tgt]");
        morphisms.push_back({check_id(source, "category.morphisms", m[0]), object_index(m[1]),
                             object_index(m[2])});
    }
    auto morphism_index = [&](const Json& id) {
        const std::string s = check_id(source, "category", id);
        for (std::size_t i = 0; i < morphisms.size(); ++i)
            if (morphisms[i].id == s) return static_cast<int>(i);
        fail(source, "category", "unknown morphism '" + s + "'");
    };
    std::vector<int> identities(objects.size(), -1);
    if (!j["identities"].is_object())
        fail(source, "category.identities", "expected an object mapping object -> morphism");
    for (const auto& item : j["identities"].items())
        identities[object_index(Json(item.key()))] = morphism_index(item.value());
    for (std::size_t o = 0; o < objects.size(); ++o)
        if (identities[o] < 0)
            fail(source, "category.identities", "missing identity for '" + objects[o] + "'");
    std::vector<std::vector<int>> table(morphisms.size(), std::vector<int>(morphisms.size(), -1));
    for (const Json& t : j["compose"]) {
        if (!t.is_array() || t.size() != 3)
            fail(source, "category.compose", "each entry is [g, f, g_after_f]");
        const int g = morphism_index(t[0]), f = morphism_index(t[1]), gf = morphism_index(t[2]);
        if (table[g][f] != -1 && table[g][f] != gf)
            fail(source, "category.compose", "conflicting entries for a pair");
        table[g][f] = gf;
    }
    try {
        return std::make_shared<FinCategory>(std::move(objects), std::move(morphisms),
                                             std::move(identities), std::move(table));
    } catch (const input_error& e) {
        fail(source, "category", e.what());
    }
}

PersistenceModule parse_module_block(const std::string& source, const Json& j,
                                     const ModuleIndex& index) {
    if (!j.is_object()) fail(source, "module", "expected an object");
    if (!j.contains("field") || !j["field"].is_string())
        fail(source, "module.field", "expected 'rational' or 'gf:<p>'");
    FieldSpec field;
    try {
        field = parse_field_spec(j["field"].get<std::string>());
    } catch (const input_error& e) {
        fail(source, "module.field", e.what());
    }
    if (!j.contains("dims") || !j["dims"].is_object())
        fail(source, "module.dims", "expected an object mapping element -> dimension");
    std::vector<std::size_t> dims(index.object_count(), 0);
    std::vector<bool> seen(index.object_count(), false);
    for (const auto& item : j["dims"].items()) {
        int oi;
        try {
            oi = index.object_index(item.key());
        } catch (const input_error& e) {
            fail(source, "module.dims", e.what());
        }
        if (!item.value().is_number_integer() || item.value().get<std::int64_t>() < 0)
            fail(source, "module.dims", "dimension of '" + item.key() +
                                             "' must be a nonnegative integer");
        dims[oi] = static_cast<std::size_t>(item.value().get<std::int64_t>());
        seen[oi] = true;
    }
    for (std::size_t o = 0; o < index.object_count(); ++o)
        if (!seen[o])
            fail(source, "module.dims", "missing dimension for '" + index.object_id(static_cast<int>(o)) + "'");

    const auto generators = index.generators();
    if (!j.contains("maps") || !j["maps"].is_object())
        fail(source, "module.maps", "expected an object keyed by generating morphism");
    std::vector<Matrix> maps;
    std::size_t used = 0;
    for (const auto& gen : generators) {
        const std::string key =
            index.is_poset() ? index.object_id(gen.src) + "<" + index.object_id(gen.tgt)
                             : gen.label;
        if (!j["maps"].contains(key))
            fail(source, "module.maps", "missing map '" + key + "'");
        maps.push_back(parse_matrix(source, "module.maps." + key, field, j["maps"][key],
                                    dims[gen.tgt], dims[gen.src]));
        ++used;
    }
    if (j["maps"].size() != used)
        for (const auto& item : j["maps"].items()) {
            bool known = false;
            for (const auto& gen : generators) {
                const std::string key =
                    index.is_poset() ? index.object_id(gen.src) + "<" + index.object_id(gen.tgt)
                                     : gen.label;
                if (key == item.key()) known = true;
            }
            if (!known)
                fail(source, "module.maps",
                     "'" + item.key() + "' is not a generating morphism (covers only)");
        }
    try {
        return PersistenceModule(index, field, std::move(dims), std::move(maps));
    } catch (const input_error& e) {
        fail(source, "module", e.what());
    }
}

SubposetEmbedding parse_embedding_block(const std::string& source, const Json& j,
                                        const PosetPtr& ambient) {
    if (!j.is_object()) fail(source, "embedding", "expected an object");
    if (!j.contains("carrier") || !j["carrier"].is_array())
        fail(source, "embedding.carrier", "expected an array of ids");
    std::vector<int> carrier;
    for (const Json& e : j["carrier"]) {
        const std::string id = check_id(source, "embedding.carrier", e);
        try {
            carrier.push_back(ambient->index_of(id));
        } catch (const input_error& err) {
            fail(source, "embedding.carrier", err.what());
        }
    }
    const bool has_relations = j.contains("relations");
    bool full = !has_relations;
    if (j.contains("full")) {
        if (!j["full"].is_boolean()) fail(source, "embedding.full", "expected a boolean");
        full = j["full"].get<bool>();
    }
    try {
        if (full) {
            if (has_relations)
                fail(source, "embedding", "a full embedding does not take explicit relations");
            return SubposetEmbedding::full(ambient, carrier);
        }
        std::vector<std::pair<int, int>> relations;
        if (has_relations) {
            if (!j["relations"].is_array())
                fail(source, "embedding.relations", "expected an array of pairs");
            for (const Json& r : j["relations"]) {
                if (!r.is_array() || r.size() != 2)
                    fail(source, "embedding.relations", "each relation is a [src, tgt] pair");
                relations.emplace_back(
                    ambient->index_of(check_id(source, "embedding.relations", r[0])),
                    ambient->index_of(check_id(source, "embedding.relations", r[1])));
            }
        }
        return SubposetEmbedding::with_relations(ambient, carrier, relations);
    } catch (const input_error& e) {
        fail(source, "embedding", e.what());
    }
}

} // namespace

ModuleIndex Workspace::index() const {
    if (poset) return ModuleIndex(*poset);
    if (category) return ModuleIndex(*category);
    throw input_error("workspace has neither a poset nor a category block");
}

Workspace parse_workspace(const std::string& text, const std::string& source_name) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(source_name + ":" + std::to_string(line_of_byte(text, e.byte)) +
                          ": " + e.what());
    }
    if (!j.is_object()) throw input_error(source_name + ": top level must be an object");
    for (const auto& item : j.items())
        if (item.key() != "poset" && item.key() != "category" && item.key() != "module" &&
            item.key() != "embedding")
            throw input_error(source_name + ": unknown block '" + item.key() + "'");

    Workspace w;
    if (j.contains("poset")) w.poset = parse_poset_block(source_name, j["poset"], &w.warnings);
    if (j.contains("category")) w.category = parse_category_block(source_name, j["category"]);
    if (!w.poset && !w.category)
        throw input_error(source_name + ": a poset or category block is required");
    if (j.contains("module")) w.module = parse_module_block(source_name, j["module"], w.index());
    if (j.contains("embedding")) {
        if (!w.poset)
            throw input_error(source_name + ": an embedding block needs a poset block");
        w.embedding = parse_embedding_block(source_name, j["embedding"], *w.poset);
    }
    return w;
}

Workspace load_workspace(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_workspace(buffer.str(), path);
}

std::string emit_workspace(const Workspace& w) {
    Json j = Json::object();
    if (w.poset) {
        const Poset& p = **w.poset;
        Json block = Json::object();
        block["elements"] = p.elements();
        Json covers = Json::array();
        for (const auto& [a, b] : p.covers()) covers.push_back(Json::array({p.id(a), p.id(b)}));
        block["covers"] = std::move(covers);
        j["poset"] = std::move(block);
    }
    if (w.category) {
        const FinCategory& c = **w.category;
        Json block = Json::object();
        block["objects"] = c.objects();
        Json morphisms = Json::array();
        for (std::size_t m = 0; m < c.morphism_count(); ++m)
            morphisms.push_back(Json::array({c.morphism(static_cast<int>(m)).id,
                                             c.object_id(c.morphism(static_cast<int>(m)).src),
                                             c.object_id(c.morphism(static_cast<int>(m)).tgt)}));
        block["morphisms"] = std::move(morphisms);
        Json identities = Json::object();
        for (std::size_t o = 0; o < c.object_count(); ++o)
            identities[c.object_id(static_cast<int>(o))] =
                c.morphism(c.identity_of(static_cast<int>(o))).id;
        block["identities"] = std::move(identities);
        Json compose = Json::array();
        for (std::size_t g = 0; g < c.morphism_count(); ++g)
            for (std::size_t f = 0; f < c.morphism_count(); ++f) {
                if (c.morphism(static_cast<int>(f)).tgt != c.morphism(static_cast<int>(g)).src)
                    continue;
                compose.push_back(Json::array(
                    {c.morphism(static_cast<int>(g)).id, c.morphism(static_cast<int>(f)).id,
                     c.morphism(c.compose(static_cast<int>(g), static_cast<int>(f))).id}));
            }
        block["compose"] = std::move(compose);
        j["category"] = std::move(block);
    }
    if (w.module) {
        const PersistenceModule& m = *w.module;
        Json block = Json::object();
        block["field"] = m.field().name();
        Json dims = Json::object();
        for (std::size_t o = 0; o < m.dims().size(); ++o)
            dims[m.index().object_id(static_cast<int>(o))] = m.dims()[o];
        block["dims"] = std::move(dims);
        Json maps = Json::object();
        for (std::size_t g = 0; g < m.generators().size(); ++g) {
            const auto& gen = m.generators()[g];
            const std::string key = m.index().is_poset()
                                        ? m.index().object_id(gen.src) + "<" +
                                              m.index().object_id(gen.tgt)
                                        : gen.label;
            maps[key] = matrix_to_json(m.generator_map(g));
        }
        block["maps"] = std::move(maps);
        j["module"] = std::move(block);
    }
    if (w.embedding) {
        const SubposetEmbedding& e = *w.embedding;
        Json block = Json::object();
        Json carrier = Json::array();
        for (int x : e.carrier()) carrier.push_back(e.ambient()->id(x));
        block["carrier"] = std::move(carrier);
        if (e.is_full()) {
            block["full"] = true;
        } else {
            Json relations = Json::array();
            const Poset& sub = *e.sub_poset();
            for (const auto& [a, b] : sub.covers())
                relations.push_back(Json::array({sub.id(a), sub.id(b)}));
            block["relations"] = std::move(relations);
            block["full"] = false;
        }
        j["embedding"] = std::move(block);
    }
    return j.dump(2) + "\n";
}

void save_workspace(const Workspace& w, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << emit_workspace(w);
}

} // namespace grinv
