#pragma once

#include <optional>
#include <string>

#include "grinv/persistence_module.hpp"

namespace grinv {

// One self-contained input document: a poset or category block, optionally
// a module over it and an embedding into it. JSON on disk; the emitter is
// canonical, so emitting a parsed canonical file reproduces it byte for byte.
struct Workspace {
    std::optional<PosetPtr> poset;
    std::optional<FinCategoryPtr> category;
    std::optional<PersistenceModule> module;
    std::optional<SubposetEmbedding> embedding;
    std::vector<std::string> warnings;

    ModuleIndex index() const; // poset preferred, category otherwise
};

Workspace parse_workspace(const std::string& text, const std::string& source_name = "<input>");
Workspace load_workspace(const std::string& path);
std::string emit_workspace(const Workspace& w);
void save_workspace(const Workspace& w, const std::string& path);

} // namespace grinv
