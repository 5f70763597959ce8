#ifndef MEANINEQ_REGISTRY_HPP
#define MEANINEQ_REGISTRY_HPP

#include "meanineq/kernels.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace meanineq::registry {

enum class Level { Kernel, Distribution };
enum class ClaimKind { Nonneg, Identity };

// One catalog entry: "combination >= 0 for all positive arguments" (Nonneg)
// or "combination == 0" (Identity), with paper provenance in `source`.
struct Statement {
    std::string id;
    ClaimKind kind = ClaimKind::Nonneg;
    Level level = Level::Kernel;
    kernels::Combination combo;
    std::string source;

    bool mean_only() const;
};

// The full catalog, sorted by id. Ids are frozen; additions get new ids.
const std::vector<Statement>& all_statements();

// nullptr when the id is unknown.
const Statement* find(const std::string& id);

// Deterministic JSON export: array sorted by id, UTF-8, newline-terminated.
void export_json(std::ostream& out);
void export_json_file(const std::string& path);

std::vector<Statement> import_json(std::istream& in);

} // namespace meanineq::registry

#endif
