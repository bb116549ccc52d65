#pragma once

// Turns Oliver chains into indicator constraints: one Euler form per
// distinct (group, relation), then deduplication and rank filtering.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catalog.hpp"
#include "oliver.hpp"
#include "orbits.hpp"
#include "rank_filter.hpp"

namespace evasive {

// Memoizes Catalog::identify by edge mask. Searches revisit the same
// orbit unions many times.
class CachedIdentifier {
public:
    explicit CachedIdentifier(const Catalog& cat) : cat_(&cat) {}

    std::optional<ClassId> operator()(const Graph& g) {
        auto [it, fresh] = memo_.try_emplace(g.mask());
        if (fresh) it->second = cat_->identify(g);
        return it->second;
    }

private:
    const Catalog* cat_;
    std::unordered_map<std::uint64_t, std::optional<ClassId>> memo_;
};

enum class FormStatus { ok, degenerate, unidentified, too_many_orbits };

inline std::string to_string(FormStatus s) {
    switch (s) {
        case FormStatus::ok: return "ok";
        case FormStatus::degenerate: return "degenerate";
        case FormStatus::unidentified: return "unidentified";
        case FormStatus::too_many_orbits: return "too-many-orbits";
    }
    return "?";
}

struct ChainRecord {
    OliverChain chain;
    FormStatus status = FormStatus::ok;
    std::optional<LinearForm> form;
};

struct FormLibrary {
    std::vector<ChainRecord> records;
    std::vector<LinearForm> forms;  // distinct usable forms, first-seen order
    RankFilterResult filtered;
};

inline FormLibrary derive_forms(const std::vector<OliverChain>& chains, const Catalog& cat) {
    CachedIdentifier identify(cat);
    struct Expanded {
        FormStatus status;
        LinearForm base;  // relation Equals(1)
    };
    std::map<const PermGroup*, Expanded> by_group;
    FormLibrary lib;
    for (const auto& c : chains) {
        auto it = by_group.find(c.gamma.get());
        if (it == by_group.end()) {
            Expanded e{FormStatus::ok, {}};
            if (edge_orbits(*c.gamma).orbits.size() > max_orbits_for_expansion) {
                e.status = FormStatus::too_many_orbits;
            } else {
                try {
                    e.base = euler_form_with(*c.gamma, identify, Relation::equals(1)).form;
                } catch (const OrbitError&) {
                    e.status = FormStatus::unidentified;
                }
            }
            it = by_group.emplace(c.gamma.get(), std::move(e)).first;
        }
        ChainRecord rec{c, it->second.status, std::nullopt};
        if (rec.status == FormStatus::ok) {
            // base has rhs 1 - (forced contributions); carry that shift over
            const auto& base = it->second.base;
            Relation r = c.relation;
            r.rhs = c.relation.rhs - (1 - base.rhs());
            LinearForm f(base.coefficients(), r);
            if (f.is_degenerate()) {
                rec.status = FormStatus::degenerate;
            } else {
                if (std::find(lib.forms.begin(), lib.forms.end(), f) == lib.forms.end()) lib.forms.push_back(f);
                rec.form = std::move(f);
            }
        }
        lib.records.push_back(std::move(rec));
    }
    lib.filtered = rank_filter(lib.forms);
    return lib;
}

}  // namespace evasive
