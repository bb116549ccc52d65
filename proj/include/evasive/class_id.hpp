#pragma once

// Catalog class identifiers and their canonical order.
//
// Circulant classes are named by the digits of a connection set ("124").
// The canonical order lists those by digit count then lexicographically,
// followed by "P", "Pbar", "empty", "complete". For n = 10 this is the row
// order of the six-column indicator table.

#include <algorithm>
#include <string>
#include <tuple>

namespace evasive {

using ClassId = std::string;

inline bool is_digit_id(const ClassId& id) {
    return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline std::tuple<int, std::size_t, std::string> class_id_key(const ClassId& id) {
    if (is_digit_id(id)) return {0, id.size(), id};
    if (id == "P") return {1, 0, id};
    if (id == "Pbar") return {2, 0, id};
    if (id == "empty") return {3, 0, id};
    if (id == "complete") return {4, 0, id};
    return {5, 0, id};
}

struct ClassIdLess {
    bool operator()(const ClassId& a, const ClassId& b) const { return class_id_key(a) < class_id_key(b); }
};

inline bool is_known_class_id(const ClassId& id) { return std::get<0>(class_id_key(id)) < 5; }

}  // namespace evasive
