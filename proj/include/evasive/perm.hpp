#pragma once

// Permutations on points 1..n and small, fully enumerated permutation groups.
//
// Points are 1-based in all text formats and 0-based internally. Products
// are read left to right: (a * b)(x) = b(a(x)), so "(1 2)(2 3)" applies
// (1 2) first.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace evasive {

struct PermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int degree) {
        if (degree <= 0 || degree > 255) throw PermError("degree must be in 1..255");
        Permutation p;
        p.images_.resize(static_cast<std::size_t>(degree));
        std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
        return p;
    }

    // 0-based image list; must be a bijection.
    static Permutation from_images(std::vector<std::uint8_t> images) {
        std::vector<bool> seen(images.size(), false);
        for (auto v : images) {
            if (v >= images.size() || seen[v]) throw PermError("image list is not a bijection");
            seen[v] = true;
        }
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::vector<std::uint8_t>& images() const { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Permutation operator*(const Permutation& rhs) const {
        if (degree() != rhs.degree()) throw PermError("degree mismatch in product");
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    // g * this * g^-1 in the left-to-right convention
    Permutation conjugate_by(const Permutation& g) const { return g * (*this) * g.inverse(); }

    std::uint64_t order() const {
        std::uint64_t l = 1;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (std::size_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                ++len;
            }
            l = std::lcm(l, len);
        }
        return l;
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i] || images_[i] == i) continue;
            std::vector<int> cyc;
            for (std::size_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                cyc.push_back(static_cast<int>(j) + 1);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    // Disjoint cycle notation, 1-based, smallest point first in each cycle.
    std::string to_string() const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::string s;
        for (const auto& c : cs) {
            s += '(';
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (k) s += ' ';
                s += std::to_string(c[k]);
            }
            s += ')';
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : p.images()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Parses "(1 3 5)(2 4)" style cycle notation. Cycles must be disjoint;
// "()" is the identity and absent points are fixed.
inline Permutation parse_cycles(std::string_view text, int degree) {
    auto p = Permutation::identity(degree);
    std::vector<std::uint8_t> img = p.images();
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw PermError("empty cycle expression");
    while (i < text.size()) {
        if (text[i] != '(') throw PermError("expected '(' in cycle expression: " + std::string(text));
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i == text.size()) throw PermError("unterminated cycle in: " + std::string(text));
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw PermError("unexpected character in cycle expression: " + std::string(text));
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000) throw PermError("point out of range");
                ++i;
            }
            if (v < 1 || v > degree) throw PermError("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(v - 1)]) throw PermError("point " + std::to_string(v) + " repeated");
            used[static_cast<std::size_t>(v - 1)] = true;
            cyc.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k)
            img[static_cast<std::size_t>(cyc[k])] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
        skip_ws();
    }
    return Permutation::from_images(std::move(img));
}

inline constexpr std::size_t default_closure_cap = 1'000'000;

// A finite permutation group stored as its full, sorted element list.
class PermGroup {
public:
    PermGroup() = default;

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    bool contains(const Permutation& p) const { return index_.count(p) != 0; }
    std::size_t index_of(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw PermError("element not in group: " + p.to_string());
        return it->second;
    }

    bool is_subgroup_of(const PermGroup& other) const {
        if (degree_ != other.degree_ || order() > other.order() || other.order() % order() != 0) return false;
        return std::all_of(elements_.begin(), elements_.end(), [&](const auto& e) { return other.contains(e); });
    }

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

    std::vector<std::string> generator_strings() const {
        std::vector<std::string> out;
        for (const auto& g : generators_) out.push_back(g.to_string());
        return out;
    }

    // Builds a group from an element list already known to be closed.
    // Generators are chosen greedily in element order.
    static PermGroup from_closed_set(int degree, std::vector<Permutation> elements);

    friend PermGroup closure(int degree, const std::vector<Permutation>& generators, std::size_t cap);

private:
    void build_index() {
        std::sort(elements_.begin(), elements_.end());
        index_.clear();
        index_.reserve(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    }

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

inline PermGroup closure(int degree, const std::vector<Permutation>& generators,
                         std::size_t cap = default_closure_cap) {
    for (const auto& g : generators)
        if (g.degree() != degree) throw PermError("generator degree mismatch");
    PermGroup G;
    G.degree_ = degree;
    G.generators_ = generators;

    std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
    std::vector<Permutation> elems{Permutation::identity(degree)};
    seen.emplace(elems.front(), 0);
    // Right-multiplying by generators reaches every word; finiteness makes
    // inverses automatic.
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : G.generators_) {
            auto y = elems[head] * g;
            if (seen.emplace(y, elems.size()).second) {
                elems.push_back(std::move(y));
                if (elems.size() > cap)
                    throw PermError("closure exceeds cap of " + std::to_string(cap) + " elements");
            }
        }
    }
    G.elements_ = std::move(elems);
    G.build_index();
    return G;
}

inline PermGroup closure_of_strings(int degree, const std::vector<std::string>& cycle_strings,
                                    std::size_t cap = default_closure_cap) {
    std::vector<Permutation> gens;
    for (const auto& s : cycle_strings) gens.push_back(parse_cycles(s, degree));
    return closure(degree, gens, cap);
}

inline PermGroup trivial_group(int degree) { return closure(degree, {}); }

inline PermGroup PermGroup::from_closed_set(int degree, std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    std::vector<Permutation> gens;
    PermGroup current = trivial_group(degree);
    for (const auto& e : elements) {
        if (current.contains(e)) continue;
        gens.push_back(e);
        current = closure(degree, gens, elements.size());
    }
    if (current.elements_ != elements) throw PermError("element set is not a group");
    return current;
}

// Conjugation is an automorphism, so g N g^-1 = N for all g in the ambient
// group as soon as it holds for generators g of the ambient group and
// generators s of N: g<s_i>g^-1 = <g s_i g^-1>, and the set of g fixing a
// finite N under conjugation is closed under products.
inline bool is_normal(const PermGroup& sub, const PermGroup& amb) {
    if (!sub.is_subgroup_of(amb)) throw PermError("not a subgroup of the ambient group");
    for (const auto& g : amb.generators())
        for (const auto& s : sub.generators())
            if (!sub.contains(s.conjugate_by(g))) return false;
    return true;
}

// Abstract finite group given by a Cayley table; element 0 is the identity.
struct FiniteGroup {
    std::vector<std::vector<std::size_t>> table;
    std::size_t order() const { return table.size(); }

    std::size_t element_order(std::size_t x) const {
        std::size_t k = 1;
        for (std::size_t y = x; y != 0; y = table[y][x]) ++k;
        return k;
    }
};

struct Quotient {
    FiniteGroup group;
    std::vector<Permutation> representatives;  // least element of each coset
};

inline Quotient quotient(const PermGroup& amb, const PermGroup& nrm) {
    if (!is_normal(nrm, amb)) throw PermError("subgroup is not normal");
    const auto& els = amb.elements();
    std::vector<std::size_t> coset_of(els.size(), SIZE_MAX);
    Quotient q;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (coset_of[i] != SIZE_MAX) continue;
        const std::size_t c = q.representatives.size();
        q.representatives.push_back(els[i]);
        for (const auto& n : nrm.elements()) coset_of[amb.index_of(els[i] * n)] = c;
    }
    const std::size_t k = q.representatives.size();
    q.group.table.assign(k, std::vector<std::size_t>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            q.group.table[a][b] = coset_of[amb.index_of(q.representatives[a] * q.representatives[b])];
    return q;
}

inline bool is_cyclic(const FiniteGroup& g) {
    for (std::size_t x = 0; x < g.order(); ++x)
        if (g.element_order(x) == g.order()) return true;
    return false;
}

inline bool is_cyclic(const PermGroup& g) {
    return std::any_of(g.elements().begin(), g.elements().end(),
                       [&](const auto& e) { return e.order() == g.order(); });
}

// p == 0 marks the trivial group, which is a p-group for every prime.
struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;
    bool any_prime() const { return exponent == 0; }
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline std::optional<PrimePower> prime_power(std::uint64_t n) {
    if (n == 0) return std::nullopt;
    if (n == 1) return PrimePower{};
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (n != 1) return std::nullopt;
        return PrimePower{p, k};
    }
    return PrimePower{n, 1};
}

inline std::optional<PrimePower> prime_power_order(const PermGroup& g) { return prime_power(g.order()); }

struct HomError : PermError {
    using PermError::PermError;
};

// Homomorphism onto (a subgroup of) Z_m, defined by generator images.
class CyclicHom {
public:
    const PermGroup& source() const { return source_; }
    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::uint64_t>& generator_images() const { return generator_images_; }
    const std::vector<std::uint64_t>& element_images() const { return element_images_; }

    std::uint64_t operator()(const Permutation& p) const { return element_images_[source_.index_of(p)]; }

    std::size_t image_size() const {
        std::vector<bool> hit(modulus_, false);
        for (auto v : element_images_) hit[v] = true;
        return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
    }

    bool is_surjective() const { return image_size() == modulus_; }

    friend CyclicHom make_hom(const PermGroup& source, std::uint64_t modulus,
                              const std::vector<std::uint64_t>& generator_images, bool require_surjective);

private:
    PermGroup source_;
    std::uint64_t modulus_ = 1;
    std::vector<std::uint64_t> generator_images_;
    std::vector<std::uint64_t> element_images_;
};

// Extends generator images breadth-first over the right Cayley graph and
// checks every edge x -> x*g for consistency, which is exactly the
// homomorphism condition on a generating set.
inline CyclicHom make_hom(const PermGroup& source, std::uint64_t modulus,
                          const std::vector<std::uint64_t>& generator_images,
                          bool require_surjective = false) {
    if (modulus == 0) throw HomError("modulus must be positive");
    if (generator_images.size() != source.generators().size())
        throw HomError("need one image per generator (" + std::to_string(source.generators().size()) + ")");
    CyclicHom h;
    h.source_ = source;
    h.modulus_ = modulus;
    for (auto v : generator_images) h.generator_images_.push_back(v % modulus);

    constexpr std::uint64_t unset = UINT64_MAX;
    const auto& els = source.elements();
    h.element_images_.assign(els.size(), unset);
    std::deque<std::size_t> queue{source.index_of(Permutation::identity(source.degree()))};
    h.element_images_[queue.front()] = 0;
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < source.generators().size(); ++k) {
            const std::size_t y = source.index_of(els[x] * source.generators()[k]);
            const std::uint64_t img = (h.element_images_[x] + h.generator_images_[k]) % modulus;
            if (h.element_images_[y] == unset) {
                h.element_images_[y] = img;
                queue.push_back(y);
            } else if (h.element_images_[y] != img) {
                throw HomError("not a homomorphism: " + els[y].to_string() + " receives images " +
                               std::to_string(h.element_images_[y]) + " and " + std::to_string(img));
            }
        }
    }
    if (require_surjective && !h.is_surjective())
        throw HomError("homomorphism is not onto Z_" + std::to_string(modulus));
    return h;
}

// Convenience overload: images keyed by generator cycle strings, which
// need not be the stored generators of the source group.
inline CyclicHom make_hom(int degree, const std::vector<std::string>& generators, std::uint64_t modulus,
                          const std::vector<std::uint64_t>& images, bool require_surjective = false) {
    return make_hom(closure_of_strings(degree, generators), modulus, images, require_surjective);
}

inline PermGroup kernel(const CyclicHom& h) {
    std::vector<Permutation> ker;
    const auto& els = h.source().elements();
    for (std::size_t i = 0; i < els.size(); ++i)
        if (h.element_images()[i] == 0) ker.push_back(els[i]);
    return PermGroup::from_closed_set(h.source().degree(), std::move(ker));
}

}  // namespace evasive
