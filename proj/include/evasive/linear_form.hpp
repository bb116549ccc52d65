#pragma once

// Integer linear forms in catalog indicators with an equality or a
// congruence relation:
//
//   2*i2 - i24 + i135 - 2*i1235 = 1
//   i5 + i1234 ≡ 1 (mod 2)
//
// Grammar accepted by parse_form:
//
//   form     := side rel side [ "(mod" INT ")" ]
//   rel      := "=" | "==" | "≡"
//   side     := [sign] term { sign term }
//   term     := INT [ "*" ] var | var | INT
//   var      := "i" [ "_" ] name          name: digits, P, Pbar, empty, complete
//
// Variables may appear on both sides; parsing moves them left and
// constants right. A "(mod q)" suffix makes the relation a congruence
// whichever relation symbol is used. Printing always emits the canonical
// form (catalog order, constants on the right, ≡ for congruences).

#include <cctype>
#include <concepts>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "class_id.hpp"

namespace evasive {

struct FormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Relation {
    enum class Kind { equals, congruent };
    Kind kind = Kind::equals;
    std::int64_t rhs = 0;
    std::int64_t modulus = 0;  // congruences only

    static Relation equals(std::int64_t k) { return {Kind::equals, k, 0}; }
    static Relation congruent(std::int64_t k, std::int64_t q) {
        if (q < 2) throw FormError("congruence modulus must be at least 2");
        return {Kind::congruent, k, q};
    }
    bool is_congruence() const { return kind == Kind::congruent; }
    friend bool operator==(const Relation&, const Relation&) = default;
};

inline std::int64_t mod_floor(std::int64_t a, std::int64_t q) {
    const std::int64_t r = a % q;
    return r < 0 ? r + q : r;
}

class LinearForm {
public:
    using Coefficients = std::map<ClassId, std::int64_t, ClassIdLess>;

    LinearForm() = default;
    LinearForm(Coefficients coeffs, Relation rel) : coeffs_(std::move(coeffs)), rel_(rel) { normalize(); }

    const Coefficients& coefficients() const { return coeffs_; }
    const Relation& relation() const { return rel_; }
    std::int64_t rhs() const { return rel_.rhs; }
    bool is_congruence() const { return rel_.is_congruence(); }

    std::int64_t coefficient(const ClassId& id) const {
        auto it = coeffs_.find(id);
        return it == coeffs_.end() ? 0 : it->second;
    }

    // All coefficients vanish.
    bool is_degenerate() const { return coeffs_.empty(); }

    // Replaces variables by fixed values, moving their contribution right.
    LinearForm substitute(const std::map<ClassId, int>& values) const {
        Coefficients c;
        Relation r = rel_;
        for (const auto& [id, a] : coeffs_) {
            auto it = values.find(id);
            if (it == values.end()) c.emplace(id, a);
            else r.rhs -= a * it->second;
        }
        return LinearForm(std::move(c), r);
    }

    // Renames variable `from` to `to`, merging coefficients.
    LinearForm merge_variable(const ClassId& from, const ClassId& to) const {
        Coefficients c = coeffs_;
        auto it = c.find(from);
        if (it == c.end()) return *this;
        const auto a = it->second;
        c.erase(it);
        c[to] += a;
        return LinearForm(std::move(c), rel_);
    }

    template <class Lookup>
        requires std::invocable<Lookup&, const ClassId&>
    std::int64_t lhs_value(Lookup&& value_of) const {
        std::int64_t s = 0;
        for (const auto& [id, a] : coeffs_) s += a * value_of(id);
        return s;
    }

    template <class Lookup>
        requires std::invocable<Lookup&, const ClassId&>
    bool satisfied_by(Lookup&& value_of) const {
        const auto s = lhs_value(value_of);
        if (rel_.is_congruence()) return mod_floor(s - rel_.rhs, rel_.modulus) == 0;
        return s == rel_.rhs;
    }

    bool satisfied_by(const std::map<ClassId, int>& values) const {
        return satisfied_by([&](const ClassId& id) {
            auto it = values.find(id);
            if (it == values.end()) throw FormError("no value for i" + id);
            return static_cast<std::int64_t>(it->second);
        });
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [id, a] : coeffs_) {
            const std::int64_t mag = a < 0 ? -a : a;
            if (s.empty()) s += a < 0 ? "-" : "";
            else s += a < 0 ? " - " : " + ";
            if (mag != 1) s += std::to_string(mag) + "*";
            s += "i" + id;
        }
        if (s.empty()) s = "0";
        if (rel_.is_congruence())
            return s + " ≡ " + std::to_string(rel_.rhs) + " (mod " + std::to_string(rel_.modulus) + ")";
        return s + " = " + std::to_string(rel_.rhs);
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.to_string() < b.to_string(); }

private:
    void normalize() {
        if (rel_.is_congruence()) {
            for (auto& [id, a] : coeffs_) a = mod_floor(a, rel_.modulus);
            rel_.rhs = mod_floor(rel_.rhs, rel_.modulus);
        }
        std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
    }

    Coefficients coeffs_;
    Relation rel_;
};

// Same solution set up to a nonzero rational scale (equalities), or the
// same canonical congruence.
inline bool equivalent(const LinearForm& a, const LinearForm& b) {
    if (a.relation().kind != b.relation().kind) return false;
    if (a.is_congruence()) return a == b;
    if (a.coefficients().size() != b.coefficients().size()) return false;
    if (a.is_degenerate()) return (a.rhs() == 0) == (b.rhs() == 0);
    // a = lambda * b with lambda = sa / sb
    const auto& [id0, a0] = *a.coefficients().begin();
    const std::int64_t b0 = b.coefficient(id0);
    if (b0 == 0) return false;
    for (const auto& [id, ca] : a.coefficients())
        if (ca * b0 != b.coefficient(id) * a0) return false;
    return a.rhs() * b0 == b.rhs() * a0;
}

namespace detail {

class FormParser {
public:
    explicit FormParser(std::string_view text) : s_(text) {}

    LinearForm parse() {
        LinearForm::Coefficients coeffs;
        std::int64_t constant = 0;  // left side minus right side
        side(coeffs, constant, +1);
        ws();
        bool congruent = false;
        if (eat("≡")) congruent = true;
        else if (eat("==")) {
        } else if (eat("=")) {
        } else fail("expected a relation symbol");
        side(coeffs, constant, -1);
        ws();
        std::int64_t q = 0;
        if (eat("(")) {
            ws();
            if (!eat("mod")) fail("expected 'mod'");
            ws();
            q = integer();
            ws();
            if (!eat(")")) fail("expected ')'");
            congruent = true;
        } else if (congruent) {
            fail("congruence needs a (mod q) suffix");
        }
        ws();
        if (pos_ != s_.size()) fail("trailing characters");
        const Relation rel = congruent ? Relation::congruent(-constant, q) : Relation::equals(-constant);
        return LinearForm(std::move(coeffs), rel);
    }

private:
    void side(LinearForm::Coefficients& coeffs, std::int64_t& constant, int sign) {
        ws();
        bool first = true;
        for (;;) {
            ws();
            int term_sign = 1;
            if (eat("+")) {
            } else if (eat("-")) {
                term_sign = -1;
            } else if (!first) {
                return;
            }
            ws();
            std::int64_t mag = 1;
            bool has_number = false;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                mag = integer();
                has_number = true;
                ws();
                if (eat("*")) ws();
            }
            if (pos_ < s_.size() && s_[pos_] == 'i') {
                ++pos_;
                eat("_");
                const auto id = name();
                if (!is_known_class_id(id)) fail("unknown indicator i" + id);
                coeffs[id] += sign * term_sign * mag;
            } else if (has_number) {
                constant += sign * term_sign * mag;
            } else {
                fail("expected a term");
            }
            first = false;
        }
    }

    std::string name() {
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected an indicator name");
        return std::string(s_.substr(b, pos_ - b));
    }

    std::int64_t integer() {
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected an integer");
        if (pos_ - b > 15) fail("integer too large");
        return std::stoll(std::string(s_.substr(b, pos_ - b)));
    }

    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(std::string_view tok) {
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw FormError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LinearForm parse_form(std::string_view text) { return detail::FormParser(text).parse(); }

}  // namespace evasive
