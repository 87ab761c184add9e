#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"
#include "bmweights/galois.hpp"
#include "bmweights/jh.hpp"
#include "bmweights/types.hpp"
#include "bmweights/weights.hpp"

/* Text forms of the core objects, used by the CLI and the serializers.
 *
 *   type:    "ps:a,b"            principal series / scalar (a = b)
 *            "cusp:c"            cuspidal, c the orbit representative
 *   weight:  "w:s0,...,s_{f-1};c"
 *   datum:   "n1:sub,quot,flag"  flag in {peu, tres, na}
 *
 * Formatting always emits the canonical form (ordered pair, orbit
 * representative, reduced exponents); parsing accepts any integers and
 * canonicalizes.  Parse errors carry the byte offset of the failure.
 */

namespace bmweights {

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    void expect(char c) {
        if (done() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    bool try_literal(std::string_view lit) {
        if (text.substr(pos, lit.size()) != lit) return false;
        pos += lit.size();
        return true;
    }

    long long integer() {
        long long v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc())
            fail("expected an integer");
        pos += static_cast<std::size_t>(ptr - first);
        return v;
    }

    void end() {
        if (!done()) fail("trailing characters");
    }
};

}  // namespace detail

inline TameType parse_type_spec(const FieldDatum& fd, std::string_view spec) {
    detail::Cursor c{spec};
    if (c.try_literal("ps:")) {
        long long a = c.integer();
        c.expect(',');
        long long b = c.integer();
        c.end();
        return make_principal_series(fd, fd.reduce(a, 1), fd.reduce(b, 1));
    }
    if (c.try_literal("cusp:")) {
        long long v = c.integer();
        c.end();
        return make_cuspidal(fd, fd.reduce(v, 2));
    }
    c.fail("expected 'ps:' or 'cusp:'");
}

inline std::string format_type_spec(const TameType& t) {
    if (t.is_cuspidal()) return "cusp:" + std::to_string(t.eta.value);
    return "ps:" + std::to_string(t.eta.value) + "," + std::to_string(t.eta_prime.value);
}

inline SerreWeight parse_weight_spec(const FieldDatum& fd, std::string_view spec) {
    detail::Cursor c{spec};
    if (!c.try_literal("w:")) c.fail("expected 'w:'");
    DigitVector s;
    std::vector<std::size_t> digit_pos;
    digit_pos.push_back(c.pos);
    s.push_back(static_cast<int>(c.integer()));
    while (!c.done() && c.text[c.pos] == ',') {
        ++c.pos;
        digit_pos.push_back(c.pos);
        s.push_back(static_cast<int>(c.integer()));
    }
    c.expect(';');
    long long tw = c.integer();
    c.end();
    if (static_cast<int>(s.size()) != fd.f)
        throw ParseError("weight needs exactly f s-digits", 2);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (s[j] < 0 || s[j] >= fd.p)
            throw ParseError("s-digit out of [0, p-1]", digit_pos[j]);
    SerreWeight w;
    w.s = s;
    w.twist = fd.reduce(tw, 1);
    return w;
}

inline std::string format_weight_spec(const SerreWeight& w) {
    std::string out = "w:";
    for (std::size_t j = 0; j < w.s.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(w.s[j]);
    }
    out += ';';
    out += std::to_string(w.twist.value);
    return out;
}

inline InertialDatum parse_datum_spec(const FieldDatum& fd, std::string_view spec) {
    detail::Cursor c{spec};
    if (!c.try_literal("n1:")) c.fail("expected 'n1:'");
    long long sub = c.integer();
    c.expect(',');
    long long quot = c.integer();
    c.expect(',');
    RamFlag flag;
    if (c.try_literal("peu")) flag = RamFlag::Peu;
    else if (c.try_literal("tres")) flag = RamFlag::Tres;
    else if (c.try_literal("na")) flag = RamFlag::NotApplicable;
    else c.fail("expected 'peu', 'tres' or 'na'");
    c.end();
    return make_datum(fd, fd.reduce(sub, 1), fd.reduce(quot, 1), flag);
}

inline std::string format_datum_spec(const InertialDatum& d) {
    std::string flag;
    switch (d.ram_flag) {
        case RamFlag::Peu: flag = "peu"; break;
        case RamFlag::Tres: flag = "tres"; break;
        case RamFlag::NotApplicable: flag = "na"; break;
    }
    return "n1:" + std::to_string(d.sub_exp.value) + "," + std::to_string(d.quot_exp.value) +
           "," + flag;
}

inline std::string format_shape(const Shape& J) {
    std::string out = "{";
    bool first = true;
    for (int i : J.members()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(i);
    }
    out += '}';
    return out;
}

}  // namespace bmweights
